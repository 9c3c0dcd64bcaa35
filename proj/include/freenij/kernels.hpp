#pragma once

#include <cstddef>
#include <cstdint>
#include <type_traits>
#include <vector>

#include "freenij/exec.hpp"
#include "freenij/formal_sum.hpp"

namespace freenij::kernels {

/// Below this many expansion items the parallel dispatchers take the serial
/// path; spawning threads costs more than the work saved.
inline constexpr std::size_t parallel_grain = 64;

// The *_serial functions are the reference implementations the OpenMP paths
// are tested against. Callables must be pure and must not throw on the inputs
// they are given.

/// Expand sum_{a-term, b-term} c_a c_b * product(key_a, key_b).
template <typename KA, typename KB, typename Product>
auto bilinear_expand_serial(const FormalSum<KA> &a, const FormalSum<KB> &b, Product &&product)
    -> std::invoke_result_t<Product &, const KA &, const KB &>
{
    std::invoke_result_t<Product &, const KA &, const KB &> out;
    for (const auto &[ka, ca] : a.terms()) {
        for (const auto &[kb, cb] : b.terms()) {
            out.add_scaled(product(ka, kb), ca * cb);
        }
    }
    return out;
}

/// Expand sum_{e-term} c * image(key).
template <typename KIn, typename Image>
auto linear_expand_serial(const FormalSum<KIn> &e, Image &&image)
    -> std::invoke_result_t<Image &, const KIn &>
{
    std::invoke_result_t<Image &, const KIn &> out;
    for (const auto &[k, c] : e.terms()) out.add_scaled(image(k), c);
    return out;
}

template <typename KA, typename KB, typename Product>
auto bilinear_expand_parallel(const FormalSum<KA> &a, const FormalSum<KB> &b, Product &&product)
    -> std::invoke_result_t<Product &, const KA &, const KB &>
{
    using Out = std::invoke_result_t<Product &, const KA &, const KB &>;

    std::vector<const typename FormalSum<KA>::TermMap::value_type *> ta;
    std::vector<const typename FormalSum<KB>::TermMap::value_type *> tb;
    ta.reserve(a.size());
    tb.reserve(b.size());
    for (const auto &t : a.terms()) ta.push_back(&t);
    for (const auto &t : b.terms()) tb.push_back(&t);

    const std::int64_t total = static_cast<std::int64_t>(ta.size()) * tb.size();
    Out out;
#pragma omp parallel
    {
        Out local;
#pragma omp for schedule(dynamic, 8) nowait
        for (std::int64_t idx = 0; idx < total; ++idx) {
            const auto &[ka, ca] = *ta[static_cast<std::size_t>(idx) / tb.size()];
            const auto &[kb, cb] = *tb[static_cast<std::size_t>(idx) % tb.size()];
            local.add_scaled(product(ka, kb), ca * cb);
        }
// exact rational addition commutes, so merge order cannot change the result
#pragma omp critical(freenij_bilinear_merge)
        out += local;
    }
    return out;
}

template <typename KIn, typename Image>
auto linear_expand_parallel(const FormalSum<KIn> &e, Image &&image)
    -> std::invoke_result_t<Image &, const KIn &>
{
    using Out = std::invoke_result_t<Image &, const KIn &>;

    std::vector<const typename FormalSum<KIn>::TermMap::value_type *> te;
    te.reserve(e.size());
    for (const auto &t : e.terms()) te.push_back(&t);

    const std::int64_t total = static_cast<std::int64_t>(te.size());
    Out out;
#pragma omp parallel
    {
        Out local;
#pragma omp for schedule(dynamic, 8) nowait
        for (std::int64_t idx = 0; idx < total; ++idx) {
            const auto &[k, c] = *te[static_cast<std::size_t>(idx)];
            local.add_scaled(image(k), c);
        }
#pragma omp critical(freenij_linear_merge)
        out += local;
    }
    return out;
}

template <typename KA, typename KB, typename Product>
auto bilinear_expand(const FormalSum<KA> &a, const FormalSum<KB> &b, Product &&product,
                     ExecMode mode = exec_mode())
{
    if (mode == ExecMode::parallel && a.size() * b.size() >= parallel_grain) {
        return bilinear_expand_parallel(a, b, product);
    }
    return bilinear_expand_serial(a, b, product);
}

template <typename KIn, typename Image>
auto linear_expand(const FormalSum<KIn> &e, Image &&image, ExecMode mode = exec_mode())
{
    if (mode == ExecMode::parallel && e.size() >= parallel_grain) {
        return linear_expand_parallel(e, image);
    }
    return linear_expand_serial(e, image);
}

} // namespace freenij::kernels
