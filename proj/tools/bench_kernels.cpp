// Times the serial reference kernels against the OpenMP paths on identical
// inputs and verifies the results agree bit for bit.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include <omp.h>

#include "freenij/coalgebra.hpp"
#include "freenij/nijenhuis.hpp"
#include "freenij/word.hpp"

using namespace freenij;

namespace {

ShuffleElement random_element(std::mt19937_64 &gen, const Base &base, std::size_t terms,
                              std::size_t max_len, std::uint32_t max_exp)
{
    ShuffleElement e;
    for (std::size_t t = 0; t < terms; ++t) {
        const std::size_t len = 1 + gen() % max_len;
        std::vector<BaseIndex> letters;
        letters.reserve(len);
        for (std::size_t i = 0; i < len; ++i) {
            const std::uint32_t cap = base.kind() == BaseKind::trivial ? 0 : max_exp;
            letters.push_back(BaseIndex{static_cast<std::uint32_t>(gen() % (cap + 1))});
        }
        e.add(TensorWord(std::move(letters)), Rational(1 + static_cast<long>(gen() % 5)));
    }
    return e;
}

template <typename F>
double time_ms(F &&f)
{
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

} // namespace

int main(int argc, char **argv)
{
    std::size_t terms = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 96;
    std::size_t max_len = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 3;
    std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 1;

    const Base &base = Base::from_name("binomial");
    std::mt19937_64 gen(seed);
    const ShuffleElement a = random_element(gen, base, terms, max_len, 3);
    const ShuffleElement b = random_element(gen, base, terms, max_len, 3);

    std::printf("bench: %zu x %zu terms, max word length %zu, %d OpenMP thread(s)\n", a.size(),
                b.size(), max_len, omp_get_max_threads());

    ShuffleElement prod_serial, prod_parallel;
    const double t_mul_s =
        time_ms([&] { prod_serial = nij_mul(base, a, b, ExecMode::serial); });
    const double t_mul_p =
        time_ms([&] { prod_parallel = nij_mul(base, a, b, ExecMode::parallel); });

    PairElement cp_serial, cp_parallel;
    const double t_cp_s = time_ms([&] { cp_serial = coproduct(base, a, ExecMode::serial); });
    const double t_cp_p =
        time_ms([&] { cp_parallel = coproduct(base, a, ExecMode::parallel); });

    PairElement pm_serial, pm_parallel;
    const PairElement cpb = coproduct(base, b, ExecMode::serial);
    const double t_pm_s =
        time_ms([&] { pm_serial = pair_mul(base, cp_serial, cpb, ExecMode::serial); });
    const double t_pm_p =
        time_ms([&] { pm_parallel = pair_mul(base, cp_serial, cpb, ExecMode::parallel); });

    std::printf("%-12s %12s %12s %9s\n", "kernel", "serial (ms)", "parallel(ms)", "speedup");
    std::printf("%-12s %12.1f %12.1f %8.2fx\n", "nij_mul", t_mul_s, t_mul_p, t_mul_s / t_mul_p);
    std::printf("%-12s %12.1f %12.1f %8.2fx\n", "coproduct", t_cp_s, t_cp_p, t_cp_s / t_cp_p);
    std::printf("%-12s %12.1f %12.1f %8.2fx\n", "pair_mul", t_pm_s, t_pm_p, t_pm_s / t_pm_p);

    const bool same =
        prod_serial == prod_parallel && cp_serial == cp_parallel && pm_serial == pm_parallel;
    std::printf("results identical: %s\n", same ? "yes" : "NO");
    return same ? 0 : 1;
}
