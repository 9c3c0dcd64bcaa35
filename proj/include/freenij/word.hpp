#pragma once

#include <compare>
#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "freenij/base.hpp"
#include "freenij/formal_sum.hpp"

namespace freenij {

/// Pure tensor a_1 (x) ... (x) a_m of base basis letters, m >= 1.
/// Canonical order: shorter words first; within a length, letterwise with
/// larger exponents first. Immutable after construction.
class TensorWord {
  public:
    explicit TensorWord(std::vector<BaseIndex> letters);

    /// The length-1 word consisting of the base unit: 1_A.
    static TensorWord unit();

    /// The word 1_A (x) ... (x) 1_A of the given length (>= 1).
    static TensorWord all_units(std::size_t length);

    std::size_t length() const { return letters_.size(); }
    const std::vector<BaseIndex> &letters() const & { return letters_; }
    std::vector<BaseIndex> letters() && { return std::move(letters_); }
    BaseIndex head() const { return letters_.front(); }

    /// a_2 (x) ... (x) a_m; requires length() >= 2.
    TensorWord tail() const;

    /// b (x) a_1 (x) ... (x) a_m.
    TensorWord prepended(BaseIndex b) const;

    /// 1_A (x) a_1 (x) ... (x) a_m (the right-shift of a single word).
    TensorWord with_unit_prepended() const { return prepended(BaseIndex{0}); }

    bool is_unit() const { return letters_.size() == 1 && letters_[0].exponent == 0; }
    bool all_letters_unit() const;

    friend std::strong_ordering operator<=>(const TensorWord &a, const TensorWord &b);
    friend bool operator==(const TensorWord &a, const TensorWord &b)
    {
        return a.letters_ == b.letters_;
    }

  private:
    std::vector<BaseIndex> letters_;
};

using WordPair = std::pair<TensorWord, TensorWord>;
using WordTriple = std::tuple<TensorWord, TensorWord, TensorWord>;

/// Element of Sha(A) = (+)_{m>=1} A^(x)m.
using ShuffleElement = FormalSum<TensorWord>;
/// Element of Sha(A) (x) Sha(A).
using PairElement = FormalSum<WordPair>;
/// Element of Sha(A) (x) Sha(A) (x) Sha(A).
using TripleElement = FormalSum<WordTriple>;

} // namespace freenij
