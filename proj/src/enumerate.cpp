#include "freenij/enumerate.hpp"

#include <algorithm>

namespace freenij {

std::vector<BaseIndex> letters_up_to(const Base &base, std::uint32_t max_exp)
{
    if (base.kind() == BaseKind::trivial) return {BaseIndex{0}};
    std::vector<BaseIndex> letters;
    letters.reserve(max_exp + 1);
    for (std::uint32_t e = 0; e <= max_exp; ++e) letters.push_back(BaseIndex{e});
    return letters;
}

std::vector<TensorWord> enumerate_words(const Base &base, std::size_t max_len,
                                        std::uint32_t max_exp)
{
    const std::vector<BaseIndex> letters = letters_up_to(base, max_exp);
    std::vector<TensorWord> words;
    std::vector<BaseIndex> current;
    auto extend = [&](auto &&self, std::size_t remaining) -> void {
        if (!current.empty()) words.push_back(TensorWord(current));
        if (remaining == 0) return;
        for (BaseIndex l : letters) {
            current.push_back(l);
            self(self, remaining - 1);
            current.pop_back();
        }
    };
    extend(extend, max_len);
    std::sort(words.begin(), words.end());
    return words;
}

std::vector<TensorWord> words_of_degree(const Base &base, std::uint64_t n)
{
    std::vector<TensorWord> words;
    std::vector<BaseIndex> current;
    // degree = sum of letter degrees + (length - 1); for any fixed length
    // m in 1..n+1 the letter degrees form a composition of n - (m - 1)
    auto extend = [&](auto &&self, std::size_t slots_left, std::uint64_t budget) -> void {
        if (slots_left == 0) {
            if (budget == 0) words.push_back(TensorWord(current));
            return;
        }
        if (base.kind() == BaseKind::trivial) {
            current.push_back(BaseIndex{0});
            self(self, slots_left - 1, budget);
            current.pop_back();
            return;
        }
        for (std::uint64_t d = 0; d <= budget; ++d) {
            current.push_back(BaseIndex{static_cast<std::uint32_t>(d)});
            self(self, slots_left - 1, budget - d);
            current.pop_back();
        }
    };
    for (std::size_t m = 1; m <= n + 1; ++m) {
        extend(extend, m, n - (m - 1));
    }
    std::sort(words.begin(), words.end());
    return words;
}

} // namespace freenij
