#include "freenij/word.hpp"

#include "freenij/error.hpp"

namespace freenij {

TensorWord::TensorWord(std::vector<BaseIndex> letters) : letters_(std::move(letters))
{
    if (letters_.empty()) throw Error("a tensor word needs at least one letter");
}

TensorWord TensorWord::unit() { return TensorWord({BaseIndex{0}}); }

TensorWord TensorWord::all_units(std::size_t length)
{
    return TensorWord(std::vector<BaseIndex>(length, BaseIndex{0}));
}

TensorWord TensorWord::tail() const
{
    return TensorWord(std::vector<BaseIndex>(letters_.begin() + 1, letters_.end()));
}

TensorWord TensorWord::prepended(BaseIndex b) const
{
    std::vector<BaseIndex> letters;
    letters.reserve(letters_.size() + 1);
    letters.push_back(b);
    letters.insert(letters.end(), letters_.begin(), letters_.end());
    return TensorWord(std::move(letters));
}

bool TensorWord::all_letters_unit() const
{
    for (BaseIndex l : letters_) {
        if (l.exponent != 0) return false;
    }
    return true;
}

std::strong_ordering operator<=>(const TensorWord &a, const TensorWord &b)
{
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.letters_.size(); ++i) {
        // larger exponent sorts first within a length
        if (auto c = b.letters_[i].exponent <=> a.letters_[i].exponent; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

} // namespace freenij
