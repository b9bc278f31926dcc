#include "bergstab/words.hpp"

#include "bergstab/errors.hpp"

namespace bergstab {

namespace {

std::vector<Letter> reduce(std::vector<Letter> in) {
    std::vector<Letter> out;
    out.reserve(in.size());
    for (const Letter& l : in) {
        if (l.sign != 1 && l.sign != -1)
            throw ConfigError("word letter sign must be +1 or -1");
        if (l.gen < 0) throw ConfigError("word letter generator index must be >= 0");
        if (!out.empty() && out.back().inverse_of(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

} // namespace

Word::Word(std::vector<Letter> letters) : letters_(reduce(std::move(letters))) {}

Word Word::inverse() const {
    std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
    for (Letter& l : rev) l.sign = -l.sign;
    Word w;
    w.letters_ = std::move(rev); // reversal of a reduced word is reduced
    return w;
}

Word Word::operator*(const Word& rhs) const {
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(std::move(cat));
}

Word Word::append(const Letter& l) const {
    std::vector<Letter> cat = letters_;
    cat.push_back(l);
    return Word(std::move(cat));
}

bool Word::operator<(const Word& o) const {
    if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i].code() != o.letters_[i].code())
            return letters_[i].code() < o.letters_[i].code();
    }
    return false;
}

std::size_t Word::hash() const {
    std::size_t h = 14695981039346656037ull; // FNV offset basis
    for (const Letter& l : letters_) {
        h ^= static_cast<std::size_t>(l.code()) + 1;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<long long> abelianization(const Word& w, int rank) {
    std::vector<long long> sums(static_cast<std::size_t>(rank), 0);
    for (const Letter& l : w.letters()) {
        if (l.gen >= rank)
            throw ConfigError("word references generator index beyond rank");
        sums[static_cast<std::size_t>(l.gen)] += l.sign;
    }
    return sums;
}

} // namespace bergstab
