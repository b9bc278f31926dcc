#pragma once

#include <cstdint>
#include <vector>

namespace bergstab {

/// One letter of a free-group word: generator index plus exponent sign.
struct Letter {
    std::int32_t gen = 0;
    std::int32_t sign = 1; // +1 or -1

    bool inverse_of(const Letter& o) const { return gen == o.gen && sign == -o.sign; }
    bool operator==(const Letter& o) const { return gen == o.gen && sign == o.sign; }

    /// Lexicographic code: gen 0+ < gen 0- < gen 1+ < ...
    std::int32_t code() const { return 2 * gen + (sign < 0 ? 1 : 0); }
};

/// Freely reduced word over the generators.  Inputs are reduced on
/// construction, so a Word always denotes a group element, not a spelling.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    static Word generator(int gen, int sign = 1) { return Word({Letter{gen, sign}}); }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const;
    Word operator*(const Word& rhs) const; // concatenation + free reduction
    Word append(const Letter& l) const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }

    /// Order by length, then lexicographically by letter codes.
    bool operator<(const Word& o) const;

    std::size_t hash() const;

private:
    std::vector<Letter> letters_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const { return w.hash(); }
};

/// Signed exponent sums per generator.
std::vector<long long> abelianization(const Word& w, int rank);

} // namespace bergstab
