#ifndef IDEALSYNC_WORD_HPP
#define IDEALSYNC_WORD_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "idealsync/alphabet.hpp"

namespace idealsync {

/// A finite word over an indexed alphabet. Positional access is 1-based:
/// at(i) is the i-th letter and slice(i, j) the factor w[i..j], so code
/// reads like the usual w[1], w[1..n-1] notation.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    /// Parses a rendered word such as "abaab". Every character must be a
    /// letter of `alphabet`; the empty string parses to the empty word.
    static Word parse(std::string_view text, const Alphabet& alphabet);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    /// 1-based letter access; requires 1 <= i <= size().
    Letter at(std::size_t i) const;

    /// The factor w[i..j], 1-based and inclusive; empty when j < i.
    Word slice(std::size_t i, std::size_t j) const;

    Word prefix(std::size_t len) const;
    Word suffix(std::size_t len) const;
    Word appended(Letter x) const;
    Word operator+(const Word& rhs) const;

    const std::vector<Letter>& letters() const noexcept { return letters_; }

    /// Rendered form, "" for the empty word.
    std::string str() const;
    /// Rendered form with the empty word shown as an epsilon.
    std::string display() const;

    auto operator<=>(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

/// Orders by length first, then lexicographically.
bool length_lex_less(const Word& a, const Word& b);

bool is_prefix_of(const Word& u, const Word& w);
bool is_suffix_of(const Word& u, const Word& w);

} // namespace idealsync

#endif
