#ifndef IDEALSYNC_ALPHABET_HPP
#define IDEALSYNC_ALPHABET_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace idealsync {

/// Letter of an indexed alphabet: 0 renders as 'a', 1 as 'b', and so on.
using Letter = std::uint8_t;

/// State of an automaton; states are dense indices starting at 0.
using State = std::uint32_t;

/// Indexed alphabet of `size` letters. Letters are the indices
/// 0..size-1; rendering is the bijection i -> ('a' + i).
class Alphabet {
public:
    static constexpr std::size_t kMaxSize = 26;

    explicit Alphabet(std::size_t size);

    /// Builds from a rendered letter list, e.g. "ab" or "abc". The list
    /// must be exactly the first `size` lowercase letters in order.
    static Alphabet from_letters(std::string_view letters);

    std::size_t size() const noexcept { return size_; }
    bool contains(Letter x) const noexcept { return x < size_; }

    char letter_char(Letter x) const;
    Letter letter_index(char c) const;

    /// Rendered letter list, e.g. "ab".
    std::string letters() const;

    bool operator==(const Alphabet&) const = default;

private:
    std::size_t size_;
};

} // namespace idealsync

#endif
