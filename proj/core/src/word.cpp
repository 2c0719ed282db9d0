#include "idealsync/word.hpp"

#include <algorithm>

#include "idealsync/errors.hpp"

namespace idealsync {

Word Word::parse(std::string_view text, const Alphabet& alphabet) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) letters.push_back(alphabet.letter_index(c));
    return Word(std::move(letters));
}

Letter Word::at(std::size_t i) const {
    if (i < 1 || i > letters_.size()) {
        throw InputError("word position " + std::to_string(i) + " outside 1.." +
                         std::to_string(letters_.size()));
    }
    return letters_[i - 1];
}

Word Word::slice(std::size_t i, std::size_t j) const {
    if (j < i) return Word();
    if (i < 1 || j > letters_.size()) {
        throw InputError("slice [" + std::to_string(i) + ".." + std::to_string(j) +
                         "] outside 1.." + std::to_string(letters_.size()));
    }
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(i - 1),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(j)));
}

Word Word::prefix(std::size_t len) const { return len == 0 ? Word() : slice(1, len); }

Word Word::suffix(std::size_t len) const {
    return len == 0 ? Word() : slice(letters_.size() - len + 1, letters_.size());
}

Word Word::appended(Letter x) const {
    std::vector<Letter> out = letters_;
    out.push_back(x);
    return Word(std::move(out));
}

Word Word::operator+(const Word& rhs) const {
    std::vector<Letter> out = letters_;
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(std::move(out));
}

std::string Word::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (Letter x : letters_) out.push_back(static_cast<char>('a' + x));
    return out;
}

std::string Word::display() const { return empty() ? "ε" : str(); }

bool length_lex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

bool is_prefix_of(const Word& u, const Word& w) {
    if (u.size() > w.size()) return false;
    return std::equal(u.letters().begin(), u.letters().end(), w.letters().begin());
}

bool is_suffix_of(const Word& u, const Word& w) {
    if (u.size() > w.size()) return false;
    return std::equal(u.letters().rbegin(), u.letters().rend(), w.letters().rbegin());
}

} // namespace idealsync
