#include "idealsync/alphabet.hpp"

#include <sstream>

#include "idealsync/errors.hpp"

namespace idealsync {

Alphabet::Alphabet(std::size_t size) : size_(size) {
    if (size == 0 || size > kMaxSize) {
        std::ostringstream msg;
        msg << "alphabet size must be in [1, " << kMaxSize << "], got " << size;
        throw InputError(msg.str());
    }
}

Alphabet Alphabet::from_letters(std::string_view letters) {
    Alphabet a(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (letters[i] != static_cast<char>('a' + i)) {
            throw InputError("alphabet letters must be 'a','b','c',... in order, got \"" +
                             std::string(letters) + "\"");
        }
    }
    return a;
}

char Alphabet::letter_char(Letter x) const {
    if (!contains(x)) {
        throw InputError("letter index " + std::to_string(x) + " outside alphabet of size " +
                         std::to_string(size_));
    }
    return static_cast<char>('a' + x);
}

Letter Alphabet::letter_index(char c) const {
    if (c < 'a' || static_cast<std::size_t>(c - 'a') >= size_) {
        throw InputError(std::string("unknown letter '") + c + "' for alphabet \"" + letters() +
                         "\"");
    }
    return static_cast<Letter>(c - 'a');
}

std::string Alphabet::letters() const {
    std::string out;
    for (std::size_t i = 0; i < size_; ++i) out.push_back(static_cast<char>('a' + i));
    return out;
}

} // namespace idealsync
