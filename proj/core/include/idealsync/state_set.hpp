#ifndef IDEALSYNC_STATE_SET_HPP
#define IDEALSYNC_STATE_SET_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "idealsync/alphabet.hpp"
#include "idealsync/errors.hpp"

namespace idealsync {

/// Subset of the states 0..universe_size()-1 of one automaton, stored as a
/// fixed-width bitset sized at creation. Hashable and totally ordered so
/// subset families can be used as map keys and sorted canonically.
class StateSet {
public:
    explicit StateSet(std::size_t universe_size)
        : n_(universe_size), blocks_((universe_size + 63) / 64, 0) {}

    static StateSet full(std::size_t universe_size) {
        StateSet s(universe_size);
        for (std::size_t q = 0; q < universe_size; ++q) s.set(static_cast<State>(q));
        return s;
    }

    static StateSet single(std::size_t universe_size, State q) {
        StateSet s(universe_size);
        s.set(q);
        return s;
    }

    std::size_t universe_size() const noexcept { return n_; }

    bool test(State q) const {
        check(q);
        return (blocks_[q >> 6] >> (q & 63)) & 1u;
    }

    void set(State q) {
        check(q);
        blocks_[q >> 6] |= std::uint64_t{1} << (q & 63);
    }

    void reset(State q) {
        check(q);
        blocks_[q >> 6] &= ~(std::uint64_t{1} << (q & 63));
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto b : blocks_) c += static_cast<std::size_t>(std::popcount(b));
        return c;
    }

    bool any() const noexcept {
        for (auto b : blocks_)
            if (b) return true;
        return false;
    }
    bool none() const noexcept { return !any(); }

    bool is_subset_of(const StateSet& other) const {
        if (n_ != other.n_) throw InputError("state sets over different universes");
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & ~other.blocks_[i]) return false;
        return true;
    }

    StateSet& operator|=(const StateSet& other) {
        if (n_ != other.n_) throw InputError("state sets over different universes");
        for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= other.blocks_[i];
        return *this;
    }

    /// Visits members in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            std::uint64_t b = blocks_[i];
            while (b) {
                const int bit = std::countr_zero(b);
                f(static_cast<State>(i * 64 + static_cast<std::size_t>(bit)));
                b &= b - 1;
            }
        }
    }

    std::vector<State> elements() const {
        std::vector<State> out;
        out.reserve(count());
        for_each([&](State q) { out.push_back(q); });
        return out;
    }

    bool operator==(const StateSet& other) const {
        return n_ == other.n_ && blocks_ == other.blocks_;
    }

    bool operator<(const StateSet& other) const {
        if (n_ != other.n_) return n_ < other.n_;
        return blocks_ < other.blocks_;
    }

    std::size_t hash() const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n_;
        for (auto b : blocks_) {
            h ^= b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

private:
    void check(State q) const {
        if (q >= n_) {
            throw InputError("state " + std::to_string(q) + " outside universe of size " +
                             std::to_string(n_));
        }
    }

    std::size_t n_;
    std::vector<std::uint64_t> blocks_;
};

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const noexcept { return s.hash(); }
};

} // namespace idealsync

#endif
