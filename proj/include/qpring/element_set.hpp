#pragma once

// Dense bit set over the element indices 0..universe-1 of one ring.
// This is the canonical representation for every computed subset
// (units, idempotents, radicals, ...) and for commutant filters.

#include <cstdint>
#include <string>
#include <vector>

namespace qpring {

using Idx = std::uint16_t;

class ElementSet {
public:
    ElementSet() = default;

    explicit ElementSet(Idx universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static ElementSet full(Idx universe) {
        ElementSet s(universe);
        for (Idx i = 0; i < universe; ++i) s.set(i);
        return s;
    }

    Idx universe() const { return universe_; }

    bool test(Idx i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(Idx i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(Idx i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    Idx count() const {
        Idx c = 0;
        for (auto w : words_) c += static_cast<Idx>(__builtin_popcountll(w));
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool subset_of(const ElementSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    ElementSet operator&(const ElementSet& other) const {
        ElementSet r(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] = words_[i] & other.words_[i];
        return r;
    }

    ElementSet operator|(const ElementSet& other) const {
        ElementSet r(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] = words_[i] | other.words_[i];
        return r;
    }

    bool operator==(const ElementSet& other) const {
        return universe_ == other.universe_ && words_ == other.words_;
    }
    bool operator!=(const ElementSet& other) const { return !(*this == other); }

    std::vector<Idx> to_vector() const {
        std::vector<Idx> v;
        v.reserve(count());
        for (Idx i = 0; i < universe_; ++i)
            if (test(i)) v.push_back(i);
        return v;
    }

    // Renders "[0,2,5]"; ascending, no spaces, so it can be embedded in
    // whitespace-delimited report payloads.
    std::string to_string() const {
        std::string s = "[";
        bool first = true;
        for (Idx i = 0; i < universe_; ++i) {
            if (!test(i)) continue;
            if (!first) s += ',';
            s += std::to_string(i);
            first = false;
        }
        s += ']';
        return s;
    }

private:
    Idx universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace qpring
