#pragma once

// Finite general rings (associative, not necessarily unital) given by
// explicit Cayley tables over dense element indices 0..order-1.
//
// A ring is built through build_ring, which validates every axiom
// exhaustively before the object exists: abelian group under +, associative
// *, and two-sided distributivity. Nothing downstream ever rechecks these.
//
// Element-level operations here are the table lookups plus the derived
// circle composition a*b = a + b - ab, its two-sided inverse, and
// nilpotency. Everything heavier lives in subsets.hpp / classification.hpp.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpring/element_set.hpp"

namespace qpring {

// ---------------------------------------------------------------------------
// Error taxonomy for the whole toolkit. Everything derives from RingError so
// callers can catch broadly; the CLI maps these onto its exit codes.
// ---------------------------------------------------------------------------

class RingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class AxiomKind {
    AddNotAssociative,
    AddNotCommutative,
    NoAdditiveIdentity,
    MissingNegative,
    MulNotAssociative,
    DistributivityFailure,
};

inline const char* to_string(AxiomKind k) {
    switch (k) {
        case AxiomKind::AddNotAssociative: return "AddNotAssociative";
        case AxiomKind::AddNotCommutative: return "AddNotCommutative";
        case AxiomKind::NoAdditiveIdentity: return "NoAdditiveIdentity";
        case AxiomKind::MissingNegative: return "MissingNegative";
        case AxiomKind::MulNotAssociative: return "MulNotAssociative";
        case AxiomKind::DistributivityFailure: return "DistributivityFailure";
    }
    return "?";
}

// First axiom that failed during validation, with the witnessing elements.
class AxiomViolation : public RingError {
public:
    AxiomViolation(AxiomKind kind, std::array<Idx, 3> witness, const std::string& detail)
        : RingError(std::string("axiom violation [") + qpring::to_string(kind) + "] " + detail),
          kind_(kind), witness_(witness) {}

    AxiomKind kind() const { return kind_; }
    const std::array<Idx, 3>& witness() const { return witness_; }

private:
    AxiomKind kind_;
    std::array<Idx, 3> witness_;
};

// Mixing elements of two distinct ring objects.
class RingMismatch : public RingError {
public:
    RingMismatch() : RingError("elements belong to different rings") {}
};

// An operation that needs 1 was asked of a ring without one.
class RequiresUnity : public RingError {
public:
    explicit RequiresUnity(const std::string& what_op)
        : RingError("operation requires a unital ring: " + what_op) {}
};

// A construction would exceed the configured order cap.
class FeasibilityExceeded : public RingError {
public:
    FeasibilityExceeded(unsigned long long requested, unsigned long long cap)
        : RingError("resulting order " + std::to_string(requested) +
                    " exceeds the cap " + std::to_string(cap)),
          requested_(requested), cap_(cap) {}
    unsigned long long requested() const { return requested_; }
    unsigned long long cap() const { return cap_; }

private:
    unsigned long long requested_, cap_;
};

// Corner construction asked at a non-idempotent element.
class NotIdempotent : public RingError {
public:
    explicit NotIdempotent(Idx e)
        : RingError("element " + std::to_string(e) + " is not idempotent") {}
};

// A user-supplied coefficient action breaks one of the bimodule laws.
class BimoduleViolation : public RingError {
public:
    using RingError::RingError;
};

// Integer coefficient action requested where the additive exponents clash.
class CharacteristicMismatch : public RingError {
public:
    using RingError::RingError;
};

// A search whose witness is unique by theorem found a second one. This can
// only happen if a table or an algorithm is wrong, so it is always fatal.
class AmbiguousInverse : public RingError {
public:
    using RingError::RingError;
};

// A guaranteed-by-theorem verification step failed.
class InternalInvariantBroken : public RingError {
public:
    using RingError::RingError;
};

// Text input (ring expression or ring file) rejected, with byte offset.
class ParseError : public RingError {
public:
    ParseError(std::size_t position, const std::string& message)
        : RingError("parse error at offset " + std::to_string(position) + ": " + message),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// ---------------------------------------------------------------------------
// FiniteGeneralRing
// ---------------------------------------------------------------------------

class FiniteGeneralRing {
public:
    Idx order() const { return order_; }
    Idx zero() const { return zero_; }
    std::optional<Idx> unity() const { return unity_; }
    bool is_unital() const { return unity_.has_value(); }
    const std::string& name() const { return name_; }
    void rename(std::string n) { name_ = std::move(n); }

    Idx add(Idx a, Idx b) const { return add_[std::size_t(a) * order_ + b]; }
    Idx mul(Idx a, Idx b) const { return mul_[std::size_t(a) * order_ + b]; }
    Idx neg(Idx a) const { return neg_[a]; }
    Idx sub(Idx a, Idx b) const { return add(a, neg(b)); }

    // a*b = a + b - ab
    Idx circle(Idx a, Idx b) const { return sub(add(a, b), mul(a, b)); }

    // k-fold sum of a, any integer k (reduced mod the additive order of a).
    Idx int_multiple(long long k, Idx a) const {
        int t = additive_order(a);
        long long r = ((k % t) + t) % t;
        Idx acc = zero_;
        for (long long i = 0; i < r; ++i) acc = add(acc, a);
        return acc;
    }

    // a^e for e >= 1. There is no a^0 in a general ring.
    Idx power(Idx a, int e) const {
        if (e < 1) throw std::invalid_argument("power: exponent must be >= 1");
        Idx acc = a;
        for (int i = 1; i < e; ++i) acc = mul(acc, a);
        return acc;
    }

    int additive_order(Idx a) const {
        int t = 1;
        Idx x = a;
        while (x != zero_) {
            x = add(x, a);
            ++t;
        }
        return t;
    }

    // Exponent of the additive group: least m > 0 with m.x = 0 for all x.
    int additive_exponent() const {
        long long m = 1;
        for (Idx a = 0; a < order_; ++a) {
            long long t = additive_order(a);
            long long g = gcd_ll(m, t);
            m = m / g * t;
        }
        return static_cast<int>(m);
    }

    // Flat row-major tables, entry (i,j) at i*order + j.
    const std::vector<Idx>& add_table() const { return add_; }
    const std::vector<Idx>& mul_table() const { return mul_; }

private:
    static long long gcd_ll(long long a, long long b) {
        while (b) {
            long long t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    friend FiniteGeneralRing build_ring(Idx, std::vector<Idx>, std::vector<Idx>,
                                        std::optional<Idx>, std::string);

    FiniteGeneralRing() = default;

    Idx order_ = 0;
    Idx zero_ = 0;
    std::optional<Idx> unity_;
    std::string name_;
    std::vector<Idx> add_, mul_, neg_;
};

// ---------------------------------------------------------------------------
// build_ring: the only way to obtain a FiniteGeneralRing.
//
// Validates, in this order, reporting the first failure:
//   add associativity, add commutativity, additive identity (against
//   zero_hint when given), negatives, mul associativity, distributivity.
// Unity is detected, never assumed. Accepts the tables of any
// already-validated ring unchanged.
// ---------------------------------------------------------------------------

inline FiniteGeneralRing build_ring(Idx order,
                                    std::vector<Idx> add,
                                    std::vector<Idx> mul,
                                    std::optional<Idx> zero_hint = std::nullopt,
                                    std::string name = "") {
    const std::size_t n = order;
    if (n == 0) throw std::invalid_argument("build_ring: order must be positive");
    if (add.size() != n * n || mul.size() != n * n)
        throw std::invalid_argument("build_ring: table size must be order*order");
    for (Idx v : add)
        if (v >= order) throw std::invalid_argument("build_ring: add entry out of range");
    for (Idx v : mul)
        if (v >= order) throw std::invalid_argument("build_ring: mul entry out of range");
    if (zero_hint && *zero_hint >= order)
        throw std::invalid_argument("build_ring: zero_hint out of range");

    auto at = [&](const std::vector<Idx>& t, Idx i, Idx j) { return t[std::size_t(i) * n + j]; };

    for (Idx a = 0; a < order; ++a)
        for (Idx b = 0; b < order; ++b)
            for (Idx c = 0; c < order; ++c)
                if (at(add, at(add, a, b), c) != at(add, a, at(add, b, c)))
                    throw AxiomViolation(AxiomKind::AddNotAssociative, {a, b, c},
                                         "(a+b)+c != a+(b+c) at (" + std::to_string(a) + "," +
                                             std::to_string(b) + "," + std::to_string(c) + ")");

    for (Idx a = 0; a < order; ++a)
        for (Idx b = 0; b < order; ++b)
            if (at(add, a, b) != at(add, b, a))
                throw AxiomViolation(AxiomKind::AddNotCommutative, {a, b, 0},
                                     "a+b != b+a at (" + std::to_string(a) + "," +
                                         std::to_string(b) + ")");

    std::optional<Idx> zero;
    for (Idx z = 0; z < order && !zero; ++z) {
        bool ok = true;
        for (Idx x = 0; x < order && ok; ++x) ok = at(add, z, x) == x;
        if (ok) zero = z;
    }
    if (!zero)
        throw AxiomViolation(AxiomKind::NoAdditiveIdentity, {0, 0, 0}, "no additive identity");
    if (zero_hint && *zero_hint != *zero)
        throw AxiomViolation(AxiomKind::NoAdditiveIdentity, {*zero_hint, 0, 0},
                             "zero_hint " + std::to_string(*zero_hint) +
                                 " is not the additive identity (detected " +
                                 std::to_string(*zero) + ")");

    std::vector<Idx> neg(n);
    for (Idx a = 0; a < order; ++a) {
        bool found = false;
        for (Idx b = 0; b < order && !found; ++b)
            if (at(add, a, b) == *zero) {
                neg[a] = b;
                found = true;
            }
        if (!found)
            throw AxiomViolation(AxiomKind::MissingNegative, {a, 0, 0},
                                 "element " + std::to_string(a) + " has no negative");
    }

    for (Idx a = 0; a < order; ++a)
        for (Idx b = 0; b < order; ++b)
            for (Idx c = 0; c < order; ++c)
                if (at(mul, at(mul, a, b), c) != at(mul, a, at(mul, b, c)))
                    throw AxiomViolation(AxiomKind::MulNotAssociative, {a, b, c},
                                         "(ab)c != a(bc) at (" + std::to_string(a) + "," +
                                             std::to_string(b) + "," + std::to_string(c) + ")");

    for (Idx a = 0; a < order; ++a)
        for (Idx b = 0; b < order; ++b)
            for (Idx c = 0; c < order; ++c) {
                if (at(mul, a, at(add, b, c)) != at(add, at(mul, a, b), at(mul, a, c)))
                    throw AxiomViolation(AxiomKind::DistributivityFailure, {a, b, c},
                                         "a(b+c) != ab+ac at (" + std::to_string(a) + "," +
                                             std::to_string(b) + "," + std::to_string(c) + ")");
                if (at(mul, at(add, a, b), c) != at(add, at(mul, a, c), at(mul, b, c)))
                    throw AxiomViolation(AxiomKind::DistributivityFailure, {a, b, c},
                                         "(a+b)c != ac+bc at (" + std::to_string(a) + "," +
                                             std::to_string(b) + "," + std::to_string(c) + ")");
            }

    std::optional<Idx> unity;
    for (Idx e = 0; e < order && !unity; ++e) {
        bool ok = true;
        for (Idx x = 0; x < order && ok; ++x)
            ok = at(mul, e, x) == x && at(mul, x, e) == x;
        if (ok) unity = e;
    }

    FiniteGeneralRing r;
    r.order_ = order;
    r.add_ = std::move(add);
    r.mul_ = std::move(mul);
    r.zero_ = *zero;
    r.unity_ = unity;
    r.neg_ = std::move(neg);
    r.name_ = std::move(name);
    return r;
}

// Convenience overload for nested-vector tables.
inline FiniteGeneralRing build_ring(const std::vector<std::vector<Idx>>& add,
                                    const std::vector<std::vector<Idx>>& mul,
                                    std::optional<Idx> zero_hint = std::nullopt,
                                    std::string name = "") {
    const std::size_t n = add.size();
    if (mul.size() != n) throw std::invalid_argument("build_ring: table shapes differ");
    std::vector<Idx> fa, fm;
    fa.reserve(n * n);
    fm.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (add[i].size() != n || mul[i].size() != n)
            throw std::invalid_argument("build_ring: tables must be square");
        fa.insert(fa.end(), add[i].begin(), add[i].end());
        fm.insert(fm.end(), mul[i].begin(), mul[i].end());
    }
    return build_ring(static_cast<Idx>(n), std::move(fa), std::move(fm), zero_hint,
                      std::move(name));
}

// ---------------------------------------------------------------------------
// Index-level derived operations
// ---------------------------------------------------------------------------

// Two-sided circle inverse: the c with a*c = 0 = c*a, if any. At most one
// exists: a*b = 0 and c*a = 0 force b = c.
inline std::optional<Idx> quasi_inverse(const FiniteGeneralRing& r, Idx a) {
    for (Idx c = 0; c < r.order(); ++c)
        if (r.circle(a, c) == r.zero() && r.circle(c, a) == r.zero()) return c;
    return std::nullopt;
}

// Two-sided multiplicative inverse in a unital ring.
inline std::optional<Idx> unit_inverse(const FiniteGeneralRing& r, Idx u) {
    if (!r.is_unital()) throw RequiresUnity("unit_inverse");
    for (Idx v = 0; v < r.order(); ++v)
        if (r.mul(u, v) == *r.unity() && r.mul(v, u) == *r.unity()) return v;
    return std::nullopt;
}

// Least k with a^k = 0, bounded by the order (powers cycle within it).
inline std::optional<int> nilpotency_index(const FiniteGeneralRing& r, Idx a) {
    Idx x = a;
    for (int k = 1; k <= r.order(); ++k) {
        if (x == r.zero()) return k;
        x = r.mul(x, a);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// ElementRef: an index paired with its ring, for callers who want checked
// value-style arithmetic. Mixing rings raises RingMismatch.
// ---------------------------------------------------------------------------

struct ElementRef {
    const FiniteGeneralRing* ring;
    Idx index;
};

inline void require_same_ring(ElementRef a, ElementRef b) {
    if (a.ring != b.ring) throw RingMismatch();
}

inline bool operator==(ElementRef a, ElementRef b) {
    return a.ring == b.ring && a.index == b.index;
}

inline ElementRef operator+(ElementRef a, ElementRef b) {
    require_same_ring(a, b);
    return {a.ring, a.ring->add(a.index, b.index)};
}

inline ElementRef operator*(ElementRef a, ElementRef b) {
    require_same_ring(a, b);
    return {a.ring, a.ring->mul(a.index, b.index)};
}

inline ElementRef operator-(ElementRef a) { return {a.ring, a.ring->neg(a.index)}; }

inline ElementRef operator-(ElementRef a, ElementRef b) {
    require_same_ring(a, b);
    return {a.ring, a.ring->sub(a.index, b.index)};
}

inline ElementRef circle(ElementRef a, ElementRef b) {
    require_same_ring(a, b);
    return {a.ring, a.ring->circle(a.index, b.index)};
}

inline ElementRef power(ElementRef a, int e) { return {a.ring, a.ring->power(a.index, e)}; }

inline ElementRef int_multiple(long long k, ElementRef a) {
    return {a.ring, a.ring->int_multiple(k, a.index)};
}

inline std::optional<ElementRef> quasi_inverse(ElementRef a) {
    auto c = quasi_inverse(*a.ring, a.index);
    if (!c) return std::nullopt;
    return ElementRef{a.ring, *c};
}

inline std::optional<int> nilpotency_index(ElementRef a) {
    return nilpotency_index(*a.ring, a.index);
}

} // namespace qpring
