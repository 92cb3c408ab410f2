#pragma once

// Distinguished subsets of a finite general ring, computed by exhaustive
// scan and memoized per ring:
//
//   Units  invertible elements                     (unital only)
//   Idem   idempotents
//   Nil    nilpotents
//   Q      quasiregular: two-sided circle inverse exists
//   QN     quasinilpotent: qx in Q for every x commuting with q
//   Qnil   1 + ax invertible for every x commuting with a  (unital only)
//   J      the largest quasiregular two-sided ideal, computed as
//          { a : ideal_closure(a) subset of Q }
//   Jsharp elements with some power <= order inside J      (unital only)
//
// Plus the commutant comm(a), double commutant comm2(a), and the two-sided
// principal ideal closure used by J, quotients and ideal subrings.

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "qpring/element_set.hpp"
#include "qpring/ring.hpp"

namespace qpring {

inline ElementSet comm(const FiniteGeneralRing& r, Idx a) {
    ElementSet s(r.order());
    for (Idx x = 0; x < r.order(); ++x)
        if (r.mul(a, x) == r.mul(x, a)) s.set(x);
    return s;
}

inline ElementSet comm2(const FiniteGeneralRing& r, Idx a) {
    ElementSet ca = comm(r, a);
    ElementSet s(r.order());
    for (Idx x = 0; x < r.order(); ++x) {
        bool central = true;
        for (Idx y = 0; y < r.order() && central; ++y)
            if (ca.test(y) && r.mul(x, y) != r.mul(y, x)) central = false;
        if (central) s.set(x);
    }
    return s;
}

// Two-sided ideal generated by a: the additive closure of
// { k.a } u Ia u aI u IaI. The generating set is negation-closed, so
// closing under addition alone yields the subgroup, and it is already
// closed under multiplication from either side.
inline ElementSet ideal_closure(const FiniteGeneralRing& r, Idx a) {
    ElementSet gens(r.order());
    {
        Idx x = r.zero();
        for (int k = 0; k < r.additive_order(a); ++k) {
            gens.set(x);
            x = r.add(x, a);
        }
    }
    for (Idx t = 0; t < r.order(); ++t) {
        gens.set(r.mul(t, a));
        gens.set(r.mul(a, t));
        Idx ta = r.mul(t, a);
        for (Idx u = 0; u < r.order(); ++u) gens.set(r.mul(ta, u));
    }

    ElementSet closed(r.order());
    closed.set(r.zero());
    std::vector<Idx> frontier{r.zero()};
    auto gv = gens.to_vector();
    while (!frontier.empty()) {
        Idx s = frontier.back();
        frontier.pop_back();
        for (Idx g : gv) {
            Idx t = r.add(s, g);
            if (!closed.test(t)) {
                closed.set(t);
                frontier.push_back(t);
            }
        }
    }
    return closed;
}

enum class SetKind : int {
    Units = 0,
    Idem = 1,
    Nil = 2,
    Q = 3,
    QN = 4,
    Qnil = 5,
    J = 6,
    Jsharp = 7,
};

inline const char* to_label(SetKind k) {
    switch (k) {
        case SetKind::Units: return "Units";
        case SetKind::Idem: return "Idem";
        case SetKind::Nil: return "Nil";
        case SetKind::Q: return "Q";
        case SetKind::QN: return "QN";
        case SetKind::Qnil: return "Qnil";
        case SetKind::J: return "J";
        case SetKind::Jsharp: return "Jsharp";
    }
    return "?";
}

inline bool set_kind_requires_unity(SetKind k) {
    return k == SetKind::Units || k == SetKind::Qnil || k == SetKind::Jsharp;
}

// Lazy per-ring memo of the eight subsets. Thread-safe: computation happens
// outside the lock and installation is first-wins, so concurrent callers may
// duplicate work but always observe one stable, identical set.
class SubsetCache {
public:
    explicit SubsetCache(const FiniteGeneralRing& r) : ring_(&r) {}

    const FiniteGeneralRing& ring() const { return *ring_; }

    const ElementSet& set(SetKind k) const {
        const int i = static_cast<int>(k);
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (sets_[i]) return *sets_[i];
        }
        auto computed = std::make_unique<const ElementSet>(compute(k));
        std::lock_guard<std::mutex> lock(mu_);
        if (!sets_[i]) sets_[i] = std::move(computed);
        return *sets_[i];
    }

    bool contains(SetKind k, Idx a) const { return set(k).test(a); }

private:
    ElementSet compute(SetKind k) const {
        const FiniteGeneralRing& r = *ring_;
        if (set_kind_requires_unity(k) && !r.is_unital())
            throw RequiresUnity(to_label(k));
        ElementSet s(r.order());
        switch (k) {
            case SetKind::Units: {
                Idx one = *r.unity();
                for (Idx u = 0; u < r.order(); ++u)
                    for (Idx v = 0; v < r.order(); ++v)
                        if (r.mul(u, v) == one && r.mul(v, u) == one) {
                            s.set(u);
                            break;
                        }
                break;
            }
            case SetKind::Idem:
                for (Idx a = 0; a < r.order(); ++a)
                    if (r.mul(a, a) == a) s.set(a);
                break;
            case SetKind::Nil:
                for (Idx a = 0; a < r.order(); ++a)
                    if (nilpotency_index(r, a)) s.set(a);
                break;
            case SetKind::Q:
                for (Idx a = 0; a < r.order(); ++a)
                    if (quasi_inverse(r, a)) s.set(a);
                break;
            case SetKind::QN: {
                const ElementSet& q = set(SetKind::Q);
                for (Idx a = 0; a < r.order(); ++a) {
                    bool ok = true;
                    for (Idx x = 0; x < r.order() && ok; ++x)
                        if (r.mul(a, x) == r.mul(x, a) && !q.test(r.mul(a, x))) ok = false;
                    if (ok) s.set(a);
                }
                break;
            }
            case SetKind::Qnil: {
                const ElementSet& u = set(SetKind::Units);
                Idx one = *r.unity();
                for (Idx a = 0; a < r.order(); ++a) {
                    bool ok = true;
                    for (Idx x = 0; x < r.order() && ok; ++x)
                        if (r.mul(a, x) == r.mul(x, a) && !u.test(r.add(one, r.mul(a, x))))
                            ok = false;
                    if (ok) s.set(a);
                }
                break;
            }
            case SetKind::J: {
                const ElementSet& q = set(SetKind::Q);
                for (Idx a = 0; a < r.order(); ++a)
                    if (ideal_closure(r, a).subset_of(q)) s.set(a);
                break;
            }
            case SetKind::Jsharp: {
                const ElementSet& j = set(SetKind::J);
                for (Idx a = 0; a < r.order(); ++a) {
                    Idx x = a;
                    for (int k2 = 1; k2 <= r.order(); ++k2) {
                        if (j.test(x)) {
                            s.set(a);
                            break;
                        }
                        x = r.mul(x, a);
                    }
                }
                break;
            }
        }
        return s;
    }

    const FiniteGeneralRing* ring_;
    mutable std::mutex mu_;
    mutable std::array<std::unique_ptr<const ElementSet>, 8> sets_;
};

} // namespace qpring
