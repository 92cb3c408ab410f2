#pragma once

// Ring constructors. Every builder funnels through build_ring, so each
// output is revalidated against the full axiom set; nothing is trusted.
//
// Element encodings (all documented because CLI expressions address
// elements by index):
//   matrix_ring   index = lexicographic rank of the row-major entry list,
//                 entry (0,0) most significant digit base |R|
//   direct_product mixed radix, first factor most significant
//   dorroh        (s,v) -> s*|I| + v
//   pair_ring     (a,b) -> a*|R| + b
//   corner/ideal  carrier sorted by parent index, relabeled densely
//   quotient      cosets sorted by their least parent representative

#include <algorithm>
#include <string>
#include <vector>

#include "qpring/ring.hpp"
#include "qpring/subsets.hpp"

namespace qpring {

inline constexpr Idx kDefaultMaxOrder = 256;

inline void check_feasible(unsigned long long requested, Idx max_order) {
    if (requested > max_order) throw FeasibilityExceeded(requested, max_order);
}

// ---------------------------------------------------------------------------
// Cyclic rings and zero-multiplication rings
// ---------------------------------------------------------------------------

inline FiniteGeneralRing zmod(unsigned n) {
    if (n == 0) throw std::invalid_argument("zmod: modulus must be positive");
    Idx ord = static_cast<Idx>(n);
    std::vector<Idx> add(std::size_t(n) * n), mul(std::size_t(n) * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            add[std::size_t(i) * n + j] = static_cast<Idx>((i + j) % n);
            mul[std::size_t(i) * n + j] = static_cast<Idx>((i * j) % n);
        }
    return build_ring(ord, std::move(add), std::move(mul), Idx{0}, "Zmod" + std::to_string(n));
}

// Cyclic additive group with every product zero.
inline FiniteGeneralRing zero_mul(unsigned n) {
    if (n == 0) throw std::invalid_argument("zero_mul: order must be positive");
    Idx ord = static_cast<Idx>(n);
    std::vector<Idx> add(std::size_t(n) * n), mul(std::size_t(n) * n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) add[std::size_t(i) * n + j] = static_cast<Idx>((i + j) % n);
    return build_ring(ord, std::move(add), std::move(mul), Idx{0}, "ZeroMul" + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Matrix rings
// ---------------------------------------------------------------------------

inline std::vector<Idx> matrix_entries(const FiniteGeneralRing& base, unsigned k, Idx m) {
    std::vector<Idx> e(std::size_t(k) * k);
    unsigned long long v = m;
    for (std::size_t pos = e.size(); pos-- > 0;) {
        e[pos] = static_cast<Idx>(v % base.order());
        v /= base.order();
    }
    return e;
}

inline Idx matrix_index(const FiniteGeneralRing& base, unsigned k, const std::vector<Idx>& entries) {
    if (entries.size() != std::size_t(k) * k)
        throw std::invalid_argument("matrix_index: wrong entry count");
    unsigned long long v = 0;
    for (Idx e : entries) {
        if (e >= base.order()) throw std::invalid_argument("matrix_index: entry out of range");
        v = v * base.order() + e;
    }
    return static_cast<Idx>(v);
}

inline FiniteGeneralRing matrix_ring(const FiniteGeneralRing& base, unsigned k,
                                     Idx max_order = kDefaultMaxOrder) {
    if (k == 0) throw std::invalid_argument("matrix_ring: dimension must be positive");
    unsigned long long ord = 1;
    for (unsigned i = 0; i < k * k; ++i) {
        ord *= base.order();
        if (ord > max_order) throw FeasibilityExceeded(ord, max_order);
    }
    const Idx n = static_cast<Idx>(ord);

    std::vector<std::vector<Idx>> ent(n);
    for (Idx i = 0; i < n; ++i) ent[i] = matrix_entries(base, k, i);

    std::vector<Idx> add(std::size_t(n) * n), mul(std::size_t(n) * n);
    std::vector<Idx> tmp(std::size_t(k) * k);
    for (Idx i = 0; i < n; ++i)
        for (Idx j = 0; j < n; ++j) {
            for (std::size_t p = 0; p < tmp.size(); ++p) tmp[p] = base.add(ent[i][p], ent[j][p]);
            add[std::size_t(i) * n + j] = matrix_index(base, k, tmp);
            for (unsigned r = 0; r < k; ++r)
                for (unsigned c = 0; c < k; ++c) {
                    Idx acc = base.zero();
                    for (unsigned m = 0; m < k; ++m)
                        acc = base.add(acc, base.mul(ent[i][r * k + m], ent[j][m * k + c]));
                    tmp[r * k + c] = acc;
                }
            mul[std::size_t(i) * n + j] = matrix_index(base, k, tmp);
        }
    return build_ring(n, std::move(add), std::move(mul), std::nullopt,
                      "Mat" + std::to_string(k) + "(" + base.name() + ")");
}

// ---------------------------------------------------------------------------
// Direct products
// ---------------------------------------------------------------------------

inline FiniteGeneralRing direct_product(const std::vector<const FiniteGeneralRing*>& factors,
                                        Idx max_order = kDefaultMaxOrder) {
    if (factors.empty()) throw std::invalid_argument("direct_product: needs at least one factor");
    unsigned long long ord = 1;
    for (auto* f : factors) {
        ord *= f->order();
        if (ord > max_order) throw FeasibilityExceeded(ord, max_order);
    }
    const Idx n = static_cast<Idx>(ord);
    const std::size_t m = factors.size();

    auto decode = [&](Idx idx, std::vector<Idx>& out) {
        unsigned long long v = idx;
        for (std::size_t p = m; p-- > 0;) {
            out[p] = static_cast<Idx>(v % factors[p]->order());
            v /= factors[p]->order();
        }
    };
    auto encode = [&](const std::vector<Idx>& parts) {
        unsigned long long v = 0;
        for (std::size_t p = 0; p < m; ++p) v = v * factors[p]->order() + parts[p];
        return static_cast<Idx>(v);
    };

    std::vector<std::vector<Idx>> parts(n, std::vector<Idx>(m));
    for (Idx i = 0; i < n; ++i) decode(i, parts[i]);

    std::vector<Idx> add(std::size_t(n) * n), mul(std::size_t(n) * n), tmp(m);
    for (Idx i = 0; i < n; ++i)
        for (Idx j = 0; j < n; ++j) {
            for (std::size_t p = 0; p < m; ++p) tmp[p] = factors[p]->add(parts[i][p], parts[j][p]);
            add[std::size_t(i) * n + j] = encode(tmp);
            for (std::size_t p = 0; p < m; ++p) tmp[p] = factors[p]->mul(parts[i][p], parts[j][p]);
            mul[std::size_t(i) * n + j] = encode(tmp);
        }

    std::string name = "Product(";
    for (std::size_t p = 0; p < m; ++p) {
        if (p) name += ',';
        name += factors[p]->name();
    }
    name += ')';
    return build_ring(n, std::move(add), std::move(mul), std::nullopt, std::move(name));
}

// ---------------------------------------------------------------------------
// Dorroh extensions
// ---------------------------------------------------------------------------

// Coefficient action of a unital ring S on a general ring I:
//   left[s][v]  = s.v      right[v][s] = v.s
struct DorrohAction {
    std::vector<std::vector<Idx>> left;
    std::vector<std::vector<Idx>> right;
};

// Canonical integer action: s acts as its representative k in s = k.1_S.
// Well defined exactly when the additive exponent of I divides char(S),
// and available only when S is additively generated by 1.
inline DorrohAction integer_action(const FiniteGeneralRing& S, const FiniteGeneralRing& I) {
    if (!S.is_unital()) throw RequiresUnity("integer_action coefficient ring");
    std::vector<long long> rep(S.order(), -1);
    {
        Idx x = S.zero();
        long long k = 0;
        do {
            if (rep[x] < 0) rep[x] = k;
            x = S.add(x, *S.unity());
            ++k;
        } while (x != S.zero());
    }
    for (Idx s = 0; s < S.order(); ++s)
        if (rep[s] < 0)
            throw CharacteristicMismatch(
                "integer action needs a coefficient ring additively generated by 1");
    const int char_s = S.additive_order(*S.unity());
    for (Idx v = 0; v < I.order(); ++v)
        if (I.int_multiple(char_s, v) != I.zero())
            throw CharacteristicMismatch("char(S) = " + std::to_string(char_s) +
                                         " does not annihilate the extended ring");

    DorrohAction act;
    act.left.assign(S.order(), std::vector<Idx>(I.order()));
    act.right.assign(I.order(), std::vector<Idx>(S.order()));
    for (Idx s = 0; s < S.order(); ++s)
        for (Idx v = 0; v < I.order(); ++v) {
            Idx sv = I.int_multiple(rep[s], v);
            act.left[s][v] = sv;
            act.right[v][s] = sv;
        }
    return act;
}

// All bimodule laws an ideal extension needs, checked exhaustively.
inline void validate_action(const FiniteGeneralRing& S, const FiniteGeneralRing& I,
                            const DorrohAction& act) {
    if (!S.is_unital()) throw RequiresUnity("dorroh coefficient ring");
    if (act.left.size() != S.order() || act.right.size() != I.order())
        throw BimoduleViolation("action tables have the wrong shape");
    for (const auto& row : act.left)
        if (row.size() != I.order()) throw BimoduleViolation("action tables have the wrong shape");
    for (const auto& row : act.right)
        if (row.size() != S.order()) throw BimoduleViolation("action tables have the wrong shape");

    auto l = [&](Idx s, Idx v) { return act.left[s][v]; };
    auto r = [&](Idx v, Idx s) { return act.right[v][s]; };
    auto witness = [](const char* law, Idx x, Idx y, Idx z) {
        return std::string(law) + " fails at (" + std::to_string(x) + "," + std::to_string(y) +
               "," + std::to_string(z) + ")";
    };

    Idx one = *S.unity();
    for (Idx v = 0; v < I.order(); ++v) {
        if (l(one, v) != v) throw BimoduleViolation(witness("1.v = v", one, v, 0));
        if (r(v, one) != v) throw BimoduleViolation(witness("v.1 = v", v, one, 0));
    }
    for (Idx s = 0; s < S.order(); ++s)
        for (Idx t = 0; t < S.order(); ++t)
            for (Idx v = 0; v < I.order(); ++v) {
                if (l(S.add(s, t), v) != I.add(l(s, v), l(t, v)))
                    throw BimoduleViolation(witness("(s+t).v = s.v + t.v", s, t, v));
                if (r(v, S.add(s, t)) != I.add(r(v, s), r(v, t)))
                    throw BimoduleViolation(witness("v.(s+t) = v.s + v.t", v, s, t));
                if (l(S.mul(s, t), v) != l(s, l(t, v)))
                    throw BimoduleViolation(witness("(st).v = s.(t.v)", s, t, v));
                if (r(v, S.mul(s, t)) != r(r(v, s), t))
                    throw BimoduleViolation(witness("v.(st) = (v.s).t", v, s, t));
                if (r(l(s, v), t) != l(s, r(v, t)))
                    throw BimoduleViolation(witness("(s.v).t = s.(v.t)", s, v, t));
            }
    for (Idx s = 0; s < S.order(); ++s)
        for (Idx v = 0; v < I.order(); ++v)
            for (Idx w = 0; w < I.order(); ++w) {
                if (l(s, I.add(v, w)) != I.add(l(s, v), l(s, w)))
                    throw BimoduleViolation(witness("s.(v+w) = s.v + s.w", s, v, w));
                if (r(I.add(v, w), s) != I.add(r(v, s), r(w, s)))
                    throw BimoduleViolation(witness("(v+w).s = v.s + w.s", v, w, s));
                if (r(I.mul(v, w), s) != I.mul(v, r(w, s)))
                    throw BimoduleViolation(witness("(vw).s = v.(w.s)", v, w, s));
                if (I.mul(r(v, s), w) != I.mul(v, l(s, w)))
                    throw BimoduleViolation(witness("(v.s)w = v.(s.w)", v, s, w));
                if (I.mul(l(s, v), w) != l(s, I.mul(v, w)))
                    throw BimoduleViolation(witness("(s.v)w = s.(vw)", s, v, w));
            }
}

inline Idx dorroh_index(const FiniteGeneralRing& I, Idx s, Idx v) {
    return static_cast<Idx>(std::size_t(s) * I.order() + v);
}

inline std::pair<Idx, Idx> dorroh_parts(const FiniteGeneralRing& I, Idx e) {
    return {static_cast<Idx>(e / I.order()), static_cast<Idx>(e % I.order())};
}

// Ideal extension of I by S: carrier S x I with
// (s,v)(t,w) = (st, s.w + v.t + vw). Unity is (1_S, 0).
inline FiniteGeneralRing dorroh(const FiniteGeneralRing& S, const FiniteGeneralRing& I,
                                const DorrohAction* action = nullptr,
                                Idx max_order = kDefaultMaxOrder) {
    DorrohAction def;
    if (!action) {
        def = integer_action(S, I);
        action = &def;
    }
    validate_action(S, I, *action);
    unsigned long long ord = static_cast<unsigned long long>(S.order()) * I.order();
    check_feasible(ord, max_order);
    const Idx n = static_cast<Idx>(ord);

    std::vector<Idx> add(std::size_t(n) * n), mul(std::size_t(n) * n);
    for (Idx i = 0; i < n; ++i) {
        auto [si, vi] = dorroh_parts(I, i);
        for (Idx j = 0; j < n; ++j) {
            auto [sj, vj] = dorroh_parts(I, j);
            add[std::size_t(i) * n + j] = dorroh_index(I, S.add(si, sj), I.add(vi, vj));
            Idx w = I.add(I.add(action->left[si][vj], action->right[vi][sj]), I.mul(vi, vj));
            mul[std::size_t(i) * n + j] = dorroh_index(I, S.mul(si, sj), w);
        }
    }
    return build_ring(n, std::move(add), std::move(mul), std::nullopt,
                      "Dorroh(" + S.name() + ";" + I.name() + ")");
}

// ---------------------------------------------------------------------------
// Subrings with retained index maps
// ---------------------------------------------------------------------------

// A ring living on a subset of a parent's carrier. to_parent[i] is the
// parent index of local element i; carrier order is ascending parent index.
struct SubringView {
    FiniteGeneralRing ring;
    std::vector<Idx> to_parent;

    ElementSet parent_carrier(const FiniteGeneralRing& parent) const {
        ElementSet s(parent.order());
        for (Idx p : to_parent) s.set(p);
        return s;
    }
};

namespace detail {
inline SubringView subring_from_carrier(const FiniteGeneralRing& parent,
                                        const ElementSet& carrier, std::string name) {
    std::vector<Idx> to_parent = carrier.to_vector();
    std::vector<Idx> local(parent.order(), 0);
    for (std::size_t i = 0; i < to_parent.size(); ++i) local[to_parent[i]] = static_cast<Idx>(i);

    const Idx n = static_cast<Idx>(to_parent.size());
    std::vector<Idx> add(std::size_t(n) * n), mul(std::size_t(n) * n);
    for (Idx i = 0; i < n; ++i)
        for (Idx j = 0; j < n; ++j) {
            Idx s = parent.add(to_parent[i], to_parent[j]);
            Idx m = parent.mul(to_parent[i], to_parent[j]);
            if (!carrier.test(s) || !carrier.test(m))
                throw InternalInvariantBroken("carrier is not closed under the parent operations");
            add[std::size_t(i) * n + j] = local[s];
            mul[std::size_t(i) * n + j] = local[m];
        }
    return SubringView{build_ring(n, std::move(add), std::move(mul), std::nullopt, std::move(name)),
                       std::move(to_parent)};
}
} // namespace detail

// eRe for an idempotent e, with unity e.
inline SubringView corner(const FiniteGeneralRing& r, Idx e) {
    if (e >= r.order()) throw std::invalid_argument("corner: element index out of range");
    if (r.mul(e, e) != e) throw NotIdempotent(e);
    ElementSet carrier(r.order());
    for (Idx x = 0; x < r.order(); ++x) carrier.set(r.mul(r.mul(e, x), e));
    return detail::subring_from_carrier(r, carrier,
                                        "Corner(" + r.name() + ")e=" + std::to_string(e));
}

// The two-sided ideal generated by a, viewed as a general ring.
inline SubringView principal_ideal(const FiniteGeneralRing& r, Idx a) {
    if (a >= r.order()) throw std::invalid_argument("principal_ideal: element index out of range");
    return detail::subring_from_carrier(r, ideal_closure(r, a),
                                        "Ideal(" + r.name() + ")a=" + std::to_string(a));
}

// ---------------------------------------------------------------------------
// Pair rings
// ---------------------------------------------------------------------------

inline Idx pair_index(const FiniteGeneralRing& base, Idx a, Idx b) {
    return static_cast<Idx>(std::size_t(a) * base.order() + b);
}

inline std::pair<Idx, Idx> pair_parts(const FiniteGeneralRing& base, Idx e) {
    return {static_cast<Idx>(e / base.order()), static_cast<Idx>(e % base.order())};
}

// R x R with componentwise addition and (a,b)(c,d) = (ac, ad). Has no unity
// whenever |R| > 1.
inline FiniteGeneralRing pair_ring(const FiniteGeneralRing& base, Idx max_order = kDefaultMaxOrder) {
    if (!base.is_unital()) throw RequiresUnity("pair_ring base");
    unsigned long long ord = static_cast<unsigned long long>(base.order()) * base.order();
    check_feasible(ord, max_order);
    const Idx n = static_cast<Idx>(ord);
    std::vector<Idx> add(std::size_t(n) * n), mul(std::size_t(n) * n);
    for (Idx i = 0; i < n; ++i) {
        auto [ai, bi] = pair_parts(base, i);
        for (Idx j = 0; j < n; ++j) {
            auto [aj, bj] = pair_parts(base, j);
            add[std::size_t(i) * n + j] = pair_index(base, base.add(ai, aj), base.add(bi, bj));
            mul[std::size_t(i) * n + j] = pair_index(base, base.mul(ai, aj), base.mul(ai, bj));
        }
    }
    return build_ring(n, std::move(add), std::move(mul), std::nullopt,
                      "PairRing(" + base.name() + ")");
}

// ---------------------------------------------------------------------------
// Quotients by principal ideals
// ---------------------------------------------------------------------------

struct QuotientView {
    FiniteGeneralRing ring;
    std::vector<Idx> rep;      // local class -> least parent representative
    std::vector<Idx> class_of; // parent element -> local class
};

inline QuotientView quotient(const FiniteGeneralRing& r, Idx a) {
    if (a >= r.order()) throw std::invalid_argument("quotient: element index out of range");
    ElementSet ideal = ideal_closure(r, a);
    auto ideal_v = ideal.to_vector();

    constexpr Idx kUnset = static_cast<Idx>(-1);
    std::vector<Idx> class_of(r.order(), kUnset), rep;
    for (Idx x = 0; x < r.order(); ++x) {
        if (class_of[x] != kUnset) continue;
        Idx cls = static_cast<Idx>(rep.size());
        rep.push_back(x); // x is the least member: smaller ones are already classified
        for (Idx i : ideal_v) class_of[r.add(x, i)] = cls;
    }

    const Idx n = static_cast<Idx>(rep.size());
    std::vector<Idx> add(std::size_t(n) * n), mul(std::size_t(n) * n);
    for (Idx i = 0; i < n; ++i)
        for (Idx j = 0; j < n; ++j) {
            add[std::size_t(i) * n + j] = class_of[r.add(rep[i], rep[j])];
            mul[std::size_t(i) * n + j] = class_of[r.mul(rep[i], rep[j])];
        }
    return QuotientView{build_ring(n, std::move(add), std::move(mul), std::nullopt,
                                   "Quotient(" + r.name() + ")a=" + std::to_string(a)),
                        std::move(rep), std::move(class_of)};
}

} // namespace qpring
