#pragma once

// Element classification with constructive certificates.
//
// Every operation is an exhaustive scan in ascending index order. Searches
// whose witness is provably unique (the generalized Drazin inverse b, the
// spectral idempotent p) keep scanning after the first hit and raise
// AmbiguousInverse on a second one: uniqueness is treated as a falsifiable
// claim, not an assumption. Certificates re-verify their defining equations
// by direct table evaluation at construction; a failed re-verification is
// an InternalInvariantBroken, never a silent fixup.

#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "qpring/ring.hpp"
#include "qpring/subsets.hpp"

namespace qpring {

struct StronglyRegularCert {
    Idx b;             // a = aba with ab = ba
    bool b_in_comm2;   // whether this witness also lies in comm2(a)
    bool verify(const SubsetCache& cache, Idx a) const;
};

struct StronglyPiRegularCert {
    int n;  // minimal exponent with a^n = a^{n+1} x
    Idx x;  // commuting witness
    Idx b;  // Drazin inverse
    Idx p;  // spectral idempotent ab
    bool verify(const SubsetCache& cache, Idx a) const;
};

struct QuasipolarCert {
    Idx p; // spectral idempotent, p in comm2(a)
    Idx r; // quasi-inverse of a + p
    Idx b; // generalized Drazin inverse rp - p
    bool verify(const SubsetCache& cache, Idx a) const;
};

struct StronglyCleanCert {
    Idx e;     // idempotent summand
    Idx q;     // quasiregular summand a - e
    Idx q_inv; // circle inverse of q
    bool verify(const SubsetCache& cache, Idx a) const;
};

struct PseudopolarCert {
    Idx p; // idempotent in comm2(a) with a + p a unit
    int k; // minimal exponent with (ap)^k in J
    Idx b; // pseudo Drazin inverse
    bool verify(const SubsetCache& cache, Idx a) const;
};

struct StronglyPiRadCleanCert {
    Idx e; // idempotent with ae = ea, a - e a unit
    int n; // minimal exponent with a^n e in J
    bool verify(const SubsetCache& cache, Idx a) const;
};

struct SemiregularCert {
    Idx b; // bab = b with a - aba in J
    bool verify(const SubsetCache& cache, Idx a) const;
};

struct UnitalQuasipolarCert {
    Idx p; // idempotent in comm2(a) with a + p a unit and ap quasinilpotent
    bool verify(const SubsetCache& cache, Idx a) const;
};

using Certificate =
    std::variant<StronglyRegularCert, StronglyPiRegularCert, QuasipolarCert, StronglyCleanCert,
                 PseudopolarCert, StronglyPiRadCleanCert, SemiregularCert, UnitalQuasipolarCert>;

inline bool verify_certificate(const SubsetCache& cache, Idx a, const Certificate& cert) {
    return std::visit([&](const auto& c) { return c.verify(cache, a); }, cert);
}

// a = s + n with s strongly regular, n nilpotent, sn = ns = 0.
struct SprDecomposition {
    Idx s;
    Idx n;
    Idx c; // pseudo-inverse witness: ac = ca, a^m = a^{m+1}c, c = c^2 a
    bool verify(const SubsetCache& cache, Idx a) const;
};

// a = s + q with s strongly regular in comm2(a), q quasinilpotent, sq = qs = 0.
struct QpDecomposition {
    Idx s;
    Idx q;
    bool verify(const SubsetCache& cache, Idx a) const;
};

namespace detail {

// powers[i] = a^(i+1) for i in [0, count); count = order + 1 covers every
// exponent a bounded search can ask for.
inline std::vector<Idx> power_row(const FiniteGeneralRing& r, Idx a) {
    std::vector<Idx> p(std::size_t(r.order()) + 1);
    p[0] = a;
    for (std::size_t i = 1; i < p.size(); ++i) p[i] = r.mul(p[i - 1], a);
    return p;
}

inline std::string describe(const FiniteGeneralRing& r, const char* what, Idx a) {
    return std::string(what) + " for element " + std::to_string(a) + " of " + r.name();
}

} // namespace detail

// ---------------------------------------------------------------------------
// Searches
// ---------------------------------------------------------------------------

inline std::optional<StronglyRegularCert> strongly_regular(const SubsetCache& cache, Idx a) {
    const auto& r = cache.ring();
    std::optional<Idx> found;
    for (Idx b = 0; b < r.order(); ++b) {
        if (r.mul(r.mul(a, b), a) == a && r.mul(a, b) == r.mul(b, a)) {
            found = b;
            break;
        }
    }
    ElementSet c2 = comm2(r, a);
    bool comm2_form = false;
    for (Idx b = 0; b < r.order() && !comm2_form; ++b)
        if (c2.test(b) && r.mul(r.mul(a, a), b) == a) comm2_form = true;
    if (found.has_value() != comm2_form)
        throw InternalInvariantBroken(
            detail::describe(r, "strongly regular forms disagree", a));
    if (!found) return std::nullopt;
    StronglyRegularCert cert{*found, c2.test(*found)};
    if (!cert.verify(cache, a))
        throw InternalInvariantBroken(
            detail::describe(r, "strongly regular certificate failed re-verification", a));
    return cert;
}

inline StronglyPiRegularCert strongly_pi_regular(const SubsetCache& cache, Idx a) {
    const auto& r = cache.ring();
    auto pw = detail::power_row(r, a);
    int n = 0;
    Idx x = 0;
    bool found = false;
    for (int nn = 1; nn <= r.order() && !found; ++nn)
        for (Idx xx = 0; xx < r.order(); ++xx)
            if (r.mul(a, xx) == r.mul(xx, a) && pw[nn - 1] == r.mul(pw[nn], xx)) {
                n = nn;
                x = xx;
                found = true;
                break;
            }
    if (!found)
        throw InternalInvariantBroken(
            detail::describe(r, "no strong pi-regularity witness in a finite ring", a));

    ElementSet cm = comm(r, a), c2 = comm2(r, a);
    auto scan_b = [&](const ElementSet& dom) {
        std::optional<Idx> hit;
        for (Idx b = 0; b < r.order(); ++b) {
            if (!dom.test(b)) continue;
            if (r.mul(a, r.mul(b, b)) != b) continue;
            if (!cache.contains(SetKind::Nil, r.sub(r.mul(r.mul(a, a), b), a))) continue;
            if (hit)
                throw AmbiguousInverse(detail::describe(r, "second Drazin inverse", a));
            hit = b;
        }
        return hit;
    };
    auto b_comm = scan_b(cm);
    auto b_comm2 = scan_b(c2);
    if (!b_comm || !b_comm2 || *b_comm != *b_comm2)
        throw InternalInvariantBroken(
            detail::describe(r, "Drazin inverse scans over comm and comm2 disagree", a));
    Idx b = *b_comm;

    auto scan_p = [&](const ElementSet& dom) {
        std::optional<Idx> hit;
        for (Idx p = 0; p < r.order(); ++p) {
            if (!dom.test(p) || r.mul(p, p) != p) continue;
            if (!cache.contains(SetKind::Nil, r.sub(a, r.mul(a, p)))) continue;
            if (!cache.contains(SetKind::Q, r.add(a, p))) continue;
            if (hit)
                throw AmbiguousInverse(detail::describe(r, "second spectral idempotent", a));
            hit = p;
        }
        return hit;
    };
    auto p_comm = scan_p(cm);
    auto p_comm2 = scan_p(c2);
    if (!p_comm || !p_comm2 || *p_comm != *p_comm2 || *p_comm != r.mul(a, b))
        throw InternalInvariantBroken(
            detail::describe(r, "spectral idempotent scans disagree", a));

    StronglyPiRegularCert cert{n, x, b, *p_comm};
    if (!cert.verify(cache, a))
        throw InternalInvariantBroken(
            detail::describe(r, "strong pi-regularity certificate failed re-verification", a));
    return cert;
}

inline std::optional<QuasipolarCert> quasipolar(const SubsetCache& cache, Idx a) {
    const auto& r = cache.ring();
    ElementSet c2 = comm2(r, a);
    std::optional<Idx> found;
    for (Idx p = 0; p < r.order(); ++p) {
        if (!c2.test(p) || r.mul(p, p) != p) continue;
        if (!cache.contains(SetKind::Q, r.add(a, p))) continue;
        if (!cache.contains(SetKind::QN, r.sub(a, r.mul(a, p)))) continue;
        if (found)
            throw AmbiguousInverse(detail::describe(r, "second spectral idempotent", a));
        found = p;
    }
    if (!found) return std::nullopt;
    Idx p = *found;
    Idx q = r.add(a, p);
    auto ri = quasi_inverse(r, q);
    if (!ri)
        throw InternalInvariantBroken(
            detail::describe(r, "a + p lost its quasi-inverse between scans", a));
    QuasipolarCert cert{p, *ri, r.sub(r.mul(*ri, p), p)};
    if (!cert.verify(cache, a))
        throw InternalInvariantBroken(
            detail::describe(r, "quasipolar certificate failed re-verification", a));
    return cert;
}

// Independent of quasipolar(): finds b directly from its defining equations.
inline std::optional<Idx> gdrazin_inverse(const SubsetCache& cache, Idx a) {
    const auto& r = cache.ring();
    ElementSet c2 = comm2(r, a);
    std::optional<Idx> found;
    for (Idx b = 0; b < r.order(); ++b) {
        if (!c2.test(b)) continue;
        if (r.mul(a, r.mul(b, b)) != b) continue;
        if (!cache.contains(SetKind::QN, r.sub(r.mul(r.mul(a, a), b), a))) continue;
        if (found)
            throw AmbiguousInverse(detail::describe(r, "second generalized Drazin inverse", a));
        found = b;
    }
    return found;
}

inline std::optional<SprDecomposition> decompose_spr(const SubsetCache& cache, Idx a) {
    const auto& r = cache.ring();
    auto pw = detail::power_row(r, a);
    for (Idx c = 0; c < r.order(); ++c) {
        if (r.mul(a, c) != r.mul(c, a)) continue;
        if (r.mul(r.mul(c, c), a) != c) continue;
        bool pseudo = false;
        for (int m = 1; m <= r.order() && !pseudo; ++m)
            if (pw[m - 1] == r.mul(pw[m], c)) pseudo = true;
        if (!pseudo) continue;
        SprDecomposition d{r.mul(r.mul(a, c), a), r.sub(a, r.mul(r.mul(a, c), a)), c};
        if (!d.verify(cache, a))
            throw InternalInvariantBroken(
                detail::describe(r, "spr decomposition failed re-verification", a));
        return d;
    }
    return std::nullopt;
}

inline std::optional<QpDecomposition> decompose_qp(const SubsetCache& cache, Idx a) {
    const auto& r = cache.ring();
    auto cert = quasipolar(cache, a);
    if (!cert) return std::nullopt;
    Idx s = r.mul(r.mul(a, a), cert->b);
    QpDecomposition d{s, r.sub(a, s)};
    if (!d.verify(cache, a))
        throw InternalInvariantBroken(
            detail::describe(r, "qp decomposition failed re-verification", a));

    // Converse reconstruction: a strong-regularity witness for s recovers
    // the same spectral idempotent, so (s, q) determines the certificate.
    ElementSet c2s = comm2(r, s);
    std::optional<Idx> y;
    for (Idx yy = 0; yy < r.order() && !y; ++yy)
        if (c2s.test(yy) && r.mul(r.mul(s, s), yy) == s) y = yy;
    if (!y)
        throw InternalInvariantBroken(
            detail::describe(r, "decomposed s is not strongly regular", a));
    Idx sy = r.mul(s, *y);
    if (sy != cert->p)
        throw InternalInvariantBroken(
            detail::describe(r, "reconstruction produced a different idempotent", a));
    return d;
}

inline std::optional<StronglyCleanCert> strongly_clean(const SubsetCache& cache, Idx a) {
    const auto& r = cache.ring();
    const auto& idem = cache.set(SetKind::Idem);
    for (Idx e = 0; e < r.order(); ++e) {
        if (!idem.test(e)) continue;
        Idx q = r.sub(a, e);
        if (r.mul(e, q) != r.mul(q, e)) continue;
        auto qi = quasi_inverse(r, q);
        if (!qi) continue;
        StronglyCleanCert cert{e, q, *qi};
        if (!cert.verify(cache, a))
            throw InternalInvariantBroken(
                detail::describe(r, "strongly clean certificate failed re-verification", a));
        return cert;
    }
    return std::nullopt;
}

inline std::optional<PseudopolarCert> pseudopolar(const SubsetCache& cache, Idx a) {
    const auto& r = cache.ring();
    if (!r.is_unital()) throw RequiresUnity("pseudopolar");
    const auto& units = cache.set(SetKind::Units);
    const auto& jrad = cache.set(SetKind::J);
    ElementSet c2 = comm2(r, a);

    std::optional<Idx> p_found;
    int k_found = 0;
    for (Idx p = 0; p < r.order(); ++p) {
        if (!c2.test(p) || r.mul(p, p) != p) continue;
        if (!units.test(r.add(a, p))) continue;
        Idx ap = r.mul(a, p);
        Idx pw = ap;
        int k = 0;
        for (int kk = 1; kk <= r.order(); ++kk) {
            if (jrad.test(pw)) {
                k = kk;
                break;
            }
            pw = r.mul(pw, ap);
        }
        if (k == 0) continue;
        if (p_found)
            throw AmbiguousInverse(detail::describe(r, "second pseudopolar idempotent", a));
        p_found = p;
        k_found = k;
    }
    if (!p_found) return std::nullopt;
    Idx p = *p_found;
    Idx u = r.add(a, p);
    auto ui = unit_inverse(r, u);
    if (!ui)
        throw InternalInvariantBroken(
            detail::describe(r, "a + p lost its unit inverse between scans", a));
    Idx b = r.mul(*ui, r.sub(*r.unity(), p));

    // Independent uniqueness scan over the pseudo Drazin equations.
    std::optional<Idx> b_scan;
    for (Idx bb = 0; bb < r.order(); ++bb) {
        if (!c2.test(bb)) continue;
        if (r.mul(a, r.mul(bb, bb)) != bb) continue;
        Idx q = r.sub(a, r.mul(r.mul(a, a), bb));
        Idx pw = q;
        bool in_jsharp = false;
        for (int kk = 1; kk <= r.order() && !in_jsharp; ++kk) {
            if (jrad.test(pw)) in_jsharp = true;
            pw = r.mul(pw, q);
        }
        if (!in_jsharp) continue;
        if (b_scan)
            throw AmbiguousInverse(detail::describe(r, "second pseudo Drazin inverse", a));
        b_scan = bb;
    }
    if (!b_scan || *b_scan != b)
        throw InternalInvariantBroken(
            detail::describe(r, "pseudo Drazin formula and scan disagree", a));

    PseudopolarCert cert{p, k_found, b};
    if (!cert.verify(cache, a))
        throw InternalInvariantBroken(
            detail::describe(r, "pseudopolar certificate failed re-verification", a));
    return cert;
}

inline std::optional<StronglyPiRadCleanCert> strongly_pi_rad_clean(const SubsetCache& cache,
                                                                   Idx a) {
    const auto& r = cache.ring();
    if (!r.is_unital()) throw RequiresUnity("strongly_pi_rad_clean");
    const auto& units = cache.set(SetKind::Units);
    const auto& jrad = cache.set(SetKind::J);
    const auto& idem = cache.set(SetKind::Idem);
    for (Idx e = 0; e < r.order(); ++e) {
        if (!idem.test(e)) continue;
        if (r.mul(a, e) != r.mul(e, a)) continue;
        if (!units.test(r.sub(a, e))) continue;
        Idx ae = r.mul(a, e);
        Idx pw = ae;
        for (int n = 1; n <= r.order(); ++n) {
            if (jrad.test(pw)) {
                StronglyPiRadCleanCert cert{e, n};
                if (!cert.verify(cache, a))
                    throw InternalInvariantBroken(detail::describe(
                        r, "strongly pi-rad clean certificate failed re-verification", a));
                return cert;
            }
            pw = r.mul(pw, ae);
        }
    }
    return std::nullopt;
}

inline std::optional<SemiregularCert> semiregular(const SubsetCache& cache, Idx a) {
    const auto& r = cache.ring();
    if (!r.is_unital()) throw RequiresUnity("semiregular");
    const auto& jrad = cache.set(SetKind::J);
    for (Idx b = 0; b < r.order(); ++b) {
        if (r.mul(r.mul(b, a), b) != b) continue;
        if (!jrad.test(r.sub(a, r.mul(r.mul(a, b), a)))) continue;
        SemiregularCert cert{b};
        if (!cert.verify(cache, a))
            throw InternalInvariantBroken(
                detail::describe(r, "semiregular certificate failed re-verification", a));
        return cert;
    }
    return std::nullopt;
}

inline std::optional<UnitalQuasipolarCert> unital_quasipolar(const SubsetCache& cache, Idx a) {
    const auto& r = cache.ring();
    if (!r.is_unital()) throw RequiresUnity("unital_quasipolar");
    const auto& units = cache.set(SetKind::Units);
    const auto& qnil = cache.set(SetKind::Qnil);
    ElementSet c2 = comm2(r, a);
    std::optional<Idx> found;
    for (Idx p = 0; p < r.order(); ++p) {
        if (!c2.test(p) || r.mul(p, p) != p) continue;
        if (!units.test(r.add(a, p))) continue;
        if (!qnil.test(r.mul(a, p))) continue;
        if (found)
            throw AmbiguousInverse(detail::describe(r, "second unital spectral idempotent", a));
        found = p;
    }
    if (!found) return std::nullopt;
    UnitalQuasipolarCert cert{*found};
    if (!cert.verify(cache, a))
        throw InternalInvariantBroken(
            detail::describe(r, "unital quasipolar certificate failed re-verification", a));
    return cert;
}

// ---------------------------------------------------------------------------
// Certificate re-verification (search-free, direct table evaluation)
// ---------------------------------------------------------------------------

inline bool StronglyRegularCert::verify(const SubsetCache& cache, Idx a) const {
    const auto& r = cache.ring();
    if (r.mul(r.mul(a, b), a) != a) return false;
    if (r.mul(a, b) != r.mul(b, a)) return false;
    if (b_in_comm2 && !comm2(r, a).test(b)) return false;
    return true;
}

inline bool StronglyPiRegularCert::verify(const SubsetCache& cache, Idx a) const {
    const auto& r = cache.ring();
    if (n < 1 || n > r.order()) return false;
    if (r.mul(a, x) != r.mul(x, a)) return false;
    Idx an = r.power(a, n);
    if (an != r.mul(r.mul(an, a), x)) return false;
    ElementSet c2 = comm2(r, a);
    if (!c2.test(b) || !c2.test(p)) return false;
    if (r.mul(a, r.mul(b, b)) != b) return false;
    if (!cache.contains(SetKind::Nil, r.sub(r.mul(r.mul(a, a), b), a))) return false;
    if (r.mul(p, p) != p || r.mul(a, b) != p) return false;
    if (!cache.contains(SetKind::Nil, r.sub(a, r.mul(a, p)))) return false;
    if (!cache.contains(SetKind::Q, r.add(a, p))) return false;
    return true;
}

inline bool QuasipolarCert::verify(const SubsetCache& cache, Idx a) const {
    const auto& rg = cache.ring();
    ElementSet c2 = comm2(rg, a);
    if (rg.mul(p, p) != p || !c2.test(p)) return false;
    Idx q = rg.add(a, p);
    if (rg.circle(q, r) != rg.zero() || rg.circle(r, q) != rg.zero()) return false;
    if (!cache.contains(SetKind::QN, rg.sub(a, rg.mul(a, p)))) return false;
    if (b != rg.sub(rg.mul(r, p), p)) return false;
    if (!c2.test(b)) return false;
    if (rg.mul(a, rg.mul(b, b)) != b) return false;
    if (!cache.contains(SetKind::QN, rg.sub(rg.mul(rg.mul(a, a), b), a))) return false;
    if (rg.mul(a, b) != p) return false;
    return true;
}

inline bool StronglyCleanCert::verify(const SubsetCache& cache, Idx a) const {
    const auto& r = cache.ring();
    if (r.mul(e, e) != e) return false;
    if (r.add(e, q) != a) return false;
    if (r.mul(e, q) != r.mul(q, e)) return false;
    if (r.circle(q, q_inv) != r.zero() || r.circle(q_inv, q) != r.zero()) return false;
    return true;
}

inline bool PseudopolarCert::verify(const SubsetCache& cache, Idx a) const {
    const auto& r = cache.ring();
    if (!r.is_unital()) return false;
    if (k < 1 || k > r.order()) return false;
    ElementSet c2 = comm2(r, a);
    if (r.mul(p, p) != p || !c2.test(p)) return false;
    if (!cache.contains(SetKind::Units, r.add(a, p))) return false;
    Idx ap = r.mul(a, p);
    if (!cache.contains(SetKind::J, r.power(ap, k))) return false;
    if (!c2.test(b)) return false;
    if (r.mul(a, r.mul(b, b)) != b) return false;
    Idx q = r.sub(a, r.mul(r.mul(a, a), b));
    if (q != ap) return false;
    if (!cache.contains(SetKind::J, r.power(q, k))) return false;
    if (r.sub(*r.unity(), r.mul(a, b)) != p) return false;
    return true;
}

inline bool StronglyPiRadCleanCert::verify(const SubsetCache& cache, Idx a) const {
    const auto& r = cache.ring();
    if (!r.is_unital()) return false;
    if (n < 1 || n > r.order()) return false;
    if (r.mul(e, e) != e) return false;
    if (r.mul(a, e) != r.mul(e, a)) return false;
    if (!cache.contains(SetKind::Units, r.sub(a, e))) return false;
    if (!cache.contains(SetKind::J, r.mul(r.power(a, n), e))) return false;
    return true;
}

inline bool SemiregularCert::verify(const SubsetCache& cache, Idx a) const {
    const auto& r = cache.ring();
    if (!r.is_unital()) return false;
    if (r.mul(r.mul(b, a), b) != b) return false;
    if (!cache.contains(SetKind::J, r.sub(a, r.mul(r.mul(a, b), a)))) return false;
    return true;
}

inline bool UnitalQuasipolarCert::verify(const SubsetCache& cache, Idx a) const {
    const auto& r = cache.ring();
    if (!r.is_unital()) return false;
    if (r.mul(p, p) != p || !comm2(r, a).test(p)) return false;
    if (!cache.contains(SetKind::Units, r.add(a, p))) return false;
    if (!cache.contains(SetKind::Qnil, r.mul(a, p))) return false;
    return true;
}

inline bool SprDecomposition::verify(const SubsetCache& cache, Idx a) const {
    const auto& r = cache.ring();
    if (r.add(s, n) != a) return false;
    if (!strongly_regular(cache, s)) return false;
    if (!nilpotency_index(r, n)) return false;
    if (r.mul(s, n) != r.zero() || r.mul(n, s) != r.zero()) return false;
    if (r.mul(a, c) != r.mul(c, a)) return false;
    if (r.mul(r.mul(c, c), a) != c) return false;
    return true;
}

inline bool QpDecomposition::verify(const SubsetCache& cache, Idx a) const {
    const auto& r = cache.ring();
    if (r.add(s, q) != a) return false;
    auto sr = strongly_regular(cache, s);
    if (!sr) return false;
    if (!comm2(r, a).test(s)) return false;
    if (!cache.contains(SetKind::QN, q)) return false;
    if (r.mul(s, q) != r.zero() || r.mul(q, s) != r.zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Payload rendering (key=value tokens, stable order)
// ---------------------------------------------------------------------------

inline std::string payload(const StronglyRegularCert& c) {
    std::ostringstream os;
    os << "b=" << c.b << " bc2=" << (c.b_in_comm2 ? 1 : 0);
    return os.str();
}
inline std::string payload(const StronglyPiRegularCert& c) {
    std::ostringstream os;
    os << "n=" << c.n << " x=" << c.x << " b=" << c.b << " p=" << c.p;
    return os.str();
}
inline std::string payload(const QuasipolarCert& c) {
    std::ostringstream os;
    os << "p=" << c.p << " r=" << c.r << " b=" << c.b;
    return os.str();
}
inline std::string payload(const StronglyCleanCert& c) {
    std::ostringstream os;
    os << "e=" << c.e << " q=" << c.q << " qinv=" << c.q_inv;
    return os.str();
}
inline std::string payload(const PseudopolarCert& c) {
    std::ostringstream os;
    os << "p=" << c.p << " k=" << c.k << " b=" << c.b;
    return os.str();
}
inline std::string payload(const StronglyPiRadCleanCert& c) {
    std::ostringstream os;
    os << "e=" << c.e << " n=" << c.n;
    return os.str();
}
inline std::string payload(const SemiregularCert& c) {
    std::ostringstream os;
    os << "b=" << c.b;
    return os.str();
}
inline std::string payload(const UnitalQuasipolarCert& c) {
    std::ostringstream os;
    os << "p=" << c.p;
    return os.str();
}

} // namespace qpring
