#pragma once

// Backtracking ring-isomorphism search for small orders. The map is built
// element by element; each tentative assignment is checked against every
// already-determined sum and product, and a completed map is verified in
// full before being returned.

#include <algorithm>
#include <functional>
#include <optional>
#include <tuple>
#include <vector>

#include "qpring/ring.hpp"

namespace qpring {

inline std::optional<std::vector<Idx>> find_isomorphism(const FiniteGeneralRing& a,
                                                        const FiniteGeneralRing& b,
                                                        Idx max_order = 16) {
    if (a.order() > max_order || b.order() > max_order)
        throw FeasibilityExceeded(std::max(a.order(), b.order()), max_order);
    if (a.order() != b.order()) return std::nullopt;
    if (a.is_unital() != b.is_unital()) return std::nullopt;
    const Idx n = a.order();

    using Inv = std::tuple<int, bool, int>; // additive order, idempotent, nilpotency index
    auto invariant = [](const FiniteGeneralRing& r, Idx x) {
        return Inv{r.additive_order(x), r.mul(x, x) == x, nilpotency_index(r, x).value_or(0)};
    };
    std::vector<Inv> inv_a(n), inv_b(n);
    for (Idx i = 0; i < n; ++i) {
        inv_a[i] = invariant(a, i);
        inv_b[i] = invariant(b, i);
    }
    {
        auto sa = inv_a, sb = inv_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    constexpr Idx kUnset = static_cast<Idx>(-1);
    std::vector<Idx> f(n, kUnset);
    std::vector<bool> used(n, false);

    auto assign = [&](Idx x, Idx y) {
        if (f[x] != kUnset) return f[x] == y;
        if (used[y] || inv_a[x] != inv_b[y]) return false;
        f[x] = y;
        used[y] = true;
        return true;
    };
    if (!assign(a.zero(), b.zero())) return std::nullopt;
    if (a.is_unital() && !assign(*a.unity(), *b.unity())) return std::nullopt;

    auto consistent = [&](Idx x) {
        for (Idx y = 0; y < n; ++y) {
            if (f[y] == kUnset) continue;
            Idx s = a.add(x, y);
            if (f[s] != kUnset && f[s] != b.add(f[x], f[y])) return false;
            s = a.add(y, x);
            if (f[s] != kUnset && f[s] != b.add(f[y], f[x])) return false;
            s = a.mul(x, y);
            if (f[s] != kUnset && f[s] != b.mul(f[x], f[y])) return false;
            s = a.mul(y, x);
            if (f[s] != kUnset && f[s] != b.mul(f[y], f[x])) return false;
        }
        return true;
    };
    auto complete = [&] {
        for (Idx x = 0; x < n; ++x)
            for (Idx y = 0; y < n; ++y) {
                if (f[a.add(x, y)] != b.add(f[x], f[y])) return false;
                if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
            }
        return true;
    };

    std::function<bool(Idx)> search = [&](Idx pos) {
        while (pos < n && f[pos] != kUnset) ++pos;
        if (pos == n) return complete();
        for (Idx y = 0; y < n; ++y) {
            if (used[y] || inv_a[pos] != inv_b[y]) continue;
            f[pos] = y;
            used[y] = true;
            if (consistent(pos) && search(static_cast<Idx>(pos + 1))) return true;
            f[pos] = kUnset;
            used[y] = false;
        }
        return false;
    };
    if (!search(0)) return std::nullopt;
    return f;
}

} // namespace qpring
