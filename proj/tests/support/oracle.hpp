#pragma once

// Independent reference computations for cross-checking the library.
// Everything here works on raw nested-vector Cayley tables and deliberately
// shares no code with the headers under test.

#include <algorithm>
#include <optional>
#include <vector>

namespace oracle {

struct Table {
    int n = 0;
    std::vector<std::vector<int>> add, mul;
    int zero = -1;
    int unity = -1; // -1 when absent
};

inline void finish(Table& t) {
    for (int z = 0; z < t.n; ++z) {
        bool ok = true;
        for (int x = 0; x < t.n && ok; ++x) ok = t.add[z][x] == x && t.add[x][z] == x;
        if (ok) {
            t.zero = z;
            break;
        }
    }
    for (int u = 0; u < t.n; ++u) {
        bool ok = true;
        for (int x = 0; x < t.n && ok; ++x) ok = t.mul[u][x] == x && t.mul[x][u] == x;
        if (ok) {
            t.unity = u;
            break;
        }
    }
}

inline Table zmod(int n) {
    Table t;
    t.n = n;
    t.add.assign(n, std::vector<int>(n));
    t.mul.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            t.add[i][j] = (i + j) % n;
            t.mul[i][j] = (i * j) % n;
        }
    finish(t);
    return t;
}

// {0, 2, 4, 6} inside Z8, relabeled 0..3.
inline Table even_mod8() {
    Table t;
    t.n = 4;
    t.add.assign(4, std::vector<int>(4));
    t.mul.assign(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            t.add[i][j] = ((2 * i + 2 * j) % 8) / 2;
            t.mul[i][j] = ((2 * i * 2 * j) % 8) / 2;
        }
    finish(t);
    return t;
}

inline int neg(const Table& t, int a) {
    for (int b = 0; b < t.n; ++b)
        if (t.add[a][b] == t.zero) return b;
    return -1;
}

inline int sub(const Table& t, int a, int b) { return t.add[a][neg(t, b)]; }

inline int circle(const Table& t, int a, int b) { return sub(t, t.add[a][b], t.mul[a][b]); }

inline std::optional<int> quasi_inverse(const Table& t, int a) {
    for (int c = 0; c < t.n; ++c)
        if (circle(t, a, c) == t.zero && circle(t, c, a) == t.zero) return c;
    return std::nullopt;
}

inline bool nilpotent(const Table& t, int a) {
    int x = a;
    for (int k = 1; k <= t.n; ++k) {
        if (x == t.zero) return true;
        x = t.mul[x][a];
    }
    return false;
}

inline std::vector<int> set_q(const Table& t) {
    std::vector<int> s;
    for (int a = 0; a < t.n; ++a)
        if (quasi_inverse(t, a)) s.push_back(a);
    return s;
}

inline std::vector<int> set_qn(const Table& t) {
    std::vector<int> s;
    for (int a = 0; a < t.n; ++a) {
        bool ok = true;
        for (int x = 0; x < t.n && ok; ++x) {
            if (t.mul[a][x] != t.mul[x][a]) continue;
            ok = quasi_inverse(t, t.mul[a][x]).has_value();
        }
        if (ok) s.push_back(a);
    }
    return s;
}

inline std::vector<int> set_nil(const Table& t) {
    std::vector<int> s;
    for (int a = 0; a < t.n; ++a)
        if (nilpotent(t, a)) s.push_back(a);
    return s;
}

inline std::vector<int> set_idem(const Table& t) {
    std::vector<int> s;
    for (int a = 0; a < t.n; ++a)
        if (t.mul[a][a] == a) s.push_back(a);
    return s;
}

inline std::vector<int> set_units(const Table& t) {
    std::vector<int> s;
    if (t.unity < 0) return s;
    for (int a = 0; a < t.n; ++a)
        for (int b = 0; b < t.n; ++b)
            if (t.mul[a][b] == t.unity && t.mul[b][a] == t.unity) {
                s.push_back(a);
                break;
            }
    return s;
}

// Additive closure of {ka} + Ia + aI + IaI.
inline std::vector<int> ideal_of(const Table& t, int a) {
    std::vector<bool> gen(t.n, false);
    {
        int x = a;
        for (int k = 1; k <= t.n; ++k) {
            gen[x] = true;
            x = t.add[x][a];
        }
    }
    for (int x = 0; x < t.n; ++x) {
        gen[t.mul[x][a]] = true;
        gen[t.mul[a][x]] = true;
        for (int y = 0; y < t.n; ++y) gen[t.mul[t.mul[x][a]][y]] = true;
    }
    std::vector<bool> in(t.n, false);
    in[t.zero] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < t.n; ++x) {
            if (!in[x]) continue;
            for (int g = 0; g < t.n; ++g) {
                if (!gen[g]) continue;
                int s = t.add[x][g];
                if (!in[s]) {
                    in[s] = true;
                    changed = true;
                }
            }
        }
    }
    std::vector<int> out;
    for (int x = 0; x < t.n; ++x)
        if (in[x]) out.push_back(x);
    return out;
}

inline std::vector<int> set_j(const Table& t) {
    std::vector<int> s;
    for (int a = 0; a < t.n; ++a) {
        bool ok = true;
        for (int x : ideal_of(t, a))
            if (!quasi_inverse(t, x)) {
                ok = false;
                break;
            }
        if (ok) s.push_back(a);
    }
    return s;
}

inline std::vector<int> comm(const Table& t, int a) {
    std::vector<int> s;
    for (int x = 0; x < t.n; ++x)
        if (t.mul[x][a] == t.mul[a][x]) s.push_back(x);
    return s;
}

inline std::vector<int> comm2(const Table& t, int a) {
    std::vector<int> cm = comm(t, a), s;
    for (int x = 0; x < t.n; ++x) {
        bool ok = true;
        for (int y : cm)
            if (t.mul[x][y] != t.mul[y][x]) {
                ok = false;
                break;
            }
        if (ok) s.push_back(x);
    }
    return s;
}

// Generalized Drazin inverses of a: all b in comm2(a) with ab^2 = b and
// a^2 b - a quasinilpotent.
inline std::vector<int> gdrazin_candidates(const Table& t, int a) {
    std::vector<int> qn = set_qn(t), out;
    auto in_qn = [&](int x) { return std::find(qn.begin(), qn.end(), x) != qn.end(); };
    for (int b : comm2(t, a)) {
        if (t.mul[a][t.mul[b][b]] != b) continue;
        if (!in_qn(sub(t, t.mul[t.mul[a][a]][b], a))) continue;
        out.push_back(b);
    }
    return out;
}

} // namespace oracle
