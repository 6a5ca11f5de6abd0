#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "hcmod/cyclotomic.hpp"
#include "hcmod/finite_group.hpp"

namespace hcmod {

namespace detail {

[[nodiscard]] inline long long addmod(long long a, long long b, long long p) { return (a + b) % p; }
[[nodiscard]] inline long long submod(long long a, long long b, long long p) { return ((a - b) % p + p) % p; }
[[nodiscard]] inline long long mulmod(long long a, long long b, long long p) {
    return static_cast<long long>(static_cast<__int128>(a) * b % p);
}

[[nodiscard]] inline long long powmod(long long base, long long e, long long p) {
    long long acc = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (e > 0) {
        if (e & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return acc;
}

[[nodiscard]] inline long long invmod(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw internal_error("division by zero in modular arithmetic");
    return powmod(a, p - 2, p);
}

[[nodiscard]] inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Smallest prime p with p = 1 (mod m), p > 2*sqrt(order), and p not dividing
// the group order. Such a prime keeps modular character data unambiguous.
[[nodiscard]] inline long long choose_prime(int m, int order) {
    long long bound = 2 * static_cast<long long>(std::sqrt(static_cast<double>(order))) + 2;
    bound = std::max<long long>(bound, m + 1);
    bound = std::max<long long>(bound, 3);
    long long p = ((bound - 1 + m - 1) / m) * m + 1; // first value >= bound that is 1 mod m
    while (!is_prime(p) || order % p == 0) p += m;
    return p;
}

// Fixed primitive m-th root of unity in F_p: the smallest generator of F_p*
// raised to (p-1)/m. Using one fixed choice everywhere keeps the modular and
// cyclotomic pictures consistent.
[[nodiscard]] inline long long primitive_mth_root(long long p, int m) {
    std::vector<long long> prime_factors;
    long long n = p - 1;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            prime_factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) prime_factors.push_back(n);
    for (long long g = 2; g < p; ++g) {
        bool generates = true;
        for (long long q : prime_factors)
            if (powmod(g, (p - 1) / q, p) == 1) {
                generates = false;
                break;
            }
        if (generates) return powmod(g, (p - 1) / m, p);
    }
    throw internal_error("no generator of the prime field");
}

using ModMatrix = std::vector<std::vector<long long>>;

// Row-reduce in place; returns pivot columns. Rows end up normalized with
// leading ones, zero rows removed.
inline std::vector<int> rref_modp(ModMatrix& rows, long long p) {
    std::vector<int> pivots;
    size_t rank = 0;
    const size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        long long scale = invmod(rows[rank][col], p);
        for (size_t c = col; c < ncols; ++c) rows[rank][c] = mulmod(rows[rank][c], scale, p);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            long long f = rows[r][col];
            for (size_t c = col; c < ncols; ++c) rows[r][c] = submod(rows[r][c], mulmod(f, rows[rank][c], p), p);
        }
        pivots.push_back(static_cast<int>(col));
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

// Kernel basis of a square matrix over F_p.
[[nodiscard]] inline ModMatrix kernel_modp(ModMatrix a, long long p) {
    const size_t n = a.size();
    std::vector<int> pivots = rref_modp(a, p);
    std::vector<char> is_pivot(n, 0);
    for (int c : pivots) is_pivot[c] = 1;
    ModMatrix basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<long long> v(n, 0);
        v[free_col] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = submod(0, a[r][free_col], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Characteristic polynomial mod p (ascending coefficients, monic) via
// similarity reduction to Hessenberg form and the standard determinant
// recurrence on leading principal minors.
[[nodiscard]] inline std::vector<long long> charpoly_modp(ModMatrix a, long long p) {
    const int n = static_cast<int>(a.size());
    for (int j = 0; j + 2 < n; ++j) {
        int piv = -1;
        for (int r = j + 1; r < n && piv < 0; ++r)
            if (a[r][j] != 0) piv = r;
        if (piv < 0) continue;
        if (piv != j + 1) {
            std::swap(a[piv], a[j + 1]);
            for (int r = 0; r < n; ++r) std::swap(a[r][piv], a[r][j + 1]);
        }
        long long inv = invmod(a[j + 1][j], p);
        for (int r = j + 2; r < n; ++r) {
            if (a[r][j] == 0) continue;
            long long f = mulmod(a[r][j], inv, p);
            for (int c = 0; c < n; ++c) a[r][c] = submod(a[r][c], mulmod(f, a[j + 1][c], p), p);
            for (int r2 = 0; r2 < n; ++r2) a[r2][j + 1] = addmod(a[r2][j + 1], mulmod(f, a[r2][r], p), p);
        }
    }
    std::vector<std::vector<long long>> minors(n + 1);
    minors[0] = {1};
    for (int i = 1; i <= n; ++i) {
        std::vector<long long> cur(i + 1, 0);
        // (x - a[i-1][i-1]) * minors[i-1]
        for (int c = 0; c < i; ++c) {
            cur[c + 1] = addmod(cur[c + 1], minors[i - 1][c], p);
            cur[c] = submod(cur[c], mulmod(a[i - 1][i - 1], minors[i - 1][c], p), p);
        }
        long long subdiag = 1;
        for (int t = 1; t < i; ++t) {
            subdiag = mulmod(subdiag, a[i - t][i - t - 1], p);
            if (subdiag == 0) break;
            long long coeff = mulmod(subdiag, a[i - 1 - t][i - 1], p);
            if (coeff == 0) continue;
            for (int c = 0; c <= i - 1 - t; ++c) cur[c] = submod(cur[c], mulmod(coeff, minors[i - 1 - t][c], p), p);
        }
        minors[i] = std::move(cur);
    }
    return minors[n];
}

} // namespace detail

// Exact character table of a finite group. Conjugacy classes appear in the
// deterministic order of conjugacy_classes(); rows are sorted by degree, then
// by values. All values are exact cyclotomic integers.
struct CharacterTable {
    FiniteGroup group;
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;       // element id -> class index
    std::vector<int> representatives; // smallest element of each class
    std::vector<long long> class_sizes;
    std::vector<int> inverse_class;  // class index of the inverses
    int exponent = 1;
    std::vector<int> degrees;
    std::vector<std::vector<Cyclotomic>> values; // values[row][class]

    [[nodiscard]] int class_count() const { return static_cast<int>(classes.size()); }
    [[nodiscard]] const Cyclotomic& value_at(int row, int element) const {
        return values[row][class_of[element]];
    }
};

namespace detail {

// a_{j,*,t} row of the class-algebra structure constants: entry (t, i) counts
// pairs (u, x) in C_j x C_i with u*x equal to the representative of C_t.
[[nodiscard]] inline ModMatrix class_matrix(const FiniteGroup& g, const std::vector<std::vector<int>>& classes,
                                            const std::vector<int>& class_of, const std::vector<int>& reps, int j,
                                            long long p) {
    const int k = static_cast<int>(classes.size());
    ModMatrix m(k, std::vector<long long>(k, 0));
    for (int t = 0; t < k; ++t) {
        for (int u : classes[j]) {
            int i = class_of[g.mul(g.inverse(u), reps[t])];
            m[t][i] = addmod(m[t][i], 1, p);
        }
    }
    return m;
}

struct Subspace {
    ModMatrix basis; // RREF rows over F_p, each of length class_count
    std::vector<int> pivots;
};

} // namespace detail

[[nodiscard]] inline CharacterTable character_table(const FiniteGroup& g) {
    using namespace detail;
    CharacterTable t{g, conjugacy_classes(g), {}, {}, {}, {}, 1, {}, {}};
    const int k = t.class_count();
    t.class_of.assign(g.order(), -1);
    for (int c = 0; c < k; ++c)
        for (int x : t.classes[c]) t.class_of[x] = c;
    for (int c = 0; c < k; ++c) {
        t.representatives.push_back(t.classes[c].front());
        t.class_sizes.push_back(static_cast<long long>(t.classes[c].size()));
    }
    for (int c = 0; c < k; ++c) t.inverse_class.push_back(t.class_of[g.inverse(t.representatives[c])]);
    const int m = g.exponent();
    t.exponent = m;

    const long long p = choose_prime(m, g.order());
    const long long zp = primitive_mth_root(p, m);

    // Split the class algebra over F_p into common eigenlines of the class
    // matrices.
    std::vector<Subspace> spaces;
    {
        Subspace full;
        full.basis.assign(k, std::vector<long long>(k, 0));
        for (int i = 0; i < k; ++i) {
            full.basis[i][i] = 1;
            full.pivots.push_back(i);
        }
        spaces.push_back(std::move(full));
    }
    for (int j = 1; j < k; ++j) {
        bool all_lines = std::all_of(spaces.begin(), spaces.end(),
                                     [](const Subspace& s) { return s.basis.size() == 1; });
        if (all_lines) break;
        ModMatrix mj = class_matrix(g, t.classes, t.class_of, t.representatives, j, p);
        std::vector<Subspace> next;
        for (Subspace& s : spaces) {
            const int d = static_cast<int>(s.basis.size());
            if (d == 1) {
                next.push_back(std::move(s));
                continue;
            }
            // Restrict mj to the invariant subspace in its RREF coordinates.
            ModMatrix restr(d, std::vector<long long>(d, 0));
            for (int r = 0; r < d; ++r) {
                std::vector<long long> w(k, 0);
                for (int row = 0; row < k; ++row) {
                    long long acc = 0;
                    for (int col = 0; col < k; ++col)
                        if (s.basis[r][col] != 0) acc = addmod(acc, mulmod(mj[row][col], s.basis[r][col], p), p);
                    w[row] = acc;
                }
                for (int c = 0; c < d; ++c) restr[r][c] = w[s.pivots[c]];
                for (int col = 0; col < k; ++col) {
                    long long acc = 0;
                    for (int c = 0; c < d; ++c) acc = addmod(acc, mulmod(restr[r][c], s.basis[c][col], p), p);
                    if (acc != w[col]) throw internal_error("class matrix does not preserve an eigenspace");
                }
            }
            // The restriction acts on row vectors v as v * restr^T; transpose
            // so eigen-analysis below acts on columns.
            ModMatrix a(d, std::vector<long long>(d));
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) a[r][c] = restr[c][r];

            std::vector<long long> cp = charpoly_modp(a, p);
            int split_total = 0;
            for (long long lam = 0; lam < p; ++lam) {
                long long val = 0;
                for (int c = static_cast<int>(cp.size()) - 1; c >= 0; --c) val = addmod(mulmod(val, lam, p), cp[c], p);
                if (val != 0) continue;
                ModMatrix shifted = a;
                for (int i = 0; i < d; ++i) shifted[i][i] = submod(shifted[i][i], lam, p);
                ModMatrix ker = kernel_modp(shifted, p);
                if (ker.empty()) continue;
                Subspace sub;
                for (const auto& coords : ker) {
                    std::vector<long long> v(k, 0);
                    for (int c = 0; c < d; ++c)
                        if (coords[c] != 0)
                            for (int col = 0; col < k; ++col)
                                v[col] = addmod(v[col], mulmod(coords[c], s.basis[c][col], p), p);
                    sub.basis.push_back(std::move(v));
                }
                sub.pivots = rref_modp(sub.basis, p);
                split_total += static_cast<int>(sub.basis.size());
                next.push_back(std::move(sub));
            }
            if (split_total != d) throw internal_error("class matrix failed to split an eigenspace completely");
        }
        spaces = std::move(next);
    }
    for (const Subspace& s : spaces)
        if (s.basis.size() != 1) throw internal_error("class algebra did not split into lines");
    if (static_cast<int>(spaces.size()) != k) throw internal_error("wrong number of eigenlines");

    // Each eigenline determines one irreducible character: the line is spanned
    // by the central idempotent, whose class coordinates are proportional to
    // the character values on inverse classes.
    const long long sqrt_bound = static_cast<long long>(std::sqrt(static_cast<double>(g.order()))) + 1;
    std::vector<std::pair<int, std::vector<Cyclotomic>>> rows;
    for (const Subspace& s : spaces) {
        const std::vector<long long>& v = s.basis[0];
        long long norm = 0;
        for (int i = 0; i < k; ++i)
            norm = addmod(norm, mulmod(t.class_sizes[i] % p, mulmod(v[i], v[t.inverse_class[i]], p), p), p);
        if (norm == 0) throw internal_error("degenerate eigenline norm");
        long long tau_sq = mulmod(g.order() % p, invmod(norm, p), p);
        long long tau = 0;
        int degree = 0;
        for (long long cand = 1; cand < p; ++cand) {
            if (mulmod(cand, cand, p) != tau_sq) continue;
            long long d0 = mulmod(cand, v[0], p);
            if (d0 >= 1 && d0 <= sqrt_bound && d0 * d0 <= g.order()) {
                tau = cand;
                degree = static_cast<int>(d0);
                break;
            }
        }
        if (tau == 0) throw internal_error("could not normalize an eigenline to a character degree");

        std::vector<long long> chi_modp(k);
        for (int i = 0; i < k; ++i) chi_modp[i] = mulmod(tau, v[t.inverse_class[i]], p);

        // Lift each value from F_p to the cyclotomic field: recover the
        // eigenvalue multiplicities of a representative by a discrete Fourier
        // inversion over the modular m-th roots.
        const long long m_inv = invmod(m, p);
        const long long zp_inv = invmod(zp, p);
        std::vector<Cyclotomic> row;
        row.reserve(k);
        for (int j = 0; j < k; ++j) {
            Cyclotomic val = Cyclotomic::zero(m);
            long long mult_sum = 0;
            for (int sdx = 0; sdx < m; ++sdx) {
                long long acc = 0;
                for (int e = 0; e < m; ++e) {
                    long long c_te = chi_modp[t.class_of[g.power(t.representatives[j], e)]];
                    acc = addmod(acc, mulmod(c_te, powmod(zp_inv, static_cast<long long>(sdx) * e, p), p), p);
                }
                long long mult = mulmod(m_inv, acc, p);
                if (mult > degree) throw internal_error("eigenvalue multiplicity exceeds the degree");
                mult_sum += mult;
                if (mult != 0) val += Cyclotomic::zeta(m, sdx) * Rational(mult);
            }
            if (mult_sum != degree) throw internal_error("eigenvalue multiplicities do not sum to the degree");
            row.push_back(std::move(val));
        }
        rows.emplace_back(degree, std::move(row));
    }

    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        for (size_t i = 0; i < a.second.size(); ++i) {
            auto c = a.second[i] <=> b.second[i];
            if (c != 0) return c < 0;
        }
        return false;
    });
    for (size_t r = 1; r < rows.size(); ++r)
        if (rows[r] == rows[r - 1]) throw internal_error("duplicate character rows");

    long long degree_sq_sum = 0;
    for (auto& [deg, row] : rows) {
        if (row[0] != Cyclotomic::from_rational(m, Rational(deg)))
            throw internal_error("identity-class value differs from the degree");
        degree_sq_sum += static_cast<long long>(deg) * deg;
        t.degrees.push_back(deg);
        t.values.push_back(std::move(row));
    }
    if (degree_sq_sum != g.order()) throw internal_error("degree squares do not sum to the group order");

    // Cheap built-in cross-check on small groups; the test suite repeats it
    // exhaustively for everything it constructs.
    if (g.order() <= 64) {
        for (int r1 = 0; r1 < k; ++r1)
            for (int r2 = r1; r2 < k; ++r2) {
                Cyclotomic dot = Cyclotomic::zero(m);
                for (int c = 0; c < k; ++c)
                    dot += Rational(t.class_sizes[c]) * t.values[r1][c] * t.values[r2][t.inverse_class[c]];
                Cyclotomic expect = Cyclotomic::from_rational(m, Rational(r1 == r2 ? g.order() : 0));
                if (dot != expect) throw internal_error("row orthogonality failed");
            }
    }
    return t;
}

// The scalar by which a central element acts in the given irreducible row:
// chi(z)/chi(1), verified to be a root of unity of the element's order.
[[nodiscard]] inline Cyclotomic central_scalar(const CharacterTable& t, int row, int z) {
    if (row < 0 || row >= t.class_count()) throw invalid_input("character row out of range");
    if (!is_central(t.group, z)) throw invalid_input("central scalar of a non-central element");
    Cyclotomic s = t.values[row][t.class_of[z]] * Rational(1, t.degrees[row]);
    if (s.pow(t.group.element_order(z)) != Cyclotomic::one(t.exponent))
        throw internal_error("central scalar is not a root of unity of the expected order");
    return s;
}

} // namespace hcmod
