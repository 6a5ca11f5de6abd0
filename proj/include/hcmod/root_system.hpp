#pragma once

// Exact root-system arithmetic for the exceptional types E6/E7/E8: Cartan
// data in the Bourbaki numbering, weight-at-coweight evaluation, orders of
// exponentiated coweights in the simply connected cover, and the queryable
// catalog of exceptional boundary orbits with their component-group data.

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hcmod/rational.hpp"

namespace hcmod {

enum class ExceptionalType { E6, E7, E8 };

[[nodiscard]] inline std::string to_string(ExceptionalType t) {
    switch (t) {
        case ExceptionalType::E6: return "E6";
        case ExceptionalType::E7: return "E7";
        case ExceptionalType::E8: return "E8";
    }
    throw internal_error("unhandled exceptional type");
}

[[nodiscard]] inline ExceptionalType parse_exceptional_type(const std::string& s) {
    if (s == "E6") return ExceptionalType::E6;
    if (s == "E7") return ExceptionalType::E7;
    if (s == "E8") return ExceptionalType::E8;
    throw invalid_input("unknown root-system type '" + s + "'");
}

struct RootSystem {
    ExceptionalType type;
    int rank;
    std::vector<std::vector<int>> cartan; // cartan[i][j] = pairing of alpha_{i+1} with coroot j+1
};

namespace detail {

// Exact determinant by fraction-free Gaussian elimination over rationals.
[[nodiscard]] inline Rational matrix_determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == Rational(0)) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == Rational(0)) continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - f * m[col][c];
        }
    }
    return det;
}

// Solve M x = rhs exactly by Gauss-Jordan elimination over rationals.
[[nodiscard]] inline std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> m,
                                                        std::vector<Rational> rhs) {
    const std::size_t n = m.size();
    if (rhs.size() != n) throw internal_error("linear system dimensions disagree");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == Rational(0)) ++pivot;
        if (pivot == n) throw internal_error("singular matrix in linear solve");
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            std::swap(rhs[pivot], rhs[col]);
        }
        const Rational inv = Rational(1) / m[col][col];
        for (std::size_t c = col; c < n; ++c) m[col][c] = m[col][c] * inv;
        rhs[col] = rhs[col] * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == Rational(0)) continue;
            const Rational f = m[r][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - f * m[col][c];
            rhs[r] = rhs[r] - f * rhs[col];
        }
    }
    return rhs;
}

} // namespace detail

// The simple-root diagram: a chain 1-3-4-5-...-rank with node 2 attached to
// node 4.  The construction self-checks the determinant (3, 2, 1).
[[nodiscard]] inline RootSystem root_system(ExceptionalType t) {
    const int rank = t == ExceptionalType::E6 ? 6 : t == ExceptionalType::E7 ? 7 : 8;
    std::vector<std::pair<int, int>> edges = {{1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}};
    if (rank >= 7) edges.emplace_back(6, 7);
    if (rank >= 8) edges.emplace_back(7, 8);

    std::vector<std::vector<int>> cartan(static_cast<std::size_t>(rank),
                                         std::vector<int>(static_cast<std::size_t>(rank), 0));
    for (int i = 0; i < rank; ++i) cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    for (const auto& [a, b] : edges) {
        cartan[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = -1;
        cartan[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = -1;
    }

    std::vector<std::vector<Rational>> rat(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            rat[static_cast<std::size_t>(i)].emplace_back(cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    const Rational det = detail::matrix_determinant(rat);
    const Rational expected(rank == 6 ? 3 : rank == 7 ? 2 : 1);
    if (det != expected) throw internal_error("Cartan determinant self-check failed");

    return RootSystem{t, rank, std::move(cartan)};
}

// A weight written in the simple-root basis alpha_1..alpha_rank.
struct WeightVector {
    std::vector<Rational> alpha_coords;
};

// A coweight written in the coroot basis alpha^v_1..alpha^v_rank.  (Data
// sources state these tuples as coprime integers in this basis.)
struct CoweightVector {
    std::vector<Rational> coroot_coords;
};

// Coordinates of the same coweight in the fundamental-coweight basis, where
// the pairing with simple roots becomes the Kronecker delta: the Cartan
// matrix applied to the coroot coordinates.
[[nodiscard]] inline std::vector<Rational> coweight_basis_coords(const RootSystem& rs,
                                                                 const CoweightVector& theta) {
    if (static_cast<int>(theta.coroot_coords.size()) != rs.rank)
        throw invalid_input("coweight has the wrong number of coordinates");
    std::vector<Rational> out(static_cast<std::size_t>(rs.rank));
    for (int j = 0; j < rs.rank; ++j) {
        Rational acc(0);
        for (int m = 0; m < rs.rank; ++m)
            acc += Rational(rs.cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)]) *
                   theta.coroot_coords[static_cast<std::size_t>(m)];
        out[static_cast<std::size_t>(j)] = acc;
    }
    return out;
}

// Pairing of a weight with a coweight: with the weight in alpha-coordinates
// c and the coweight in fundamental-coweight coordinates d (delta-dual to
// the alphas), the value is the dot product c . d.
[[nodiscard]] inline Rational evaluate(const RootSystem& rs, const WeightVector& w,
                                       const CoweightVector& theta) {
    if (static_cast<int>(w.alpha_coords.size()) != rs.rank)
        throw invalid_input("weight has the wrong number of coordinates");
    const std::vector<Rational> d = coweight_basis_coords(rs, theta);
    Rational acc(0);
    for (int j = 0; j < rs.rank; ++j)
        acc += w.alpha_coords[static_cast<std::size_t>(j)] * d[static_cast<std::size_t>(j)];
    return acc;
}

// The j-th fundamental coweight (1-based): the coweight pairing to the
// Kronecker delta against the simple roots, computed from the Cartan matrix
// rather than stored.
[[nodiscard]] inline CoweightVector fundamental_coweight(const RootSystem& rs, int j) {
    if (j < 1 || j > rs.rank) throw invalid_input("fundamental coweight index out of range");
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(rs.rank));
    for (int r = 0; r < rs.rank; ++r)
        for (int c = 0; c < rs.rank; ++c)
            m[static_cast<std::size_t>(r)].emplace_back(
                rs.cartan[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    std::vector<Rational> rhs(static_cast<std::size_t>(rs.rank), Rational(0));
    rhs[static_cast<std::size_t>(j - 1)] = Rational(1);
    return CoweightVector{detail::solve_linear(std::move(m), std::move(rhs))};
}

// Least m >= 1 such that every listed weight takes an integer value at
// m*theta: the lcm of the denominators, verified minimal over its divisors.
[[nodiscard]] inline long long cover_order(const RootSystem& rs, const CoweightVector& theta,
                                           const std::vector<WeightVector>& weights) {
    if (weights.empty()) throw invalid_input("cover order needs at least one weight");
    long long m = 1;
    std::vector<Rational> values;
    for (const WeightVector& w : weights) {
        values.push_back(evaluate(rs, w, theta));
        m = std::lcm(m, values.back().den());
    }
    for (long long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        bool all_integral = true;
        for (const Rational& v : values)
            if (!(v * Rational(d)).is_integer()) all_integral = false;
        if (all_integral) throw internal_error("a proper divisor already clears the denominators");
    }
    for (const Rational& v : values)
        if (!(v * Rational(m)).is_integer()) throw internal_error("the lcm does not clear a denominator");
    return m;
}

// Embedded reductive-subalgebra datum: the ambient system, auxiliary root
// combinations beta (in alpha-coordinates), the subsystem's simple roots (in
// alpha-coordinates), and its fundamental weights written in the subsystem
// simple-root basis.
struct SubalgebraDatum {
    RootSystem ambient;
    std::vector<std::vector<Rational>> beta;          // rows beta_1..beta_4, then beta_0
    std::vector<WeightVector> k_simple_roots;         // subsystem simple roots, alpha-coordinates
    std::vector<std::vector<Rational>> weight_matrix; // fundamental weights in that basis

    // Fundamental weights of the subsystem in ambient alpha-coordinates.
    [[nodiscard]] std::vector<WeightVector> fundamental_weights() const {
        std::vector<WeightVector> out;
        for (const std::vector<Rational>& row : weight_matrix) {
            WeightVector w;
            w.alpha_coords.assign(static_cast<std::size_t>(ambient.rank), Rational(0));
            for (std::size_t j = 0; j < row.size(); ++j)
                for (int c = 0; c < ambient.rank; ++c)
                    w.alpha_coords[static_cast<std::size_t>(c)] +=
                        row[j] * k_simple_roots[j].alpha_coords[static_cast<std::size_t>(c)];
            out.push_back(std::move(w));
        }
        return out;
    }
};

// The rank-4 symplectic subalgebra inside E6 used for the split real form:
// beta_1 = a2, beta_2 = a4, beta_3 = (a3+a5)/2, beta_4 = (a1+a6)/2,
// beta_0 = beta_1 + 2 beta_2 + 3 beta_3 + 2 beta_4; simple roots
// (-beta_0, beta_4, beta_3, beta_2).
[[nodiscard]] inline SubalgebraDatum e6_6_datum() {
    SubalgebraDatum d{root_system(ExceptionalType::E6), {}, {}, {}};
    auto alpha = [](std::initializer_list<Rational> vals) { return std::vector<Rational>(vals); };
    const Rational h(1, 2);
    const std::vector<Rational> b1 = alpha({0, 1, 0, 0, 0, 0});
    const std::vector<Rational> b2 = alpha({0, 0, 0, 1, 0, 0});
    const std::vector<Rational> b3 = alpha({0, 0, h, 0, h, 0});
    const std::vector<Rational> b4 = alpha({h, 0, 0, 0, 0, h});
    std::vector<Rational> b0(6);
    for (int c = 0; c < 6; ++c) {
        const auto k = static_cast<std::size_t>(c);
        b0[k] = b1[k] + Rational(2) * b2[k] + Rational(3) * b3[k] + Rational(2) * b4[k];
    }
    d.beta = {b1, b2, b3, b4, b0};

    std::vector<Rational> minus_b0(6);
    for (int c = 0; c < 6; ++c) minus_b0[static_cast<std::size_t>(c)] = -b0[static_cast<std::size_t>(c)];
    d.k_simple_roots = {WeightVector{minus_b0}, WeightVector{b4}, WeightVector{b3}, WeightVector{b2}};

    d.weight_matrix = {
        {Rational(1), Rational(1), Rational(1), h},
        {Rational(1), Rational(2), Rational(2), Rational(1)},
        {Rational(1), Rational(2), Rational(3), Rational(3, 2)},
        {Rational(1), Rational(2), Rational(3), Rational(2)},
    };
    if (detail::matrix_determinant(d.weight_matrix) == Rational(0))
        throw internal_error("the weight matrix must be invertible");
    return d;
}

// ---------------------------------------------------------------------------
// Catalog of exceptional boundary orbits
// ---------------------------------------------------------------------------

struct ExceptionalEntry {
    std::string real_form;    // e.g. "E6(6)"
    int orbit_number;         // the standard orbit numbering
    std::string g_orbit;      // ambient nilpotent-orbit type, e.g. "A2+2A1"
    int case_number;          // 1, 2, or 3
    std::string z_label;      // component group of the orbit, descriptor form
    std::vector<std::string> ztilde_alternatives; // cover component group; empty = unstated
    std::string zbar_label;   // intermediate cover where relevant, else empty
    std::string note;
};

// All fourteen entries, in catalog order.
[[nodiscard]] inline const std::vector<ExceptionalEntry>& exceptional_catalog() {
    static const std::vector<ExceptionalEntry> entries = {
        {"E6(2)", 12, "A2+2A1", 1, "1", {"1"}, "", ""},
        {"E6(2)", 13, "A2+2A1", 1, "1", {"1"}, "", ""},
        {"E6(2)", 14, "A2+2A1", 1, "1", {"1"}, "", ""},
        {"E6(-14)", 7, "A2+A1", 1, "1", {}, "", "the fixed subgroup is not semisimple"},
        {"E6(-14)", 8, "A2+A1", 1, "1", {}, "", "the fixed subgroup is not semisimple"},
        {"E7(-5)", 27, "A4+A1", 1, "Z2", {"Z4", "(Z2)^2"}, "", ""},
        {"E8(8)", 42, "A4+2A1", 1, "1", {"1"}, "", ""},
        {"E8(8)", 43, "A4+A1", 1, "Z2", {"Z2"}, "", ""},
        {"E8(-24)", 26, "A4+A1", 1, "1", {"1"}, "", ""},
        {"E6(6)", 8, "A2+A1", 2, "Z2", {"Z2"}, "", ""},
        {"E8(8)", 38, "A4+A1", 2, "Z4", {"Z4"}, "", ""},
        {"E6(6)", 10, "A2+2A1", 3, "Z2", {"Z4"}, "", ""},
        {"E7(7)", 50, "A4+A1", 3, "Z4", {"Z8xZ2", "Z4xZ4"}, "Z4xZ2", ""},
        {"E8(8)", 44, "A4+2A1", 3, "(Z2)^2", {"Z4xZ2", "D8", "Q8"},
         "", "the cover component group is a central extension by a two-element group"},
    };
    return entries;
}

[[nodiscard]] inline const ExceptionalEntry& find_exceptional(const std::string& real_form,
                                                              int orbit_number) {
    for (const ExceptionalEntry& e : exceptional_catalog())
        if (e.real_form == real_form && e.orbit_number == orbit_number) return e;
    throw invalid_input("no catalog entry for " + real_form + " orbit #" +
                        std::to_string(orbit_number));
}

struct ExceptionalVerdict {
    std::string verdict;
    int local_systems = 0; // counted at parameter zero where stated; 0 = unstated
    int hc_modules = 0;
    std::vector<std::pair<std::string, int>> breakdown;
    std::vector<std::string> notes;
};

[[nodiscard]] inline ExceptionalVerdict exceptional_verdict(const ExceptionalEntry& e) {
    ExceptionalVerdict v;
    if (e.case_number == 1 || e.case_number == 2) {
        v.verdict = "equivalence: every irreducible admissible local system quantizes at every parameter";
        return v;
    }
    v.verdict = "not essentially surjective at parameter zero: at least one rank-1 local system "
                "does not quantize";
    if (e.real_form == "E6(6)" && e.orbit_number == 10) {
        v.local_systems = 4;
        v.hc_modules = 3;
        v.breakdown = {{"no quantization", 1}, {"quantize", 3}};
    } else if (e.real_form == "E7(7)" && e.orbit_number == 50) {
        v.local_systems = 16;
        v.hc_modules = 12;
        v.breakdown = {{"no quantization", 4},
                       {"modules at the base level", 4},
                       {"genuine modules at the double-cover level", 4},
                       {"genuine modules at the full-cover level", 4}};
    } else if (e.real_form == "E8(8)" && e.orbit_number == 44) {
        v.notes.push_back("counts depend on the undetermined cover component group; the "
                          "alternatives are listed in the catalog entry");
    } else {
        throw invalid_input("unknown case-3 entry " + e.real_form + " #" +
                            std::to_string(e.orbit_number));
    }
    return v;
}

} // namespace hcmod
