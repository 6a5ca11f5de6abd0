#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hcmod/rational.hpp"

namespace hcmod {

// A finite group as a full Cayley table. Element 0 is the identity; labels
// keep whatever names the construction gave the elements, so reports can
// print "E2" rather than an index.
class FiniteGroup {
public:
    FiniteGroup(std::vector<int> table, std::vector<std::string> labels)
        : order_(static_cast<int>(labels.size())), table_(std::move(table)), labels_(std::move(labels)) {
        if (table_.size() != static_cast<size_t>(order_) * order_)
            throw internal_error("cayley table has wrong shape");
        verify_axioms();
        inv_.resize(order_);
        for (int a = 0; a < order_; ++a)
            for (int b = 0; b < order_; ++b)
                if (mul(a, b) == 0) inv_[a] = b;
    }

    [[nodiscard]] int order() const { return order_; }
    [[nodiscard]] int mul(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
    [[nodiscard]] int inverse(int a) const { return inv_[a]; }
    [[nodiscard]] const std::string& label(int a) const { return labels_[a]; }

    [[nodiscard]] int power(int a, long long k) const {
        int acc = 0;
        int base = a;
        long long e = k >= 0 ? k : -k;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return k >= 0 ? acc : inverse(acc);
    }

    [[nodiscard]] int element_order(int a) const {
        int ord = 1;
        int x = a;
        while (x != 0) {
            x = mul(x, a);
            ++ord;
        }
        return ord;
    }

    [[nodiscard]] int exponent() const {
        long long e = 1;
        for (int a = 0; a < order_; ++a) e = std::lcm(e, static_cast<long long>(element_order(a)));
        return static_cast<int>(e);
    }

    [[nodiscard]] bool is_abelian() const {
        for (int a = 0; a < order_; ++a)
            for (int b = a + 1; b < order_; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

private:
    int order_;
    std::vector<int> table_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;

    // Latin-square property, identity at 0, inverses, and associativity:
    // exhaustive through order 512, randomly sampled above that.
    void verify_axioms() const {
        std::vector<char> seen(order_);
        for (int a = 0; a < order_; ++a) {
            if (mul(0, a) != a || mul(a, 0) != a) throw internal_error("element 0 is not an identity");
            std::fill(seen.begin(), seen.end(), 0);
            for (int b = 0; b < order_; ++b) {
                int ab = mul(a, b);
                if (ab < 0 || ab >= order_ || seen[ab]) throw internal_error("cayley row is not a permutation");
                seen[ab] = 1;
            }
        }
        bool has_inverse = false;
        for (int a = 0; a < order_; ++a) {
            has_inverse = false;
            for (int b = 0; b < order_; ++b) has_inverse = has_inverse || (mul(a, b) == 0);
            if (!has_inverse) throw internal_error("element without inverse");
        }
        if (order_ <= 512) {
            for (int a = 0; a < order_; ++a)
                for (int b = 0; b < order_; ++b)
                    for (int c = 0; c < order_; ++c)
                        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                            throw internal_error("cayley table is not associative");
        } else {
            std::mt19937_64 rng(0x5eed);
            std::uniform_int_distribution<int> pick(0, order_ - 1);
            for (int trial = 0; trial < 20000; ++trial) {
                int a = pick(rng), b = pick(rng), c = pick(rng);
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw internal_error("cayley table is not associative");
            }
        }
    }
};

// Number of elements generated by `generators` under `mul`, without building
// a Cayley table. Useful when only the order matters and the group is large.
template <class T, class Mul>
[[nodiscard]] size_t closure_size(const std::vector<T>& generators, Mul&& mul, size_t cap = size_t{1} << 16) {
    std::map<T, int> index;
    std::vector<T> elems;
    for (const T& g : generators)
        if (index.emplace(g, static_cast<int>(elems.size())).second) elems.push_back(g);
    if (elems.empty()) throw invalid_input("closure requires at least one generator");
    for (size_t i = 0; i < elems.size(); ++i) {
        for (size_t j = 0; j < elems.size(); ++j) {
            T p = mul(elems[i], elems[j]);
            if (index.emplace(p, static_cast<int>(elems.size())).second) {
                elems.push_back(p);
                if (elems.size() > cap) throw invalid_input("group closure exceeded the size cap");
            }
        }
    }
    return elems.size();
}

// Closes the generators under multiplication and assembles the Cayley table.
// The identity is discovered and moved to index 0; the remaining elements
// keep their discovery order, so the numbering is deterministic.
template <class T, class Mul, class Name>
[[nodiscard]] FiniteGroup close_under_multiplication(const std::vector<T>& generators, Mul&& mul, Name&& name,
                                                     size_t cap = size_t{1} << 16) {
    std::map<T, int> index;
    std::vector<T> elems;
    auto add = [&](const T& t) {
        if (index.emplace(t, static_cast<int>(elems.size())).second) {
            elems.push_back(t);
            if (elems.size() > cap) throw invalid_input("group closure exceeded the size cap");
        }
    };
    for (const T& g : generators) add(g);
    if (elems.empty()) throw invalid_input("closure requires at least one generator");
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j) add(mul(elems[i], elems[j]));

    const int n = static_cast<int>(elems.size());
    if (n > 4096) throw invalid_input("group too large for a Cayley table");

    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = (mul(elems[e], elems[x]) == elems[x]);
        if (ok) identity = e;
    }
    if (identity < 0) throw internal_error("closure has no identity");

    // Renumber with the identity first.
    std::vector<int> order_map(n);
    int next = 1;
    for (int e = 0; e < n; ++e) order_map[e] = (e == identity) ? 0 : next++;

    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<size_t>(order_map[a]) * n + order_map[b]] = order_map[index.at(mul(elems[a], elems[b]))];
    std::vector<std::string> labels(n);
    for (int e = 0; e < n; ++e) labels[order_map[e]] = name(elems[e]);
    return FiniteGroup(std::move(table), std::move(labels));
}

// Conjugacy classes, each sorted, ordered by (size, smallest member). The
// identity class comes first.
[[nodiscard]] inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
    std::vector<char> done(g.order());
    std::vector<std::vector<int>> classes;
    for (int a = 0; a < g.order(); ++a) {
        if (done[a]) continue;
        std::vector<int> cls;
        for (int s = 0; s < g.order(); ++s) {
            int conj = g.mul(g.mul(s, a), g.inverse(s));
            if (!done[conj]) {
                done[conj] = 1;
                cls.push_back(conj);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.front() < y.front();
    });
    return classes;
}

[[nodiscard]] inline std::vector<int> center(const FiniteGroup& g) {
    std::vector<int> z;
    for (int a = 0; a < g.order(); ++a) {
        bool central = true;
        for (int b = 0; b < g.order() && central; ++b) central = (g.mul(a, b) == g.mul(b, a));
        if (central) z.push_back(a);
    }
    return z;
}

[[nodiscard]] inline bool is_central(const FiniteGroup& g, int a) {
    for (int b = 0; b < g.order(); ++b)
        if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

// Subgroup generated by the given element ids, as a sorted id list.
[[nodiscard]] inline std::vector<int> subgroup_closure(const FiniteGroup& g, std::vector<int> gens) {
    std::vector<char> in(g.order());
    std::vector<int> elems{0};
    in[0] = 1;
    for (int x : gens)
        if (!in[x]) {
            in[x] = 1;
            elems.push_back(x);
        }
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j) {
            int p = g.mul(elems[i], elems[j]);
            if (!in[p]) {
                in[p] = 1;
                elems.push_back(p);
            }
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

[[nodiscard]] inline bool is_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
    std::vector<char> in(g.order());
    for (int x : h) in[x] = 1;
    if (!in[0]) return false;
    for (int a : h)
        for (int b : h)
            if (!in[g.mul(a, b)]) return false;
    return true;
}

[[nodiscard]] inline bool is_normal(const FiniteGroup& g, const std::vector<int>& h) {
    if (!is_subgroup(g, h)) return false;
    std::vector<char> in(g.order());
    for (int x : h) in[x] = 1;
    for (int s = 0; s < g.order(); ++s)
        for (int x : h)
            if (!in[g.mul(g.mul(s, x), g.inverse(s))]) return false;
    return true;
}

// Quotient by a verified-normal subgroup. Cosets are named after their
// smallest member; coset_of maps parent elements to quotient ids.
struct Quotient {
    FiniteGroup group;
    std::vector<int> coset_of;
};

[[nodiscard]] inline Quotient quotient(const FiniteGroup& g, const std::vector<int>& normal_subgroup) {
    if (!is_normal(g, normal_subgroup)) throw invalid_input("quotient requires a normal subgroup");
    const int n = g.order();
    std::vector<int> rep(n, -1);
    std::vector<int> reps;
    for (int a = 0; a < n; ++a) {
        if (rep[a] >= 0) continue;
        // a has the smallest id in its coset because we scan upward.
        for (int x : normal_subgroup) rep[g.mul(a, x)] = a;
        reps.push_back(a);
    }
    std::vector<int> id_of_rep(n, -1);
    for (size_t i = 0; i < reps.size(); ++i) id_of_rep[reps[i]] = static_cast<int>(i);

    const int q = static_cast<int>(reps.size());
    std::vector<int> table(static_cast<size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) table[static_cast<size_t>(i) * q + j] = id_of_rep[rep[g.mul(reps[i], reps[j])]];
    std::vector<std::string> labels(q);
    for (int i = 0; i < q; ++i) labels[i] = g.label(reps[i]);

    std::vector<int> coset_of(n);
    for (int a = 0; a < n; ++a) coset_of[a] = id_of_rep[rep[a]];
    return Quotient{FiniteGroup(std::move(table), std::move(labels)), std::move(coset_of)};
}

// Elementary divisors (prime powers, sorted descending) of an abelian group.
// For each prime p, the count of solutions of x^(p^k) = e determines how many
// cyclic factors have exponent at least k.
[[nodiscard]] inline std::vector<long long> abelian_invariants(const FiniteGroup& g) {
    if (!g.is_abelian()) throw invalid_input("abelian invariants of a nonabelian group");
    std::vector<long long> divisors;
    long long n = g.order();
    std::vector<long long> primes;
    for (long long p = 2; p <= n; ++p)
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) n /= p;
        }
    for (long long p : primes) {
        std::vector<int> t{0}; // t[k] = log_p #{x : x^(p^k) = e}
        long long pk = 1;
        while (true) {
            pk *= p;
            long long count = 0;
            for (int a = 0; a < g.order(); ++a)
                if (g.power(a, pk) == 0) ++count;
            int lg = 0;
            while (count % p == 0) {
                count /= p;
                ++lg;
            }
            if (count != 1) throw internal_error("torsion count is not a power of the prime");
            if (lg == t.back()) break;
            t.push_back(lg);
        }
        for (size_t k = 1; k < t.size(); ++k) {
            int at_least_k = t[k] - t[k - 1];
            int at_least_next = (k + 1 < t.size()) ? t[k + 1] - t[k] : 0;
            long long pk_val = 1;
            for (size_t i = 0; i < k; ++i) pk_val *= p;
            for (int r = 0; r < at_least_k - at_least_next; ++r) divisors.push_back(pk_val);
        }
    }
    std::sort(divisors.begin(), divisors.end(), std::greater<>());
    return divisors;
}

// Canonical structure label: "1", "Z4", "Z4xZ2", "(Z2)^k", "D8", "Q8", and
// "nonabelian-order-N" beyond the named range.
[[nodiscard]] inline std::string group_descriptor(const FiniteGroup& g) {
    if (g.order() == 1) return "1";
    if (g.is_abelian()) {
        std::vector<long long> divs = abelian_invariants(g);
        bool all_z2 = std::all_of(divs.begin(), divs.end(), [](long long d) { return d == 2; });
        if (all_z2 && divs.size() >= 2) return "(Z2)^" + std::to_string(divs.size());
        std::string s;
        for (size_t i = 0; i < divs.size(); ++i) {
            if (i) s += "x";
            s += "Z" + std::to_string(divs[i]);
        }
        return s;
    }
    if (g.order() == 8) {
        int involutions = 0;
        for (int a = 1; a < g.order(); ++a)
            if (g.mul(a, a) == 0) ++involutions;
        if (involutions == 1) return "Q8";
        if (involutions == 5) return "D8";
    }
    return "nonabelian-order-" + std::to_string(g.order());
}

} // namespace hcmod
