#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hcmod/partition.hpp"

namespace hcmod {

// Young diagram with rows labeled over {a,b}, strictly alternating within
// each row. Rows of equal length form a multiset; the canonical storage
// order (length descending, then lexicographic) makes equality structural.
class ABDiagram {
public:
    explicit ABDiagram(std::vector<std::string> rows) : rows_(std::move(rows)) {
        if (rows_.empty()) throw invalid_input("a diagram needs at least one row");
        for (const std::string& r : rows_) {
            if (r.empty()) throw invalid_input("diagram rows must be nonempty");
            for (char c : r)
                if (c != 'a' && c != 'b') throw invalid_input("row labels must be 'a' or 'b'");
            for (size_t i = 1; i < r.size(); ++i)
                if (r[i] == r[i - 1]) throw invalid_input("row labels must alternate");
        }
        std::sort(rows_.begin(), rows_.end(), [](const std::string& x, const std::string& y) {
            if (x.size() != y.size()) return x.size() > y.size();
            return x < y;
        });
    }

    [[nodiscard]] const std::vector<std::string>& rows() const { return rows_; }

    [[nodiscard]] Partition shape() const {
        std::vector<int> parts;
        for (const std::string& r : rows_) parts.push_back(static_cast<int>(r.size()));
        return Partition(parts);
    }

    [[nodiscard]] int a_count() const {
        int k = 0;
        for (const std::string& r : rows_)
            for (char c : r) k += (c == 'a');
        return k;
    }

    [[nodiscard]] int size() const {
        int n = 0;
        for (const std::string& r : rows_) n += static_cast<int>(r.size());
        return n;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += "/";
            s += rows_[i];
        }
        return s;
    }

    friend bool operator==(const ABDiagram&, const ABDiagram&) = default;
    friend auto operator<=>(const ABDiagram&, const ABDiagram&) = default;

private:
    std::vector<std::string> rows_;
};

namespace detail {

[[nodiscard]] inline std::string alternating_row(int length, bool starts_with_a) {
    std::string r;
    for (int i = 0; i < length; ++i) r += (i % 2 == 0) == starts_with_a ? 'a' : 'b';
    return r;
}

} // namespace detail

// All distinct diagrams of the given shape with exactly k 'a' labels. A row
// is determined by its first label, and rows of equal length are a multiset,
// so only the per-length counts of a-starting rows matter. Deterministic
// order: length groups descending, a-start counts descending.
[[nodiscard]] inline std::vector<ABDiagram> enumerate_ab_diagrams(const Partition& tau, int k) {
    const int n = tau.n();
    if (k <= 0 || k > n) throw invalid_input("the label count k must satisfy 0 < k <= n");

    std::map<int, int> mult = multiplicities(tau);
    std::vector<std::pair<int, int>> groups; // (length, row count), length descending
    for (auto it = mult.rbegin(); it != mult.rend(); ++it)
        groups.emplace_back(it->first, it->second);

    std::vector<ABDiagram> out;
    std::vector<int> a_starts(groups.size());
    auto rec = [&](auto&& self, size_t g, int a_left) -> void {
        if (g == groups.size()) {
            if (a_left != 0) return;
            std::vector<std::string> rows;
            for (size_t t = 0; t < groups.size(); ++t) {
                for (int r = 0; r < a_starts[t]; ++r) rows.push_back(detail::alternating_row(groups[t].first, true));
                for (int r = a_starts[t]; r < groups[t].second; ++r)
                    rows.push_back(detail::alternating_row(groups[t].first, false));
            }
            out.emplace_back(std::move(rows));
            return;
        }
        const int len = groups[g].first;
        const int count = groups[g].second;
        const int per_a = (len + 1) / 2; // 'a' labels in an a-starting row
        const int per_b = len / 2;       // 'a' labels in a b-starting row
        for (int t = count; t >= 0; --t) {
            a_starts[g] = t;
            self(self, g + 1, a_left - t * per_a - (count - t) * per_b);
        }
    };
    rec(rec, 0, k);
    return out;
}

namespace detail {

// Strict dominance of partitions of equal size: every prefix sum weakly
// larger, at least one strictly.
[[nodiscard]] inline bool strictly_dominates(const Partition& a, const Partition& b) {
    if (a.n() != b.n()) return false;
    long long sa = 0, sb = 0;
    bool strict = false;
    const int rows = std::max(a.rows(), b.rows());
    for (int i = 1; i <= rows; ++i) {
        sa += a.at(i);
        sb += b.at(i);
        if (sa < sb) return false;
        if (sa > sb) strict = true;
    }
    return strict;
}

} // namespace detail

// One-box moves that carry the label along: remove the last box of one row,
// append it to another (possibly emptying the source row). Keeps only moves
// whose result still alternates and whose shape strictly dominates the input
// shape. Duplicates collapse under the multiset normalization.
[[nodiscard]] inline std::vector<ABDiagram> closure_covers(const ABDiagram& d) {
    const Partition from_shape = d.shape();
    std::set<ABDiagram> seen;
    const std::vector<std::string>& rows = d.rows();
    for (size_t src = 0; src < rows.size(); ++src) {
        const char box = rows[src].back();
        for (size_t dst = 0; dst < rows.size(); ++dst) {
            if (dst == src) continue;
            if (!rows[dst].empty() && rows[dst].back() == box) continue; // alternation would break
            std::vector<std::string> moved;
            for (size_t r = 0; r < rows.size(); ++r) {
                std::string row = rows[r];
                if (r == src) row.pop_back();
                if (r == dst) row += box;
                if (!row.empty()) moved.push_back(std::move(row));
            }
            if (moved.empty()) continue;
            ABDiagram cover(std::move(moved));
            if (detail::strictly_dominates(cover.shape(), from_shape)) seen.insert(std::move(cover));
        }
    }
    return {seen.begin(), seen.end()};
}

// Per row length j: how many rows of that length start with 'a' and how many
// with 'b'. These counts give the block sizes of the centralizer Levi.
[[nodiscard]] inline std::map<int, std::pair<int, int>> levi_blocks(const ABDiagram& d) {
    std::map<int, std::pair<int, int>> blocks;
    for (const std::string& r : d.rows()) {
        auto& [na, nb] = blocks[static_cast<int>(r.size())];
        (r.front() == 'a' ? na : nb) += 1;
    }
    return blocks;
}

// For the inner symmetric pair the classification is parameter-independent:
// every irreducible of the orbit's component cover quantizes, for every
// parameter. The report enumerates the K-orbits (diagrams) with their Levi
// block data.
struct InnerCaseReport {
    Partition tau;
    int k;
    std::string verdict; // always "equivalence"
    std::vector<ABDiagram> diagrams;
    std::vector<std::map<int, std::pair<int, int>>> levi; // parallel to diagrams

    bool operator==(const InnerCaseReport&) const = default;
};

[[nodiscard]] inline InnerCaseReport inner_case_verdict(const Partition& tau, int k) {
    require_codim4(tau);
    InnerCaseReport rep{tau, k, "equivalence", enumerate_ab_diagrams(tau, k), {}};
    for (const ABDiagram& d : rep.diagrams) rep.levi.push_back(levi_blocks(d));
    return rep;
}

} // namespace hcmod
