#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hcmod/rational.hpp"

namespace hcmod {

// Weakly decreasing positive integers: the Jordan type of a nilpotent orbit
// in sl_n. Trailing zeros are stripped on construction; index-based
// operations treat out-of-range entries as zero, so the zero padding is
// virtual and never pollutes equality. Indices are 1-based throughout, so
// reports read like the usual subscript notation.
class Partition {
public:
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        if (parts_.empty()) throw invalid_input("partition must have at least one positive part");
        for (size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 1) throw invalid_input("partition parts must be positive");
            if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
                throw invalid_input("partition parts must be weakly decreasing");
        }
    }

    // Parses the comma-separated serialization, e.g. "3,2,1".
    static Partition parse(std::string_view csv) {
        std::vector<int> parts;
        size_t pos = 0;
        while (pos <= csv.size()) {
            size_t comma = csv.find(',', pos);
            std::string_view tok = csv.substr(pos, comma == std::string_view::npos ? csv.size() - pos : comma - pos);
            Rational r = Rational::parse(tok);
            if (!r.is_integer()) throw invalid_input("partition parts must be integers");
            parts.push_back(static_cast<int>(r.num()));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] int rows() const { return static_cast<int>(parts_.size()); }

    // 1-based access with virtual zero padding on the right.
    [[nodiscard]] int at(int i) const {
        if (i < 1) throw invalid_input("partition indices are 1-based");
        return i <= rows() ? parts_[i - 1] : 0;
    }

    [[nodiscard]] int first() const { return parts_.front(); }

    [[nodiscard]] int n() const {
        int total = 0;
        for (int p : parts_) total += p;
        return total;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s;
        for (size_t k = 0; k < parts_.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(parts_[k]);
        }
        return s;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// The closure boundary has codimension >= 4 exactly when successive
// differences (including last part minus 0) are all <= 1; equivalently every
// value 1..tau_1 occurs among the parts.
[[nodiscard]] inline bool boundary_codim_at_least_4(const Partition& tau) {
    for (int i = 1; i <= tau.rows(); ++i)
        if (tau.at(i) - tau.at(i + 1) > 1) return false;
    return true;
}

inline void require_codim4(const Partition& tau) {
    if (!boundary_codim_at_least_4(tau))
        throw invalid_input("partition " + tau.to_string() + " fails the boundary-codimension test");
}

// 1-based indices i with tau_i = tau_{i+1}+1 = tau_{i+2}+2 (zero padding
// applied). Each indexes a codimension-4 degeneration of the orbit.
[[nodiscard]] inline std::vector<int> codim4_indices(const Partition& tau) {
    require_codim4(tau);
    std::vector<int> idx;
    for (int i = 1; i <= tau.rows(); ++i)
        if (tau.at(i) == tau.at(i + 1) + 1 && tau.at(i) == tau.at(i + 2) + 2) idx.push_back(i);
    return idx;
}

// The degeneration tau^i: entries i and i+2 drop to tau_i - 1, entry i+1 is
// unchanged. Total size is preserved.
[[nodiscard]] inline Partition degeneration(const Partition& tau, int i) {
    std::vector<int> idx = codim4_indices(tau);
    if (std::find(idx.begin(), idx.end(), i) == idx.end())
        throw invalid_input("index " + std::to_string(i) + " is not a codimension-4 index of " + tau.to_string());
    std::vector<int> parts(tau.parts());
    parts.resize(std::max<size_t>(parts.size(), static_cast<size_t>(i) + 2), 0);
    parts[i - 1] = tau.at(i) - 1;
    parts[i + 1] = tau.at(i) - 1;
    Partition result{std::move(parts)};
    if (result.n() != tau.n()) throw internal_error("degeneration changed the total size");
    return result;
}

[[nodiscard]] inline std::map<int, int> multiplicities(const Partition& tau) {
    std::map<int, int> m;
    for (int p : tau.parts()) ++m[p];
    return m;
}

// Parts of multiplicity 1 other than tau_1; these index the codimension-2
// K-orbits in the closure. Sorted ascending.
[[nodiscard]] inline std::vector<int> codim2_parts(const Partition& tau) {
    require_codim4(tau);
    std::vector<int> parts;
    for (auto [part, count] : multiplicities(tau))
        if (count == 1 && part != tau.first()) parts.push_back(part);
    return parts;
}

// The O_n-orbit splits into two SO_n-orbits exactly when every part is even.
[[nodiscard]] inline bool so_orbit_splits(const Partition& tau) {
    for (int p : tau.parts())
        if (p % 2 != 0) return false;
    return true;
}

[[nodiscard]] inline Partition transpose(const Partition& tau) {
    std::vector<int> cols(tau.first());
    for (int j = 1; j <= tau.first(); ++j)
        for (int p : tau.parts()) cols[j - 1] += (p >= j) ? 1 : 0;
    return Partition(std::move(cols));
}

// Symmetric-pair selector for a type A orbit datum. The spin pair drives the
// full classification; the inner pair reduces to a parameter-independent
// equivalence; the symplectic pair has no codimension-4 degenerations at all.
struct OrbitDatumA {
    enum class Pair { spin, inner, symplectic };

    Partition tau;
    Pair pair = Pair::spin;
    int k = 0; // gl_k x gl_{n-k} block size; meaningful for Pair::inner only

    OrbitDatumA(Partition t, Pair p, int k_value = 0) : tau(std::move(t)), pair(p), k(k_value) {
        if (pair == Pair::inner && (k <= 0 || k >= tau.n()))
            throw invalid_input("inner pair requires 0 < k < n");
    }
};

} // namespace hcmod
