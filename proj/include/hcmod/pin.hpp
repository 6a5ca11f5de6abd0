#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "hcmod/finite_group.hpp"
#include "hcmod/partition.hpp"

namespace hcmod {

// Signed monomial in anticommuting order-2 generators e_1..e_n. The canonical
// form keeps the support strictly increasing, so equality is structural.
struct PinElement {
    int sign = 1;
    std::vector<int> support;

    friend bool operator==(const PinElement&, const PinElement&) = default;
    friend auto operator<=>(const PinElement&, const PinElement&) = default;

    [[nodiscard]] std::string to_string() const {
        std::string s = sign < 0 ? "-" : "";
        if (support.empty()) return s + "1";
        for (int i : support) s += "e" + std::to_string(i);
        return s;
    }
};

// Product under e_i^2 = 1, e_i e_j = -e_j e_i: the sign picks up one flip for
// every pair (i in x, j in y) with i > j, and equal indices cancel.
[[nodiscard]] inline PinElement pin_mul(const PinElement& x, const PinElement& y) {
    long long flips = 0;
    for (int b : y.support) {
        auto it = std::upper_bound(x.support.begin(), x.support.end(), b);
        flips += x.support.end() - it;
    }
    PinElement r;
    r.support.reserve(x.support.size() + y.support.size());
    std::set_symmetric_difference(x.support.begin(), x.support.end(), y.support.begin(), y.support.end(),
                                  std::back_inserter(r.support));
    r.sign = x.sign * y.sign * (flips % 2 == 0 ? 1 : -1);
    return r;
}

// Block generator: the product e_{j+1}..e_{j+i} with j = i(i-1)/2, so the
// blocks for different i are disjoint.
[[nodiscard]] inline PinElement generator_E(int i, int ambient) {
    if (i < 1) throw invalid_input("block generator index must be positive");
    const int j = i * (i - 1) / 2;
    if (j + i > ambient) throw invalid_input("ambient size too small for block generator");
    PinElement e;
    for (int t = j + 1; t <= j + i; ++t) e.support.push_back(t);
    return e;
}

[[nodiscard]] inline int pin_ambient(int tau1) { return tau1 * (tau1 + 1) / 2; }

// All elements of the group generated by E_1..E_tau1 and -1, found by a
// worklist closure over pin_mul (right multiplication by the generators).
// Deterministic discovery order with the identity first.
[[nodiscard]] inline std::vector<PinElement> gamma_elements(int tau1) {
    if (tau1 < 1) throw invalid_input("the largest part must be positive");
    const int n = pin_ambient(tau1);
    std::vector<PinElement> gens;
    for (int i = 1; i <= tau1; ++i) gens.push_back(generator_E(i, n));
    gens.push_back(PinElement{-1, {}});

    std::vector<PinElement> elems;
    std::map<PinElement, int> index;
    auto add = [&](const PinElement& p) {
        if (index.emplace(p, static_cast<int>(elems.size())).second) elems.push_back(p);
    };
    add(PinElement{1, {}});
    for (const PinElement& g : gens) add(g);
    for (size_t i = 0; i < elems.size(); ++i)
        for (const PinElement& g : gens) add(pin_mul(elems[i], g));
    return elems;
}

// Writes a monomial of the block subgroup as a signed word in the E's, e.g.
// "E2E4" or "-E1E3". Errors out if the support is not a union of blocks.
[[nodiscard]] inline std::string e_word_label(const PinElement& p, int tau1) {
    const int n = pin_ambient(tau1);
    PinElement ref{1, {}};
    std::vector<int> blocks;
    size_t covered = 0;
    for (int i = 1; i <= tau1; ++i) {
        PinElement ei = generator_E(i, n);
        if (std::includes(p.support.begin(), p.support.end(), ei.support.begin(), ei.support.end())) {
            blocks.push_back(i);
            ref = pin_mul(ref, ei);
            covered += ei.support.size();
        }
    }
    if (covered != p.support.size() || ref.support != p.support)
        throw internal_error("monomial is not a word in the block generators");
    std::string s = (p.sign == ref.sign) ? "" : "-";
    if (blocks.empty()) return s.empty() ? "1" : "-1";
    for (int b : blocks) s += "E" + std::to_string(b);
    return s;
}

// The intersection of <E_1..E_tau1, -1> with the even-support subgroup,
// assembled into a Cayley table with E-word labels.
[[nodiscard]] inline FiniteGroup gamma_spin_group(int tau1) {
    std::vector<PinElement> even;
    for (const PinElement& p : gamma_elements(tau1))
        if (p.support.size() % 2 == 0) even.push_back(p);
    return close_under_multiplication<PinElement>(
        even, [](const PinElement& a, const PinElement& b) { return pin_mul(a, b); },
        [tau1](const PinElement& p) { return e_word_label(p, tau1); });
}

[[nodiscard]] inline int find_element_by_label(const FiniteGroup& g, const std::string& label) {
    for (int a = 0; a < g.order(); ++a)
        if (g.label(a) == label) return a;
    throw internal_error("no group element labeled '" + label + "'");
}

// Component group of the centralizer for the double-cover symmetric pair:
// either the block group itself (central extension) or its quotient by the
// central -1 (split), depending on the odd-part multiplicities.
struct ComponentGroup {
    enum class Model { extension, split };
    FiniteGroup group;
    Model model;
    std::map<int, int> distinguished; // odd row length l -> element id
    int minus_one = 0;                // identity in the split model
};

namespace detail {

// Parts of multiplicity one different from the largest part, without the
// boundary-depth precondition of the public partition-level routine.
[[nodiscard]] inline std::vector<int> codim2_leaf_parts(const Partition& tau) {
    std::vector<int> out;
    for (const auto& [part, mult] : multiplicities(tau))
        if (mult == 1 && part != tau.first()) out.push_back(part);
    return out;  // map iteration is already ascending
}

// Shared builder; the public entry point adds the boundary precondition.
[[nodiscard]] inline ComponentGroup component_model(const Partition& tau) {
    const int tau1 = tau.first();
    FiniteGroup gamma = gamma_spin_group(tau1);

    bool split = false;
    for (const auto& [part, mult] : multiplicities(tau))
        if (part % 2 == 1 && mult > 1) split = true;

    std::map<int, int> dist;
    for (int l : codim2_leaf_parts(tau)) {
        if (l % 2 == 0) continue;
        std::string label =
            (l == 1) ? "E2" : "E" + std::to_string(l - 1) + "E" + std::to_string(l + 1);
        dist[l] = find_element_by_label(gamma, label);
    }
    const int minus_one = find_element_by_label(gamma, "-1");

    ComponentGroup c = [&] {
        if (!split)
            return ComponentGroup{std::move(gamma), ComponentGroup::Model::extension, dist, minus_one};
        Quotient q = quotient(gamma, {0, minus_one});
        std::map<int, int> qdist;
        for (const auto& [l, id] : dist) qdist[l] = q.coset_of[id];
        return ComponentGroup{std::move(q.group), ComponentGroup::Model::split, std::move(qdist),
                              q.coset_of[minus_one]};
    }();
    for (const auto& [l, id] : c.distinguished)
        if (!is_central(c.group, id)) throw internal_error("distinguished element is not central");
    if (!is_central(c.group, c.minus_one)) throw internal_error("the -1 image is not central");
    return c;
}

} // namespace detail

[[nodiscard]] inline ComponentGroup component_group(const Partition& tau) {
    require_codim4(tau);
    return detail::component_model(tau);
}

namespace detail {

inline void check_codim2_part(const Partition& tau, int l) {
    std::vector<int> parts = codim2_leaf_parts(tau);
    if (std::find(parts.begin(), parts.end(), l) == parts.end())
        throw invalid_input("part " + std::to_string(l) + " is not a codimension-2 leaf part");
}

} // namespace detail

// Image of the order-4 generator attached to the odd part l: E_2 for l = 1,
// E_{l-1}E_{l+1} otherwise, with the +1 sign convention.
[[nodiscard]] inline int distinguished_element(const Partition& tau, int l) {
    detail::check_codim2_part(tau, l);
    if (l % 2 == 0) throw invalid_input("even parts carry no distinguished element");
    return detail::component_model(tau).distinguished.at(l);
}

// Whether the order-4 cyclic group maps injectively into the component group
// at part l: always false for even l; for an odd part of multiplicity > 1 the
// split model kills every order-4 element, so false; otherwise exactly when
// the distinguished element still has order 4.
[[nodiscard]] inline bool z4_hom_injective(const Partition& tau, int l) {
    std::map<int, int> mult = multiplicities(tau);
    auto it = mult.find(l);
    if (it == mult.end())
        throw invalid_input("part " + std::to_string(l) + " does not occur in the partition");
    if (l % 2 == 0) return false;
    if (it->second > 1) return false;
    detail::check_codim2_part(tau, l);
    ComponentGroup c = detail::component_model(tau);
    return c.group.element_order(c.distinguished.at(l)) == 4;
}

} // namespace hcmod
