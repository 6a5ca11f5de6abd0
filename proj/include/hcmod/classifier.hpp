#pragma once

// Main type-A decision pipeline: map a quantization parameter to per-part
// slice periods, evaluate the monodromy-exclusion criterion against the
// component group's character table, and report which irreducible local
// systems support a Harish-Chandra module.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hcmod/ab_diagram.hpp"
#include "hcmod/character_table.hpp"
#include "hcmod/partition.hpp"
#include "hcmod/pin.hpp"
#include "hcmod/slice_catalog.hpp"

namespace hcmod {

// Parameter attached to the columns of tau, one rational per column, defined
// modulo the all-ones diagonal.  The canonical representative puts the last
// column to zero.
struct QuantizationParameterA {
    std::vector<Rational> lambda; // index c-1 holds the value at column c

    QuantizationParameterA() = default;
    explicit QuantizationParameterA(std::vector<Rational> values) : lambda(std::move(values)) {}

    [[nodiscard]] static QuantizationParameterA zero(int tau1) {
        if (tau1 <= 0) throw invalid_input("the parameter needs at least one column");
        return QuantizationParameterA(std::vector<Rational>(static_cast<std::size_t>(tau1)));
    }

    [[nodiscard]] int columns() const { return static_cast<int>(lambda.size()); }

    [[nodiscard]] const Rational& at_column(int c) const {
        if (c < 1 || c > columns()) throw invalid_input("column index out of range");
        return lambda[static_cast<std::size_t>(c - 1)];
    }

    // Subtract the last entry from every column.
    [[nodiscard]] QuantizationParameterA canonical() const {
        if (lambda.empty()) throw invalid_input("the parameter needs at least one column");
        QuantizationParameterA out = *this;
        const Rational shift = lambda.back();
        for (Rational& v : out.lambda) v = v - shift;
        return out;
    }

    bool operator==(const QuantizationParameterA&) const = default;
};

inline void check_parameter_length(const Partition& tau, const QuantizationParameterA& lambda) {
    if (lambda.columns() != tau.first())
        throw invalid_input("the parameter must have one entry per column: expected " +
                            std::to_string(tau.first()) + ", got " +
                            std::to_string(lambda.columns()));
}

// Period of the slice at the codimension-2 part l: the difference of the
// parameter values at columns l and l+1.  Invariant under diagonal shifts.
[[nodiscard]] inline Rational slice_parameter(const Partition& tau,
                                              const QuantizationParameterA& lambda, int l) {
    detail::check_codim2_part(tau, l);
    check_parameter_length(tau, lambda);
    if (l + 1 > tau.first()) throw invalid_input("part " + std::to_string(l) + " has no successor column");
    return lambda.at_column(l) - lambda.at_column(l + 1);
}

enum class GenuineFilter { all, trivial_on_minus_one };

struct IrreducibleRow {
    int id = 0;         // row index in the character table
    int degree = 1;
    std::map<int, UnitScalar> scalars; // odd codimension-2 part -> monodromy scalar
    UnitScalar sign_scalar = UnitScalar::one; // scalar at the central sign
    bool admitted = true;
    std::string rule;

    bool operator==(const IrreducibleRow&) const = default;
};

struct ClassificationReport {
    Partition tau{std::vector<int>{1}};
    std::string pair = "spin";
    std::vector<Rational> lambda;  // canonical representative (empty when unused)
    std::string verdict;           // "classification" or an equivalence statement
    std::string group_descriptor;  // empty when no component group is involved
    long long group_order = 0;
    std::string model;             // "extension", "split", or empty
    std::vector<IrreducibleRow> rows;
    int local_systems = 0;
    int hc_modules = 0;
    std::vector<std::string> notes;
    std::optional<InnerCaseReport> inner;

    bool operator==(const ClassificationReport&) const = default;
};

namespace detail {

[[nodiscard]] inline std::string part_rule(int l, const std::string& what) {
    return "part " + std::to_string(l) + ": " + what;
}

// Decide one (scalar, period) pair: the conjunction of these per-part
// decisions is the row verdict.
[[nodiscard]] inline bool part_admits(UnitScalar s, const Rational& p, bool force_nonintegral,
                                      std::string* why) {
    if (force_nonintegral || !p.is_integer()) {
        if (s == UnitScalar::one || s == UnitScalar::minus_one) return true;
        if (why) *why = "nonintegral period admits only monodromy +-1";
        return false;
    }
    if (s == excluded_scalar(p)) {
        if (why) *why = "monodromy " + to_string(s) + " equals i^(2p-1) at period " + p.to_string();
        return false;
    }
    return true;
}

} // namespace detail

// Core classification for the two-fold-cover pair.  For every irreducible of
// the component group, checks the monodromy scalar at each odd
// codimension-2 part against the period there.  Parts listed in
// `nonintegral` are treated as having a non-integer period regardless of
// lambda.  The trivial_on_minus_one filter keeps only rows that descend to
// the non-genuine quotient.
[[nodiscard]] inline ClassificationReport classify_spin(
    const Partition& tau, const QuantizationParameterA& lambda,
    GenuineFilter filter = GenuineFilter::all, const std::set<int>& nonintegral = {}) {
    require_codim4(tau);
    check_parameter_length(tau, lambda);
    for (int l : nonintegral) detail::check_codim2_part(tau, l);

    const ComponentGroup comp = component_group(tau);
    const CharacterTable table = character_table(comp.group);

    ClassificationReport report;
    report.tau = tau;
    report.pair = "spin";
    report.verdict = "classification";
    report.lambda = lambda.canonical().lambda;
    report.group_descriptor = group_descriptor(comp.group);
    report.group_order = comp.group.order();
    report.model =
        comp.model == ComponentGroup::Model::extension ? "extension" : "split";

    // Periods at the odd parts, fixed once per report.
    std::vector<std::pair<int, Rational>> periods; // (part, period)
    for (const auto& [l, id] : comp.distinguished) {
        (void)id;
        periods.emplace_back(l, slice_parameter(tau, lambda, l));
    }

    for (int row = 0; row < table.class_count(); ++row) {
        IrreducibleRow r;
        r.id = row;
        r.degree = table.degrees[static_cast<std::size_t>(row)];
        r.sign_scalar = classify_unit_scalar(central_scalar(table, row, comp.minus_one));
        if (r.sign_scalar == UnitScalar::other)
            throw internal_error("the central sign acted by a scalar outside {1,-1}");
        if (filter == GenuineFilter::trivial_on_minus_one && r.sign_scalar != UnitScalar::one)
            continue;

        for (const auto& [l, id] : comp.distinguished) {
            const UnitScalar s = classify_unit_scalar(central_scalar(table, row, id));
            if (s == UnitScalar::other)
                throw internal_error("a distinguished element acted outside the fourth roots");
            r.scalars[l] = s;
        }

        r.admitted = true;
        r.rule = comp.distinguished.empty()
                     ? "no odd codimension-2 parts: the criterion is vacuous"
                     : "monodromy constraints satisfied at every odd codimension-2 part";
        for (const auto& [l, p] : periods) {
            std::string why;
            if (!detail::part_admits(r.scalars.at(l), p, nonintegral.count(l) > 0, &why)) {
                r.admitted = false;
                r.rule = detail::part_rule(l, why);
                break; // cite exactly one failed part
            }
        }
        report.rows.push_back(std::move(r));
    }

    report.local_systems = static_cast<int>(report.rows.size());
    report.hc_modules = static_cast<int>(
        std::count_if(report.rows.begin(), report.rows.end(),
                      [](const IrreducibleRow& r) { return r.admitted; }));

    for (int i : codim4_indices(tau)) {
        const Partition boundary = degeneration(tau, i);
        if (so_orbit_splits(boundary))
            report.notes.push_back("degeneration at row " + std::to_string(i) + " (" +
                                   boundary.to_string() +
                                   "): two K-orbits, identical verdicts");
    }
    return report;
}

// Zero-parameter entry point, kept as a named cross-check.
[[nodiscard]] inline ClassificationReport classify_canonical(const Partition& tau) {
    return classify_spin(tau, QuantizationParameterA::zero(tau.first()), GenuineFilter::all);
}

// Dispatch over the symmetric-pair selector.
[[nodiscard]] inline ClassificationReport classify(const OrbitDatumA& datum,
                                                   const QuantizationParameterA& lambda) {
    switch (datum.pair) {
        case OrbitDatumA::Pair::spin:
            return classify_spin(datum.tau, lambda, GenuineFilter::all);
        case OrbitDatumA::Pair::inner: {
            ClassificationReport report;
            report.tau = datum.tau;
            report.pair = "inner";
            report.verdict = "equivalence";
            report.inner = inner_case_verdict(datum.tau, datum.k);
            report.notes.push_back(
                "every irreducible object quantizes for every parameter; nothing is excluded");
            report.notes.push_back("K-orbits: " + std::to_string(report.inner->diagrams.size()) +
                                   " ab-diagrams of shape " + datum.tau.to_string() + " with k=" +
                                   std::to_string(datum.k));
            return report;
        }
        case OrbitDatumA::Pair::symplectic: {
            ClassificationReport report;
            report.tau = datum.tau;
            report.pair = "symplectic";
            report.verdict = "no codimension-4 degenerations; criterion vacuous; equivalence";
            report.notes.push_back(
                "the boundary of this orbit closure has no codimension-4 strata, so every "
                "irreducible object quantizes");
            return report;
        }
    }
    throw invalid_input("unknown symmetric-pair selector");
}

} // namespace hcmod
