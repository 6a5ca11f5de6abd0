#pragma once

// Command-line front end.  Every verb is a thin adapter: parse flags, call
// the library, render the result as fixed-width text or as JSON.  All output
// is deterministic for fixed inputs.  Exit codes: 0 success, 2 invalid
// input, 1 internal consistency failure.

#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hcmod/report_json.hpp"
#include "hcmod/root_system.hpp"

namespace hcmod::cli {

namespace detail {

[[nodiscard]] inline std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        out.push_back(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

[[nodiscard]] inline std::vector<Rational> parse_rationals(const std::string& csv) {
    std::vector<Rational> out;
    for (const std::string& tok : split_csv(csv)) out.push_back(Rational::parse(tok));
    return out;
}

[[nodiscard]] inline std::set<int> parse_int_set(const std::string& csv) {
    std::set<int> out;
    for (const Rational& r : parse_rationals(csv)) {
        if (!r.is_integer()) throw invalid_input("expected integers in '" + csv + "'");
        out.insert(static_cast<int>(r.num()));
    }
    return out;
}

[[nodiscard]] inline std::string join_rationals(const std::vector<Rational>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ",";
        s += values[i].to_string();
    }
    return s;
}

[[nodiscard]] inline std::string group_summary(const std::string& label, long long order,
                                               const std::string& model) {
    return label + " (order " + std::to_string(order) + ", " + model + " model)";
}

[[nodiscard]] inline std::string ztilde_text(const std::vector<std::string>& alternatives) {
    if (alternatives.empty()) return "unstated";
    std::string s;
    for (std::size_t i = 0; i < alternatives.size(); ++i) {
        if (i) s += "|";
        s += alternatives[i];
    }
    return s;
}

inline void print_classification_text(const ClassificationReport& r, std::ostream& out) {
    out << "orbit: tau=" << r.tau.to_string() << ", pair=" << r.pair;
    if (r.inner) out << " (k=" << r.inner->k << ")";
    out << "\n";
    if (r.pair != "spin") {
        out << "verdict: " << r.verdict << "\n";
        if (r.inner) {
            out << "ab-diagrams (" << r.inner->diagrams.size() << "):";
            for (const ABDiagram& d : r.inner->diagrams) out << " " << d.to_string();
            out << "\n";
        }
        for (const std::string& note : r.notes) out << "note: " << note << "\n";
        return;
    }
    out << "component group: " << group_summary(r.group_descriptor, r.group_order, r.model) << "\n";
    out << "parameter (canonical): " << join_rationals(r.lambda) << "\n";
    out << "counts: " << r.local_systems << " local systems, " << r.hc_modules << " admitted\n";
    out << std::left << std::setw(4) << "id" << std::setw(8) << "degree" << std::setw(6)
        << "sign" << std::setw(16) << "scalars" << std::setw(10) << "admitted"
        << "rule\n";
    for (const IrreducibleRow& row : r.rows) {
        std::string scalars;
        for (const auto& [part, s] : row.scalars) {
            if (!scalars.empty()) scalars += " ";
            scalars += std::to_string(part) + "=" + to_string(s);
        }
        if (scalars.empty()) scalars = "-";
        out << std::left << std::setw(4) << row.id << std::setw(8) << row.degree << std::setw(6)
            << to_string(row.sign_scalar) << std::setw(16) << scalars << std::setw(10)
            << (row.admitted ? "yes" : "no") << row.rule << "\n";
    }
    for (const std::string& note : r.notes) out << "note: " << note << "\n";
}

} // namespace detail

// ---------------------------------------------------------------------------
// selftest: embedded golden checks
// ---------------------------------------------------------------------------

[[nodiscard]] inline int run_selftest(std::ostream& out) {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        out << (ok ? "PASS" : "FAIL") << " " << name << "\n";
        if (!ok) ++failures;
    };

    {
        const ClassificationReport r = classify_canonical(Partition(std::vector<int>{2, 1}));
        check("smallest two-fold-cover case: Z4 with 3 of 4 admitted",
              r.group_descriptor == "Z4" && r.group_order == 4 && r.model == "extension" &&
                  r.local_systems == 4 && r.hc_modules == 3);
    }
    {
        const ClassificationReport r = classify_canonical(Partition(std::vector<int>{3, 2, 1}));
        check("tau=3,2,1: Z4xZ2 of order 8, 6 of 8 admitted",
              r.group_descriptor == "Z4xZ2" && r.group_order == 8 && r.local_systems == 8 &&
                  r.hc_modules == 6);
    }
    {
        const ClassificationReport r = classify_canonical(Partition(std::vector<int>{2, 1, 1}));
        check("tau=2,1,1: split model admits everything",
              r.model == "split" && r.local_systems == r.hc_modules && r.local_systems == 2);
    }
    {
        const ClassificationReport r = classify_canonical(Partition(std::vector<int>{2, 2, 1}));
        check("tau=2,2,1: Z4 with 3 of 4 admitted",
              r.group_descriptor == "Z4" && r.local_systems == 4 && r.hc_modules == 3);
    }
    {
        bool ok = true;
        const int ambient = pin_ambient(6);
        for (int i = 1; i <= 6; ++i) {
            const PinElement ei = generator_E(i, ambient);
            const PinElement sq = pin_mul(ei, ei);
            const int want = (i % 4 == 0 || i % 4 == 1) ? 1 : -1;
            if (!sq.support.empty() || sq.sign != want) ok = false;
            for (int j = 1; j <= 6; ++j) {
                if (j == i) continue; // the i = j case is the squares rule above
                const PinElement ej = generator_E(j, ambient);
                const PinElement xy = pin_mul(ei, ej);
                const PinElement yx = pin_mul(ej, ei);
                const int flip = (i * j) % 2 == 0 ? 1 : -1;
                if (xy.support != yx.support || xy.sign != flip * yx.sign) ok = false;
            }
        }
        check("generator relations: squares and commutation signs up to index 6", ok);
    }
    {
        const bool ok =
            a2_outer_verdict(Rational(0), UnitScalar::i).level ==
                QuantizabilityLevel::strongly_quantizable &&
            !a2_outer_verdict(Rational(0), UnitScalar::minus_i).quantizable() &&
            a2_outer_verdict(Rational(2), UnitScalar::i).level ==
                QuantizabilityLevel::quantizable &&
            !a2_outer_verdict(Rational(1, 2), UnitScalar::i).quantizable() &&
            a2_outer_verdict(Rational(5), UnitScalar::minus_one).level ==
                QuantizabilityLevel::strongly_quantizable &&
            twist_of_period(Rational(-1)) == Rational(1, 2);
        check("four-dimensional slice decision table spot values", ok);
    }
    {
        const SubalgebraDatum d = e6_6_datum();
        const std::vector<WeightVector> fw = d.fundamental_weights();
        auto values = [&](const CoweightVector& theta) {
            std::vector<Rational> v;
            for (const WeightVector& w : fw) v.push_back(evaluate(d.ambient, w, theta));
            return v;
        };
        const CoweightVector t1{{Rational(1), Rational(0), Rational(0), Rational(-2), Rational(0),
                                 Rational(1)}};
        const CoweightVector t2{{Rational(1), Rational(1), Rational(2), Rational(2), Rational(2),
                                 Rational(1)}};
        const bool ok = values(t1) == std::vector<Rational>{Rational(0), Rational(1), Rational(0),
                                                            Rational(-2)} &&
                        values(t2) == std::vector<Rational>{Rational(-1, 2), Rational(0),
                                                            Rational(1, 2), Rational(0)} &&
                        cover_order(d.ambient, t1, fw) == 1 && cover_order(d.ambient, t2, fw) == 2;
        check("split E6 coweight evaluations and cover orders", ok);
    }
    {
        const ExceptionalVerdict v7 = exceptional_verdict(find_exceptional("E7(7)", 50));
        bool ok = v7.local_systems == 16 && v7.hc_modules == 12 && v7.breakdown.size() == 4;
        for (const auto& [label, count] : v7.breakdown) {
            (void)label;
            if (count != 4) ok = false;
        }
        const ExceptionalVerdict v6 = exceptional_verdict(find_exceptional("E6(6)", 10));
        ok = ok && v6.local_systems == 4 && v6.hc_modules == 3;
        check("exceptional verdicts: the 16 -> 4/4/4/4 split and the 4 -> 3 count", ok);
    }
    {
        const ExceptionalEntry& e43 = find_exceptional("E8(8)", 43);
        const ExceptionalEntry& e44 = find_exceptional("E8(8)", 44);
        const bool ok =
            e43.z_label == "Z2" && e43.case_number == 1 &&
            exceptional_verdict(e43).verdict.rfind("equivalence", 0) == 0 &&
            e44.ztilde_alternatives == std::vector<std::string>{"Z4xZ2", "D8", "Q8"};
        check("catalog rows: split-E8 orbits 43 and 44", ok);
    }
    {
        const std::vector<ABDiagram> d =
            enumerate_ab_diagrams(Partition(std::vector<int>{2, 1}), 2);
        const bool ok = d.size() == 2 && d[0].to_string() == "ab/a" && d[1].to_string() == "ba/a";
        check("ab-diagram enumeration for the smallest mixed shape", ok);
    }
    {
        QuantizationParameterA lam({Rational(1, 2), Rational(0)});
        const ClassificationReport r1 =
            classify_spin(Partition(std::vector<int>{2, 1}), lam);
        const ClassificationReport r2 = classify_canonical(Partition(std::vector<int>{3, 2, 1}));
        const ClassificationReport r3 =
            classify(OrbitDatumA(Partition(std::vector<int>{2, 1}), OrbitDatumA::Pair::inner, 2),
                     QuantizationParameterA::zero(2));
        const bool ok = report_from_json(report_to_json(r1)) == r1 &&
                        report_from_json(report_to_json(r2)) == r2 &&
                        report_from_json(report_to_json(r3)) == r3;
        check("JSON reports round-trip exactly", ok);
    }

    out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
        << "\n";
    return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verb implementations
// ---------------------------------------------------------------------------

namespace detail {

struct ClassifyArgs {
    std::string tau;
    std::string pair = "spin";
    int k = 0;
    std::string lambda;       // csv; empty = zero
    std::string nonintegral;  // csv; empty = none
    bool genuine = false;
    std::string format = "text";
};

inline void run_classify(const ClassifyArgs& a, std::ostream& out) {
    const Partition tau = Partition::parse(a.tau);
    QuantizationParameterA lambda =
        a.lambda.empty() ? QuantizationParameterA::zero(tau.first())
                         : QuantizationParameterA(parse_rationals(a.lambda));

    ClassificationReport report;
    if (a.pair == "spin") {
        const GenuineFilter filter =
            a.genuine ? GenuineFilter::trivial_on_minus_one : GenuineFilter::all;
        const std::set<int> marks =
            a.nonintegral.empty() ? std::set<int>{} : parse_int_set(a.nonintegral);
        report = classify_spin(tau, lambda, filter, marks);
    } else if (a.pair == "inner") {
        if (!a.nonintegral.empty() || a.genuine)
            throw invalid_input("--nonintegral and --genuine apply to the spin pair only");
        report = classify(OrbitDatumA(tau, OrbitDatumA::Pair::inner, a.k), lambda);
    } else if (a.pair == "symplectic") {
        if (!a.nonintegral.empty() || a.genuine)
            throw invalid_input("--nonintegral and --genuine apply to the spin pair only");
        report = classify(OrbitDatumA(tau, OrbitDatumA::Pair::symplectic), lambda);
    } else {
        throw invalid_input("--pair must be spin, inner, or symplectic");
    }

    if (a.format == "json")
        out << report_to_json(report).dump(2) << "\n";
    else
        print_classification_text(report, out);
}

inline void run_component_group(const std::string& tau_text, const std::string& format,
                                std::ostream& out) {
    const Partition tau = Partition::parse(tau_text);
    const ComponentGroup comp = component_group(tau);
    const std::string label = group_descriptor(comp.group);
    const std::string model =
        comp.model == ComponentGroup::Model::extension ? "extension" : "split";
    if (format == "json") {
        json doc = {{"label", label}, {"order", comp.group.order()}, {"model", model}};
        out << doc.dump(2) << "\n";
    } else {
        out << group_summary(label, comp.group.order(), model) << "\n";
    }
}

inline void run_ab_diagrams(const std::string& tau_text, int k, const std::string& format,
                            std::ostream& out) {
    const Partition tau = Partition::parse(tau_text);
    const std::vector<ABDiagram> diagrams = enumerate_ab_diagrams(tau, k);
    if (format == "json") {
        json arr = json::array();
        for (const ABDiagram& d : diagrams) {
            json entry = {{"diagram", d.to_string()}, {"levi", json::object()}};
            for (const auto& [length, counts] : levi_blocks(d))
                entry["levi"][std::to_string(length)] = {counts.first, counts.second};
            arr.push_back(std::move(entry));
        }
        json doc = {{"tau", tau.to_string()}, {"k", k}, {"count", diagrams.size()},
                    {"diagrams", std::move(arr)}};
        out << doc.dump(2) << "\n";
    } else {
        for (const ABDiagram& d : diagrams) out << d.to_string() << "\n";
        out << "count: " << diagrams.size() << "\n";
    }
}

inline void run_slices_list(const std::string& format, std::ostream& out) {
    if (format == "json") {
        json arr = json::array();
        for (const SliceSingularity& s : slice_catalog())
            arr.push_back({{"kind", to_string(s.kind)}, {"description", s.description}});
        out << arr.dump(2) << "\n";
    } else {
        for (const SliceSingularity& s : slice_catalog())
            out << std::left << std::setw(12) << to_string(s.kind) << s.description << "\n";
    }
}

inline void run_slices_verdict(const std::string& kind_text, const std::string& period_text,
                               const std::string& scalar_text, const std::string& involution_text,
                               const std::string& format, std::ostream& out) {
    const SliceKind kind = parse_slice_kind(kind_text);
    if (!scalar_text.empty()) {
        if (kind != SliceKind::a2)
            throw invalid_input("the monodromy decision table covers the a2 slice only");
        if (period_text.empty())
            throw invalid_input("--period is required together with --scalar");
        const Rational p = Rational::parse(period_text);
        const UnitScalar s = parse_unit_scalar(scalar_text);
        const QuantizabilityVerdict v = a2_outer_verdict(p, s);
        if (format == "json") {
            json doc = {{"kind", to_string(kind)},       {"period", p.to_string()},
                        {"twist", twist_of_period(p).to_string()}, {"scalar", to_string(s)},
                        {"level", to_string(v.level)},   {"rule", v.rule}};
            out << doc.dump(2) << "\n";
        } else {
            out << "kind: " << to_string(kind) << " (outer symmetry)\n";
            out << "period: " << p.to_string() << " (twist " << twist_of_period(p).to_string()
                << ")\n";
            out << "scalar: " << to_string(s) << "\n";
            out << "verdict: " << to_string(v.level) << "\n";
            out << "rule: " << v.rule << "\n";
        }
        return;
    }
    InvolutionClass cls = InvolutionClass::any;
    if (involution_text == "inner") cls = InvolutionClass::inner;
    else if (involution_text == "outer") cls = InvolutionClass::outer;
    else if (involution_text != "any" && !involution_text.empty())
        throw invalid_input("--involution must be inner, outer, or any");
    const UnobstructiveVerdict v = unobstructive(kind, cls);
    if (format == "json") {
        json doc = {{"kind", to_string(kind)},
                    {"involution", to_string(cls)},
                    {"unobstructive", to_string(v.status)},
                    {"detail", v.detail}};
        out << doc.dump(2) << "\n";
    } else {
        out << "kind: " << to_string(kind) << "\n";
        out << "involution: " << to_string(cls) << "\n";
        out << "unobstructive: " << to_string(v.status) << "\n";
        out << "detail: " << v.detail << "\n";
    }
}

[[nodiscard]] inline json entry_to_json(const ExceptionalEntry& e) {
    json doc = {{"real_form", e.real_form},  {"orbit", e.orbit_number},
                {"g_orbit", e.g_orbit},      {"case", e.case_number},
                {"z", e.z_label},            {"ztilde", e.ztilde_alternatives}};
    if (!e.zbar_label.empty()) doc["zbar"] = e.zbar_label;
    if (!e.note.empty()) doc["note"] = e.note;
    return doc;
}

inline void run_exceptional_list(const std::string& format, std::ostream& out) {
    if (format == "json") {
        json arr = json::array();
        for (const ExceptionalEntry& e : exceptional_catalog()) arr.push_back(entry_to_json(e));
        out << arr.dump(2) << "\n";
    } else {
        for (const ExceptionalEntry& e : exceptional_catalog()) {
            out << std::left << std::setw(9) << e.real_form << std::setw(5)
                << ("#" + std::to_string(e.orbit_number)) << std::setw(9) << e.g_orbit
                << "case " << e.case_number << "  Z=" << std::setw(8) << e.z_label
                << "Ztilde=" << ztilde_text(e.ztilde_alternatives);
            if (!e.zbar_label.empty()) out << "  Zbar=" << e.zbar_label;
            if (!e.note.empty()) out << "  (" << e.note << ")";
            out << "\n";
        }
    }
}

inline void run_exceptional_verdict(const std::string& form, int orbit, const std::string& format,
                                    std::ostream& out) {
    const ExceptionalEntry& e = find_exceptional(form, orbit);
    const ExceptionalVerdict v = exceptional_verdict(e);
    if (format == "json") {
        json doc = {{"entry", entry_to_json(e)}, {"verdict", v.verdict}};
        if (v.local_systems > 0)
            doc["counts"] = {{"local_systems", v.local_systems}, {"hc_modules", v.hc_modules}};
        if (!v.breakdown.empty()) {
            json arr = json::array();
            for (const auto& [label, count] : v.breakdown)
                arr.push_back({{"label", label}, {"count", count}});
            doc["breakdown"] = std::move(arr);
        }
        if (!v.notes.empty()) doc["notes"] = v.notes;
        out << doc.dump(2) << "\n";
    } else {
        out << e.real_form << " #" << e.orbit_number << " (" << e.g_orbit << ", case "
            << e.case_number << ")\n";
        out << "component groups: Z=" << e.z_label;
        if (!e.zbar_label.empty()) out << ", Zbar=" << e.zbar_label;
        out << ", Ztilde=" << ztilde_text(e.ztilde_alternatives) << "\n";
        out << "verdict: " << v.verdict << "\n";
        if (v.local_systems > 0)
            out << "counts: " << v.local_systems << " local systems, " << v.hc_modules
                << " quantize\n";
        for (const auto& [label, count] : v.breakdown)
            out << "  " << label << ": " << count << "\n";
        for (const std::string& note : v.notes) out << "note: " << note << "\n";
        if (!e.note.empty()) out << "note: " << e.note << "\n";
    }
}

inline void run_roots_eval(const std::string& type_text, const std::string& theta_text,
                           const std::string& datum_text, const std::string& format,
                           std::ostream& out) {
    if (datum_text != "e6_6")
        throw invalid_input("unknown datum '" + datum_text + "' (available: e6_6)");
    const SubalgebraDatum d = e6_6_datum();
    const ExceptionalType type = parse_exceptional_type(type_text);
    if (type != d.ambient.type)
        throw invalid_input("datum e6_6 lives in type E6, not " + type_text);

    const CoweightVector theta{parse_rationals(theta_text)};
    const std::vector<Rational> basis = coweight_basis_coords(d.ambient, theta);
    const std::vector<WeightVector> fw = d.fundamental_weights();
    std::vector<Rational> values;
    for (const WeightVector& w : fw) values.push_back(evaluate(d.ambient, w, theta));
    const long long order = cover_order(d.ambient, theta, fw);

    if (format == "json") {
        json doc;
        doc["type"] = type_text;
        doc["datum"] = datum_text;
        doc["theta"] = json::array();
        for (const Rational& r : theta.coroot_coords) doc["theta"].push_back(r.to_string());
        doc["pairing_basis"] = json::array();
        for (const Rational& r : basis) doc["pairing_basis"].push_back(r.to_string());
        doc["values"] = json::array();
        for (const Rational& r : values) doc["values"].push_back(r.to_string());
        doc["cover_order"] = order;
        out << doc.dump(2) << "\n";
    } else {
        out << "type: " << type_text << ", datum: " << datum_text << "\n";
        out << "theta (coroot basis): " << join_rationals(theta.coroot_coords) << "\n";
        out << "pairing-basis coordinates: " << join_rationals(basis) << "\n";
        out << "values at the datum fundamental weights: " << join_rationals(values) << "\n";
        out << "cover order: " << order << "\n";
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// top-level driver
// ---------------------------------------------------------------------------

[[nodiscard]] inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                                 std::ostream& err) {
    CLI::App app{"exact classifier for Harish-Chandra modules over quantized nilpotent orbits"};
    app.require_subcommand(1);

    detail::ClassifyArgs cargs;
    CLI::App* classify = app.add_subcommand(
        "classify", "full classification report for a type-A orbit datum");
    classify->add_option("--tau", cargs.tau, "partition, e.g. 2,1")->required();
    classify->add_option("--pair", cargs.pair, "symmetric pair: spin, inner, or symplectic")
        ->check(CLI::IsMember({"spin", "inner", "symplectic"}));
    classify->add_option("--k", cargs.k, "block size for the inner pair");
    classify->add_option("--lambda", cargs.lambda,
                         "comma-separated rational parameter, one entry per column (default 0)");
    classify->add_option("--nonintegral", cargs.nonintegral,
                         "parts whose slice period is treated as non-integral");
    classify->add_flag("--genuine", cargs.genuine,
                       "keep only local systems trivial on the central sign");
    classify->add_option("--format", cargs.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string cg_tau, cg_format = "text";
    CLI::App* cg = app.add_subcommand("component-group",
                                      "component group of the two-fold-cover pair");
    cg->add_option("--tau", cg_tau, "partition, e.g. 3,2,1")->required();
    cg->add_option("--format", cg_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string ab_tau, ab_format = "text";
    int ab_k = 0;
    CLI::App* ab = app.add_subcommand("ab-diagrams",
                                      "alternating-label diagrams of a given shape");
    ab->add_option("--tau", ab_tau, "partition shape")->required();
    ab->add_option("--k", ab_k, "number of a-labels")->required();
    ab->add_option("--format", ab_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* slices = app.add_subcommand("slices", "four-dimensional slice singularities");
    slices->require_subcommand(1);
    std::string sl_format = "text";
    CLI::App* sl_list = slices->add_subcommand("list", "list the five slice kinds");
    sl_list->add_option("--format", sl_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    std::string sv_kind, sv_period, sv_scalar, sv_involution = "any", sv_format = "text";
    CLI::App* sl_verdict = slices->add_subcommand("verdict", "quantizability on one slice");
    sl_verdict->add_option("--kind", sv_kind, "slice kind (see 'slices list')")->required();
    sl_verdict->add_option("--period", sv_period, "rational period parameter");
    sl_verdict->add_option("--scalar", sv_scalar, "monodromy scalar: 1, -1, i, or -i");
    sl_verdict->add_option("--involution", sv_involution, "involution class: inner, outer, any");
    sl_verdict->add_option("--format", sv_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* exceptional = app.add_subcommand("exceptional",
                                               "catalog of exceptional boundary orbits");
    exceptional->require_subcommand(1);
    std::string ex_format = "text";
    CLI::App* ex_list = exceptional->add_subcommand("list", "all fourteen catalog entries");
    ex_list->add_option("--format", ex_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    std::string ev_form, ev_format = "text";
    int ev_orbit = 0;
    CLI::App* ex_verdict = exceptional->add_subcommand("verdict", "verdict for one orbit");
    ex_verdict->add_option("--form", ev_form, "real form, e.g. E7(7)")->required();
    ex_verdict->add_option("--orbit", ev_orbit, "orbit number")->required();
    ex_verdict->add_option("--format", ev_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* roots = app.add_subcommand("roots", "exact root-system computations");
    roots->require_subcommand(1);
    std::string rt_type, rt_theta, rt_datum, rt_format = "text";
    CLI::App* rt_eval = roots->add_subcommand(
        "eval", "evaluate a coweight against an embedded subsystem datum");
    rt_eval->add_option("--type", rt_type, "ambient type: E6, E7, or E8")->required();
    rt_eval->add_option("--theta", rt_theta, "coweight in coroot coordinates, e.g. 1,0,0,-2,0,1")
        ->required();
    rt_eval->add_option("--datum", rt_datum, "subsystem datum name (available: e6_6)")->required();
    rt_eval->add_option("--format", rt_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* selftest = app.add_subcommand("selftest", "run the embedded golden checks");

    std::vector<const char*> argv;
    const std::string program = "hcmod";
    argv.push_back(program.c_str());
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) {
            detail::run_classify(cargs, out);
        } else if (cg->parsed()) {
            detail::run_component_group(cg_tau, cg_format, out);
        } else if (ab->parsed()) {
            detail::run_ab_diagrams(ab_tau, ab_k, ab_format, out);
        } else if (slices->parsed()) {
            if (sl_list->parsed()) detail::run_slices_list(sl_format, out);
            else detail::run_slices_verdict(sv_kind, sv_period, sv_scalar, sv_involution,
                                            sv_format, out);
        } else if (exceptional->parsed()) {
            if (ex_list->parsed()) detail::run_exceptional_list(ex_format, out);
            else detail::run_exceptional_verdict(ev_form, ev_orbit, ev_format, out);
        } else if (roots->parsed()) {
            detail::run_roots_eval(rt_type, rt_theta, rt_datum, rt_format, out);
        } else if (selftest->parsed()) {
            return run_selftest(out);
        }
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace hcmod::cli
