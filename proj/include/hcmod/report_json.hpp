#pragma once

// JSON serialization for classification reports.  The emitted document is
// the machine-readable face of the CLI:
//
//   {
//     "input":           {"tau": "2,1", "pair": "spin", "lambda": ["0", "0"]},
//     "verdict":         "classification",
//     "component_group": {"label": "Z4", "order": 4, "model": "extension"},
//     "irreducibles":    [{"id": 0, "degree": 1, "scalars": {"1": "1"},
//                          "sign": "1", "admitted": true, "rule": "..."}],
//     "counts":          {"local_systems": 4, "hc_modules": 3},
//     "notes":           ["..."],
//     "inner":           { ... present for the inner pair only ... }
//   }
//
// report_from_json inverts report_to_json exactly, field for field.

#include <string>
#include <vector>

#include <json.hpp>

#include "hcmod/classifier.hpp"

namespace hcmod {

using nlohmann::json;

namespace detail {

[[nodiscard]] inline json lambda_to_json(const std::vector<Rational>& lambda) {
    json arr = json::array();
    for (const Rational& v : lambda) arr.push_back(v.to_string());
    return arr;
}

[[nodiscard]] inline std::vector<Rational> lambda_from_json(const json& arr) {
    if (!arr.is_array()) throw invalid_input("'lambda' must be an array of rational strings");
    std::vector<Rational> out;
    for (const json& v : arr) out.push_back(Rational::parse(v.get<std::string>()));
    return out;
}

} // namespace detail

[[nodiscard]] inline json report_to_json(const ClassificationReport& r) {
    json doc;
    doc["input"] = {{"tau", r.tau.to_string()},
                    {"pair", r.pair},
                    {"lambda", detail::lambda_to_json(r.lambda)}};
    doc["verdict"] = r.verdict;
    doc["component_group"] = {{"label", r.group_descriptor},
                              {"order", r.group_order},
                              {"model", r.model}};
    json rows = json::array();
    for (const IrreducibleRow& row : r.rows) {
        json scalars = json::object();
        for (const auto& [part, s] : row.scalars) scalars[std::to_string(part)] = to_string(s);
        rows.push_back({{"id", row.id},
                        {"degree", row.degree},
                        {"scalars", std::move(scalars)},
                        {"sign", to_string(row.sign_scalar)},
                        {"admitted", row.admitted},
                        {"rule", row.rule}});
    }
    doc["irreducibles"] = std::move(rows);
    doc["counts"] = {{"local_systems", r.local_systems}, {"hc_modules", r.hc_modules}};
    doc["notes"] = r.notes;
    if (r.inner) {
        json diagrams = json::array();
        for (const ABDiagram& d : r.inner->diagrams) diagrams.push_back(d.to_string());
        json levi = json::array();
        for (const auto& blocks : r.inner->levi) {
            json entry = json::object();
            for (const auto& [length, counts] : blocks)
                entry[std::to_string(length)] = {counts.first, counts.second};
            levi.push_back(std::move(entry));
        }
        doc["inner"] = {{"k", r.inner->k},
                        {"verdict", r.inner->verdict},
                        {"diagrams", std::move(diagrams)},
                        {"levi", std::move(levi)}};
    }
    return doc;
}

[[nodiscard]] inline ClassificationReport report_from_json(const json& doc) {
    try {
        ClassificationReport r;
        const json& input = doc.at("input");
        r.tau = Partition::parse(input.at("tau").get<std::string>());
        r.pair = input.at("pair").get<std::string>();
        r.lambda = detail::lambda_from_json(input.at("lambda"));
        r.verdict = doc.at("verdict").get<std::string>();
        const json& comp = doc.at("component_group");
        r.group_descriptor = comp.at("label").get<std::string>();
        r.group_order = comp.at("order").get<long long>();
        r.model = comp.at("model").get<std::string>();
        for (const json& row : doc.at("irreducibles")) {
            IrreducibleRow ir;
            ir.id = row.at("id").get<int>();
            ir.degree = row.at("degree").get<int>();
            for (const auto& [part, s] : row.at("scalars").items())
                ir.scalars[std::stoi(part)] = parse_unit_scalar(s.get<std::string>());
            ir.sign_scalar = parse_unit_scalar(row.at("sign").get<std::string>());
            ir.admitted = row.at("admitted").get<bool>();
            ir.rule = row.at("rule").get<std::string>();
            r.rows.push_back(std::move(ir));
        }
        const json& counts = doc.at("counts");
        r.local_systems = counts.at("local_systems").get<int>();
        r.hc_modules = counts.at("hc_modules").get<int>();
        r.notes = doc.at("notes").get<std::vector<std::string>>();
        if (doc.contains("inner")) {
            const json& inner = doc.at("inner");
            InnerCaseReport rep{r.tau, inner.at("k").get<int>(),
                                inner.at("verdict").get<std::string>(), {}, {}};
            for (const json& d : inner.at("diagrams")) {
                const std::string text = d.get<std::string>();
                std::vector<std::string> parsed_rows;
                std::size_t pos = 0;
                while (pos <= text.size()) {
                    const std::size_t slash = text.find('/', pos);
                    parsed_rows.push_back(text.substr(
                        pos, slash == std::string::npos ? std::string::npos : slash - pos));
                    if (slash == std::string::npos) break;
                    pos = slash + 1;
                }
                rep.diagrams.emplace_back(parsed_rows);
            }
            for (const json& entry : inner.at("levi")) {
                std::map<int, std::pair<int, int>> blocks;
                for (const auto& [length, counts2] : entry.items())
                    blocks[std::stoi(length)] = {counts2.at(0).get<int>(),
                                                 counts2.at(1).get<int>()};
                rep.levi.push_back(std::move(blocks));
            }
            r.inner = std::move(rep);
        }
        return r;
    } catch (const json::exception& e) {
        throw invalid_input(std::string("malformed report document: ") + e.what());
    }
}

} // namespace hcmod
