#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"

using namespace hcmod;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("classify emits the golden JSON report for the smallest cover case") {
    const CliResult r = run({"classify", "--tau", "2,1", "--lambda", "0,0", "--format", "json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);

    REQUIRE(doc.at("input").at("tau") == "2,1");
    REQUIRE(doc.at("input").at("pair") == "spin");
    REQUIRE(doc.at("input").at("lambda") == json::array({"0", "0"}));
    REQUIRE(doc.at("component_group").at("label") == "Z4");
    REQUIRE(doc.at("component_group").at("order") == 4);
    REQUIRE(doc.at("component_group").at("model") == "extension");
    REQUIRE(doc.at("counts").at("local_systems") == 4);
    REQUIRE(doc.at("counts").at("hc_modules") == 3);
    REQUIRE(doc.at("irreducibles").size() == 4);

    int rejected = 0;
    for (const json& row : doc.at("irreducibles")) {
        if (!row.at("admitted").get<bool>()) {
            ++rejected;
            REQUIRE(row.at("scalars").at("1") == "-i");
            REQUIRE(row.at("rule").get<std::string>().find("part 1") != std::string::npos);
        }
    }
    REQUIRE(rejected == 1);

    // Omitting --lambda defaults to the zero parameter.
    const CliResult r2 = run({"classify", "--tau", "2,1", "--format", "json"});
    REQUIRE(r2.code == 0);
    REQUIRE(json::parse(r2.out) == doc);
}

TEST_CASE("CLI JSON output parses back to the identical report") {
    const CliResult r = run({"classify", "--tau", "3,2,1", "--format", "json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    const ClassificationReport report = report_from_json(doc);
    REQUIRE(report_to_json(report) == doc);

    const ClassificationReport direct = classify_canonical(Partition(std::vector<int>{3, 2, 1}));
    REQUIRE(report == direct);
}

TEST_CASE("component-group prints the descriptor summary line") {
    const CliResult r = run({"component-group", "--tau", "3,2,1"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "Z4xZ2 (order 8, extension model)\n");

    const CliResult split = run({"component-group", "--tau", "2,1,1"});
    REQUIRE(split.code == 0);
    REQUIRE(split.out == "Z2 (order 2, split model)\n");

    const CliResult j = run({"component-group", "--tau", "2,1", "--format", "json"});
    REQUIRE(j.code == 0);
    const json doc = json::parse(j.out);
    REQUIRE(doc.at("label") == "Z4");
    REQUIRE(doc.at("order") == 4);
    REQUIRE(doc.at("model") == "extension");
}

TEST_CASE("classify renders a text table with counts and notes") {
    const CliResult r = run({"classify", "--tau", "3,2,1"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("component group: Z4xZ2 (order 8, extension model)") != std::string::npos);
    REQUIRE(r.out.find("counts: 8 local systems, 6 admitted") != std::string::npos);
    REQUIRE(r.out.find("two K-orbits, identical verdicts") != std::string::npos);

    // Deterministic output.
    const CliResult again = run({"classify", "--tau", "3,2,1"});
    REQUIRE(again.out == r.out);
}

TEST_CASE("classify handles the inner and symplectic pairs") {
    const CliResult text = run({"classify", "--tau", "2,1", "--pair", "inner", "--k", "2"});
    REQUIRE(text.code == 0);
    REQUIRE(text.out.find("verdict: equivalence") != std::string::npos);
    REQUIRE(text.out.find("ab/a") != std::string::npos);
    REQUIRE(text.out.find("ba/a") != std::string::npos);

    const CliResult j =
        run({"classify", "--tau", "2,1", "--pair", "inner", "--k", "2", "--format", "json"});
    REQUIRE(j.code == 0);
    const json doc = json::parse(j.out);
    REQUIRE(doc.at("verdict") == "equivalence");
    REQUIRE(doc.at("inner").at("k") == 2);
    REQUIRE(doc.at("inner").at("diagrams").size() == 2);
    REQUIRE(report_to_json(report_from_json(doc)) == doc);

    const CliResult sympl = run({"classify", "--tau", "2,2", "--pair", "symplectic"});
    REQUIRE(sympl.code == 0);
    REQUIRE(sympl.out.find("criterion vacuous") != std::string::npos);

    // The spin-only flags are rejected elsewhere.
    REQUIRE(run({"classify", "--tau", "2,1", "--pair", "inner", "--k", "2", "--genuine"}).code ==
            2);
}

TEST_CASE("classify supports the non-integral marking and the genuine filter") {
    const CliResult marked =
        run({"classify", "--tau", "2,1", "--nonintegral", "1", "--format", "json"});
    REQUIRE(marked.code == 0);
    const json mdoc = json::parse(marked.out);
    REQUIRE(mdoc.at("counts").at("local_systems") == 4);
    REQUIRE(mdoc.at("counts").at("hc_modules") == 2);

    const CliResult genuine = run({"classify", "--tau", "2,1", "--genuine", "--format", "json"});
    REQUIRE(genuine.code == 0);
    const json gdoc = json::parse(genuine.out);
    REQUIRE(gdoc.at("counts").at("local_systems") == 2);
    REQUIRE(gdoc.at("counts").at("hc_modules") == 2);
}

TEST_CASE("ab-diagrams lists the diagrams of a shape") {
    const CliResult r = run({"ab-diagrams", "--tau", "2,1", "--k", "2"});
    REQUIRE(r.code == 0);
    REQUIRE(lines_of(r.out) == std::vector<std::string>{"ab/a", "ba/a", "count: 2"});

    const CliResult j = run({"ab-diagrams", "--tau", "2,1", "--k", "2", "--format", "json"});
    REQUIRE(j.code == 0);
    const json doc = json::parse(j.out);
    REQUIRE(doc.at("count") == 2);
    REQUIRE(doc.at("diagrams").size() == 2);
    REQUIRE(doc.at("diagrams").at(0).at("diagram") == "ab/a");
    REQUIRE(doc.at("diagrams").at(0).at("levi").contains("1"));
    REQUIRE(doc.at("diagrams").at(0).at("levi").contains("2"));

    REQUIRE(run({"ab-diagrams", "--tau", "2,1", "--k", "0"}).code == 2);
    REQUIRE(run({"ab-diagrams", "--tau", "2,1", "--k", "4"}).code == 2);
}

TEST_CASE("slices verbs expose the catalog and the decision table") {
    const CliResult list = run({"slices", "list"});
    REQUIRE(list.code == 0);
    REQUIRE(lines_of(list.out).size() == 5);
    REQUIRE(list.out.find("a2") != std::string::npos);
    REQUIRE(list.out.find("C^4/{+-1}") != std::string::npos);

    const CliResult jlist = run({"slices", "list", "--format", "json"});
    REQUIRE(json::parse(jlist.out).size() == 5);

    const CliResult strongly =
        run({"slices", "verdict", "--kind", "a2", "--period", "0", "--scalar", "i"});
    REQUIRE(strongly.code == 0);
    REQUIRE(strongly.out.find("verdict: strongly_quantizable") != std::string::npos);
    REQUIRE(strongly.out.find("twist 3/2") != std::string::npos);

    const CliResult excluded = run(
        {"slices", "verdict", "--kind", "a2", "--period", "0", "--scalar", "-i", "--format", "json"});
    REQUIRE(excluded.code == 0);
    REQUIRE(json::parse(excluded.out).at("level") == "not_quantizable");

    const CliResult unobstr = run({"slices", "verdict", "--kind", "c2"});
    REQUIRE(unobstr.code == 0);
    REQUIRE(unobstr.out.find("unobstructive: yes") != std::string::npos);

    REQUIRE(run({"slices", "verdict", "--kind", "c2", "--period", "0", "--scalar", "i"}).code == 2);
    REQUIRE(run({"slices", "verdict", "--kind", "a2", "--scalar", "i"}).code == 2);
    REQUIRE(run({"slices", "verdict", "--kind", "d4"}).code == 2);
}

TEST_CASE("exceptional verbs reproduce the catalog and the counted verdicts") {
    const CliResult list = run({"exceptional", "list"});
    REQUIRE(list.code == 0);
    REQUIRE(lines_of(list.out).size() == 14);

    const CliResult jlist = run({"exceptional", "list", "--format", "json"});
    REQUIRE(json::parse(jlist.out).size() == 14);

    const CliResult e7 = run({"exceptional", "verdict", "--form", "E7(7)", "--orbit", "50"});
    REQUIRE(e7.code == 0);
    REQUIRE(e7.out.find("Zbar=Z4xZ2") != std::string::npos);
    REQUIRE(e7.out.find("counts: 16 local systems, 12 quantize") != std::string::npos);
    REQUIRE(e7.out.find("no quantization: 4") != std::string::npos);

    const CliResult e7j =
        run({"exceptional", "verdict", "--form", "E7(7)", "--orbit", "50", "--format", "json"});
    const json doc = json::parse(e7j.out);
    REQUIRE(doc.at("counts").at("local_systems") == 16);
    REQUIRE(doc.at("counts").at("hc_modules") == 12);
    REQUIRE(doc.at("breakdown").size() == 4);
    for (const json& part : doc.at("breakdown")) REQUIRE(part.at("count") == 4);

    const CliResult e8 = run({"exceptional", "verdict", "--form", "E8(8)", "--orbit", "43"});
    REQUIRE(e8.code == 0);
    REQUIRE(e8.out.find("verdict: equivalence") != std::string::npos);

    const CliResult e6j =
        run({"exceptional", "verdict", "--form", "E6(6)", "--orbit", "10", "--format", "json"});
    const json e6doc = json::parse(e6j.out);
    REQUIRE(e6doc.at("counts").at("local_systems") == 4);
    REQUIRE(e6doc.at("counts").at("hc_modules") == 3);

    REQUIRE(run({"exceptional", "verdict", "--form", "F4(4)", "--orbit", "1"}).code == 2);
}

TEST_CASE("roots eval reproduces the recorded coweight computations") {
    const CliResult first =
        run({"roots", "eval", "--type", "E6", "--theta", "1,0,0,-2,0,1", "--datum", "e6_6"});
    REQUIRE(first.code == 0);
    REQUIRE(first.out.find("values at the datum fundamental weights: 0,1,0,-2") !=
            std::string::npos);
    REQUIRE(first.out.find("cover order: 1") != std::string::npos);

    const CliResult second = run({"roots", "eval", "--type", "E6", "--theta", "1,1,2,2,2,1",
                                  "--datum", "e6_6", "--format", "json"});
    REQUIRE(second.code == 0);
    const json doc = json::parse(second.out);
    REQUIRE(doc.at("values") == json::array({"-1/2", "0", "1/2", "0"}));
    REQUIRE(doc.at("cover_order") == 2);
    REQUIRE(doc.at("pairing_basis") == json::array({"0", "0", "1", "-1", "1", "0"}));

    REQUIRE(run({"roots", "eval", "--type", "E6", "--theta", "1,0", "--datum", "e6_6"}).code == 2);
    REQUIRE(run({"roots", "eval", "--type", "E7", "--theta", "1,0,0,-2,0,1,0", "--datum", "e6_6"})
                .code == 2);
    REQUIRE(run({"roots", "eval", "--type", "E6", "--theta", "1,0,0,-2,0,1", "--datum", "x"})
                .code == 2);
}

TEST_CASE("selftest passes and reports every check") {
    const CliResult r = run({"selftest"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("FAIL") == std::string::npos);
    REQUIRE(r.out.find("all checks passed") != std::string::npos);
    int pass_lines = 0;
    for (const std::string& line : lines_of(r.out))
        if (line.rfind("PASS", 0) == 0) ++pass_lines;
    REQUIRE(pass_lines == 11);
}

TEST_CASE("invalid invocations exit with the input-error code") {
    REQUIRE(run({}).code == 2);                                  // no verb
    REQUIRE(run({"frobnicate"}).code == 2);                      // unknown verb
    REQUIRE(run({"classify"}).code == 2);                        // missing --tau
    REQUIRE(run({"classify", "--tau", "3,1"}).code == 2);        // fails the boundary test
    REQUIRE(run({"classify", "--tau", "2,1", "--lambda", "0"}).code == 2); // wrong length
    REQUIRE(run({"classify", "--tau", "2,1", "--bogus"}).code == 2);
    REQUIRE(run({"component-group", "--tau", "0"}).code == 2);
    REQUIRE(run({"classify", "--tau", "2,1", "--pair", "inner"}).code == 2); // k missing

    const CliResult help = run({"--help"});
    REQUIRE(help.code == 0);
    REQUIRE(help.out.find("classify") != std::string::npos);
}
