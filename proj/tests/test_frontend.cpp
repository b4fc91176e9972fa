#include <doctest.h>

#include <json.hpp>

#include <fstream>

#include "oracle.hpp"
#include "skewhopf/builtins.hpp"
#include "skewhopf/parse.hpp"
#include "skewhopf/report.hpp"

using namespace skewhopf;

namespace {

const char* kHeisenbergSource = R"(# coordinate functions of the unitriangular group
algebra "heisenberg"
gen y
gen z {
  sigma: y -> y;
  sigma_inv: y -> y;
}
gen x {
  sigma: y -> y; z -> z;
  sigma_inv: y -> y; z -> z;
  w: y ox z
}
)";

// Minimal structural validator for the subset of JSON Schema the report
// schema uses: type, required, properties, items, enum, additionalProperties.
bool conforms(const nlohmann::json& schema, const nlohmann::json& value) {
    if (schema.contains("enum")) {
        for (const auto& v : schema["enum"])
            if (v == value) return true;
        return false;
    }
    if (schema.contains("type")) {
        const std::string type = schema["type"];
        if (type == "object" && !value.is_object()) return false;
        if (type == "array" && !value.is_array()) return false;
        if (type == "string" && !value.is_string()) return false;
        if (type == "integer" && !value.is_number_integer()) return false;
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!value.contains(key.get<std::string>())) return false;
    if (schema.contains("properties")) {
        for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
            if (value.contains(it.key()) && !conforms(it.value(), value[it.key()])) return false;
        if (schema.value("additionalProperties", true) == false)
            for (auto it = value.begin(); it != value.end(); ++it)
                if (!schema["properties"].contains(it.key())) return false;
    }
    if (schema.contains("items") && value.is_array())
        for (const auto& item : value)
            if (!conforms(schema["items"], item)) return false;
    return true;
}

}  // namespace

TEST_CASE("the heisenberg source parses to the builtin data") {
    HopfTower parsed = parse(kHeisenbergSource);
    CHECK(parsed == builtin("heisenberg"));
    CHECK(parsed.name() == "heisenberg");
    CHECK(parsed.tail(2) == parse_tensor("y ox z", parsed.tower()));
}

TEST_CASE("positioned parse errors") {
    // forward reference in a sigma entry
    try {
        parse("algebra \"t\"\ngen t {\n  sigma: t -> t;\n  sigma_inv: t -> t;\n}\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("forward reference") != std::string::npos);
    }

    // unbound parameter
    try {
        parse("algebra \"b\"\nparam lambda\ngen u\ngen v {\n  sigma: u -> u;\n  sigma_inv: u -> "
              "u;\n  delta: u -> lambda*u;\n}\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("unbound parameter") != std::string::npos);
    }

    // malformed rational
    CHECK_THROWS_AS(parse("algebra \"m\"\nparam q = 1/0\ngen a\n"), ParseError);
    // unknown identifier
    CHECK_THROWS_AS(
        parse("algebra \"u\"\ngen a\ngen b {\n  sigma: a -> c;\n  sigma_inv: a -> a;\n}\n"),
        ParseError);
    // reserved word as a generator
    CHECK_THROWS_AS(parse("algebra \"r\"\ngen w\n"), ParseError);
    // duplicate generator
    CHECK_THROWS_AS(parse("algebra \"d\"\ngen a\ngen a\n"), ParseError);
    // first generator admits no clauses
    CHECK_THROWS_AS(parse("algebra \"f\"\ngen a {\n  w: a ox a\n}\n"), ParseError);
}

TEST_CASE("bound parameters substitute into the images") {
    HopfTower direct = builtin("B(1/2)");
    std::string source = R"src(algebra "B(1/2)"
param lambda = 1/2
gen Y
gen X {
  sigma: Y -> Y;
  sigma_inv: Y -> Y;
  delta: Y -> Y;
}
gen Z {
  sigma: Y -> Y; X -> X - 1;
  sigma_inv: Y -> Y; X -> X + 1;
  delta: X -> lambda*Y;
  w: X ox Y - Y ox X
}
)src";
    CHECK(parse(source) == direct);
}

TEST_CASE("serialize round-trips every builtin byte-deterministically") {
    for (const auto& name : builtin_sample_names()) {
        HopfTower h = builtin(name);
        std::string text = serialize(h);
        CHECK(text == serialize(h));
        HopfTower again = parse(text);
        CHECK(again == h);
        CHECK(serialize(again) == text);
    }
}

TEST_CASE("serialized change_variable output reparses and passes the checks") {
    HopfTower b = builtin("B(1)");
    HopfTower normalized = counit_normalize(change_variable(b, 1, rat(2)));
    HopfTower reparsed = parse(serialize(normalized));
    CHECK(reparsed == normalized);
    CHECK(check_all(reparsed).all_pass());
}

TEST_CASE("parse o serialize is the identity on random structural towers") {
    oracle::Rng rng(2024);
    int built = 0;
    while (built < 100) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
        std::vector<OreStep> steps(n);
        for (std::size_t g = 1; g < n; ++g)
            for (std::size_t j = 0; j < g; ++j) {
                steps[g].sigma.push_back(NcPoly::generator(n, j));
                steps[g].sigma_inv.push_back(NcPoly::generator(n, j));
                NcPoly d(n);
                for (const auto& [m, c] :
                     oracle::random_poly(rng, g, 2, rng.uniform(0, 2)).terms()) {
                    Monomial mm = Monomial::unit(n);
                    for (std::size_t s = 0; s < g; ++s) mm.exp[s] = m.exp[s];
                    d.add_term(mm, c);
                }
                steps[g].delta.push_back(d);
            }
        std::vector<Tensor2> tails(n, Tensor2::zero(n));
        for (std::size_t g = 1; g < n; ++g) {
            if (rng.uniform(0, 1) == 0) continue;
            NcPoly left(n), right(n);
            for (const auto& [m, c] : oracle::random_poly(rng, g, 2, 2).terms()) {
                Monomial mm = Monomial::unit(n);
                for (std::size_t s = 0; s < g; ++s) mm.exp[s] = m.exp[s];
                left.add_term(mm, c);
            }
            for (const auto& [m, c] : oracle::random_poly(rng, g, 2, 2).terms()) {
                Monomial mm = Monomial::unit(n);
                for (std::size_t s = 0; s < g; ++s) mm.exp[s] = m.exp[s];
                right.add_term(mm, c);
            }
            tails[g] = tensor_product(left, right);
        }
        HopfTower ht(Tower(names, steps), tails, "random");
        HopfTower round = parse(serialize(ht));
        CHECK(round == ht);
        ++built;
    }
}

TEST_CASE("reports are deterministic and schema-conformant") {
    HopfTower h = builtin("usl2");
    Report report;
    report.command = "check";
    report.input_digest = input_digest(serialize(h));
    report.checks = check_all(h);
    report.results["note"] = "unit test";
    std::string a = report.to_json();
    std::string b = report.to_json();
    CHECK(a == b);
    CHECK(report.exit_code() == 0);

    std::ifstream schema_file("docs/report-schema.json");
    if (!schema_file) schema_file.open("../docs/report-schema.json");
    REQUIRE_MESSAGE(schema_file.good(), "report schema must ship with the repository");
    nlohmann::json schema = nlohmann::json::parse(schema_file);
    nlohmann::json value = nlohmann::json::parse(a);
    CHECK(conforms(schema, value));

    Report failing;
    failing.command = "check";
    failing.input_digest = input_digest("x");
    failing.checks.fail("sample", "law", "w");
    failing.checks.unresolved("sample2", "law", "why");
    CHECK(failing.exit_code() == 1);
    CHECK(conforms(schema, nlohmann::json::parse(failing.to_json())));

    Report unresolved;
    unresolved.command = "s4";
    unresolved.input_digest = input_digest("y");
    unresolved.checks.unresolved("sample", "law", "why");
    CHECK(unresolved.exit_code() == 3);
}

TEST_CASE("expression parsing for the command line surface") {
    Tower t = builtin("usl2").tower();
    CHECK(normal_form(parse_expr("(h + 2)^2 - h^2 - 4*h", t), t) == NcPoly::constant(3, rat(4)));
    CHECK_THROWS_AS(parse_expr("q + 1", t), ParseError);
    CHECK_THROWS_AS(parse_expr("h +", t), ParseError);
    CHECK_THROWS_AS(parse_expr("h ^ (1/2)", t), ParseError);
}
