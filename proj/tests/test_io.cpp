#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaff/construction.hpp"
#include "qaff/errors.hpp"
#include "qaff/io.hpp"

#include <filesystem>
#include <string>

using namespace qaff;

namespace {

const QParam q2{Rational(2)};

std::string d1_system_text() { return serialize(gen_evaluation(1, Rational(1), q2)); }

}  // namespace

TEST_CASE("system round trip is exact and byte-stable") {
    const RLSystem sys = gen_evaluation(2, Rational(5), QParam{Rational(3, 2)});
    const std::string text = serialize(sys);
    CHECK(parse_system(text).admit() == sys);
    CHECK(serialize(parse_system(text).admit()) == text);
    CHECK(serialize(sys) == text);  // deterministic bytes
    CHECK(text.back() == '\n');
}

TEST_CASE("module round trip is exact and byte-stable") {
    const HatModule m = construct_module(gen_evaluation(2, Rational(1), q2)).module;
    const std::string text = serialize(m);
    CHECK(parse_module(text) == m);
    CHECK(serialize(parse_module(text)) == text);
}

TEST_CASE("trace serialization carries every intermediate") {
    const Construction c = construct_module(gen_evaluation(1, Rational(1), q2));
    const std::string text = serialize(c.trace);
    for (const char* key : {"\"K\"", "\"A\"", "\"Astar\"", "\"V\"", "\"Vstar\"", "\"W\"",
                            "\"Wstar\"", "\"H\"", "\"B\"", "\"Bstar\"", "\"r\"", "\"l\"",
                            "\"rho\""}) {
        CAPTURE(key);
        CHECK(text.find(key) != std::string::npos);
    }
    CHECK(serialize(c.trace) == text);
}

TEST_CASE("report serialization") {
    VerificationReport rep;
    rep.add({"sample.pass", true, 0});
    rep.add({"sample.fail", false, 3});
    const std::string text = serialize(rep);
    CHECK(text.find("\"passed\": false") != std::string::npos);
    CHECK(text.find("\"sample.fail\"") != std::string::npos);
    CHECK(text.find("\"residual_bits\": 3") != std::string::npos);
}

TEST_CASE("scalar grammar violations are parse errors with a location") {
    std::string text = d1_system_text();
    const auto pos = text.find("\"1\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 3, "\"1/0\"");
    // Serialized keys are sorted, so the first "1" entry belongs to L.
    try {
        parse_system(text);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        const std::string what = e.what();
        CHECK(what.find("L") != std::string::npos);
        CHECK(what.find("1/0") != std::string::npos);
    }
}

TEST_CASE("malformed JSON and missing fields") {
    CHECK_THROWS_AS(parse_system("{"), ParseError);
    CHECK_THROWS_AS(parse_system("[]"), ParseError);
    CHECK_THROWS_AS(parse_module("{}"), ParseError);

    std::string text = d1_system_text();
    const auto pos = text.find("\"L\"");
    REQUIRE(pos != std::string::npos);
    std::string missing = text;
    missing.replace(pos, 3, "\"M\"");
    CHECK_THROWS_AS(parse_system(missing), ParseError);
}

TEST_CASE("shape violations are parse errors") {
    // entries count disagreeing with rows x cols
    std::string text = d1_system_text();
    const auto pos = text.find("\"rows\": 2");
    REQUIRE(pos != std::string::npos);
    std::string bad = text;
    bad.replace(pos, 9, "\"rows\": 3");
    CHECK_THROWS_AS(parse_system(bad), ParseError);
}

TEST_CASE("a non-decomposition is rejected structurally, before the clauses") {
    // duplicate U_0 so the parts overlap
    std::string text = d1_system_text();
    const auto u_pos = text.find("\"U\"");
    REQUIRE(u_pos != std::string::npos);
    // build the same file through json-level surgery: parse, overwrite U_1 with U_0
    ParsedSystem sys = parse_system(text);
    sys.u[1] = sys.u[0];
    const VerificationReport rep = sys.validate();
    CHECK_FALSE(rep.passed());
    CHECK(rep.first_failure() == "decomposition.direct");
    CHECK(rep.find("clause.i.raising") == nullptr);
    CHECK_THROWS_AS(sys.admit(), ValidationError);
}

TEST_CASE("inadmissible q in a file is a validation failure, not a parse failure") {
    std::string text = d1_system_text();
    const auto pos = text.find("\"q\": \"2\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 8, "\"q\": \"1\"");
    try {
        parse_system(text).admit();
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.report.first_failure() == "q.admissible");
    }
}

TEST_CASE("read_file and write_file") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "qaff-io-test";
    fs::create_directories(dir);
    const fs::path file = dir / "roundtrip.json";
    write_file(file, d1_system_text());
    CHECK(read_file(file) == d1_system_text());
    CHECK_THROWS_AS(read_file(dir / "absent.json"), IoError);
    fs::remove_all(dir);
}
