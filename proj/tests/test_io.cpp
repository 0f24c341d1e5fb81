#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>

#include "example_data.hpp"
#include "nsm/io.hpp"
#include "test_support.hpp"

using namespace nsm;

namespace {

const std::filesystem::path kFixtures{NSM_FIXTURES_DIR};

}  // namespace

TEST_CASE("fixture files parse to the expected matrices") {
  const NsMatrix a = read_matrix_file(kFixtures / "case_study_a.json");
  CHECK(a == nsmtest::case_study_a());
  CHECK(a.at(0, 0) == NsValue{UnitValue(1.0), UnitValue(0.1), UnitValue(0.1)});

  CHECK(read_matrix_file(kFixtures / "example1_n1.json") ==
        nsmtest::example1_n1());
  CHECK(read_matrix_file(kFixtures / "example1_n2.json") ==
        nsmtest::example1_n2());
  CHECK(read_matrix_file(kFixtures / "case_study_b.json") ==
        nsmtest::case_study_b());
  CHECK(read_matrix_file(kFixtures / "example_square.json") ==
        nsmtest::square_example());
}

TEST_CASE("missing files and malformed documents raise validation errors") {
  CHECK_THROWS_AS(read_matrix_file(kFixtures / "no_such_file.json"),
                  ValidationError);
  CHECK_THROWS_WITH_AS(parse_matrix("this is { not json"),
                       doctest::Contains("malformed JSON"), ValidationError);
  CHECK_THROWS_AS(parse_matrix("[1, 2, 3]"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_matrix(R"({"parameters": ["x1"], "entries": []})"),
                       doctest::Contains("universe"), ValidationError);
}

TEST_CASE("the first offending cell is named in diagnostics") {
  const char* doc = R"({
    "universe": ["u1", "u2"],
    "parameters": ["x1"],
    "entries": [[[0.5, 1.2, 0.1]], [[0.3, 0.2, 0.1]]]
  })";
  CHECK_THROWS_WITH_AS(parse_matrix(doc),
                       doctest::Contains("entry (u1, x1): component I = 1.2"),
                       ValidationError);

  const char* negative = R"({
    "universe": ["u1"],
    "parameters": ["x1", "x2"],
    "entries": [[[0.5, 0.2, 0.1], [0.3, 0.2, -0.4]]]
  })";
  CHECK_THROWS_WITH_AS(parse_matrix(negative),
                       doctest::Contains("entry (u1, x2): component F"),
                       ValidationError);

  const char* not_number = R"({
    "universe": ["u1"],
    "parameters": ["x1"],
    "entries": [[[0.5, "high", 0.1]]]
  })";
  CHECK_THROWS_WITH_AS(parse_matrix(not_number),
                       doctest::Contains("component I is not a number"),
                       ValidationError);
}

TEST_CASE("shape problems in documents raise validation errors") {
  const char* extra_row = R"({
    "universe": ["u1", "u2"],
    "parameters": ["x1"],
    "entries": [[[0.1, 0.2, 0.3]], [[0.1, 0.2, 0.3]], [[0.1, 0.2, 0.3]]]
  })";
  CHECK_THROWS_WITH_AS(parse_matrix(extra_row),
                       doctest::Contains("3 rows, expected 2"), ValidationError);

  const char* ragged = R"({
    "universe": ["u1"],
    "parameters": ["x1", "x2"],
    "entries": [[[0.1, 0.2, 0.3]]]
  })";
  CHECK_THROWS_AS(parse_matrix(ragged), ValidationError);

  const char* bad_cell = R"({
    "universe": ["u1"],
    "parameters": ["x1"],
    "entries": [[[0.1, 0.2]]]
  })";
  CHECK_THROWS_WITH_AS(parse_matrix(bad_cell), doctest::Contains("triple"),
                       ValidationError);

  const char* duplicate = R"({
    "universe": ["u1", "u1"],
    "parameters": ["x1"],
    "entries": [[[0.1, 0.2, 0.3]], [[0.1, 0.2, 0.3]]]
  })";
  CHECK_THROWS_WITH_AS(parse_matrix(duplicate), doctest::Contains("duplicate"),
                       ValidationError);
}

TEST_CASE("serialization round-trips exactly") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const NsMatrix m = nsmtest::random_matrix(rng, 1 + trial % 5, 1 + trial % 4);
    const std::string text = serialize_matrix(m);
    CHECK(parse_matrix(text) == m);
    // stable bytes
    CHECK(serialize_matrix(parse_matrix(text)) == text);
  }
}

TEST_CASE("equivalent numeric literals parse to the same matrix") {
  const char* terse = R"({"universe": ["u1"], "parameters": ["x1"],
                          "entries": [[[0.5, 0.25, 1]]]})";
  const char* padded = R"({"universe": ["u1"], "parameters": ["x1"],
                           "entries": [[[0.50, 0.250, 1.0]]]})";
  CHECK(parse_matrix(terse) == parse_matrix(padded));
  // seventeen significant digits are accepted
  const char* precise = R"({"universe": ["u1"], "parameters": ["x1"],
                            "entries": [[[0.12345678901234567, 0, 1]]]})";
  CHECK(parse_matrix(precise).at(0, 0).truth.get() ==
        doctest::Approx(0.12345678901234567).epsilon(1e-15));
}

TEST_CASE("outcome rendering") {
  const DecisionOutcome outcome =
      nsm_decide(nsmtest::case_study_a(), nsmtest::case_study_b(),
                 ProductKind::And, norm(NormId::minmax));

  const std::string table = render_outcome_table(outcome, 4);
  CHECK(table.find("object") != std::string::npos);
  CHECK(table.find("0.9500") != std::string::npos);
  CHECK(table.find("optimum: u2 (score=0.9500)") != std::string::npos);

  const std::string coarse = render_outcome_table(outcome, 2);
  CHECK(coarse.find("0.95") != std::string::npos);
  CHECK(coarse.find("0.9500") == std::string::npos);

  const std::string json_text = serialize_outcome(outcome);
  CHECK(json_text.find("\"object\": \"u2\"") != std::string::npos);
  CHECK(json_text.find("\"scores\"") != std::string::npos);
  CHECK(json_text.find("\"optimum\"") != std::string::npos);
}
