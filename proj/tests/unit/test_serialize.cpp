#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "kronface/errors.hpp"
#include "kronface/golden.hpp"
#include "kronface/serialize.hpp"

using namespace kronface;

namespace {

template <class T>
T round_trip(const T& x) {
  return Json::parse(Json(x).dump()).get<T>();
}

const PipelineResult& small_run() {
  static const PipelineResult r = [] {
    PipelineOptions o = PipelineOptions::defaults_for(3, 2);
    o.n_max = 7;
    o.cert_n_max = 7;
    o.depth = 2;
    return run_pipeline(o);
  }();
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("scalar types round trip") {
    CHECK(round_trip(Partition{4, 3, 0}) == Partition{4, 3});
    CHECK(round_trip(parse_cycles("(1 9 4 2 6)(5 8)", 9)) == parse_cycles("(1 9 4 2 6)(5 8)", 9));
    CHECK(round_trip(GridIndex{2, 3}) == GridIndex{2, 3});
    const WeylPair v{Permutation::longest(3), Permutation::transposition(2, 1, 2)};
    CHECK(round_trip(v) == v);
    const FaceEquation e{false, 2, {1, 5}};
    CHECK(round_trip(e) == e);
    CHECK(Json(e).dump() == R"({"lhs":"beta_2","rhs":["gamma_1","gamma_5"]})");
  }

  TEST_CASE("pipeline payloads round trip") {
    const auto& r = small_run();
    for (const auto& m : r.matrices) {
      const auto back = round_trip(m);
      CHECK(back == m);
      CHECK(back.witness() == m.witness());
    }
    for (const auto& p : r.pairs) CHECK(round_trip(p) == p);
    for (const auto& f : r.faces) CHECK(round_trip(f) == f);
  }

  TEST_CASE("rational matrices keep exact values") {
    const RationalMatrix m{{Rational(1, 3), Rational(-2)}, {0, Rational(7, 4)}};
    const auto j = rational_matrix_to_json(m);
    CHECK(j.dump() == R"([["1/3","-2"],["0","7/4"]])");
    CHECK(rational_matrix_from_json(j) == m);
  }

  TEST_CASE("result JSON layout") {
    const auto j = result_to_json(small_run());
    for (const char* key : {"parameters", "order_matrices", "pairs", "faces"}) CHECK(j.contains(key));
    CHECK(j["order_matrices"].size() == 5);
    CHECK(j["pairs"][0].contains("u_hat_cycles"));
  }

  TEST_CASE("golden readers reject malformed lines") {
    const auto bad_table = write_temp("kronface_bad_uhat.txt", "matrix 1 | 1 2 / 3 | 2,0|1,0\n");
    CHECK_THROWS_AS(load_uhat_table(bad_table, 2, 2), DomainError);
    const auto bad_eq = write_temp("kronface_bad_eq.txt", "2 2 | (1 2 4) | alpha_1 == gamma_1\n");
    CHECK_THROWS_AS(load_equation_examples(bad_eq), DomainError);
    CHECK_THROWS_AS(load_span_systems("/nonexistent/spans.txt"), DomainError);
  }

  TEST_CASE("reference tables load") {
    const auto t = load_uhat_table(default_golden_dir() + "/uhat_3x2.txt", 3, 2);
    CHECK(t.matrices.size() == 5);
    CHECK(t.pairs.size() == 40);
    CHECK(t.certified.size() == 8);
    CHECK(to_cycle_string(t.corrected_u_hat(t.pair("C3_6"))) == "(1 3 5)(2 6)");
  }
}
