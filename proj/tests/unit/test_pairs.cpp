#include <doctest.h>

#include <map>
#include <set>

#include "kronface/errors.hpp"
#include "kronface/golden.hpp"
#include "kronface/pairs.hpp"

using namespace kronface;

namespace {

std::multiset<std::string> kinds(const OrderMatrix& m) {
  std::multiset<std::string> out;
  for (const auto& a : detect_configs(m)) out.insert(to_string(a.kind));
  return out;
}

}  // namespace

TEST_SUITE("pairs") {
  TEST_CASE("configurations of the 2 x 2 matrices") {
    const auto ms = enumerate_order_matrices(2, 2);
    CHECK(kinds(ms[0]) == std::multiset<std::string>{"ADD", "H", "H", "C", "D"});
    CHECK(kinds(ms[1]) == std::multiset<std::string>{"ADD", "V", "V", "C", "D"});
    CHECK(detect_configs(ms[0]).front().kind == ConfigKind::ADD);
  }

  TEST_CASE("pair counts by length") {
    const std::map<std::pair<int, int>, std::array<int, 3>> expected{
        {{2, 2}, {2, 4, 4}}, {{3, 2}, {5, 15, 20}}, {{2, 3}, {5, 15, 20}}, {{3, 3}, {36, 144, 232}}};
    for (const auto& [shape, counts] : expected) {
      const auto pairs = build_all_pairs(enumerate_order_matrices(shape.first, shape.second));
      std::array<int, 3> got{0, 0, 0};
      for (const auto& p : pairs) {
        REQUIRE(p.length() <= 2);
        ++got[static_cast<std::size_t>(p.length())];
        CHECK(p.status == (p.length() <= 1 ? PairStatus::WellCoveringByTheorem : PairStatus::Dominant));
      }
      CHECK(got == counts);
    }
  }

  TEST_CASE("every built pair is dominant and normalized") {
    for (const auto& p : build_all_pairs(enumerate_order_matrices(3, 2))) {
      CHECK(dominance_check(p.v, p.v_hat, p.source.w_hat()));
      CHECK(p.u_hat == normalize(p.v, p.v_hat));
      CHECK(p.u_hat == embed_weyl_pair(p.v) * p.v_hat.inverse());
      if (p.length() <= 1) CHECK(wellcovering_root_identity(p.v, p.v_hat, p.source.w_hat()));
    }
  }

  TEST_CASE("configuration pairs equal the exhaustive sweep") {
    for (auto [n1, n2] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
      const auto ms = enumerate_order_matrices(n1, n2);
      const auto pairs = build_all_pairs(ms);
      for (std::size_t i = 0; i < ms.size(); ++i) {
        std::vector<CandidatePair> from_configs;
        for (const auto& p : pairs) {
          if (p.matrix_id == static_cast<int>(i) + 1) from_configs.push_back({p.v, p.v_hat});
        }
        std::sort(from_configs.begin(), from_configs.end());
        CHECK(from_configs == generic_length2_sweep(ms[i]));
      }
    }
  }

  TEST_CASE("u_hat values match the 2 x 2 reference table") {
    const auto table = load_uhat_table(default_golden_dir() + "/uhat_2x2.txt", 2, 2);
    const auto ms = enumerate_order_matrices(2, 2);
    const auto pairs = build_all_pairs(ms);
    for (const auto& g : table.pairs) {
      const auto& gm = table.matrix(g.matrix_id);
      std::set<Permutation> ours;
      for (const auto& p : pairs) {
        if (p.source.ranks() == gm.ranks && p.length() == g.length) ours.insert(p.u_hat);
      }
      CHECK_MESSAGE(ours.count(parse_cycles(g.u_hat, 4)) == 1, g.label);
    }
  }

  TEST_CASE("phi is a homomorphism") {
    const auto a = weyl_pairs_of_length(3, 2, 2);
    const auto b = weyl_pairs_of_length(3, 2, 1);
    for (const auto& x : a) {
      for (const auto& y : b) CHECK(embed_weyl_pair(x * y) == embed_weyl_pair(x) * embed_weyl_pair(y));
    }
    CHECK(embed_weyl_pair(WeylPair::identity(3, 2)).is_identity());
  }

  TEST_CASE("tags round trip") {
    for (auto k : {ConfigKind::ADD, ConfigKind::H, ConfigKind::V, ConfigKind::A, ConfigKind::B, ConfigKind::Bt,
                   ConfigKind::C, ConfigKind::D, ConfigKind::E1, ConfigKind::E2, ConfigKind::Et1, ConfigKind::Et2}) {
      CHECK(parse_config_kind(to_string(k)) == k);
    }
    for (auto s : {PairStatus::Dominant, PairStatus::WellCoveringByTheorem, PairStatus::WellCoveringCertified,
                   PairStatus::NotWellCovering}) {
      CHECK(parse_pair_status(to_string(s)) == s);
    }
    CHECK_THROWS_AS(parse_config_kind("Q"), DomainError);
    CHECK_THROWS_AS(parse_pair_status("maybe"), DomainError);
  }

  TEST_CASE("anchors must occur in the matrix") {
    const auto m = enumerate_order_matrices(2, 2)[0];  // 1 2 / 3 4
    ConfigAnchor bogus{ConfigKind::V, 1, 0, {{1, 1}, {2, 1}}};
    CHECK_THROWS_AS(build_pair(m, bogus), DomainError);
  }
}
