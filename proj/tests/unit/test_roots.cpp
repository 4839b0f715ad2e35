#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "kronface/errors.hpp"
#include "kronface/order_matrix.hpp"
#include "kronface/roots.hpp"

using namespace kronface;

namespace {

std::vector<Permutation> all_permutations(int m) {
  std::vector<int> w(m);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace

TEST_SUITE("roots") {
  TEST_CASE("weight vector arithmetic") {
    const auto r = WeightVector::root(Lattice::EpsHat, 1, 3);
    CHECK(r.to_string() == "epshat_1-epshat_3");
    CHECK((r - r).is_zero());
    CHECK((r + r).coefficient(Lattice::EpsHat, 3) == -2);
    CHECK(-(-r) == r);
  }

  TEST_CASE("inversion sets have the Coxeter length as size") {
    for (const auto& u : all_permutations(5)) {
      auto inv = inversion_set(u);
      inv.normalize();
      CHECK(static_cast<int>(inv.size()) == u.length());
      for (const auto& root : inv.roots) {
        // negative roots: the larger index carries +1
        REQUIRE(root.terms().size() == 2);
        CHECK(root.terms()[0].coeff == -1);
      }
    }
  }

  TEST_CASE("a simple reflection inverts the negative simple root") {
    for (int i = 1; i < 5; ++i) {
      const auto inv = inversion_set(Permutation::transposition(5, i, i + 1));
      REQUIRE(inv.size() == 1);
      CHECK(inv.roots[0] == WeightVector::root(Lattice::EpsHat, i + 1, i));
    }
  }

  TEST_CASE("the G-side inversion set is the union of both factors") {
    const WeylPair v{Permutation::transposition(3, 1, 2), Permutation::longest(2)};
    auto inv = inversion_set(v);
    inv.normalize();
    CHECK(static_cast<int>(inv.size()) == v.length());
  }

  TEST_CASE("restriction sends epshat_lex(i,j) to eps_i + eta_j") {
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 2; ++j) {
        const auto w = restrict_rho(WeightVector::basis(Lattice::EpsHat, lex_index({i, j}, 3, 2)), 3, 2);
        CHECK(w == WeightVector::basis(Lattice::Eps, i) + WeightVector::basis(Lattice::Eta, j));
      }
    }
  }

  TEST_CASE("actions permute indices") {
    const auto u = Permutation::cycle(4, {1, 2, 3});
    CHECK(act(u, WeightVector::basis(Lattice::EpsHat, 1)) == WeightVector::basis(Lattice::EpsHat, 2));
    const WeylPair v{Permutation::transposition(2, 1, 2), Permutation::identity(3)};
    CHECK(act(v, WeightVector::basis(Lattice::Eps, 1)) == WeightVector::basis(Lattice::Eps, 2));
    CHECK(act(v, WeightVector::basis(Lattice::Eta, 3)) == WeightVector::basis(Lattice::Eta, 3));
  }

  TEST_CASE("negative root counts") {
    CHECK(negative_roots(2, 3).size() == 1 + 3);
    CHECK(negative_roots(6).size() == 15);
  }

  TEST_CASE("additive pairs are dominant for every order matrix") {
    for (auto [n1, n2] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
      for (const auto& m : enumerate_order_matrices(n1, n2)) {
        const auto w_hat = m.w_hat();
        const auto v_hat = (w_hat * Permutation::longest(n1 * n2)).inverse();
        CHECK(dominance_check(WeylPair::identity(n1, n2), v_hat, w_hat));
        CHECK(wellcovering_root_identity(WeylPair::identity(n1, n2), v_hat, w_hat));
      }
    }
  }

  TEST_CASE("the additive pair is the only length-zero dominant pair") {
    for (const auto& m : enumerate_order_matrices(2, 2)) {
      int passing = 0;
      for (const auto& v_hat : all_permutations(4)) {
        passing += dominance_check(WeylPair::identity(2, 2), v_hat, m.w_hat()) ? 1 : 0;
      }
      CHECK(passing == 1);
    }
  }

  TEST_CASE("Weyl pairs of a given length") {
    CHECK(weyl_pairs_of_length(2, 2, 0).size() == 1);
    CHECK(weyl_pairs_of_length(2, 2, 1).size() == 2);
    CHECK(weyl_pairs_of_length(3, 2, 2).size() == 2 + 2);
    for (const auto& v : weyl_pairs_of_length(3, 3, 3)) CHECK(v.length() == 3);
  }

  TEST_CASE("size mismatches are rejected") {
    CHECK_THROWS_AS(dominance_check(WeylPair::identity(2, 2), Permutation::identity(5), Permutation::identity(4)),
                    DomainError);
  }
}
