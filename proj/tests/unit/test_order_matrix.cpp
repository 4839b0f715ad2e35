#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "kronface/errors.hpp"
#include "kronface/order_matrix.hpp"

using namespace kronface;

TEST_SUITE("order_matrix") {
  TEST_CASE("increasing grid counts follow the hook-length formula") {
    CHECK(increasing_grid_count(2, 2) == 2);
    CHECK(increasing_grid_count(3, 2) == 5);
    CHECK(increasing_grid_count(3, 3) == 42);
    for (int n1 = 1; n1 <= 3; ++n1) {
      for (int n2 = 1; n2 <= 4; ++n2) {
        const auto grids = increasing_grids(n1, n2);
        CHECK(BigInt(grids.size()) == increasing_grid_count(n1, n2));
        CHECK(std::is_sorted(grids.begin(), grids.end()));
        for (const auto& g : grids) CHECK(is_increasing_grid(n1, n2, g));
      }
    }
    CHECK_FALSE(is_increasing_grid(2, 2, {1, 2, 4, 3}));
    CHECK_FALSE(is_increasing_grid(2, 2, {1, 2, 3, 3}));
  }

  TEST_CASE("order matrix counts") {
    CHECK(enumerate_order_matrices(2, 2).size() == 2);
    CHECK(enumerate_order_matrices(3, 2).size() == 5);
    CHECK(enumerate_order_matrices(3, 3).size() == 36);
    CHECK(enumerate_order_matrices(1, 4).size() == 1);
  }

  TEST_CASE("serial and parallel enumeration agree") {
    for (auto [n1, n2] : {std::pair{3, 3}, {4, 2}, {2, 4}}) {
      const auto a = enumerate_order_matrices(n1, n2);
      const auto b = enumerate_order_matrices_serial(n1, n2);
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(a[i].witness() == b[i].witness());
      }
    }
  }

  TEST_CASE("witnesses reproduce their matrices") {
    for (auto [n1, n2] : {std::pair{2, 2}, {3, 2}, {3, 3}, {4, 2}}) {
      for (const auto& m : enumerate_order_matrices(n1, n2)) {
        const auto& w = m.witness();
        CHECK(OrderMatrix::from_witness(w.x, w.y) == m);
        CHECK(w.x.back() == 0);
        CHECK(w.y.back() == 0);
      }
    }
  }

  TEST_CASE("transposition maps the enumeration onto itself") {
    const auto a = enumerate_order_matrices(3, 2);
    const auto b = enumerate_order_matrices(2, 3);
    std::set<OrderMatrix> transposed;
    for (const auto& m : a) transposed.insert(m.transposed());
    CHECK(transposed == std::set<OrderMatrix>(b.begin(), b.end()));
  }

  TEST_CASE("random additive matrices appear in the enumeration") {
    std::mt19937 rng(20240517);
    for (auto [n1, n2] : {std::pair{3, 2}, {3, 3}, {4, 2}}) {
      const auto all = enumerate_order_matrices(n1, n2);
      const std::set<OrderMatrix> known(all.begin(), all.end());
      int tried = 0;
      while (tried < 100) {
        std::set<int, std::greater<>> xs;
        std::set<int, std::greater<>> ys;
        std::uniform_int_distribution<int> d(0, 60);
        while (static_cast<int>(xs.size()) < n1) xs.insert(d(rng));
        while (static_cast<int>(ys.size()) < n2) ys.insert(d(rng));
        const std::vector<int> x(xs.begin(), xs.end());
        const std::vector<int> y(ys.begin(), ys.end());
        std::set<int> sums;
        for (int a : x) {
          for (int b : y) sums.insert(a + b);
        }
        if (static_cast<int>(sums.size()) != n1 * n2) continue;
        ++tried;
        CHECK(known.count(OrderMatrix::from_witness(x, y)) == 1);
      }
    }
  }

  TEST_CASE("infeasible grids carry a conflict") {
    int infeasible = 0;
    for (const auto& g : increasing_grids(3, 3)) {
      const auto f = additive_feasibility(3, 3, g);
      if (f.feasible()) continue;
      ++infeasible;
      CHECK_FALSE(f.conflict.empty());
    }
    CHECK(infeasible == 42 - 36);
  }

  TEST_CASE("ranks, cells and w_hat") {
    const auto m = OrderMatrix::from_witness({4, 2, 0}, {1, 0});
    CHECK(m.to_string() == "1 2 / 3 4 / 5 6");
    const auto t = OrderMatrix::from_witness({2, 0}, {1, 0});
    CHECK(t.to_string() == "1 2 / 3 4");
    const auto u = OrderMatrix::from_witness({1, 0}, {2, 0});
    CHECK(u.to_string() == "1 3 / 2 4");
    CHECK(u.cell_of_rank(2) == GridIndex{2, 1});
    CHECK(u.w_hat() == Permutation({1, 3, 2, 4}));
    CHECK(u.rank(1, 2) == 3);
  }

  TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(OrderMatrix::from_witness({1, 0}, {1, 0}), DomainError);
    CHECK_THROWS_AS(OrderMatrix::from_witness({0, 1}, {2, 0}), DomainError);
    CHECK_THROWS_AS(OrderMatrix(2, 2, {1, 2, 4, 3}), DomainError);
    CHECK_THROWS_AS(OrderMatrix(2, 2, {1, 2, 3, 4}, AdditiveWitness{{1, 0}, {2, 0}}), DomainError);
  }

  TEST_CASE("inequality rendering") {
    const StrictInequality q{2, {1, -1, -1, 1}};
    CHECK(q.to_string() == "x_1 + y_2 > x_2 + y_1");
  }

  TEST_CASE("marginals of an additive matrix") {
    const AdditiveMatrix a{2, 2, {3, 1, 2, 0}};
    const auto mg = marginals_and_pi(a);
    CHECK(mg.lambda == Partition{4, 2});
    CHECK(mg.mu == Partition{5, 1});
    CHECK(mg.nu == Partition{3, 2, 1});
    CHECK(a.rank_grid() == std::vector<int>{1, 3, 2, 4});
    CHECK_FALSE(AdditiveMatrix{2, 2, {1, 1, 0, 0}}.rank_grid().has_value());
    CHECK_THROWS_AS(marginals_and_pi(AdditiveMatrix{2, 2, {0, 1, 2, 3}}), DomainError);
  }
}
