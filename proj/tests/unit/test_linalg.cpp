#include <doctest.h>

#include <random>

#include "kronface/linalg.hpp"

using namespace kronface;

namespace {

RationalMatrix random_matrix(std::mt19937& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  RationalMatrix m(static_cast<std::size_t>(rows), RationalVector(static_cast<std::size_t>(cols)));
  for (auto& row : m) {
    for (auto& x : row) x = d(rng);
  }
  return m;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool satisfies(const std::vector<LinearInequality>& sys, const RationalVector& z) {
  for (const auto& q : sys) {
    if (dot(q.coeffs, z) < q.rhs) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rref is canonical for the row space") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      auto m = random_matrix(rng, 4, 6, -3, 3);
      m.push_back(m[0]);
      for (std::size_t j = 0; j < m[0].size(); ++j) m.back()[j] += 2 * m[1][j];
      auto mixed = m;
      std::swap(mixed[0], mixed[2]);
      for (auto& x : mixed[1]) x *= Rational(-5, 3);
      const auto r = rref(m);
      CHECK(r == rref(mixed));
      CHECK(rank(m) == static_cast<int>(r.size()));
      CHECK(rank(m) <= 4);
    }
  }

  TEST_CASE("null space is annihilated and has complementary dimension") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      const auto m = random_matrix(rng, 3, 6, -2, 2);
      const auto ns = null_space(m, 6);
      CHECK(static_cast<int>(ns.size()) + rank(m) == 6);
      for (const auto& z : ns) {
        for (const auto& row : m) CHECK(dot(row, z) == 0);
      }
    }
    CHECK(null_space({}, 3).size() == 3);
  }

  TEST_CASE("primitive integer rows") {
    const auto r = primitive_integer_row({Rational(1, 2), Rational(-3, 4), 0});
    CHECK(r == std::vector<BigInt>{2, -3, 0});
    CHECK(primitive_integer_row({Rational(-4), Rational(6)}) == std::vector<BigInt>{-2, 3});
  }

  TEST_CASE("a small infeasible system gives an irreducible conflict") {
    // x >= 1, -x >= 0, y >= 0
    const std::vector<LinearInequality> sys{{{1, 0}, 1}, {{-1, 0}, 0}, {{0, 1}, 0}};
    const auto r = fourier_motzkin(sys, 2);
    CHECK_FALSE(r.feasible);
    CHECK(r.conflict == std::vector<int>{0, 1});
  }

  TEST_CASE("random systems: points satisfy, conflicts are irreducible") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> c(-3, 3);
    int feasible = 0;
    int infeasible = 0;
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<LinearInequality> sys;
      const int rows = 2 + trial % 5;
      for (int i = 0; i < rows; ++i) sys.push_back({{c(rng), c(rng), c(rng)}, c(rng)});
      const auto r = fourier_motzkin(sys, 3);
      if (r.feasible) {
        ++feasible;
        CHECK(satisfies(sys, r.point));
        continue;
      }
      ++infeasible;
      REQUIRE_FALSE(r.conflict.empty());
      std::vector<LinearInequality> sub;
      for (int i : r.conflict) sub.push_back(sys[static_cast<std::size_t>(i)]);
      CHECK_FALSE(fourier_motzkin(sub, 3).feasible);
      for (std::size_t drop = 0; drop < sub.size(); ++drop) {
        auto smaller = sub;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
        CHECK(fourier_motzkin(smaller, 3).feasible);
      }
    }
    CHECK(feasible > 0);
    CHECK(infeasible > 0);
  }
}
