#include <doctest.h>

#include "kronface/characters.hpp"
#include "kronface/errors.hpp"

using namespace kronface;

namespace {

// Hook-length formula, independent of the rim-hook recursion.
BigInt hook_dimension(const Partition& lambda) {
  const auto& p = lambda.parts();
  std::vector<int> conj(p.empty() ? 0 : static_cast<std::size_t>(p[0]), 0);
  for (int r : p) {
    for (int c = 0; c < r; ++c) ++conj[static_cast<std::size_t>(c)];
  }
  BigInt hooks = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p[i]; ++j) hooks *= p[i] - j - 1 + conj[static_cast<std::size_t>(j)] - static_cast<int>(i);
  }
  return factorial(lambda.weight()) / hooks;
}

Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

}  // namespace

TEST_SUITE("characters") {
  TEST_CASE("128-bit values convert exactly") {
    CHECK(to_bigint(0) == 0);
    CHECK(to_bigint(-7) == -7);
    const CharValue big = static_cast<CharValue>(1) << 100;
    CHECK(to_bigint(big) == BigInt(1) << 100);
    CHECK(to_bigint(-big + 3) == -(BigInt(1) << 100) + 3);
  }

  TEST_CASE("centralizer orders sum to one") {
    for (int n = 1; n <= 10; ++n) {
      Rational total = 0;
      for (const auto& mu : partitions_of(n, n)) total += Rational(1) / Rational(centralizer_order(mu));
      CHECK(total == 1);
    }
    CHECK(centralizer_order(Partition{2, 2, 1}) == 8);
    CHECK(centralizer_order(ones(4)) == 24);
  }

  TEST_CASE("rim hooks") {
    CHECK(remove_rim_hooks(Partition{2, 1}, 2).empty());
    const auto row = remove_rim_hooks(Partition{3}, 2);
    REQUIRE(row.size() == 1);
    CHECK(row[0].remainder == Partition{1});
    CHECK(row[0].sign == 1);
    const auto col = remove_rim_hooks(ones(3), 2);
    REQUIRE(col.size() == 1);
    CHECK(col[0].remainder == Partition{1});
    CHECK(col[0].sign == -1);
    CHECK(remove_rim_hooks(Partition{3, 3}, 6).empty());
    const auto hook = remove_rim_hooks(Partition{3, 1, 1}, 5);
    REQUIRE(hook.size() == 1);
    CHECK(hook[0].sign == 1);
    CHECK(remove_rim_hooks(Partition{3, 2}, 5).empty());
  }

  TEST_CASE("trivial and sign characters") {
    for (int n = 1; n <= 7; ++n) {
      for (const auto& mu : partitions_of(n, n)) {
        const int sign = (n - mu.length()) % 2 == 0 ? 1 : -1;
        CHECK(character(Partition{n}, ClassType(mu)) == 1);
        CHECK(character(ones(n), ClassType(mu)) == sign);
      }
    }
  }

  TEST_CASE("dimensions match the hook-length formula") {
    for (int n = 1; n <= 10; ++n) {
      for (const auto& lambda : partitions_of(n, n)) {
        CHECK(character(lambda, ClassType(ones(n))) == hook_dimension(lambda));
      }
    }
  }

  TEST_CASE("staircase of weight 36 exceeds 64 bits and stays exact") {
    const Partition stair{8, 7, 6, 5, 4, 3, 2, 1};
    const BigInt dim = hook_dimension(stair);
    CHECK(dim > BigInt(std::numeric_limits<long long>::max()));
    CHECK(character(stair, ClassType(ones(36))) == dim);
  }

  TEST_CASE("memoized columns equal the reference recursion") {
    CharacterTable table;
    for (int n = 1; n <= 7; ++n) {
      for (const auto& lambda : partitions_of(n, n)) {
        for (const auto& mu : partitions_of(n, n)) {
          CHECK(table.character(lambda, mu) == character_reference(lambda, mu));
        }
      }
    }
    CHECK(table.cached_shapes() > 0);
    table.clear();
    CHECK(table.cached_entries() == 0);
  }

  TEST_CASE("column orthogonality") {
    for (int n = 1; n <= 8; ++n) {
      const auto ps = partitions_of(n, n);
      for (const auto& mu : ps) {
        for (const auto& nu : ps) {
          BigInt s = 0;
          for (const auto& lambda : ps) s += character(lambda, ClassType(mu)) * character(lambda, ClassType(nu));
          CHECK(s == (mu == nu ? centralizer_order(mu) : BigInt(0)));
        }
      }
    }
  }

  TEST_CASE("row orthogonality") {
    for (int n = 1; n <= 7; ++n) {
      const auto& table = PartitionTable::of(n);
      for (int a = 0; a < table.size(); ++a) {
        for (int b = 0; b < table.size(); ++b) {
          BigInt s = 0;
          for (int c = 0; c < table.size(); ++c) {
            s += table.class_size(c) * character(table.at(a), ClassType(table.at(c))) *
                 character(table.at(b), ClassType(table.at(c)));
          }
          CHECK(s == (a == b ? factorial(n) : BigInt(0)));
        }
      }
    }
  }

  TEST_CASE("a small capacity still gives correct values") {
    CharacterTable tiny(8);
    for (const auto& lambda : partitions_of(6, 6)) {
      for (const auto& mu : partitions_of(6, 6)) CHECK(tiny.character(lambda, mu) == character_reference(lambda, mu));
    }
  }

  TEST_CASE("mismatched weights are rejected") {
    CHECK_THROWS_AS(character_reference(Partition{2}, Partition{1}), DomainError);
  }
}
