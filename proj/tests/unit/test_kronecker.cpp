#include <doctest.h>

#include <random>

#include "kronface/errors.hpp"
#include "kronface/kronecker.hpp"

using namespace kronface;

namespace {

Partition conjugate(const Partition& p) {
  std::vector<int> c;
  for (int j = 1; p.length() > 0 && j <= p[0]; ++j) {
    int n = 0;
    for (int r : p.parts()) n += r >= j ? 1 : 0;
    c.push_back(n);
  }
  return Partition(c);
}

BigInt dim(const Partition& p) {
  return character(p, ClassType(Partition(std::vector<int>(static_cast<std::size_t>(p.weight()), 1))));
}

}  // namespace

TEST_SUITE("kronecker") {
  TEST_CASE("trivial and sign factors") {
    for (int n = 1; n <= 7; ++n) {
      const auto ps = partitions_of(n, n);
      const Partition row{n};
      const Partition col(std::vector<int>(static_cast<std::size_t>(n), 1));
      for (const auto& a : ps) {
        for (const auto& b : ps) {
          CHECK(kronecker(a, row, b) == (a == b ? 1 : 0));
          CHECK(kronecker(a, col, b) == (b == conjugate(a) ? 1 : 0));
        }
      }
    }
  }

  TEST_CASE("tensor product dimensions") {
    for (int n = 1; n <= 6; ++n) {
      const auto ps = partitions_of(n, n);
      for (const auto& a : ps) {
        for (const auto& b : ps) {
          BigInt s = 0;
          for (const auto& c : ps) s += kronecker(a, b, c) * dim(c);
          CHECK(s == dim(a) * dim(b));
        }
      }
    }
  }

  TEST_CASE("oracle equals the serial reference and is symmetric") {
    KroneckerOracle oracle;
    for (int n = 1; n <= 5; ++n) {
      const auto ps = partitions_of(n, n);
      for (const auto& a : ps) {
        for (const auto& b : ps) {
          for (const auto& c : ps) {
            const BigInt g = oracle(a, b, c);
            CHECK(g == kronecker_reference(a, b, c));
            CHECK(g == oracle(b, a, c));
            CHECK(g == oracle(c, b, a));
            CHECK(g >= 0);
          }
        }
      }
    }
  }

  TEST_CASE("parallel batch equals serial batch") {
    std::mt19937 rng(11);
    std::vector<KroneckerQuery> qs;
    for (int i = 0; i < 200; ++i) {
      const int n = std::uniform_int_distribution<int>(1, 9)(rng);
      const auto ps = partitions_of(n, n);
      std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
      qs.push_back({ps[pick(rng)], ps[pick(rng)], ps[pick(rng)]});
    }
    KroneckerOracle a;
    KroneckerOracle b;
    const auto parallel = a.batch(qs);
    const auto serial = b.batch_serial(qs);
    CHECK(parallel == serial);
    for (std::size_t i = 0; i < qs.size(); i += 17) CHECK(serial[i] == kronecker(qs[i].alpha, qs[i].beta, qs[i].gamma));
  }

  TEST_CASE("known values") {
    CHECK(kronecker(Partition{2, 1}, Partition{2, 1}, Partition{2, 1}) == 1);
    CHECK(kronecker(Partition{3, 2, 1}, Partition{3, 2, 1}, Partition{3, 2, 1}) == 5);
    CHECK(kronecker(Partition{4, 3, 2}, Partition{8, 1}, Partition{4, 3, 1, 1}) == 1);
    CHECK(kronecker(Partition{2}, Partition{1}, Partition{1}) == 0);
  }

  TEST_CASE("probe classification") {
    using V = std::vector<BigInt>;
    CHECK(classify_probe(V{1, 1, 1}) == StabilityVerdict::StableEvidence);
    CHECK(classify_probe(V{0, 1, 0}) == StabilityVerdict::AlmostStableEvidence);
    CHECK(classify_probe(V{0, 0}) == StabilityVerdict::Undetermined);
    CHECK(classify_probe(V{1, 2}) == StabilityVerdict::Refuted);
    CHECK(to_string(StabilityVerdict::Refuted) == "refuted");
  }

  TEST_CASE("stability probes scale the triple") {
    const KroneckerQuery q{Partition{2, 1}, Partition{2, 1}, Partition{2, 1}};
    const auto probe = stability_probe(q, 3);
    REQUIRE(probe.values.size() == 3);
    CHECK(probe.values[0] == 1);
    CHECK(probe.values[1] == kronecker(Partition{4, 2}, Partition{4, 2}, Partition{4, 2}));
    CHECK(probe.values[1] >= 2);
    CHECK(probe.verdict == StabilityVerdict::Refuted);
    CHECK_THROWS_AS(stability_probe(q, 0), DomainError);
  }

  TEST_CASE("Murnaghan sequences are nondecreasing") {
    const KroneckerQuery base{Partition{2, 1}, Partition{2, 1}, Partition{1, 1, 1}};
    const KroneckerQuery dir{Partition{1}, Partition{1}, Partition{1}};
    const auto vals = murnaghan_probe(base, dir, 6);
    REQUIRE(vals.size() == 7);
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) CHECK(vals[i] <= vals[i + 1]);
    CHECK(vals[5] == vals[6]);
  }
}
