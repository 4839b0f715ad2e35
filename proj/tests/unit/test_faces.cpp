#include <doctest.h>

#include <random>

#include "kronface/errors.hpp"
#include "kronface/faces.hpp"
#include "kronface/golden.hpp"

using namespace kronface;

namespace {

std::vector<PairDescriptor> pairs_of(int n1, int n2) { return build_all_pairs(enumerate_order_matrices(n1, n2)); }

// Checks the equations directly, without the mu = 0 system.
bool on_equations(const FaceDescriptor& f, const LatticeTriple& t) {
  for (const auto& e : f.equations) {
    int s = 0;
    for (int k : e.gammas) s += t.gamma[static_cast<std::size_t>(k - 1)];
    if (s != (e.is_alpha ? t.alpha : t.beta)[static_cast<std::size_t>(e.index - 1)]) return false;
  }
  return true;
}

std::vector<LatticeTriple> all_triples(int n1, int n2, int n) {
  std::vector<LatticeTriple> out;
  for (const auto& a : partitions_of(n, n1)) {
    for (const auto& b : partitions_of(n, n2)) {
      for (const auto& g : partitions_of(n, n1 * n2)) out.push_back({a.padded(n1), b.padded(n2), g.padded(n1 * n2)});
    }
  }
  return out;
}

bool qualifies(const LatticeTriple& t, int n1, int n2, KroneckerOracle& oracle) {
  const bool regular = (t.alpha.is_regular(n1) && t.beta.is_regular(n2)) || t.gamma.is_regular(n1 * n2);
  return regular && oracle(t.query()) != 0;
}

// True when every row annihilates z.
bool dot(const RationalMatrix& rows, const RationalVector& z) {
  for (const auto& r : rows) {
    Rational s = 0;
    for (std::size_t i = 0; i < r.size(); ++i) s += r[i] * z[i];
    if (s != 0) return false;
  }
  return true;
}

Cocharacter random_sigma(std::mt19937& rng, int n1, int n2) {
  std::uniform_int_distribution<int> d(-4, 4);
  Cocharacter s{std::vector<int>(static_cast<std::size_t>(n1)), std::vector<int>(static_cast<std::size_t>(n2))};
  for (auto& x : s.first) x = d(rng);
  for (auto& x : s.second) x = d(rng);
  return s;
}

}  // namespace

TEST_SUITE("faces") {
  TEST_CASE("each gamma appears in one row equation and one column equation") {
    for (const auto& p : pairs_of(3, 2)) {
      const auto eqs = face_equations_of(p.u_hat, 3, 2);
      REQUIRE(eqs.size() == 5);
      std::vector<int> rows(7, 0);
      std::vector<int> cols(7, 0);
      for (const auto& e : eqs) {
        for (int k : e.gammas) ++(e.is_alpha ? rows : cols)[static_cast<std::size_t>(k)];
      }
      for (int k = 1; k <= 6; ++k) {
        CHECK(rows[static_cast<std::size_t>(k)] == 1);
        CHECK(cols[static_cast<std::size_t>(k)] == 1);
      }
      CHECK(displayed_equations(eqs, 3, 2).size() == 3);
    }
  }

  TEST_CASE("exactly one convention reproduces the reference systems") {
    const auto examples = load_equation_examples(default_golden_dir() + "/face_equations.txt");
    CHECK(examples.size() == 7);
    const auto conv = matching_conventions(examples);
    REQUIRE(conv.size() == 1);
    CHECK(conv[0] == kCalibratedConvention);
    CHECK(EquationConvention::all().size() == 16);
  }

  TEST_CASE("equation parsing and rendering") {
    const auto e = parse_face_equation("alpha_1 = gamma_4 + gamma_1");
    CHECK(e.is_alpha);
    CHECK(e.index == 1);
    CHECK(e.gammas == std::vector<int>{1, 4});
    CHECK(e.to_string() == "alpha_1 = gamma_1 + gamma_4");
    CHECK(parse_face_equation(e.to_string()) == e);
    CHECK_THROWS_AS(parse_face_equation("alpha_1 gamma_1"), DomainError);
    CHECK_THROWS_AS(parse_face_equation("delta_1 = gamma_1"), DomainError);

    const auto row = parse_linear_equation("alpha_1 = 2*gamma_1 - gamma_3", 2, 2);
    REQUIRE(row.size() == 8);
    CHECK(row[0] == 1);
    CHECK(row[4] == -2);
    CHECK(row[6] == 1);
    CHECK(render_row(rref({row})[0], 2, 2) == "alpha_1 = 2*gamma_1 - gamma_3");
    CHECK_THROWS_AS(parse_linear_equation("alpha_1 + gamma_1", 2, 2), DomainError);
  }

  TEST_CASE("mu is bilinear and vanishes exactly on the face") {
    std::mt19937 rng(17);
    const auto pairs = pairs_of(3, 2);
    for (const auto& p : pairs) {
      const auto f = face_equations(p);
      const auto pts = enumerate_face_triples(f, 6);
      const auto all = all_triples(3, 2, 5);
      for (int trial = 0; trial < 5; ++trial) {
        const auto s1 = random_sigma(rng, 3, 2);
        const auto s2 = random_sigma(rng, 3, 2);
        Cocharacter s12 = s1;
        for (std::size_t i = 0; i < 3; ++i) s12.first[i] += s2.first[i];
        for (std::size_t j = 0; j < 2; ++j) s12.second[j] += s2.second[j];
        const auto& t = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
        CHECK(mu_value(t, p.u_hat, s12) == mu_value(t, p.u_hat, s1) + mu_value(t, p.u_hat, s2));
        const auto& u = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
        const LatticeTriple sum{t.alpha.plus(u.alpha), t.beta.plus(u.beta), t.gamma.plus(u.gamma)};
        CHECK(mu_value(sum, p.u_hat, s1) == mu_value(t, p.u_hat, s1) + mu_value(u, p.u_hat, s1));
        for (const auto& q : pts) CHECK(mu_value(q, p.u_hat, s1) == 0);
      }
      for (const auto& t : all) {
        bool zero = true;
        for (int i = 0; i < 5; ++i) {
          Cocharacter e{{0, 0, 0}, {0, 0}};
          (i < 3 ? e.first[static_cast<std::size_t>(i)] : e.second[static_cast<std::size_t>(i - 3)]) = 1;
          zero = zero && mu_value(t, p.u_hat, e) == 0;
        }
        CHECK(zero == f.contains(t));
      }
    }
  }

  TEST_CASE("face triples equal a brute-force filter") {
    for (const auto& p : pairs_of(2, 2)) {
      const auto f = face_equations(p);
      for (int n = 1; n <= 7; ++n) {
        std::vector<LatticeTriple> brute;
        for (const auto& t : all_triples(2, 2, n)) {
          if (on_equations(f, t)) brute.push_back(t);
        }
        auto got = enumerate_face_triples(f, n);
        std::sort(got.begin(), got.end());
        std::sort(brute.begin(), brute.end());
        CHECK(got == brute);
      }
    }
  }

  TEST_CASE("the merged 2 x 2 span holds the point ((5,5),(5,5),(3,3,2,2))") {
    const auto spans = load_span_systems(default_golden_dir() + "/spans.txt");
    REQUIRE_FALSE(spans.empty());
    KroneckerOracle oracle;
    const LatticeTriple t{Partition{5, 5}, Partition{5, 5}, Partition{3, 3, 2, 2}};
    const auto probe = stability_probe(t.query(), 3, oracle);
    CHECK(probe.values[0] == 0);
    CHECK(probe.verdict == StabilityVerdict::AlmostStableEvidence);
    for (const auto& p : pairs_of(2, 2)) {
      if (p.length() != 2) continue;
      const auto f = face_equations(p);
      const auto span = face_span_from_points(f, 8, 2, oracle);
      CHECK(span.equations == spans[0].rref_rows());
      CHECK(span.dimension == 2);
      CHECK(dot(span.equations, t.coordinates()));
    }
  }

  TEST_CASE("spans lie inside the mu = 0 subspace") {
    KroneckerOracle oracle;
    for (const auto& p : pairs_of(3, 2)) {
      const auto f = face_equations(p);
      const auto span = face_span_from_points(f, 6, 1, oracle);
      auto both = span.equations;
      both.insert(both.end(), f.mu_zero_system.begin(), f.mu_zero_system.end());
      CHECK(rank(both) == rank(span.equations));
      CHECK(span.dimension + rank(span.equations) == 11);
      CHECK(span.dimension <= 11 - rank(f.mu_zero_system));
    }
  }

  TEST_CASE("additive faces are full-dimensional in their subspace") {
    KroneckerOracle oracle;
    for (const auto& p : pairs_of(3, 2)) {
      if (p.length() != 0) continue;
      const auto f = face_equations(p);
      CHECK(face_span_from_points(f, 8, 1, oracle).dimension == 11 - rank(f.mu_zero_system));
    }
  }

  TEST_CASE("certificates agree with a brute-force search") {
    KroneckerOracle oracle;
    const int bound = 7;
    for (auto [n1, n2] : {std::pair{2, 2}, {3, 2}}) {
      for (const auto& p : pairs_of(n1, n2)) {
        if (p.length() != 2) continue;
        const auto f = face_equations(p);
        int first = 0;
        for (int n = 1; n <= bound && first == 0; ++n) {
          for (const auto& t : all_triples(n1, n2, n)) {
            if (on_equations(f, t) && qualifies(t, n1, n2, oracle)) {
              first = n;
              break;
            }
          }
        }
        const auto cert = wellcovering_certificate(f, bound, oracle);
        CHECK(cert.has_value() == (first > 0));
        if (cert) {
          CHECK(cert->weight() == first);
          CHECK(f.contains(*cert));
          CHECK(qualifies(*cert, n1, n2, oracle));
        }
        if (n1 == 2) CHECK_FALSE(cert.has_value());
      }
    }
  }

  TEST_CASE("stability summaries") {
    FacePoints pts;
    pts.triples = {{Partition{1, 0}, Partition{1, 0}, Partition{1, 0, 0, 0}}};
    pts.probes = {{{0, 0}, StabilityVerdict::Undetermined}};
    const auto empty = stability_of(pts);
    CHECK(empty.possibly_zero());
    CHECK(empty.undetermined == 1);
    pts.probes = {{{0, 1}, StabilityVerdict::AlmostStableEvidence}};
    const auto almost = stability_of(pts);
    CHECK(almost.almost_stable == 1);
    CHECK(almost.non_stable.size() == 1);
    CHECK_FALSE(almost.consistent(true));
    CHECK(almost.consistent(false));
    pts.probes = {{{1, 2}, StabilityVerdict::Refuted}};
    CHECK(stability_of(pts).refuting.size() == 1);
  }

  TEST_CASE("dedup merges duplicates and accumulates provenance") {
    KroneckerOracle oracle;
    std::vector<FaceDescriptor> faces;
    for (const auto& p : pairs_of(2, 2)) {
      auto f = face_equations(p);
      if (!f.well_covering()) {
        const auto span = face_span_from_points(f, 8, 2, oracle);
        f.span_equations = span.equations;
        f.dimension_estimate = span.dimension;
      }
      faces.push_back(f);
    }
    const auto once = dedup_faces(faces);
    CHECK(once.size() == 7);
    CHECK(dedup_faces(once) == once);
    auto doubled = faces;
    doubled.insert(doubled.end(), faces.begin(), faces.end());
    const auto twice = dedup_faces(doubled);
    REQUIRE(twice.size() == once.size());
    for (std::size_t i = 0; i < once.size(); ++i) {
      CHECK(twice[i].u_hat == once[i].u_hat);
      CHECK(twice[i].provenance.size() == 2 * once[i].provenance.size());
    }
    auto unprobed = faces;
    for (auto& f : unprobed) f.dimension_estimate = -1;
    CHECK_THROWS_AS(dedup_faces(unprobed), DomainError);
  }
}
