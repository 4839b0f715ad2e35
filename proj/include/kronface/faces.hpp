#pragma once

// Faces F(C) cut out of the Kronecker cone by a dominant pair: their
// linear equations, lattice points, point spans, certificates and
// stability summaries.
//
// Coordinates are ordered (alpha_1..alpha_n1, beta_1..beta_n2,
// gamma_1..gamma_m) with m = n1 n2. A pair with normalized u_hat assigns
// each gamma_k a cell of the grid; the face equations say that alpha_i is
// the sum of the gamma_k assigned to row i and beta_j the sum of those
// assigned to column j.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kronface/kronecker.hpp"
#include "kronface/linalg.hpp"
#include "kronface/pairs.hpp"

namespace kronface {

/// The discrete choices in reading cells off u_hat: p = u_hat or u_hat^-1,
/// gamma_k -> p(k) or p(m + 1 - k), and optional reversal of row and
/// column numbering.
struct EquationConvention {
  bool invert = false;
  bool reverse_positions = false;
  bool reverse_rows = false;
  bool reverse_cols = false;

  [[nodiscard]] std::string to_string() const;
  static std::vector<EquationConvention> all();
  friend bool operator==(const EquationConvention&, const EquationConvention&) = default;
};

/// The convention reproducing every worked example; pinned by a test.
inline constexpr EquationConvention kCalibratedConvention{false, true, false, false};

/// "alpha_i = gamma_a + gamma_b + ..." (or beta_j).
struct FaceEquation {
  bool is_alpha = true;
  int index = 1;
  std::vector<int> gammas;  // sorted

  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const FaceEquation&, const FaceEquation&) = default;
  friend auto operator<=>(const FaceEquation&, const FaceEquation&) = default;
};

/// Parses "alpha_1 = gamma_1 + gamma_4"; DomainError on malformed text.
FaceEquation parse_face_equation(const std::string& text);

/// Cell assigned to gamma_k, k = 1..m.
std::vector<GridIndex> gamma_cells(const Permutation& u_hat, int n1, int n2,
                                   EquationConvention conv = kCalibratedConvention);

/// n1 alpha-equations followed by n2 beta-equations.
std::vector<FaceEquation> face_equations_of(const Permutation& u_hat, int n1, int n2,
                                            EquationConvention conv = kCalibratedConvention);

/// All equations but alpha_n1 and beta_n2, which follow from the others
/// together with |alpha| = |beta| = |gamma|.
std::vector<FaceEquation> displayed_equations(const std::vector<FaceEquation>& eqs, int n1, int n2);

struct CalibrationExample {
  int n1 = 0;
  int n2 = 0;
  Permutation u_hat;
  std::vector<FaceEquation> displayed;
};

/// Conventions whose displayed equations agree with every example.
std::vector<EquationConvention> matching_conventions(std::span<const CalibrationExample> examples);

/// Row form of a list of equations over the (alpha, beta, gamma) coordinates.
RationalMatrix equation_rows(const std::vector<FaceEquation>& eqs, int n1, int n2);
/// |alpha| = |gamma| and |beta| = |gamma|.
RationalMatrix ambient_weight_rows(int n1, int n2);
/// Renders an RREF row as "pivot = combination", e.g. "gamma_1 = gamma_2".
std::string render_row(const RationalVector& row, int n1, int n2);
/// Parses a linear equation such as "alpha_1 = 2*gamma_1 - gamma_3" into
/// the row lhs - rhs over the (alpha, beta, gamma) coordinates.
RationalVector parse_linear_equation(const std::string& text, int n1, int n2);

struct LatticeTriple {
  Partition alpha;  // arity n1
  Partition beta;   // arity n2
  Partition gamma;  // arity n1 n2

  [[nodiscard]] int weight() const { return gamma.weight(); }
  [[nodiscard]] KroneckerQuery query() const { return {alpha, beta, gamma}; }
  [[nodiscard]] RationalVector coordinates() const;
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const LatticeTriple&, const LatticeTriple&) = default;
  friend auto operator<=>(const LatticeTriple&, const LatticeTriple&) = default;
};

/// Integer cocharacter of the torus of GL(n1) x GL(n2).
struct Cocharacter {
  std::vector<int> first;   // length n1
  std::vector<int> second;  // length n2
};

/// mu = sum_i s1_i (alpha_i - sum_{row k = i} gamma_k)
///    + sum_j s2_j (beta_j - sum_{col k = j} gamma_k),
/// the negated weight of the fibre over the pair's fixed point. Vanishes
/// for all sigma exactly on the face equations.
long long mu_value(const LatticeTriple& triple, const Permutation& u_hat, const Cocharacter& sigma);

enum class FaceClass { Regular, NonRegular, PossiblyZero };
std::string to_string(FaceClass c);

struct PairRef {
  int matrix_id = 0;
  std::string matrix;  // ranks, "1 3 / 2 4"
  std::string anchor;  // ConfigAnchor::to_string()
  friend bool operator==(const PairRef&, const PairRef&) = default;
};

struct StabilityReport {
  int enumerated = 0;
  int verified = 0;      // some g(d.) != 0 with d <= depth
  int undetermined = 0;  // all g(d.) == 0
  int stable = 0;
  int almost_stable = 0;
  int refuted = 0;
  std::vector<LatticeTriple> non_stable;  // almost-stable examples
  std::vector<LatticeTriple> refuting;    // some g(d.) >= 2

  /// All verified triples stable (when expect_stable) and none refuted.
  [[nodiscard]] bool consistent(bool expect_stable) const;
  [[nodiscard]] bool possibly_zero() const { return verified == 0; }
  friend bool operator==(const StabilityReport&, const StabilityReport&) = default;
};

struct FaceDescriptor {
  int n1 = 0;
  int n2 = 0;
  Permutation u_hat;
  PairStatus status = PairStatus::Dominant;
  std::vector<FaceEquation> equations;
  RationalMatrix mu_zero_system;  // RREF
  RationalMatrix span_equations;  // RREF of the span of verified points
  int dimension_estimate = -1;    // rank of verified points; -1 before probing
  std::optional<LatticeTriple> certificate;
  StabilityReport stability;
  std::vector<PairRef> provenance;
  bool collision = false;  // u_hat-distinct from another face with the same span

  [[nodiscard]] bool well_covering() const {
    return status == PairStatus::WellCoveringByTheorem || status == PairStatus::WellCoveringCertified;
  }
  [[nodiscard]] FaceClass classify() const;
  [[nodiscard]] bool contains(const LatticeTriple& t) const;
  friend bool operator==(const FaceDescriptor&, const FaceDescriptor&) = default;
};

FaceDescriptor face_equations(const PairDescriptor& pair);

/// Every triple of partitions of N (arities n1, n2, n1 n2) on the face's
/// mu = 0 subspace, ordered by gamma in reverse lexicographic order.
std::vector<LatticeTriple> enumerate_face_triples(const FaceDescriptor& face, int n);

/// Probe results for every enumerated triple of a face up to n_max.
struct FacePoints {
  std::vector<LatticeTriple> triples;
  std::vector<StabilityProbe> probes;  // depth values each
};

/// Enumerates triples for N = 1..n_max and probes each at d = 1..depth.
/// Probes are evaluated in parallel through the oracle.
FacePoints probe_face(const FaceDescriptor& face, int n_max, int depth, KroneckerOracle& oracle);

struct SpanResult {
  RationalMatrix equations;  // RREF
  int dimension = 0;
  int verified = 0;
  int undetermined = 0;
};

SpanResult span_of(const FacePoints& points, int n1, int n2);
SpanResult face_span_from_points(const FaceDescriptor& face, int n_max, int depth, KroneckerOracle& oracle);

/// First triple up to n_max with g != 0 and (alpha and beta regular, or
/// gamma regular).
std::optional<LatticeTriple> wellcovering_certificate(const FaceDescriptor& face, int n_max, KroneckerOracle& oracle);

StabilityReport stability_of(const FacePoints& points);
StabilityReport verify_face_stability(const FaceDescriptor& face, int n_max, int depth, KroneckerOracle& oracle);

/// Well-covering faces are merged when their u_hat agree, the others when
/// their span equations agree; provenance accumulates. Well-covering faces
/// with distinct u_hat but equal computed spans are flagged, not merged.
std::vector<FaceDescriptor> dedup_faces(std::vector<FaceDescriptor> faces);

}  // namespace kronface
