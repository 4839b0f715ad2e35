#pragma once

// Candidate pairs (v, vhat) read off local configurations of an order
// matrix, and their normalization u_hat = phi(v) * vhat^-1.
//
// Each configuration prescribes v^-1 in S_n1 x S_n2 and vhat^-1 in
// S_(n1 n2); PairDescriptor stores v and vhat themselves.
//
//   ADD  v^-1 = 1                       vhat^-1 = what w0
//   H    (i,j),(i,j+1) ranks k,k+1      v^-1 = (1, (j j+1))     vhat^-1 = what (k k+1) w0
//   V    (i,j),(i+1,j) ranks k,k+1      v^-1 = ((i i+1), 1)     same vhat^-1
//   A    V at k in rows i,i+1 and H at k' in columns j',j'+1, {k,k+1,k',k'+1} distinct
//                                       v^-1 = ((i i+1), (j' j'+1))
//                                       vhat^-1 = what (k k+1)(k' k'+1) w0
//   B    two V at k, k' in rows i, i' with |i - i'| >= 2 (Bt: two H, columns)
//   C    what(k) = (i,j), {what(k+1), what(k+2)} = {(i+1,j), (i,j+1)}
//                                       v^-1 = ((i i+1), (j j+1))  vhat^-1 = what (k k+1 k+2) w0
//   D    {what(k), what(k+1)} = {(i,j+1), (i+1,j)}, what(k+2) = (i+1,j+1)
//                                       v^-1 = ((i i+1), (j j+1))  vhat^-1 = what (k k+2 k+1) w0
//   E1   ranks k,k+1,k+2 down one column from row i
//                                       v^-1 = ((i i+1 i+2), 1)   vhat^-1 = what (k k+1 k+2) w0
//   E2                                  v^-1 = ((i i+2 i+1), 1)   vhat^-1 = what (k k+2 k+1) w0
//   Et1, Et2  the same along a row, acting on the second factor.

#include <optional>
#include <string>
#include <vector>

#include "kronface/order_matrix.hpp"
#include "kronface/roots.hpp"

namespace kronface {

enum class ConfigKind { ADD, H, V, A, B, Bt, C, D, E1, E2, Et1, Et2 };

std::string to_string(ConfigKind kind);
/// Inverse of to_string; DomainError on an unknown tag.
ConfigKind parse_config_kind(const std::string& tag);

struct ConfigAnchor {
  ConfigKind kind = ConfigKind::ADD;
  int k = 0;   // first rank involved (0 for ADD)
  int k2 = 0;  // second rank for A, B, Bt
  std::vector<GridIndex> cells;  // cells in rank order

  [[nodiscard]] int inversion_length() const;
  /// e.g. "C k=1 (1,1)(2,1)(1,2)"
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const ConfigAnchor&, const ConfigAnchor&) = default;
};

/// Every configuration in the matrix; ADD first, then by length, kind and
/// rank. Duplicate anchors producing the same pair are not removed here.
std::vector<ConfigAnchor> detect_configs(const OrderMatrix& matrix);

enum class PairStatus { Dominant, WellCoveringByTheorem, WellCoveringCertified, NotWellCovering };

std::string to_string(PairStatus status);
PairStatus parse_pair_status(const std::string& text);

struct PairDescriptor {
  int matrix_id = 0;  // 1-based position in the enumeration
  OrderMatrix source;
  ConfigAnchor anchor;
  WeylPair v;
  Permutation v_hat;
  Permutation u_hat;
  PairStatus status = PairStatus::Dominant;

  [[nodiscard]] int length() const { return v.length(); }
  [[nodiscard]] bool is_well_covering() const {
    return status == PairStatus::WellCoveringByTheorem || status == PairStatus::WellCoveringCertified;
  }
  friend bool operator==(const PairDescriptor&, const PairDescriptor&) = default;
};

/// Applies the configuration's formulas; DomainError if the anchor does not
/// occur in the matrix. Throws InternalConsistencyError if the result
/// fails the dominance test.
PairDescriptor build_pair(const OrderMatrix& matrix, const ConfigAnchor& anchor, int matrix_id = 0);

/// phi(s1, s2) acts on cells: lex(i,j) -> lex(s1(i), s2(j)).
Permutation embed_weyl_pair(const WeylPair& v);

/// u_hat = phi(v) * vhat^-1.
Permutation normalize(const WeylPair& v, const Permutation& v_hat);

/// Builds all pairs of a matrix and collapses anchors that give the same
/// (v, vhat).
std::vector<PairDescriptor> pairs_of_matrix(const OrderMatrix& matrix, int matrix_id);

/// Runs pairs_of_matrix over every matrix; parallel across matrices, output
/// in (matrix, length, kind, anchor) order.
std::vector<PairDescriptor> build_all_pairs(const std::vector<OrderMatrix>& matrices);

struct CandidatePair {
  WeylPair v;
  Permutation v_hat;
  friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
  friend auto operator<=>(const CandidatePair&, const CandidatePair&) = default;
};

/// Every (v, vhat) with l(v) <= max_length passing the dominance test,
/// found by brute force over v and over u = what^-1 vhat^-1 w0 with
/// l(u) = l(v). Sorted.
std::vector<CandidatePair> generic_length2_sweep(const OrderMatrix& matrix, int max_length = 2);

}  // namespace kronface
