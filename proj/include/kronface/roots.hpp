#pragma once

// Type-A root systems of G = GL(n1) x GL(n2) and Ghat = GL(n1 n2), the
// restriction map rho between their weight lattices, inversion sets, and
// the two root-theoretic tests applied to candidate pairs (v, vhat):
// the dominance criterion and the well-covering root-sum identity.
//
// Conventions. The Borel subgroups are upper triangular, so the positive
// roots are e_a - e_b with a < b. A permutation u acts on weights by
// e_k -> e_{u(k)}. The inversion set is Phi(u) = Phi^- cap u Phi^+, i.e.
//   Phi(u) = { e_{u(a)} - e_{u(b)} : a < b, u(a) > u(b) },
// which gives Phi(s) = {-alpha} for the simple reflection s = s_alpha.
// With this sign, the additive pair (v = 1, vhat^-1 = what * w0) passes the
// dominance test for every order matrix.

#include <string>
#include <vector>

#include "kronface/combinatorics.hpp"

namespace kronface {

enum class Lattice { Eps, Eta, EpsHat };

/// Sparse integer combination of the characters eps_i (GL(n1) torus),
/// eta_j (GL(n2) torus) and epshat_k (GL(n1 n2) torus). Terms are kept
/// sorted with no zero coefficients, so == is exact equality.
class WeightVector {
 public:
  struct Term {
    Lattice lattice;
    int index;  // 1-based
    int coeff;
    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term&, const Term&) = default;
  };

  WeightVector() = default;
  static WeightVector basis(Lattice lattice, int index, int coeff = 1);
  /// e_a - e_b in one lattice.
  static WeightVector root(Lattice lattice, int a, int b);

  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] int coefficient(Lattice lattice, int index) const;

  WeightVector& operator+=(const WeightVector& other);
  WeightVector& operator-=(const WeightVector& other);
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend WeightVector operator-(const WeightVector& a);

  /// Renders e.g. "epshat_1-epshat_3" or "eps_2-eps_1+eta_2-eta_1".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

 private:
  void add_term(Lattice lattice, int index, int coeff);
  std::vector<Term> terms_;
};

/// Element of W = S_n1 x S_n2.
struct WeylPair {
  Permutation first;
  Permutation second;

  static WeylPair identity(int n1, int n2) { return {Permutation::identity(n1), Permutation::identity(n2)}; }
  [[nodiscard]] WeylPair inverse() const { return {first.inverse(), second.inverse()}; }
  [[nodiscard]] int length() const { return first.length() + second.length(); }
  friend WeylPair operator*(const WeylPair& a, const WeylPair& b) {
    return {a.first * b.first, a.second * b.second};
  }
  friend bool operator==(const WeylPair&, const WeylPair&) = default;
  friend auto operator<=>(const WeylPair&, const WeylPair&) = default;
};

/// All elements of S_n1 x S_n2 of total length len.
std::vector<WeylPair> weyl_pairs_of_length(int n1, int n2, int len);

/// Root multiset with set semantics after normalize().
struct InversionSet {
  std::vector<WeightVector> roots;

  void normalize();
  [[nodiscard]] std::size_t size() const noexcept { return roots.size(); }
  [[nodiscard]] std::string to_string() const;
};

/// Ghat side: Phi(u) in the epshat lattice.
InversionSet inversion_set(const Permutation& u);
/// G side: Phi(v) = Phi(v.first) in eps  union  Phi(v.second) in eta.
InversionSet inversion_set(const WeylPair& v);

/// u . epshat_k = epshat_{u(k)}; terms in other lattices are left alone.
WeightVector act(const Permutation& u, const WeightVector& w);
/// v . eps_i = eps_{v1(i)}, v . eta_j = eta_{v2(j)}.
WeightVector act(const WeylPair& v, const WeightVector& w);

/// Linear restriction epshat_{lex(i,j)} -> eps_i + eta_j; eps/eta terms
/// pass through unchanged.
WeightVector restrict_rho(const WeightVector& w, int n1, int n2);

std::vector<WeightVector> negative_roots(int n1, int n2);  // G side
std::vector<WeightVector> negative_roots(int m);           // Ghat side

/// Dominance criterion: with u = ((vhat what)^vee)^-1 = what^-1 vhat^-1 w0,
/// rho maps what . Phi(u) bijectively onto Phi(v^-1).
bool dominance_check(const WeylPair& v, const Permutation& v_hat, const Permutation& w_hat);

/// Root-sum identity characterizing well-covering among covering pairs:
///   v^-1 . sum(Phi^- cap v Phi^-) + rho(vhat^-1 . sum(Phihat^- cap vhat what Phihat^-))
///     == sum(Phi^-).
bool wellcovering_root_identity(const WeylPair& v, const Permutation& v_hat, const Permutation& w_hat);

}  // namespace kronface
