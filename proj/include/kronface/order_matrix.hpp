#pragma once

// Order matrices: the rank patterns of x_i + y_j over an n1 x n2 grid for
// strictly decreasing integer vectors x and y with all sums distinct.

#include <optional>
#include <string>
#include <vector>

#include "kronface/characters.hpp"
#include "kronface/combinatorics.hpp"

namespace kronface {

struct AdditiveWitness {
  std::vector<int> x;  // strictly decreasing, x.back() == 0 when minimized
  std::vector<int> y;
  friend bool operator==(const AdditiveWitness&, const AdditiveWitness&) = default;
};

/// Rank grid (row-major, ranks 1..n1*n2, rank 1 = largest sum) with an
/// additive witness reproducing it.
class OrderMatrix {
 public:
  OrderMatrix() = default;
  /// Validates that ranks form an increasing grid and that the witness,
  /// if given, reproduces it.
  OrderMatrix(int n1, int n2, std::vector<int> ranks, AdditiveWitness witness = {});

  /// Ranks the sums x_i + y_j; DomainError unless x, y are strictly
  /// decreasing and all sums are distinct.
  static OrderMatrix from_witness(const std::vector<int>& x, const std::vector<int>& y);

  [[nodiscard]] int n1() const noexcept { return n1_; }
  [[nodiscard]] int n2() const noexcept { return n2_; }
  [[nodiscard]] int size() const noexcept { return n1_ * n2_; }
  [[nodiscard]] const std::vector<int>& ranks() const noexcept { return ranks_; }
  [[nodiscard]] int rank(int row, int col) const;
  [[nodiscard]] GridIndex cell_of_rank(int k) const;
  [[nodiscard]] const AdditiveWitness& witness() const noexcept { return witness_; }

  /// w_hat(k) = lex index of the cell of rank k.
  [[nodiscard]] Permutation w_hat() const;
  /// The n2 x n1 matrix with rows and columns exchanged.
  [[nodiscard]] OrderMatrix transposed() const;

  /// Rows as "1 3 / 2 5 / 4 6".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const OrderMatrix& a, const OrderMatrix& b) noexcept {
    return a.n1_ == b.n1_ && a.n2_ == b.n2_ && a.ranks_ == b.ranks_;
  }
  friend auto operator<=>(const OrderMatrix& a, const OrderMatrix& b) noexcept {
    if (auto c = a.n1_ <=> b.n1_; c != 0) return c;
    if (auto c = a.n2_ <=> b.n2_; c != 0) return c;
    return a.ranks_ <=> b.ranks_;
  }

 private:
  int n1_ = 0;
  int n2_ = 0;
  std::vector<int> ranks_;
  AdditiveWitness witness_;
};

/// True if ranks is a bijection onto 1..n1*n2 increasing along rows and
/// down columns.
bool is_increasing_grid(int n1, int n2, const std::vector<int>& ranks);

/// All increasing grids (standard tableaux of rectangular shape), sorted
/// lexicographically.
std::vector<std::vector<int>> increasing_grids(int n1, int n2);

/// Hook-length formula for the number of standard tableaux of shape n2^n1.
BigInt increasing_grid_count(int n1, int n2);

/// coeffs . (x_1..x_n1, y_1..y_n2) > 0
struct StrictInequality {
  int n1 = 0;  // coeffs[0..n1) are on x, the rest on y
  std::vector<int> coeffs;
  /// e.g. "x_1 + y_2 > x_2 + y_1"
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const StrictInequality&, const StrictInequality&) = default;
};

struct AdditiveFeasibility {
  std::optional<AdditiveWitness> witness;
  std::vector<StrictInequality> conflict;  // irreducible when infeasible
  [[nodiscard]] bool feasible() const noexcept { return witness.has_value(); }
};

/// Decides whether an increasing grid is an order matrix. The strict
/// inequalities are modeled with slack 1 and solved exactly; a feasible
/// grid gets the smallest witness (least max entry, then x, then y
/// lexicographically least) with x_n1 = y_n2 = 0.
AdditiveFeasibility additive_feasibility(int n1, int n2, const std::vector<int>& ranks);

/// All order matrices of size n1 x n2 in lexicographic order of ranks.
/// Candidates are checked in parallel.
std::vector<OrderMatrix> enumerate_order_matrices(int n1, int n2);
std::vector<OrderMatrix> enumerate_order_matrices_serial(int n1, int n2);

struct AdditiveMatrix {
  int n1 = 0;
  int n2 = 0;
  std::vector<int> entries;  // row-major, nonnegative

  [[nodiscard]] int at(int row, int col) const;
  /// Ranks by decreasing entry; nullopt if two entries coincide.
  [[nodiscard]] std::optional<std::vector<int>> rank_grid() const;
};

struct Marginals {
  Partition lambda;  // row sums
  Partition mu;      // column sums
  Partition nu;      // entries sorted decreasingly
};

/// DomainError if the row or column sums are not weakly decreasing.
Marginals marginals_and_pi(const AdditiveMatrix& a);

}  // namespace kronface
