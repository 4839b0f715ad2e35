#pragma once

// Partitions, permutations and the row-major grid <-> line bijection.

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kronface {

/// Weakly decreasing sequence of nonnegative integers.
///
/// Trailing zeros are kept so that cone coordinates have a fixed arity
/// (alpha in Z^n1, beta in Z^n2, gamma in Z^(n1 n2)). Equality and hashing
/// ignore trailing zeros.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
  [[nodiscard]] int weight() const noexcept { return weight_; }
  /// Number of nonzero parts.
  [[nodiscard]] int length() const noexcept;
  /// Number of stored entries, trailing zeros included.
  [[nodiscard]] int arity() const noexcept { return static_cast<int>(parts_.size()); }
  /// Entry i (0-based); zero beyond the stored arity.
  [[nodiscard]] int operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  [[nodiscard]] Partition trimmed() const;
  /// Zero-pads to exactly n entries; DomainError if length() > n.
  [[nodiscard]] Partition padded(int n) const;
  [[nodiscard]] Partition scaled(int d) const;
  /// Entrywise sum (the shorter one is zero-padded).
  [[nodiscard]] Partition plus(const Partition& other) const;

  /// n pairwise distinct entries over arity n, the last possibly zero.
  [[nodiscard]] bool is_regular(int n) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) noexcept;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Parses "4,3,1,1" (or "4 3 1 1"); the empty string and "0" give ().
Partition parse_partition(const std::string& text);

/// All partitions of n with at most max_len nonzero parts, in reverse
/// lexicographic order: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> partitions_of(int n, int max_len);

/// Bijection of {1..m} in one-line notation: entry k-1 is the image of k.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int m);
  /// One-line (m, m-1, ..., 1).
  static Permutation longest(int m);
  static Permutation transposition(int m, int a, int b);
  /// The cycle c0 -> c1 -> ... -> c0 on {1..m}.
  static Permutation cycle(int m, std::initializer_list<int> entries);
  static Permutation cycle(int m, std::span<const int> entries);

  [[nodiscard]] int size() const noexcept { return static_cast<int>(one_line_.size()); }
  [[nodiscard]] int operator()(int k) const { return one_line_.at(static_cast<std::size_t>(k - 1)); }
  [[nodiscard]] const std::vector<int>& one_line() const noexcept { return one_line_; }

  [[nodiscard]] Permutation inverse() const;
  /// Coxeter length, i.e. the number of inversions.
  [[nodiscard]] int length() const noexcept;
  [[nodiscard]] bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

/// (p * q)(k) = p(q(k)).
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

inline Permutation longest_element(int m) { return Permutation::longest(m); }

/// Disjoint-cycle notation with fixed points omitted, each cycle starting at
/// its smallest entry and cycles ordered by it: "(1 4 6)(2 5)". The
/// identity renders as "id".
std::string to_cycle_string(const Permutation& p);

/// Inverse of to_cycle_string on {1..m}; also accepts "()" and cycles in any
/// rotation or order. DomainError on malformed text or repeated entries.
Permutation parse_cycles(const std::string& text, int m);

/// All permutations of {1..m} of Coxeter length exactly len, sorted.
std::vector<Permutation> permutations_of_length(int m, int len);

/// 1-based cell of an n1 x n2 grid.
struct GridIndex {
  int row = 1;
  int col = 1;
  friend bool operator==(const GridIndex&, const GridIndex&) = default;
  friend auto operator<=>(const GridIndex&, const GridIndex&) = default;
};

/// (row-1)*n2 + col.
int lex_index(GridIndex cell, int n1, int n2);
GridIndex unlex_index(int index, int n1, int n2);

}  // namespace kronface
