#pragma once

// Symmetric-group characters by the Murnaghan-Nakayama rule.
//
// Two evaluators live here. CharacterTable is the production path: it
// memoizes whole character columns (one value per conjugacy class) keyed by
// shape, so that rim-hook removals shared between shapes and between the
// d-scaled queries of stability probes are computed once. The reference
// evaluator is a direct unmemoized recursion kept as an independent oracle
// for tests and benchmarks.

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "kronface/combinatorics.hpp"

namespace kronface {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Memoized character entries. 128 bits hold every value up to N = 60 or so;
/// the column recursion throws InternalConsistencyError past that.
__extension__ typedef __int128 CharValue;

BigInt to_bigint(CharValue v);

BigInt factorial(int n);

/// z_mu = prod_i i^{m_i} m_i!, the order of the centralizer of a permutation
/// of cycle type mu.
BigInt centralizer_order(const Partition& cycle_type);

struct ClassType {
  Partition cycle_type;
  BigInt centralizer_order;

  explicit ClassType(Partition mu);
};

/// A shape with one rim hook removed, and the sign (-1)^(height).
struct RimHookRemoval {
  Partition remainder;
  int sign = 1;
};

/// Every way of removing a rim hook of the given size from shape.
std::vector<RimHookRemoval> remove_rim_hooks(const Partition& shape, int size);

/// Partitions of n in partitions_of order, with the index arithmetic the
/// column recursion needs. Instances are built once per n and never freed.
class PartitionTable {
 public:
  static const PartitionTable& of(int n);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(parts_.size()); }
  [[nodiscard]] const Partition& at(int i) const { return parts_.at(static_cast<std::size_t>(i)); }
  /// -1 when p is not a partition of n.
  [[nodiscard]] int index_of(const Partition& p) const;
  [[nodiscard]] int first_part(int i) const { return first_[static_cast<std::size_t>(i)]; }
  /// Index, inside PartitionTable::of(n - first_part(i)), of partition i with
  /// its first part removed.
  [[nodiscard]] int tail_index(int i) const { return tail_[static_cast<std::size_t>(i)]; }
  /// n! / z_mu.
  [[nodiscard]] const BigInt& class_size(int i) const { return class_size_[static_cast<std::size_t>(i)]; }

 private:
  explicit PartitionTable(int n);

  int n_;
  std::vector<Partition> parts_;
  std::unordered_map<Partition, int, PartitionHash> index_;
  std::vector<int> first_;
  std::vector<int> tail_;
  std::vector<BigInt> class_size_;
};

/// Memoized character columns. A column of a shape lambda of n holds
/// chi_lambda(mu) for every mu in PartitionTable::of(n) order.
///
/// Lookups take a shared lock; inserts are idempotent (the first writer
/// wins, later writers adopt its column), so concurrent callers always see
/// identical values. When the number of cached entries exceeds the capacity
/// the whole table is dropped; columns already handed out stay valid.
class CharacterTable {
 public:
  using Column = std::vector<CharValue>;

  explicit CharacterTable(std::size_t capacity_entries = std::size_t{1} << 27);

  /// Process-wide table shared by the default Kronecker oracle.
  static CharacterTable& shared();

  std::shared_ptr<const Column> column(const Partition& lambda);
  BigInt character(const Partition& lambda, const Partition& mu);

  [[nodiscard]] std::size_t cached_shapes() const;
  [[nodiscard]] std::size_t cached_entries() const;
  void clear();

 private:
  std::shared_ptr<const Column> lookup(const Partition& key) const;
  std::shared_ptr<const Column> compute(const Partition& key);

  mutable std::shared_mutex mutex_;
  std::unordered_map<Partition, std::shared_ptr<const Column>, PartitionHash> columns_;
  std::size_t entries_ = 0;
  std::size_t capacity_;
};

/// chi_lambda evaluated on the class mu, through the shared table.
BigInt character(const Partition& lambda, const ClassType& mu);

/// Unmemoized Murnaghan-Nakayama recursion (serial reference).
BigInt character_reference(const Partition& lambda, const Partition& mu);

}  // namespace kronface
