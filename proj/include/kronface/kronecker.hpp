#pragma once

// Exact Kronecker coefficients g(alpha, beta, gamma) and bounded-depth
// stability probes.

#include <cstddef>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "kronface/characters.hpp"

namespace kronface {

struct KroneckerQuery {
  Partition alpha;
  Partition beta;
  Partition gamma;

  [[nodiscard]] KroneckerQuery scaled(int d) const {
    return {alpha.scaled(d), beta.scaled(d), gamma.scaled(d)};
  }
  [[nodiscard]] std::string to_string() const;
};

/// g = (1/N!) sum_mu |class mu| chi_alpha(mu) chi_beta(mu) chi_gamma(mu).
///
/// The sum is accumulated in exact integers and divided by N! at the end;
/// a nonzero remainder or a negative result throws InternalConsistencyError.
/// Results are cached under the sorted triple (the value is symmetric), and
/// the cache is safe for concurrent use.
class KroneckerOracle {
 public:
  explicit KroneckerOracle(CharacterTable& characters = CharacterTable::shared());

  BigInt operator()(const Partition& alpha, const Partition& beta, const Partition& gamma);
  BigInt operator()(const KroneckerQuery& q) { return (*this)(q.alpha, q.beta, q.gamma); }

  /// Evaluates every query; OpenMP-parallel over queries.
  std::vector<BigInt> batch(std::span<const KroneckerQuery> queries);
  /// Same as batch() on the calling thread only.
  std::vector<BigInt> batch_serial(std::span<const KroneckerQuery> queries);

  [[nodiscard]] std::size_t cached_values() const;
  CharacterTable& characters() noexcept { return characters_; }

 private:
  BigInt evaluate(const Partition& a, const Partition& b, const Partition& c);

  struct Key {
    Partition a, b, c;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  CharacterTable& characters_;
  mutable std::mutex mutex_;
  std::unordered_map<Key, BigInt, KeyHash> cache_;
};

/// Kronecker coefficient through a process-wide oracle. Mismatched weights
/// give 0.
BigInt kronecker(const Partition& alpha, const Partition& beta, const Partition& gamma);

/// Serial reference: reference characters, sum of chi chi chi / z_mu as
/// exact rationals. Slow; for cross-checks only.
BigInt kronecker_reference(const Partition& alpha, const Partition& beta, const Partition& gamma);

enum class StabilityVerdict {
  StableEvidence,        // every g(d.) == 1
  AlmostStableEvidence,  // every g(d.) <= 1, some == 1, some == 0
  Refuted,               // some g(d.) >= 2
  Undetermined,          // every g(d.) == 0
};

std::string to_string(StabilityVerdict v);

struct StabilityProbe {
  std::vector<BigInt> values;  // g(d alpha, d beta, d gamma) for d = 1..D
  StabilityVerdict verdict = StabilityVerdict::Undetermined;
};

StabilityVerdict classify_probe(std::span<const BigInt> values);

StabilityProbe stability_probe(const KroneckerQuery& q, int depth, KroneckerOracle& oracle);
StabilityProbe stability_probe(const KroneckerQuery& q, int depth);

/// g(base + d * direction) for d = 0..d_max.
std::vector<BigInt> murnaghan_probe(const KroneckerQuery& base, const KroneckerQuery& direction, int d_max,
                                    KroneckerOracle& oracle);
std::vector<BigInt> murnaghan_probe(const KroneckerQuery& base, const KroneckerQuery& direction, int d_max);

}  // namespace kronface
