#include "kronface/kronecker.hpp"

#include <algorithm>
#include <array>

#include "kronface/errors.hpp"

namespace kronface {

std::string KroneckerQuery::to_string() const {
  return "(" + alpha.to_string() + "," + beta.to_string() + "," + gamma.to_string() + ")";
}

KroneckerOracle::KroneckerOracle(CharacterTable& characters) : characters_(characters) {}

std::size_t KroneckerOracle::KeyHash::operator()(const Key& k) const noexcept {
  PartitionHash h;
  return h(k.a) * 31u * 31u + h(k.b) * 31u + h(k.c);
}

BigInt KroneckerOracle::operator()(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  if (alpha.weight() != beta.weight() || alpha.weight() != gamma.weight()) return 0;
  std::array<Partition, 3> sorted{alpha.trimmed(), beta.trimmed(), gamma.trimmed()};
  std::sort(sorted.begin(), sorted.end());
  Key key{sorted[0], sorted[1], sorted[2]};
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  BigInt value = evaluate(key.a, key.b, key.c);
  std::lock_guard lock(mutex_);
  cache_.emplace(std::move(key), value);
  return value;
}

BigInt KroneckerOracle::evaluate(const Partition& a, const Partition& b, const Partition& c) {
  const int n = a.weight();
  const PartitionTable& classes = PartitionTable::of(n);
  const auto ca = characters_.column(a);
  const auto cb = characters_.column(b);
  const auto cc = characters_.column(c);
  BigInt sum = 0;
  BigInt term;
  for (int i = 0; i < classes.size(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const CharValue x = (*ca)[idx];
    const CharValue y = (*cb)[idx];
    const CharValue z = (*cc)[idx];
    if (x == 0 || y == 0 || z == 0) continue;
    term = to_bigint(x);
    term *= to_bigint(y);
    term *= to_bigint(z);
    term *= classes.class_size(i);
    sum += term;
  }
  const BigInt nfact = factorial(n);
  if (sum % nfact != 0) {
    throw InternalConsistencyError("character sum for " + a.to_string() + b.to_string() + c.to_string() +
                                   " is not divisible by N!");
  }
  BigInt g = sum / nfact;
  if (g < 0) throw InternalConsistencyError("negative Kronecker coefficient");
  return g;
}

std::vector<BigInt> KroneckerOracle::batch(std::span<const KroneckerQuery> queries) {
  std::vector<BigInt> out(queries.size());
  const auto count = static_cast<std::ptrdiff_t>(queries.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    out[idx] = (*this)(queries[idx]);
  }
  return out;
}

std::vector<BigInt> KroneckerOracle::batch_serial(std::span<const KroneckerQuery> queries) {
  std::vector<BigInt> out;
  out.reserve(queries.size());
  for (const auto& q : queries) out.push_back((*this)(q));
  return out;
}

std::size_t KroneckerOracle::cached_values() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

namespace {

KroneckerOracle& shared_oracle() {
  static KroneckerOracle oracle;
  return oracle;
}

}  // namespace

BigInt kronecker(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  return shared_oracle()(alpha, beta, gamma);
}

BigInt kronecker_reference(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  if (alpha.weight() != beta.weight() || alpha.weight() != gamma.weight()) return 0;
  Rational total = 0;
  for (const auto& mu : partitions_of(alpha.weight(), alpha.weight())) {
    const BigInt prod =
        character_reference(alpha, mu) * character_reference(beta, mu) * character_reference(gamma, mu);
    if (prod == 0) continue;
    total += Rational(prod, centralizer_order(mu));
  }
  if (denominator(total) != 1) throw InternalConsistencyError("reference Kronecker sum is not an integer");
  return numerator(total);
}

std::string to_string(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::StableEvidence: return "stable-evidence";
    case StabilityVerdict::AlmostStableEvidence: return "almost-stable-evidence";
    case StabilityVerdict::Refuted: return "refuted";
    case StabilityVerdict::Undetermined: return "undetermined";
  }
  return "undetermined";
}

StabilityVerdict classify_probe(std::span<const BigInt> values) {
  bool any_one = false;
  bool all_one = true;
  for (const auto& v : values) {
    if (v >= 2) return StabilityVerdict::Refuted;
    if (v == 1) {
      any_one = true;
    } else {
      all_one = false;
    }
  }
  if (!any_one) return StabilityVerdict::Undetermined;
  return all_one ? StabilityVerdict::StableEvidence : StabilityVerdict::AlmostStableEvidence;
}

StabilityProbe stability_probe(const KroneckerQuery& q, int depth, KroneckerOracle& oracle) {
  if (depth < 1) throw DomainError("stability probe depth must be >= 1");
  StabilityProbe probe;
  for (int d = 1; d <= depth; ++d) probe.values.push_back(oracle(q.scaled(d)));
  probe.verdict = classify_probe(probe.values);
  return probe;
}

StabilityProbe stability_probe(const KroneckerQuery& q, int depth) { return stability_probe(q, depth, shared_oracle()); }

std::vector<BigInt> murnaghan_probe(const KroneckerQuery& base, const KroneckerQuery& direction, int d_max,
                                    KroneckerOracle& oracle) {
  if (d_max < 0) throw DomainError("murnaghan probe needs d_max >= 0");
  std::vector<BigInt> values;
  for (int d = 0; d <= d_max; ++d) {
    values.push_back(oracle(base.alpha.plus(direction.alpha.scaled(d)), base.beta.plus(direction.beta.scaled(d)),
                            base.gamma.plus(direction.gamma.scaled(d))));
  }
  return values;
}

std::vector<BigInt> murnaghan_probe(const KroneckerQuery& base, const KroneckerQuery& direction, int d_max) {
  return murnaghan_probe(base, direction, d_max, shared_oracle());
}

}  // namespace kronface
