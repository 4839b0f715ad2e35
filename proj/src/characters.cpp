#include "kronface/characters.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>

#include "kronface/errors.hpp"

namespace kronface {

BigInt to_bigint(CharValue v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return BigInt(static_cast<std::int64_t>(v));
  const bool negative = v < 0;
  const auto mag = static_cast<unsigned __int128>(negative ? -v : v);
  BigInt out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return negative ? BigInt(-out) : out;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt centralizer_order(const Partition& cycle_type) {
  std::map<int, int> mult;
  for (int p : cycle_type.parts()) {
    if (p > 0) ++mult[p];
  }
  BigInt z = 1;
  for (const auto& [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    z *= factorial(m);
  }
  return z;
}

ClassType::ClassType(Partition mu) : cycle_type(mu.trimmed()), centralizer_order(kronface::centralizer_order(mu)) {}

std::vector<RimHookRemoval> remove_rim_hooks(const Partition& shape, int size) {
  std::vector<RimHookRemoval> out;
  if (size <= 0 || size > shape.weight()) return out;
  // Beta-set (abacus) model: a rim hook of size t is a bead sliding from b
  // to b - t into an empty slot; the sign counts beads jumped over.
  const int len = shape.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (len - 1 - i);
  for (int i = 0; i < len; ++i) {
    const int b = beta[static_cast<std::size_t>(i)];
    const int target = b - size;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int x : beta) {
      if (x > target && x < b) ++between;
    }
    std::vector<int> moved(beta);
    moved[static_cast<std::size_t>(i)] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts(static_cast<std::size_t>(len));
    for (int r = 0; r < len; ++r) parts[static_cast<std::size_t>(r)] = moved[static_cast<std::size_t>(r)] - (len - 1 - r);
    out.push_back({Partition(std::move(parts)).trimmed(), (between % 2 == 0) ? 1 : -1});
  }
  return out;
}

PartitionTable::PartitionTable(int n) : n_(n), parts_(partitions_of(n, n)) {
  const BigInt nfact = factorial(n);
  first_.reserve(parts_.size());
  tail_.reserve(parts_.size());
  class_size_.reserve(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    index_.emplace(parts_[i], static_cast<int>(i));
    const Partition& p = parts_[i];
    const int first = p.length() > 0 ? p[0] : 0;
    first_.push_back(first);
    if (first > 0) {
      std::vector<int> rest(p.parts().begin() + 1, p.parts().end());
      tail_.push_back(PartitionTable::of(n - first).index_of(Partition(std::move(rest))));
    } else {
      tail_.push_back(0);
    }
    class_size_.push_back(nfact / centralizer_order(p));
  }
}

const PartitionTable& PartitionTable::of(int n) {
  if (n < 0) throw DomainError("no partitions of a negative integer");
  static std::recursive_mutex mutex;
  static std::deque<std::unique_ptr<PartitionTable>> tables;
  std::lock_guard lock(mutex);
  while (static_cast<int>(tables.size()) <= n) tables.emplace_back();
  auto& slot = tables[static_cast<std::size_t>(n)];
  if (!slot) {
    // Constructing table n consults tables below n (reentrant lock).
    slot.reset(new PartitionTable(n));
  }
  return *slot;
}

int PartitionTable::index_of(const Partition& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

CharacterTable::CharacterTable(std::size_t capacity_entries) : capacity_(capacity_entries) {}

CharacterTable& CharacterTable::shared() {
  static CharacterTable table;
  return table;
}

std::shared_ptr<const CharacterTable::Column> CharacterTable::lookup(const Partition& key) const {
  std::shared_lock lock(mutex_);
  auto it = columns_.find(key);
  return it == columns_.end() ? nullptr : it->second;
}

std::shared_ptr<const CharacterTable::Column> CharacterTable::column(const Partition& lambda) {
  const Partition key = lambda.trimmed();
  if (auto hit = lookup(key)) return hit;
  auto fresh = compute(key);
  std::unique_lock lock(mutex_);
  if (auto it = columns_.find(key); it != columns_.end()) return it->second;
  if (entries_ + fresh->size() > capacity_) {
    columns_.clear();
    entries_ = 0;
  }
  columns_.emplace(key, fresh);
  entries_ += fresh->size();
  return fresh;
}

std::shared_ptr<const CharacterTable::Column> CharacterTable::compute(const Partition& key) {
  const int n = key.weight();
  const PartitionTable& classes = PartitionTable::of(n);
  auto out = std::make_shared<Column>(static_cast<std::size_t>(classes.size()), 0);
  if (n == 0) {
    (*out)[0] = 1;
    return out;
  }
  // Removals grouped by hook size; children are pinned for the loop below.
  struct Child {
    int sign;
    std::shared_ptr<const Column> column;
  };
  std::vector<std::vector<Child>> by_size(static_cast<std::size_t>(n + 1));
  std::vector<bool> prepared(static_cast<std::size_t>(n + 1), false);
  for (int i = 0; i < classes.size(); ++i) {
    const int t = classes.first_part(i);
    auto& children = by_size[static_cast<std::size_t>(t)];
    if (!prepared[static_cast<std::size_t>(t)]) {
      for (auto& removal : remove_rim_hooks(key, t)) {
        children.push_back({removal.sign, column(removal.remainder)});
      }
      prepared[static_cast<std::size_t>(t)] = true;
    }
    CharValue acc = 0;
    const auto tail = static_cast<std::size_t>(classes.tail_index(i));
    for (const auto& child : children) {
      const CharValue term = child.sign * (*child.column)[tail];
      if (__builtin_add_overflow(acc, term, &acc)) {
        throw InternalConsistencyError("character value overflows 128 bits for shape " + key.to_string());
      }
    }
    (*out)[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

BigInt CharacterTable::character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) {
    throw DomainError("character: |lambda| = " + std::to_string(lambda.weight()) +
                      " differs from |mu| = " + std::to_string(mu.weight()));
  }
  const auto col = column(lambda);
  const int idx = PartitionTable::of(mu.weight()).index_of(mu);
  return to_bigint((*col)[static_cast<std::size_t>(idx)]);
}

std::size_t CharacterTable::cached_shapes() const {
  std::shared_lock lock(mutex_);
  return columns_.size();
}

std::size_t CharacterTable::cached_entries() const {
  std::shared_lock lock(mutex_);
  return entries_;
}

void CharacterTable::clear() {
  std::unique_lock lock(mutex_);
  columns_.clear();
  entries_ = 0;
}

BigInt character(const Partition& lambda, const ClassType& mu) {
  return CharacterTable::shared().character(lambda, mu.cycle_type);
}

namespace {

BigInt reference_rec(const Partition& shape, const std::vector<int>& parts, std::size_t next) {
  if (next == parts.size()) return shape.weight() == 0 ? BigInt(1) : BigInt(0);
  BigInt total = 0;
  for (const auto& removal : remove_rim_hooks(shape, parts[next])) {
    total += removal.sign * reference_rec(removal.remainder, parts, next + 1);
  }
  return total;
}

}  // namespace

BigInt character_reference(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw DomainError("character: weight mismatch");
  const Partition m = mu.trimmed();
  return reference_rec(lambda.trimmed(), m.parts(), 0);
}

}  // namespace kronface
