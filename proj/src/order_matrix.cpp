#include "kronface/order_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kronface/errors.hpp"
#include "kronface/linalg.hpp"

namespace kronface {

namespace {

std::vector<int> ranks_of_sums(int n1, int n2, const std::vector<int>& x, const std::vector<int>& y) {
  const int m = n1 * n2;
  std::vector<int> cells(static_cast<std::size_t>(m));
  std::iota(cells.begin(), cells.end(), 0);
  auto sum = [&](int c) { return x[static_cast<std::size_t>(c / n2)] + y[static_cast<std::size_t>(c % n2)]; };
  std::sort(cells.begin(), cells.end(), [&](int a, int b) { return sum(a) > sum(b); });
  for (int k = 1; k < m; ++k) {
    if (sum(cells[static_cast<std::size_t>(k)]) == sum(cells[static_cast<std::size_t>(k - 1)])) return {};
  }
  std::vector<int> ranks(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) ranks[static_cast<std::size_t>(cells[static_cast<std::size_t>(k)])] = k + 1;
  return ranks;
}

bool strictly_decreasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] >= v[i - 1]) return false;
  }
  return true;
}

}  // namespace

bool is_increasing_grid(int n1, int n2, const std::vector<int>& ranks) {
  const int m = n1 * n2;
  if (n1 < 1 || n2 < 1 || static_cast<int>(ranks.size()) != m) return false;
  std::vector<bool> seen(static_cast<std::size_t>(m + 1), false);
  for (int r : ranks) {
    if (r < 1 || r > m || seen[static_cast<std::size_t>(r)]) return false;
    seen[static_cast<std::size_t>(r)] = true;
  }
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      const int r = ranks[static_cast<std::size_t>(i * n2 + j)];
      if (j + 1 < n2 && ranks[static_cast<std::size_t>(i * n2 + j + 1)] <= r) return false;
      if (i + 1 < n1 && ranks[static_cast<std::size_t>((i + 1) * n2 + j)] <= r) return false;
    }
  }
  return true;
}

OrderMatrix::OrderMatrix(int n1, int n2, std::vector<int> ranks, AdditiveWitness witness)
    : n1_(n1), n2_(n2), ranks_(std::move(ranks)), witness_(std::move(witness)) {
  if (!is_increasing_grid(n1_, n2_, ranks_)) throw DomainError("not an increasing rank grid");
  if (!witness_.x.empty() || !witness_.y.empty()) {
    if (static_cast<int>(witness_.x.size()) != n1_ || static_cast<int>(witness_.y.size()) != n2_) {
      throw DomainError("witness arity does not match the grid");
    }
    if (ranks_of_sums(n1_, n2_, witness_.x, witness_.y) != ranks_) {
      throw DomainError("witness does not reproduce the rank grid");
    }
  }
}

OrderMatrix OrderMatrix::from_witness(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.empty() || y.empty() || !strictly_decreasing(x) || !strictly_decreasing(y)) {
    throw DomainError("witness vectors must be nonempty and strictly decreasing");
  }
  const int n1 = static_cast<int>(x.size());
  const int n2 = static_cast<int>(y.size());
  auto ranks = ranks_of_sums(n1, n2, x, y);
  if (ranks.empty()) throw DomainError("witness sums x_i + y_j are not pairwise distinct");
  return OrderMatrix(n1, n2, std::move(ranks), AdditiveWitness{x, y});
}

int OrderMatrix::rank(int row, int col) const {
  if (row < 1 || row > n1_ || col < 1 || col > n2_) throw DomainError("cell outside the grid");
  return ranks_[static_cast<std::size_t>((row - 1) * n2_ + col - 1)];
}

GridIndex OrderMatrix::cell_of_rank(int k) const {
  auto it = std::find(ranks_.begin(), ranks_.end(), k);
  if (it == ranks_.end()) throw DomainError("rank outside 1..n1*n2");
  return unlex_index(static_cast<int>(it - ranks_.begin()) + 1, n1_, n2_);
}

Permutation OrderMatrix::w_hat() const {
  std::vector<int> one_line(ranks_.size());
  for (std::size_t c = 0; c < ranks_.size(); ++c) one_line[static_cast<std::size_t>(ranks_[c] - 1)] = static_cast<int>(c) + 1;
  return Permutation(std::move(one_line));
}

OrderMatrix OrderMatrix::transposed() const {
  std::vector<int> t(ranks_.size());
  for (int i = 0; i < n1_; ++i) {
    for (int j = 0; j < n2_; ++j) t[static_cast<std::size_t>(j * n1_ + i)] = ranks_[static_cast<std::size_t>(i * n2_ + j)];
  }
  return OrderMatrix(n2_, n1_, std::move(t), AdditiveWitness{witness_.y, witness_.x});
}

std::string OrderMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < n1_; ++i) {
    if (i) os << " / ";
    for (int j = 0; j < n2_; ++j) {
      if (j) os << ' ';
      os << ranks_[static_cast<std::size_t>(i * n2_ + j)];
    }
  }
  return os.str();
}

std::vector<std::vector<int>> increasing_grids(int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw DomainError("grid dimensions must be positive");
  const int m = n1 * n2;
  std::vector<std::vector<int>> out;
  std::vector<int> grid(static_cast<std::size_t>(m), 0);
  std::vector<int> filled(static_cast<std::size_t>(n1), 0);  // cells placed per row
  // Rank k goes at the end of a row whose length stays below the row above.
  auto place = [&](auto&& self, int k) -> void {
    if (k > m) {
      out.push_back(grid);
      return;
    }
    for (int i = 0; i < n1; ++i) {
      const int c = filled[static_cast<std::size_t>(i)];
      if (c == n2) continue;
      if (i > 0 && filled[static_cast<std::size_t>(i - 1)] <= c) continue;
      grid[static_cast<std::size_t>(i * n2 + c)] = k;
      ++filled[static_cast<std::size_t>(i)];
      self(self, k + 1);
      --filled[static_cast<std::size_t>(i)];
    }
  };
  place(place, 1);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt increasing_grid_count(int n1, int n2) {
  BigInt hooks = 1;
  for (int i = 1; i <= n1; ++i) {
    for (int j = 1; j <= n2; ++j) hooks *= (n2 - j) + (n1 - i) + 1;
  }
  return factorial(n1 * n2) / hooks;
}

std::string StrictInequality::to_string() const {
  auto side = [&](int sign) {
    std::string s;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      int c = coeffs[k] * sign;
      if (c <= 0) continue;
      const bool is_x = static_cast<int>(k) < n1;
      const int idx = is_x ? static_cast<int>(k) + 1 : static_cast<int>(k) - n1 + 1;
      for (; c > 0; --c) {
        if (!s.empty()) s += " + ";
        s += (is_x ? "x_" : "y_") + std::to_string(idx);
      }
    }
    return s.empty() ? std::string("0") : s;
  };
  return side(1) + " > " + side(-1);
}

namespace {

struct RankConstraint {
  int hi;  // 0-based cell with the larger sum
  int lo;
  int level;
};

class WitnessSearch {
 public:
  WitnessSearch(int n1, int n2, const std::vector<int>& ranks) : n1_(n1), n2_(n2) {
    const int m = n1 * n2;
    std::vector<int> cell(static_cast<std::size_t>(m + 1));
    for (int c = 0; c < m; ++c) cell[static_cast<std::size_t>(ranks[static_cast<std::size_t>(c)])] = c;
    for (int k = 1; k < m; ++k) {
      const int hi = cell[static_cast<std::size_t>(k)];
      const int lo = cell[static_cast<std::size_t>(k + 1)];
      auto level = [&](int c) { return c % n2 == n2 - 1 ? 0 : c % n2 + 1; };
      constraints_.push_back({hi, lo, std::max(level(hi), level(lo))});
    }
    x_.assign(static_cast<std::size_t>(n1), 0);
    y_.assign(static_cast<std::size_t>(n2), 0);
  }

  std::optional<AdditiveWitness> run(int bound) {
    bound_ = bound;
    if (assign_x(0)) return AdditiveWitness{x_, y_};
    return std::nullopt;
  }

 private:
  int sum(int c) const { return x_[static_cast<std::size_t>(c / n2_)] + y_[static_cast<std::size_t>(c % n2_)]; }

  bool ready_ok(int level) const {
    for (const auto& rc : constraints_) {
      if (rc.level == level && sum(rc.hi) <= sum(rc.lo)) return false;
    }
    return true;
  }

  // Entries are chosen smallest first so the first hit is lexicographically least.
  bool assign_x(int i) {
    if (i == n1_ - 1) {
      x_[static_cast<std::size_t>(i)] = 0;
      return ready_ok(0) && assign_y(0);
    }
    const int lo = n1_ - 1 - i;
    const int hi = i == 0 ? bound_ : x_[static_cast<std::size_t>(i - 1)] - 1;
    for (int v = lo; v <= hi; ++v) {
      x_[static_cast<std::size_t>(i)] = v;
      if (assign_x(i + 1)) return true;
    }
    return false;
  }

  bool assign_y(int j) {
    if (j == n2_ - 1) {
      y_[static_cast<std::size_t>(j)] = 0;
      return true;
    }
    const int lo = n2_ - 1 - j;
    const int hi = j == 0 ? bound_ : y_[static_cast<std::size_t>(j - 1)] - 1;
    for (int v = lo; v <= hi; ++v) {
      y_[static_cast<std::size_t>(j)] = v;
      if (ready_ok(j + 1) && assign_y(j + 1)) return true;
    }
    return false;
  }

  int n1_, n2_;
  int bound_ = 0;
  std::vector<RankConstraint> constraints_;
  std::vector<int> x_, y_;
};

}  // namespace

AdditiveFeasibility additive_feasibility(int n1, int n2, const std::vector<int>& ranks) {
  if (!is_increasing_grid(n1, n2, ranks)) throw DomainError("additive_feasibility needs an increasing rank grid");
  const int m = n1 * n2;
  const int width = n1 + n2;
  std::vector<StrictInequality> strict;
  auto push = [&](std::vector<int> coeffs) { strict.push_back({n1, std::move(coeffs)}); };
  for (int i = 0; i + 1 < n1; ++i) {
    std::vector<int> c(static_cast<std::size_t>(width), 0);
    c[static_cast<std::size_t>(i)] = 1;
    c[static_cast<std::size_t>(i + 1)] = -1;
    push(std::move(c));
  }
  for (int j = 0; j + 1 < n2; ++j) {
    std::vector<int> c(static_cast<std::size_t>(width), 0);
    c[static_cast<std::size_t>(n1 + j)] = 1;
    c[static_cast<std::size_t>(n1 + j + 1)] = -1;
    push(std::move(c));
  }
  std::vector<int> cell(static_cast<std::size_t>(m + 1));
  for (int c = 0; c < m; ++c) cell[static_cast<std::size_t>(ranks[static_cast<std::size_t>(c)])] = c;
  for (int k = 1; k < m; ++k) {
    std::vector<int> c(static_cast<std::size_t>(width), 0);
    const int hi = cell[static_cast<std::size_t>(k)];
    const int lo = cell[static_cast<std::size_t>(k + 1)];
    c[static_cast<std::size_t>(hi / n2)] += 1;
    c[static_cast<std::size_t>(n1 + hi % n2)] += 1;
    c[static_cast<std::size_t>(lo / n2)] -= 1;
    c[static_cast<std::size_t>(n1 + lo % n2)] -= 1;
    push(std::move(c));
  }

  // x_n1 = y_n2 = 0 is no loss: shifting x down and y down keeps every order.
  auto free_index = [&](int k) -> int {
    if (k < n1 - 1) return k;
    if (k == n1 - 1) return -1;
    if (k < width - 1) return k - 1;
    return -1;
  };
  const int nvars = width - 2;
  std::vector<LinearInequality> system;
  for (const auto& s : strict) {
    LinearInequality li{RationalVector(static_cast<std::size_t>(nvars), 0), 1};
    for (int k = 0; k < width; ++k) {
      const int f = free_index(k);
      if (f >= 0) li.coeffs[static_cast<std::size_t>(f)] = s.coeffs[static_cast<std::size_t>(k)];
    }
    system.push_back(std::move(li));
  }

  AdditiveFeasibility result;
  const FeasibilityResult fm = fourier_motzkin(system, nvars);
  if (!fm.feasible) {
    for (int idx : fm.conflict) result.conflict.push_back(strict[static_cast<std::size_t>(idx)]);
    return result;
  }
  RationalVector full(static_cast<std::size_t>(width), 0);
  for (int k = 0; k < width; ++k) {
    const int f = free_index(k);
    if (f >= 0) full[static_cast<std::size_t>(k)] = fm.point[static_cast<std::size_t>(f)];
  }
  BigInt scale = 1;
  for (const auto& v : full) scale = boost::multiprecision::lcm(scale, BigInt(denominator(v)));
  std::vector<int> x, y;
  for (int k = 0; k < width; ++k) {
    const BigInt v = numerator(full[static_cast<std::size_t>(k)]) * (scale / denominator(full[static_cast<std::size_t>(k)]));
    (k < n1 ? x : y).push_back(v.convert_to<int>());
  }
  if (ranks_of_sums(n1, n2, x, y) != ranks) {
    throw InternalConsistencyError("rational witness does not reproduce an increasing grid");
  }
  const int upper = std::max(x.front(), y.front());
  WitnessSearch search(n1, n2, ranks);
  for (int bound = std::max(n1, n2) - 1; bound <= upper; ++bound) {
    if (auto w = search.run(bound)) {
      result.witness = std::move(w);
      return result;
    }
  }
  throw InternalConsistencyError("witness search missed a feasible grid");
}

namespace {

std::vector<OrderMatrix> collect(int n1, int n2, const std::vector<std::vector<int>>& grids,
                                 std::vector<std::optional<AdditiveWitness>>& found) {
  std::vector<OrderMatrix> out;
  for (std::size_t i = 0; i < grids.size(); ++i) {
    if (found[i]) out.emplace_back(n1, n2, grids[i], *found[i]);
  }
  return out;
}

}  // namespace

std::vector<OrderMatrix> enumerate_order_matrices(int n1, int n2) {
  const auto grids = increasing_grids(n1, n2);
  std::vector<std::optional<AdditiveWitness>> found(grids.size());
  const auto count = static_cast<std::ptrdiff_t>(grids.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    found[idx] = additive_feasibility(n1, n2, grids[idx]).witness;
  }
  return collect(n1, n2, grids, found);
}

std::vector<OrderMatrix> enumerate_order_matrices_serial(int n1, int n2) {
  const auto grids = increasing_grids(n1, n2);
  std::vector<std::optional<AdditiveWitness>> found(grids.size());
  for (std::size_t i = 0; i < grids.size(); ++i) found[i] = additive_feasibility(n1, n2, grids[i]).witness;
  return collect(n1, n2, grids, found);
}

int AdditiveMatrix::at(int row, int col) const {
  if (row < 1 || row > n1 || col < 1 || col > n2) throw DomainError("cell outside the matrix");
  return entries.at(static_cast<std::size_t>((row - 1) * n2 + col - 1));
}

std::optional<std::vector<int>> AdditiveMatrix::rank_grid() const {
  const int m = n1 * n2;
  std::vector<int> cells(static_cast<std::size_t>(m));
  std::iota(cells.begin(), cells.end(), 0);
  std::sort(cells.begin(), cells.end(),
            [&](int a, int b) { return entries[static_cast<std::size_t>(a)] > entries[static_cast<std::size_t>(b)]; });
  std::vector<int> ranks(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    if (k > 0 && entries[static_cast<std::size_t>(cells[static_cast<std::size_t>(k)])] ==
                     entries[static_cast<std::size_t>(cells[static_cast<std::size_t>(k - 1)])]) {
      return std::nullopt;
    }
    ranks[static_cast<std::size_t>(cells[static_cast<std::size_t>(k)])] = k + 1;
  }
  return ranks;
}

Marginals marginals_and_pi(const AdditiveMatrix& a) {
  if (a.n1 < 1 || a.n2 < 1 || static_cast<int>(a.entries.size()) != a.n1 * a.n2) {
    throw DomainError("additive matrix has the wrong number of entries");
  }
  std::vector<int> rows(static_cast<std::size_t>(a.n1), 0), cols(static_cast<std::size_t>(a.n2), 0);
  for (int i = 0; i < a.n1; ++i) {
    for (int j = 0; j < a.n2; ++j) {
      const int v = a.entries[static_cast<std::size_t>(i * a.n2 + j)];
      if (v < 0) throw DomainError("additive matrix has a negative entry");
      rows[static_cast<std::size_t>(i)] += v;
      cols[static_cast<std::size_t>(j)] += v;
    }
  }
  if (!std::is_sorted(rows.rbegin(), rows.rend()) || !std::is_sorted(cols.rbegin(), cols.rend())) {
    throw DomainError("1-marginals of the matrix are not partitions");
  }
  std::vector<int> sorted(a.entries);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return {Partition(std::move(rows)), Partition(std::move(cols)), Partition(std::move(sorted))};
}

}  // namespace kronface
