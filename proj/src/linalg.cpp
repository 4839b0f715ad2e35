#include "kronface/linalg.hpp"

#include <algorithm>
#include <map>

#include "kronface/errors.hpp"

namespace kronface {

RationalMatrix rref(RationalMatrix m) {
  if (m.empty()) return m;
  const std::size_t cols = m.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < m.size(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.size() && m[r][c] == 0) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[pivot_row]);
    const Rational p = m[pivot_row][c];
    for (auto& x : m[pivot_row]) x /= p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == pivot_row || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[pivot_row][k];
    }
    ++pivot_row;
  }
  m.resize(pivot_row);
  return m;
}

int rank(const RationalMatrix& m) { return static_cast<int>(rref(m).size()); }

RationalMatrix null_space(const RationalMatrix& m, int ncols) {
  const auto n = static_cast<std::size_t>(ncols);
  const RationalMatrix r = rref(m);
  std::vector<int> pivot_of_col(n, -1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].size() != n) throw DomainError("null_space: column count mismatch");
    for (std::size_t c = 0; c < n; ++c) {
      if (r[i][c] != 0) {
        pivot_of_col[c] = static_cast<int>(i);
        break;
      }
    }
  }
  RationalMatrix basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    RationalVector z(n, 0);
    z[f] = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (pivot_of_col[c] >= 0) z[c] = -r[static_cast<std::size_t>(pivot_of_col[c])][f];
    }
    basis.push_back(std::move(z));
  }
  return rref(std::move(basis));
}

std::vector<BigInt> primitive_integer_row(const RationalVector& row) {
  BigInt l = 1;
  for (const auto& x : row) l = boost::multiprecision::lcm(l, BigInt(denominator(x)));
  std::vector<BigInt> out;
  out.reserve(row.size());
  BigInt g = 0;
  for (const auto& x : row) {
    out.push_back(numerator(x) * (l / denominator(x)));
    g = boost::multiprecision::gcd(g, out.back());
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

namespace {

struct FmRow {
  RationalVector a;
  Rational b;
  RationalVector mult;
};

bool all_zero(const RationalVector& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

// Keeps, for each direction of a, only the tightest row.
std::vector<FmRow> prune(std::vector<FmRow> rows) {
  std::map<RationalVector, std::size_t> best;
  std::vector<FmRow> out;
  for (auto& row : rows) {
    Rational scale = 0;
    for (const auto& x : row.a) {
      if (x != 0) {
        scale = abs(x);
        break;
      }
    }
    if (scale == 0) {
      out.push_back(std::move(row));
      continue;
    }
    RationalVector key = row.a;
    for (auto& x : key) x /= scale;
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(std::move(key), out.size());
      out.push_back(std::move(row));
    } else {
      FmRow& kept = out[it->second];
      Rational kept_scale = 0;
      for (const auto& x : kept.a) {
        if (x != 0) {
          kept_scale = abs(x);
          break;
        }
      }
      if (row.b / scale > kept.b / kept_scale) kept = std::move(row);
    }
  }
  return out;
}

FeasibilityResult solve(const std::vector<LinearInequality>& system, const std::vector<int>& subset, int nvars) {
  const auto n = static_cast<std::size_t>(nvars);
  std::vector<std::vector<FmRow>> stages(n + 1);
  for (std::size_t s = 0; s < subset.size(); ++s) {
    const auto& in = system[static_cast<std::size_t>(subset[s])];
    if (in.coeffs.size() != n) throw DomainError("fourier_motzkin: inequality arity mismatch");
    FmRow row{in.coeffs, in.rhs, RationalVector(system.size(), 0)};
    row.mult[static_cast<std::size_t>(subset[s])] = 1;
    stages[0].push_back(std::move(row));
  }
  FeasibilityResult result;
  for (std::size_t j = 0; j <= n; ++j) {
    // Contradictions 0 >= b > 0 can appear at any stage.
    for (const auto& row : stages[j]) {
      if (all_zero(row.a) && row.b > 0) {
        for (std::size_t i = 0; i < row.mult.size(); ++i) {
          if (row.mult[i] != 0) result.conflict.push_back(static_cast<int>(i));
        }
        return result;
      }
    }
    if (j == n) break;
    std::vector<FmRow> pos, neg, next;
    for (const auto& row : stages[j]) {
      if (row.a[j] > 0) {
        pos.push_back(row);
      } else if (row.a[j] < 0) {
        neg.push_back(row);
      } else if (!all_zero(row.a)) {
        next.push_back(row);
      }
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        const Rational fp = 1 / p.a[j];
        const Rational fq = -1 / q.a[j];
        FmRow row{RationalVector(n), p.b * fp + q.b * fq, RationalVector(system.size())};
        for (std::size_t k = 0; k < n; ++k) row.a[k] = p.a[k] * fp + q.a[k] * fq;
        row.a[j] = 0;
        for (std::size_t k = 0; k < row.mult.size(); ++k) row.mult[k] = p.mult[k] * fp + q.mult[k] * fq;
        if (all_zero(row.a) && row.b <= 0) continue;
        next.push_back(std::move(row));
      }
    }
    stages[j + 1] = prune(std::move(next));
  }
  result.feasible = true;
  result.point.assign(n, 0);
  for (std::size_t j = n; j-- > 0;) {
    bool has_lo = false, has_hi = false;
    Rational lo, hi;
    for (const auto& row : stages[j]) {
      if (row.a[j] == 0) continue;
      Rational rest = row.b;
      for (std::size_t k = j + 1; k < n; ++k) rest -= row.a[k] * result.point[k];
      const Rational bound = rest / row.a[j];
      if (row.a[j] > 0) {
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      } else {
        if (!has_hi || bound < hi) hi = bound;
        has_hi = true;
      }
    }
    if (has_lo && has_hi && lo > hi) throw InternalConsistencyError("fourier_motzkin: back substitution failed");
    result.point[j] = has_lo ? lo : has_hi ? hi : Rational(0);
  }
  return result;
}

}  // namespace

FeasibilityResult fourier_motzkin(const std::vector<LinearInequality>& system, int nvars) {
  std::vector<int> all(system.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  FeasibilityResult result = solve(system, all, nvars);
  if (result.feasible) return result;
  // Deletion filter down to an irreducible subsystem.
  std::vector<int> core = result.conflict;
  for (std::size_t i = 0; i < core.size();) {
    std::vector<int> trial(core);
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!solve(system, trial, nvars).feasible) {
      core = std::move(trial);
    } else {
      ++i;
    }
  }
  result.conflict = std::move(core);
  return result;
}

}  // namespace kronface
