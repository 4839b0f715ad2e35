#include "kronface/pairs.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

#include "kronface/errors.hpp"

namespace kronface {

namespace {

constexpr std::array<std::pair<ConfigKind, const char*>, 12> kKindNames{{
    {ConfigKind::ADD, "ADD"},
    {ConfigKind::H, "H"},
    {ConfigKind::V, "V"},
    {ConfigKind::A, "A"},
    {ConfigKind::B, "B"},
    {ConfigKind::Bt, "Bt"},
    {ConfigKind::C, "C"},
    {ConfigKind::D, "D"},
    {ConfigKind::E1, "E1"},
    {ConfigKind::E2, "E2"},
    {ConfigKind::Et1, "Et1"},
    {ConfigKind::Et2, "Et2"},
}};

bool same_cells(GridIndex a, GridIndex b, GridIndex p, GridIndex q) {
  return (a == p && b == q) || (a == q && b == p);
}

}  // namespace

std::string to_string(ConfigKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

ConfigKind parse_config_kind(const std::string& tag) {
  for (const auto& [k, name] : kKindNames) {
    if (tag == name) return k;
  }
  throw DomainError("unknown configuration tag '" + tag + "'");
}

int ConfigAnchor::inversion_length() const {
  switch (kind) {
    case ConfigKind::ADD: return 0;
    case ConfigKind::H:
    case ConfigKind::V: return 1;
    default: return 2;
  }
}

std::string ConfigAnchor::to_string() const {
  std::string s = kronface::to_string(kind);
  if (kind == ConfigKind::ADD) return s;
  s += " k=" + std::to_string(k);
  if (k2 > 0) s += ",k'=" + std::to_string(k2);
  s += ' ';
  for (const auto& c : cells) s += "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
  return s;
}

std::vector<ConfigAnchor> detect_configs(const OrderMatrix& matrix) {
  const int m = matrix.size();
  std::vector<GridIndex> cell(static_cast<std::size_t>(m + 2));
  for (int k = 1; k <= m; ++k) cell[static_cast<std::size_t>(k)] = matrix.cell_of_rank(k);
  auto at = [&](int k) { return cell[static_cast<std::size_t>(k)]; };

  std::vector<ConfigAnchor> out;
  out.push_back({ConfigKind::ADD, 0, 0, {}});

  std::vector<ConfigAnchor> hs, vs;
  for (int k = 1; k < m; ++k) {
    const GridIndex a = at(k), b = at(k + 1);
    if (a.row == b.row && b.col == a.col + 1) hs.push_back({ConfigKind::H, k, 0, {a, b}});
    if (a.col == b.col && b.row == a.row + 1) vs.push_back({ConfigKind::V, k, 0, {a, b}});
  }
  out.insert(out.end(), hs.begin(), hs.end());
  out.insert(out.end(), vs.begin(), vs.end());

  for (const auto& v : vs) {
    for (const auto& h : hs) {
      if (std::abs(v.k - h.k) < 2) continue;
      out.push_back({ConfigKind::A, v.k, h.k, {v.cells[0], v.cells[1], h.cells[0], h.cells[1]}});
    }
  }
  for (std::size_t p = 0; p < vs.size(); ++p) {
    for (std::size_t q = p + 1; q < vs.size(); ++q) {
      if (std::abs(vs[p].k - vs[q].k) < 2 || std::abs(vs[p].cells[0].row - vs[q].cells[0].row) < 2) continue;
      out.push_back({ConfigKind::B, vs[p].k, vs[q].k, {vs[p].cells[0], vs[p].cells[1], vs[q].cells[0], vs[q].cells[1]}});
    }
  }
  for (std::size_t p = 0; p < hs.size(); ++p) {
    for (std::size_t q = p + 1; q < hs.size(); ++q) {
      if (std::abs(hs[p].k - hs[q].k) < 2 || std::abs(hs[p].cells[0].col - hs[q].cells[0].col) < 2) continue;
      out.push_back({ConfigKind::Bt, hs[p].k, hs[q].k, {hs[p].cells[0], hs[p].cells[1], hs[q].cells[0], hs[q].cells[1]}});
    }
  }
  for (int k = 1; k + 2 <= m; ++k) {
    const GridIndex a = at(k), b = at(k + 1), c = at(k + 2);
    if (same_cells(b, c, {a.row + 1, a.col}, {a.row, a.col + 1})) out.push_back({ConfigKind::C, k, 0, {a, b, c}});
    if (same_cells(a, b, {c.row - 1, c.col}, {c.row, c.col - 1})) out.push_back({ConfigKind::D, k, 0, {a, b, c}});
    if (a.col == b.col && b.col == c.col && b.row == a.row + 1 && c.row == a.row + 2) {
      out.push_back({ConfigKind::E1, k, 0, {a, b, c}});
      out.push_back({ConfigKind::E2, k, 0, {a, b, c}});
    }
    if (a.row == b.row && b.row == c.row && b.col == a.col + 1 && c.col == a.col + 2) {
      out.push_back({ConfigKind::Et1, k, 0, {a, b, c}});
      out.push_back({ConfigKind::Et2, k, 0, {a, b, c}});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const ConfigAnchor& x, const ConfigAnchor& y) {
    return std::tuple(x.inversion_length(), static_cast<int>(x.kind), x.k, x.k2) <
           std::tuple(y.inversion_length(), static_cast<int>(y.kind), y.k, y.k2);
  });
  return out;
}

std::string to_string(PairStatus status) {
  switch (status) {
    case PairStatus::Dominant: return "dominant";
    case PairStatus::WellCoveringByTheorem: return "well-covering-by-theorem";
    case PairStatus::WellCoveringCertified: return "well-covering-certified";
    case PairStatus::NotWellCovering: return "not-well-covering";
  }
  return "dominant";
}

PairStatus parse_pair_status(const std::string& text) {
  for (auto s : {PairStatus::Dominant, PairStatus::WellCoveringByTheorem, PairStatus::WellCoveringCertified,
                 PairStatus::NotWellCovering}) {
    if (to_string(s) == text) return s;
  }
  throw DomainError("unknown pair status '" + text + "'");
}

Permutation embed_weyl_pair(const WeylPair& v) {
  const int n1 = v.first.size();
  const int n2 = v.second.size();
  std::vector<int> one_line(static_cast<std::size_t>(n1 * n2));
  for (int i = 1; i <= n1; ++i) {
    for (int j = 1; j <= n2; ++j) {
      one_line[static_cast<std::size_t>(lex_index({i, j}, n1, n2) - 1)] = lex_index({v.first(i), v.second(j)}, n1, n2);
    }
  }
  return Permutation(std::move(one_line));
}

Permutation normalize(const WeylPair& v, const Permutation& v_hat) { return embed_weyl_pair(v) * v_hat.inverse(); }

PairDescriptor build_pair(const OrderMatrix& matrix, const ConfigAnchor& anchor, int matrix_id) {
  const auto configs = detect_configs(matrix);
  if (std::find(configs.begin(), configs.end(), anchor) == configs.end()) {
    throw DomainError("configuration " + anchor.to_string() + " does not occur in matrix " + matrix.to_string());
  }
  const int n1 = matrix.n1();
  const int n2 = matrix.n2();
  const int m = matrix.size();
  const Permutation w = matrix.w_hat();
  const Permutation w0 = Permutation::longest(m);
  const int k = anchor.k;
  const auto& cells = anchor.cells;
  auto rows = [&](std::initializer_list<int> c) { return Permutation::cycle(n1, c); };
  auto cols = [&](std::initializer_list<int> c) { return Permutation::cycle(n2, c); };
  auto hat = [&](std::initializer_list<int> c) { return Permutation::cycle(m, c); };

  WeylPair v_inv = WeylPair::identity(n1, n2);
  Permutation middle = Permutation::identity(m);
  switch (anchor.kind) {
    case ConfigKind::ADD: break;
    case ConfigKind::H:
      v_inv.second = cols({cells[0].col, cells[0].col + 1});
      middle = hat({k, k + 1});
      break;
    case ConfigKind::V:
      v_inv.first = rows({cells[0].row, cells[0].row + 1});
      middle = hat({k, k + 1});
      break;
    case ConfigKind::A:
      v_inv.first = rows({cells[0].row, cells[0].row + 1});
      v_inv.second = cols({cells[2].col, cells[2].col + 1});
      middle = hat({k, k + 1}) * hat({anchor.k2, anchor.k2 + 1});
      break;
    case ConfigKind::B:
      v_inv.first = rows({cells[0].row, cells[0].row + 1}) * rows({cells[2].row, cells[2].row + 1});
      middle = hat({k, k + 1}) * hat({anchor.k2, anchor.k2 + 1});
      break;
    case ConfigKind::Bt:
      v_inv.second = cols({cells[0].col, cells[0].col + 1}) * cols({cells[2].col, cells[2].col + 1});
      middle = hat({k, k + 1}) * hat({anchor.k2, anchor.k2 + 1});
      break;
    case ConfigKind::C:
      v_inv = {rows({cells[0].row, cells[0].row + 1}), cols({cells[0].col, cells[0].col + 1})};
      middle = hat({k, k + 1, k + 2});
      break;
    case ConfigKind::D:
      v_inv = {rows({cells[2].row - 1, cells[2].row}), cols({cells[2].col - 1, cells[2].col})};
      middle = hat({k, k + 2, k + 1});
      break;
    case ConfigKind::E1:
      v_inv.first = rows({cells[0].row, cells[0].row + 1, cells[0].row + 2});
      middle = hat({k, k + 1, k + 2});
      break;
    case ConfigKind::E2:
      v_inv.first = rows({cells[0].row, cells[0].row + 2, cells[0].row + 1});
      middle = hat({k, k + 2, k + 1});
      break;
    case ConfigKind::Et1:
      v_inv.second = cols({cells[0].col, cells[0].col + 1, cells[0].col + 2});
      middle = hat({k, k + 1, k + 2});
      break;
    case ConfigKind::Et2:
      v_inv.second = cols({cells[0].col, cells[0].col + 2, cells[0].col + 1});
      middle = hat({k, k + 2, k + 1});
      break;
  }
  PairDescriptor pair;
  pair.matrix_id = matrix_id;
  pair.source = matrix;
  pair.anchor = anchor;
  pair.v = v_inv.inverse();
  pair.v_hat = (w * middle * w0).inverse();
  pair.u_hat = normalize(pair.v, pair.v_hat);
  pair.status = anchor.inversion_length() <= 1 ? PairStatus::WellCoveringByTheorem : PairStatus::Dominant;
  if (pair.v.length() != anchor.inversion_length()) {
    throw InternalConsistencyError("configuration " + anchor.to_string() + " gave v of unexpected length");
  }
  if (!dominance_check(pair.v, pair.v_hat, w)) {
    throw InternalConsistencyError("configuration " + anchor.to_string() + " in matrix " + matrix.to_string() +
                                   " fails the dominance test");
  }
  return pair;
}

std::vector<PairDescriptor> pairs_of_matrix(const OrderMatrix& matrix, int matrix_id) {
  std::vector<PairDescriptor> out;
  std::set<CandidatePair> seen;
  for (const auto& anchor : detect_configs(matrix)) {
    PairDescriptor p = build_pair(matrix, anchor, matrix_id);
    if (seen.insert({p.v, p.v_hat}).second) out.push_back(std::move(p));
  }
  return out;
}

std::vector<PairDescriptor> build_all_pairs(const std::vector<OrderMatrix>& matrices) {
  std::vector<std::vector<PairDescriptor>> per(matrices.size());
  const auto count = static_cast<std::ptrdiff_t>(matrices.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    per[idx] = pairs_of_matrix(matrices[idx], static_cast<int>(i) + 1);
  }
  std::vector<PairDescriptor> out;
  for (auto& p : per) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

std::vector<CandidatePair> generic_length2_sweep(const OrderMatrix& matrix, int max_length) {
  const int m = matrix.size();
  const Permutation w = matrix.w_hat();
  const Permutation w0 = Permutation::longest(m);
  std::vector<CandidatePair> out;
  for (int len = 0; len <= max_length; ++len) {
    const auto us = permutations_of_length(m, len);
    for (const auto& v : weyl_pairs_of_length(matrix.n1(), matrix.n2(), len)) {
      for (const auto& u : us) {
        const Permutation v_hat = (w * u * w0).inverse();
        if (dominance_check(v, v_hat, w)) out.push_back({v, v_hat});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kronface
