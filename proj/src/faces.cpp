#include "kronface/faces.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

#include "kronface/errors.hpp"

namespace kronface {

std::string EquationConvention::to_string() const {
  std::string s = invert ? "u^-1" : "u";
  s += reverse_positions ? " o w0" : "";
  if (reverse_rows) s += ", rows reversed";
  if (reverse_cols) s += ", columns reversed";
  return s;
}

std::vector<EquationConvention> EquationConvention::all() {
  std::vector<EquationConvention> out;
  for (int mask = 0; mask < 16; ++mask) {
    out.push_back({(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0, (mask & 8) != 0});
  }
  return out;
}

std::string FaceEquation::to_string() const {
  std::string s = (is_alpha ? "alpha_" : "beta_") + std::to_string(index) + " =";
  if (gammas.empty()) return s + " 0";
  for (std::size_t i = 0; i < gammas.size(); ++i) s += (i ? " + gamma_" : " gamma_") + std::to_string(gammas[i]);
  return s;
}

FaceEquation parse_face_equation(const std::string& text) {
  static const std::regex whole(R"(\s*(alpha|beta)_(\d+)\s*=\s*(.*?)\s*)");
  static const std::regex term(R"(^gamma_(\d+)$)");
  std::smatch m;
  if (!std::regex_match(text, m, whole)) throw DomainError("malformed face equation '" + text + "'");
  FaceEquation eq{m[1] == "alpha", std::stoi(m[2]), {}};
  const std::string rhs = m[3];
  if (rhs != "0") {
    std::stringstream ss(rhs);
    std::string item;
    while (std::getline(ss, item, '+')) {
      item.erase(0, item.find_first_not_of(' '));
      item.erase(item.find_last_not_of(' ') + 1);
      std::smatch t;
      if (!std::regex_match(item, t, term)) throw DomainError("malformed term '" + item + "' in '" + text + "'");
      eq.gammas.push_back(std::stoi(t[1]));
    }
  }
  std::sort(eq.gammas.begin(), eq.gammas.end());
  return eq;
}

RationalVector parse_linear_equation(const std::string& text, int n1, int n2) {
  static const std::regex term(R"(^\s*([+-])?\s*(?:(\d+)\s*\*\s*)?(alpha|beta|gamma)_(\d+)\s*)");
  const auto eq = text.find('=');
  if (eq == std::string::npos || text.find('=', eq + 1) != std::string::npos) {
    throw DomainError("expected exactly one '=' in '" + text + "'");
  }
  RationalVector row(static_cast<std::size_t>(n1 + n2 + n1 * n2), 0);
  auto add_side = [&](std::string side, int sign) {
    bool first = true;
    while (side.find_first_not_of(' ') != std::string::npos) {
      std::smatch m;
      if (!std::regex_search(side, m, term) || (!first && !m[1].matched)) {
        throw DomainError("malformed linear equation '" + text + "'");
      }
      const int coeff = (m[1] == "-" ? -1 : 1) * (m[2].matched ? std::stoi(m[2]) : 1);
      const int index = std::stoi(m[4]);
      const int limit = m[3] == "alpha" ? n1 : m[3] == "beta" ? n2 : n1 * n2;
      if (index < 1 || index > limit) throw DomainError("index out of range in '" + text + "'");
      const int offset = m[3] == "alpha" ? 0 : m[3] == "beta" ? n1 : n1 + n2;
      row[static_cast<std::size_t>(offset + index - 1)] += sign * coeff;
      side = m.suffix();
      first = false;
    }
    if (first) throw DomainError("empty side in '" + text + "'");
  };
  add_side(text.substr(0, eq), 1);
  add_side(text.substr(eq + 1), -1);
  return row;
}

std::vector<GridIndex> gamma_cells(const Permutation& u_hat, int n1, int n2, EquationConvention conv) {
  const int m = n1 * n2;
  if (u_hat.size() != m) throw DomainError("u_hat has the wrong size for the grid");
  const Permutation p = conv.invert ? u_hat.inverse() : u_hat;
  std::vector<GridIndex> out;
  for (int k = 1; k <= m; ++k) {
    GridIndex c = unlex_index(p(conv.reverse_positions ? m + 1 - k : k), n1, n2);
    if (conv.reverse_rows) c.row = n1 + 1 - c.row;
    if (conv.reverse_cols) c.col = n2 + 1 - c.col;
    out.push_back(c);
  }
  return out;
}

std::vector<FaceEquation> face_equations_of(const Permutation& u_hat, int n1, int n2, EquationConvention conv) {
  const auto cells = gamma_cells(u_hat, n1, n2, conv);
  std::vector<FaceEquation> out;
  for (int i = 1; i <= n1; ++i) out.push_back({true, i, {}});
  for (int j = 1; j <= n2; ++j) out.push_back({false, j, {}});
  for (std::size_t k = 0; k < cells.size(); ++k) {
    out[static_cast<std::size_t>(cells[k].row - 1)].gammas.push_back(static_cast<int>(k) + 1);
    out[static_cast<std::size_t>(n1 + cells[k].col - 1)].gammas.push_back(static_cast<int>(k) + 1);
  }
  return out;
}

std::vector<FaceEquation> displayed_equations(const std::vector<FaceEquation>& eqs, int n1, int n2) {
  std::vector<FaceEquation> out;
  for (const auto& e : eqs) {
    if ((e.is_alpha && e.index == n1) || (!e.is_alpha && e.index == n2)) continue;
    out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [](const FaceEquation& a, const FaceEquation& b) {
    return std::tuple(!a.is_alpha, a.index) < std::tuple(!b.is_alpha, b.index);
  });
  return out;
}

std::vector<EquationConvention> matching_conventions(std::span<const CalibrationExample> examples) {
  std::vector<EquationConvention> out;
  for (const auto& conv : EquationConvention::all()) {
    bool ok = true;
    for (const auto& ex : examples) {
      auto expected = ex.displayed;
      std::sort(expected.begin(), expected.end(), [](const FaceEquation& a, const FaceEquation& b) {
        return std::tuple(!a.is_alpha, a.index) < std::tuple(!b.is_alpha, b.index);
      });
      if (displayed_equations(face_equations_of(ex.u_hat, ex.n1, ex.n2, conv), ex.n1, ex.n2) != expected) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(conv);
  }
  return out;
}

RationalMatrix equation_rows(const std::vector<FaceEquation>& eqs, int n1, int n2) {
  const int width = n1 + n2 + n1 * n2;
  RationalMatrix rows;
  for (const auto& e : eqs) {
    RationalVector r(static_cast<std::size_t>(width), 0);
    r[static_cast<std::size_t>(e.is_alpha ? e.index - 1 : n1 + e.index - 1)] += 1;
    for (int g : e.gammas) r[static_cast<std::size_t>(n1 + n2 + g - 1)] -= 1;
    rows.push_back(std::move(r));
  }
  return rows;
}

RationalMatrix ambient_weight_rows(int n1, int n2) {
  const int width = n1 + n2 + n1 * n2;
  RationalMatrix rows(2, RationalVector(static_cast<std::size_t>(width), 0));
  for (int i = 0; i < n1; ++i) rows[0][static_cast<std::size_t>(i)] = 1;
  for (int j = 0; j < n2; ++j) rows[1][static_cast<std::size_t>(n1 + j)] = 1;
  for (int k = n1 + n2; k < width; ++k) {
    rows[0][static_cast<std::size_t>(k)] = -1;
    rows[1][static_cast<std::size_t>(k)] = -1;
  }
  return rows;
}

namespace {

std::string variable_name(std::size_t c, int n1, int n2) {
  const int k = static_cast<int>(c);
  if (k < n1) return "alpha_" + std::to_string(k + 1);
  if (k < n1 + n2) return "beta_" + std::to_string(k - n1 + 1);
  return "gamma_" + std::to_string(k - n1 - n2 + 1);
}

std::string rational_text(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

std::string render_row(const RationalVector& row, int n1, int n2) {
  std::size_t pivot = 0;
  while (pivot < row.size() && row[pivot] == 0) ++pivot;
  if (pivot == row.size()) return "0 = 0";
  const Rational p = row[pivot];
  std::string lhs = variable_name(pivot, n1, n2);
  if (p != 1) lhs = rational_text(p) + "*" + lhs;
  std::string rhs;
  for (std::size_t c = pivot + 1; c < row.size(); ++c) {
    if (row[c] == 0) continue;
    const Rational coeff = -row[c];
    const bool neg = coeff < 0;
    const Rational mag = neg ? Rational(-coeff) : coeff;
    if (rhs.empty()) {
      rhs = neg ? "-" : "";
    } else {
      rhs += neg ? " - " : " + ";
    }
    if (mag != 1) rhs += rational_text(mag) + "*";
    rhs += variable_name(c, n1, n2);
  }
  return lhs + " = " + (rhs.empty() ? "0" : rhs);
}

RationalVector LatticeTriple::coordinates() const {
  RationalVector out;
  for (int x : alpha.parts()) out.emplace_back(x);
  for (int x : beta.parts()) out.emplace_back(x);
  for (int x : gamma.parts()) out.emplace_back(x);
  return out;
}

std::string LatticeTriple::to_string() const {
  return "(" + alpha.trimmed().to_string() + "," + beta.trimmed().to_string() + "," + gamma.trimmed().to_string() + ")";
}

long long mu_value(const LatticeTriple& triple, const Permutation& u_hat, const Cocharacter& sigma) {
  const int n1 = static_cast<int>(sigma.first.size());
  const int n2 = static_cast<int>(sigma.second.size());
  if (triple.alpha.arity() != n1 || triple.beta.arity() != n2 || triple.gamma.arity() != n1 * n2) {
    throw DomainError("mu_value: triple arities do not match the cocharacter");
  }
  const auto cells = gamma_cells(u_hat, n1, n2);
  long long mu = 0;
  for (int i = 0; i < n1; ++i) mu += static_cast<long long>(sigma.first[static_cast<std::size_t>(i)]) * triple.alpha[static_cast<std::size_t>(i)];
  for (int j = 0; j < n2; ++j) mu += static_cast<long long>(sigma.second[static_cast<std::size_t>(j)]) * triple.beta[static_cast<std::size_t>(j)];
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const long long g = triple.gamma[k];
    mu -= g * (sigma.first[static_cast<std::size_t>(cells[k].row - 1)] + sigma.second[static_cast<std::size_t>(cells[k].col - 1)]);
  }
  return mu;
}

std::string to_string(FaceClass c) {
  switch (c) {
    case FaceClass::Regular: return "regular";
    case FaceClass::NonRegular: return "non-regular";
    case FaceClass::PossiblyZero: return "possibly-zero";
  }
  return "non-regular";
}

bool StabilityReport::consistent(bool expect_stable) const {
  return refuted == 0 && (!expect_stable || almost_stable == 0);
}

FaceClass FaceDescriptor::classify() const {
  if (well_covering()) return FaceClass::Regular;
  if (dimension_estimate == 0) return FaceClass::PossiblyZero;
  return FaceClass::NonRegular;
}

bool FaceDescriptor::contains(const LatticeTriple& t) const {
  if (t.alpha.arity() != n1 || t.beta.arity() != n2 || t.gamma.arity() != n1 * n2) return false;
  const auto x = t.coordinates();
  for (const auto& row : mu_zero_system) {
    Rational s = 0;
    for (std::size_t c = 0; c < row.size(); ++c) s += row[c] * x[c];
    if (s != 0) return false;
  }
  return true;
}

FaceDescriptor face_equations(const PairDescriptor& pair) {
  FaceDescriptor face;
  face.n1 = pair.source.n1();
  face.n2 = pair.source.n2();
  face.u_hat = pair.u_hat;
  face.status = pair.status;
  face.equations = face_equations_of(pair.u_hat, face.n1, face.n2);
  face.mu_zero_system = rref(equation_rows(face.equations, face.n1, face.n2));
  face.provenance.push_back({pair.matrix_id, pair.source.to_string(), pair.anchor.to_string()});
  return face;
}

std::vector<LatticeTriple> enumerate_face_triples(const FaceDescriptor& face, int n) {
  const int m = face.n1 * face.n2;
  std::vector<LatticeTriple> out;
  for (const auto& gamma : partitions_of(n, m)) {
    const Partition g = gamma.padded(m);
    std::vector<int> a(static_cast<std::size_t>(face.n1), 0), b(static_cast<std::size_t>(face.n2), 0);
    for (const auto& e : face.equations) {
      int s = 0;
      for (int k : e.gammas) s += g[static_cast<std::size_t>(k - 1)];
      (e.is_alpha ? a : b)[static_cast<std::size_t>(e.index - 1)] = s;
    }
    if (!std::is_sorted(a.rbegin(), a.rend()) || !std::is_sorted(b.rbegin(), b.rend())) continue;
    out.push_back({Partition(std::move(a)), Partition(std::move(b)), g});
  }
  return out;
}

FacePoints probe_face(const FaceDescriptor& face, int n_max, int depth, KroneckerOracle& oracle) {
  if (n_max < 1 || depth < 1) throw DomainError("probe_face needs n_max >= 1 and depth >= 1");
  FacePoints points;
  for (int n = 1; n <= n_max; ++n) {
    auto t = enumerate_face_triples(face, n);
    points.triples.insert(points.triples.end(), t.begin(), t.end());
  }
  std::vector<KroneckerQuery> queries;
  for (const auto& t : points.triples) {
    for (int d = 1; d <= depth; ++d) queries.push_back(t.query().scaled(d));
  }
  const auto values = oracle.batch(queries);
  for (std::size_t i = 0; i < points.triples.size(); ++i) {
    StabilityProbe p;
    p.values.assign(values.begin() + static_cast<std::ptrdiff_t>(i * static_cast<std::size_t>(depth)),
                    values.begin() + static_cast<std::ptrdiff_t>((i + 1) * static_cast<std::size_t>(depth)));
    p.verdict = classify_probe(p.values);
    points.probes.push_back(std::move(p));
  }
  return points;
}

SpanResult span_of(const FacePoints& points, int n1, int n2) {
  SpanResult r;
  RationalMatrix rows;
  for (std::size_t i = 0; i < points.triples.size(); ++i) {
    if (points.probes[i].verdict == StabilityVerdict::Undetermined) {
      ++r.undetermined;
      continue;
    }
    ++r.verified;
    rows.push_back(points.triples[i].coordinates());
  }
  r.dimension = rank(rows);
  r.equations = null_space(rows, n1 + n2 + n1 * n2);
  return r;
}

SpanResult face_span_from_points(const FaceDescriptor& face, int n_max, int depth, KroneckerOracle& oracle) {
  return span_of(probe_face(face, n_max, depth, oracle), face.n1, face.n2);
}

std::optional<LatticeTriple> wellcovering_certificate(const FaceDescriptor& face, int n_max, KroneckerOracle& oracle) {
  const int m = face.n1 * face.n2;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& t : enumerate_face_triples(face, n)) {
      const bool regular = (t.alpha.is_regular(face.n1) && t.beta.is_regular(face.n2)) || t.gamma.is_regular(m);
      if (regular && oracle(t.query()) != 0) return t;
    }
  }
  return std::nullopt;
}

StabilityReport stability_of(const FacePoints& points) {
  constexpr std::size_t kExamples = 8;
  StabilityReport r;
  r.enumerated = static_cast<int>(points.triples.size());
  for (std::size_t i = 0; i < points.triples.size(); ++i) {
    switch (points.probes[i].verdict) {
      case StabilityVerdict::Undetermined: ++r.undetermined; continue;
      case StabilityVerdict::StableEvidence: ++r.stable; break;
      case StabilityVerdict::AlmostStableEvidence:
        ++r.almost_stable;
        if (r.non_stable.size() < kExamples) r.non_stable.push_back(points.triples[i]);
        break;
      case StabilityVerdict::Refuted:
        ++r.refuted;
        if (r.refuting.size() < kExamples) r.refuting.push_back(points.triples[i]);
        break;
    }
    ++r.verified;
  }
  return r;
}

StabilityReport verify_face_stability(const FaceDescriptor& face, int n_max, int depth, KroneckerOracle& oracle) {
  return stability_of(probe_face(face, n_max, depth, oracle));
}

std::vector<FaceDescriptor> dedup_faces(std::vector<FaceDescriptor> faces) {
  std::vector<FaceDescriptor> out;
  std::map<Permutation, std::size_t> by_u;
  std::map<RationalMatrix, std::size_t> by_span;
  auto merge = [](FaceDescriptor& into, FaceDescriptor& from) {
    into.provenance.insert(into.provenance.end(), from.provenance.begin(), from.provenance.end());
    if (!into.certificate && from.certificate) into.certificate = from.certificate;
  };
  for (auto& f : faces) {
    if (f.well_covering()) {
      auto it = by_u.find(f.u_hat);
      if (it != by_u.end() && out[it->second].well_covering()) {
        merge(out[it->second], f);
        continue;
      }
      by_u[f.u_hat] = out.size();
      out.push_back(std::move(f));
    } else {
      if (f.dimension_estimate < 0) throw DomainError("dedup_faces: dominant face without a point span");
      auto it = by_span.find(f.span_equations);
      if (it != by_span.end()) {
        merge(out[it->second], f);
        continue;
      }
      by_span[f.span_equations] = out.size();
      out.push_back(std::move(f));
    }
  }
  // Distinct u_hat with equal spans: flag for review.
  std::map<RationalMatrix, std::vector<std::size_t>> wc_spans;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].well_covering() && out[i].dimension_estimate >= 0) wc_spans[out[i].span_equations].push_back(i);
  }
  for (const auto& [span, idx] : wc_spans) {
    if (idx.size() < 2) continue;
    for (auto i : idx) out[i].collision = true;
  }
  return out;
}

}  // namespace kronface
