#include "kronface/golden.hpp"

#include <fstream>
#include <sstream>

#include "kronface/errors.hpp"

#ifndef KRONFACE_GOLDEN_DIR
#define KRONFACE_GOLDEN_DIR "tests/golden"
#endif

namespace kronface {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, s.find_last_not_of(" \t") - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

std::vector<std::string> data_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

std::vector<int> ints_of(const std::string& s) {
  std::vector<int> out;
  std::string cleaned = s;
  for (char& c : cleaned) {
    if (c == ',' || c == '/') c = ' ';
  }
  std::istringstream in(cleaned);
  int x = 0;
  while (in >> x) out.push_back(x);
  return out;
}

}  // namespace

const GoldenMatrix& UhatTable::matrix(int id) const {
  for (const auto& m : matrices) {
    if (m.id == id) return m;
  }
  throw DomainError("no matrix " + std::to_string(id) + " in table");
}

const GoldenPair& UhatTable::pair(const std::string& label) const {
  for (const auto& p : pairs) {
    if (p.label == label) return p;
  }
  throw DomainError("no pair " + label + " in table");
}

Permutation UhatTable::corrected_u_hat(const GoldenPair& p) const {
  for (const auto& c : corrections) {
    if (c.label == p.label) return parse_cycles(c.recomputed, n1 * n2);
  }
  return parse_cycles(p.u_hat, n1 * n2);
}

UhatTable load_uhat_table(const std::string& path, int n1, int n2) {
  UhatTable t;
  t.n1 = n1;
  t.n2 = n2;
  for (const auto& line : data_lines(path)) {
    const auto f = split(line, '|');
    if (line.starts_with("matrix") && f.size() == 4) {
      GoldenMatrix m;
      m.id = std::stoi(f[0].substr(6));
      m.ranks = ints_of(f[1]);
      m.witness.x = ints_of(f[2]);
      m.witness.y = ints_of(f[3]);
      if (static_cast<int>(m.ranks.size()) != n1 * n2) throw DomainError("bad matrix line: " + line);
      t.matrices.push_back(std::move(m));
    } else if (line.starts_with("correction") && f.size() == 4) {
      t.corrections.push_back({f[1], f[2], f[3]});
    } else if (line.starts_with("certified") && f.size() == 2) {
      std::istringstream in(f[1]);
      std::string label;
      while (in >> label) t.certified.push_back(label);
    } else if (f.size() == 4) {
      t.pairs.push_back({std::stoi(f[0]), f[1], std::stoi(f[2]), f[3]});
      parse_cycles(f[3], n1 * n2);
    } else {
      throw DomainError("malformed table line: " + line);
    }
  }
  return t;
}

std::vector<CalibrationExample> load_equation_examples(const std::string& path) {
  std::vector<CalibrationExample> out;
  for (const auto& line : data_lines(path)) {
    const auto f = split(line, '|');
    if (f.size() != 3) throw DomainError("malformed example line: " + line);
    CalibrationExample ex;
    const auto dims = ints_of(f[0]);
    if (dims.size() != 2) throw DomainError("malformed example line: " + line);
    ex.n1 = dims[0];
    ex.n2 = dims[1];
    ex.u_hat = parse_cycles(f[1], ex.n1 * ex.n2);
    for (const auto& e : split(f[2], ';')) ex.displayed.push_back(parse_face_equation(e));
    out.push_back(std::move(ex));
  }
  return out;
}

RationalMatrix SpanSystem::rref_rows() const {
  RationalMatrix rows = ambient_weight_rows(n1, n2);
  for (const auto& e : equations) rows.push_back(parse_linear_equation(e, n1, n2));
  return rref(std::move(rows));
}

std::vector<SpanSystem> load_span_systems(const std::string& path) {
  std::vector<SpanSystem> out;
  for (const auto& line : data_lines(path)) {
    const auto f = split(line, '|');
    if (f.size() != 2) throw DomainError("malformed span line: " + line);
    const auto dims = ints_of(f[0]);
    if (dims.size() != 2) throw DomainError("malformed span line: " + line);
    out.push_back({dims[0], dims[1], split(f[1], ';')});
  }
  return out;
}

std::string default_golden_dir() { return KRONFACE_GOLDEN_DIR; }

}  // namespace kronface
