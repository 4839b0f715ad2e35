#include "kronface/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "kronface/errors.hpp"

namespace kronface {

namespace {

std::size_t trimmed_size(const std::vector<int>& parts) noexcept {
  std::size_t n = parts.size();
  while (n > 0 && parts[n - 1] == 0) --n;
  return n;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be weakly decreasing");
    }
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::length() const noexcept { return static_cast<int>(trimmed_size(parts_)); }

Partition Partition::trimmed() const {
  Partition p;
  p.parts_.assign(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(trimmed_size(parts_)));
  p.weight_ = weight_;
  return p;
}

Partition Partition::padded(int n) const {
  if (length() > n) {
    throw DomainError("partition " + to_string() + " has more than " + std::to_string(n) + " parts");
  }
  Partition p = trimmed();
  p.parts_.resize(static_cast<std::size_t>(n), 0);
  return p;
}

Partition Partition::scaled(int d) const {
  if (d < 0) throw DomainError("cannot scale a partition by a negative factor");
  std::vector<int> out(parts_);
  for (int& x : out) x *= d;
  return Partition(std::move(out));
}

Partition Partition::plus(const Partition& other) const {
  std::vector<int> out(std::max(parts_.size(), other.parts_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)[i] + other[i];
  return Partition(std::move(out));
}

bool Partition::is_regular(int n) const {
  if (length() > n) return false;
  for (int i = 1; i < n; ++i) {
    if ((*this)[static_cast<std::size_t>(i)] >= (*this)[static_cast<std::size_t>(i - 1)]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  const std::size_t n = trimmed_size(parts_);
  for (std::size_t i = 0; i < n; ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

bool operator==(const Partition& a, const Partition& b) noexcept {
  const std::size_t n = trimmed_size(a.parts_);
  if (n != trimmed_size(b.parts_)) return false;
  return std::equal(a.parts_.begin(), a.parts_.begin() + static_cast<std::ptrdiff_t>(n), b.parts_.begin());
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
  const std::size_t na = trimmed_size(a.parts_);
  const std::size_t nb = trimmed_size(b.parts_);
  return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.begin() + static_cast<std::ptrdiff_t>(na),
                                                b.parts_.begin(), b.parts_.begin() + static_cast<std::ptrdiff_t>(nb));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  const auto& parts = p.parts();
  const std::size_t n = trimmed_size(parts);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<std::size_t>(parts[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw DomainError("malformed partition '" + text + "'");
    }
    if (used != token.size()) throw DomainError("malformed partition '" + text + "'");
    parts.push_back(value);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ') {
      flush();
    } else if ((c >= '0' && c <= '9') || c == '-') {
      token.push_back(c);
    } else if (c != '(' && c != ')') {
      throw DomainError("malformed partition '" + text + "'");
    }
  }
  flush();
  return Partition(std::move(parts)).trimmed();
}

namespace {

void partitions_rec(int remaining, int max_part, int slots, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_len) {
  if (n < 0 || max_len < 0) throw DomainError("partitions_of needs n >= 0 and max_len >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, max_len, cur, out);
  return out;
}

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  std::vector<bool> seen(one_line_.size() + 1, false);
  for (int x : one_line_) {
    if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)]) {
      throw DomainError("one-line notation is not a bijection of {1..m}");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int m) {
  if (m < 1) throw DomainError("longest element needs m >= 1");
  std::vector<int> v(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) v[static_cast<std::size_t>(k)] = m - k;
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int m, int a, int b) { return cycle(m, {a, b}); }

Permutation Permutation::cycle(int m, std::initializer_list<int> entries) {
  return cycle(m, std::span<const int>(entries.begin(), entries.size()));
}

Permutation Permutation::cycle(int m, std::span<const int> entries) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const int from = entries[i];
    const int to = entries[(i + 1) % entries.size()];
    if (from < 1 || from > m) throw DomainError("cycle entry out of range");
    v[static_cast<std::size_t>(from - 1)] = to;
  }
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(one_line_.size());
  for (std::size_t k = 0; k < one_line_.size(); ++k) {
    v[static_cast<std::size_t>(one_line_[k] - 1)] = static_cast<int>(k) + 1;
  }
  return Permutation(std::move(v));
}

int Permutation::length() const noexcept {
  int inv = 0;
  for (std::size_t a = 0; a < one_line_.size(); ++a) {
    for (std::size_t b = a + 1; b < one_line_.size(); ++b) {
      if (one_line_[a] > one_line_[b]) ++inv;
    }
  }
  return inv;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < one_line_.size(); ++k) {
    if (one_line_[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DomainError("cannot compose permutations of different sizes");
  std::vector<int> v(static_cast<std::size_t>(p.size()));
  for (int k = 1; k <= p.size(); ++k) v[static_cast<std::size_t>(k - 1)] = p(q(k));
  return Permutation(std::move(v));
}

std::string to_cycle_string(const Permutation& p) {
  const int m = p.size();
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  std::string out;
  for (int start = 1; start <= m; ++start) {
    if (seen[static_cast<std::size_t>(start)] || p(start) == start) continue;
    out += '(';
    int k = start;
    do {
      if (k != start) out += ' ';
      out += std::to_string(k);
      seen[static_cast<std::size_t>(k)] = true;
      k = p(k);
    } while (k != start);
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Permutation parse_cycles(const std::string& text, int m) {
  if (m < 1) throw DomainError("parse_cycles needs m >= 1");
  std::vector<int> image(static_cast<std::size_t>(m));
  std::iota(image.begin(), image.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
  std::string compact = text;
  std::erase(compact, ' ');
  if (compact == "id" || compact.empty()) return Permutation(image);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw DomainError("malformed cycle string '" + text + "'");
    const auto close = text.find(')', pos);
    if (close == std::string::npos) throw DomainError("unclosed cycle in '" + text + "'");
    std::istringstream in(text.substr(pos + 1, close - pos - 1));
    std::vector<int> cycle;
    std::string token;
    while (in >> token) {
      int k = 0;
      try {
        std::size_t used_chars = 0;
        k = std::stoi(token, &used_chars);
        if (used_chars != token.size()) throw DomainError("");
      } catch (const std::exception&) {
        throw DomainError("bad cycle entry '" + token + "' in '" + text + "'");
      }
      if (k < 1 || k > m) throw DomainError("cycle entry " + token + " out of range 1.." + std::to_string(m));
      if (used[static_cast<std::size_t>(k)]) throw DomainError("repeated cycle entry " + token);
      used[static_cast<std::size_t>(k)] = true;
      cycle.push_back(k);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      image[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()];
    }
    pos = close + 1;
  }
  return Permutation(image);
}

std::vector<Permutation> permutations_of_length(int m, int len) {
  if (m < 1 || len < 0) throw DomainError("permutations_of_length needs m >= 1, len >= 0");
  std::set<Permutation> layer{Permutation::identity(m)};
  for (int l = 0; l < len; ++l) {
    std::set<Permutation> next;
    for (const auto& p : layer) {
      for (int i = 1; i < m; ++i) {
        Permutation q = p * Permutation::transposition(m, i, i + 1);
        if (q.length() == l + 1) next.insert(std::move(q));
      }
    }
    layer = std::move(next);
  }
  return {layer.begin(), layer.end()};
}

int lex_index(GridIndex cell, int n1, int n2) {
  if (cell.row < 1 || cell.row > n1 || cell.col < 1 || cell.col > n2) {
    throw DomainError("cell (" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ") outside " +
                      std::to_string(n1) + "x" + std::to_string(n2) + " grid");
  }
  return (cell.row - 1) * n2 + cell.col;
}

GridIndex unlex_index(int index, int n1, int n2) {
  if (index < 1 || index > n1 * n2) throw DomainError("lex index out of range");
  return {(index - 1) / n2 + 1, (index - 1) % n2 + 1};
}

}  // namespace kronface
