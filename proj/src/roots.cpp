#include "kronface/roots.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <tuple>

#include "kronface/errors.hpp"

namespace kronface {

WeightVector WeightVector::basis(Lattice lattice, int index, int coeff) {
  WeightVector w;
  w.add_term(lattice, index, coeff);
  return w;
}

WeightVector WeightVector::root(Lattice lattice, int a, int b) {
  WeightVector w;
  w.add_term(lattice, a, 1);
  w.add_term(lattice, b, -1);
  return w;
}

int WeightVector::coefficient(Lattice lattice, int index) const {
  for (const auto& t : terms_) {
    if (t.lattice == lattice && t.index == index) return t.coeff;
  }
  return 0;
}

void WeightVector::add_term(Lattice lattice, int index, int coeff) {
  if (coeff == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{lattice, index, 0},
                             [](const Term& x, const Term& y) {
                               return std::tie(x.lattice, x.index) < std::tie(y.lattice, y.index);
                             });
  if (it != terms_.end() && it->lattice == lattice && it->index == index) {
    it->coeff += coeff;
    if (it->coeff == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{lattice, index, coeff});
  }
}

WeightVector& WeightVector::operator+=(const WeightVector& other) {
  for (const auto& t : other.terms_) add_term(t.lattice, t.index, t.coeff);
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& other) {
  for (const auto& t : other.terms_) add_term(t.lattice, t.index, -t.coeff);
  return *this;
}

WeightVector operator-(const WeightVector& a) {
  WeightVector out;
  for (const auto& t : a.terms_) out.add_term(t.lattice, t.index, -t.coeff);
  return out;
}

std::string WeightVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const char* name = t.lattice == Lattice::Eps ? "eps_" : t.lattice == Lattice::Eta ? "eta_" : "epshat_";
    if (t.coeff < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    if (std::abs(t.coeff) != 1) os << std::abs(t.coeff) << '*';
    os << name << t.index;
    first = false;
  }
  return os.str();
}

std::vector<WeylPair> weyl_pairs_of_length(int n1, int n2, int len) {
  std::vector<WeylPair> out;
  for (int l1 = 0; l1 <= len; ++l1) {
    const int l2 = len - l1;
    if (l1 > n1 * (n1 - 1) / 2 || l2 > n2 * (n2 - 1) / 2) continue;
    for (const auto& p : permutations_of_length(n1, l1)) {
      for (const auto& q : permutations_of_length(n2, l2)) out.push_back({p, q});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void InversionSet::normalize() {
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
}

std::string InversionSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i) out += ", ";
    out += roots[i].to_string();
  }
  return out + "}";
}

namespace {

void append_inversions(const Permutation& u, Lattice lattice, std::vector<WeightVector>& out) {
  for (int a = 1; a <= u.size(); ++a) {
    for (int b = a + 1; b <= u.size(); ++b) {
      if (u(a) > u(b)) out.push_back(WeightVector::root(lattice, u(a), u(b)));
    }
  }
}

// Roots are e_a - e_b; negative iff a > b.
bool is_negative_root(const WeightVector& w) {
  const auto& t = w.terms();
  if (t.size() != 2 || t[0].lattice != t[1].lattice) return false;
  const auto& plus = t[0].coeff == 1 ? t[0] : t[1];
  const auto& minus = t[0].coeff == 1 ? t[1] : t[0];
  return plus.coeff == 1 && minus.coeff == -1 && plus.index > minus.index;
}

WeightVector sum_of(const std::vector<WeightVector>& roots) {
  WeightVector s;
  for (const auto& r : roots) s += r;
  return s;
}

}  // namespace

InversionSet inversion_set(const Permutation& u) {
  InversionSet s;
  append_inversions(u, Lattice::EpsHat, s.roots);
  s.normalize();
  return s;
}

InversionSet inversion_set(const WeylPair& v) {
  InversionSet s;
  append_inversions(v.first, Lattice::Eps, s.roots);
  append_inversions(v.second, Lattice::Eta, s.roots);
  s.normalize();
  return s;
}

WeightVector act(const Permutation& u, const WeightVector& w) {
  WeightVector out;
  for (const auto& t : w.terms()) {
    const int index = t.lattice == Lattice::EpsHat ? u(t.index) : t.index;
    out += WeightVector::basis(t.lattice, index, t.coeff);
  }
  return out;
}

WeightVector act(const WeylPair& v, const WeightVector& w) {
  WeightVector out;
  for (const auto& t : w.terms()) {
    int index = t.index;
    if (t.lattice == Lattice::Eps) index = v.first(t.index);
    if (t.lattice == Lattice::Eta) index = v.second(t.index);
    out += WeightVector::basis(t.lattice, index, t.coeff);
  }
  return out;
}

WeightVector restrict_rho(const WeightVector& w, int n1, int n2) {
  WeightVector out;
  for (const auto& t : w.terms()) {
    if (t.lattice != Lattice::EpsHat) {
      out += WeightVector::basis(t.lattice, t.index, t.coeff);
      continue;
    }
    const GridIndex cell = unlex_index(t.index, n1, n2);
    out += WeightVector::basis(Lattice::Eps, cell.row, t.coeff);
    out += WeightVector::basis(Lattice::Eta, cell.col, t.coeff);
  }
  return out;
}

std::vector<WeightVector> negative_roots(int n1, int n2) {
  std::vector<WeightVector> out;
  for (int a = 1; a <= n1; ++a) {
    for (int b = 1; b < a; ++b) out.push_back(WeightVector::root(Lattice::Eps, a, b));
  }
  for (int a = 1; a <= n2; ++a) {
    for (int b = 1; b < a; ++b) out.push_back(WeightVector::root(Lattice::Eta, a, b));
  }
  return out;
}

std::vector<WeightVector> negative_roots(int m) {
  std::vector<WeightVector> out;
  for (int a = 1; a <= m; ++a) {
    for (int b = 1; b < a; ++b) out.push_back(WeightVector::root(Lattice::EpsHat, a, b));
  }
  return out;
}

bool dominance_check(const WeylPair& v, const Permutation& v_hat, const Permutation& w_hat) {
  const int n1 = v.first.size();
  const int n2 = v.second.size();
  const int m = w_hat.size();
  if (n1 * n2 != m || v_hat.size() != m) throw DomainError("dominance_check: size mismatch");
  const Permutation u = w_hat.inverse() * v_hat.inverse() * Permutation::longest(m);
  const InversionSet target = inversion_set(v.inverse());
  std::vector<WeightVector> image;
  for (const auto& r : inversion_set(u).roots) image.push_back(restrict_rho(act(w_hat, r), n1, n2));
  if (image.size() != target.size()) return false;
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
  return image == target.roots;
}

bool wellcovering_root_identity(const WeylPair& v, const Permutation& v_hat, const Permutation& w_hat) {
  const int n1 = v.first.size();
  const int n2 = v.second.size();
  const int m = w_hat.size();
  if (n1 * n2 != m || v_hat.size() != m) throw DomainError("wellcovering_root_identity: size mismatch");

  const auto g_neg = negative_roots(n1, n2);
  std::vector<WeightVector> g_part;  // Phi^- cap v Phi^-
  for (const auto& a : g_neg) {
    WeightVector va = act(v, a);
    if (is_negative_root(va)) g_part.push_back(std::move(va));
  }
  const Permutation vw = v_hat * w_hat;
  std::vector<WeightVector> hat_part;  // Phihat^- cap vhat what Phihat^-
  for (const auto& a : negative_roots(m)) {
    WeightVector va = act(vw, a);
    if (is_negative_root(va)) hat_part.push_back(std::move(va));
  }
  const WeightVector lhs =
      act(v.inverse(), sum_of(g_part)) + restrict_rho(act(v_hat.inverse(), sum_of(hat_part)), n1, n2);
  return lhs == sum_of(g_neg);
}

}  // namespace kronface
