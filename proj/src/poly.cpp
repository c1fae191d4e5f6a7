#include "hp0/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hp0 {

Poly Poly::monomial(const Monomial& m, const BigRat& c) {
  Poly p(static_cast<int>(m.size()));
  p.add_term(m, c);
  return p;
}

std::optional<Monomial> Poly::leading_monomial() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().first;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = hp0::degree(terms_.front().first);
  for (const auto& [m, c] : terms_)
    if (hp0::degree(m) != d) return false;
  return true;
}

int Poly::degree() const {
  return terms_.empty() ? -1 : hp0::degree(terms_.front().first);
}

void Poly::add_term(const Monomial& m, const BigRat& c) {
  if (static_cast<int>(m.size()) != n_)
    throw std::invalid_argument("Poly::add_term: arity mismatch");
  if (sgn(c) == 0) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
        return grlex_compare(t.first, key) == std::strong_ordering::greater;
      });
  if (it != terms_.end() && it->first == m) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {m, c});
  }
}

Poly Poly::operator+(const Poly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("Poly: arity mismatch");
  Poly r(n_);
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() ||
        (a != terms_.end() && grlex_compare(a->first, b->first) == std::strong_ordering::greater)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() ||
               grlex_compare(a->first, b->first) == std::strong_ordering::less) {
      r.terms_.push_back(*b++);
    } else {
      BigRat c = a->second + b->second;
      if (sgn(c) != 0) r.terms_.push_back({a->first, c});
      ++a;
      ++b;
    }
  }
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(BigRat(-1)); }

Poly Poly::scaled(const BigRat& c) const {
  Poly r(n_);
  if (sgn(c) == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigRat a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    first = false;
    std::string vars;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "e" + std::to_string(i + 1);
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    if (vars.empty()) {
      os << a.get_str();
    } else if (a == 1) {
      os << vars;
    } else {
      os << a.get_str() << "*" << vars;
    }
  }
  return os.str();
}

Poly apply_derivation(const std::vector<int>& alpha, const Monomial& beta) {
  if (alpha.size() != beta.size())
    throw std::invalid_argument("apply_derivation: arity mismatch");
  Poly p(static_cast<int>(beta.size()));
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0 || beta[i] == 0) continue;
    Monomial m = beta;
    m[i] -= 1;
    p.add_term(m, BigRat(static_cast<long>(alpha[i]) * beta[i]));
  }
  return p;
}

}  // namespace hp0
