#include "clifftwist/multivector.hpp"

#include <algorithm>
#include <stdexcept>

namespace clifftwist {

namespace {

void require_same_signature(const Multivector& u, const Multivector& v) {
  if (!(u.sig() == v.sig()))
    throw std::invalid_argument("multivector operands have different signatures");
}

}  // namespace

Multivector Multivector::generator(Signature sig, int i) {
  if (i < 1 || i > sig.n())
    throw std::invalid_argument("generator index out of range");
  return basis(sig, Mask{1} << (i - 1));
}

void Multivector::accumulate(Mask m, Rational c) {
  if (clifftwist::is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, std::move(c));
  } else {
    it->second += c;
    if (clifftwist::is_zero(it->second)) terms_.erase(it);
  }
}

Multivector operator+(const Multivector& u, const Multivector& v) {
  require_same_signature(u, v);
  Multivector out = u;
  for (const auto& [m, c] : v.terms()) out.accumulate(m, c);
  return out;
}

Multivector operator-(const Multivector& u) {
  Multivector out(u.sig());
  for (const auto& [m, c] : u.terms()) out.accumulate(m, -c);
  return out;
}

Multivector operator-(const Multivector& u, const Multivector& v) {
  require_same_signature(u, v);
  Multivector out = u;
  for (const auto& [m, c] : v.terms()) out.accumulate(m, -c);
  return out;
}

Multivector operator*(const Rational& c, const Multivector& u) {
  Multivector out(u.sig());
  if (is_zero(c)) return out;
  for (const auto& [m, k] : u.terms()) out.accumulate(m, c * k);
  return out;
}

Multivector operator*(const Multivector& u, const Rational& c) { return c * u; }

Multivector operator*(const Multivector& u, const Multivector& v) {
  require_same_signature(u, v);
  Multivector out(u.sig());
  for (const auto& [ma, ca] : u.terms()) {
    for (const auto& [mb, cb] : v.terms()) {
      const SignedMask r = monomial_product(ma, mb, u.sig());
      Rational c = ca * cb;
      if (r.sign < 0) c = -c;
      out.accumulate(r.mask, std::move(c));
    }
  }
  return out;
}

namespace {

template <typename SignOf>
Multivector map_signs(const Multivector& u, SignOf sign_of) {
  Multivector out(u.sig());
  for (const auto& [m, c] : u.terms())
    out.accumulate(m, sign_of(m) < 0 ? -c : c);
  return out;
}

}  // namespace

Multivector grade_involution(const Multivector& u) {
  return map_signs(u, [](Mask m) { return (grade(m) & 1) ? -1 : +1; });
}

Multivector reversion(const Multivector& u) {
  return map_signs(u, [](Mask m) {
    const int g = grade(m);
    return ((g * (g - 1) / 2) & 1) ? -1 : +1;
  });
}

Multivector conjugation(const Multivector& u) {
  return map_signs(u, [](Mask m) {
    const int g = grade(m);
    return ((g * (g + 1) / 2) & 1) ? -1 : +1;
  });
}

Multivector transposition(const Multivector& u) {
  const Mask neg = full_mask(u.sig().n()) & ~full_mask(u.sig().p);
  return map_signs(u, [neg](Mask m) {
    const int g = grade(m);
    int par = g * (g - 1) / 2;          // reversion
    par += std::popcount(m & neg);      // t_eps: e_i -> eps_i e_i
    return (par & 1) ? -1 : +1;
  });
}

Multivector star(const Multivector& u) {
  Multivector out(u.sig());
  for (const auto& [m, c] : u.terms()) {
    const SignedMask inv = monomial_inverse(m, u.sig());
    out.accumulate(inv.mask, inv.sign < 0 ? -c : c);
  }
  return out;
}

std::vector<std::pair<Mask, Rational>> sorted_terms(const Multivector& u) {
  std::vector<std::pair<Mask, Rational>> t(u.terms().begin(), u.terms().end());
  std::sort(t.begin(), t.end(),
            [](const auto& a, const auto& b) { return monomial_less(a.first, b.first); });
  return t;
}

std::string render(const Multivector& u) {
  if (u.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : sorted_terms(u)) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) s += "-";
      first = false;
    } else {
      s += negative ? " - " : " + ";
    }
    if (m == 0) {
      s += to_string(mag);
    } else if (mag == 1) {
      s += monomial_name(m, u.sig().n());
    } else {
      s += to_string(mag) + " " + monomial_name(m, u.sig().n());
    }
  }
  return s;
}

}  // namespace clifftwist
