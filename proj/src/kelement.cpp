#include "clifftwist/kelement.hpp"

#include <stdexcept>

namespace clifftwist {

KClass k_class(const Signature& sig) {
  const int res = ((sig.p - sig.q) % 8 + 8) % 8;
  switch (res) {
    case 0:
    case 2:
      return KClass::R;
    case 3:
    case 7:
      return KClass::C;
    case 4:
    case 6:
      return KClass::H;
    case 1:
      return KClass::DR;
    default:
      return KClass::DH;  // res == 5
  }
}

int k_dim(KClass cls) {
  switch (cls) {
    case KClass::R:
    case KClass::DR:
      return 1;
    case KClass::C:
      return 2;
    default:
      return 4;
  }
}

std::string k_class_name(KClass cls) {
  switch (cls) {
    case KClass::R:
      return "real";
    case KClass::C:
      return "complex";
    case KClass::H:
      return "quaternionic";
    case KClass::DR:
      return "2R";
    default:
      return "2H";
  }
}

KElement k_zero(const KStructure& ks) {
  KElement x;
  x.cls = ks.cls;
  x.a.assign(ks.dim, Rational(0));
  if (k_is_double(ks.cls)) x.b.assign(ks.dim, Rational(0));
  return x;
}

KElement k_one(const KStructure& ks) {
  KElement x = k_zero(ks);
  x.a[0] = 1;
  if (!x.b.empty()) x.b[0] = 1;
  return x;
}

bool k_is_zero(const KElement& x) {
  for (const auto& c : x.a)
    if (!is_zero(c)) return false;
  for (const auto& c : x.b)
    if (!is_zero(c)) return false;
  return true;
}

namespace {

void check_compatible(const KElement& x, const KElement& y) {
  if (x.cls != y.cls || x.a.size() != y.a.size() || x.b.size() != y.b.size())
    throw std::invalid_argument("K elements from different structures");
}

std::vector<Rational> component_mul(const KStructure& ks,
                                    const std::vector<Rational>& x,
                                    const std::vector<Rational>& y,
                                    bool hat) {
  std::vector<Rational> out(ks.dim, Rational(0));
  for (int i = 0; i < ks.dim; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < ks.dim; ++j) {
      if (is_zero(y[j])) continue;
      const int idx = ks.prod_index[i][j];
      const int sgn = hat ? ks.prod_sign_hat[i][j] : ks.prod_sign[i][j];
      Rational c = x[i] * y[j];
      if (sgn < 0) c = -c;
      out[idx] += c;
    }
  }
  return out;
}

}  // namespace

KElement k_add(const KElement& x, const KElement& y) {
  check_compatible(x, y);
  KElement out = x;
  for (std::size_t i = 0; i < y.a.size(); ++i) out.a[i] += y.a[i];
  for (std::size_t i = 0; i < y.b.size(); ++i) out.b[i] += y.b[i];
  return out;
}

KElement k_sub(const KElement& x, const KElement& y) {
  check_compatible(x, y);
  KElement out = x;
  for (std::size_t i = 0; i < y.a.size(); ++i) out.a[i] -= y.a[i];
  for (std::size_t i = 0; i < y.b.size(); ++i) out.b[i] -= y.b[i];
  return out;
}

KElement k_neg(const KElement& x) {
  KElement out = x;
  for (auto& c : out.a) c = -c;
  for (auto& c : out.b) c = -c;
  return out;
}

KElement k_scale(const Rational& c, const KElement& x) {
  KElement out = x;
  for (auto& v : out.a) v *= c;
  for (auto& v : out.b) v *= c;
  return out;
}

KElement k_mul(const KStructure& ks, const KElement& x, const KElement& y) {
  check_compatible(x, y);
  KElement out;
  out.cls = x.cls;
  out.a = component_mul(ks, x.a, y.a, false);
  if (!x.b.empty()) out.b = component_mul(ks, x.b, y.b, true);
  return out;
}

KElement k_conjugate(const KElement& x) {
  KElement out = x;
  for (std::size_t i = 1; i < out.a.size(); ++i) out.a[i] = -out.a[i];
  for (std::size_t i = 1; i < out.b.size(); ++i) out.b[i] = -out.b[i];
  return out;
}

namespace {

std::vector<Rational> component_inverse(const std::vector<Rational>& x) {
  Rational norm(0);
  for (const auto& c : x) norm += c * c;
  if (is_zero(norm)) throw std::domain_error("K element component not invertible");
  std::vector<Rational> out = x;
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  for (auto& c : out) c /= norm;
  return out;
}

}  // namespace

KElement k_inverse(const KStructure& ks, const KElement& x) {
  (void)ks;
  KElement out = x;
  out.a = component_inverse(x.a);
  if (!x.b.empty()) out.b = component_inverse(x.b);
  return out;
}

std::string k_render(const KStructure& ks, const KElement& x) {
  auto one_component = [&](const std::vector<Rational>& v) {
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (is_zero(v[i])) continue;
      const bool neg = v[i] < 0;
      const Rational mag = neg ? Rational(-v[i]) : v[i];
      if (first) {
        if (neg) s += "-";
        first = false;
      } else {
        s += neg ? " - " : " + ";
      }
      const std::string& name = ks.basis_names[i];
      if (i == 0) {
        s += to_string(mag);
      } else if (mag == 1) {
        s += name;
      } else {
        s += to_string(mag) + " " + name;
      }
    }
    return s.empty() ? std::string("0") : s;
  };
  if (x.b.empty()) return one_component(x.a);
  return "(" + one_component(x.a) + ", " + one_component(x.b) + ")";
}

}  // namespace clifftwist
