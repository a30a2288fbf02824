#include "ffmom/poly.hpp"

#include <algorithm>
#include <charconv>

namespace ffmom {

static void trim(std::vector<int32_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly Poly::from_coeffs(const Fq& F, const std::vector<int64_t>& coeffs) {
  std::vector<int32_t> c;
  c.reserve(coeffs.size());
  for (int64_t v : coeffs) c.push_back(F.reduce(v));
  trim(c);
  return Poly::from_canonical(std::move(c));
}

bool Poly::operator<(const Poly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

Poly add(const Fq& F, const Poly& a, const Poly& b) {
  std::vector<int32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  trim(c);
  return Poly::from_canonical(std::move(c));
}

Poly sub(const Fq& F, const Poly& a, const Poly& b) {
  std::vector<int32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = F.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  trim(c);
  return Poly::from_canonical(std::move(c));
}

Poly neg(const Fq& F, const Poly& a) {
  std::vector<int32_t> c(a.coeffs());
  for (auto& v : c) v = F.neg(v);
  return Poly::from_canonical(std::move(c));
}

Poly mul(const Fq& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero();
  std::vector<int64_t> acc(a.coeffs().size() + b.coeffs().size() - 1, 0);
  int64_t q = F.q();
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    int64_t ai = a.coeffs()[i];
    if (ai == 0) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      acc[i + j] = (acc[i + j] + ai * b.coeffs()[j]) % q;
  }
  std::vector<int32_t> c(acc.begin(), acc.end());
  trim(c);
  return Poly::from_canonical(std::move(c));
}

Poly mul_scalar(const Fq& F, const Poly& a, int32_t c) {
  if (c == 0) return Poly::zero();
  std::vector<int32_t> out(a.coeffs());
  for (auto& v : out) v = F.mul(v, c);
  return Poly::from_canonical(std::move(out));
}

DivModResult divmod(const Fq& F, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  if (a.deg() < b.deg()) return {Poly::zero(), a};
  std::vector<int32_t> r(a.coeffs());
  int db = b.deg();
  int32_t linv = F.inv(b.lead());
  std::vector<int32_t> quot(static_cast<size_t>(a.deg() - db + 1), 0);
  for (int i = a.deg(); i >= db; --i) {
    int32_t ri = r[static_cast<size_t>(i)];
    if (ri == 0) continue;
    int32_t qc = F.mul(ri, linv);
    quot[static_cast<size_t>(i - db)] = qc;
    for (int j = 0; j <= db; ++j)
      r[static_cast<size_t>(i - db + j)] =
          F.sub(r[static_cast<size_t>(i - db + j)], F.mul(qc, b.coeff(j)));
  }
  r.resize(static_cast<size_t>(db > 0 ? db : 0));
  trim(r);
  trim(quot);
  return {Poly::from_canonical(std::move(quot)), Poly::from_canonical(std::move(r))};
}

Poly mod(const Fq& F, const Poly& a, const Poly& b) { return divmod(F, a, b).rem; }

Poly gcd(const Fq& F, const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  Poly u = a, v = b;
  while (!v.is_zero()) {
    Poly r = mod(F, u, v);
    u = v;
    v = r;
  }
  return make_monic(F, u);
}

Poly derivative(const Fq& F, const Poly& a) {
  if (a.deg() <= 0) return Poly::zero();
  std::vector<int32_t> c(static_cast<size_t>(a.deg()), 0);
  for (int i = 1; i <= a.deg(); ++i)
    c[static_cast<size_t>(i - 1)] = F.mul(a.coeff(i), F.reduce(i));
  trim(c);
  return Poly::from_canonical(std::move(c));
}

Poly make_monic(const Fq& F, const Poly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return mul_scalar(F, a, F.inv(a.lead()));
}

bool is_squarefree(const Fq& F, const Poly& f) {
  if (f.is_zero()) throw std::domain_error("is_squarefree: zero polynomial");
  if (f.deg() == 0) return true;
  Poly d = derivative(F, f);
  if (d.is_zero()) return false;
  return gcd(F, f, d).is_one();
}

int32_t eval(const Fq& F, const Poly& a, int32_t x) {
  int32_t acc = 0;
  for (size_t i = a.coeffs().size(); i-- > 0;)
    acc = F.add(F.mul(acc, x), a.coeffs()[i]);
  return acc;
}

Poly pow_mod(const Fq& F, const Poly& base, uint64_t e, const Poly& modulus) {
  Poly acc = mod(F, Poly::one(), modulus);
  Poly b = mod(F, base, modulus);
  while (e) {
    if (e & 1) acc = mod(F, mul(F, acc, b), modulus);
    b = mod(F, mul(F, b, b), modulus);
    e >>= 1;
  }
  return acc;
}

std::string to_string(const Poly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(a.coeffs()[i]);
  }
  return s;
}

Poly from_string(const Fq& F, const std::string& s) {
  if (s.empty()) throw std::invalid_argument("polynomial string is empty");
  std::vector<int64_t> coeffs;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    size_t end = (comma == std::string::npos) ? s.size() : comma;
    if (end == pos) throw std::invalid_argument("polynomial string has an empty field");
    int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data() + pos, s.data() + end, v);
    if (ec != std::errc() || p != s.data() + end)
      throw std::invalid_argument("polynomial string has a non-integer field");
    coeffs.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Poly::from_coeffs(F, coeffs);
}

}  // namespace ffmom
