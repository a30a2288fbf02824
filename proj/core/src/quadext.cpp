#include "ffmom/quadext.hpp"

#include <sstream>

namespace ffmom {

QuadExt qe_add(const QuadExt& x, const QuadExt& y) { return {x.a + y.a, x.b + y.b}; }
QuadExt qe_sub(const QuadExt& x, const QuadExt& y) { return {x.a - y.a, x.b - y.b}; }
QuadExt qe_neg(const QuadExt& x) { return {-x.a, -x.b}; }

QuadExt qe_mul(int64_t q, const QuadExt& x, const QuadExt& y) {
  return {x.a * y.a + q * (x.b * y.b), x.a * y.b + x.b * y.a};
}

QuadExt qe_mul_rat(const QuadExt& x, const rational& r) { return {x.a * r, x.b * r}; }

QuadExt qe_pow(int64_t q, const QuadExt& x, unsigned k) {
  QuadExt acc = QuadExt::integer(1);
  QuadExt base = x;
  while (k) {
    if (k & 1) acc = qe_mul(q, acc, base);
    base = qe_mul(q, base, base);
    k >>= 1;
  }
  return acc;
}

int qe_sign(int64_t q, const QuadExt& x) {
  int sa = x.a.sign(), sb = x.b.sign();
  if (sa == 0 && sb == 0) return 0;
  if (sa >= 0 && sb >= 0) return 1;
  if (sa <= 0 && sb <= 0) return -1;
  /* opposite signs: compare a^2 against q b^2, the larger magnitude wins */
  rational d = x.a * x.a - q * (x.b * x.b);
  int sd = d.sign();
  return sa > 0 ? sd : -sd;
}

float50 qe_to_float(int64_t q, const QuadExt& x) {
  float50 fa(x.a), fb(x.b);
  return fa + fb * sqrt(float50(q));
}

double qe_to_double(int64_t q, const QuadExt& x) {
  return qe_to_float(q, x).convert_to<double>();
}

std::string rat_to_string(const rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string qe_to_string(const QuadExt& x) {
  return "(" + rat_to_string(x.a) + ") + (" + rat_to_string(x.b) + ")*sqrt(q)";
}

std::string float_to_string15(const float50& v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

}  // namespace ffmom
