#pragma once

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "ffmom/fq.hpp"

namespace ffmom {

using rational = boost::multiprecision::cpp_rational;
using float50 = boost::multiprecision::cpp_bin_float_50;

/*
 * Exact elements a + b*sqrt(q) of Q(sqrt(q)), q a non-square positive
 * integer, so the representation is unique and equality is coefficient-wise.
 * This is the value field for character sums: even-degree Gauss sums land in
 * Q, odd-degree ones pick up a single factor of sqrt(q).
 */
struct QuadExt {
  rational a;
  rational b;

  QuadExt() : a(0), b(0) {}
  QuadExt(rational a_, rational b_) : a(std::move(a_)), b(std::move(b_)) {}
  static QuadExt integer(int64_t v) { return QuadExt(rational(v), rational(0)); }

  bool operator==(const QuadExt& o) const { return a == o.a && b == o.b; }
  bool operator!=(const QuadExt& o) const { return !(*this == o); }
  bool is_zero() const { return a == 0 && b == 0; }
};

QuadExt qe_add(const QuadExt& x, const QuadExt& y);
QuadExt qe_sub(const QuadExt& x, const QuadExt& y);
QuadExt qe_neg(const QuadExt& x);
QuadExt qe_mul(int64_t q, const QuadExt& x, const QuadExt& y);
QuadExt qe_mul_rat(const QuadExt& x, const rational& r);
QuadExt qe_pow(int64_t q, const QuadExt& x, unsigned k);

/* sign of a + b*sqrt(q) as a real number: -1, 0, or +1 */
int qe_sign(int64_t q, const QuadExt& x);

float50 qe_to_float(int64_t q, const QuadExt& x);
double qe_to_double(int64_t q, const QuadExt& x);

/* "a/b" in lowest terms, or plain "a" when the denominator is 1 */
std::string rat_to_string(const rational& r);
std::string qe_to_string(const QuadExt& x);

/* 15 significant digits */
std::string float_to_string15(const float50& v);

}  // namespace ffmom
