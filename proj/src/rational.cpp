#include "padicdpp/rational.hpp"

#include "padicdpp/errors.hpp"

namespace padicdpp {

Integer int_pow(long base, unsigned long exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

Rational q_pow(long q, long e) {
  if (e >= 0) return Rational(int_pow(q, static_cast<unsigned long>(e)));
  Rational r(1, int_pow(q, static_cast<unsigned long>(-e)));
  r.canonicalize();
  return r;
}

long p_valuation(const Integer& a, long p) {
  Integer n = abs(a);
  if (n == 0) throw invalid_input("p_valuation of zero integer");
  long v = 0;
  Integer q, r;
  while (true) {
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(),
                   static_cast<unsigned long>(p));
    if (r != 0) break;
    n = q;
    ++v;
  }
  return v;
}

long p_valuation(const Rational& x, long p) {
  if (x == 0) throw invalid_input("p_valuation of zero");
  const Integer num = x.get_num();
  const Integer den = x.get_den();
  long v = p_valuation(num, p);
  if (den != 1) {
    long w = p_valuation(den, p);
    Integer rest = den / int_pow(p, static_cast<unsigned long>(w));
    if (rest != 1)
      throw invalid_input("denominator is not a power of the prime");
    v -= w;
  }
  return v;
}

Rational p_norm(const Rational& x, long p) {
  if (x == 0) return Rational(0);
  return q_pow(p, -p_valuation(x, p));
}

Rational p_fractional_part(const Rational& x, long p) {
  const Integer den = x.get_den();
  if (den == 1) return Rational(0);
  long r = p_valuation(den, p);
  if (int_pow(p, static_cast<unsigned long>(r)) != den)
    throw invalid_input("denominator is not a power of the prime");
  Integer a = x.get_num() % den;
  if (a < 0) a += den;
  Rational out(a, den);
  out.canonicalize();
  return out;
}

std::string rational_to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw invalid_input("malformed rational: " + s);
  }
}

}  // namespace padicdpp
