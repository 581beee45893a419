#include "binform/rational.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "binform/error.hpp"

namespace binform {

Rational from_double(double v) {
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::InvalidArgument, "non-finite value has no rational form");
  }
  return Rational(v);
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&]() {
    return Error(ErrorKind::InvalidArgument, "malformed rational literal '" + s + "'");
  };
  if (s.empty()) throw bad();
  std::size_t pos = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    pos = 1;
  }
  std::string body = s.substr(pos);
  auto all_digits = [](const std::string& t) {
    return !t.empty() && t.find_first_not_of("0123456789") == std::string::npos;
  };
  Rational q;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    Integer d(den, 10);
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + s + "'");
    q = Rational(Integer(num, 10), d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw bad();
    }
    std::string digits = whole + frac;
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    q = Rational(Integer(digits, 10), den);
  } else {
    if (!all_digits(body)) throw bad();
    q = Rational(Integer(body, 10), 1);
  }
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

Rational pow(const Rational& base, unsigned exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational round_dyadic(const Rational& q, unsigned bits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
  Rational scaled = q * scale + Rational(1, 2);
  Integer rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational r(rounded, scale);
  r.canonicalize();
  return r;
}

Rational sqrt_upper(const Rational& q) {
  if (sgn(q) <= 0) return Rational(0);
  // sqrt(n/d) = sqrt(n d) / d; scale by 4^k to keep ~64 significant bits.
  Integer nd = q.get_num() * q.get_den();
  long bits = static_cast<long>(mpz_sizeinbase(nd.get_mpz_t(), 2));
  long k = std::max(0L, 64 - bits / 2);
  Integer scaled = nd << static_cast<mp_bitcnt_t>(2 * k);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  root += 1;
  Integer den = q.get_den() << static_cast<mp_bitcnt_t>(k);
  Rational r(root, den);
  r.canonicalize();
  return r;
}

}  // namespace binform
