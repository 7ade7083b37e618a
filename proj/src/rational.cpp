#include "evoalg/rational.hpp"

#include <cctype>

namespace evoalg {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw parse_error("empty rational literal");
  std::string num = s;
  std::string den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  bool neg = false;
  if (!num.empty() && (num[0] == '+' || num[0] == '-')) {
    neg = num[0] == '-';
    num = num.substr(1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw parse_error("malformed rational literal: '" + text + "'");
  Integer p(num), q(den);
  if (q == 0) throw parse_error("zero denominator in '" + text + "'");
  if (neg) p = -p;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer pow2(unsigned long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

Rational pow_rational(const Rational& q, unsigned long e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), e);
  // q is canonical, so num/den stays coprime with positive denominator.
  Rational r(num, den);
  return r;
}

Rational pow_rational(const Rational& q, const Integer& e) {
  if (e < 0) throw std::domain_error("negative exponent");
  if (e.fits_ulong_p()) return pow_rational(q, e.get_ui());
  if (q == 1 || q == 0) return q;
  if (q == -1) return mpz_even_p(e.get_mpz_t()) ? Rational(1) : Rational(-1);
  throw std::overflow_error("exponent too large for non-unit base");
}

std::optional<Rational> nth_root(const Rational& r, unsigned long m) {
  if (m == 0) throw std::domain_error("zeroth root");
  if (m == 1) return r;
  if (r == 0) return Rational(0);
  if (r < 0 && m % 2 == 0) return std::nullopt;
  Integer num_root, den_root;
  int num_exact =
      mpz_root(num_root.get_mpz_t(), r.get_num().get_mpz_t(), m);
  int den_exact =
      mpz_root(den_root.get_mpz_t(), r.get_den().get_mpz_t(), m);
  if (!num_exact || !den_exact) return std::nullopt;
  Rational root(num_root, den_root);
  root.canonicalize();
  return root;
}

bool is_square(const Rational& r) {
  if (r <= 0) return false;
  return mpz_perfect_square_p(r.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(r.get_den().get_mpz_t());
}

}  // namespace evoalg
