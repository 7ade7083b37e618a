// Exact rational scalars over GMP, plus the Eigen glue that lets the
// dense types in linalg.hpp carry them.
#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace evoalg {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown when textual input (rational literals, files) is malformed.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p" or "p/q" into a reduced fraction. Rejects q = 0.
Rational parse_rational(const std::string& text);

/// Renders as "p" or "p/q" with positive denominator.
std::string to_string(const Rational& q);

/// 2^k as an exact integer.
Integer pow2(unsigned long k);

/// q^e for e >= 0.
Rational pow_rational(const Rational& q, unsigned long e);

/// q^e where e is an arbitrary-precision nonnegative exponent. Only
/// |q| = 1 or 0 is accepted once e no longer fits a machine word.
Rational pow_rational(const Rational& q, const Integer& e);

/// Exact m-th root when one exists in Q: the principal root (positive
/// for even m, sign-preserving for odd m). Empty if no rational root.
std::optional<Rational> nth_root(const Rational& r, unsigned long m);

/// True iff r = s^2 for some rational s.
bool is_square(const Rational& r);

}  // namespace evoalg

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
