#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>
#include <string_view>

namespace minent {

/// Exact arbitrary-precision rational. Always kept canonical: reduced to
/// lowest terms with a positive denominator.
using Rational = mpq_class;

/// Exact arbitrary-precision integer.
using Integer = mpz_class;

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

/// Builds the canonical rational num/den. Throws std::domain_error on a zero
/// denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

/// Parses a rational from "a/b" or plain integer text, base 10. Rejects
/// floating-point syntax; the result is canonicalized. Throws
/// std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical text form: "a/b" reduced, or a bare integer when the
/// denominator is one ("0" for zero).
inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

/// True iff every coefficient is >= 0.
template <typename Derived>
bool all_nonnegative(const Eigen::MatrixBase<Derived>& x) {
  for (Index j = 0; j < x.cols(); ++j)
    for (Index i = 0; i < x.rows(); ++i)
      if (x(i, j) < 0) return false;
  return true;
}

/// Exact coefficient sum.
template <typename Derived>
Rational rational_sum(const Eigen::MatrixBase<Derived>& x) {
  Rational total = 0;
  for (Index j = 0; j < x.cols(); ++j)
    for (Index i = 0; i < x.rows(); ++i) total += x(i, j);
  return total;
}

/// Row-major lexicographic comparison; the canonical order on couplings.
int lex_compare(const RationalMatrix& a, const RationalMatrix& b);

bool rational_matrix_equal(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace minent

namespace Eigen {

template <>
struct NumTraits<minent::Rational> : GenericNumTraits<minent::Rational> {
  typedef minent::Rational Real;
  typedef minent::Rational NonInteger;
  typedef minent::Rational Nested;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
