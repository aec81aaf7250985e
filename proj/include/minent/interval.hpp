#pragma once

#include <mpfr.h>

#include <string>

#include "minent/rational.hpp"

namespace minent {

/// Target width 2^-40 for entropy enclosures unless a caller asks otherwise.
inline constexpr int kDefaultWidthExp = 40;

/// Floor for precision escalation when breaking entropy ties: once two
/// enclosures of width 2^-200 still overlap, the values are reported as
/// indistinguishable and a combinatorial tie-break takes over.
inline constexpr int kTieBreakWidthExp = 200;

/// Certified enclosure [lower, upper] of a real number. Every operation
/// rounds the lower bound toward -inf and the upper bound toward +inf, so
/// intervals produced from exact rational inputs always contain the exact
/// real result.
class RealInterval {
 public:
  explicit RealInterval(mpfr_prec_t prec = 96);
  RealInterval(const RealInterval& o);
  RealInterval(RealInterval&& o) noexcept;
  RealInterval& operator=(const RealInterval& o);
  RealInterval& operator=(RealInterval&& o) noexcept;
  ~RealInterval();

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

  /// [0, 0] at the given precision.
  static RealInterval zero(mpfr_prec_t prec = 96);
  /// Enclosure of the exact rational x.
  static RealInterval of(const Rational& x, mpfr_prec_t prec);
  /// Enclosure of log2(x), x > 0.
  static RealInterval log2_of(const Rational& x, mpfr_prec_t prec);

  RealInterval& operator+=(const RealInterval& o);
  RealInterval& operator-=(const RealInterval& o);
  friend RealInterval operator+(RealInterval a, const RealInterval& b) {
    a += b;
    return a;
  }
  friend RealInterval operator-(RealInterval a, const RealInterval& b) {
    a -= b;
    return a;
  }

  /// Adds an enclosure of -x*log2(x) for x in [0, 1]; zero contributes zero.
  void add_neg_x_log2_x(const Rational& x);
  /// Adds an enclosure of x*log2(r) for x >= 0, r > 0.
  void add_x_log2(const Rational& x, const Rational& r);

  /// num / den, requiring den.lower > 0.
  static RealInterval div(const RealInterval& num, const RealInterval& den);
  static RealInterval min(const RealInterval& a, const RealInterval& b);
  static RealInterval max(const RealInterval& a, const RealInterval& b);

  /// Narrows to the intersection with another enclosure of the same value.
  /// Empty intersections (impossible for sound inputs) throw
  /// std::logic_error.
  void intersect(const RealInterval& o);
  /// Raises the lower bound to the exact rational b when the true value is
  /// known to satisfy value >= b.
  void clamp_lower(const Rational& b);
  /// Caps the upper bound at b when the true value satisfies value <= b.
  void clamp_upper(const Rational& b);

  double lower() const;  ///< lower bound, rounded down to double
  double upper() const;  ///< upper bound, rounded up to double
  double value() const;  ///< midpoint, rounded to nearest
  double width() const;  ///< upper - lower, rounded up

  mpfr_srcptr lower_raw() const { return lo_; }
  mpfr_srcptr upper_raw() const { return up_; }

  /// -1 when a is certainly below b, +1 when certainly above, 0 when the
  /// enclosures overlap.
  static int compare(const RealInterval& a, const RealInterval& b);

  /// True iff the exact rational x lies inside the enclosure.
  bool contains(const Rational& x) const;

  /// Decimal form of a bound with `sig` significant digits, rounded in the
  /// bound's own direction (down for lower, up for upper).
  std::string lower_string(int sig = 12) const;
  std::string upper_string(int sig = 12) const;

 private:
  mpfr_t lo_;
  mpfr_t up_;
};

/// Entropy values are certified enclosures in bits.
using Entropy = RealInterval;

}  // namespace minent
