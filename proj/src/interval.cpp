#include "minent/interval.hpp"

#include <stdexcept>

namespace minent {

RealInterval::RealInterval(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(up_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(up_, 1);
}

RealInterval::RealInterval(const RealInterval& o) {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(up_, mpfr_get_prec(o.up_));
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(up_, o.up_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(up_, mpfr_get_prec(o.up_));
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(up_, o.up_);
}

RealInterval& RealInterval::operator=(const RealInterval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
    mpfr_set_prec(up_, mpfr_get_prec(o.up_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(up_, o.up_, MPFR_RNDU);
  }
  return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(up_, o.up_);
  }
  return *this;
}

RealInterval::~RealInterval() {
  mpfr_clear(lo_);
  mpfr_clear(up_);
}

RealInterval RealInterval::zero(mpfr_prec_t prec) { return RealInterval(prec); }

RealInterval RealInterval::of(const Rational& x, mpfr_prec_t prec) {
  RealInterval r(prec);
  mpfr_set_q(r.lo_, x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.up_, x.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::log2_of(const Rational& x, mpfr_prec_t prec) {
  if (x <= 0) throw std::domain_error("log2 of nonpositive rational");
  RealInterval r(prec);
  // log2 is increasing, so rounding the argument in the bound's direction
  // keeps the enclosure valid.
  mpfr_set_q(r.lo_, x.get_mpq_t(), MPFR_RNDD);
  mpfr_log2(r.lo_, r.lo_, MPFR_RNDD);
  mpfr_set_q(r.up_, x.get_mpq_t(), MPFR_RNDU);
  mpfr_log2(r.up_, r.up_, MPFR_RNDU);
  return r;
}

RealInterval& RealInterval::operator+=(const RealInterval& o) {
  mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(up_, up_, o.up_, MPFR_RNDU);
  return *this;
}

RealInterval& RealInterval::operator-=(const RealInterval& o) {
  // lower := lower - o.upper, upper := upper - o.lower. o is read before any
  // write only when o != *this, so alias the self-subtraction case
  // explicitly.
  if (this == &o) {
    mpfr_t t;
    mpfr_init2(t, mpfr_get_prec(lo_));
    mpfr_sub(t, lo_, o.up_, MPFR_RNDD);
    mpfr_sub(up_, up_, o.lo_, MPFR_RNDU);
    mpfr_set(lo_, t, MPFR_RNDD);
    mpfr_clear(t);
    return *this;
  }
  mpfr_sub(lo_, lo_, o.up_, MPFR_RNDD);
  mpfr_sub(up_, up_, o.lo_, MPFR_RNDU);
  return *this;
}

void RealInterval::add_neg_x_log2_x(const Rational& x) {
  if (x < 0 || x > 1) throw std::domain_error("entropy term outside [0, 1]");
  if (x == 0 || x == 1) return;  // 0 log 0 = 0 by convention; 1 log 1 = 0
  mpfr_prec_t prec = precision();
  mpfr_t t;
  mpfr_init2(t, prec);
  // lower of -x log2 x: take an upper bound u >= log2 x, then -u <= -log2 x,
  // and multiply by the exact positive x rounding down.
  mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDU);
  mpfr_log2(t, t, MPFR_RNDU);
  mpfr_neg(t, t, MPFR_RNDN);  // exact
  mpfr_mul_q(t, t, x.get_mpq_t(), MPFR_RNDD);
  mpfr_add(lo_, lo_, t, MPFR_RNDD);
  // upper: lower bound l <= log2 x gives -l >= -log2 x.
  mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDD);
  mpfr_log2(t, t, MPFR_RNDD);
  mpfr_neg(t, t, MPFR_RNDN);
  mpfr_mul_q(t, t, x.get_mpq_t(), MPFR_RNDU);
  mpfr_add(up_, up_, t, MPFR_RNDU);
  mpfr_clear(t);
}

void RealInterval::add_x_log2(const Rational& x, const Rational& r) {
  if (x < 0) throw std::domain_error("nonnegative weight required");
  if (r <= 0) throw std::domain_error("log2 of nonpositive rational");
  if (x == 0 || r == 1) return;
  mpfr_prec_t prec = precision();
  mpfr_t t;
  mpfr_init2(t, prec);
  // x > 0, so multiplying the directed log2 bounds by x preserves order;
  // mpfr_mul_q rounds the exact product in the requested direction.
  mpfr_set_q(t, r.get_mpq_t(), MPFR_RNDD);
  mpfr_log2(t, t, MPFR_RNDD);
  mpfr_mul_q(t, t, x.get_mpq_t(), MPFR_RNDD);
  mpfr_add(lo_, lo_, t, MPFR_RNDD);
  mpfr_set_q(t, r.get_mpq_t(), MPFR_RNDU);
  mpfr_log2(t, t, MPFR_RNDU);
  mpfr_mul_q(t, t, x.get_mpq_t(), MPFR_RNDU);
  mpfr_add(up_, up_, t, MPFR_RNDU);
  mpfr_clear(t);
}

RealInterval RealInterval::div(const RealInterval& num, const RealInterval& den) {
  if (!(mpfr_sgn(den.lo_) > 0))
    throw std::domain_error("interval division requires a positive denominator");
  mpfr_prec_t prec = std::max(num.precision(), den.precision());
  RealInterval r(prec);
  if (mpfr_sgn(num.lo_) >= 0) {
    // both endpoints nonnegative: min at lo/up, max at up/lo
    mpfr_div(r.lo_, num.lo_, den.up_, MPFR_RNDD);
    mpfr_div(r.up_, num.up_, den.lo_, MPFR_RNDU);
  } else {
    // num.lo < 0: the lower bound is num.lo / den.lo (den >= den.lo > 0)
    mpfr_div(r.lo_, num.lo_, den.lo_, MPFR_RNDD);
    if (mpfr_sgn(num.up_) >= 0)
      mpfr_div(r.up_, num.up_, den.lo_, MPFR_RNDU);
    else
      mpfr_div(r.up_, num.up_, den.up_, MPFR_RNDU);
  }
  return r;
}

RealInterval RealInterval::min(const RealInterval& a, const RealInterval& b) {
  RealInterval r(std::max(a.precision(), b.precision()));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.up_, a.up_, b.up_, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::max(const RealInterval& a, const RealInterval& b) {
  RealInterval r(std::max(a.precision(), b.precision()));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.up_, a.up_, b.up_, MPFR_RNDU);
  return r;
}

void RealInterval::intersect(const RealInterval& o) {
  mpfr_max(lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_min(up_, up_, o.up_, MPFR_RNDU);
  if (mpfr_cmp(lo_, up_) > 0)
    throw std::logic_error("empty interval intersection");
}

void RealInterval::clamp_lower(const Rational& b) {
  mpfr_t t;
  mpfr_init2(t, precision());
  mpfr_set_q(t, b.get_mpq_t(), MPFR_RNDD);
  mpfr_max(lo_, lo_, t, MPFR_RNDD);
  mpfr_clear(t);
}

void RealInterval::clamp_upper(const Rational& b) {
  mpfr_t t;
  mpfr_init2(t, precision());
  mpfr_set_q(t, b.get_mpq_t(), MPFR_RNDU);
  mpfr_min(up_, up_, t, MPFR_RNDU);
  mpfr_clear(t);
}

double RealInterval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RealInterval::upper() const { return mpfr_get_d(up_, MPFR_RNDU); }

double RealInterval::value() const {
  mpfr_t t;
  mpfr_init2(t, precision() + 1);
  mpfr_add(t, lo_, up_, MPFR_RNDN);
  mpfr_div_2ui(t, t, 1, MPFR_RNDN);
  double v = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return v;
}

double RealInterval::width() const {
  mpfr_t t;
  mpfr_init2(t, precision());
  mpfr_sub(t, up_, lo_, MPFR_RNDU);
  double w = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return w;
}

int RealInterval::compare(const RealInterval& a, const RealInterval& b) {
  if (mpfr_cmp(a.up_, b.lo_) < 0) return -1;
  if (mpfr_cmp(a.lo_, b.up_) > 0) return 1;
  return 0;
}

bool RealInterval::contains(const Rational& x) const {
  return mpfr_cmp_q(lo_, x.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(up_, x.get_mpq_t()) >= 0;
}

namespace {
std::string format_bound(mpfr_srcptr x, int sig, mpfr_rnd_t rnd) {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*R*e", sig - 1, rnd, x);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}
}  // namespace

std::string RealInterval::lower_string(int sig) const {
  return format_bound(lo_, sig, MPFR_RNDD);
}

std::string RealInterval::upper_string(int sig) const {
  return format_bound(up_, sig, MPFR_RNDU);
}

}  // namespace minent
