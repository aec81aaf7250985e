#include "minent/metrics.hpp"

namespace minent {

namespace {

int nonzero_cells(const RationalMatrix& s) {
  int count = 0;
  for (Index i = 0; i < s.rows(); ++i)
    for (Index j = 0; j < s.cols(); ++j)
      if (s(i, j) != 0) ++count;
  return count;
}

bool point_mass(const Distribution& d) {
  int count = 0;
  for (Index i = 0; i < d.size(); ++i)
    if (d[i] != 0) ++count;
  return count == 1;
}

// Joint entropy with the enclosure escalated until its lower bound is
// strictly positive; valid whenever the true value is positive.
Entropy positive_joint_entropy(const Coupling& s, int width_exp) {
  for (int we = width_exp;; we *= 2) {
    Entropy h = joint_entropy(s, we);
    if (mpfr_sgn(h.lower_raw()) > 0) return h;
    if (we > 1 << 16)
      throw std::logic_error("failed to separate joint entropy from zero");
  }
}

}  // namespace

RealInterval vi(const Coupling& s, int width_exp) {
  RealInterval a = joint_entropy(s, width_exp);
  a -= mutual_information(s, width_exp);
  RealInterval b = conditional_entropy_x_given_y(s, width_exp);
  b += conditional_entropy_y_given_x(s, width_exp);
  a.intersect(b);
  a.clamp_lower(Rational(0));
  return a;
}

RealInterval vi_normalized(const Coupling& s, int width_exp) {
  if (nonzero_cells(s.cells()) <= 1)
    return RealInterval::zero();  // H(X,Y) = 0: defined as 0
  Entropy h = positive_joint_entropy(s, width_exp);
  Entropy i = mutual_information(s, width_exp);
  RealInterval ratio = RealInterval::div(i, h);
  RealInterval r = RealInterval::of(Rational(1), ratio.precision()) - ratio;
  r.clamp_lower(Rational(0));
  r.clamp_upper(Rational(1));
  return r;
}

MetricResult vi_distance(const Distribution& p, const Distribution& q,
                         const SolveOptions& opts) {
  TransportationPolytope polytope(p, q);
  MinEntropyResult inner = min_joint_entropy_exact(polytope, opts);
  RealInterval value = inner.value;
  value += inner.value;
  value -= entropy(p, opts.width_exp);
  value -= entropy(q, opts.width_exp);
  value.clamp_lower(Rational(0));
  return MetricResult{std::move(value), inner.best, inner.optimal};
}

MetricResult vi_distance_normalized(const Distribution& p,
                                    const Distribution& q,
                                    const SolveOptions& opts) {
  TransportationPolytope polytope(p, q);
  MinEntropyResult inner = min_joint_entropy_exact(polytope, opts);
  if (point_mass(p) && point_mass(q))
    return MetricResult{RealInterval::zero(), inner.best, inner.optimal};

  Entropy hmin = positive_joint_entropy(inner.best, opts.width_exp);
  hmin.intersect(inner.value);
  RealInterval marginals = entropy(p, opts.width_exp);
  marginals += entropy(q, opts.width_exp);
  RealInterval value = RealInterval::of(Rational(2), hmin.precision()) -
                       RealInterval::div(marginals, hmin);
  value.clamp_lower(Rational(0));
  value.clamp_upper(Rational(1));
  return MetricResult{std::move(value), inner.best, inner.optimal};
}

bool decide_vi_equals_entropy_gap(const Distribution& p,
                                  const Distribution& q) {
  // VI(P,Q) = H(P) - H(Q) iff the minimum joint entropy equals H(P), i.e.
  // iff a row-deterministic coupling exists. (Column-deterministic equality
  // would force the marginals to be equal as multisets, which yields a
  // row-deterministic coupling as well.)
  return decide_entropy_min(TransportationPolytope(p, q)).witness.has_value();
}

Rational total_variation(const Distribution& p, const Distribution& q) {
  Rational overlap = 0;
  const Index common = std::min(p.size(), q.size());
  for (Index i = 0; i < common; ++i) overlap += std::min(p[i], q[i]);
  return 1 - overlap;
}

}  // namespace minent
