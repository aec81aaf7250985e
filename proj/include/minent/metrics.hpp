#pragma once

#include "minent/minentropy.hpp"

namespace minent {

/// Value of an optimized coupling pseudometric together with the coupling
/// achieving it; exact=false when the inner minimization stopped on its
/// budget.
struct MetricResult {
  RealInterval value;
  Coupling witness;
  bool exact = false;
};

/// Variation of information of a coupling:
/// H(X,Y) - I(X;Y) = H(X|Y) + H(Y|X). Both routes are evaluated and the
/// enclosures intersected.
RealInterval vi(const Coupling& s, int width_exp = kDefaultWidthExp);

/// Normalized variant 1 - I(X;Y)/H(X,Y), in [0, 1]; defined as 0 for a
/// single-atom coupling (H = 0).
RealInterval vi_normalized(const Coupling& s, int width_exp = kDefaultWidthExp);

/// The pseudometric VI(P,Q) = inf over C(P,Q) of the variation of
/// information, computed as 2*Hmin - H(P) - H(Q) through the exact
/// joint-entropy minimizer.
MetricResult vi_distance(const Distribution& p, const Distribution& q,
                         const SolveOptions& opts = {});

/// Normalized pseudometric: over C(P,Q) the objective 1 - I/H is strictly
/// increasing in H(X,Y), so the same minimizing coupling is optimal and the
/// value is 2 - (H(P)+H(Q))/Hmin; 0 when both marginals are point masses.
MetricResult vi_distance_normalized(const Distribution& p,
                                    const Distribution& q,
                                    const SolveOptions& opts = {});

/// Decides exactly whether VI(P,Q) = H(P) - H(Q): this holds iff C(P,Q)
/// contains a row-deterministic coupling, a purely combinatorial condition
/// (no real-number comparison is ever made).
bool decide_vi_equals_entropy_gap(const Distribution& p, const Distribution& q);

/// Total variation distance 1 - sum_i min(p_i, q_i), exact; shorter inputs
/// are padded with zeros to a common alphabet.
Rational total_variation(const Distribution& p, const Distribution& q);

}  // namespace minent
