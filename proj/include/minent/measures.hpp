#pragma once

#include "minent/interval.hpp"
#include "minent/types.hpp"

namespace minent {

namespace detail {

/// Starting precision for an enclosure of `terms` summands at target width
/// 2^-width_exp. One escalation round is almost never needed.
mpfr_prec_t start_precision(int width_exp, Index terms);

/// Runs `eval(prec)` at doubling precision until the result is narrower than
/// 2^-width_exp.
template <typename F>
RealInterval evaluate_to_width(int width_exp, Index terms, F&& eval) {
  const double target = std::ldexp(1.0, -width_exp);
  mpfr_prec_t prec = start_precision(width_exp, terms);
  for (;;) {
    RealInterval r = eval(prec);
    if (r.width() <= target) return r;
    if (prec > (mpfr_prec_t(1) << 20))
      throw std::logic_error("interval evaluation failed to converge");
    prec *= 2;
  }
}

}  // namespace detail

/// Enclosure of -sum x log2 x over all coefficients of an expression;
/// zero coefficients contribute zero. Coefficients must lie in [0, 1].
template <typename Derived>
Entropy entropy_of(const Eigen::MatrixBase<Derived>& cells,
                   int width_exp = kDefaultWidthExp) {
  return detail::evaluate_to_width(
      width_exp, cells.size(), [&](mpfr_prec_t prec) {
        RealInterval acc(prec);
        for (Index j = 0; j < cells.cols(); ++j)
          for (Index i = 0; i < cells.rows(); ++i)
            acc.add_neg_x_log2_x(cells(i, j));
        return acc;
      });
}

/// H(X) of a distribution, in bits.
Entropy entropy(const Distribution& p, int width_exp = kDefaultWidthExp);

/// H(X, Y) of a coupling, in bits.
Entropy joint_entropy(const Coupling& s, int width_exp = kDefaultWidthExp);

/// H(X|Y) = -sum s_ij log2(s_ij / q_j).
Entropy conditional_entropy_x_given_y(const Coupling& s,
                                      int width_exp = kDefaultWidthExp);

/// H(Y|X) = -sum s_ij log2(s_ij / p_i).
Entropy conditional_entropy_y_given_x(const Coupling& s,
                                      int width_exp = kDefaultWidthExp);

/// I(X;Y) = sum s_ij log2(s_ij / (p_i q_j)); nonnegative.
Entropy mutual_information(const Coupling& s, int width_exp = kDefaultWidthExp);

/// Exact row sums of the coupling.
Distribution row_marginal(const Coupling& s);

/// Exact column sums of the coupling.
Distribution col_marginal(const Coupling& s);

/// True iff every row has at most one nonzero cell (Y is a deterministic
/// function of X). Exact, no real arithmetic.
bool is_row_deterministic(const Coupling& s);

/// True iff every column has at most one nonzero cell.
bool is_col_deterministic(const Coupling& s);

}  // namespace minent
