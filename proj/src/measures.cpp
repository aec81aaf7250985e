#include "minent/measures.hpp"

#include <cmath>

namespace minent {

namespace detail {

mpfr_prec_t start_precision(int width_exp, Index terms) {
  int guard = 24;
  Index t = terms > 0 ? terms : 1;
  while (t > 0) {
    ++guard;
    t >>= 1;
  }
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(width_exp + guard);
  return prec < 64 ? 64 : prec;
}

}  // namespace detail

Entropy entropy(const Distribution& p, int width_exp) {
  return entropy_of(p.probs(), width_exp);
}

Entropy joint_entropy(const Coupling& s, int width_exp) {
  return entropy_of(s.cells(), width_exp);
}

namespace {

Entropy conditional_entropy_impl(const RationalMatrix& s,
                                 const RationalVector& given, bool given_cols,
                                 int width_exp) {
  return detail::evaluate_to_width(width_exp, s.size(), [&](mpfr_prec_t prec) {
    RealInterval acc(prec);
    for (Index i = 0; i < s.rows(); ++i)
      for (Index j = 0; j < s.cols(); ++j) {
        const Rational& cell = s(i, j);
        if (cell == 0) continue;
        const Rational& mass = given_cols ? given(j) : given(i);
        // -s log2(s/mass) = s log2(mass/s); mass >= s > 0.
        acc.add_x_log2(cell, mass / cell);
      }
    return acc;
  });
}

}  // namespace

Entropy conditional_entropy_x_given_y(const Coupling& s, int width_exp) {
  RationalVector q = col_marginal(s).probs();
  return conditional_entropy_impl(s.cells(), q, /*given_cols=*/true, width_exp);
}

Entropy conditional_entropy_y_given_x(const Coupling& s, int width_exp) {
  RationalVector p = row_marginal(s).probs();
  return conditional_entropy_impl(s.cells(), p, /*given_cols=*/false,
                                  width_exp);
}

Entropy mutual_information(const Coupling& s, int width_exp) {
  RationalVector p = row_marginal(s).probs();
  RationalVector q = col_marginal(s).probs();
  Entropy r = detail::evaluate_to_width(
      width_exp, s.cells().size(), [&](mpfr_prec_t prec) {
        RealInterval acc(prec);
        for (Index i = 0; i < s.rows(); ++i)
          for (Index j = 0; j < s.cols(); ++j) {
            const Rational& cell = s.cells()(i, j);
            if (cell == 0) continue;
            acc.add_x_log2(cell, cell / (p(i) * q(j)));
          }
        return acc;
      });
  r.clamp_lower(Rational(0));
  return r;
}

Distribution row_marginal(const Coupling& s) {
  return Distribution(s.cells().rowwise().sum());
}

Distribution col_marginal(const Coupling& s) {
  return Distribution(s.cells().colwise().sum().transpose());
}

bool is_row_deterministic(const Coupling& s) {
  for (Index i = 0; i < s.rows(); ++i) {
    int nonzero = 0;
    for (Index j = 0; j < s.cols(); ++j)
      if (s(i, j) != 0 && ++nonzero > 1) return false;
  }
  return true;
}

bool is_col_deterministic(const Coupling& s) {
  for (Index j = 0; j < s.cols(); ++j) {
    int nonzero = 0;
    for (Index i = 0; i < s.rows(); ++i)
      if (s(i, j) != 0 && ++nonzero > 1) return false;
  }
  return true;
}

}  // namespace minent
