#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "minent/interval.hpp"
#include "minent/measures.hpp"
#include "minent/polytope.hpp"

namespace minent {

/// Cap on the cleared common denominator accepted by the pseudo-polynomial
/// subset-sum dynamic program.
inline constexpr std::uint64_t kDefaultDenominatorBudget = 10'000'000;

struct SolveOptions {
  std::uint64_t limit = kDefaultVertexLimit;  ///< vertex / assignment budget
  int width_exp = kDefaultWidthExp;           ///< target enclosure width 2^-e
};

/// Outcome of a joint-entropy minimization (or, reused by the channel
/// module, a mutual-information maximization).
struct MinEntropyResult {
  Coupling best;
  Entropy value;
  bool optimal = false;  ///< true iff proved global
  std::uint64_t vertices_visited = 0;
  /// Minimizers whose entropy enclosures still overlap after precision
  /// escalation to width 2^-200, in lexicographic order; `best` is the
  /// first. Usually a single element.
  std::vector<Coupling> co_minimal;
};

/// Y as a deterministic function of X: each row with positive mass is sent
/// to exactly one column, and the induced column sums match the column
/// marginal exactly.
struct DeterministicWitness {
  std::map<Index, Index> assignment;  // defined on rows with positive mass
};

struct DecideMinResult {
  std::optional<DeterministicWitness> witness;
  /// Always true for the exact deciders: a missing witness comes with an
  /// exhausted search, never a budget stop.
  bool search_exhausted = true;
};

/// Global minimum of H(X,Y) over C(P,Q) by exhaustive vertex search. The
/// minimizer reported is the lexicographically smallest coupling among the
/// enclosure-indistinguishable minima. When the vertex budget runs out the
/// best vertex found so far is returned with optimal=false.
MinEntropyResult min_joint_entropy_exact(const TransportationPolytope& p,
                                         const SolveOptions& opts = {});

/// The product coupling P x Q: the unique maximizer of H(X,Y) over C(P,Q).
Coupling max_joint_entropy(const TransportationPolytope& p);

/// Decides whether some member of C(P,Q) attains H(X,Y) = H(P), i.e.
/// whether the positive masses of P can be grouped to sum exactly to the
/// entries of Q. Entirely combinatorial: no entropy is ever evaluated. The
/// witness returned is the lexicographically smallest assignment vector
/// (rows in natural order, lowest feasible column first).
DecideMinResult decide_entropy_min(const TransportationPolytope& p);

/// The two-column special case solved by a subset-sum dynamic program over
/// the cleared-denominator integers; column marginal is (q, 1-q). Throws
/// DenominatorOverflow when the common denominator exceeds the budget.
DecideMinResult decide_entropy_min_two_cols(
    const Distribution& p, const Rational& q,
    std::uint64_t denominator_budget = kDefaultDenominatorBudget);

/// Steepest-descent walk over pivot neighbors starting from `start`;
/// stops at a local minimum or after `max_steps` moves. optimal=true only
/// when the result meets the max{H(P),H(Q)} lower bound within the
/// certified enclosures.
MinEntropyResult local_search_min_entropy(const TransportationPolytope& p,
                                          const Vertex& start,
                                          std::uint64_t max_steps = 1024,
                                          int width_exp = kDefaultWidthExp);

/// Expands a witness into the coupling that places mass p_i at
/// (i, assignment(i)).
Coupling witness_coupling(const DeterministicWitness& w,
                          const TransportationPolytope& p);

namespace detail {

/// Exhaustive exact search: can the multiset `masses` be split into groups
/// summing exactly to the entries of `caps`? Returns, for each mass index,
/// the cap index it is assigned to. All integers positive.
std::optional<std::vector<std::size_t>> group_masses(
    const std::vector<Integer>& masses, const std::vector<Integer>& caps);

/// Lexicographically-smallest grouping of the positive entries of `masses`
/// into the positive entries of `caps` (exact rational data), or nullopt.
std::optional<std::map<Index, Index>> canonical_grouping(
    const RationalVector& masses, const RationalVector& caps);

/// Certified three-way comparison of -sum x log2 x between two cell sets,
/// escalating enclosure widths down to 2^-200; returns 0 when the values
/// are equal or remain indistinguishable at that width.
template <typename D1, typename D2>
int compare_entropy_exact(const Eigen::MatrixBase<D1>& a,
                          const Eigen::MatrixBase<D2>& b) {
  // Equal nonzero multisets give exactly equal entropy; skip the ladder.
  std::vector<Rational> na, nb;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != 0) na.push_back(a(i, j));
  for (Index j = 0; j < b.cols(); ++j)
    for (Index i = 0; i < b.rows(); ++i)
      if (b(i, j) != 0) nb.push_back(b(i, j));
  std::sort(na.begin(), na.end());
  std::sort(nb.begin(), nb.end());
  if (na == nb) return 0;
  constexpr int kLadder[] = {kDefaultWidthExp, 2 * kDefaultWidthExp,
                             4 * kDefaultWidthExp, kTieBreakWidthExp};
  int last = 0;
  for (int we : kLadder) {
    if (we <= last || we > kTieBreakWidthExp) continue;
    last = we;
    Entropy ea = entropy_of(a, we);
    Entropy eb = entropy_of(b, we);
    int c = RealInterval::compare(ea, eb);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace detail

}  // namespace minent
