#pragma once

#include <optional>
#include <vector>

#include "minent/minentropy.hpp"

namespace minent {

/// C(P, m): couplings whose row marginal is fixed to P and whose column
/// alphabet has size m — the union of C(P, Q) over all Q of length m.
struct ChannelFamily {
  Distribution input_marginal;
  Index output_size;

  ChannelFamily(Distribution p, Index m)
      : input_marginal(std::move(p)), output_size(m) {
    if (m < 1) throw std::invalid_argument("output alphabet must be nonempty");
  }
};

/// Row assignment into m columns whose induced column sums are all exactly
/// 1/m.
struct BalancedPartitionWitness {
  std::vector<Index> assignment;  // one column index per row
};

struct DecideChannelResult {
  std::optional<BalancedPartitionWitness> witness;
  bool search_exhausted = true;
};

/// A minimizer of H(X,Y) over C(P, m): all mass kept in the first column,
/// so Y is a deterministic function of X and H(X,Y) = H(P). This also
/// minimizes H(Y|X).
Coupling min_joint_entropy_over_family(const ChannelFamily& f);

/// Decides whether the masses of P split into m groups each summing to
/// exactly 1/m, i.e. whether some C in C(P, m) attains I(X;Y) = log2 m.
/// Exact combinatorial search; the witness is canonical (lexicographically
/// smallest assignment with columns labeled in order of first use).
DecideChannelResult decide_optimal_channel(const ChannelFamily& f);

/// Maximizes I(X;Y) over C(P, m). The maximum is attained at a coupling
/// whose rows are each concentrated in one column (see the derivation in
/// the README), so the search runs over assignments of rows to columns,
/// symmetry-reduced and pruned; for such couplings I equals the entropy of
/// the induced column distribution. Returns best-so-far with optimal=false
/// when the assignment budget runs out.
MinEntropyResult max_mutual_information(const ChannelFamily& f,
                                        const SolveOptions& opts = {});

/// min{H(P), log2 m} as a certified enclosure.
Entropy capacity_upper_bound(const ChannelFamily& f,
                             int width_exp = kDefaultWidthExp);

/// Expands a balanced-partition witness into its coupling in C(P, m).
Coupling witness_coupling(const BalancedPartitionWitness& w,
                          const ChannelFamily& f);

}  // namespace minent
