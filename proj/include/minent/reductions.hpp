#pragma once

#include <optional>
#include <vector>

#include "minent/channel.hpp"
#include "minent/minentropy.hpp"
#include "minent/polytope.hpp"

namespace minent {

/// Positive integer weights d_1..d_n and a positive target s.
struct SubsetSumInstance {
  std::vector<Integer> weights;
  Integer target;
};

/// 3m nonnegative integer weights, each strictly between bound/4 and
/// bound/2, summing to m*bound.
struct ThreePartitionInstance {
  std::vector<Integer> weights;
  Integer bound;
};

/// What a certificate claims about its matrix. Verification is exact and
/// polynomial-time: marginal checks and nonzero-counting only, no entropy.
enum class CertificateClaim {
  kMember,                      ///< lies in the polytope / family
  kRowDeterministic,            ///< member with at most one nonzero per row
  kRowDeterministicUniformCols  ///< row-deterministic with column sums 1/m
};

/// A coupling matrix (kept raw so that invalid matrices are verifiable and
/// rejected rather than unrepresentable) plus its claimed property.
struct Certificate {
  RationalMatrix matrix;
  CertificateClaim claim = CertificateClaim::kMember;
};

/// Throws MalformedInstance when structural invariants fail.
void validate(const SubsetSumInstance& inst);
void validate(const ThreePartitionInstance& inst);

/// Subset-sum instance (d, s) -> C(P, Q) with P = (d_i / D), Q = (s/D,
/// 1 - s/D) where D is the total weight. Throws TargetExceedsTotal when
/// s > D.
TransportationPolytope reduce_subset_sum(const SubsetSumInstance& inst);

/// 3-partition instance -> C(P, m) with P = (d_i / (m*k)).
ChannelFamily reduce_three_partition(const ThreePartitionInstance& inst);

/// Full pipeline: reduce, decide entropy minimization, and translate the
/// deterministic witness back into the subset assigned to the first column.
/// The subset returned is the lexicographically smallest witness under
/// sorted-index order. Indices are zero-based.
std::optional<std::vector<Index>> solve_subset_sum_via_entropy(
    const SubsetSumInstance& inst);

/// Full pipeline: reduce, decide the balanced-partition problem, and
/// translate the witness back into m disjoint equal-sum triples covering
/// all indices (zero-based, groups ordered by smallest element).
std::optional<std::vector<std::vector<Index>>> solve_three_partition_via_channel(
    const ThreePartitionInstance& inst);

/// Exact polynomial-time certificate check against a transportation
/// polytope; false on any violation, never throws on bad matrices.
bool verify_certificate(const Certificate& cert,
                        const TransportationPolytope& p);

/// Certificate check against a channel family: row marginal must match, the
/// column count must be m, and the claim's extra structure must hold.
bool verify_certificate(const Certificate& cert, const ChannelFamily& f);

}  // namespace minent
