#include "minent/reductions.hpp"

#include <algorithm>

namespace minent {

void validate(const SubsetSumInstance& inst) {
  if (inst.weights.empty())
    throw MalformedInstance("subset-sum instance has no weights");
  for (const Integer& d : inst.weights)
    if (d < 1) throw MalformedInstance("subset-sum weights must be positive");
  if (inst.target < 1)
    throw MalformedInstance("subset-sum target must be positive");
}

void validate(const ThreePartitionInstance& inst) {
  if (inst.weights.empty() || inst.weights.size() % 3 != 0)
    throw MalformedInstance("3-partition needs 3m weights");
  const Integer& k = inst.bound;
  if (k < 1) throw MalformedInstance("3-partition bound must be positive");
  Integer total = 0;
  for (const Integer& d : inst.weights) {
    if (d < 0) throw MalformedInstance("3-partition weights are nonnegative");
    if (!(4 * d > k && 2 * d < k))
      throw MalformedInstance("weight " + d.get_str() +
                              " outside the open interval (k/4, k/2)");
    total += d;
  }
  Integer m(static_cast<unsigned long>(inst.weights.size() / 3));
  if (total != m * k)
    throw MalformedInstance("3-partition weights must sum to m*k");
}

TransportationPolytope reduce_subset_sum(const SubsetSumInstance& inst) {
  validate(inst);
  Integer total = 0;
  for (const Integer& d : inst.weights) total += d;
  if (inst.target > total)
    throw TargetExceedsTotal("target " + inst.target.get_str() +
                             " exceeds total weight " + total.get_str());
  RationalVector p(static_cast<Index>(inst.weights.size()));
  for (std::size_t i = 0; i < inst.weights.size(); ++i)
    p(static_cast<Index>(i)) = make_rational(inst.weights[i], total);
  RationalVector q(2);
  q(0) = make_rational(inst.target, total);
  q(1) = 1 - q(0);
  return {Distribution(std::move(p)), Distribution(std::move(q))};
}

ChannelFamily reduce_three_partition(const ThreePartitionInstance& inst) {
  validate(inst);
  const Index m = static_cast<Index>(inst.weights.size() / 3);
  Integer total = Integer(static_cast<long>(m)) * inst.bound;
  RationalVector p(static_cast<Index>(inst.weights.size()));
  for (std::size_t i = 0; i < inst.weights.size(); ++i)
    p(static_cast<Index>(i)) = make_rational(inst.weights[i], total);
  return {Distribution(std::move(p)), m};
}

std::optional<std::vector<Index>> solve_subset_sum_via_entropy(
    const SubsetSumInstance& inst) {
  validate(inst);
  Integer total = 0;
  for (const Integer& d : inst.weights) total += d;
  if (inst.target > total) return std::nullopt;  // no distribution to build

  TransportationPolytope p = reduce_subset_sum(inst);
  DecideMinResult decision = decide_entropy_min(p);
  if (!decision.witness) return std::nullopt;

  // Rows sent to the first column form the subset. The witness assignment
  // is lexicographically smallest, which for equal-sum subsets of positive
  // weights coincides with the smallest subset under sorted-index order.
  std::vector<Index> subset;
  for (const auto& [row, col] : decision.witness->assignment)
    if (col == 0) subset.push_back(row);
  return subset;
}

std::optional<std::vector<std::vector<Index>>> solve_three_partition_via_channel(
    const ThreePartitionInstance& inst) {
  ChannelFamily f = reduce_three_partition(inst);
  DecideChannelResult decision = decide_optimal_channel(f);
  if (!decision.witness) return std::nullopt;

  const Index m = f.output_size;
  std::vector<std::vector<Index>> groups(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < decision.witness->assignment.size(); ++i)
    groups[static_cast<std::size_t>(decision.witness->assignment[i])].push_back(
        static_cast<Index>(i));
  // The canonical witness labels columns by first use, so groups are
  // already ordered by their smallest element.
  return groups;
}

namespace {

bool row_deterministic_matrix(const RationalMatrix& s) {
  for (Index i = 0; i < s.rows(); ++i) {
    int nonzero = 0;
    for (Index j = 0; j < s.cols(); ++j)
      if (s(i, j) != 0 && ++nonzero > 1) return false;
  }
  return true;
}

}  // namespace

bool verify_certificate(const Certificate& cert,
                        const TransportationPolytope& p) {
  if (!is_member_matrix(cert.matrix, p)) return false;
  switch (cert.claim) {
    case CertificateClaim::kMember:
      return true;
    case CertificateClaim::kRowDeterministic:
      return row_deterministic_matrix(cert.matrix);
    case CertificateClaim::kRowDeterministicUniformCols: {
      if (!row_deterministic_matrix(cert.matrix)) return false;
      const Rational uniform = make_rational(1, p.cols());
      for (Index j = 0; j < p.cols(); ++j)
        if (p.col_marginal[j] != uniform) return false;
      return true;
    }
  }
  return false;
}

bool verify_certificate(const Certificate& cert, const ChannelFamily& f) {
  const RationalMatrix& s = cert.matrix;
  if (s.rows() != f.input_marginal.size() || s.cols() != f.output_size)
    return false;
  if (!all_nonnegative(s)) return false;
  for (Index i = 0; i < s.rows(); ++i) {
    Rational sum = 0;
    for (Index j = 0; j < s.cols(); ++j) sum += s(i, j);
    if (sum != f.input_marginal[i]) return false;
  }
  switch (cert.claim) {
    case CertificateClaim::kMember:
      return true;
    case CertificateClaim::kRowDeterministic:
      return row_deterministic_matrix(s);
    case CertificateClaim::kRowDeterministicUniformCols: {
      if (!row_deterministic_matrix(s)) return false;
      const Rational uniform = make_rational(1, f.output_size);
      for (Index j = 0; j < s.cols(); ++j) {
        Rational sum = 0;
        for (Index i = 0; i < s.rows(); ++i) sum += s(i, j);
        if (sum != uniform) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace minent
