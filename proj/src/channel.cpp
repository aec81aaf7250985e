#include "minent/channel.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace minent {

Coupling min_joint_entropy_over_family(const ChannelFamily& f) {
  const Index n = f.input_marginal.size();
  RationalMatrix cells =
      RationalMatrix::Constant(n, f.output_size, Rational(0));
  for (Index i = 0; i < n; ++i) cells(i, 0) = f.input_marginal[i];
  return Coupling(std::move(cells));
}

DecideChannelResult decide_optimal_channel(const ChannelFamily& f) {
  const Index m = f.output_size;
  RationalVector caps(m);
  for (Index j = 0; j < m; ++j) caps(j) = make_rational(1, m);
  auto grouping = detail::canonical_grouping(f.input_marginal.probs(), caps);
  DecideChannelResult result;
  if (!grouping) return result;
  BalancedPartitionWitness w;
  w.assignment.assign(static_cast<std::size_t>(f.input_marginal.size()), 0);
  for (const auto& [i, j] : *grouping)
    w.assignment[static_cast<std::size_t>(i)] = j;
  result.witness = std::move(w);
  return result;
}

namespace {

double x_log2_x(double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); }

// Minimal possible sum of c*log2(c) over completions that add `remaining`
// mass on top of the current column sums: raise the smallest columns to a
// common water level (the summand is convex).
double waterfill_lower_bound(std::vector<double> cols, double remaining) {
  std::sort(cols.begin(), cols.end());
  const std::size_t m = cols.size();
  double prefix = 0.0;
  std::size_t k = m;
  double level = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    prefix += cols[i];
    level = (prefix + remaining) / static_cast<double>(i + 1);
    if (i + 1 == m || level <= cols[i + 1]) {
      k = i + 1;
      break;
    }
  }
  double f = x_log2_x(level) * static_cast<double>(k);
  for (std::size_t i = k; i < m; ++i) f += x_log2_x(cols[i]);
  return f;
}

struct AssignmentSearch {
  // problem data (positive rows only, sorted by decreasing weight)
  std::vector<Index> rows;        // search position -> original row
  std::vector<Integer> weight;    // by search position
  std::vector<double> weight_d;
  std::vector<double> suffix_mass;
  Integer denom;
  Index m = 0;
  std::uint64_t leaf_limit = 0;

  // state
  std::vector<Integer> colsums;
  std::vector<double> colsums_d;
  std::vector<Index> assigned;  // by search position
  std::uint64_t leaves = 0;
  bool aborted = false;

  // champion
  bool have_champion = false;
  double champion_f = 0.0;
  std::vector<Integer> champion_cols;
  std::vector<Index> champion_canonical;  // canonical natural-order labels
  double margin = 1e-6;

  std::vector<Index> canonical_assignment() const {
    // natural row order, columns relabeled by first use
    std::vector<Index> nat(rows.size());
    std::vector<std::pair<Index, Index>> pairs;
    for (std::size_t k = 0; k < rows.size(); ++k)
      pairs.push_back({rows[k], assigned[k]});
    std::sort(pairs.begin(), pairs.end());
    std::vector<Index> relabel(static_cast<std::size_t>(m), -1);
    Index next = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      Index& lbl = relabel[static_cast<std::size_t>(pairs[k].second)];
      if (lbl < 0) lbl = next++;
      nat[k] = lbl;
    }
    return nat;
  }

  RationalVector column_distribution(const std::vector<Integer>& cols) const {
    RationalVector q(m);
    for (Index j = 0; j < m; ++j)
      q(j) = make_rational(cols[static_cast<std::size_t>(j)], denom);
    return q;
  }

  void consider_leaf() {
    ++leaves;
    double f = 0.0;
    for (double c : colsums_d) f += x_log2_x(c);
    if (!have_champion || f < champion_f - margin) {
      have_champion = true;
      champion_f = f;
      champion_cols = colsums;
      champion_canonical = canonical_assignment();
      return;
    }
    if (f > champion_f + margin) return;
    // Near-tie: resolve exactly. Equal column multisets mean exactly equal
    // mutual information; otherwise escalate certified enclosures.
    std::vector<Integer> a = colsums, b = champion_cols;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    int cmp_result;
    if (a == b) {
      cmp_result = 0;
    } else {
      // higher column entropy = higher mutual information = better
      cmp_result = -detail::compare_entropy_exact(
          column_distribution(colsums), column_distribution(champion_cols));
    }
    std::vector<Index> canon = canonical_assignment();
    if (cmp_result < 0 || (cmp_result == 0 && canon < champion_canonical)) {
      champion_f = std::min(champion_f, f);
      champion_cols = colsums;
      champion_canonical = std::move(canon);
    }
  }

  void search(std::size_t depth, Index used) {
    if (aborted) return;
    if (depth == rows.size()) {
      consider_leaf();
      if (leaves >= leaf_limit) aborted = true;
      return;
    }
    if (have_champion) {
      double lb = waterfill_lower_bound(colsums_d, suffix_mass[depth]);
      if (lb > champion_f + margin) return;
    }
    const Index fanout = std::min<Index>(used + 1, m);
    for (Index j = 0; j < fanout; ++j) {
      colsums[static_cast<std::size_t>(j)] += weight[depth];
      colsums_d[static_cast<std::size_t>(j)] += weight_d[depth];
      assigned[depth] = j;
      search(depth + 1, std::max(used, j + 1));
      colsums[static_cast<std::size_t>(j)] -= weight[depth];
      colsums_d[static_cast<std::size_t>(j)] -= weight_d[depth];
      if (aborted) return;
    }
  }
};

Integer lcm_denominators(const RationalVector& v) {
  Integer l = 1;
  for (Index i = 0; i < v.size(); ++i)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v(i).get_den().get_mpz_t());
  return l;
}

}  // namespace

MinEntropyResult max_mutual_information(const ChannelFamily& f,
                                        const SolveOptions& opts) {
  const Index n = f.input_marginal.size();
  const Index m = f.output_size;

  AssignmentSearch s;
  s.m = m;
  s.denom = lcm_denominators(f.input_marginal.probs());
  s.leaf_limit = std::max<std::uint64_t>(opts.limit, 1);
  for (Index i = 0; i < n; ++i) {
    if (f.input_marginal[i] == 0) continue;
    s.rows.push_back(i);
    Rational scaled = f.input_marginal[i] * s.denom;
    s.weight.push_back(scaled.get_num());
  }
  {
    // sort positions by decreasing weight, stable in the original order
    std::vector<std::size_t> order(s.rows.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return s.weight[a] > s.weight[b];
                     });
    std::vector<Index> rows;
    std::vector<Integer> weight;
    for (std::size_t k : order) {
      rows.push_back(s.rows[k]);
      weight.push_back(s.weight[k]);
    }
    s.rows = std::move(rows);
    s.weight = std::move(weight);
  }
  for (const Integer& w : s.weight) s.weight_d.push_back(w.get_d());
  s.suffix_mass.assign(s.rows.size() + 1, 0.0);
  for (std::size_t k = s.rows.size(); k > 0; --k)
    s.suffix_mass[k - 1] = s.suffix_mass[k] + s.weight_d[k - 1];
  // scale the tie margin to the magnitude of sum c*log2(c)
  s.margin = 1e-6 * std::max(1.0, x_log2_x(s.suffix_mass[0]));

  s.colsums.assign(static_cast<std::size_t>(m), Integer(0));
  s.colsums_d.assign(static_cast<std::size_t>(m), 0.0);
  s.assigned.assign(s.rows.size(), 0);
  s.search(0, 0);
  assert(s.have_champion);

  // Rebuild the champion coupling from its canonical assignment.
  RationalMatrix cells = RationalMatrix::Constant(n, m, Rational(0));
  {
    std::vector<Index> positive;
    for (Index i = 0; i < n; ++i)
      if (f.input_marginal[i] != 0) positive.push_back(i);
    for (std::size_t k = 0; k < positive.size(); ++k)
      cells(positive[k], s.champion_canonical[k]) =
          f.input_marginal[positive[k]];
  }
  Coupling best(std::move(cells));

  // I(X;Y) of a row-deterministic coupling is the entropy of the induced
  // column distribution, which only depends on the column-sum multiset.
  Entropy value =
      entropy_of(s.column_distribution(s.champion_cols), opts.width_exp);

  MinEntropyResult result{std::move(best), std::move(value), !s.aborted,
                          s.leaves, {}};
  result.co_minimal.push_back(result.best);
  return result;
}

Entropy capacity_upper_bound(const ChannelFamily& f, int width_exp) {
  Entropy hp = entropy(f.input_marginal, width_exp);
  Entropy logm = RealInterval::log2_of(Rational(static_cast<long>(f.output_size)),
                                       detail::start_precision(width_exp, 1));
  return RealInterval::min(hp, logm);
}

Coupling witness_coupling(const BalancedPartitionWitness& w,
                          const ChannelFamily& f) {
  const Index n = f.input_marginal.size();
  if (static_cast<Index>(w.assignment.size()) != n)
    throw std::invalid_argument("witness length does not match the marginal");
  RationalMatrix cells =
      RationalMatrix::Constant(n, f.output_size, Rational(0));
  for (Index i = 0; i < n; ++i)
    cells(i, w.assignment[static_cast<std::size_t>(i)]) += f.input_marginal[i];
  return Coupling(std::move(cells));
}

}  // namespace minent
