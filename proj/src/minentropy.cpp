#include "minent/minentropy.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <unordered_map>

namespace minent {

namespace {

Integer lcm_of_denominators(std::initializer_list<const RationalVector*> vecs) {
  Integer l = 1;
  for (const RationalVector* v : vecs)
    for (Index i = 0; i < v->size(); ++i)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
              (*v)(i).get_den().get_mpz_t());
  return l;
}

// Failure memo shared across subproblems: keyed by the remaining mass
// multiset and remaining capacity multiset.
using FailMemo = std::unordered_map<std::string, char>;

std::string state_key(const std::vector<Integer>& masses, std::size_t depth,
                      const std::vector<Integer>& caps) {
  std::vector<Integer> sorted_caps(caps);
  std::sort(sorted_caps.begin(), sorted_caps.end());
  std::string key;
  for (std::size_t k = depth; k < masses.size(); ++k) {
    key += masses[k].get_str();
    key += ',';
  }
  key += '|';
  for (const Integer& c : sorted_caps) {
    key += c.get_str();
    key += ',';
  }
  return key;
}

// Depth-first grouping over masses sorted in decreasing order. `out`, when
// present, receives the cap index per mass position.
bool group_rec(const std::vector<Integer>& masses, std::size_t depth,
               std::vector<Integer>& caps, FailMemo& memo,
               std::vector<std::size_t>* out) {
  if (depth == masses.size()) return true;
  // No assignment can exactly fill a column whose remaining capacity is
  // positive but below the smallest remaining mass.
  const Integer& smallest = masses.back();
  for (const Integer& c : caps)
    if (c > 0 && c < smallest) return false;

  std::string key = state_key(masses, depth, caps);
  if (memo.count(key)) return false;

  const Integer& mass = masses[depth];
  std::vector<Integer> tried;
  for (std::size_t j = 0; j < caps.size(); ++j) {
    if (caps[j] < mass) continue;
    if (std::find(tried.begin(), tried.end(), caps[j]) != tried.end())
      continue;  // symmetric column
    tried.push_back(caps[j]);
    caps[j] -= mass;
    if (group_rec(masses, depth + 1, caps, memo, out)) {
      caps[j] += mass;
      if (out) (*out)[depth] = j;
      return true;
    }
    caps[j] += mass;
  }
  memo.emplace(std::move(key), 0);
  return false;
}

bool groupable(std::vector<Integer> masses, std::vector<Integer> caps,
               FailMemo& memo, std::vector<std::size_t>* out_by_position,
               std::vector<std::size_t>* order_out = nullptr) {
  Integer mass_total = 0, cap_total = 0;
  for (const Integer& x : masses) mass_total += x;
  for (const Integer& c : caps) cap_total += c;
  if (mass_total != cap_total) return false;
  std::vector<std::size_t> order(masses.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return masses[a] > masses[b];
  });
  std::vector<Integer> sorted;
  sorted.reserve(masses.size());
  for (std::size_t i : order) sorted.push_back(masses[i]);
  if (out_by_position) out_by_position->assign(masses.size(), 0);
  std::vector<std::size_t> by_depth(masses.size(), 0);
  if (!group_rec(sorted, 0, caps, memo, out_by_position ? &by_depth : nullptr))
    return false;
  if (out_by_position)
    for (std::size_t d = 0; d < order.size(); ++d)
      (*out_by_position)[order[d]] = by_depth[d];
  if (order_out) *order_out = order;
  return true;
}

}  // namespace

namespace detail {

std::optional<std::vector<std::size_t>> group_masses(
    const std::vector<Integer>& masses, const std::vector<Integer>& caps) {
  FailMemo memo;
  std::vector<std::size_t> out;
  if (!groupable(masses, caps, memo, &out)) return std::nullopt;
  return out;
}

std::optional<std::map<Index, Index>> canonical_grouping(
    const RationalVector& masses, const RationalVector& caps) {
  Integer l = lcm_of_denominators({&masses, &caps});
  std::vector<Index> rows;  // positive-mass rows, natural order
  std::vector<Integer> im;
  for (Index i = 0; i < masses.size(); ++i) {
    if (masses(i) == 0) continue;
    rows.push_back(i);
    Rational scaled = masses(i) * l;
    im.push_back(scaled.get_num());
  }
  std::vector<Integer> ic;
  for (Index j = 0; j < caps.size(); ++j) {
    Rational scaled = caps(j) * l;
    ic.push_back(scaled.get_num());
  }

  FailMemo memo;
  if (!groupable(im, ic, memo, nullptr)) return std::nullopt;

  // Fix rows in natural order to the lowest feasible column: yields the
  // lexicographically smallest assignment vector.
  std::map<Index, Index> assignment;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<Integer> rest(im.begin() + static_cast<std::ptrdiff_t>(r) + 1,
                              im.end());
    bool placed = false;
    for (std::size_t j = 0; j < ic.size(); ++j) {
      if (ic[j] < im[r]) continue;
      ic[j] -= im[r];
      if (groupable(rest, ic, memo, nullptr)) {
        assignment[rows[r]] = static_cast<Index>(j);
        placed = true;
        break;
      }
      ic[j] += im[r];
    }
    assert(placed && "feasible grouping lost during canonicalization");
    if (!placed) return std::nullopt;
  }
  return assignment;
}

}  // namespace detail

MinEntropyResult min_joint_entropy_exact(const TransportationPolytope& p,
                                         const SolveOptions& opts) {
  detail::VertexWalk walk = detail::walk_vertices(p, opts.limit);

  struct Candidate {
    const std::vector<Rational>* cells;
    Entropy interval;
  };
  std::vector<Candidate> all;
  all.reserve(walk.vertices.size());
  for (const auto& kv : walk.vertices) {
    const std::vector<Rational>& cells = kv.first;
    auto view = Eigen::Map<const RationalVector>(
        cells.data(), static_cast<Index>(cells.size()));
    all.push_back({&cells, entropy_of(view, opts.width_exp)});
  }
  assert(!all.empty());

  auto min_upper = [&](const std::vector<Candidate>& cs) {
    const RealInterval* best = &cs.front().interval;
    for (const Candidate& c : cs)
      if (mpfr_cmp(c.interval.upper_raw(), best->upper_raw()) < 0)
        best = &c.interval;
    return best;
  };

  // Keep every vertex whose enclosure can still reach the smallest upper
  // bound; escalate precision until a single minimizer separates or the
  // tie-break width floor is hit.
  std::vector<Candidate> candidates;
  {
    const RealInterval threshold = *min_upper(all);
    for (Candidate& c : all)
      if (mpfr_cmp(c.interval.lower_raw(), threshold.upper_raw()) <= 0)
        candidates.push_back(std::move(c));
  }
  int we = opts.width_exp;
  while (candidates.size() > 1 && we < kTieBreakWidthExp) {
    we = std::min(we * 2, kTieBreakWidthExp);
    for (Candidate& c : candidates) {
      auto view = Eigen::Map<const RationalVector>(
          c.cells->data(), static_cast<Index>(c.cells->size()));
      Entropy refined = entropy_of(view, we);
      refined.intersect(c.interval);
      c.interval = std::move(refined);
    }
    const RealInterval threshold = *min_upper(candidates);
    std::vector<Candidate> kept;
    for (Candidate& c : candidates)
      if (mpfr_cmp(c.interval.lower_raw(), threshold.upper_raw()) <= 0)
        kept.push_back(std::move(c));
    candidates = std::move(kept);
  }

  // Map iteration order is lexicographic, and the filters above preserve
  // it, so the first candidate is the canonical minimizer.
  std::vector<Coupling> co_minimal;
  co_minimal.reserve(candidates.size());
  for (const Candidate& c : candidates)
    co_minimal.emplace_back(walk.inflate(*c.cells));

  MinEntropyResult result{co_minimal.front(), candidates.front().interval,
                          walk.complete, walk.vertices.size(),
                          std::move(co_minimal)};
  return result;
}

Coupling max_joint_entropy(const TransportationPolytope& p) {
  RationalMatrix cells =
      p.row_marginal.probs() * p.col_marginal.probs().transpose();
  return Coupling(std::move(cells));
}

DecideMinResult decide_entropy_min(const TransportationPolytope& p) {
  auto assignment = detail::canonical_grouping(p.row_marginal.probs(),
                                               p.col_marginal.probs());
  DecideMinResult result;
  if (assignment) result.witness = DeterministicWitness{std::move(*assignment)};
  return result;
}

DecideMinResult decide_entropy_min_two_cols(const Distribution& p,
                                            const Rational& q,
                                            std::uint64_t denominator_budget) {
  if (q < 0 || q > 1)
    throw std::invalid_argument("column mass q must lie in [0, 1]");
  RationalVector qv(1);
  qv(0) = q;
  Integer l = lcm_of_denominators({&p.probs(), &qv});
  if (!l.fits_ulong_p() || l.get_ui() > denominator_budget)
    throw DenominatorOverflow("common denominator " + l.get_str() +
                              " exceeds the dynamic-program budget of " +
                              std::to_string(denominator_budget));
  const std::size_t total = l.get_ui();
  Rational target_scaled = q * l;
  const std::size_t target = target_scaled.get_num().get_ui();
  assert(target <= total);
  (void)total;

  std::vector<std::size_t> rows;
  std::vector<std::size_t> weight;
  for (Index i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    Rational scaled = p[i] * l;
    rows.push_back(static_cast<std::size_t>(i));
    weight.push_back(scaled.get_num().get_ui());
  }

  // 0/1 subset-sum over sums 0..target; `from` remembers the item that
  // first reached each sum.
  std::vector<char> reach(target + 1, 0);
  std::vector<std::int64_t> from(target + 1, -1);
  reach[0] = 1;
  for (std::size_t it = 0; it < weight.size(); ++it) {
    const std::size_t w = weight[it];
    if (w > target) continue;
    for (std::size_t s = target; s >= w; --s) {
      if (reach[s - w] && !reach[s]) {
        reach[s] = 1;
        from[s] = static_cast<std::int64_t>(it);
      }
      if (s == w) break;
    }
  }
  DecideMinResult result;
  if (!reach[target]) return result;

  DeterministicWitness w;
  std::vector<char> in_subset(rows.size(), 0);
  for (std::size_t s = target; s > 0;) {
    std::size_t it = static_cast<std::size_t>(from[s]);
    in_subset[it] = 1;
    s -= weight[it];
  }
  for (std::size_t k = 0; k < rows.size(); ++k)
    w.assignment[static_cast<Index>(rows[k])] = in_subset[k] ? 0 : 1;
  result.witness = std::move(w);
  return result;
}

MinEntropyResult local_search_min_entropy(const TransportationPolytope& p,
                                          const Vertex& start,
                                          std::uint64_t max_steps,
                                          int width_exp) {
  Vertex current = start;
  std::uint64_t visited = 1;
  for (std::uint64_t step = 0; step < max_steps; ++step) {
    std::vector<Vertex> neighbors = pivot_neighbors(current, p);
    visited += neighbors.size();
    const Vertex* best = nullptr;
    for (const Vertex& nb : neighbors) {
      if (!best) {
        best = &nb;
        continue;
      }
      int c = detail::compare_entropy_exact(nb.coupling.cells(),
                                            best->coupling.cells());
      if (c < 0 ||
          (c == 0 && lex_compare(nb.coupling.cells(), best->coupling.cells()) < 0))
        best = &nb;
    }
    if (!best || detail::compare_entropy_exact(best->coupling.cells(),
                                               current.coupling.cells()) >= 0)
      break;
    current = *best;
  }

  Entropy value = joint_entropy(current.coupling, width_exp);
  Entropy bound = RealInterval::max(entropy(p.row_marginal, width_exp),
                                    entropy(p.col_marginal, width_exp));
  bool optimal = mpfr_cmp(value.lower_raw(), bound.upper_raw()) <= 0;
  MinEntropyResult result{current.coupling, std::move(value), optimal, visited,
                          {current.coupling}};
  return result;
}

Coupling witness_coupling(const DeterministicWitness& w,
                          const TransportationPolytope& p) {
  RationalMatrix cells =
      RationalMatrix::Constant(p.rows(), p.cols(), Rational(0));
  for (const auto& [i, j] : w.assignment) cells(i, j) += p.row_marginal[i];
  return Coupling(std::move(cells));
}

}  // namespace minent
