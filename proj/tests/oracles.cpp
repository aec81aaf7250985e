#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace oracle {

namespace {
constexpr mpfr_prec_t kRefPrec = 512;
}

RefValue::RefValue() { mpfr_init2(v_, kRefPrec); mpfr_set_zero(v_, 1); }

RefValue::RefValue(double v) {
  mpfr_init2(v_, kRefPrec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

RefValue::RefValue(const RefValue& o) {
  mpfr_init2(v_, kRefPrec);
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

RefValue& RefValue::operator=(const RefValue& o) {
  if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
  return *this;
}

RefValue::~RefValue() { mpfr_clear(v_); }

RefValue RefValue::parse(const char* decimal) {
  RefValue r;
  mpfr_set_str(r.v_, decimal, 10, MPFR_RNDN);
  return r;
}

RefValue RefValue::from_raw(mpfr_srcptr v) {
  RefValue r;
  mpfr_set(r.v_, v, MPFR_RNDN);
  return r;
}

double RefValue::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

double RefValue::distance(const RefValue& o) const {
  mpfr_t d;
  mpfr_init2(d, kRefPrec);
  mpfr_sub(d, v_, o.v_, MPFR_RNDN);
  mpfr_abs(d, d, MPFR_RNDN);
  double out = mpfr_get_d(d, MPFR_RNDU);
  mpfr_clear(d);
  return out;
}

bool RefValue::inside(const minent::RealInterval& iv) const {
  return mpfr_cmp(iv.lower_raw(), v_) <= 0 && mpfr_cmp(iv.upper_raw(), v_) >= 0;
}

namespace {

RefValue entropy_bits_impl(const std::vector<minent::Rational>& cells) {
  mpfr_t acc, t, l;
  mpfr_init2(acc, kRefPrec);
  mpfr_init2(t, kRefPrec);
  mpfr_init2(l, kRefPrec);
  mpfr_set_zero(acc, 1);
  for (const minent::Rational& p : cells) {
    if (p == 0) continue;
    mpfr_set_q(t, p.get_mpq_t(), MPFR_RNDN);
    mpfr_log(l, t, MPFR_RNDN);
    mpfr_mul(l, l, t, MPFR_RNDN);
    mpfr_sub(acc, acc, l, MPFR_RNDN);
  }
  mpfr_set_ui(t, 2, MPFR_RNDN);
  mpfr_log(t, t, MPFR_RNDN);
  mpfr_div(acc, acc, t, MPFR_RNDN);
  RefValue out = RefValue::from_raw(acc);
  mpfr_clears(acc, t, l, (mpfr_ptr) nullptr);
  return out;
}

}  // namespace

RefValue entropy_bits(const minent::RationalMatrix& cells) {
  std::vector<minent::Rational> v;
  for (minent::Index i = 0; i < cells.rows(); ++i)
    for (minent::Index j = 0; j < cells.cols(); ++j) v.push_back(cells(i, j));
  return entropy_bits_impl(v);
}

RefValue entropy_bits(const minent::RationalVector& cells) {
  std::vector<minent::Rational> v;
  for (minent::Index i = 0; i < cells.size(); ++i) v.push_back(cells(i));
  return entropy_bits_impl(v);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

std::vector<minent::RationalMatrix> vertices_bruteforce(
    const minent::TransportationPolytope& p) {
  using minent::Index;
  using minent::Rational;
  const Index n = p.rows();
  const Index m = p.cols();
  const int cells = static_cast<int>(n * m);
  const int tree_size = static_cast<int>(n + m - 1);

  std::map<std::vector<Rational>, minent::RationalMatrix> found;

  std::vector<int> pick(tree_size);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    // spanning-tree check
    UnionFind uf(static_cast<int>(n + m));
    bool acyclic = true;
    for (int id : pick) {
      int i = id / static_cast<int>(m);
      int j = id % static_cast<int>(m);
      if (!uf.unite(i, static_cast<int>(n) + j)) {
        acyclic = false;
        break;
      }
    }
    if (acyclic) {
      // tree with n+m-1 edges on n+m nodes is spanning; solve by leaf
      // elimination
      std::vector<Rational> rp(static_cast<std::size_t>(n)),
          cq(static_cast<std::size_t>(m));
      for (Index i = 0; i < n; ++i)
        rp[static_cast<std::size_t>(i)] = p.row_marginal[i];
      for (Index j = 0; j < m; ++j)
        cq[static_cast<std::size_t>(j)] = p.col_marginal[j];
      std::vector<int> deg(static_cast<std::size_t>(n + m), 0);
      std::vector<std::vector<int>> incident(static_cast<std::size_t>(n + m));
      for (int id : pick) {
        int i = id / static_cast<int>(m);
        int j = static_cast<int>(n) + id % static_cast<int>(m);
        ++deg[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(j)];
        incident[static_cast<std::size_t>(i)].push_back(id);
        incident[static_cast<std::size_t>(j)].push_back(id);
      }
      minent::RationalMatrix sol =
          minent::RationalMatrix::Constant(n, m, Rational(0));
      std::vector<char> used(static_cast<std::size_t>(cells), 0);
      for (int id : pick) used[static_cast<std::size_t>(id)] = 1;
      std::vector<int> leaves;
      for (int v = 0; v < static_cast<int>(n + m); ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) leaves.push_back(v);
      bool feasible = true;
      int remaining = tree_size;
      while (remaining > 0 && !leaves.empty()) {
        int v = leaves.back();
        leaves.pop_back();
        int edge = -1;
        for (int id : incident[static_cast<std::size_t>(v)])
          if (used[static_cast<std::size_t>(id)]) {
            edge = id;
            break;
          }
        if (edge < 0) continue;
        int i = edge / static_cast<int>(m);
        int j = edge % static_cast<int>(m);
        Rational value = v < static_cast<int>(n)
                             ? rp[static_cast<std::size_t>(i)]
                             : cq[static_cast<std::size_t>(j)];
        if (value < 0) {
          feasible = false;
          break;
        }
        sol(i, j) = value;
        rp[static_cast<std::size_t>(i)] -= value;
        cq[static_cast<std::size_t>(j)] -= value;
        used[static_cast<std::size_t>(edge)] = 0;
        --remaining;
        int other = v < static_cast<int>(n) ? static_cast<int>(n) + j : i;
        if (--deg[static_cast<std::size_t>(other)] == 1)
          leaves.push_back(other);
        deg[static_cast<std::size_t>(v)] = 0;
      }
      if (feasible && remaining == 0 && minent::all_nonnegative(sol)) {
        std::vector<Rational> key;
        for (Index i = 0; i < n; ++i)
          for (Index j = 0; j < m; ++j) key.push_back(sol(i, j));
        found.emplace(std::move(key), std::move(sol));
      }
    }
    // next combination
    int k = tree_size - 1;
    while (k >= 0 && pick[static_cast<std::size_t>(k)] ==
                         cells - tree_size + k)
      --k;
    if (k < 0) break;
    ++pick[static_cast<std::size_t>(k)];
    for (int t = k + 1; t < tree_size; ++t)
      pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
  }

  std::vector<minent::RationalMatrix> out;
  out.reserve(found.size());
  for (auto& kv : found) out.push_back(std::move(kv.second));
  return out;
}

bool adjacent_bruteforce(const minent::RationalMatrix& a,
                         const minent::RationalMatrix& b) {
  using minent::Index;
  if (minent::rational_matrix_equal(a, b)) return false;
  const Index n = a.rows();
  const Index m = a.cols();
  UnionFind uf(static_cast<int>(n + m));
  int edges = 0;
  int merges = 0;
  std::vector<char> touched(static_cast<std::size_t>(n + m), 0);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j) {
      if (a(i, j) == 0 && b(i, j) == 0) continue;
      ++edges;
      touched[static_cast<std::size_t>(i)] = 1;
      touched[static_cast<std::size_t>(n + j)] = 1;
      if (uf.unite(static_cast<int>(i), static_cast<int>(n + j))) ++merges;
    }
  int nodes = 0;
  for (char t : touched) nodes += t;
  int components = nodes - merges;
  int cycle_rank = edges - nodes + components;
  return cycle_rank == 1;
}

std::optional<std::vector<minent::Index>> subset_sum_bruteforce(
    const std::vector<minent::Integer>& weights, const minent::Integer& target) {
  const std::size_t n = weights.size();
  if (n > 22) throw std::invalid_argument("brute force capped at n = 22");
  std::optional<std::vector<minent::Index>> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    minent::Integer sum = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t(1) << i)) sum += weights[i];
    if (sum != target) continue;
    std::vector<minent::Index> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t(1) << i))
        subset.push_back(static_cast<minent::Index>(i));
    if (!best || subset < *best) best = std::move(subset);
  }
  return best;
}

namespace {

bool three_partition_rec(const std::vector<minent::Integer>& weights,
                         std::vector<minent::Integer>& sums,
                         const minent::Integer& bound, std::size_t depth,
                         std::size_t used) {
  if (depth == weights.size()) return true;
  for (std::size_t g = 0; g < std::min(used + 1, sums.size()); ++g) {
    if (sums[g] + weights[depth] > bound) continue;
    sums[g] += weights[depth];
    if (three_partition_rec(weights, sums, bound, depth + 1,
                            std::max(used, g + 1)))
      return true;
    sums[g] -= weights[depth];
  }
  return false;
}

}  // namespace

bool three_partition_bruteforce(const std::vector<minent::Integer>& weights,
                                const minent::Integer& bound) {
  std::vector<minent::Integer> sums(weights.size() / 3, minent::Integer(0));
  std::vector<minent::Integer> sorted = weights;
  std::sort(sorted.rbegin(), sorted.rend());
  return three_partition_rec(sorted, sums, bound, 0, 0);
}

double best_row_deterministic_mi(const minent::Distribution& p,
                                 minent::Index m) {
  using minent::Index;
  std::vector<double> masses;
  for (Index i = 0; i < p.size(); ++i)
    if (p[i] != 0) masses.push_back(p[i].get_d());
  const std::size_t n = masses.size();
  if (n > 14) throw std::invalid_argument("brute force capped at n = 14");
  std::vector<double> cols(static_cast<std::size_t>(m), 0.0);
  double best = 0.0;
  std::vector<std::size_t> a(n, 0);
  for (;;) {
    std::fill(cols.begin(), cols.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) cols[a[i]] += masses[i];
    double h = 0.0;
    for (double c : cols)
      if (c > 0) h -= c * std::log2(c);
    best = std::max(best, h);
    std::size_t k = 0;
    while (k < n && a[k] + 1 == static_cast<std::size_t>(m)) a[k++] = 0;
    if (k == n) break;
    ++a[k];
  }
  return best;
}

}  // namespace oracle
