#include "minent/polytope.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

namespace minent {

namespace {

using detail::Cell;

// Bipartite node ids: rows are 0..n-1, columns are n..n+m-1.
struct TreeView {
  Index n, m;
  std::vector<std::vector<std::pair<Index, std::size_t>>> adj;  // node -> (other, edge idx)

  TreeView(Index n_, Index m_, const std::vector<Cell>& cells) : n(n_), m(m_) {
    adj.resize(static_cast<std::size_t>(n + m));
    for (std::size_t e = 0; e < cells.size(); ++e) {
      Index a = cells[e].first;
      Index b = n + cells[e].second;
      adj[static_cast<std::size_t>(a)].push_back({b, e});
      adj[static_cast<std::size_t>(b)].push_back({a, e});
    }
  }

  // Node path from `from` to `to`, or empty when disconnected.
  std::vector<std::pair<Index, std::size_t>> path(Index from, Index to) const {
    const std::size_t total = adj.size();
    std::vector<std::pair<Index, std::size_t>> via(total, {-1, 0});
    std::vector<char> seen(total, 0);
    std::deque<Index> queue{from};
    seen[static_cast<std::size_t>(from)] = 1;
    while (!queue.empty()) {
      Index u = queue.front();
      queue.pop_front();
      if (u == to) break;
      for (auto [v, e] : adj[static_cast<std::size_t>(u)]) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = 1;
        via[static_cast<std::size_t>(v)] = {u, e};
        queue.push_back(v);
      }
    }
    std::vector<std::pair<Index, std::size_t>> edges;  // (tail node, edge idx)
    if (!seen[static_cast<std::size_t>(to)]) return edges;
    for (Index u = to; u != from;) {
      auto [prev, e] = via[static_cast<std::size_t>(u)];
      edges.push_back({prev, e});
      u = prev;
    }
    std::reverse(edges.begin(), edges.end());
    return edges;
  }
};

std::vector<Cell> sorted_cells(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  return cells;
}

// North-west corner scan over explicit marginals; returns basis cells in
// visit order and fills `values`.
std::vector<Cell> northwest_scan(const RationalVector& p,
                                 const RationalVector& q,
                                 RationalMatrix& values) {
  const Index n = p.size();
  const Index m = q.size();
  RationalVector a = p;
  RationalVector b = q;
  values = RationalMatrix::Constant(n, m, Rational(0));
  std::vector<Cell> basis;
  Index i = 0, j = 0;
  for (;;) {
    basis.push_back({i, j});
    Rational t = std::min(a(i), b(j));
    values(i, j) = t;
    a(i) -= t;
    b(j) -= t;
    if (i == n - 1 && j == m - 1) break;
    if (a(i) == 0 && i < n - 1)
      ++i;
    else
      ++j;
  }
  return basis;
}

struct PivotMove {
  Cell entering;
  Rational theta;
  // Signed cycle: (cell, +1/-1) pairs excluding the entering cell.
  std::vector<std::pair<Cell, int>> cycle;
  std::vector<Cell> leaving_candidates;
};

// Computes the pivot data for one entering cell, or nothing when the basis
// tree does not connect its endpoints (possible for stripped bases given a
// full-size matrix).
std::optional<PivotMove> plan_pivot(const TreeView& tree,
                                    const std::vector<Cell>& basis,
                                    const RationalMatrix& values,
                                    Cell entering) {
  auto path = tree.path(entering.first, tree.n + entering.second);
  if (path.empty()) return std::nullopt;
  PivotMove move;
  move.entering = entering;
  bool have_theta = false;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const Cell& cell = basis[path[k].second];
    int sign = (k % 2 == 0) ? -1 : +1;  // edge adjacent to the entering row
    move.cycle.push_back({cell, sign});
    if (sign < 0) {
      const Rational& v = values(cell.first, cell.second);
      if (!have_theta || v < move.theta) {
        move.theta = v;
        have_theta = true;
      }
    }
  }
  for (auto& [cell, sign] : move.cycle)
    if (sign < 0 && values(cell.first, cell.second) == move.theta)
      move.leaving_candidates.push_back(cell);
  return move;
}

RationalMatrix apply_pivot(const RationalMatrix& values, const PivotMove& move) {
  RationalMatrix next = values;
  next(move.entering.first, move.entering.second) += move.theta;
  for (auto& [cell, sign] : move.cycle) {
    if (sign > 0)
      next(cell.first, cell.second) += move.theta;
    else
      next(cell.first, cell.second) -= move.theta;
  }
  return next;
}

std::vector<Rational> flatten(const RationalMatrix& m) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(m.size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

}  // namespace

Vertex northwest_corner(const TransportationPolytope& p) {
  RationalMatrix values;
  std::vector<Cell> basis =
      northwest_scan(p.row_marginal.probs(), p.col_marginal.probs(), values);
  return Vertex{Coupling(std::move(values)), BasisTree{sorted_cells(basis)}};
}

namespace detail {

RationalMatrix VertexWalk::inflate(const std::vector<Rational>& cells) const {
  RationalMatrix full =
      RationalMatrix::Constant(full_rows, full_cols, Rational(0));
  const Index m = static_cast<Index>(col_map.size());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    Index i = static_cast<Index>(k) / m;
    Index j = static_cast<Index>(k) % m;
    full(row_map[static_cast<std::size_t>(i)],
         col_map[static_cast<std::size_t>(j)]) = cells[k];
  }
  return full;
}

std::vector<Cell> VertexWalk::remap_basis(const std::vector<Cell>& basis) const {
  std::vector<Cell> out;
  out.reserve(basis.size());
  for (const auto& [i, j] : basis)
    out.push_back({row_map[static_cast<std::size_t>(i)],
                   col_map[static_cast<std::size_t>(j)]});
  return sorted_cells(out);
}

VertexWalk walk_vertices(const TransportationPolytope& p,
                         std::uint64_t vertex_limit,
                         std::uint64_t basis_budget) {
  VertexWalk walk;
  walk.full_rows = p.rows();
  walk.full_cols = p.cols();
  for (Index i = 0; i < p.rows(); ++i)
    if (p.row_marginal[i] > 0) walk.row_map.push_back(i);
  for (Index j = 0; j < p.cols(); ++j)
    if (p.col_marginal[j] > 0) walk.col_map.push_back(j);

  const Index n = static_cast<Index>(walk.row_map.size());
  const Index m = static_cast<Index>(walk.col_map.size());
  RationalVector sp(n), sq(m);
  for (Index i = 0; i < n; ++i)
    sp(i) = p.row_marginal[walk.row_map[static_cast<std::size_t>(i)]];
  for (Index j = 0; j < m; ++j)
    sq(j) = p.col_marginal[walk.col_map[static_cast<std::size_t>(j)]];

  if (vertex_limit == 0) vertex_limit = 1;
  if (basis_budget == 0) {
    // Degenerate vertices multiply the basis count well beyond the vertex
    // count; keep the visited-basis set bounded regardless of the vertex
    // limit.
    std::uint64_t scaled = vertex_limit > (UINT64_MAX >> 6)
                               ? UINT64_MAX
                               : vertex_limit << 6;
    basis_budget = std::clamp<std::uint64_t>(scaled, std::uint64_t(1) << 16,
                                             std::uint64_t(1) << 23);
  }

  RationalMatrix start_values;
  std::vector<Cell> start_basis = sorted_cells(northwest_scan(sp, sq, start_values));

  auto basis_key = [m](const std::vector<Cell>& basis) {
    std::vector<Index> key;
    key.reserve(basis.size());
    for (const auto& [i, j] : basis) key.push_back(i * m + j);
    return key;
  };

  std::set<std::vector<Index>> seen_bases;
  std::vector<std::pair<std::vector<Cell>, RationalMatrix>> stack;
  seen_bases.insert(basis_key(start_basis));
  stack.emplace_back(std::move(start_basis), std::move(start_values));

  walk.complete = true;
  while (!stack.empty()) {
    if (walk.bases_visited >= basis_budget) {
      walk.complete = false;
      break;
    }
    auto [basis, values] = std::move(stack.back());
    stack.pop_back();
    ++walk.bases_visited;

    // Record (or refine) the vertex this basis realizes.
    {
      auto key = flatten(values);
      auto it = walk.vertices.find(key);
      if (it == walk.vertices.end()) {
        if (walk.vertices.size() >= vertex_limit) {
          walk.complete = false;
          break;
        }
        walk.vertices.emplace(std::move(key), basis);
      } else if (basis_key(basis) < basis_key(it->second)) {
        it->second = basis;
      }
    }

    TreeView tree(n, m, basis);
    std::set<Cell> in_basis(basis.begin(), basis.end());
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < m; ++j) {
        Cell entering{i, j};
        if (in_basis.count(entering)) continue;
        auto move = plan_pivot(tree, basis, values, entering);
        if (!move) continue;
        for (const Cell& leaving : move->leaving_candidates) {
          std::vector<Cell> next_basis;
          next_basis.reserve(basis.size());
          for (const Cell& c : basis)
            if (c != leaving) next_basis.push_back(c);
          next_basis.push_back(entering);
          next_basis = sorted_cells(std::move(next_basis));
          auto key = basis_key(next_basis);
          if (seen_bases.count(key)) continue;
          seen_bases.insert(std::move(key));
          stack.emplace_back(std::move(next_basis), apply_pivot(values, *move));
        }
      }
  }
  return walk;
}

}  // namespace detail

std::vector<Vertex> enumerate_vertices(const TransportationPolytope& p,
                                       std::uint64_t limit) {
  detail::VertexWalk walk = detail::walk_vertices(p, limit);
  if (!walk.complete)
    throw LimitExceeded("vertex enumeration exceeded the limit of " +
                        std::to_string(limit));
  std::vector<Vertex> out;
  out.reserve(walk.vertices.size());
  for (const auto& [cells, basis] : walk.vertices)
    out.push_back(Vertex{Coupling(walk.inflate(cells)),
                         BasisTree{walk.remap_basis(basis)}});
  return out;
}

std::vector<Vertex> pivot_neighbors(const Vertex& v,
                                    const TransportationPolytope& p) {
  const Index n = p.rows();
  const Index m = p.cols();
  const std::vector<Cell>& basis = v.basis.basic_cells;
  const RationalMatrix& values = v.coupling.cells();

  TreeView tree(n, m, basis);
  std::set<Cell> in_basis(basis.begin(), basis.end());
  std::map<std::vector<Rational>, std::pair<RationalMatrix, std::vector<Cell>>>
      found;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j) {
      Cell entering{i, j};
      if (in_basis.count(entering)) continue;
      auto move = plan_pivot(tree, basis, values, entering);
      if (!move || move->theta == 0) continue;  // degenerate: same point
      RationalMatrix next = apply_pivot(values, *move);
      // Any leaving choice yields the same point; keep the smallest basis.
      for (const Cell& leaving : move->leaving_candidates) {
        std::vector<Cell> next_basis;
        for (const Cell& c : basis)
          if (c != leaving) next_basis.push_back(c);
        next_basis.push_back(entering);
        next_basis = sorted_cells(std::move(next_basis));
        auto key = flatten(next);
        auto it = found.find(key);
        if (it == found.end())
          found.emplace(std::move(key), std::make_pair(next, next_basis));
        else if (next_basis < it->second.second)
          it->second.second = next_basis;
      }
    }
  std::vector<Vertex> out;
  out.reserve(found.size());
  for (auto& [key, vb] : found)
    out.push_back(Vertex{Coupling(std::move(vb.first)),
                         BasisTree{std::move(vb.second)}});
  return out;
}

bool is_member(const Coupling& s, const TransportationPolytope& p) {
  return is_member_matrix(s.cells(), p);
}

bool is_member_matrix(const RationalMatrix& s, const TransportationPolytope& p) {
  if (s.rows() != p.rows() || s.cols() != p.cols()) return false;
  if (!all_nonnegative(s)) return false;
  for (Index i = 0; i < s.rows(); ++i) {
    Rational sum = 0;
    for (Index j = 0; j < s.cols(); ++j) sum += s(i, j);
    if (sum != p.row_marginal[i]) return false;
  }
  for (Index j = 0; j < s.cols(); ++j) {
    Rational sum = 0;
    for (Index i = 0; i < s.rows(); ++i) sum += s(i, j);
    if (sum != p.col_marginal[j]) return false;
  }
  return true;
}

Index dimension(const TransportationPolytope& p) {
  Index n = 0, m = 0;
  for (Index i = 0; i < p.rows(); ++i)
    if (p.row_marginal[i] > 0) ++n;
  for (Index j = 0; j < p.cols(); ++j)
    if (p.col_marginal[j] > 0) ++m;
  return (n - 1) * (m - 1);
}

}  // namespace minent
