#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "minent/errors.hpp"
#include "minent/types.hpp"

namespace minent {

/// Default cap on enumerated vertices; transportation polytopes can have
/// exponentially many.
inline constexpr std::uint64_t kDefaultVertexLimit = 1'000'000;

/// The set of couplings with fixed row marginal P and column marginal Q.
/// Always nonempty (the product coupling is a member).
struct TransportationPolytope {
  Distribution row_marginal;
  Distribution col_marginal;

  TransportationPolytope(Distribution p, Distribution q)
      : row_marginal(std::move(p)), col_marginal(std::move(q)) {}

  Index rows() const { return row_marginal.size(); }
  Index cols() const { return col_marginal.size(); }
};

/// A spanning-tree basis of the bipartite supply/demand graph. Cells are
/// (row, col) pairs, kept sorted; the induced graph is acyclic and spans
/// every node with positive marginal, with at most rows+cols-1 cells.
struct BasisTree {
  std::vector<std::pair<Index, Index>> basic_cells;
};

/// An extreme point of a transportation polytope together with one of its
/// bases; support(coupling) is contained in the basis.
struct Vertex {
  Coupling coupling;
  BasisTree basis;
};

/// Greedy basic feasible solution: scan from the top-left cell, move enough
/// mass to exhaust a row or a column, advance past it (row first on ties,
/// keeping a zero basic cell so the basis stays a spanning tree).
Vertex northwest_corner(const TransportationPolytope& p);

/// All distinct vertices, deduplicated by exact cell values and sorted
/// lexicographically (row-major). Throws LimitExceeded when the vertex
/// count exceeds `limit`.
std::vector<Vertex> enumerate_vertices(const TransportationPolytope& p,
                                       std::uint64_t limit = kDefaultVertexLimit);

/// Vertices reachable from v by one transportation-simplex pivot: enter a
/// nonbasic cell and cancel along the unique basis cycle. Pivots that do not
/// move the point (degenerate steps) are dropped; results are deduplicated
/// and sorted lexicographically.
std::vector<Vertex> pivot_neighbors(const Vertex& v,
                                    const TransportationPolytope& p);

/// Exact membership test: matching shape, nonnegative cells, and both
/// marginal systems satisfied exactly.
bool is_member(const Coupling& s, const TransportationPolytope& p);

/// Membership for a raw matrix that may not even be a distribution;
/// used by certificate verification.
bool is_member_matrix(const RationalMatrix& s, const TransportationPolytope& p);

/// Affine dimension (rows-1)*(cols-1) of the polytope on its positive
/// support. Diagnostic only.
Index dimension(const TransportationPolytope& p);

namespace detail {

using Cell = std::pair<Index, Index>;

/// Result of the depth-first walk over feasible bases. Vertices are keyed by
/// their flattened cell values on the positive submatrix (zero-marginal rows
/// and columns are stripped before walking); each maps to the
/// lexicographically smallest basis seen for that vertex.
struct VertexWalk {
  std::map<std::vector<Rational>, std::vector<Cell>> vertices;
  std::vector<Index> row_map;  // stripped row index -> original row index
  std::vector<Index> col_map;
  Index full_rows = 0;
  Index full_cols = 0;
  bool complete = false;
  std::uint64_t bases_visited = 0;

  RationalMatrix inflate(const std::vector<Rational>& cells) const;
  std::vector<Cell> remap_basis(const std::vector<Cell>& basis) const;
};

/// Walks the pivot graph over all feasible bases starting from the
/// north-west corner basis, recording every distinct coupling. Degenerate
/// pivots are followed so that degenerate vertices cannot hide neighbors.
/// Stops early (complete=false) when more than `vertex_limit` distinct
/// vertices appear or `basis_budget` bases have been expanded.
VertexWalk walk_vertices(const TransportationPolytope& p,
                         std::uint64_t vertex_limit,
                         std::uint64_t basis_budget = 0);

}  // namespace detail

}  // namespace minent
