#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "minent/polytope.hpp"
#include "oracles.hpp"

using namespace minent;

namespace {

TransportationPolytope paper_polytope() {
  return {Distribution::from_strings({"1/9", "3/9", "5/9"}),
          Distribution::from_strings({"2/9", "4/9", "3/9"})};
}

TransportationPolytope uniform2() {
  return {Distribution::from_strings({"1/2", "1/2"}),
          Distribution::from_strings({"1/2", "1/2"})};
}

std::vector<Rational> flat(const RationalMatrix& m) {
  std::vector<Rational> out;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

bool basis_is_spanning_forest(const BasisTree& basis,
                              const TransportationPolytope& p) {
  const Index n = p.rows();
  const Index m = p.cols();
  if (static_cast<Index>(basis.basic_cells.size()) > n + m - 1) return false;
  // acyclic via union-find
  std::vector<int> parent(static_cast<std::size_t>(n + m));
  for (std::size_t k = 0; k < parent.size(); ++k)
    parent[k] = static_cast<int>(k);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a)
      a = parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
    return a;
  };
  std::set<int> touched;
  for (const auto& [i, j] : basis.basic_cells) {
    int a = find(static_cast<int>(i));
    int b = find(static_cast<int>(n + j));
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    touched.insert(static_cast<int>(i));
    touched.insert(static_cast<int>(n + j));
  }
  // spans every node with positive marginal, in one component
  std::set<int> roots;
  for (Index i = 0; i < n; ++i)
    if (p.row_marginal[i] > 0) {
      if (!touched.count(static_cast<int>(i))) return false;
      roots.insert(find(static_cast<int>(i)));
    }
  for (Index j = 0; j < m; ++j)
    if (p.col_marginal[j] > 0) {
      if (!touched.count(static_cast<int>(n + j))) return false;
      roots.insert(find(static_cast<int>(n + j)));
    }
  return roots.size() <= 1;
}

bool support_in_basis(const Vertex& v) {
  std::set<std::pair<Index, Index>> cells(v.basis.basic_cells.begin(),
                                          v.basis.basic_cells.end());
  for (Index i = 0; i < v.coupling.rows(); ++i)
    for (Index j = 0; j < v.coupling.cols(); ++j)
      if (v.coupling(i, j) != 0 && !cells.count({i, j})) return false;
  return true;
}

}  // namespace

TEST_CASE("north-west corner reproduces the reference 3x3 matrix") {
  Vertex v = northwest_corner(paper_polytope());
  Coupling expected = Coupling::from_strings(
      {{"1/9", "0", "0"}, {"1/9", "2/9", "0"}, {"0", "2/9", "3/9"}});
  CHECK(v.coupling == expected);
  CHECK(v.basis.basic_cells.size() == 5);
  CHECK(support_in_basis(v));
}

TEST_CASE("north-west corner on a single-cell polytope") {
  TransportationPolytope p{Distribution::from_strings({"1"}),
                           Distribution::from_strings({"1"})};
  Vertex v = northwest_corner(p);
  CHECK(v.coupling == Coupling::from_strings({{"1"}}));
  CHECK(v.basis.basic_cells.size() == 1);
}

TEST_CASE("north-west corner forced fill on the 2x2 uniform polytope") {
  Vertex v = northwest_corner(uniform2());
  CHECK(v.coupling == Coupling::from_strings({{"1/2", "0"}, {"0", "1/2"}}));
  CHECK(v.basis.basic_cells.size() == 3);  // one degenerate zero cell
}

TEST_CASE("2x2 uniform polytope has exactly the two permutation vertices") {
  std::vector<Vertex> vs = enumerate_vertices(uniform2(), 10);
  REQUIRE(vs.size() == 2);
  // lexicographic order: the anti-diagonal sorts first
  CHECK(vs[0].coupling == Coupling::from_strings({{"0", "1/2"}, {"1/2", "0"}}));
  CHECK(vs[1].coupling == Coupling::from_strings({{"1/2", "0"}, {"0", "1/2"}}));
}

TEST_CASE("a single-row polytope is a point") {
  TransportationPolytope p{Distribution::from_strings({"1"}),
                           Distribution::from_strings({"1/5", "2/5", "2/5"})};
  std::vector<Vertex> vs = enumerate_vertices(p, 10);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].coupling == Coupling::from_strings({{"1/5", "2/5", "2/5"}}));
}

TEST_CASE("vertex enumeration of the reference polytope matches brute force") {
  TransportationPolytope p = paper_polytope();
  std::vector<Vertex> vs = enumerate_vertices(p, 1000);
  std::vector<RationalMatrix> expected = oracle::vertices_bruteforce(p);
  REQUIRE(vs.size() == expected.size());
  CHECK(vs.size() == 13);
  for (std::size_t k = 0; k < vs.size(); ++k)
    CHECK(rational_matrix_equal(vs[k].coupling.cells(), expected[k]));
}

TEST_CASE("enumeration throws when the vertex count exceeds the limit") {
  CHECK_THROWS_AS(enumerate_vertices(paper_polytope(), 5), LimitExceeded);
}

TEST_CASE("pivot neighbors of the 2x2 diagonal vertex") {
  Vertex diag = northwest_corner(uniform2());
  std::vector<Vertex> nb = pivot_neighbors(diag, uniform2());
  REQUIRE(nb.size() == 1);
  CHECK(nb[0].coupling == Coupling::from_strings({{"0", "1/2"}, {"1/2", "0"}}));
}

TEST_CASE("the unique vertex of a one-row polytope has no pivot neighbors") {
  TransportationPolytope p{Distribution::from_strings({"1"}),
                           Distribution::from_strings({"1/3", "1/3", "1/3"})};
  Vertex v = northwest_corner(p);
  CHECK(pivot_neighbors(v, p).empty());
}

TEST_CASE("pivot neighbors of the north-west vertex match oracle adjacency") {
  TransportationPolytope p = paper_polytope();
  Vertex nw = northwest_corner(p);
  std::vector<Vertex> nb = pivot_neighbors(nw, p);

  std::vector<RationalMatrix> all = oracle::vertices_bruteforce(p);
  std::set<std::vector<Rational>> expected;
  for (const RationalMatrix& v : all)
    if (oracle::adjacent_bruteforce(nw.coupling.cells(), v))
      expected.insert(flat(v));
  CHECK(expected.size() == 4);

  std::set<std::vector<Rational>> got;
  for (const Vertex& v : nb) got.insert(flat(v.coupling.cells()));
  CHECK(got == expected);
}

TEST_CASE("membership checks") {
  TransportationPolytope p = paper_polytope();
  Coupling nw = Coupling::from_strings(
      {{"1/9", "0", "0"}, {"1/9", "2/9", "0"}, {"0", "2/9", "3/9"}});
  CHECK(is_member(nw, p));
  CHECK(is_member(Coupling(p.row_marginal.probs() *
                           p.col_marginal.probs().transpose()),
                  p));
  TransportationPolytope q{Distribution::from_strings({"1/2", "1/2"}),
                           Distribution::from_strings({"1/3", "2/3"})};
  CHECK_FALSE(
      is_member(Coupling::from_strings({{"1/2", "0"}, {"0", "1/2"}}), q));
}

TEST_CASE("dimension diagnostic") {
  CHECK(dimension(paper_polytope()) == 4);
  TransportationPolytope degenerate{
      Distribution::from_strings({"1/2", "0", "1/2"}),
      Distribution::from_strings({"1"})};
  CHECK(dimension(degenerate) == 0);
}

TEST_CASE("random polytopes: enumeration matches the support-pattern oracle") {
  gen::Rng rng(424242);
  for (int trial = 0; trial < 100; ++trial) {
    Index n = 2 + trial % 3;
    Index m = 2 + (trial / 3) % 3;
    TransportationPolytope p = gen::polytope(rng, n, m);
    std::vector<Vertex> vs = enumerate_vertices(p, 100000);
    std::vector<RationalMatrix> expected = oracle::vertices_bruteforce(p);
    REQUIRE(vs.size() == expected.size());
    for (std::size_t k = 0; k < vs.size(); ++k) {
      CHECK(rational_matrix_equal(vs[k].coupling.cells(), expected[k]));
      CHECK(support_in_basis(vs[k]));
      CHECK(basis_is_spanning_forest(vs[k].basis, p));
    }
  }
}

TEST_CASE("random polytopes: vertices have small support and integer scaling") {
  gen::Rng rng(5150);
  for (int trial = 0; trial < 100; ++trial) {
    Index n = 2 + trial % 3;
    Index m = 2 + (trial / 5) % 3;
    TransportationPolytope p = gen::polytope(rng, n, m);
    // common denominator of the integer-scaled marginals
    Integer denom = 1;
    for (Index i = 0; i < n; ++i)
      mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(),
              p.row_marginal[i].get_den().get_mpz_t());
    for (Index j = 0; j < m; ++j)
      mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(),
              p.col_marginal[j].get_den().get_mpz_t());
    for (const Vertex& v : enumerate_vertices(p, 100000)) {
      int nonzero = 0;
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < m; ++j) {
          const Rational& cell = v.coupling(i, j);
          if (cell != 0) ++nonzero;
          Rational scaled = cell * denom;
          CHECK(scaled.get_den() == 1);  // integrality of vertices
        }
      CHECK(nonzero <= n + m - 1);
    }
  }
}

TEST_CASE("enumeration output is closed and connected under pivot neighbors") {
  gen::Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    Index n = 2 + trial % 3;
    Index m = 2 + (trial / 4) % 3;
    TransportationPolytope p = gen::polytope(rng, n, m);
    std::vector<Vertex> vs = enumerate_vertices(p, 100000);
    std::map<std::vector<Rational>, std::size_t> index;
    for (std::size_t k = 0; k < vs.size(); ++k)
      index.emplace(flat(vs[k].coupling.cells()), k);

    // undirected pivot graph on the enumerated vertices
    std::vector<std::set<std::size_t>> adj(vs.size());
    for (std::size_t k = 0; k < vs.size(); ++k)
      for (const Vertex& nb : pivot_neighbors(vs[k], p)) {
        auto it = index.find(flat(nb.coupling.cells()));
        REQUIRE(it != index.end());  // closure
        adj[k].insert(it->second);
        adj[it->second].insert(k);
      }
    // connectivity
    std::vector<char> seen(vs.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          stack.push_back(v);
        }
    }
    CHECK(reached == vs.size());
  }
}
