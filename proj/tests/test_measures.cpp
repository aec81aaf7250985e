#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "minent/measures.hpp"
#include "oracles.hpp"

using namespace minent;

namespace {

// Independently computed reference values (512-bit natural-log evaluation),
// frozen to 40+ digits.
constexpr const char* kH_1_2_3_over_6 =
    "1.45914791702724475739353613864057492104657387";
constexpr const char* kH_northwest_over_9 =
    "2.19715972342414919131178712880191640348857957";

const Coupling kDiagHalf = Coupling::from_strings({{"1/2", "0"}, {"0", "1/2"}});
const Coupling kNorthwest = Coupling::from_strings(
    {{"1/9", "0", "0"}, {"1/9", "2/9", "0"}, {"0", "2/9", "3/9"}});

Coupling product_coupling(const Distribution& p, const Distribution& q) {
  return Coupling(p.probs() * q.probs().transpose());
}

}  // namespace

TEST_CASE("entropy of a point mass is exactly zero") {
  Entropy h = entropy(Distribution::from_strings({"1"}));
  CHECK(h.lower() == 0.0);
  CHECK(h.upper() == 0.0);
}

TEST_CASE("entropy of a fair coin is exactly one bit") {
  Entropy h = entropy(Distribution::from_strings({"1/2", "1/2"}));
  CHECK(h.contains(Rational(1)));
  CHECK(h.width() <= std::ldexp(1.0, -kDefaultWidthExp));
  CHECK(h.value() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("entropy of (1/6, 2/6, 3/6) matches the frozen reference") {
  Distribution p = Distribution::from_strings({"1/6", "2/6", "3/6"});
  Entropy h = entropy(p);
  auto frozen = oracle::RefValue::parse(kH_1_2_3_over_6);
  CHECK(frozen.inside(h));
  CHECK(oracle::entropy_bits(p.probs()).inside(h));
  CHECK(frozen.distance(oracle::entropy_bits(p.probs())) < 1e-40);
  CHECK(h.width() <= std::ldexp(1.0, -kDefaultWidthExp));
}

TEST_CASE("narrower width requests escalate precision") {
  Distribution p = Distribution::from_strings({"1/6", "2/6", "3/6"});
  Entropy h = entropy(p, 200);
  CHECK(h.width() <= std::ldexp(1.0, -200));
  CHECK(oracle::entropy_bits(p.probs()).inside(h));
}

TEST_CASE("joint entropy of two equal atoms is one bit") {
  CHECK(joint_entropy(kDiagHalf).contains(Rational(1)));
}

TEST_CASE("joint entropy of an independent pair adds the marginals") {
  Distribution u2 = Distribution::from_strings({"1/2", "1/2"});
  Entropy h = joint_entropy(product_coupling(u2, u2));
  CHECK(h.contains(Rational(2)));
}

TEST_CASE("joint entropy of the north-west example matches the reference") {
  Entropy h = joint_entropy(kNorthwest);
  CHECK(oracle::RefValue::parse(kH_northwest_over_9).inside(h));
  CHECK(oracle::entropy_bits(kNorthwest.cells()).inside(h));
}

TEST_CASE("H(X|Y) vanishes when X is determined by Y") {
  Entropy c = conditional_entropy_x_given_y(kDiagHalf);
  CHECK(c.lower() == 0.0);
  CHECK(c.upper() <= std::ldexp(1.0, -kDefaultWidthExp));
}

TEST_CASE("H(X|Y) of an independent pair is H(X)") {
  Distribution px = Distribution::from_strings({"1/2", "1/2"});
  Distribution qy = Distribution::from_strings({"1/3", "2/3"});
  Entropy c = conditional_entropy_x_given_y(product_coupling(px, qy));
  CHECK(c.contains(Rational(1)));
}

TEST_CASE("H(X|Y) equals H(X,Y) - H(Y) on an arbitrary 3x2 coupling") {
  Coupling s = Coupling::from_strings(
      {{"1/12", "2/12"}, {"3/12", "1/12"}, {"4/12", "1/12"}});
  Entropy lhs = conditional_entropy_x_given_y(s);
  Entropy rhs = joint_entropy(s) - entropy(col_marginal(s));
  CHECK(RealInterval::compare(lhs, rhs) == 0);  // enclosures overlap
}

TEST_CASE("mutual information of a product coupling is zero") {
  Distribution px = Distribution::from_strings({"1/4", "1/4", "1/2"});
  Distribution qy = Distribution::from_strings({"1/3", "2/3"});
  Entropy i = mutual_information(product_coupling(px, qy));
  CHECK(i.lower() == 0.0);
  CHECK(i.upper() <= std::ldexp(1.0, -kDefaultWidthExp));
}

TEST_CASE("mutual information of a diagonal coupling is one bit") {
  CHECK(mutual_information(kDiagHalf).contains(Rational(1)));
}

TEST_CASE("marginals of the north-west example") {
  CHECK(row_marginal(kNorthwest) ==
        Distribution::from_strings({"1/9", "3/9", "5/9"}));
  CHECK(col_marginal(kNorthwest) ==
        Distribution::from_strings({"2/9", "4/9", "3/9"}));
}

TEST_CASE("marginals of a one-row coupling") {
  Coupling s = Coupling::from_strings({{"1/3", "1/3", "1/3"}});
  CHECK(row_marginal(s) == Distribution::from_strings({"1"}));
}

TEST_CASE("determinism predicates") {
  CHECK(is_row_deterministic(kDiagHalf));
  CHECK(is_col_deterministic(kDiagHalf));
  Distribution u2 = Distribution::from_strings({"1/2", "1/2"});
  Coupling prod = product_coupling(u2, u2);
  CHECK_FALSE(is_row_deterministic(prod));
  CHECK_FALSE(is_col_deterministic(prod));
  CHECK_FALSE(is_row_deterministic(kNorthwest));
  CHECK_FALSE(is_col_deterministic(kNorthwest));
}

TEST_CASE("identities and inequalities hold on random couplings") {
  gen::Rng rng(20260810);
  for (int trial = 0; trial < 1000; ++trial) {
    Index n = 1 + trial % 3;
    Index m = 1 + (trial / 3) % 3;
    Coupling s = gen::coupling(rng, n + 1, m + 1);
    Entropy hx = entropy(row_marginal(s));
    Entropy hy = entropy(col_marginal(s));
    Entropy hxy = joint_entropy(s);
    Entropy mi = mutual_information(s);
    Entropy cxy = conditional_entropy_x_given_y(s);

    // chain identity: H(X,Y) - H(X) - H(Y) + I(X;Y) = 0
    RealInterval residual = hxy - hx - hy + mi;
    CHECK(residual.contains(Rational(0)));

    // max{H(X),H(Y)} <= H(X,Y) <= H(X)+H(Y)
    CHECK(RealInterval::compare(hxy, RealInterval::max(hx, hy)) >= 0);
    CHECK(RealInterval::compare(hxy, hx + hy) <= 0);

    // 0 <= I <= min{H(X),H(Y)}; 0 <= H(X|Y) <= H(X)
    CHECK(mi.upper() >= 0.0);
    CHECK(RealInterval::compare(mi, RealInterval::min(hx, hy)) <= 0);
    CHECK(cxy.upper() >= 0.0);
    CHECK(RealInterval::compare(cxy, hx) <= 0);

    // enclosures always contain the independent high-precision value
    CHECK(oracle::entropy_bits(s.cells()).inside(hxy));
  }
}

TEST_CASE("type invariants are enforced at construction") {
  RationalVector bad_sum(2);
  bad_sum << make_rational(1, 2), make_rational(1, 3);
  CHECK_THROWS_AS(Distribution{bad_sum}, std::invalid_argument);

  RationalVector negative(2);
  negative << make_rational(3, 2), make_rational(-1, 2);
  CHECK_THROWS_AS(Distribution{negative}, std::invalid_argument);

  RationalMatrix bad_cells(1, 2);
  bad_cells << make_rational(1, 2), make_rational(1, 3);
  CHECK_THROWS_AS(Coupling{bad_cells}, std::invalid_argument);

  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(parse_rational("2/4") == make_rational(1, 2));  // canonicalized
  CHECK(parse_rational("-3") == Rational(-3));
}

TEST_CASE("row-deterministic couplings attain H(X,Y) = H(X)") {
  gen::Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    Index n = 2 + trial % 3;
    Index m = 2 + (trial / 3) % 2;
    Distribution p = gen::distribution(rng, n);
    RationalMatrix cells = RationalMatrix::Constant(n, m, Rational(0));
    for (Index i = 0; i < n; ++i)
      cells(i, rng.uniform(0, m - 1)) += p[i];
    Coupling s{std::move(cells)};
    REQUIRE(is_row_deterministic(s));
    CHECK(RealInterval::compare(joint_entropy(s), entropy(row_marginal(s))) ==
          0);
  }
}
