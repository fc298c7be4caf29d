#include <doctest.h>

#include <random>

#include "posft/sturm.hpp"
#include "posft/verify.hpp"

using namespace posft;

namespace {

Polynomial from_ints(std::initializer_list<long> ascending, Var v = Var::rho) {
  std::vector<Rational> c;
  for (long x : ascending) c.emplace_back(x);
  return Polynomial(std::move(c), v);
}

}  // namespace

TEST_SUITE_BEGIN("sturm");

TEST_CASE("chain construction examples") {
  SturmSequence s = sturm_sequence(from_ints({2, -3, 1}));
  REQUIRE(s.chain.size() == 3);
  CHECK(s.chain[0] == from_ints({2, -3, 1}));
  CHECK(s.chain[1] == from_ints({-3, 2}));
  CHECK(s.chain[2] == Polynomial::constant(Rational(1, 4)));
  CHECK_FALSE(s.squarefree_reduced);

  SturmSequence rep = sturm_sequence(from_ints({1, -2, 1}));  // (rho-1)^2
  CHECK(rep.squarefree_reduced);
  CHECK(rep.chain[0].degree() == 1);

  SturmSequence h4 = sturm_sequence(from_ints({3, -12, 4}));
  REQUIRE(h4.chain.size() == 3);
  CHECK(h4.chain.back().is_constant());
  CHECK(sign_of(h4.chain.back().coeff(0)) > 0);

  CHECK_THROWS_AS(sturm_sequence(Polynomial::constant(Rational(2))), std::domain_error);
  CHECK_THROWS_AS(sturm_sequence(Polynomial(Var::rho)), std::domain_error);
}

TEST_CASE("sign variation counting") {
  SturmSequence s = sturm_sequence(from_ints({2, -3, 1}));
  CHECK(sign_variations(s, Bound::at(Rational(0))) == 2);   // (+,-,+)
  CHECK(sign_variations(s, Bound::pos_infinity()) == 0);    // (+,+,+)
  CHECK(sign_variations(s, Bound::neg_infinity()) == 2);    // (+,-,+)

  // zero-skip convention: signs (+,0,-) count one change
  SturmSequence fake;
  fake.chain = {from_ints({1}), Polynomial(Var::rho), from_ints({-1})};
  CHECK(sign_variations(fake, Bound::at(Rational(5))) == 1);
}

TEST_CASE("root counting examples") {
  RootCount rc = count_positive_roots(from_ints({2, -3, 1}));
  CHECK(rc.count == 2);
  CHECK_FALSE(rc.root_at_lo);

  CHECK(count_roots(from_ints({1, 0, 1}), Bound::neg_infinity(), Bound::pos_infinity()).count == 0);

  // the pure-H4 bracket has both rho-roots positive
  RootCount h4 = count_positive_roots(from_ints({3, -12, 4}));
  CHECK(h4.count == 2);

  // roots at interval ends: (0, 2] holds roots 1 and 2, flag at left end
  Polynomial p = from_ints({0, -3, 1});  // rho(rho-3) roots 0, 3
  RootCount r2 = count_positive_roots(p);
  CHECK(r2.count == 1);
  CHECK(r2.root_at_lo);
  RootCount r3 = count_roots(from_ints({2, -3, 1}), Bound::at(Rational(0)), Bound::at(Rational(2)));
  CHECK(r3.count == 2);
  CHECK(r3.root_at_hi);
  RootCount r4 = count_roots(from_ints({2, -3, 1}), Bound::at(Rational(1)), Bound::at(Rational(2)));
  CHECK(r4.count == 1);  // (1, 2] excludes the root at 1
  CHECK(r4.root_at_lo);

  CHECK(count_positive_roots(Polynomial::constant(Rational(3))).count == 0);
  CHECK_THROWS_AS(count_roots(from_ints({1, 1}), Bound::at(Rational(2)), Bound::at(Rational(2))),
                  std::domain_error);
}

TEST_CASE("scale invariance and chain identity") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<long> coeff(-8, 8);
  for (int t = 0; t < 150; ++t) {
    std::vector<Rational> c;
    for (int k = 0; k <= 5; ++k) c.emplace_back(coeff(rng));
    Polynomial p(std::move(c), Var::rho);
    if (p.is_zero() || p.is_constant()) continue;
    int base = count_positive_roots(p).count;
    CHECK(count_positive_roots(p.scaled(Rational(7, 3))).count == base);
    CHECK(count_positive_roots(p.scaled(Rational(-2))).count == base);
    CHECK(count_roots(p, Bound::neg_infinity(), Bound::pos_infinity()).count <= p.degree());

    SturmSequence s = sturm_sequence(p);
    for (size_t m = 2; m < s.chain.size(); ++m) {
      // S_{m-2} = q S_{m-1} - c S_m for a positive content factor c
      auto [q, rem] = s.chain[m - 2].divmod(s.chain[m - 1]);
      Polynomial negrem = -rem;
      if (negrem.is_zero()) {
        CHECK(s.chain[m].is_zero());
      } else {
        Rational ratio = negrem.leading() / s.chain[m].leading();
        CHECK(sign_of(ratio) > 0);
        CHECK(s.chain[m].scaled(ratio) == negrem);
      }
    }
  }
}

TEST_CASE("distinct linear factors reach the degree bound") {
  Polynomial p = from_ints({-1, 1}) * from_ints({-2, 1}) * from_ints({3, 1}) * from_ints({0, 1});
  CHECK(count_roots(p, Bound::neg_infinity(), Bound::pos_infinity()).count == 4);
}

TEST_CASE("agreement with the companion-matrix oracle") {
  verify::OracleReport rep = verify::suite_sturm_oracle_agreement(1000, 20250810);
  CHECK(rep.pass);
}

TEST_SUITE_END();
