// Exact arithmetic layer: rationals, polynomials, rational functions and
// cyclotomic numbers.

#include <catch2/catch_amalgamated.hpp>

#include "ramdepth/cyclotomic.hpp"
#include "ramdepth/polynomial.hpp"
#include "ramdepth/rational.hpp"

using namespace ramdepth;

namespace {

struct HasCode : Catch::Matchers::MatcherGenericBase {
  std::string code;
  explicit HasCode(std::string c) : code(std::move(c)) {}
  bool match(const Error& e) const { return e.code() == code; }
  std::string describe() const override { return "has error code " + code; }
};

}  // namespace

TEST_CASE("rational helpers") {
  REQUIRE(make_rat(2, 4) == Rat(1, 2));
  REQUIRE(make_rat(-2, 4) == Rat(-1, 2));
  REQUIRE(is_integer(make_rat(6, 3)));
  REQUIRE_FALSE(is_integer(make_rat(1, 3)));
  REQUIRE(floor_rat(make_rat(-1, 2)) == -1);
  REQUIRE(floor_rat(make_rat(5, 2)) == 2);
  REQUIRE(ceil_rat(make_rat(-1, 2)) == 0);
  REQUIRE(ceil_rat(make_rat(5, 2)) == 3);
  REQUIRE(rat_str(make_rat(-3, 6)) == "-1/2");
  REQUIRE(rat_str(Rat(7)) == "7");
  REQUIRE(rat_as_long(Rat(42)) == 42);
  REQUIRE_THROWS_MATCHES(rat_as_long(make_rat(1, 2)), Error, HasCode("SchemaError"));
  REQUIRE_THROWS_MATCHES(make_rat(1, 0), Error, HasCode("SchemaError"));
  REQUIRE(lcm_long(4, 6) == 12);
}

TEST_CASE("polynomial arithmetic") {
  using P = Polynomial<Rat>;
  P x = P::monomial(Rat(1), 1);
  P p = P::one() + x * Rat(2) + x * x * Rat(3);  // 1 + 2x + 3x^2
  REQUIRE(p.deg() == 2);
  REQUIRE(p.eval(Rat(2)) == Rat(17));
  REQUIRE((p - p).is_zero());
  REQUIRE(p * P::one() == p);

  SECTION("structure maps") {
    REQUIRE(p.scaled(Rat(2)).eval(Rat(1)) == Rat(12));
    // stretched substitutes x -> a*x
    REQUIRE(p.stretched(Rat(2)) == P::one() + x * Rat(4) + x * x * Rat(12));
    REQUIRE(p.shifted_up(2) == x * x + x * x * x * Rat(2) + x * x * x * x * Rat(3));
    // reversal against degree bound: x^d * p(1/x)
    REQUIRE(p.reversed(2) == P(Rat(3)) + x * Rat(2) + x * x);
    REQUIRE(p.reversed(3) == (P(Rat(3)) + x * Rat(2) + x * x).shifted_up(1));
  }

  SECTION("division and gcd") {
    P prod = p * (x - P::one());
    REQUIRE(prod / (x - P::one()) == p);
    REQUIRE(prod % (x - P::one()) == P());
    REQUIRE(poly_gcd(prod, x - P::one()) == x - P::one());
    REQUIRE_THROWS_MATCHES(p / P(), Error, HasCode("DivisionByZero"));
  }
}

TEST_CASE("rational functions normalize") {
  using P = Polynomial<Rat>;
  using R = RationalFunction<Rat>;
  P x = P::monomial(Rat(1), 1);
  R f(x * x - P::one(), x - P::one());  // (x^2-1)/(x-1) = x+1
  REQUIRE(f == R(x + P::one()));
  REQUIRE(f.is_polynomial());
  R g = f / R(x + P::one());
  REQUIRE(g == R(P::one()));
  REQUIRE((f - f).is_zero());
  REQUIRE_THROWS_MATCHES(R(P::one(), P()), Error, HasCode("DivisionByZero"));
  REQUIRE_THROWS_MATCHES(f / R(P()), Error, HasCode("DivisionByZero"));
}

TEST_CASE("cyclotomic identities") {
  Cyc z8 = Cyc::root_of_unity(8, 1);
  REQUIRE(Cyc::root_of_unity(8, 4) == Cyc(-1));
  REQUIRE(z8 * Cyc::root_of_unity(8, 7) == Cyc(1));
  REQUIRE(z8 * z8 == Cyc::root_of_unity(4, 1));  // canonical across conductors

  Cyc z3 = Cyc::root_of_unity(3, 1);
  REQUIRE(z3 + z3 * z3 == Cyc(-1));
  Cyc sum(0);
  for (long k = 0; k < 6; ++k) sum = sum + Cyc::root_of_unity(6, k);
  REQUIRE(sum.is_zero());

  SECTION("conjugation, inversion, norm") {
    Cyc z5 = Cyc::root_of_unity(5, 2);
    REQUIRE(z5.conj() == Cyc::root_of_unity(5, 3));
    REQUIRE(z5 * z5.inverse() == Cyc(1));
    REQUIRE(z5.norm_squared() == Cyc(1));
    Cyc mixed = Cyc(Rat(1, 2)) + z5;
    REQUIRE(mixed * mixed.inverse() == Cyc(1));
    REQUIRE_THROWS_MATCHES(Cyc(0).inverse(), Error, HasCode("DivisionByZero"));
  }

  SECTION("rationality detection") {
    REQUIRE(Cyc(Rat(3, 4)).is_rational());
    REQUIRE(Cyc(Rat(3, 4)).as_rational() == Rat(3, 4));
    REQUIRE((z3 + z3.conj() + Cyc(1)).is_rational());  // 2cos(2pi/3) + 1 = 0
    REQUIRE_FALSE(z8.is_rational());
    REQUIRE_THROWS_MATCHES(z8.as_rational(), Error, HasCode("NonIntegerInnerProduct"));
  }
}
