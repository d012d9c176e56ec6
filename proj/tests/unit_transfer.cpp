// Inner-form segment data: conductors, depths, the transfer to the split
// form, Godement-Jacquet exponents and the deterministic enumeration.

#include <catch2/catch_amalgamated.hpp>

#include "ramdepth/innerforms.hpp"

using namespace ramdepth;

namespace {

struct HasCode : Catch::Matchers::MatcherGenericBase {
  std::string code;
  explicit HasCode(std::string c) : code(std::move(c)) {}
  bool match(const Error& e) const { return e.code() == code; }
  std::string describe() const override { return "has error code " + code; }
};

EssL2Datum segment(long n, long d, long m, long a, long b, long s, Rat depth,
                   bool unramified) {
  EssL2Datum e;
  e.form = InnerForm{n, d, m};
  e.sigma = CuspidalDatum{a, depth, s, unramified};
  e.b = b;
  return e;
}

}  // namespace

TEST_CASE("inner forms and cuspidal conductors") {
  validate_inner_form(InnerForm{6, 2, 3});
  REQUIRE_THROWS_MATCHES(validate_inner_form(InnerForm{6, 2, 2}), Error,
                         HasCode("SchemaError"));
  REQUIRE_THROWS_MATCHES(validate_inner_form(InnerForm{0, 0, 1}), Error,
                         HasCode("SchemaError"));

  InnerForm quat{2, 2, 1};
  REQUIRE(cuspidal_conductor(CuspidalDatum{1, Rat(0), 2, true}, quat) == 1);
  // Ramified: a * d * (depth + 1), checked against the formula by hand.
  REQUIRE(cuspidal_conductor(CuspidalDatum{1, Rat(1, 2), 1, false}, quat) == 3);
  REQUIRE(cuspidal_conductor(CuspidalDatum{2, Rat(1, 3), 2, false},
                             InnerForm{6, 3, 2}) == 8);
  // Non-integer a * d * (depth + 1) must be rejected, not rounded.
  REQUIRE_THROWS_MATCHES(
      cuspidal_conductor(CuspidalDatum{1, Rat(1, 2), 1, false}, InnerForm{1, 1, 1}),
      Error, HasCode("SchemaError"));
}

TEST_CASE("segment validation rejects inconsistent data") {
  // Baseline passes.
  validate_essl2(segment(2, 2, 1, 1, 1, 1, Rat(1, 2), false));

  // a * b must equal m.
  REQUIRE_THROWS_MATCHES(validate_essl2(segment(4, 2, 2, 1, 1, 1, Rat(0), false)),
                         Error, HasCode("SchemaError"));
  // Depth must be nonnegative.
  REQUIRE_THROWS_MATCHES(
      validate_essl2(segment(2, 2, 1, 1, 1, 1, Rat(-1, 2), false)), Error,
      HasCode("SchemaError"));
  // Depth denominator must divide a * d.
  REQUIRE_THROWS_MATCHES(
      validate_essl2(segment(2, 2, 1, 1, 1, 1, Rat(1, 3), false)), Error,
      HasCode("SchemaError"));
  // s_sigma must divide a * d.
  REQUIRE_THROWS_MATCHES(validate_essl2(segment(2, 2, 1, 1, 1, 4, Rat(0), false)),
                         Error, HasCode("SchemaError"));
  // Split-form data need s_sigma = 1.
  REQUIRE_THROWS_MATCHES(validate_essl2(segment(4, 1, 4, 2, 2, 2, Rat(0), false)),
                         Error, HasCode("SchemaError"));
  // Unramified sigma needs depth 0 ...
  REQUIRE_THROWS_MATCHES(
      validate_essl2(segment(2, 2, 1, 1, 1, 2, Rat(1, 2), true)), Error,
      HasCode("SchemaError"));
  // ... a = 1 ...
  REQUIRE_THROWS_MATCHES(validate_essl2(segment(4, 2, 2, 2, 1, 2, Rat(0), true)),
                         Error, HasCode("SchemaError"));
  // ... and s_sigma = d.
  REQUIRE_THROWS_MATCHES(validate_essl2(segment(2, 2, 1, 1, 1, 1, Rat(0), true)),
                         Error, HasCode("SchemaError"));
  // Ramified: s_sigma must divide the cuspidal conductor (2 divides a*d = 4
  // but not f(sigma) = 5).
  REQUIRE_THROWS_MATCHES(
      validate_essl2(segment(4, 4, 1, 1, 1, 2, Rat(1, 4), false)), Error,
      HasCode("SchemaError"));
}

TEST_CASE("conductor and depth of a segment") {
  // Steinberg-like: f = n - 1, depth 0.
  EssL2Datum st = segment(2, 2, 1, 1, 1, 2, Rat(0), true);
  REQUIRE(conductor_essl2(st) == 1);
  REQUIRE(depth_essl2(st) == Rat(0));

  // Ramified cases; the oracle is the closed formula b * a * d * (depth + 1)
  // and (f - n) / n, evaluated independently here.
  struct Case {
    EssL2Datum e;
    long f;
    Rat depth;
  };
  std::vector<Case> cases = {
      {segment(2, 2, 1, 1, 1, 1, Rat(1, 2), false), 3, Rat(1, 2)},
      {segment(4, 2, 2, 1, 2, 1, Rat(1, 2), false), 6, Rat(1, 2)},
      {segment(6, 3, 2, 2, 1, 2, Rat(1, 3), false), 8, Rat(1, 3)},
      {segment(3, 1, 3, 1, 3, 1, Rat(2), false), 9, Rat(2)},
  };
  for (const auto& c : cases) {
    long ad = c.e.sigma.a * c.e.form.d;
    Rat f_oracle = Rat(c.e.b) * Rat(ad) * (c.e.sigma.depth + 1);
    REQUIRE(f_oracle == Rat(c.f));
    REQUIRE(conductor_essl2(c.e) == c.f);
    REQUIRE(depth_essl2(c.e) == c.depth);
    REQUIRE((Rat(c.f) - Rat(c.e.form.n)) / Rat(c.e.form.n) == c.depth);
  }
}

TEST_CASE("godement-jacquet exponent is linear in the additive level") {
  EssL2Datum e = segment(6, 3, 2, 2, 1, 2, Rat(1, 3), false);
  long f = conductor_essl2(e);
  REQUIRE(godement_jacquet_f(e, -1) == f - 6);
  REQUIRE(godement_jacquet_f(e, 0) == f);
  REQUIRE(godement_jacquet_f(e, 3) == f + 18);
  // Level-independence of the difference across two data on the same form.
  EssL2Datum e2 = segment(6, 3, 2, 1, 2, 3, Rat(0), false);
  for (long c : {-2L, -1L, 0L, 1L, 5L}) {
    REQUIRE(godement_jacquet_f(e, c) - godement_jacquet_f(e2, c) ==
            conductor_essl2(e) - conductor_essl2(e2));
  }
}

TEST_CASE("transfer to the split form preserves conductor and depth") {
  // Quaternionic Steinberg-like datum: segment stretches by s_sigma = d.
  EssL2Datum st = segment(2, 2, 1, 1, 1, 2, Rat(0), true);
  EssL2Datum st_star = jl_transfer(st);
  REQUIRE(st_star.form.n == 2);
  REQUIRE(st_star.form.d == 1);
  REQUIRE(st_star.form.m == 2);
  REQUIRE(st_star.b == 2);
  REQUIRE(st_star.sigma.a == 1);
  REQUIRE(st_star.sigma.unramified);
  REQUIRE(conductor_essl2(st_star) == 1);
  REQUIRE(depth_essl2(st_star) == Rat(0));

  // Ramified depth-1/2 datum on the quaternion division algebra.
  EssL2Datum r = segment(2, 2, 1, 1, 1, 1, Rat(1, 2), false);
  EssL2Datum r_star = jl_transfer(r);
  REQUIRE(r_star.b == 1);
  REQUIRE(r_star.sigma.a == 2);
  REQUIRE(r_star.sigma.s_sigma == 1);
  REQUIRE(r_star.sigma.depth == Rat(1, 2));
  REQUIRE(conductor_essl2(r_star) == 3);

  // Torsion number 2 on a degree-3 algebra: b doubles, a* = a * d / s.
  EssL2Datum t = segment(6, 3, 2, 2, 1, 2, Rat(1, 3), false);
  EssL2Datum t_star = jl_transfer(t);
  REQUIRE(t_star.b == 2);
  REQUIRE(t_star.sigma.a == 3);
  REQUIRE(cuspidal_conductor(t_star.sigma, t_star.form) == 4);
  REQUIRE(t_star.sigma.depth == Rat(1, 3));
  REQUIRE(conductor_essl2(t_star) == 8);
  REQUIRE(depth_essl2(t_star) == Rat(1, 3));

  // A split-form datum transfers to itself.
  EssL2Datum sp = segment(4, 1, 4, 2, 2, 1, Rat(1, 2), false);
  EssL2Datum sp_star = jl_transfer(sp);
  REQUIRE(sp_star.b == sp.b);
  REQUIRE(sp_star.sigma.a == sp.sigma.a);
  REQUIRE(conductor_essl2(sp_star) == conductor_essl2(sp));
}

TEST_CASE("parameter skeleton reproduces the segment invariants") {
  EssL2Datum t = segment(6, 3, 2, 2, 1, 2, Rat(1, 3), false);
  PreservationReport rep = verify_depth_preservation(t);
  REQUIRE(rep.pass);
  REQUIRE(rep.f_pi == 8);
  REQUIRE(rep.f_parameter == 8);
  REQUIRE(rep.d_pi == Rat(1, 3));
  REQUIRE(rep.d_parameter == Rat(1, 3));
  REQUIRE(rep.transfer.b == 2);

  // Unramified-sigma case goes through the (b - 1) bookkeeping term.
  EssL2Datum st = segment(3, 3, 1, 1, 1, 3, Rat(0), true);
  PreservationReport rep2 = verify_depth_preservation(st);
  REQUIRE(rep2.pass);
  REQUIRE(rep2.f_pi == 2);
  REQUIRE(rep2.f_parameter == 2);
  REQUIRE(rep2.d_parameter == Rat(0));
}

TEST_CASE("depth of a Levi datum is the maximal factor depth") {
  IrrDatum pi;
  pi.form = InnerForm{4, 1, 4};
  pi.factors.push_back(segment(2, 1, 2, 1, 2, 1, Rat(0), true));
  pi.factors.push_back(segment(2, 1, 2, 2, 1, 1, Rat(1, 2), false));
  REQUIRE(depth_irr(pi) == Rat(1, 2));

  IrrDatum empty;
  empty.form = InnerForm{2, 1, 2};
  REQUIRE_THROWS_MATCHES(depth_irr(empty), Error, HasCode("SchemaError"));

  IrrDatum wrong_algebra;
  wrong_algebra.form = InnerForm{4, 1, 4};
  wrong_algebra.factors.push_back(segment(4, 2, 2, 1, 2, 1, Rat(1, 2), false));
  REQUIRE_THROWS_MATCHES(depth_irr(wrong_algebra), Error, HasCode("SchemaError"));

  IrrDatum short_levi;
  short_levi.form = InnerForm{4, 1, 4};
  short_levi.factors.push_back(segment(2, 1, 2, 1, 2, 1, Rat(0), true));
  REQUIRE_THROWS_MATCHES(depth_irr(short_levi), Error, HasCode("SchemaError"));
}

TEST_CASE("enumeration is deterministic and fully valid") {
  std::vector<EssL2Datum> all = enumerate_essl2(12, 4, 6);
  REQUIRE(all.size() == 4776);
  // Every entry round-trips through the transfer with both invariants intact;
  // sample a slice to keep the unit suite fast (the full sweep runs in the
  // acceptance binary).
  for (std::size_t i = 0; i < all.size(); i += 97) {
    const EssL2Datum& e = all[i];
    EssL2Datum star = jl_transfer(e);
    REQUIRE(conductor_essl2(star) == conductor_essl2(e));
    REQUIRE(depth_essl2(star) == depth_essl2(e));
    REQUIRE(godement_jacquet_f(e, 2) == conductor_essl2(e) + 2 * e.form.n);
  }
  // Determinism: a second enumeration agrees entry by entry.
  std::vector<EssL2Datum> again = enumerate_essl2(12, 4, 6);
  REQUIRE(again.size() == all.size());
  for (std::size_t i = 0; i < all.size(); i += 311) {
    REQUIRE(again[i].form.n == all[i].form.n);
    REQUIRE(again[i].sigma.depth == all[i].sigma.depth);
    REQUIRE(again[i].b == all[i].b);
  }
}
