// Groups, filtrations, class functions, conductors and projective kernels.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <memory>

#include "ramdepth/conductor.hpp"
#include "ramdepth/fixtures.hpp"
#include "ramdepth/projective.hpp"

using namespace ramdepth;

namespace {

struct HasCode : Catch::Matchers::MatcherGenericBase {
  std::string code;
  explicit HasCode(std::string c) : code(std::move(c)) {}
  bool match(const Error& e) const { return e.code() == code; }
  std::string describe() const override { return "has error code " + code; }
};

FilteredGroupPtr make_fg(FiniteGroup g, std::vector<Subgroup> levels,
                         std::optional<long> p = std::nullopt) {
  return std::make_shared<const FilteredGroup>(std::move(g), std::move(levels), p);
}

}  // namespace

TEST_CASE("finite group validation and structure") {
  FiniteGroup c4 = cyclic_group(4);
  REQUIRE(c4.order() == 4);
  REQUIRE(c4.num_classes() == 4);
  REQUIRE(c4.element_order(1) == 4);
  REQUIRE(c4.element_order(2) == 2);
  REQUIRE(c4.inv(1) == 3);
  REQUIRE(c4.pow(1, 3) == 3);

  REQUIRE_THROWS_MATCHES(FiniteGroup(2, {0, 1, 1, 1}), Error, HasCode("NotAGroup"));
  REQUIRE_THROWS_MATCHES(FiniteGroup(2, {1, 0, 0, 1}), Error, HasCode("NotAGroup"));
  REQUIRE_THROWS_MATCHES(FiniteGroup(2, {0, 1, 1}), Error, HasCode("NotAGroup"));

  FiniteGroup s3 = semidirect_product(3, 2, 2);
  REQUIRE(s3.order() == 6);
  REQUIRE(s3.num_classes() == 3);
  REQUIRE(derived_subgroup(s3, whole_group(s3)) == Subgroup{0, 1, 2});
  REQUIRE(generated_subgroup(s3, {1}) == Subgroup{0, 1, 2});
  REQUIRE(is_normal(s3, {0, 1, 2}));
  REQUIRE_FALSE(is_normal(s3, generated_subgroup(s3, {3})));

  FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
  AbelianCharacters chars = abelian_characters(v4);
  REQUIRE(chars.chars.size() == 4);  // four degree-one characters
  REQUIRE(chars.modulus == 2);
}

TEST_CASE("filtration validation") {
  FiniteGroup c2 = cyclic_group(2);
  REQUIRE_THROWS_MATCHES(
      FilteredGroup(c2, {Subgroup{0}, Subgroup{0, 1}, Subgroup{0}}, 2L), Error,
      HasCode("NotNested"));
  REQUIRE_THROWS_MATCHES(FilteredGroup(c2, {Subgroup{0, 1}}, 2L), Error,
                         HasCode("NoTrivialTail"));
  FiniteGroup s3 = semidirect_product(3, 2, 2);
  Subgroup t = generated_subgroup(s3, {3});  // order 2, not normal
  REQUIRE_THROWS_MATCHES(
      FilteredGroup(s3, {whole_group(s3), t, Subgroup{0}}, 3L), Error,
      HasCode("NotNormal"));
}

TEST_CASE("herbrand transition function and upper numbering") {
  GaloisFixture q8 = quaternion_fixture();
  const FilteredGroup& fg = *q8.fg;
  REQUIRE(herbrand_phi(fg, Rat(1)) == Rat(1));
  REQUIRE(herbrand_phi(fg, Rat(2)) == Rat(5, 4));
  REQUIRE(herbrand_phi(fg, Rat(3)) == Rat(3, 2));
  REQUIRE(herbrand_phi(fg, Rat(7, 2)) == Rat(25, 16));
  REQUIRE(herbrand_psi(fg, Rat(5, 4)) == Rat(2));
  REQUIRE(herbrand_psi(fg, Rat(3, 2)) == Rat(3));
  // phi/psi are mutually inverse at non-breakpoint arguments too
  for (long num = 0; num <= 12; ++num) {
    Rat u = Rat(num, 3);
    REQUIRE(herbrand_psi(fg, herbrand_phi(fg, u)) == u);
  }
  REQUIRE(upper_subgroup(fg, Rat(3, 2)).size() == 2);
  REQUIRE(upper_subgroup(fg, Rat(0)).size() == 8);
  REQUIRE(upper_subgroup(fg, Rat(2)).size() == 1);
}

TEST_CASE("kernel depth cases") {
  GaloisFixture c6 = cyclic_chain_fixture({6, 6, 3, 3, 1}, 3L, {1, 2, 3});
  const FilteredGroup& fg = *c6.fg;
  REQUIRE(depth_of_kernel(fg, kernel_of(c6.characters[0].second)) == Rat(1));
  REQUIRE(depth_of_kernel(fg, kernel_of(c6.characters[2].second)) == Rat(0));
  REQUIRE(depth_of_kernel(fg, whole_group(fg.group())) == Rat(0));
  GaloisFixture un = cyclic_chain_fixture({2, 1}, 2L, {1});
  REQUIRE(depth_of_kernel(*un.fg, Subgroup{0}) == Rat(0));  // unramified
}

TEST_CASE("induction, restriction, Frobenius reciprocity") {
  GaloisFixture s3 = s3_fixture();
  const SubgroupWithCharacter& xi = s3.subchars[0].second;
  ClassFunction ind = induce(xi);
  REQUIRE(ind.degree() == 2);
  REQUIRE(inner_product(ind, ind) == Rat(1));  // irreducible
  REQUIRE(ind.genuine());

  // reciprocity against the trivial character, computed on both sides
  ClassFunction triv = constant_function(s3.fg, 1, true);
  Rat lhs = inner_product(ind, triv);
  Rat rhs = inner_product_on(xi.carrier(), xi.values(),
                             restrict_to(triv, xi.carrier()));
  REQUIRE(lhs == rhs);
  REQUIRE(lhs == Rat(0));

  // induction is blind to conjugation of the inducing pair
  ClassFunction ind2 = induce(conjugate_character(xi, 3));
  REQUIRE(inner_product(ind, ind2) == Rat(1));

  REQUIRE(dim_fixed(ind, s3.fg->lower(0)) == 0);
  REQUIRE(dim_fixed(ind, Subgroup{0}) == 2);
  REQUIRE(dim_fixed(direct_sum(ind, triv), s3.fg->lower(0)) == 1);
}

TEST_CASE("artin conductor and the kernel-depth identity") {
  GaloisFixture c6 = cyclic_chain_fixture({6, 6, 3, 3, 1}, 3L, {1, 2, 3});
  REQUIRE(artin_conductor(*c6.fg, c6.characters[0].second) == 2);
  REQUIRE(artin_conductor(*c6.fg, c6.characters[2].second) == 1);

  GaloisFixture q8 = quaternion_fixture();
  const ClassFunction& chi2 = q8.characters[0].second;
  REQUIRE(artin_conductor(*q8.fg, chi2) == 5);
  // depth from the kernel equals a/n - 1 when inertia has no fixed vectors
  REQUIRE(depth_of_kernel(*q8.fg, kernel_of(chi2)) ==
          depth_elliptic_via_conductor(2, 5, false));
  REQUIRE(depth_elliptic_via_conductor(3, 0, true) == Rat(0));
  REQUIRE_THROWS_MATCHES(depth_elliptic_via_conductor(3, 2, false), Error,
                         HasCode("ConductorTooSmall"));

  // a fractional weighted sum must be rejected, not rounded
  FiniteGroup c2 = cyclic_group(2);
  FilteredGroupPtr fg = make_fg(
      c2, {Subgroup{0, 1}, Subgroup{0, 1}, Subgroup{0, 1}, Subgroup{0}}, 2L);
  ClassFunction halfsum(fg, {Cyc(1), Cyc(0)}, false);
  REQUIRE_THROWS_MATCHES(artin_conductor(*fg, halfsum), Error,
                         HasCode("NonIntegerFixedDim"));

  // integral fixed dimensions can still sum to a fractional total when the
  // chain breaks the usual congruences; that must surface, not round
  GaloisFixture skew = cyclic_chain_fixture({6, 6, 3, 1}, 3L, {1});
  REQUIRE_THROWS_MATCHES(artin_conductor(*skew.fg, skew.characters[0].second),
                         Error, HasCode("NonIntegerConductor"));
}

TEST_CASE("weil-deligne bookkeeping") {
  GaloisFixture c6 = cyclic_chain_fixture({6, 6, 3, 3, 1}, 3L, {1});
  WDParameter phi({WDSummand{InertialDatum{FiniteOrbit{c6.fg, c6.characters[0].second}}, 1},
                   WDSummand{InertialDatum{UnramifiedChar{}}, 2}});
  REQUIRE(phi.dim() == 3);
  REQUIRE(conductor_wd(phi) == 3);  // 2 from the orbit, b-1 = 1 from the line
  REQUIRE(depth_wd(phi) == Rat(1));

  WDParameter sym({WDSummand{InertialDatum{RamifiedCharSymbol{6, 2, std::nullopt}}, 2}});
  REQUIRE(conductor_wd(sym) == 12);
  REQUIRE(depth_wd(sym) == Rat(2));  // 6/2 - 1
  REQUIRE(eps_exponent_wd(conductor_wd(sym), sym.dim(), -1) == 8);
}

TEST_CASE("projective kernel and scalar classes") {
  GaloisFixture s3 = s3_fixture();
  MonomialParameter mp{s3.fg, {ProjSummand(s3.subchars[0].second)}};
  ProjectiveKernelReport rep = depth_projective(mp);

  // oracle for a single induced summand: group elements of the inducing
  // subgroup whose whole conjugacy orbit stays inside and takes one value
  const SubgroupWithCharacter& xi = s3.subchars[0].second;
  const FiniteGroup& g = s3.fg->group();
  Subgroup oracle;
  for (int w : xi.carrier()) {
    bool scalar = true;
    for (int s = 0; s < g.order(); ++s) {
      int c = g.conj_by(s, w);
      if (!xi.contains(c) || !(xi.value_at(c) == xi.value_at(w))) scalar = false;
    }
    if (scalar) oracle.push_back(w);
  }
  std::sort(oracle.begin(), oracle.end());
  REQUIRE(rep.proj_kernel == oracle);
  REQUIRE(rep.proj_kernel == Subgroup{0});
  REQUIRE(rep.depth_bar == rep.depth_proj);
  REQUIRE_FALSE(rep.strict);

  GaloisFixture q8 = quaternion_fixture();
  const ClassFunction& chi2 = q8.characters[0].second;
  MonomialParameter mq{q8.fg, {ProjSummand(chi2)}};
  ProjectiveKernelReport rq = depth_projective(mq);
  // the scalar classes of the faithful 2-dimensional character: the center
  REQUIRE(rq.proj_kernel.size() == 2);
  int minus_one = rq.proj_kernel[1];
  REQUIRE(chi2.value_at(minus_one) == Cyc(-2));
  REQUIRE(q8.fg->group().element_order(minus_one) == 2);
  REQUIRE(rq.depth_bar == Rat(3, 2));
  REQUIRE(rq.depth_proj == Rat(1));
  REQUIRE(rq.strict);
}

TEST_CASE("degree-one twists leave projective data alone") {
  GaloisFixture s3 = s3_fixture();
  MonomialParameter mp{s3.fg, {ProjSummand(s3.subchars[0].second)}};
  int n = s3.fg->group().order();
  std::vector<Cyc> sign(static_cast<std::size_t>(n), Cyc(1));
  for (int w = 3; w < n; ++w) sign[static_cast<std::size_t>(w)] = Cyc(-1);
  MonomialParameter tw = twist_parameter(mp, sign);

  ProjectiveKernelReport r0 = depth_projective(mp);
  ProjectiveKernelReport r1 = depth_projective(tw);
  REQUIRE(r0.proj_kernel == r1.proj_kernel);
  REQUIRE(r0.depth_proj == r1.depth_proj);
  REQUIRE(is_essentially_tame(mp) == is_essentially_tame(tw));

  // a non-multiplicative assignment is not a character
  std::vector<Cyc> bad(static_cast<std::size_t>(n), Cyc(1));
  bad[1] = Cyc(-1);
  REQUIRE_THROWS_MATCHES(twist_parameter(mp, bad), Error, HasCode("SchemaError"));
}

TEST_CASE("minimal twist depth searches every degree-one character") {
  GaloisFixture c3 = cyclic_chain_fixture({3, 3, 3, 1}, 3L, {1});
  MonomialParameter mp{c3.fg, {ProjSummand(c3.characters[0].second)}};
  TwistSearchResult tw = min_twist_depth(mp);
  REQUIRE(tw.twist_count == 3);
  REQUIRE(tw.min_depth == Rat(0));  // the inverse character trivializes the lift
  REQUIRE(tw.essentially_tame);
  REQUIRE(tw.min_depth == tw.depth_proj);

  OctahedralFixture oct = binary_octahedral_fixture();
  MonomialParameter mo{oct.base.fg, {ProjSummand(oct.base.characters[0].second)}};
  TwistSearchResult to = min_twist_depth(mo);
  REQUIRE(to.twist_count == 2);
  REQUIRE(to.min_depth == Rat(1, 2));
  REQUIRE_FALSE(to.essentially_tame);
  REQUIRE(to.min_depth > to.depth_proj);
}
