#ifndef RAMDEPTH_FIXTURES_HPP_
#define RAMDEPTH_FIXTURES_HPP_

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "classfunc.hpp"
#include "cyclotomic.hpp"
#include "filtration.hpp"
#include "group.hpp"

namespace ramdepth {

// ---------------------------------------------------------------------------
// Elementary group constructions.

inline FiniteGroup cyclic_group(int n) {
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mul[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  return FiniteGroup(n, std::move(mul));
}

// (a1, b1) * (a2, b2) with index a * |B| + b.
inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      mul[static_cast<std::size_t>(x) * n + y] =
          a.op(x / nb, y / nb) * nb + b.op(x % nb, y % nb);
  return FiniteGroup(n, std::move(mul));
}

// C_n semidirect C_m where the generator of C_m acts by x -> k*x on C_n.
// Element (i, j) has index j*n + i, so the normal C_n occupies indices 0..n-1.
inline FiniteGroup semidirect_product(int n, int m, long k) {
  long kp = 1;
  for (int j = 0; j < m; ++j) kp = (kp * k) % n;
  require(kp % n == 1 % n, "NotAGroup", "semidirect action must have order dividing m");
  std::vector<long> kpow(static_cast<std::size_t>(m));
  kpow[0] = 1;
  for (int j = 1; j < m; ++j) kpow[static_cast<std::size_t>(j)] = (kpow[j - 1] * k) % n;
  int order = n * m;
  std::vector<int> mul(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      int i1 = x % n, j1 = x / n, i2 = y % n, j2 = y / n;
      int i = static_cast<int>((i1 + kpow[static_cast<std::size_t>(j1)] * i2) % n);
      int j = (j1 + j2) % m;
      mul[static_cast<std::size_t>(x) * order + y] = j * n + i;
    }
  return FiniteGroup(order, std::move(mul));
}

// ---------------------------------------------------------------------------
// Closure of 2x2 matrices over cyclotomic scalars; used to build the exact
// quaternion and binary octahedral groups.

using Mat2 = std::array<Cyc, 4>;

inline Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  return Mat2{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
              a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline bool mat_eq(const Mat2& a, const Mat2& b) {
  for (int k = 0; k < 4; ++k)
    if (!(a[k] == b[k])) return false;
  return true;
}

struct MatrixGroup {
  FiniteGroup group;
  std::vector<Mat2> reps;  // reps[i] represents element i; identity is 0

  int index_of(const Mat2& m) const {
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (mat_eq(reps[i], m)) return static_cast<int>(i);
    fail("UnknownName", "matrix is not an element of the group");
  }
};

inline MatrixGroup matrix_group_closure(const std::vector<Mat2>& gens) {
  const Mat2 id{Cyc(1), Cyc(0), Cyc(0), Cyc(1)};
  std::vector<Mat2> elems{id};
  auto find = [&elems](const Mat2& m) -> int {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (mat_eq(elems[i], m)) return static_cast<int>(i);
    return -1;
  };
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const Mat2& g : gens) {
      Mat2 prod = mat_mul(elems[head], g);
      if (find(prod) < 0) elems.push_back(prod);
    }
    require(elems.size() <= 4096, "NotAGroup", "matrix closure did not terminate");
  }
  int n = static_cast<int>(elems.size());
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int p = find(mat_mul(elems[static_cast<std::size_t>(i)],
                           elems[static_cast<std::size_t>(j)]));
      require(p >= 0, "NotAGroup", "matrix set is not closed");
      mul[static_cast<std::size_t>(i) * n + j] = p;
    }
  return MatrixGroup{FiniteGroup(n, std::move(mul)), std::move(elems)};
}

inline ClassFunction trace_character(const FilteredGroupPtr& fg,
                                     const std::vector<Mat2>& reps) {
  const FiniteGroup& g = fg->group();
  std::vector<Cyc> vals;
  vals.reserve(static_cast<std::size_t>(g.num_classes()));
  for (int c = 0; c < g.num_classes(); ++c) {
    int rep = g.classes()[static_cast<std::size_t>(c)][0];
    vals.push_back(reps[static_cast<std::size_t>(rep)][0] +
                   reps[static_cast<std::size_t>(rep)][3]);
  }
  return ClassFunction(fg, std::move(vals), true);
}

// ---------------------------------------------------------------------------
// Named fixture bundles.

struct GaloisFixture {
  FilteredGroupPtr fg;
  std::vector<std::pair<std::string, ClassFunction>> characters;
  std::vector<std::pair<std::string, SubgroupWithCharacter>> subchars;
};

// Cyclic group of order `orders[0]` filtered by the subgroups of the listed
// orders (orders[i+1] is the order of the i-th ramification subgroup); each
// named character k sends the generator to zeta_n^k.
inline GaloisFixture cyclic_chain_fixture(const std::vector<long>& orders,
                                          std::optional<long> p,
                                          const std::vector<long>& char_ks) {
  require(!orders.empty(), "SchemaError", "need at least one level order");
  int n = static_cast<int>(orders[0]);
  FiniteGroup g = cyclic_group(n);
  std::vector<Subgroup> levels;
  for (long d : orders) {
    require(d >= 1 && n % d == 0, "SchemaError",
            "level orders must divide the group order");
    Subgroup h;
    for (int x = 0; x < n; x += n / static_cast<int>(d)) h.push_back(x);
    levels.push_back(std::move(h));
  }
  auto fg = std::make_shared<const FilteredGroup>(std::move(g), std::move(levels), p);
  GaloisFixture fx;
  fx.fg = fg;
  for (long k : char_ks) {
    std::vector<Cyc> vals;
    for (int c = 0; c < fg->group().num_classes(); ++c) {
      int rep = fg->group().classes()[static_cast<std::size_t>(c)][0];
      vals.push_back(Cyc::root_of_unity(n, (k * rep) % n));
    }
    fx.characters.emplace_back("chi" + std::to_string(k),
                               ClassFunction(fg, std::move(vals), true));
  }
  return fx;
}

// S3 presented as C3 semidirect C2, totally ramified at p = 3 with orders
// [6, 3, 3, 1]; carries the faithful character xi3 of the normal C3.
inline GaloisFixture s3_fixture() {
  FiniteGroup g = semidirect_product(3, 2, 2);
  Subgroup c3{0, 1, 2};
  std::vector<Subgroup> levels{whole_group(g), c3, c3, Subgroup{0}};
  auto fg = std::make_shared<const FilteredGroup>(std::move(g), std::move(levels), 3L);
  std::vector<Cyc> xi{Cyc(1), Cyc::root_of_unity(3, 1), Cyc::root_of_unity(3, 2)};
  GaloisFixture fx;
  fx.fg = fg;
  fx.subchars.emplace_back("xi3", SubgroupWithCharacter(fg, c3, xi));
  return fx;
}

// The same S3 data inside the larger ambient group S3 x C2 (element (a, b)
// has index 2a + b); the extra direct factor enlarges the twist search space
// without changing any depth.
inline GaloisFixture s3_times_c2_fixture() {
  FiniteGroup g = direct_product(semidirect_product(3, 2, 2), cyclic_group(2));
  Subgroup c3{0, 2, 4};  // (i, 0) for i in C3
  std::vector<Subgroup> levels{whole_group(g), c3, c3, Subgroup{0}};
  auto fg = std::make_shared<const FilteredGroup>(std::move(g), std::move(levels), 3L);
  std::vector<Cyc> xi{Cyc(1), Cyc::root_of_unity(3, 1), Cyc::root_of_unity(3, 2)};
  GaloisFixture fx;
  fx.fg = fg;
  fx.subchars.emplace_back("xi3", SubgroupWithCharacter(fg, c3, xi));
  return fx;
}

// Frobenius group C5 semidirect C4 (the action doubles), totally ramified at
// p = 5 with orders [20, 20, 5, 1]; carries the faithful character xi5 of C5.
inline GaloisFixture f20_fixture() {
  FiniteGroup g = semidirect_product(5, 4, 2);
  Subgroup c5{0, 1, 2, 3, 4};
  std::vector<Subgroup> levels{whole_group(g), whole_group(g), c5, Subgroup{0}};
  auto fg = std::make_shared<const FilteredGroup>(std::move(g), std::move(levels), 5L);
  std::vector<Cyc> xi;
  for (int i = 0; i < 5; ++i) xi.push_back(Cyc::root_of_unity(5, i));
  GaloisFixture fx;
  fx.fg = fg;
  fx.subchars.emplace_back("xi5", SubgroupWithCharacter(fg, c5, xi));
  return fx;
}

// Quaternion group of order 8 as exact 2x2 matrices, filtered with orders
// [8, 8, 8, 2, 2, 1] at p = 2; carries the faithful 2-dimensional trace
// character.
inline GaloisFixture quaternion_fixture() {
  Cyc i4 = Cyc::root_of_unity(4, 1);
  Mat2 im{i4, Cyc(0), Cyc(0), Cyc(0) - i4};
  Mat2 jm{Cyc(0), Cyc(1), Cyc(-1), Cyc(0)};
  MatrixGroup mg = matrix_group_closure({im, jm});
  require(mg.group.order() == 8, "NotAGroup", "quaternion closure must have order 8");
  Mat2 minus{Cyc(-1), Cyc(0), Cyc(0), Cyc(-1)};
  Subgroup center = generated_subgroup(mg.group, {mg.index_of(minus)});
  Subgroup whole = whole_group(mg.group);
  std::vector<Subgroup> levels{whole, whole, whole, center, center, Subgroup{0}};
  auto fg = std::make_shared<const FilteredGroup>(mg.group, std::move(levels), 2L);
  GaloisFixture fx;
  fx.fg = fg;
  fx.characters.emplace_back("chi2", trace_character(fg, mg.reps));
  return fx;
}

// Binary tetrahedral group of order 24, the totally ramified inertia story of
// the octahedral fixture on its own: stored level orders [24, 8, 2, 2].
inline GaloisFixture binary_tetrahedral_fixture() {
  Cyc i4 = Cyc::root_of_unity(4, 1);
  Cyc half = Cyc(Rat(1, 2));
  Mat2 im{i4, Cyc(0), Cyc(0), Cyc(0) - i4};
  Mat2 jm{Cyc(0), Cyc(1), Cyc(-1), Cyc(0)};
  Mat2 om{(i4 - Cyc(1)) * half, (i4 + Cyc(1)) * half,
          (i4 - Cyc(1)) * half, (Cyc(-1) - i4) * half};
  MatrixGroup mg = matrix_group_closure({im, jm, om});
  require(mg.group.order() == 24, "NotAGroup",
          "binary tetrahedral closure must have order 24");
  Mat2 minus{Cyc(-1), Cyc(0), Cyc(0), Cyc(-1)};
  Subgroup q8 = generated_subgroup(mg.group, {mg.index_of(im), mg.index_of(jm)});
  Subgroup center = generated_subgroup(mg.group, {mg.index_of(minus)});
  Subgroup whole = whole_group(mg.group);
  std::vector<Subgroup> levels{whole, whole, q8, center, center, Subgroup{0}};
  auto fg = std::make_shared<const FilteredGroup>(mg.group, std::move(levels), 2L);
  GaloisFixture fx;
  fx.fg = fg;
  fx.characters.emplace_back("chi2", trace_character(fg, mg.reps));
  return fx;
}

struct OctahedralFixture {
  GaloisFixture base;
  Subgroup binary_tetrahedral;  // order 24
  Subgroup quaternion;          // order 8
  Subgroup center;              // order 2
};

// Binary octahedral group of order 48 as exact matrices over Q(zeta_8),
// generated by diag(zeta_8, zeta_8^7), the j rotation, and the order-3
// quaternion (-1 + i + j + k)/2.  Filtration orders [48, 24, 8, 2, 2, 1]
// at p = 2.  Characters: the faithful 2-dimensional trace chi2 and the
// 3-dimensional ad3 = chi2 (x) conj(chi2) - 1.
inline OctahedralFixture binary_octahedral_fixture() {
  Cyc z = Cyc::root_of_unity(8, 1);
  Cyc i4 = Cyc::root_of_unity(4, 1);
  Cyc half = Cyc(Rat(1, 2));
  Mat2 sigma{z, Cyc(0), Cyc(0), Cyc::root_of_unity(8, 7)};
  Mat2 jm{Cyc(0), Cyc(1), Cyc(-1), Cyc(0)};
  Mat2 om{(i4 - Cyc(1)) * half, (i4 + Cyc(1)) * half,
          (i4 - Cyc(1)) * half, (Cyc(-1) - i4) * half};
  MatrixGroup mg = matrix_group_closure({sigma, jm, om});
  require(mg.group.order() == 48, "NotAGroup",
          "binary octahedral closure must have order 48");
  Mat2 im{i4, Cyc(0), Cyc(0), Cyc(0) - i4};
  Mat2 minus{Cyc(-1), Cyc(0), Cyc(0), Cyc(-1)};
  int ii = mg.index_of(im), ji = mg.index_of(jm), oi = mg.index_of(om);
  Subgroup two_t = generated_subgroup(mg.group, {ii, ji, oi});
  Subgroup q8 = generated_subgroup(mg.group, {ii, ji});
  Subgroup center = generated_subgroup(mg.group, {mg.index_of(minus)});
  require(two_t.size() == 24 && q8.size() == 8 && center.size() == 2,
          "NotAGroup", "unexpected subgroup orders in the octahedral tower");
  std::vector<Subgroup> levels{whole_group(mg.group), two_t, q8,
                               center, center, Subgroup{0}};
  auto fg = std::make_shared<const FilteredGroup>(mg.group, std::move(levels), 2L);

  ClassFunction chi2 = trace_character(fg, mg.reps);
  ClassFunction prod = tensor(chi2, dual(chi2));
  std::vector<Cyc> ad_vals;
  for (int c = 0; c < fg->group().num_classes(); ++c) {
    int rep = fg->group().classes()[static_cast<std::size_t>(c)][0];
    ad_vals.push_back(prod.value_at(rep) - Cyc(1));
  }
  ClassFunction ad3(fg, std::move(ad_vals), true);

  OctahedralFixture fx;
  fx.base.fg = fg;
  fx.base.characters.emplace_back("chi2", chi2);
  fx.base.characters.emplace_back("ad3", ad3);
  fx.binary_tetrahedral = std::move(two_t);
  fx.quaternion = std::move(q8);
  fx.center = std::move(center);
  return fx;
}

}  // namespace ramdepth

#endif
