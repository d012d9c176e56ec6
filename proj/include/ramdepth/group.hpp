#ifndef RAMDEPTH_GROUP_HPP_
#define RAMDEPTH_GROUP_HPP_

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace ramdepth {

using Subgroup = std::vector<int>;  // sorted element indices, always contains 0

// Finite group on elements {0, ..., n-1} given by its multiplication table,
// with 0 the identity.  Conjugacy classes are computed on construction and
// ordered by their smallest member, so the class of the identity is first.
class FiniteGroup {
 public:
  FiniteGroup(int n, std::vector<int> mul) : n_(n), mul_(std::move(mul)) {
    validate();
    build_inverses();
    build_classes();
  }

  int order() const { return n_; }
  int op(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int conj_by(int s, int a) const { return op(op(s, a), inv(s)); }  // s a s^{-1}
  const std::vector<int>& mul_table() const { return mul_; }

  int pow(int a, long e) const {
    long o = element_order(a);
    e %= o;
    if (e < 0) e += o;
    int r = 0;
    for (long i = 0; i < e; ++i) r = op(r, a);
    return r;
  }

  long element_order(int a) const {
    long o = 1;
    int x = a;
    while (x != 0) {
      x = op(x, a);
      ++o;
    }
    return o;
  }

  long exponent() const {
    long e = 1;
    for (int a = 0; a < n_; ++a) e = lcm_long(e, element_order(a));
    return e;
  }

  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int a) const { return class_of_[static_cast<std::size_t>(a)]; }
  int num_classes() const { return static_cast<int>(classes_.size()); }

 private:
  void validate() {
    require(n_ >= 1, "NotAGroup", "empty group");
    require(mul_.size() == static_cast<std::size_t>(n_) * n_, "NotAGroup",
            "multiplication table size mismatch");
    for (int v : mul_)
      require(v >= 0 && v < n_, "NotAGroup", "table entry out of range");
    for (int a = 0; a < n_; ++a) {
      require(op(0, a) == a && op(a, 0) == a, "NotAGroup",
              "element 0 is not an identity");
    }
    for (int a = 0; a < n_; ++a) {
      bool has_inverse = false;
      for (int b = 0; b < n_; ++b)
        if (op(a, b) == 0 && op(b, a) == 0) has_inverse = true;
      require(has_inverse, "NotAGroup", "element without inverse");
    }
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          require(op(op(a, b), c) == op(a, op(b, c)), "NotAGroup",
                  "multiplication is not associative");
  }

  void build_inverses() {
    inv_.assign(static_cast<std::size_t>(n_), 0);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (op(a, b) == 0) inv_[static_cast<std::size_t>(a)] = b;
  }

  void build_classes() {
    class_of_.assign(static_cast<std::size_t>(n_), -1);
    for (int a = 0; a < n_; ++a) {
      if (class_of_[static_cast<std::size_t>(a)] >= 0) continue;
      std::set<int> orbit;
      for (int s = 0; s < n_; ++s) orbit.insert(conj_by(s, a));
      std::vector<int> cls(orbit.begin(), orbit.end());
      int idx = static_cast<int>(classes_.size());
      for (int x : cls) class_of_[static_cast<std::size_t>(x)] = idx;
      classes_.push_back(std::move(cls));
    }
  }

  int n_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

inline bool subgroup_contains(const Subgroup& h, int x) {
  return std::binary_search(h.begin(), h.end(), x);
}

inline bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.empty() || !subgroup_contains(h, 0)) return false;
  for (int a : h) {
    if (a < 0 || a >= g.order()) return false;
    if (!subgroup_contains(h, g.inv(a))) return false;
    for (int b : h)
      if (!subgroup_contains(h, g.op(a, b))) return false;
  }
  return true;
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (int s = 0; s < g.order(); ++s)
    for (int a : h)
      if (!subgroup_contains(h, g.conj_by(s, a))) return false;
  return true;
}

inline bool subgroup_subset(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::set<int> elems{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int s : gens) {
        for (int y : {g.op(x, s), g.op(x, g.inv(s))})
          if (elems.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return Subgroup(elems.begin(), elems.end());
}

inline Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, int s) {
  Subgroup r;
  r.reserve(h.size());
  for (int x : h) r.push_back(g.conj_by(s, x));
  std::sort(r.begin(), r.end());
  return r;
}

inline Subgroup whole_group(const FiniteGroup& g) {
  Subgroup all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  return all;
}

// Subgroup generated by commutators of elements of h (h itself a subgroup).
inline Subgroup derived_subgroup(const FiniteGroup& g, const Subgroup& h) {
  std::vector<int> comms;
  for (int a : h)
    for (int b : h)
      comms.push_back(g.op(g.op(g.inv(a), g.inv(b)), g.op(a, b)));
  return generated_subgroup(g, comms);
}

struct QuotientGroup {
  FiniteGroup group;
  std::vector<int> proj;  // ambient element -> coset index
};

// G/N for N normal; cosets are labelled by their smallest member and sorted,
// so the identity coset is index 0.
inline QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& n) {
  require(is_subgroup(g, n), "NotAGroup", "quotient by a non-subgroup");
  require(is_normal(g, n), "NotNormal", "quotient by a non-normal subgroup");
  std::vector<int> coset_min(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> reps;
  for (int a = 0; a < g.order(); ++a) {
    if (coset_min[static_cast<std::size_t>(a)] >= 0) continue;
    int mn = a;
    std::vector<int> members;
    for (int x : n) members.push_back(g.op(a, x));
    for (int m : members) mn = std::min(mn, m);
    for (int m : members) coset_min[static_cast<std::size_t>(m)] = mn;
    reps.push_back(mn);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<int> index_of(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < reps.size(); ++i)
    index_of[static_cast<std::size_t>(reps[i])] = static_cast<int>(i);
  int q = static_cast<int>(reps.size());
  std::vector<int> proj(static_cast<std::size_t>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    proj[static_cast<std::size_t>(a)] =
        index_of[static_cast<std::size_t>(coset_min[static_cast<std::size_t>(a)])];
  std::vector<int> mul(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      mul[static_cast<std::size_t>(i) * q + j] =
          proj[static_cast<std::size_t>(g.op(reps[static_cast<std::size_t>(i)],
                                             reps[static_cast<std::size_t>(j)]))];
  return {FiniteGroup(q, std::move(mul)), std::move(proj)};
}

// Representatives (smallest member) of the double cosets K\G/H.
inline std::vector<int> double_coset_reps(const FiniteGroup& g, const Subgroup& k,
                                          const Subgroup& h) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> reps;
  for (int a = 0; a < g.order(); ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    reps.push_back(a);
    for (int x : k)
      for (int y : h) seen[static_cast<std::size_t>(g.op(g.op(x, a), y))] = 1;
  }
  return reps;
}

// All degree-one characters of an abelian group, as exponent vectors: the
// j-th character sends element a to zeta_M^{chars[j][a]} where M is the group
// exponent.  Built by extending along a generating chain; each extension of a
// partial character along g with g^t the first power inside the span has
// exactly t choices of value, so all |Q| characters are produced.  Sorted
// lexicographically, which places the trivial character first.
struct AbelianCharacters {
  long modulus;
  std::vector<std::vector<long>> chars;
};

inline AbelianCharacters abelian_characters(const FiniteGroup& q) {
  for (int a = 0; a < q.order(); ++a)
    for (int b = 0; b < q.order(); ++b)
      require(q.op(a, b) == q.op(b, a), "NotAGroup",
              "character enumeration needs an abelian group");
  long m = q.exponent();
  std::vector<std::vector<long>> chars{std::vector<long>(
      static_cast<std::size_t>(q.order()), 0)};
  Subgroup span{0};
  while (static_cast<int>(span.size()) < q.order()) {
    int gen = 0;
    while (subgroup_contains(span, gen)) ++gen;
    long t = 1;
    int p = gen;
    while (!subgroup_contains(span, p)) {
      p = q.op(p, gen);
      ++t;
    }
    // p = gen^t is the first power landing in the current span.
    std::vector<std::vector<long>> extended;
    for (const auto& chi : chars) {
      long r = chi[static_cast<std::size_t>(p)];
      require(r % t == 0, "NotAGroup", "abelian character extension failed");
      for (long j = 0; j < t; ++j) {
        long val = (r / t + j * (m / t)) % m;
        std::vector<long> ext(static_cast<std::size_t>(q.order()), -1);
        for (int s : span) {
          int x = s;  // runs over s * gen^e
          for (long e = 0; e < t; ++e) {
            ext[static_cast<std::size_t>(x)] =
                (chi[static_cast<std::size_t>(s)] + e * val) % m;
            x = q.op(x, gen);
          }
        }
        extended.push_back(std::move(ext));
      }
    }
    chars = std::move(extended);
    std::vector<int> gens(span.begin(), span.end());
    gens.push_back(gen);
    span = generated_subgroup(q, gens);
  }
  std::sort(chars.begin(), chars.end());
  return {m, std::move(chars)};
}

}  // namespace ramdepth

#endif
