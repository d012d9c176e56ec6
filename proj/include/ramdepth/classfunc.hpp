#ifndef RAMDEPTH_CLASSFUNC_HPP_
#define RAMDEPTH_CLASSFUNC_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "filtration.hpp"

namespace ramdepth {

using FilteredGroupPtr = std::shared_ptr<const FilteredGroup>;

inline bool same_group(const FilteredGroupPtr& a, const FilteredGroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->group().order() == b->group().order() &&
         a->group().mul_table() == b->group().mul_table() &&
         a->levels() == b->levels();
}

inline void require_same_group(const FilteredGroupPtr& a, const FilteredGroupPtr& b) {
  require(same_group(a, b), "GroupMismatch",
          "operands live on different groups");
}

// Class function with cyclotomic values, one per conjugacy class.  Genuine
// characters opt into validation: integral positive self-inner-product and a
// positive integer degree.  Virtual combinations (differences) carry
// genuine = false.
class ClassFunction {
 public:
  ClassFunction(FilteredGroupPtr fg, std::vector<Cyc> vals, bool genuine);

  const FilteredGroupPtr& group() const { return fg_; }
  const std::vector<Cyc>& class_values() const { return vals_; }
  bool genuine() const { return genuine_; }

  const Cyc& value_at(int g) const {
    return vals_[static_cast<std::size_t>(fg_->group().class_of(g))];
  }

  const Cyc& degree_value() const {
    return vals_[static_cast<std::size_t>(fg_->group().class_of(0))];
  }

  long degree() const { return rat_as_long(degree_value().as_rational()); }

 private:
  FilteredGroupPtr fg_;
  std::vector<Cyc> vals_;
  bool genuine_;
};

inline ClassFunction direct_sum(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a.group(), b.group());
  std::vector<Cyc> vals;
  for (std::size_t c = 0; c < a.class_values().size(); ++c)
    vals.push_back(a.class_values()[c] + b.class_values()[c]);
  return ClassFunction(a.group(), std::move(vals), a.genuine() && b.genuine());
}

inline ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a.group(), b.group());
  std::vector<Cyc> vals;
  for (std::size_t c = 0; c < a.class_values().size(); ++c)
    vals.push_back(a.class_values()[c] * b.class_values()[c]);
  return ClassFunction(a.group(), std::move(vals), a.genuine() && b.genuine());
}

inline ClassFunction dual(const ClassFunction& a) {
  std::vector<Cyc> vals;
  for (const auto& v : a.class_values()) vals.push_back(v.conj());
  return ClassFunction(a.group(), std::move(vals), a.genuine());
}

// Pointwise difference; the result is a virtual class function.
inline ClassFunction virtual_difference(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a.group(), b.group());
  std::vector<Cyc> vals;
  for (std::size_t c = 0; c < a.class_values().size(); ++c)
    vals.push_back(a.class_values()[c] - b.class_values()[c]);
  return ClassFunction(a.group(), std::move(vals), false);
}

inline ClassFunction constant_function(const FilteredGroupPtr& fg, long value,
                                       bool genuine) {
  std::vector<Cyc> vals(static_cast<std::size_t>(fg->group().num_classes()),
                        Cyc(value));
  return ClassFunction(fg, std::move(vals), genuine);
}

inline Rat inner_product(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a.group(), b.group());
  const FiniteGroup& g = a.group()->group();
  Cyc acc;
  for (int c = 0; c < g.num_classes(); ++c) {
    Cyc term = a.class_values()[static_cast<std::size_t>(c)] *
               b.class_values()[static_cast<std::size_t>(c)].conj();
    acc = acc + Cyc(static_cast<long>(g.classes()[static_cast<std::size_t>(c)].size())) * term;
  }
  require(acc.is_rational(), "NonIntegerInnerProduct",
          "inner product is not rational");
  Rat r = acc.as_rational() / Rat(g.order());
  if (a.genuine() && b.genuine())
    require(is_integer(r) && r >= 0, "NonIntegerInnerProduct",
            "inner product of genuine characters must be a nonnegative integer");
  return r;
}

inline ClassFunction::ClassFunction(FilteredGroupPtr fg, std::vector<Cyc> vals,
                                    bool genuine)
    : fg_(std::move(fg)), vals_(std::move(vals)), genuine_(genuine) {
  require(fg_ != nullptr, "GroupMismatch", "class function without a group");
  require(vals_.size() == static_cast<std::size_t>(fg_->group().num_classes()),
          "SchemaError", "class function needs one value per conjugacy class");
  if (genuine_) {
    Rat deg = degree_value().as_rational();
    require(is_integer(deg) && deg >= 1, "SchemaError",
            "genuine character needs a positive integer degree");
    Rat norm = inner_product(*this, *this);
    require(is_integer(norm) && norm >= 1, "NonIntegerInnerProduct",
            "genuine character with non-integral self inner product");
  }
}

// dim of the subspace fixed by the subgroup h: <Res_h chi, 1>.
inline long dim_fixed(const ClassFunction& chi, const Subgroup& h) {
  require(is_subgroup(chi.group()->group(), h), "NotAGroup",
          "fixed-space dimension needs a subgroup");
  Cyc acc;
  for (int x : h) acc = acc + chi.value_at(x);
  require(acc.is_rational(), "NonIntegerFixedDim",
          "fixed-space dimension is not rational");
  Rat r = acc.as_rational() / Rat(static_cast<long>(h.size()));
  require(is_integer(r) && r >= 0, "NonIntegerFixedDim",
          "fixed-space dimension must be a nonnegative integer");
  return rat_as_long(r);
}

// Elements where the character value equals its degree; for a genuine
// character this is the kernel of the underlying representation.
inline Subgroup kernel_of(const ClassFunction& chi) {
  const Cyc& deg = chi.degree_value();
  Subgroup k;
  for (int g = 0; g < chi.group()->group().order(); ++g)
    if (chi.value_at(g) == deg) k.push_back(g);
  return k;
}

// Degree-one character on a subgroup of the ambient filtered group.
class SubgroupWithCharacter {
 public:
  SubgroupWithCharacter(FilteredGroupPtr fg, Subgroup h, std::vector<Cyc> xi)
      : fg_(std::move(fg)), h_(std::move(h)), xi_(std::move(xi)) {
    require(is_subgroup(fg_->group(), h_), "NotAGroup",
            "character carrier is not a subgroup");
    require(xi_.size() == h_.size(), "SchemaError",
            "subgroup character needs one value per element");
    require(xi_[0] == Cyc(1), "SchemaError",
            "subgroup character must send the identity to 1");
    for (std::size_t i = 0; i < h_.size(); ++i)
      for (std::size_t j = 0; j < h_.size(); ++j) {
        int prod = fg_->group().op(h_[i], h_[j]);
        require(value_at(prod) == xi_[i] * xi_[j], "SchemaError",
                "subgroup character is not multiplicative");
      }
  }

  const FilteredGroupPtr& group() const { return fg_; }
  const Subgroup& carrier() const { return h_; }
  const std::vector<Cyc>& values() const { return xi_; }

  bool contains(int x) const { return subgroup_contains(h_, x); }

  const Cyc& value_at(int x) const {
    auto it = std::lower_bound(h_.begin(), h_.end(), x);
    require(it != h_.end() && *it == x, "UnknownName",
            "character evaluated outside its subgroup");
    return xi_[static_cast<std::size_t>(it - h_.begin())];
  }

 private:
  FilteredGroupPtr fg_;
  Subgroup h_;
  std::vector<Cyc> xi_;
};

// Induced character value at a single ambient element:
// (1/|H|) * sum over x in G with x^{-1} g x in H of xi(x^{-1} g x).
inline Cyc induced_value_at(const FiniteGroup& g, const SubgroupWithCharacter& sc,
                            int elem) {
  Cyc acc;
  for (int x = 0; x < g.order(); ++x) {
    int t = g.conj_by(g.inv(x), elem);
    if (sc.contains(t)) acc = acc + sc.value_at(t);
  }
  return acc * Cyc(Rat(Int(1), Int(static_cast<long>(sc.carrier().size()))));
}

inline ClassFunction induce(const SubgroupWithCharacter& sc) {
  const FiniteGroup& g = sc.group()->group();
  std::vector<Cyc> vals;
  for (const auto& cls : g.classes())
    vals.push_back(induced_value_at(g, sc, cls[0]));
  return ClassFunction(sc.group(), std::move(vals), true);
}

// xi^s on s H s^{-1}, sending w to xi(s^{-1} w s).
inline SubgroupWithCharacter conjugate_character(const SubgroupWithCharacter& sc,
                                                 int s) {
  const FiniteGroup& g = sc.group()->group();
  Subgroup h2 = conjugate_subgroup(g, sc.carrier(), s);
  std::vector<Cyc> vals;
  vals.reserve(h2.size());
  for (int w : h2) vals.push_back(sc.value_at(g.conj_by(g.inv(s), w)));
  return SubgroupWithCharacter(sc.group(), std::move(h2), std::move(vals));
}

// Restriction of a class function to a subgroup, element-aligned.
inline std::vector<Cyc> restrict_to(const ClassFunction& chi, const Subgroup& h) {
  std::vector<Cyc> vals;
  vals.reserve(h.size());
  for (int x : h) vals.push_back(chi.value_at(x));
  return vals;
}

// (1/|H|) sum f1 * conj(f2) over a subgroup, for element-aligned value lists.
inline Rat inner_product_on(const Subgroup& h, const std::vector<Cyc>& f1,
                            const std::vector<Cyc>& f2) {
  require(f1.size() == h.size() && f2.size() == h.size(), "SchemaError",
          "inner product needs element-aligned values");
  Cyc acc;
  for (std::size_t i = 0; i < h.size(); ++i) acc = acc + f1[i] * f2[i].conj();
  require(acc.is_rational(), "NonIntegerInnerProduct",
          "subgroup inner product is not rational");
  return acc.as_rational() / Rat(static_cast<long>(h.size()));
}

}  // namespace ramdepth

#endif
