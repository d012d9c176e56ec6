#ifndef RAMDEPTH_RATIONAL_HPP_
#define RAMDEPTH_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "errors.hpp"

namespace ramdepth {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(long num, long den) {
  require(den != 0, "SchemaError", "rational with zero denominator");
  return Rat(Int(num), Int(den));
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int floor_rat(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

inline Int ceil_rat(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (numerator(r) > 0 && q * denominator(r) != numerator(r)) ++q;
  return q;
}

inline long to_long(const Int& v) { return static_cast<long>(v); }

inline long rat_as_long(const Rat& r) {
  require(is_integer(r), "SchemaError", "expected an integer value");
  return to_long(numerator(r));
}

inline std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline long lcm_long(long a, long b) {
  return to_long(boost::multiprecision::lcm(Int(a), Int(b)));
}

}  // namespace ramdepth

#endif
