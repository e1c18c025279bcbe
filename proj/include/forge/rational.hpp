#pragma once

#include <cstdint>

#include <Eigen/Core>
#include <boost/rational.hpp>

namespace forge {

// Exact rational scalar used wherever coordinates must not round.
using Rational = boost::rational<std::int64_t>;

inline std::int64_t floor_to_int(const Rational& r) {
  const std::int64_t n = r.numerator();
  const std::int64_t d = r.denominator();  // always positive
  std::int64_t q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

inline std::int64_t ceil_to_int(const Rational& r) { return -floor_to_int(-r); }

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

inline std::int64_t floor_to_int(std::int64_t v) { return v; }
inline std::int64_t ceil_to_int(std::int64_t v) { return v; }
inline bool is_integral(std::int64_t) { return true; }

}  // namespace forge

namespace Eigen {

template <>
struct NumTraits<forge::Rational> : GenericNumTraits<forge::Rational> {
  using Real = forge::Rational;
  using NonInteger = forge::Rational;
  using Nested = forge::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
