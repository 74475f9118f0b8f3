#pragma once

#include <gmpxx.h>
#include <Eigen/Dense>

#include <string>
#include <vector>

namespace Eigen {
// mpq_class is exact, so every tolerance collapses to zero.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace bvb {

using Q = mpq_class;
using Mat = Eigen::Matrix<Q, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Q, Eigen::Dynamic, 1>;

inline int parity(int deg) { return ((deg % 2) + 2) % 2; }
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

std::string to_string(const Q& q);
Q parse_rational(const std::string& s);

Mat zeros(long r, long c);
Mat identity(long n);
bool is_zero(const Mat& m);
bool equal(const Mat& a, const Mat& b);

}  // namespace bvb
