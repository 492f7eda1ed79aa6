#ifndef MEANKIT_TEST_HELPERS_HPP
#define MEANKIT_TEST_HELPERS_HPP

#include <mpfr.h>

#include <vector>

#include "meankit/mean.hpp"

namespace meankit::test {

// Independent high-precision oracle for the arithmetic-geometric mean:
// 256-bit MPFR iteration, accurate far beyond double.
inline double agm_oracle(double x, double y) {
  mpfr_t a, b, t;
  mpfr_inits2(256, a, b, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_d(a, x, MPFR_RNDN);
  mpfr_set_d(b, y, MPFR_RNDN);
  for (int i = 0; i < 64; ++i) {
    mpfr_add(t, a, b, MPFR_RNDN);
    mpfr_div_ui(t, t, 2, MPFR_RNDN);
    mpfr_mul(b, a, b, MPFR_RNDN);
    mpfr_sqrt(b, b, MPFR_RNDN);
    mpfr_swap(a, t);
  }
  const double r = mpfr_get_d(a, MPFR_RNDN);
  mpfr_clears(a, b, t, static_cast<mpfr_ptr>(nullptr));
  return r;
}

inline MeanVector mapping_AH() {
  return MeanVector({MeanExpr::arithmetic(2), MeanExpr::harmonic(2)});
}

inline MeanVector mapping_AG() {
  return MeanVector({MeanExpr::arithmetic(2), MeanExpr::geometric(2)});
}

// (A, B_p, ..., B_p), the G-invariant root mapping
inline MeanVector mapping_ABeta(int p) {
  std::vector<MeanExpr> coords{MeanExpr::arithmetic(p)};
  for (int i = 1; i < p; ++i)
    coords.push_back(MeanExpr::beta(p));
  return MeanVector(std::move(coords));
}

} // namespace meankit::test

#endif
