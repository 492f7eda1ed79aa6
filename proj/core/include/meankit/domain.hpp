#ifndef MEANKIT_DOMAIN_HPP
#define MEANKIT_DOMAIN_HPP

#include <cstdint>
#include <limits>
#include <vector>

namespace meankit {

/// Interval of valid inputs. The default for everything in this library is
/// the open positive half-line.
struct Domain {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  bool lo_open = true;
  bool hi_open = true;

  static Domain positive() { return Domain{}; }

  static Domain reals() {
    return Domain{-std::numeric_limits<double>::infinity(),
                  std::numeric_limits<double>::infinity(), true, true};
  }

  static Domain interval(double lo, double hi, bool lo_open = true,
                         bool hi_open = true) {
    return Domain{lo, hi, lo_open, hi_open};
  }

  bool contains(double v) const {
    if (lo_open ? !(v > lo) : !(v >= lo))
      return false;
    if (hi_open ? !(v < hi) : !(v <= hi))
      return false;
    return true;
  }

  bool positive_only() const { return lo >= 0.0; }
};

/// Deterministic sampling plan shared by all statistical checks: the same
/// seed and count always yield the same vectors.
struct SampleConfig {
  int count = 200;
  std::uint64_t seed = 42;
  Domain domain = Domain::interval(0.0, 10.0);
};

/// Seeded sample vectors of arity p. Alternates uniform draws with
/// log-uniform draws (on positive domains) so that widely spread vectors,
/// which witness most bound violations, appear regularly.
std::vector<std::vector<double>> sample_vectors(const SampleConfig& cfg,
                                                int p);

} // namespace meankit

#endif
