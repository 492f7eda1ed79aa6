#include "meankit/domain.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace meankit {

std::vector<std::vector<double>> sample_vectors(const SampleConfig& cfg,
                                                int p) {
  const Domain& d = cfg.domain;
  double lo = std::isfinite(d.lo) ? d.lo : (std::isfinite(d.hi) ? d.hi - 10 : -10.0);
  double hi = std::isfinite(d.hi) ? d.hi : lo + 10.0;
  // inset open endpoints slightly
  const double inset = 1e-9 * (hi - lo);
  const double ulo = d.lo_open ? lo + inset : lo;
  const double uhi = d.hi_open ? hi - inset : hi;

  const bool log_ok = d.positive_only() && uhi > 0;
  const double llo = log_ok ? std::log(std::max(ulo, uhi * 1e-4)) : 0.0;
  const double lhi = log_ok ? std::log(uhi) : 0.0;

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uni(ulo, uhi);
  std::uniform_real_distribution<double> lg(llo, lhi);

  std::vector<std::vector<double>> out;
  out.reserve(static_cast<std::size_t>(cfg.count));
  for (int n = 0; n < cfg.count; ++n) {
    std::vector<double> x(static_cast<std::size_t>(p));
    const bool use_log = log_ok && (n % 2 == 1);
    for (auto& v : x)
      v = use_log ? std::exp(lg(rng)) : uni(rng);
    out.push_back(std::move(x));
  }
  return out;
}

} // namespace meankit
