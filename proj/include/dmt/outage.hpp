#pragma once

// No-outage sets, analytic outage exponents and a seeded Monte Carlo
// estimator of outage probability.
//
// For receiver i the no-outage set is
//     { (h, g) : kappa_h h + kappa_g g < d,  h >= 0, g >= 0 }
// in order-exponent coordinates. Membership is strict. Optimizers that
// minimize over the set work on its closure; every objective is continuous,
// so the infimum is unchanged.

#include "dmt/core.hpp"
#include "dmt/geometry.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dmt {

/// Per-receiver fading state region in (h_hat, g_hat) coordinates.
using StateRegion = Polytope<double, 2>;
using StatePoint = Point<double, 2>;

struct OutageSpec {
  double kappa_h = 1.0;
  double kappa_g = 1.0;
  double d = 0.0;
};

struct OutageEstimate {
  double snr_db = 0.0;
  double prob = 0.0;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
};

bool in_no_outage(const OutageSpec& spec, double h_hat, double g_hat);

/// Outage exponent d of the event; throws std::invalid_argument when neither
/// link fades (kappa_h = kappa_g = 0).
double outage_exponent(const OutageSpec& spec);

/// Closure of the no-outage set; requires kappa_h > 0 and kappa_g > 0.
StateRegion no_outage_region(const OutageSpec& spec);

/// Closure of {h + g < d, h, g >= 0}: the kappa = 1 simplex.
StateRegion simplex_region(double d);

/// Direct link fixed (h = 0), cross link fading over 0 <= g <= d.
StateRegion crosslink_region(double d);

/// Distribution of a squared channel gain |X|^2 with unit mean.
class FadingDistribution {
 public:
  enum class Kind { rayleigh, nakagami };

  static FadingDistribution rayleigh() { return FadingDistribution(Kind::rayleigh, 1.0); }
  static FadingDistribution nakagami(double m);

  /// "rayleigh" or "nakagami-m" (shape taken from `m`). Throws
  /// std::invalid_argument for any other name.
  static FadingDistribution from_name(std::string_view name, double m = 1.0);

  Kind kind() const { return kind_; }
  double shape() const { return m_; }
  std::string name() const;

  /// Near-zero exponent kappa of the distribution: 1 for Rayleigh, m for
  /// Nakagami-m.
  double near_zero_exponent() const;

  /// Largest tail rate gamma with lim P(|X|^2 >= x) / e^{-gamma x} <= 1.
  double max_tail_rate() const;

  /// Throws std::invalid_argument if `tail_rate` is not a valid
  /// exponential-tail constant for this distribution.
  void validate_tail_rate(double tail_rate) const;

 private:
  FadingDistribution(Kind kind, double m) : kind_(kind), m_(m) {}
  Kind kind_;
  double m_;
};

/// Monte Carlo outage probability at the given SNR.
///
/// Samples i.i.d. (|h|^2, |g|^2) pairs, converts them to order exponents and
/// counts the outage event  kappa_h (h)^+ + kappa_g (g)^+ >= d.  Negative
/// exponents (gains above SNR^0) are clamped to zero: they never help the
/// link fade into outage, and the clamped event is exactly the complement of
/// the no-outage set projected onto the non-negative quadrant.
///
/// Samples are split over kLanes independent lanes seeded from (seed, lane);
/// lanes may run on separate threads and their counts are summed, so the
/// output depends only on the arguments.
OutageEstimate estimate_outage(const OutageSpec& spec, double snr_db, std::int64_t n_samples,
                               std::uint64_t seed, const FadingDistribution& dist);

/// Empirical P(|X|^2 < threshold); same lane scheme as estimate_outage.
double estimate_cdf(const FadingDistribution& dist, double threshold, std::int64_t n_samples,
                    std::uint64_t seed);

/// Least-squares slope of -log10(prob) against snr_db / 10.
/// Throws std::invalid_argument on fewer than two points, repeated SNRs, or
/// a zero probability.
double fit_diversity_slope(std::span<const OutageEstimate> points);

inline constexpr int kLanes = 16;

}  // namespace dmt
