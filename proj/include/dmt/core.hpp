#pragma once

// Domain types for the two-user slow-fading interference channel and the
// exponent primitives used by every DMT formula.
//
// All link strengths and fades are measured as SNR exponents: a channel gain
// with |X|^2 = SNR^{-x} has order exponent x, and a link with average power
// SNR^{beta} has strength exponent beta.

#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace dmt {

/// Absolute tolerance used by optimizers and region comparisons.
inline constexpr double kTolerance = 1e-9;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// (x)^+ = max(x, 0). Negative infinity maps to 0.
template <typename Scalar>
constexpr Scalar pos_part(Scalar x) {
  return x > Scalar(0) ? x : Scalar(0);
}

/// Order exponent -log(gain_sq) / log(snr). A zero gain yields +infinity.
/// Throws std::domain_error for snr <= 1 or a negative gain.
double order_exponent(double gain_sq, double snr);

/// Linear SNR from decibels.
inline double snr_from_db(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

/// Strength exponent of a cross link, or the distinguished "absent" value
/// used for the missing link of a Z-channel.
class LinkStrength {
 public:
  static constexpr LinkStrength absent() { return LinkStrength(); }

  constexpr explicit LinkStrength(double exponent) : exponent_(exponent) {}

  constexpr bool is_absent() const { return !exponent_.has_value(); }

  /// Exponent value; negative infinity when absent.
  constexpr double exponent() const { return exponent_.value_or(-kInfinity); }

  /// Received exponent after a fade of depth `fade`: (alpha - fade), or -inf
  /// for an absent link so that its positive part vanishes.
  constexpr double faded(double fade) const {
    return exponent_ ? *exponent_ - fade : -kInfinity;
  }

  friend constexpr bool operator==(const LinkStrength&, const LinkStrength&) = default;

 private:
  constexpr LinkStrength() = default;
  std::optional<double> exponent_;
};

struct ChannelConfig {
  double beta1 = 1.0;
  double beta2 = 1.0;
  LinkStrength alpha1{0.0};
  LinkStrength alpha2{0.0};
  double kappa_h1 = 1.0;
  double kappa_g1 = 1.0;
  double kappa_h2 = 1.0;
  double kappa_g2 = 1.0;
  // Exponential tail rates; only the fading-distribution validator reads them.
  double tail_rate_h1 = 1.0;
  double tail_rate_g1 = 1.0;
  double tail_rate_h2 = 1.0;
  double tail_rate_g2 = 1.0;

  /// beta1 = beta2 = 1, alpha1 = alpha2 = alpha, all kappa = 1.
  static ChannelConfig symmetric(double alpha);

  /// Z-channel: g2 absent (alpha2 = -inf), kappa = 1 on h1, g1, h2.
  static ChannelConfig z_channel(double beta1, double beta2, double alpha1);

  /// Symmetric channel whose direct links do not fade (kappa_h = 0).
  static ChannelConfig crosslink_fading(double alpha);

  /// Throws std::invalid_argument if an invariant is violated.
  void validate() const;
};

struct FadePoint {
  double h1_hat = 0.0;
  double g1_hat = 0.0;
  double h2_hat = 0.0;
  double g2_hat = 0.0;
};

struct DiversityPair {
  double d1 = 0.0;
  double d2 = 0.0;
};

struct RateSplit {
  double s1 = 0.0;
  double t1 = 0.0;
  double s2 = 0.0;
  double t2 = 0.0;

  double r1() const { return s1 + t1; }
  double r2() const { return s2 + t2; }
};

struct PowerSplit {
  double v1 = 0.0;
  double v2 = 0.0;

  static PowerSplit equal(double v) { return {v, v}; }
};

/// A point on a symmetric tradeoff curve, tagged with the scheme or bound
/// that produced it.
struct DmtPoint {
  double d = 0.0;
  double r = 0.0;
  std::string source;
};

}  // namespace dmt
