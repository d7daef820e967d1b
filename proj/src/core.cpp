#include "dmt/core.hpp"

#include <stdexcept>

namespace dmt {

double order_exponent(double gain_sq, double snr) {
  if (!(snr > 1.0)) throw std::domain_error("order_exponent: snr must exceed 1");
  if (gain_sq < 0.0 || std::isnan(gain_sq))
    throw std::domain_error("order_exponent: gain_sq must be non-negative");
  if (gain_sq == 0.0) return kInfinity;
  return -std::log(gain_sq) / std::log(snr);
}

ChannelConfig ChannelConfig::symmetric(double alpha) {
  ChannelConfig c;
  c.alpha1 = LinkStrength(alpha);
  c.alpha2 = LinkStrength(alpha);
  return c;
}

ChannelConfig ChannelConfig::z_channel(double beta1, double beta2, double alpha1) {
  ChannelConfig c;
  c.beta1 = beta1;
  c.beta2 = beta2;
  c.alpha1 = LinkStrength(alpha1);
  c.alpha2 = LinkStrength::absent();
  c.kappa_g2 = 0.0;
  return c;
}

ChannelConfig ChannelConfig::crosslink_fading(double alpha) {
  ChannelConfig c = symmetric(alpha);
  c.kappa_h1 = 0.0;
  c.kappa_h2 = 0.0;
  return c;
}

void ChannelConfig::validate() const {
  if (!std::isfinite(beta1) || !std::isfinite(beta2))
    throw std::invalid_argument("channel: beta exponents must be finite");
  for (const LinkStrength& a : {alpha1, alpha2}) {
    if (!a.is_absent() && !std::isfinite(a.exponent()))
      throw std::invalid_argument("channel: alpha must be finite or absent");
  }
  for (double k : {kappa_h1, kappa_g1, kappa_h2, kappa_g2}) {
    if (!(k >= 0.0)) throw std::invalid_argument("channel: kappa must be >= 0");
  }
  for (double g : {tail_rate_h1, tail_rate_g1, tail_rate_h2, tail_rate_g2}) {
    if (!(g > 0.0)) throw std::invalid_argument("channel: tail rates must be > 0");
  }
}

}  // namespace dmt
