#include "dmt/outage.hpp"

#include "dmt/parallel.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace dmt {

namespace {

// kappa * x with 0 * inf treated as 0: a link that does not fade contributes
// nothing, however deep its sampled exponent.
double weighted(double kappa, double x) { return kappa == 0.0 ? 0.0 : kappa * x; }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Lane substream: mt19937_64 seeded with SplitMix64(seed + lane * golden).
std::mt19937_64 lane_engine(std::uint64_t seed, int lane) {
  return std::mt19937_64(splitmix64(seed + 0x9E3779B97F4A7C15ull * std::uint64_t(lane + 1)));
}

class GainSampler {
 public:
  GainSampler(const FadingDistribution& dist, std::mt19937_64& eng)
      : dist_(dist), eng_(eng), gamma_(dist.shape(), 1.0 / dist.shape()) {}

  double operator()() {
    if (dist_.kind() == FadingDistribution::Kind::rayleigh) {
      // Exponential(1) by inversion of a 53-bit uniform in [0, 1).
      const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
      return -std::log1p(-u);
    }
    return gamma_(eng_);
  }

 private:
  const FadingDistribution& dist_;
  std::mt19937_64& eng_;
  std::gamma_distribution<double> gamma_;
};

template <typename Trial>
std::int64_t count_lanes(std::int64_t n_samples, std::uint64_t seed,
                         const FadingDistribution& dist, Trial trial) {
  std::array<std::int64_t, kLanes> counts{};
  parallel_chunks(kLanes, worker_count(kLanes, 1), [&](unsigned, std::size_t lo, std::size_t hi) {
    for (std::size_t lane = lo; lane < hi; ++lane) {
      const std::int64_t begin = n_samples * std::int64_t(lane) / kLanes;
      const std::int64_t end = n_samples * std::int64_t(lane + 1) / kLanes;
      auto eng = lane_engine(seed, static_cast<int>(lane));
      GainSampler draw(dist, eng);
      std::int64_t c = 0;
      for (std::int64_t i = begin; i < end; ++i) c += trial(draw) ? 1 : 0;
      counts[lane] = c;
    }
  });
  std::int64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

}  // namespace

bool in_no_outage(const OutageSpec& spec, double h_hat, double g_hat) {
  if (!(h_hat >= 0.0) || !(g_hat >= 0.0)) return false;
  return weighted(spec.kappa_h, h_hat) + weighted(spec.kappa_g, g_hat) < spec.d;
}

double outage_exponent(const OutageSpec& spec) {
  if (spec.kappa_h == 0.0 && spec.kappa_g == 0.0)
    throw std::invalid_argument("outage event has exponent 0 regardless of d");
  if (spec.kappa_h < 0.0 || spec.kappa_g < 0.0 || spec.d < 0.0)
    throw std::invalid_argument("outage spec fields must be >= 0");
  return spec.d;
}

StateRegion no_outage_region(const OutageSpec& spec) {
  if (!(spec.kappa_h > 0.0 && spec.kappa_g > 0.0))
    throw std::invalid_argument("no_outage_region: kappa_h and kappa_g must be > 0");
  StateRegion r;
  r.add_face(StatePoint(-1.0, 0.0), 0.0);
  r.add_face(StatePoint(0.0, -1.0), 0.0);
  r.add_face(StatePoint(spec.kappa_h, spec.kappa_g), std::max(spec.d, 0.0));
  return r;
}

StateRegion simplex_region(double d) { return no_outage_region({1.0, 1.0, d}); }

StateRegion crosslink_region(double d) {
  StateRegion r;
  r.bound(0, 0.0, 0.0);
  r.bound(1, 0.0, std::max(d, 0.0));
  return r;
}

FadingDistribution FadingDistribution::nakagami(double m) {
  if (!(m >= 0.5) || !std::isfinite(m))
    throw std::invalid_argument("nakagami-m: shape m must be finite and >= 0.5");
  return FadingDistribution(Kind::nakagami, m);
}

FadingDistribution FadingDistribution::from_name(std::string_view name, double m) {
  if (name == "rayleigh") return rayleigh();
  if (name == "nakagami-m" || name == "nakagami") return nakagami(m);
  throw std::invalid_argument("unsupported fading distribution: " + std::string(name));
}

std::string FadingDistribution::name() const {
  return kind_ == Kind::rayleigh ? "rayleigh" : "nakagami-m";
}

double FadingDistribution::near_zero_exponent() const {
  return kind_ == Kind::rayleigh ? 1.0 : m_;
}

double FadingDistribution::max_tail_rate() const {
  // Gamma(m, 1/m) tail behaves like x^{m-1} e^{-m x}.
  return kind_ == Kind::rayleigh ? 1.0 : m_;
}

void FadingDistribution::validate_tail_rate(double tail_rate) const {
  if (!(tail_rate > 0.0)) throw std::invalid_argument("tail rate must be > 0");
  const double cap = max_tail_rate();
  // At gamma = m the polynomial prefactor x^{m-1} only stays bounded for m <= 1.
  const bool ok = tail_rate < cap || (tail_rate == cap && (kind_ == Kind::rayleigh || m_ <= 1.0));
  if (!ok) throw std::invalid_argument("tail rate exceeds the distribution's exponential tail");
}

OutageEstimate estimate_outage(const OutageSpec& spec, double snr_db, std::int64_t n_samples,
                               std::uint64_t seed, const FadingDistribution& dist) {
  if (n_samples < 1) throw std::invalid_argument("estimate_outage: n_samples must be >= 1");
  if (!(snr_db > 0.0)) throw std::invalid_argument("estimate_outage: snr_db must be > 0");
  const double snr = snr_from_db(snr_db);
  const std::int64_t hits = count_lanes(n_samples, seed, dist, [&](GainSampler& draw) {
    const double h = pos_part(order_exponent(draw(), snr));
    const double g = pos_part(order_exponent(draw(), snr));
    return !in_no_outage(spec, h, g);
  });
  return {snr_db, static_cast<double>(hits) / static_cast<double>(n_samples), n_samples, seed};
}

double estimate_cdf(const FadingDistribution& dist, double threshold, std::int64_t n_samples,
                    std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("estimate_cdf: n_samples must be >= 1");
  const std::int64_t hits = count_lanes(n_samples, seed, dist,
                                        [&](GainSampler& draw) { return draw() < threshold; });
  return static_cast<double>(hits) / static_cast<double>(n_samples);
}

double fit_diversity_slope(std::span<const OutageEstimate> points) {
  if (points.size() < 2) throw std::invalid_argument("slope fit needs at least two points");
  double sx = 0.0, sy = 0.0;
  for (const auto& p : points) {
    if (!(p.prob > 0.0)) throw std::invalid_argument("zero outage probability: increase samples or lower SNR");
    sx += p.snr_db / 10.0;
    sy += -std::log10(p.prob);
  }
  const double n = static_cast<double>(points.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& p : points) {
    const double dx = p.snr_db / 10.0 - mx;
    sxx += dx * dx;
    sxy += dx * (-std::log10(p.prob) - my);
  }
  if (sxx <= 0.0) throw std::invalid_argument("slope fit needs distinct SNR values");
  return sxy / sxx;
}

}  // namespace dmt
