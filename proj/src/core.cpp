#include "qkd/core.hpp"

#include <cmath>
#include <limits>

namespace qkd {

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("binary_entropy: argument outside [0,1]");
  }
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double db_to_transmission(double loss_db) {
  if (std::isnan(loss_db) || loss_db < 0.0) {
    throw std::domain_error("db_to_transmission: loss must be >= 0 dB");
  }
  if (std::isinf(loss_db)) return 0.0;
  return std::pow(10.0, -loss_db / 10.0);
}

double transmission_to_db(double t) {
  if (!(t > 0.0 && t <= 1.0)) {
    throw std::domain_error("transmission_to_db: t outside (0,1]");
  }
  return -10.0 * std::log10(t);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double simpson(double a, double b, int panels, const std::function<double(double)>& f) {
  if (panels < 2) panels = 2;
  if (panels % 2 != 0) ++panels;
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) {
    sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

namespace {

// SplitMix64 finalizer; full 64-bit avalanche.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  origin_ = mix64(seed + kGolden) ^ mix64(stream_id * kGolden + 0x452821e638d01377ULL);
}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t z = origin_ + (++counter_) * kGolden;
  return mix64(z);
}

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_pos() { return 1.0 - uniform(); }

double RngStream::normal(double sigma) {
  const double u1 = uniform_pos();
  const double u2 = uniform();
  return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

RngStream RngStream::substream(std::uint64_t child_id) const {
  return RngStream(origin_, mix64(child_id + 0x6a09e667f3bcc909ULL));
}

std::string to_string(Protocol p) {
  switch (p) {
    case Protocol::bb84: return "bb84";
    case Protocol::cow: return "cow";
    case Protocol::dps: return "dps";
  }
  return "?";
}

Protocol protocol_from_string(const std::string& s) {
  if (s == "bb84") return Protocol::bb84;
  if (s == "cow") return Protocol::cow;
  if (s == "dps") return Protocol::dps;
  throw ConfigError("unknown protocol: " + s);
}

double PulseFrame::total_mean_photons() const {
  double sum = 0.0;
  for (const Amplitude& a : bins) sum += std::norm(a);
  return sum;
}

void PulseFrame::validate() const {
  if (bins.empty()) throw std::invalid_argument("PulseFrame: no bins");
  if (!(bin_separation > 0.0)) throw std::invalid_argument("PulseFrame: bin_separation <= 0");
  if (frame_period + 1e-15 < static_cast<double>(bins.size()) * bin_separation) {
    throw std::invalid_argument("PulseFrame: frame_period shorter than bin train");
  }
  for (const Amplitude& a : bins) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("PulseFrame: non-finite amplitude");
    }
  }
}

}  // namespace qkd
