#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qkd {

using Amplitude = std::complex<double>;

/// Shannon binary entropy in bits, with the convention 0*log2(0) = 0.
/// Throws std::domain_error outside [0,1].
double binary_entropy(double x);

/// Power transmission of a loss expressed in dB: 10^(-loss_db/10).
/// loss_db may be +infinity (total loss). Throws std::domain_error if negative.
double db_to_transmission(double loss_db);

/// Inverse of db_to_transmission; t must lie in (0,1].
double transmission_to_db(double t);

/// Standard normal CDF.
double normal_cdf(double x);

/// Adaptive-free Simpson quadrature on [a,b] with a fixed even panel count.
double simpson(double a, double b, int panels, const std::function<double(double)>& f);

/// Counter-based random stream: output n is a pure function of
/// (seed, stream_id, n), so any number of streams can be drawn from
/// concurrently scheduled work while staying bit-reproducible.
class RngStream {
 public:
  RngStream() = default;
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();

  /// Uniform in [0,1), 53-bit resolution.
  double uniform();

  /// Uniform in (0,1] (safe as a log argument).
  double uniform_pos();

  /// Zero-mean Gaussian via Box-Muller; consumes two uniforms.
  double normal(double sigma);

  /// Derived stream for a sub-task; independent of this stream's position.
  RngStream substream(std::uint64_t child_id) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t stream_id_ = 0;
  std::uint64_t origin_ = 0;
  std::uint64_t counter_ = 0;
};

enum class Protocol { bb84, cow, dps };

std::string to_string(Protocol p);
Protocol protocol_from_string(const std::string& s);

enum class Basis : std::uint8_t { z = 0, x = 1 };

enum class CowSymbol : std::uint8_t { bit0 = 0, bit1 = 1, decoy = 2 };

struct Bb84Truth {
  std::uint8_t bit = 0;
  Basis basis = Basis::z;
};

struct CowTruth {
  CowSymbol symbol = CowSymbol::bit0;
};

struct DpsTruth {
  std::vector<std::uint8_t> bits;
};

using FrameTruth = std::variant<std::monostate, Bb84Truth, CowTruth, DpsTruth>;

/// A short train of time bins holding complex field amplitudes.
/// Mean photon number of a bin is |amplitude|^2.
struct PulseFrame {
  std::vector<Amplitude> bins;
  double bin_separation = 0.0;  // seconds between bin centers
  double frame_period = 0.0;    // seconds from frame start to next frame start
  bool phase_randomized = false;
  double reference_phase = 0.0;  // global phase actually applied to the frame
  int intensity_class = 0;       // index into the transmitter's class table
  FrameTruth truth;

  double total_mean_photons() const;

  /// Checks structural invariants (finite amplitudes, positive timing,
  /// frame_period covering all bins). Throws std::invalid_argument.
  void validate() const;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AnalysisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qkd
