#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qkd/core.hpp"

namespace qkd {

struct IntensityClass {
  std::string name;
  double mean_photons = 0.0;       // per frame, before extinction leakage
  double emission_probability = 0.0;
};

struct TransmitterParams {
  double clock_rate = 0.0;        // frames per second
  double bin_separation = 0.0;    // seconds
  double pulse_fwhm = 136e-12;    // folded into the receiver slot-crosstalk model
  double extinction_db = 30.0;    // +infinity disables leakage
  std::vector<IntensityClass> intensity_classes;
  bool phase_randomize = false;

  double frame_period() const { return 1.0 / clock_rate; }

  /// Throws ConfigError on invalid rates, probabilities not summing to 1,
  /// or non-positive extinction.
  void validate(std::size_t bins_per_frame) const;

  int class_index(const std::string& name) const;  // ConfigError if unknown

  /// Samples a class index from the configured emission probabilities.
  int sample_class(RngStream& rng) const;
};

/// Two-bin time-bin state. Z basis puts the whole intensity in one bin,
/// X basis splits it between both with relative phase 0 (bit 0) or pi
/// (bit 1); X amplitudes are halved in power so every state carries the
/// same mean photon number.
PulseFrame encode_bb84_frame(std::uint8_t bit, Basis basis, int class_index,
                             const TransmitterParams& params, RngStream& rng);

/// Pulse-pair symbol: bit0 occupies the first bin, bit1 the second, decoy
/// both. No phase randomization; all frames share reference phase zero so
/// consecutive occupied pulses stay mutually coherent.
PulseFrame encode_cow_frame(CowSymbol symbol, const TransmitterParams& params);

/// Train of bits.size()+1 pulses of equal intensity; pulse k carries the
/// cumulative phase sum of pi*bits[0..k-1]. Key bit i is the phase
/// difference between pulses i and i+1.
PulseFrame encode_dps_train(std::span<const std::uint8_t> bits,
                            const TransmitterParams& params);

/// Adds extinction leakage to every nominally empty bin: mean photons
/// m_max * 10^(-extinction_db/10) at the frame's reference phase.
/// Occupied bins are left untouched.
PulseFrame apply_extinction(PulseFrame frame, double extinction_db);

}  // namespace qkd
