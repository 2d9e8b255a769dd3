#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "evalkit/audio.hpp"
#include "evalkit/dsp.hpp"
#include "evalkit/error.hpp"
#include "evalkit/resample.hpp"

namespace evalkit::srmr {

struct SrmrConfig {
  int n_acoustic_bands = 23;
  double acoustic_band_lo_hz = 125.0;
  double acoustic_band_hi_hz = 0.0;  // 0 = min(8000, 0.9 * Nyquist)
  int n_modulation_bands = 8;
  std::vector<double> modulation_centers_hz;  // empty = geometric 4..128 Hz
  int low_band_count = 4;
  double modulation_q = 2.0;
  double envelope_lowpass_cutoff_hz = 150.0;
  int internal_rate = 16000;  // filterbank design rate; input is resampled to it
  double epsilon = 1e-12;
};

inline std::vector<double> default_modulation_centers(int n_bands) {
  std::vector<double> centers(n_bands);
  const double lo = 4.0, hi = 128.0;
  for (int i = 0; i < n_bands; ++i) {
    centers[i] = n_bands == 1
                     ? lo
                     : lo * std::pow(hi / lo, static_cast<double>(i) / (n_bands - 1));
  }
  return centers;
}

inline std::vector<double> modulation_centers(const SrmrConfig& cfg) {
  auto centers = cfg.modulation_centers_hz.empty()
                     ? default_modulation_centers(cfg.n_modulation_bands)
                     : cfg.modulation_centers_hz;
  if (static_cast<int>(centers.size()) != cfg.n_modulation_bands) {
    raise(ErrorCode::UsageError, "srmr: modulation center count mismatch");
  }
  for (std::size_t i = 1; i < centers.size(); ++i) {
    if (centers[i] <= centers[i - 1]) {
      raise(ErrorCode::UsageError, "srmr: modulation centers must be strictly increasing");
    }
  }
  if (cfg.low_band_count <= 0 || cfg.low_band_count >= cfg.n_modulation_bands) {
    raise(ErrorCode::UsageError, "srmr: low_band_count must be in (0, n_modulation_bands)");
  }
  return centers;
}

// ERB-rate spaced center frequencies on (lo, hi), ascending.
inline std::vector<double> erb_space(double lo_hz, double hi_hz, int n_bands) {
  constexpr double kEarQ = 9.26449;
  constexpr double kMinBW = 24.7;
  std::vector<double> centers(n_bands);
  const double c = kEarQ * kMinBW;
  for (int i = 1; i <= n_bands; ++i) {
    centers[n_bands - i] =
        -c + std::exp(static_cast<double>(i) / n_bands *
                      (std::log(lo_hz + c) - std::log(hi_hz + c))) *
                 (hi_hz + c);
  }
  return centers;
}

inline double erb_bandwidth(double center_hz) {
  return 24.7 * (4.37e-3 * center_hz + 1.0);
}

// 4th-order gammatone as a cascade of four second-order sections with the
// overall gain normalized to unity at the center frequency.
struct GammatoneFilter {
  std::array<dsp::Biquad, 4> sections;
  double gain = 1.0;

  static GammatoneFilter design(double center_hz, double rate_hz) {
    const double t = 1.0 / rate_hz;
    const double b = 1.019 * 2.0 * dsp::kPi * erb_bandwidth(center_hz);
    const double w = 2.0 * dsp::kPi * center_hz * t;
    const double exp_bt = std::exp(-b * t);
    const double cosw = std::cos(w), sinw = std::sin(w);
    const double k_hi = std::sqrt(3.0 + std::pow(2.0, 1.5));
    const double k_lo = std::sqrt(3.0 - std::pow(2.0, 1.5));

    GammatoneFilter f;
    const double a1_den = -2.0 * cosw * exp_bt;
    const double a2_den = std::exp(-2.0 * b * t);
    const std::array<double, 4> b1 = {
        -t * (cosw + k_hi * sinw) * exp_bt,
        -t * (cosw - k_hi * sinw) * exp_bt,
        -t * (cosw + k_lo * sinw) * exp_bt,
        -t * (cosw - k_lo * sinw) * exp_bt,
    };
    for (int s = 0; s < 4; ++s) {
      f.sections[s].b0 = t;
      f.sections[s].b1 = b1[s];
      f.sections[s].b2 = 0.0;
      f.sections[s].a1 = a1_den;
      f.sections[s].a2 = a2_den;
    }
    std::complex<double> h(1.0, 0.0);
    for (const auto& s : f.sections) h *= s.response_at(center_hz, rate_hz);
    f.gain = 1.0 / std::abs(h);
    return f;
  }

  std::vector<double> process(const std::vector<double>& in) const {
    std::vector<double> y = in, tmp;
    for (const auto& s : sections) {
      s.process(y, tmp);
      y.swap(tmp);
    }
    for (auto& v : y) v *= gain;
    return y;
  }

  double magnitude_at(double freq_hz, double rate_hz) const {
    std::complex<double> h(1.0, 0.0);
    for (const auto& s : sections) h *= s.response_at(freq_hz, rate_hz);
    return std::abs(h) * gain;
  }
};

inline double acoustic_band_hi(const SrmrConfig& cfg, double rate_hz) {
  const double hi =
      cfg.acoustic_band_hi_hz > 0.0 ? cfg.acoustic_band_hi_hz : std::min(8000.0, 0.45 * rate_hz);
  if (hi >= rate_hz / 2.0) {
    raise(ErrorCode::UsageError, "srmr: acoustic band range must stay below Nyquist");
  }
  return hi;
}

// Splits the signal into n_acoustic_bands gammatone bands, all input length.
inline std::vector<std::vector<double>> gammatone_filterbank(const AudioClip& clip,
                                                             const SrmrConfig& cfg = {}) {
  if (clip.sample_rate < 8000) {
    raise(ErrorCode::SampleRateTooLow, "gammatone_filterbank: need at least 8 kHz");
  }
  const double rate = clip.sample_rate;
  const double hi = acoustic_band_hi(cfg, rate);
  const auto centers = erb_space(cfg.acoustic_band_lo_hz, hi, cfg.n_acoustic_bands);

  std::vector<double> x(clip.samples.begin(), clip.samples.end());
  std::vector<std::vector<double>> bands;
  bands.reserve(centers.size());
  for (double cf : centers) {
    bands.push_back(GammatoneFilter::design(cf, rate).process(x));
  }
  return bands;
}

// Nonnegative envelope: magnitude of the analytic signal, low-passed.
inline std::vector<double> temporal_envelope(const std::vector<double>& band, double rate_hz,
                                             const SrmrConfig& cfg = {}) {
  if (band.empty()) raise(ErrorCode::EmptyInput, "temporal_envelope: empty band");
  auto env = dsp::analytic_envelope(band);
  std::vector<double> smoothed;
  dsp::lowpass_biquad(cfg.envelope_lowpass_cutoff_hz, rate_hz).process(env, smoothed);
  for (auto& v : smoothed) v = std::max(v, 0.0);
  return smoothed;
}

// Energy of the mean-removed envelope inside each modulation band.
inline std::vector<double> modulation_energies(const std::vector<double>& envelope,
                                               double rate_hz, const SrmrConfig& cfg = {}) {
  const auto centers = modulation_centers(cfg);
  double mean = 0.0;
  for (double v : envelope) mean += v;
  mean /= envelope.empty() ? 1.0 : static_cast<double>(envelope.size());
  std::vector<double> centered(envelope.size());
  for (std::size_t i = 0; i < envelope.size(); ++i) centered[i] = envelope[i] - mean;

  std::vector<double> energies(centers.size(), 0.0);
  std::vector<double> filtered;
  for (std::size_t m = 0; m < centers.size(); ++m) {
    dsp::bandpass_biquad(centers[m], cfg.modulation_q, rate_hz).process(centered, filtered);
    double e = 0.0;
    for (double v : filtered) e += v * v;
    energies[m] = e;
  }
  return energies;
}

// Ratio of low-band to high-band modulation energy, summed over acoustic bands.
inline double score(const AudioClip& clip, const SrmrConfig& cfg = {}) {
  if (clip.duration_s() < 0.5) {
    raise(ErrorCode::ClipTooShort, "srmr: need at least 0.5 s of audio");
  }
  const AudioClip work = resample(clip, cfg.internal_rate);
  const double rate = work.sample_rate;
  const auto bands = gammatone_filterbank(work, cfg);

  double low_energy = 0.0, high_energy = 0.0;
  for (const auto& band : bands) {
    const auto env = temporal_envelope(band, rate, cfg);
    const auto energies = modulation_energies(env, rate, cfg);
    for (int m = 0; m < cfg.n_modulation_bands; ++m) {
      if (m < cfg.low_band_count) {
        low_energy += energies[static_cast<std::size_t>(m)];
      } else {
        high_energy += energies[static_cast<std::size_t>(m)];
      }
    }
  }
  return low_energy / std::max(high_energy, cfg.epsilon);
}

}  // namespace evalkit::srmr
