#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "evalkit/audio.hpp"
#include "evalkit/dsp.hpp"
#include "evalkit/error.hpp"

namespace evalkit {

namespace detail {

inline double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  const double px = dsp::kPi * x;
  return std::sin(px) / px;
}

// Modified Bessel function of the first kind, order zero (series expansion).
inline double bessel_i0(double x) {
  double sum = 1.0, term = 1.0;
  const double half_x = x / 2.0;
  for (int k = 1; k < 64; ++k) {
    term *= (half_x / k) * (half_x / k);
    sum += term;
    if (term < sum * 1e-16) break;
  }
  return sum;
}

// Kaiser-windowed sinc sampled on [0, zero_crossings], linearly interpolated.
class SincKernel {
 public:
  static constexpr int kZeroCrossings = 32;
  static constexpr int kStepsPerCrossing = 512;

  static const SincKernel& instance() {
    static const SincKernel kernel;
    return kernel;
  }

  double operator()(double x) const {
    x = std::abs(x);
    if (x >= kZeroCrossings) return 0.0;
    const double pos = x * kStepsPerCrossing;
    const auto idx = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(idx);
    return table_[idx] + frac * (table_[idx + 1] - table_[idx]);
  }

 private:
  SincKernel() : table_(kZeroCrossings * kStepsPerCrossing + 2) {
    constexpr double kBeta = 12.0;
    const double i0_beta = bessel_i0(kBeta);
    for (std::size_t i = 0; i < table_.size(); ++i) {
      const double x = static_cast<double>(i) / kStepsPerCrossing;
      const double d = x / kZeroCrossings;
      if (d >= 1.0) {
        table_[i] = 0.0;
      } else {
        table_[i] = sinc(x) * bessel_i0(kBeta * std::sqrt(1.0 - d * d)) / i0_beta;
      }
    }
  }

  std::vector<double> table_;
};

}  // namespace detail

// Band-limited resampling with a Kaiser-windowed sinc kernel. Output length is
// round(n_in * target / source), so duration is preserved within one sample.
inline AudioClip resample(const AudioClip& clip, int target_rate) {
  if (target_rate <= 0) raise(ErrorCode::UsageError, "resample: target rate must be > 0");
  if (clip.sample_rate <= 0) raise(ErrorCode::UsageError, "resample: clip has no sample rate");
  if (clip.sample_rate == target_rate) return clip;

  const double ratio = static_cast<double>(target_rate) / clip.sample_rate;
  const std::size_t n_in = clip.samples.size();
  const auto n_out = static_cast<std::size_t>(std::llround(n_in * ratio));

  AudioClip out;
  out.sample_rate = target_rate;
  if (n_in == 0 || n_out == 0) return out;
  out.samples.resize(n_out);

  // Cut off at the smaller Nyquist; when downsampling the kernel is stretched
  // by 1/cutoff so it still spans kZeroCrossings output-side lobes.
  const double cutoff = std::min(1.0, ratio);
  const double half_width = detail::SincKernel::kZeroCrossings / cutoff;
  const auto& kernel = detail::SincKernel::instance();

  for (std::size_t j = 0; j < n_out; ++j) {
    const double t = static_cast<double>(j) / ratio;  // position in input samples
    auto lo = static_cast<long long>(std::ceil(t - half_width));
    auto hi = static_cast<long long>(std::floor(t + half_width));
    lo = std::max(lo, 0LL);
    hi = std::min(hi, static_cast<long long>(n_in) - 1);
    double acc = 0.0;
    for (long long i = lo; i <= hi; ++i) {
      acc += clip.samples[static_cast<std::size_t>(i)] *
             kernel(cutoff * (static_cast<double>(i) - t));
    }
    out.samples[j] = static_cast<float>(acc * cutoff);
  }
  return out;
}

}  // namespace evalkit
