#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "evalkit/audio.hpp"
#include "evalkit/error.hpp"
#include "evalkit/windows.hpp"

namespace evalkit {

struct VadMask {
  std::vector<bool> frame_flags;  // true = speech
  double frame_hop_s = 0.010;
  double frame_len_s = 0.025;

  double span_s() const { return static_cast<double>(frame_flags.size()) * frame_hop_s; }
};

struct EnergyVadConfig {
  double frame_len_s = 0.025;
  double frame_hop_s = 0.010;
  double absolute_floor_rms = 1e-4;
  double relative_threshold = 0.1;  // fraction of the 95th-percentile frame RMS
};

// Energy VAD: a frame is speech when its RMS exceeds both an absolute floor
// and a fraction of the clip's 95th-percentile frame RMS.
inline VadMask vad_mask(const AudioClip& clip, const EnergyVadConfig& cfg = {}) {
  if (clip.empty() || clip.sample_rate <= 0) {
    raise(ErrorCode::EmptyInput, "vad_mask: empty clip");
  }
  const auto n = clip.samples.size();
  const auto hop = static_cast<std::size_t>(std::lround(cfg.frame_hop_s * clip.sample_rate));
  const auto len = static_cast<std::size_t>(std::lround(cfg.frame_len_s * clip.sample_rate));
  if (hop == 0 || len == 0) raise(ErrorCode::UsageError, "vad_mask: frame geometry too small");

  const std::size_t n_frames = (n + hop - 1) / hop;
  std::vector<double> rms(n_frames, 0.0);
  for (std::size_t f = 0; f < n_frames; ++f) {
    const std::size_t begin = f * hop;
    const std::size_t end = std::min(begin + len, n);
    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      acc += static_cast<double>(clip.samples[i]) * clip.samples[i];
    }
    rms[f] = std::sqrt(acc / static_cast<double>(end - begin));
  }

  std::vector<double> sorted = rms;
  std::sort(sorted.begin(), sorted.end());
  const auto p95_idx = static_cast<std::size_t>(0.95 * static_cast<double>(sorted.size() - 1));
  const double p95 = sorted[p95_idx];
  const double threshold = std::max(cfg.absolute_floor_rms, cfg.relative_threshold * p95);

  VadMask mask;
  mask.frame_hop_s = cfg.frame_hop_s;
  mask.frame_len_s = cfg.frame_len_s;
  mask.frame_flags.resize(n_frames);
  for (std::size_t f = 0; f < n_frames; ++f) mask.frame_flags[f] = rms[f] > threshold;
  return mask;
}

// Fraction of speech frames among frames whose center falls inside the window.
inline double speech_ratio(const VadMask& mask, const WindowSlice& w) {
  constexpr double kEps = 1e-9;
  if (w.start_s < -kEps || w.end_s > mask.span_s() + mask.frame_len_s + kEps ||
      w.start_s > w.end_s) {
    raise(ErrorCode::OutOfBounds, "speech_ratio: window outside mask span");
  }
  std::size_t total = 0, speech = 0;
  for (std::size_t f = 0; f < mask.frame_flags.size(); ++f) {
    const double center = static_cast<double>(f) * mask.frame_hop_s + mask.frame_len_s / 2.0;
    if (center < w.start_s || center >= w.end_s) continue;
    ++total;
    if (mask.frame_flags[f]) ++speech;
  }
  if (total == 0) return 0.0;
  return static_cast<double>(speech) / static_cast<double>(total);
}

}  // namespace evalkit
