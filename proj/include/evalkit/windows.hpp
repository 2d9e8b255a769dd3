#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "evalkit/audio.hpp"
#include "evalkit/error.hpp"

namespace evalkit {

struct WindowSlice {
  double start_s = 0.0;
  double end_s = 0.0;
  std::size_t index = 0;

  double length_s() const { return end_s - start_s; }
};

// Full windows start at 0, stride, 2*stride, ... while start + window fits.
// The uncovered tail gets its own right-aligned window when it is at least
// half a window long; shorter tails are dropped.
inline std::vector<WindowSlice> plan_windows(double duration_s, double window_s,
                                             double stride_s) {
  if (window_s <= 0.0 || stride_s <= 0.0) {
    raise(ErrorCode::UsageError, "plan_windows: window and stride must be > 0");
  }
  if (duration_s < 0.0) raise(ErrorCode::UsageError, "plan_windows: negative duration");

  constexpr double kEps = 1e-9;
  std::vector<WindowSlice> plan;
  double start = 0.0;
  double covered_end = 0.0;
  while (start + window_s <= duration_s + kEps) {
    plan.push_back({start, start + window_s, plan.size()});
    covered_end = start + window_s;
    start += stride_s;
  }
  const double tail = duration_s - covered_end;
  if (tail >= window_s / 2.0 - kEps) {
    plan.push_back({duration_s - tail, duration_s, plan.size()});
  }
  return plan;
}

inline AudioClip slice(const AudioClip& clip, const WindowSlice& w) {
  if (clip.sample_rate <= 0) raise(ErrorCode::UsageError, "slice: empty clip");
  const double rate = clip.sample_rate;
  const auto begin = static_cast<long long>(std::llround(w.start_s * rate));
  const auto end = static_cast<long long>(std::llround(w.end_s * rate));
  const auto n = static_cast<long long>(clip.samples.size());
  if (begin < 0 || end > n || begin > end) {
    raise(ErrorCode::OutOfBounds, "slice: window outside clip bounds");
  }
  AudioClip out;
  out.sample_rate = clip.sample_rate;
  out.samples.assign(clip.samples.begin() + begin, clip.samples.begin() + end);
  return out;
}

}  // namespace evalkit
