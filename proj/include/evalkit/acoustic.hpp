#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "evalkit/audio.hpp"
#include "evalkit/backend.hpp"
#include "evalkit/error.hpp"
#include "evalkit/log.hpp"
#include "evalkit/srmr.hpp"
#include "evalkit/vad.hpp"
#include "evalkit/windows.hpp"

namespace evalkit {

// Windowed speaker embeddings e_i with their source windows.
struct EmbeddingSequence {
  std::vector<std::vector<double>> vectors;
  std::vector<WindowSlice> windows;

  std::size_t size() const { return vectors.size(); }
};

namespace detail {

inline std::vector<double> unit_vector(const std::vector<double>& v) {
  double norm_sq = 0.0;
  for (double x : v) norm_sq += x * x;
  if (norm_sq <= 0.0) raise(ErrorCode::ZeroNormEmbedding, "embedding has zero norm");
  const double inv = 1.0 / std::sqrt(norm_sq);
  std::vector<double> u(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) u[i] = v[i] * inv;
  return u;
}

}  // namespace detail

// Mean pairwise cosine similarity over all distinct embedding pairs, via the
// closed form (|sum of unit vectors|^2 - n) / (n (n - 1)).
inline double timbre_consistency_single(const EmbeddingSequence& emb) {
  const std::size_t n = emb.vectors.size();
  if (n < 2) {
    raise(ErrorCode::InsufficientWindows, "timbre consistency needs at least 2 windows");
  }
  std::vector<double> sum;
  for (const auto& v : emb.vectors) {
    const auto u = detail::unit_vector(v);
    if (sum.empty()) {
      sum = u;
    } else {
      if (u.size() != sum.size()) {
        raise(ErrorCode::DimensionMismatch, "embedding dimension changed mid-sequence");
      }
      for (std::size_t i = 0; i < u.size(); ++i) sum[i] += u[i];
    }
  }
  double norm_sq = 0.0;
  for (double x : sum) norm_sq += x * x;
  const double nd = static_cast<double>(n);
  return (norm_sq - nd) / (nd * (nd - 1.0));
}

// Mean of the per-speaker consistency scores a_k.
inline double timbre_consistency_multi(
    const std::vector<std::pair<std::string, double>>& per_speaker) {
  if (per_speaker.empty()) {
    raise(ErrorCode::EmptyInput, "timbre_consistency_multi: no speakers");
  }
  double sum = 0.0;
  for (const auto& [id, score] : per_speaker) sum += score;
  return sum / static_cast<double>(per_speaker.size());
}

// Mean cosine similarity between each windowed embedding and a reference.
inline double timbre_similarity(const EmbeddingSequence& emb,
                                const std::vector<double>& reference) {
  if (emb.vectors.empty()) {
    raise(ErrorCode::InsufficientWindows, "timbre_similarity: no embeddings");
  }
  const auto ref = detail::unit_vector(reference);
  double sum = 0.0;
  for (const auto& v : emb.vectors) {
    const auto u = detail::unit_vector(v);
    if (u.size() != ref.size()) {
      raise(ErrorCode::DimensionMismatch, "embedding/reference dimension mismatch");
    }
    double dot = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) dot += u[i] * ref[i];
    sum += dot;
  }
  return sum / static_cast<double>(emb.vectors.size());
}

enum class TimbreBand { SignificantDrift, Acceptable, Superior };

inline const char* to_string(TimbreBand band) {
  switch (band) {
    case TimbreBand::SignificantDrift: return "significant timbre drift";
    case TimbreBand::Acceptable: return "acceptable";
    case TimbreBand::Superior: return "superior";
  }
  return "unknown";
}

// Score bands observed in listener studies: below 0.85 reads as audible
// drift, at or above 0.93 as ground-truth-like maintenance.
inline TimbreBand classify_timbre(double score) {
  if (score < 0.85) return TimbreBand::SignificantDrift;
  if (score >= 0.93) return TimbreBand::Superior;
  return TimbreBand::Acceptable;
}

// Windowed SRMR values retained after VAD gating.
struct ReverbSeries {
  std::vector<double> scores;
  std::vector<WindowSlice> windows;
};

struct ReverbConfig {
  double window_s = 3.0;
  double stride_s = 2.0;
  double min_speech_ratio = 0.4;  // drop windows with more than 60% non-speech
  srmr::SrmrConfig srmr;
};

inline ReverbSeries reverb_series(const AudioClip& clip, const VadMask& mask,
                                  const ReverbConfig& cfg = {}) {
  ReverbSeries series;
  for (const auto& w : plan_windows(clip.duration_s(), cfg.window_s, cfg.stride_s)) {
    if (speech_ratio(mask, w) < cfg.min_speech_ratio) continue;
    series.scores.push_back(srmr::score(slice(clip, w), cfg.srmr));
    series.windows.push_back(w);
  }
  return series;
}

// Population standard deviation of a reverb score series.
inline double reverb_std(const std::vector<double>& scores) {
  if (scores.size() < 2) {
    raise(ErrorCode::InsufficientWindows, "reverb consistency needs at least 2 windows");
  }
  double mean = 0.0;
  for (double s : scores) mean += s;
  mean /= static_cast<double>(scores.size());
  double var = 0.0;
  for (double s : scores) var += (s - mean) * (s - mean);
  var /= static_cast<double>(scores.size());
  return std::sqrt(var);
}

inline double reverb_consistency(const AudioClip& clip, const VadMask& mask,
                                 const ReverbConfig& cfg = {}) {
  return reverb_std(reverb_series(clip, mask, cfg).scores);
}

// Non-intrusive quality score clamped to the backend's nominal output range.
inline double sound_fidelity(const AudioClip& clip, backend::QualityBackend& quality,
                             const backend::RequestContext& ctx = {}) {
  constexpr double kLo = -0.5, kHi = 4.5;
  const double raw = quality.quality(clip, ctx);
  if (raw < kLo || raw > kHi) {
    log_warn("sound_fidelity: backend score " + std::to_string(raw) + " clamped to [" +
             std::to_string(kLo) + ", " + std::to_string(kHi) + "]");
    return std::clamp(raw, kLo, kHi);
  }
  return raw;
}

}  // namespace evalkit
