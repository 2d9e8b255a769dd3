#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "evalkit/audio.hpp"
#include "evalkit/error.hpp"

namespace evalkit {

struct SpeakerTurn {
  std::string speaker;
  double start_s = 0.0;  // half-open [start_s, end_s), millisecond precision
  double end_s = 0.0;
};

struct SpeakerTurnManifest {
  std::vector<SpeakerTurn> segments;

  std::set<std::string> speakers() const {
    std::set<std::string> ids;
    for (const auto& s : segments) ids.insert(s.speaker);
    return ids;
  }
};

namespace detail {
inline double round_ms(double seconds) { return std::round(seconds * 1000.0) / 1000.0; }
}  // namespace detail

inline SpeakerTurnManifest parse_speaker_turns(const nlohmann::json& doc,
                                               const std::string& origin = "manifest") {
  if (!doc.is_object() || !doc.contains("segments") || !doc["segments"].is_array()) {
    raise(ErrorCode::SchemaViolation, origin + ": expected object with a \"segments\" array");
  }
  SpeakerTurnManifest manifest;
  std::size_t idx = 0;
  for (const auto& seg : doc["segments"]) {
    const std::string where = origin + ": segments[" + std::to_string(idx) + "]";
    if (!seg.is_object() || !seg.contains("speaker") || !seg.contains("start_s") ||
        !seg.contains("end_s") || !seg["speaker"].is_string() ||
        !seg["start_s"].is_number() || !seg["end_s"].is_number()) {
      raise(ErrorCode::SchemaViolation, where + ": need speaker, start_s, end_s");
    }
    SpeakerTurn turn;
    turn.speaker = seg["speaker"].get<std::string>();
    turn.start_s = detail::round_ms(seg["start_s"].get<double>());
    turn.end_s = detail::round_ms(seg["end_s"].get<double>());
    if (turn.start_s < 0.0 || turn.end_s <= turn.start_s) {
      raise(ErrorCode::SchemaViolation, where + ": need 0 <= start_s < end_s");
    }
    manifest.segments.push_back(turn);
    ++idx;
  }
  std::sort(manifest.segments.begin(), manifest.segments.end(),
            [](const SpeakerTurn& a, const SpeakerTurn& b) { return a.start_s < b.start_s; });
  for (std::size_t i = 1; i < manifest.segments.size(); ++i) {
    if (manifest.segments[i].start_s < manifest.segments[i - 1].end_s - 1e-9) {
      raise(ErrorCode::SchemaViolation,
            origin + ": segments overlap at " + std::to_string(manifest.segments[i].start_s));
    }
  }
  return manifest;
}

inline SpeakerTurnManifest load_speaker_turns(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::IoError, "cannot open " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    raise(ErrorCode::SchemaViolation, path + ": " + e.what());
  }
  return parse_speaker_turns(doc, path);
}

// Concatenates one speaker's segments in temporal order into a single stream.
inline AudioClip concat_speaker_stream(const AudioClip& clip,
                                       const SpeakerTurnManifest& manifest,
                                       const std::string& speaker_id) {
  bool found = false;
  for (const auto& seg : manifest.segments) {
    if (seg.speaker == speaker_id) {
      found = true;
      break;
    }
  }
  if (!found) raise(ErrorCode::UnknownSpeaker, "no segments for speaker " + speaker_id);

  AudioClip out;
  out.sample_rate = clip.sample_rate;
  const auto n = static_cast<long long>(clip.samples.size());
  for (const auto& seg : manifest.segments) {
    if (seg.speaker != speaker_id) continue;
    const auto begin = static_cast<long long>(std::llround(seg.start_s * clip.sample_rate));
    const auto end = static_cast<long long>(std::llround(seg.end_s * clip.sample_rate));
    if (begin < 0 || end > n) {
      raise(ErrorCode::OutOfBounds, "segment [" + std::to_string(seg.start_s) + ", " +
                                        std::to_string(seg.end_s) + ") outside clip");
    }
    out.samples.insert(out.samples.end(), clip.samples.begin() + begin,
                       clip.samples.begin() + end);
  }
  return out;
}

}  // namespace evalkit
