#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "evalkit/error.hpp"

namespace evalkit {

// Mono waveform with amplitudes in [-1, 1].
struct AudioClip {
  std::vector<float> samples;
  int sample_rate = 0;

  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }
  bool empty() const { return samples.empty(); }
};

namespace detail {

inline std::uint32_t read_u32le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

inline std::uint16_t read_u16le(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

inline void write_u32le(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

inline void write_u16le(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

}  // namespace detail

// Reads a RIFF/WAVE file holding PCM16 or IEEE float32, 1 or 2 channels.
// Stereo is downmixed by channel mean; PCM16 is scaled by 1/32768 so the most
// negative code maps to -1.0 exactly.
inline AudioClip load_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::IoError, "cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    raise(ErrorCode::UnsupportedFormat, path + " is not a RIFF/WAVE file");
  }

  std::uint16_t format_tag = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  bool have_fmt = false;
  const unsigned char* data_ptr = nullptr;
  std::size_t data_len = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const char* chunk_id = reinterpret_cast<const char*>(bytes.data() + pos);
    const std::uint32_t chunk_size = detail::read_u32le(bytes.data() + pos + 4);
    const std::size_t body = pos + 8;
    if (body + chunk_size > bytes.size()) {
      raise(ErrorCode::CorruptFile, path + ": truncated chunk");
    }
    if (std::memcmp(chunk_id, "fmt ", 4) == 0) {
      if (chunk_size < 16) raise(ErrorCode::CorruptFile, path + ": short fmt chunk");
      format_tag = detail::read_u16le(bytes.data() + body);
      channels = detail::read_u16le(bytes.data() + body + 2);
      rate = detail::read_u32le(bytes.data() + body + 4);
      bits = detail::read_u16le(bytes.data() + body + 14);
      if (format_tag == 0xFFFE && chunk_size >= 40) {
        // WAVE_FORMAT_EXTENSIBLE: subformat GUID starts with the base tag.
        format_tag = detail::read_u16le(bytes.data() + body + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(chunk_id, "data", 4) == 0) {
      data_ptr = bytes.data() + body;
      data_len = chunk_size;
    }
    pos = body + chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data_ptr == nullptr) {
    raise(ErrorCode::CorruptFile, path + ": missing fmt or data chunk");
  }
  if (channels < 1 || channels > 2) {
    raise(ErrorCode::UnsupportedFormat, path + ": expected 1 or 2 channels");
  }
  if (rate == 0) raise(ErrorCode::CorruptFile, path + ": zero sample rate");

  const bool pcm16 = (format_tag == 1 && bits == 16);
  const bool f32 = (format_tag == 3 && bits == 32);
  if (!pcm16 && !f32) {
    raise(ErrorCode::UnsupportedFormat, path + ": only PCM16 and float32 are supported");
  }

  const std::size_t bytes_per_sample = pcm16 ? 2 : 4;
  const std::size_t frame_size = bytes_per_sample * channels;
  if (data_len % frame_size != 0) {
    raise(ErrorCode::CorruptFile, path + ": data size not a whole number of frames");
  }
  const std::size_t frames = data_len / frame_size;

  AudioClip clip;
  clip.sample_rate = static_cast<int>(rate);
  clip.samples.resize(frames);
  for (std::size_t i = 0; i < frames; ++i) {
    double acc = 0.0;
    for (std::uint16_t c = 0; c < channels; ++c) {
      const unsigned char* p = data_ptr + i * frame_size + c * bytes_per_sample;
      if (pcm16) {
        std::int16_t v;
        std::memcpy(&v, p, 2);
        acc += static_cast<double>(v) / 32768.0;
      } else {
        float v;
        std::memcpy(&v, p, 4);
        acc += v;
      }
    }
    clip.samples[i] = static_cast<float>(acc / channels);
  }
  return clip;
}

enum class WavEncoding { Pcm16, Float32 };

inline void save_wav(const std::string& path, const AudioClip& clip,
                     WavEncoding encoding = WavEncoding::Pcm16) {
  if (clip.sample_rate <= 0) raise(ErrorCode::UsageError, "save_wav: sample_rate must be > 0");
  const std::uint16_t bits = encoding == WavEncoding::Pcm16 ? 16 : 32;
  const std::uint16_t tag = encoding == WavEncoding::Pcm16 ? 1 : 3;
  const std::uint32_t byte_rate = clip.sample_rate * bits / 8;
  const std::uint32_t data_size = static_cast<std::uint32_t>(clip.samples.size() * bits / 8);

  std::string out;
  out.reserve(44 + data_size);
  out += "RIFF";
  detail::write_u32le(out, 36 + data_size);
  out += "WAVEfmt ";
  detail::write_u32le(out, 16);
  detail::write_u16le(out, tag);
  detail::write_u16le(out, 1);
  detail::write_u32le(out, static_cast<std::uint32_t>(clip.sample_rate));
  detail::write_u32le(out, byte_rate);
  detail::write_u16le(out, static_cast<std::uint16_t>(bits / 8));
  detail::write_u16le(out, bits);
  out += "data";
  detail::write_u32le(out, data_size);
  for (float s : clip.samples) {
    if (encoding == WavEncoding::Pcm16) {
      const double clipped = std::clamp(static_cast<double>(s), -1.0, 1.0);
      const auto v = static_cast<std::int16_t>(
          std::lround(std::clamp(clipped * 32768.0, -32768.0, 32767.0)));
      detail::write_u16le(out, static_cast<std::uint16_t>(v));
    } else {
      std::uint32_t bits32;
      std::memcpy(&bits32, &s, 4);
      detail::write_u32le(out, bits32);
    }
  }

  std::ofstream f(path, std::ios::binary);
  if (!f) raise(ErrorCode::IoError, "cannot write " + path);
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) raise(ErrorCode::IoError, "short write to " + path);
}

}  // namespace evalkit
