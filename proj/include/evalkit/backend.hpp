#pragma once

#include <memory>
#include <string>
#include <vector>

#include "evalkit/audio.hpp"
#include "evalkit/error.hpp"
#include "evalkit/vad.hpp"

namespace evalkit::backend {

enum class Kind { Embedder, Asr, Judge, Quality, Vad };

inline const char* to_string(Kind kind) {
  switch (kind) {
    case Kind::Embedder: return "embedder";
    case Kind::Asr: return "asr";
    case Kind::Judge: return "judge";
    case Kind::Quality: return "quality";
    case Kind::Vad: return "vad";
  }
  return "unknown";
}

enum class Language { Zh, En };

inline const char* to_string(Language lang) { return lang == Language::Zh ? "zh" : "en"; }

inline Language parse_language(const std::string& tag) {
  if (tag == "zh") return Language::Zh;
  if (tag == "en") return Language::En;
  raise(ErrorCode::SchemaViolation, "language must be \"zh\" or \"en\", got \"" + tag + "\"");
}

// Out-of-band request tags. Transports do not send these on the wire; mocks
// key their scripted behavior on them.
struct RequestContext {
  std::string clip_id;
  std::string template_id;
  int trial = 0;
};

struct Endpoint {
  Kind kind = Kind::Embedder;
  std::string url;      // HTTP transport when set
  std::string command;  // subprocess transport when set
  double timeout_s = 30.0;
  int max_retries = 3;
  std::string auth_token_env;   // name of the env var holding the bearer token
  int audio_rate = 16000;       // rate audio is resampled to before encoding
  std::size_t max_payload_bytes = 64ull * 1024 * 1024;
  std::string id;               // provenance label
};

class EmbedderBackend {
 public:
  virtual ~EmbedderBackend() = default;
  // Fixed-dimension speaker embedding; dimension must stay constant per run.
  virtual std::vector<double> embed(const AudioClip& clip, const RequestContext& ctx) = 0;
  virtual std::string describe() const = 0;
};

class AsrBackend {
 public:
  virtual ~AsrBackend() = default;
  virtual std::string transcribe(const AudioClip& clip, Language language,
                                 const RequestContext& ctx) = 0;
  virtual std::string describe() const = 0;
};

class JudgeBackend {
 public:
  virtual ~JudgeBackend() = default;
  // Raw (unparsed) response text for the given prompt.
  virtual std::string judge(const AudioClip& clip, const std::string& prompt,
                            const RequestContext& ctx) = 0;
  virtual std::string describe() const = 0;
};

class QualityBackend {
 public:
  virtual ~QualityBackend() = default;
  virtual double quality(const AudioClip& clip, const RequestContext& ctx) = 0;
  virtual std::string describe() const = 0;
};

class VadBackend {
 public:
  virtual ~VadBackend() = default;
  virtual VadMask vad(const AudioClip& clip, const RequestContext& ctx) = 0;
  virtual std::string describe() const = 0;
};

struct BackendSet {
  std::shared_ptr<EmbedderBackend> embedder;
  std::shared_ptr<AsrBackend> asr;
  std::shared_ptr<JudgeBackend> judge;
  std::shared_ptr<QualityBackend> quality;
  std::shared_ptr<VadBackend> vad;  // optional; energy VAD is the fallback
};

}  // namespace evalkit::backend
