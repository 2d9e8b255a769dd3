#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "evalkit/audio.hpp"
#include "evalkit/backend.hpp"
#include "evalkit/error.hpp"
#include "evalkit/resample.hpp"
#include "evalkit/zh_charmap.hpp"

namespace evalkit::text {

using backend::Language;

struct Transcript {
  std::string text;  // UTF-8
  Language language = Language::En;
};

// Levenshtein decomposition against a reference of ref_len tokens.
struct EditAlignment {
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t ref_len = 0;

  std::size_t total() const { return substitutions + deletions + insertions; }
};

namespace detail {

// Decodes the codepoint starting at byte i; advances i past it. Invalid bytes
// decode as U+FFFD and are consumed one at a time.
inline char32_t decode_utf8(const std::string& s, std::size_t& i) {
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  const unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    i += 1;
    return b0;
  }
  auto cont = [&](std::size_t k) { return k < s.size() && (byte(k) & 0xC0) == 0x80; };
  if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
    const char32_t cp = ((b0 & 0x1Fu) << 6) | (byte(i + 1) & 0x3Fu);
    i += 2;
    return cp;
  }
  if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
    const char32_t cp =
        ((b0 & 0x0Fu) << 12) | ((byte(i + 1) & 0x3Fu) << 6) | (byte(i + 2) & 0x3Fu);
    i += 3;
    return cp;
  }
  if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
    const char32_t cp = ((b0 & 0x07u) << 18) | ((byte(i + 1) & 0x3Fu) << 12) |
                        ((byte(i + 2) & 0x3Fu) << 6) | (byte(i + 3) & 0x3Fu);
    i += 4;
    return cp;
  }
  i += 1;
  return 0xFFFD;
}

inline void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::vector<char32_t> to_codepoints(const std::string& s) {
  std::vector<char32_t> cps;
  std::size_t i = 0;
  while (i < s.size()) cps.push_back(decode_utf8(s, i));
  return cps;
}

inline std::string from_codepoints(const std::vector<char32_t>& cps) {
  std::string out;
  for (char32_t cp : cps) encode_utf8(cp, out);
  return out;
}

inline bool is_ascii_punct(char32_t cp) {
  return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
         (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
}

inline bool is_cjk_punct(char32_t cp) {
  if (cp >= 0x3001 && cp <= 0x303F) return true;  // CJK symbols except U+3000
  if (cp >= 0xFF01 && cp <= 0xFF0F) return true;  // fullwidth forms, punctuation
  if (cp >= 0xFF1A && cp <= 0xFF20) return true;
  if (cp >= 0xFF3B && cp <= 0xFF40) return true;
  if (cp >= 0xFF5B && cp <= 0xFF65) return true;
  if (cp >= 0x2010 && cp <= 0x2027) return true;  // dashes, curly quotes, ellipsis
  if (cp >= 0x2030 && cp <= 0x205E) return true;
  if (cp >= 0xFE10 && cp <= 0xFE19) return true;  // vertical/small form variants
  if (cp >= 0xFE30 && cp <= 0xFE6F) return true;
  return cp == 0x00B7 || cp == 0xFFE5;            // middle dot, fullwidth yen
}

inline bool is_space(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' || cp == '\v' ||
         cp == 0x3000 || (cp >= 0x2000 && cp <= 0x200A) || cp == 0x00A0;
}

inline char32_t to_simplified(char32_t cp) {
  const auto& table = kTraditionalToSimplified;
  auto it = std::lower_bound(table.begin(), table.end(), cp,
                             [](const auto& entry, char32_t key) { return entry.first < key; });
  if (it != table.end() && it->first == cp) return it->second;
  return cp;
}

inline bool is_ascii_alnum(char32_t cp) {
  return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
}

}  // namespace detail

// Punctuation removal, whitespace collapsing, and per-language character
// normalization: zh maps traditional to simplified; en drops non-ASCII and
// folds to lowercase. Idempotent.
inline Transcript normalize_text(const Transcript& t) {
  std::vector<char32_t> cps = detail::to_codepoints(t.text);
  std::vector<char32_t> kept;
  kept.reserve(cps.size());
  bool pending_space = false;
  for (char32_t cp : cps) {
    if (detail::is_ascii_punct(cp) || detail::is_cjk_punct(cp)) continue;
    if (detail::is_space(cp)) {
      pending_space = !kept.empty();
      continue;
    }
    if (t.language == Language::Zh) {
      cp = detail::to_simplified(cp);
    } else {
      if (cp >= 0x80) continue;
      if (cp >= 'A' && cp <= 'Z') cp = cp - 'A' + 'a';
    }
    if (pending_space) {
      kept.push_back(' ');
      pending_space = false;
    }
    kept.push_back(cp);
  }
  return {detail::from_codepoints(kept), t.language};
}

// en: whitespace-split words. zh: one token per character, except embedded
// ASCII letter/digit runs, which stay whole.
inline std::vector<std::string> tokenize(const Transcript& t) {
  std::vector<std::string> tokens;
  if (t.language == Language::En) {
    std::string word;
    for (char c : t.text) {
      if (c == ' ') {
        if (!word.empty()) tokens.push_back(std::move(word));
        word.clear();
      } else {
        word.push_back(c);
      }
    }
    if (!word.empty()) tokens.push_back(std::move(word));
    return tokens;
  }
  const auto cps = detail::to_codepoints(t.text);
  std::string run;
  for (char32_t cp : cps) {
    if (detail::is_ascii_alnum(cp)) {
      detail::encode_utf8(cp, run);
      continue;
    }
    if (!run.empty()) {
      tokens.push_back(std::move(run));
      run.clear();
    }
    if (cp == ' ') continue;
    std::string tok;
    detail::encode_utf8(cp, tok);
    tokens.push_back(std::move(tok));
  }
  if (!run.empty()) tokens.push_back(std::move(run));
  return tokens;
}

// Minimal Levenshtein alignment with unit costs. Ties are broken preferring
// substitution, then deletion, then insertion.
inline EditAlignment edit_distance(const std::vector<std::string>& ref,
                                   const std::vector<std::string>& hyp) {
  const std::size_t m = ref.size(), n = hyp.size();
  struct Cell {
    std::uint32_t cost;
    std::uint32_t s, d, i;
  };
  std::vector<Cell> prev(n + 1), cur(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    prev[j] = {static_cast<std::uint32_t>(j), 0, 0, static_cast<std::uint32_t>(j)};
  }
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = {static_cast<std::uint32_t>(i), 0, static_cast<std::uint32_t>(i), 0};
    for (std::size_t j = 1; j <= n; ++j) {
      const bool match = ref[i - 1] == hyp[j - 1];
      Cell best = prev[j - 1];
      if (!match) ++best.s;
      const std::uint32_t diag_cost = prev[j - 1].cost + (match ? 0u : 1u);
      best.cost = diag_cost;
      if (prev[j].cost + 1 < best.cost) {
        best = prev[j];
        ++best.d;
        ++best.cost;
      }
      if (cur[j - 1].cost + 1 < best.cost) {
        best = cur[j - 1];
        ++best.i;
        ++best.cost;
      }
      cur[j] = best;
    }
    prev.swap(cur);
  }
  EditAlignment a;
  a.substitutions = prev[n].s;
  a.deletions = prev[n].d;
  a.insertions = prev[n].i;
  a.ref_len = m;
  return a;
}

inline double error_rate(const EditAlignment& a) {
  if (a.ref_len == 0) raise(ErrorCode::EmptyReference, "error_rate: empty reference");
  return static_cast<double>(a.total()) / static_cast<double>(a.ref_len);
}

// WER (en) / CER (zh) between the ground truth and the ASR transcript of the
// generated audio.
inline double content_accuracy(const Transcript& ground_truth, const AudioClip& audio,
                               backend::AsrBackend& asr,
                               const backend::RequestContext& ctx = {}) {
  if (ground_truth.text.empty()) {
    raise(ErrorCode::EmptyReference, "content_accuracy: empty ground truth");
  }
  const std::string hyp_text = asr.transcribe(audio, ground_truth.language, ctx);
  const Transcript ref_norm = normalize_text(ground_truth);
  const Transcript hyp_norm = normalize_text({hyp_text, ground_truth.language});
  const auto ref_tokens = tokenize(ref_norm);
  const auto hyp_tokens = tokenize(hyp_norm);
  if (ref_tokens.empty()) {
    raise(ErrorCode::EmptyReference, "content_accuracy: reference empty after normalization");
  }
  return error_rate(edit_distance(ref_tokens, hyp_tokens));
}

}  // namespace evalkit::text
