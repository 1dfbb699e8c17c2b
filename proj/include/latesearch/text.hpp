// Copyright 2026 The latesearch authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace latesearch {

// Whitespace/punctuation word tokenizer over UTF-8 with a small built-in
// case-folding table (ASCII, Latin-1/Extended-A, Greek, Cyrillic). Tokens are
// maximal runs of non-separator codepoints, lowercased; separator-only spans
// never yield a token.

namespace unicode {

struct Decoded {
  char32_t cp;
  std::size_t len;
};

/// Decodes one codepoint; invalid bytes decode as U+FFFD of length 1.
inline Decoded decode_utf8(std::string_view s, std::size_t pos) {
  const unsigned char c0 = static_cast<unsigned char>(s[pos]);
  if (c0 < 0x80u) return {c0, 1};
  auto cont = [&](std::size_t i) {
    return pos + i < s.size() &&
           (static_cast<unsigned char>(s[pos + i]) & 0xC0u) == 0x80u;
  };
  auto cb = [&](std::size_t i) {
    return static_cast<char32_t>(static_cast<unsigned char>(s[pos + i]) & 0x3Fu);
  };
  if ((c0 & 0xE0u) == 0xC0u && cont(1)) {
    char32_t cp = ((c0 & 0x1Fu) << 6) | cb(1);
    if (cp >= 0x80) return {cp, 2};
  } else if ((c0 & 0xF0u) == 0xE0u && cont(1) && cont(2)) {
    char32_t cp = ((c0 & 0x0Fu) << 12) | (cb(1) << 6) | cb(2);
    if (cp >= 0x800 && !(cp >= 0xD800 && cp <= 0xDFFF)) return {cp, 3};
  } else if ((c0 & 0xF8u) == 0xF0u && cont(1) && cont(2) && cont(3)) {
    char32_t cp = ((c0 & 0x07u) << 18) | (cb(1) << 12) | (cb(2) << 6) | cb(3);
    if (cp >= 0x10000 && cp <= 0x10FFFF) return {cp, 4};
  }
  return {0xFFFD, 1};
}

inline void append_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0u | (cp >> 6)));
    out.push_back(static_cast<char>(0x80u | (cp & 0x3Fu)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0u | (cp >> 12)));
    out.push_back(static_cast<char>(0x80u | ((cp >> 6) & 0x3Fu)));
    out.push_back(static_cast<char>(0x80u | (cp & 0x3Fu)));
  } else {
    out.push_back(static_cast<char>(0xF0u | (cp >> 18)));
    out.push_back(static_cast<char>(0x80u | ((cp >> 12) & 0x3Fu)));
    out.push_back(static_cast<char>(0x80u | ((cp >> 6) & 0x3Fu)));
    out.push_back(static_cast<char>(0x80u | (cp & 0x3Fu)));
  }
}

inline bool is_whitespace(char32_t cp) {
  if (cp <= 0x20 || cp == 0x7F) return true;  // controls and space
  switch (cp) {
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return (cp >= 0x2000 && cp <= 0x200A);
  }
}

inline bool is_punctuation(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  }
  if ((cp >= 0xA1 && cp <= 0xBF) || cp == 0xD7 || cp == 0xF7) return true;
  if (cp >= 0x2010 && cp <= 0x2027) return true;   // dashes, quotes, bullets
  if (cp >= 0x2030 && cp <= 0x205E) return true;   // permille .. punct space
  if (cp >= 0x2E00 && cp <= 0x2E7F) return true;   // supplemental punctuation
  if (cp >= 0x3001 && cp <= 0x303F) return true;   // CJK punctuation
  if (cp >= 0xFE30 && cp <= 0xFE4F) return true;   // CJK compat forms
  if (cp >= 0xFF01 && cp <= 0xFF0F) return true;   // fullwidth punctuation
  if (cp >= 0xFF1A && cp <= 0xFF20) return true;
  if (cp >= 0xFF3B && cp <= 0xFF40) return true;
  if (cp >= 0xFF5B && cp <= 0xFF65) return true;
  return false;
}

inline bool is_separator(char32_t cp) {
  return is_whitespace(cp) || is_punctuation(cp);
}

inline char32_t to_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp >= 0x100 && cp <= 0x177) return (cp & 1) ? cp : cp + 1;
  if (cp == 0x178) return 0xFF;
  if (cp == 0x179 || cp == 0x17B || cp == 0x17D) return cp + 1;
  if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  return cp;
}

}  // namespace unicode

/// Lowercased word tokens of `text`, in order.
inline std::vector<std::string> tokenize_words(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto [cp, len] = unicode::decode_utf8(text, pos);
    pos += len;
    if (unicode::is_separator(cp)) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      unicode::append_utf8(unicode::to_lower(cp), current);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

/// Session-scoped vocabulary; ids are dense, assigned in first-seen order.
class Vocabulary {
 public:
  std::uint32_t id_of(const std::string& token) {
    auto it = ids_.find(token);
    if (it != ids_.end()) return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(tokens_.size());
    ids_.emplace(token, id);
    tokens_.push_back(token);
    return id;
  }

  std::size_t size() const { return tokens_.size(); }
  const std::string& token(std::uint32_t id) const { return tokens_[id]; }

 private:
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<std::string> tokens_;
};

struct TokenSequence {
  std::vector<std::string> tokens;
  std::vector<std::uint32_t> token_ids;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

/// Tokenizer bound to one vocabulary session.
class Tokenizer {
 public:
  TokenSequence tokenize(std::string_view text) {
    TokenSequence seq;
    seq.tokens = tokenize_words(text);
    seq.token_ids.reserve(seq.tokens.size());
    for (const auto& t : seq.tokens) seq.token_ids.push_back(vocab_.id_of(t));
    return seq;
  }

  Vocabulary& vocabulary() { return vocab_; }
  const Vocabulary& vocabulary() const { return vocab_; }

 private:
  Vocabulary vocab_;
};

}  // namespace latesearch
