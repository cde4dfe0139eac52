#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace prockit {

/// Decode UTF-8 into code points. Invalid sequences become U+FFFD.
std::u32string decode_utf8(std::string_view s);

std::string encode_utf8(const std::u32string& cps);

/// Unicode canonical composition (NFC).
std::string nfc(std::string_view s);

/// Storage-time normalization applied when corpora are loaded:
/// NFC, interior whitespace runs collapsed to a single space,
/// leading/trailing whitespace stripped. Case is preserved.
std::string normalize_stored(std::string_view s);

/// Matching-time normalization used by the scoring code:
/// normalize_stored, then per-code-point lowercasing, then punctuation
/// stripped from both ends of the phrase.
std::string normalize_match(std::string_view s);

/// Lowercased whitespace-split tokens with edge punctuation stripped per
/// token; tokens that reduce to nothing are dropped.
std::vector<std::string> tokenize(std::string_view s);

/// First token of tokenize(s), or "" when there is none.
std::string head_token(std::string_view s);

bool is_space_cp(char32_t c);
bool is_punct_cp(char32_t c);
char32_t lower_cp(char32_t c);

}  // namespace prockit
