// Substitution source formats.
//
// Text: one rule per line, `<letter> -> <image>`. A letter is a single unicode
// code point or a backtick-quoted multi-character token; `#` starts a comment
// and blank lines are ignored. Whitespace inside an image is insignificant.
//
// JSON: {"alphabet": ["0", "1"], "rules": {"0": "01", "1": "10"}}. An image
// may also be given as an array of tokens.

#ifndef CONSTSUB_PARSE_HPP_
#define CONSTSUB_PARSE_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "constsub/substitution.hpp"

namespace constsub {

/// A token together with the 1-based column it started at.
struct Token {
  std::string text;
  std::size_t column = 0;
};

/// Splits text into letter tokens: code points, or backtick-quoted groups.
/// Whitespace separates nothing and is dropped. Throws ParseError on invalid
/// UTF-8 or an unterminated backtick.
[[nodiscard]] std::vector<Token> split_tokens(std::string_view text,
                                              std::size_t line = 0,
                                              std::size_t first_column = 1);

/// Parses either format; JSON is detected by a leading '{'.
[[nodiscard]] Substitution parse_substitution(std::string_view text);

[[nodiscard]] Substitution parse_substitution_text(std::string_view text);
[[nodiscard]] Substitution parse_substitution_json(std::string_view text);

[[nodiscard]] Substitution load_substitution(std::filesystem::path const& path);

/// Inverse of parse_substitution_text for well-formed substitutions.
[[nodiscard]] std::string to_text(Substitution const& s);

}  // namespace constsub

#endif  // CONSTSUB_PARSE_HPP_
