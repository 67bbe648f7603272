#include "constsub/parse.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "constsub/error.hpp"

namespace constsub {

namespace {

// Length in bytes of the UTF-8 sequence introduced by `lead`, 0 if invalid.
std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  return 0;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<Token> split_tokens(std::string_view text, std::size_t line,
                                std::size_t first_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t column = first_column;
  while (i < text.size()) {
    char const c = text[i];
    if (is_space(c)) {
      ++i;
      ++column;
      continue;
    }
    if (c == '`') {
      auto close = text.find('`', i + 1);
      if (close == std::string_view::npos) {
        throw ParseError("unterminated backtick token", line, column);
      }
      if (close == i + 1) {
        throw ParseError("empty backtick token", line, column);
      }
      out.push_back({std::string(text.substr(i + 1, close - i - 1)), column});
      column += close - i + 1;
      i = close + 1;
      continue;
    }
    std::size_t const len = utf8_length(static_cast<unsigned char>(c));
    if (len == 0 || i + len > text.size()) {
      throw ParseError("invalid UTF-8 sequence", line, column);
    }
    out.push_back({std::string(text.substr(i, len)), column});
    i += len;
    ++column;
  }
  return out;
}

Substitution parse_substitution_text(std::string_view text) {
  std::vector<std::string> alphabet;
  std::vector<std::vector<Token>> raw_images;
  std::vector<std::size_t> rule_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    // '#' outside backticks starts a comment
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '`') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line = line.substr(0, i);
        break;
      }
    }
    if (trim(line).empty()) continue;

    auto arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      throw ParseError("expected '<letter> -> <image>'", line_no, 1);
    }
    auto lhs = split_tokens(line.substr(0, arrow), line_no, 1);
    if (lhs.size() != 1) {
      throw ParseError("left-hand side must be a single letter", line_no,
                       lhs.empty() ? 1 : lhs.back().column);
    }
    auto rhs = split_tokens(line.substr(arrow + 2), line_no, arrow + 3);
    if (rhs.empty()) {
      throw ParseError("empty image for letter '" + lhs.front().text + "'", line_no,
                       arrow + 3);
    }
    for (auto const& seen : alphabet) {
      if (seen == lhs.front().text) {
        throw ParseError("duplicate letter definition '" + seen + "'", line_no,
                         lhs.front().column);
      }
    }
    alphabet.push_back(lhs.front().text);
    raw_images.push_back(std::move(rhs));
    rule_lines.push_back(line_no);
    if (eol == text.size()) break;
  }
  if (alphabet.empty()) {
    throw ParseError("no rules found");
  }

  std::vector<Word> images;
  for (std::size_t r = 0; r < raw_images.size(); ++r) {
    Word w;
    for (Token const& t : raw_images[r]) {
      Letter found = 0;
      bool ok = false;
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        if (alphabet[a] == t.text) {
          found = static_cast<Letter>(a);
          ok = true;
          break;
        }
      }
      if (!ok) {
        throw ParseError("unknown letter '" + t.text + "' in image", rule_lines[r],
                         t.column);
      }
      w.push_back(found);
    }
    images.push_back(std::move(w));
  }
  return Substitution(std::move(alphabet), std::move(images));
}

Substitution parse_substitution_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("alphabet") || !doc.contains("rules")) {
    throw ParseError("JSON substitution needs 'alphabet' and 'rules'");
  }
  auto const& jalpha = doc.at("alphabet");
  auto const& jrules = doc.at("rules");
  if (!jalpha.is_array() || !jrules.is_object()) {
    throw ParseError("'alphabet' must be an array and 'rules' an object");
  }
  std::vector<std::string> alphabet;
  for (auto const& t : jalpha) {
    if (!t.is_string()) throw ParseError("alphabet entries must be strings");
    for (auto const& seen : alphabet) {
      if (seen == t.get<std::string>()) {
        throw ParseError("duplicate letter definition '" + seen + "'");
      }
    }
    alphabet.push_back(t.get<std::string>());
  }
  for (auto it = jrules.begin(); it != jrules.end(); ++it) {
    if (std::find(alphabet.begin(), alphabet.end(), it.key()) == alphabet.end()) {
      throw ParseError("rule for unknown letter '" + it.key() + "'");
    }
  }
  auto index_of = [&](std::string const& tok) -> Letter {
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      if (alphabet[a] == tok) return static_cast<Letter>(a);
    }
    throw ParseError("unknown letter '" + tok + "' in image");
  };
  std::vector<Word> images;
  for (auto const& letter : alphabet) {
    if (!jrules.contains(letter)) {
      throw ParseError("missing rule for letter '" + letter + "'");
    }
    auto const& img = jrules.at(letter);
    Word w;
    if (img.is_string()) {
      for (Token const& t : split_tokens(img.get<std::string>())) {
        w.push_back(index_of(t.text));
      }
    } else if (img.is_array()) {
      for (auto const& t : img) {
        if (!t.is_string()) throw ParseError("image tokens must be strings");
        w.push_back(index_of(t.get<std::string>()));
      }
    } else {
      throw ParseError("image of '" + letter + "' must be a string or an array");
    }
    if (w.empty()) {
      throw ParseError("empty image for letter '" + letter + "'");
    }
    images.push_back(std::move(w));
  }
  return Substitution(std::move(alphabet), std::move(images));
}

Substitution parse_substitution(std::string_view text) {
  std::string_view t = trim(text);
  if (!t.empty() && t.front() == '{') {
    return parse_substitution_json(t);
  }
  return parse_substitution_text(text);
}

Substitution load_substitution(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot read '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_substitution(buf.str());
}

std::string to_text(Substitution const& s) {
  std::string out;
  for (Letter a = 0; a < s.size(); ++a) {
    out += s.render(a) + " -> " + s.render(s.image(a)) + "\n";
  }
  return out;
}

}  // namespace constsub
