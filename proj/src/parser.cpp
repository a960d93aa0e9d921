#include "rsv/parser.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace rsv {

namespace {

constexpr std::size_t kMaxWordLength = 1u << 20;

// Bytes of U+2248 (the "almost equal" sign) in UTF-8.
constexpr std::string_view kApprox = "\xe2\x89\x88";

class IdentityParser {
 public:
  explicit IdentityParser(std::string_view text, int line)
      : text_(text), line_(line) {}

  Identity parse() {
    std::string lhs = parse_word("left side");
    if (!eat_equals()) fail("expected '=' between the two sides");
    std::string rhs = parse_word("right side");
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after the identity");
    return Identity{Word(lhs), Word(rhs)};
  }

 private:
  std::string parse_word(const char* what) {
    std::string out;
    skip_ws();
    if (!parse_term(out)) fail(std::string("empty ") + what);
    while (parse_term(out)) {
    }
    return out;
  }

  // term := atom ('^' nat)?; appends the expansion to out.
  bool parse_term(std::string& out) {
    skip_ws();
    std::string atom;
    if (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_]))) {
      atom.push_back(text_[pos_++]);
    } else if (pos_ < text_.size() && text_[pos_] == '(') {
      std::size_t open = pos_++;
      atom = parse_word("parenthesized word");
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        fail("unclosed '(' ", open);
      }
      ++pos_;
    } else {
      return false;
    }

    long exponent = 1;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      std::size_t caret = pos_++;
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a number after '^'", caret);
      }
      exponent = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        exponent = exponent * 10 + (text_[pos_] - '0');
        if (exponent > static_cast<long>(kMaxWordLength)) fail("exponent too large", caret);
        ++pos_;
      }
      if (exponent == 0) fail("exponent must be at least 1", caret);
    }

    if (out.size() + atom.size() * static_cast<std::size_t>(exponent) > kMaxWordLength) {
      fail("expanded word is too long");
    }
    for (long i = 0; i < exponent; ++i) out += atom;
    return true;
  }

  bool eat_equals() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '=') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, kApprox.size()) == kApprox) {
      pos_ += kApprox.size();
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& message) { fail(message, pos_); }

  [[noreturn]] void fail(const std::string& message, std::size_t at) {
    throw ParseError(message, line_, static_cast<int>(at) + 1);
  }

  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

Identity parse_identity(std::string_view text) {
  return IdentityParser(text, 0).parse();
}

IdentitySystem parse_system(std::string_view text, std::string source) {
  IdentitySystem system;
  system.source = std::move(source);

  std::set<std::string> seen;
  std::ostringstream errors;
  int error_count = 0;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (blank) {
      if (end == text.size()) break;
      continue;
    }

    try {
      Identity id = IdentityParser(line, line_no).parse();
      if (seen.insert(render(id)).second) system.identities.push_back(id);
    } catch (const ParseError& e) {
      if (error_count > 0) errors << '\n';
      errors << "line " << e.line << ", column " << e.column << ": " << e.what();
      ++error_count;
    }
    if (end == text.size()) break;
  }

  if (error_count > 0) throw ParseError(errors.str(), 0, 0);
  if (system.identities.empty()) throw ParseError("empty identity system", 0, 0);
  return system;
}

std::string render(const Word& w) {
  std::string out;
  int i = 0;
  while (i < w.length()) {
    int j = i;
    while (j < w.length() && w.at(j) == w.at(i)) ++j;
    out.push_back(w.at(i));
    if (j - i > 1) {
      out.push_back('^');
      out += std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

std::string render(const Identity& id) {
  return render(id.lhs) + "=" + render(id.rhs);
}

}  // namespace rsv
