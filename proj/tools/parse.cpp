#include "parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace divpow::cli {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view src) : src_(src) {}

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  bool at_end() {
    skip_space();
    return pos_ >= src_.size();
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  // peek without skipping whitespace, for tokens that must be contiguous
  char peek_raw() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }

  Int integer() {
    skip_space();
    return raw_integer();
  }

  Int raw_integer() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
    if (start == pos_) fail("expected an integer" + found());
    return Int(std::string(src_.substr(start, pos_ - start)), 10);
  }

  std::uint32_t small_integer(const char* what) {
    auto [line, col] = position();
    Int v = integer();
    if (v > 0xFFFFFFFFu) throw ParseError(line, col, std::string(what) + " is too large");
    return static_cast<std::uint32_t>(v.get_ui());
  }

  std::pair<std::size_t, std::size_t> position() {
    skip_space();
    return {line_, column_};
  }

  [[noreturn]] void fail(const std::string& message) { throw ParseError(line_, column_, message); }

  std::string found() const {
    if (pos_ >= src_.size()) return ", found end of input";
    return std::string(", found '") + src_[pos_] + "'";
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

Word parse_word(Cursor& cur, std::uint32_t m) {
  if (cur.peek() == '1') {
    cur.expect('1');
    if (std::isdigit(static_cast<unsigned char>(cur.peek_raw()))) cur.fail("the unit word is written '1'");
    return Word();
  }
  std::vector<Word::Letter> letters;
  do {
    auto [line, col] = cur.position();
    cur.expect('x');
    Int idx = cur.raw_integer();
    if (idx < 1 || idx > m)
      throw ParseError(line, col, "letter x" + idx.get_str() + " outside the alphabet x1..x" + std::to_string(m));
    letters.push_back(static_cast<Word::Letter>(idx.get_ui()));
  } while (cur.peek_raw() == '.' && cur.accept('.'));
  return Word(std::move(letters));
}

GammaElem parse_basis(Cursor& cur, std::uint32_t n, std::uint32_t m) {
  auto [line, col] = cur.position();
  cur.expect('D');
  cur.expect('(');
  auto [nline, ncol] = cur.position();
  const std::uint32_t declared = cur.small_integer("degree");
  if (declared != n)
    throw ParseError(nline, ncol, "element of degree " + std::to_string(declared) + " where n=" + std::to_string(n) + " is expected");
  cur.expect(';');
  std::vector<Part> raw;
  std::optional<std::uint64_t> unit_exponent;
  std::uint64_t weight = 0;
  if (cur.peek() != ')') {
    do {
      Word w = parse_word(cur, m);
      std::uint32_t mult = 1;
      if (cur.accept('^')) {
        auto [eline, ecol] = cur.position();
        mult = cur.small_integer("exponent");
        if (mult == 0) throw ParseError(eline, ecol, "exponents must be positive");
      }
      if (w.empty()) {
        unit_exponent = unit_exponent.value_or(0) + mult;
      } else {
        weight += mult;
        raw.emplace_back(std::move(w), mult);
      }
    } while (cur.accept(','));
  }
  cur.expect(')');
  if (weight > n)
    throw ParseError(line, col, "weight " + std::to_string(weight) + " exceeds n=" + std::to_string(n));
  if (unit_exponent && *unit_exponent != n - weight)
    throw ParseError(line, col, "explicit 1-exponent " + std::to_string(*unit_exponent) + " differs from n - weight = " +
                                    std::to_string(n - weight));
  return merge_parts(n, raw);
}

}  // namespace

GammaElem parse_element(std::string_view src, std::uint32_t n, std::uint32_t m) {
  Cursor cur(src);
  GammaElem out(n);
  if (cur.peek() == '0') {
    cur.expect('0');
    if (!cur.at_end()) cur.fail("unexpected trailing input" + cur.found());
    return out;
  }
  bool negative = cur.accept('-');
  while (true) {
    Int coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = cur.integer();
      cur.expect('*');
    }
    GammaElem term = parse_basis(cur, n, m);
    out += term * (negative ? Int(-coeff) : coeff);
    if (cur.accept('+')) {
      negative = false;
    } else if (cur.accept('-')) {
      negative = true;
    } else {
      break;
    }
  }
  if (!cur.at_end()) cur.fail("unexpected trailing input" + cur.found());
  return out;
}

FreeElem parse_free(std::string_view src, std::uint32_t m) {
  Cursor cur(src);
  FreeElem out;
  bool negative = cur.accept('-');
  while (true) {
    Int coeff = 1;
    Word w;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      auto [line, col] = cur.position();
      Int value = cur.integer();
      if (cur.accept('*')) {
        coeff = value;
        w = parse_word(cur, m);
      } else if (value != 1) {
        throw ParseError(line, col, "expected '*' after coefficient");
      }
    } else {
      w = parse_word(cur, m);
    }
    out.add_term(w, negative ? Int(-coeff) : coeff);
    if (cur.accept('+')) {
      negative = false;
    } else if (cur.accept('-')) {
      negative = true;
    } else {
      break;
    }
  }
  if (!cur.at_end()) cur.fail("unexpected trailing input" + cur.found());
  return out;
}

}  // namespace divpow::cli
