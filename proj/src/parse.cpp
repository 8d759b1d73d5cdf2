#include <cctype>
#include <string>

#include "ncsf/errors.hpp"
#include "ncsf/ratfunc.hpp"

namespace ncsf {
namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  RatFunc parse() {
    RatFunc value = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("parse error at " + std::to_string(pos_) + " (" + what + "): " + s_);
  }

  void skip() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '\\'))
      ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
           std::string_view("yqtxabuh").find(c) != std::string_view::npos;
  }

  RatFunc expr() {
    RatFunc value;
    bool first = true;
    for (;;) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      RatFunc t = term();
      value += sign < 0 ? -t : t;
      first = false;
    }
    return value;
  }

  RatFunc term() {
    RatFunc value = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        value *= power();
      } else if (c == '/') {
        ++pos_;
        value /= power();
      } else if (starts_factor(c)) {
        value *= power();
      } else {
        break;
      }
    }
    return value;
  }

  RatFunc power() {
    RatFunc base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      bool braced = pos_ < s_.size() && s_[pos_] == '{';
      if (braced) ++pos_;
      unsigned e = static_cast<unsigned>(integer());
      if (braced) expect('}');
      RatFunc out(1);
      for (unsigned k = 0; k < e; ++k) out *= base;
      return out;
    }
    return base;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  // Index after '_': either a braced group or a single character.
  std::string index() {
    if (pos_ >= s_.size() || s_[pos_] != '_') fail("expected '_'");
    ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '{') {
      std::size_t close = s_.find('}', pos_);
      if (close == std::string::npos) fail("unclosed index");
      std::string inner = s_.substr(pos_ + 1, close - pos_ - 1);
      pos_ = close + 1;
      std::string cleaned;
      for (char ch : inner)
        if (!std::isspace(static_cast<unsigned char>(ch))) cleaned.push_back(ch);
      return cleaned;
    }
    if (pos_ >= s_.size()) fail("missing index");
    return std::string(1, s_[pos_++]);
  }

  static int to_int(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidArgument("bad variable index: " + text);
    return std::stoi(text);
  }

  Var matrix_param(bool is_q, const std::string& idx) {
    auto comma = idx.find(',');
    int i = 0;
    int j = 0;
    if (comma != std::string::npos) {
      i = to_int(idx.substr(0, comma));
      j = to_int(idx.substr(comma + 1));
    } else if (idx.size() == 2) {
      i = idx[0] - '0';
      j = idx[1] - '0';
    } else {
      int k = to_int(idx);
      return is_q ? vars::qs(k) : vars::ts(k);
    }
    return is_q ? vars::q(i, j) : vars::t(i, j);
  }

  RatFunc primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RatFunc inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(Rational(integer()));
    if (c == '\0') fail("unexpected end");
    ++pos_;
    bool indexed = pos_ < s_.size() && s_[pos_] == '_';
    switch (c) {
      case 'y':
        if (!indexed) return RatFunc(vars::yv());
        return RatFunc(vars::y(index()));
      case 'q':
        if (!indexed) return RatFunc(vars::q1());
        return RatFunc(matrix_param(true, index()));
      case 't':
        if (!indexed) return RatFunc(vars::t1());
        return RatFunc(matrix_param(false, index()));
      case 'x':
        if (!indexed) return RatFunc(vars::x());
        return RatFunc(vars::x(to_int(index())));
      case 'a':
        return RatFunc(vars::a());
      case 'b':
        return RatFunc(vars::b());
      case 'u':
        return RatFunc(vars::u(to_int(index())));
      case 'h':
        return RatFunc(vars::h(to_int(index())));
      default:
        --pos_;
        fail("unexpected character");
    }
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text) { return Parser(text).parse(); }

MPoly parse_poly(const std::string& text) {
  RatFunc f = parse_ratfunc(text);
  auto p = f.as_polynomial();
  if (!p) throw InvalidArgument("not a polynomial: " + text);
  return *p;
}

}  // namespace ncsf
