#include "kindex/cohomring/parse.hpp"

#include <cctype>
#include <string>

#include "kindex/error.hpp"

namespace kindex {

namespace {

class ClassParser {
 public:
  ClassParser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), s_(text) {}

  GradedClass parse() {
    skip();
    if (pos_ == s_.size()) fail("empty class");
    GradedClass g = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "position " + std::to_string(pos_ + 1) + ": " + what + " in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  GradedClass expr() {
    GradedClass acc(ring_);
    bool first = true;
    for (;;) {
      skip();
      bool neg = false;
      if (eat('-')) {
        neg = true;
      } else if (eat('+')) {
      } else if (!first) {
        return acc;
      }
      const GradedClass t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  GradedClass term() {
    GradedClass acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  unsigned exponent() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative exponent");
    return static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
  }

  GradedClass with_power(GradedClass base) {
    if (eat('^')) return power(base, exponent());
    return base;
  }

  GradedClass factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      GradedClass inner = expr();
      if (!eat(')')) fail("expected ')'");
      return with_power(inner);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string num = s_.substr(start, pos_ - start);
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        const std::size_t d = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (d == pos_) fail("expected a denominator");
        num += "/" + s_.substr(d, pos_ - d);
      }
      return with_power(GradedClass::constant(ring_, Rational::parse(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (!ring_->generator_index(name)) {
        pos_ = start;
        fail("unknown generator '" + name + "' for ring " + ring_->name());
      }
      return with_power(GradedClass::generator(ring_, name));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  RingPtr ring_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedClass parse_class(const RingPtr& ring, std::string_view text) { return ClassParser(ring, text).parse(); }

}  // namespace kindex
