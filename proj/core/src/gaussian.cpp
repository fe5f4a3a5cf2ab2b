#include "kindex/exactalg/gaussian.hpp"

#include <cctype>

#include "kindex/error.hpp"

namespace kindex {

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty complex rational");
  if (s.back() != 'i') return {Rational::parse(s), Rational(0)};
  s.pop_back();
  // Split "a+b" / "a-b" at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  auto imag_part = [&](std::string part) -> Rational {
    if (part.empty() || part == "+") return Rational(1);
    if (part == "-") return Rational(-1);
    if (part.back() == '*') part.pop_back();
    return Rational::parse(part);
  };
  if (split == std::string::npos) return {Rational(0), imag_part(s)};
  return {Rational::parse(s.substr(0, split)), imag_part(s.substr(split))};
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag;
  if (im_.is_one()) {
    imag = "i";
  } else if (im_ == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im_.to_string() + "i";
  }
  if (re_.is_zero()) return imag;
  if (imag[0] != '-') imag = "+" + imag;
  return re_.to_string() + imag;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace kindex
