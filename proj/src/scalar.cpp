#include "lsym/scalar.hpp"

#include <cctype>
#include <utility>

namespace lsym {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  Scalar acc(1);
  while (k) {
    if (k & 1UL) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string Scalar::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "*i";
  if (sgn(im_) < 0) return re_.get_str() + "-" + mpq_class(-im_).get_str() + "*i";
  return re_.get_str() + "+" + im_.get_str() + "*i";
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  Scalar parse() {
    if (s_.empty()) fail("empty scalar");
    mpq_class first = rational();
    if (at_end()) return Scalar(first);
    if (peek() == '*') {
      imag_suffix();
      expect_end();
      return Scalar(mpq_class(0), first);
    }
    if (peek() == '+') {
      ++pos_;
    } else if (peek() != '-') {  // "a-b*i" is read as "a+-b*i"
      fail("expected '+', '*i' or end of input");
    }
    mpq_class second = rational();
    imag_suffix();
    expect_end();
    return Scalar(first, second);
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("malformed scalar '" + std::string(s_) + "' at byte " +
                         std::to_string(pos_) + ": " + why,
                     pos_);
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  mpq_class rational() {
    bool neg = false;
    if (!at_end() && peek() == '-') {
      neg = true;
      ++pos_;
    }
    mpz_class num(digits());
    mpz_class den(1);
    if (!at_end() && peek() == '/') {
      ++pos_;
      std::size_t at = pos_;
      den = mpz_class(digits());
      if (den == 0) throw DomainError("zero denominator at byte " + std::to_string(at));
    }
    mpq_class q(neg ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
  }

  void imag_suffix() {
    if (s_.substr(pos_, 2) != "*i") fail("expected '*i'");
    pos_ += 2;
  }

  void expect_end() const {
    if (!at_end()) fail("trailing characters");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      return a / b;
  }
  throw DomainError("unknown arithmetic operation");
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void axpy(Vec& y, const Scalar& c, const Vec& x) {
  if (c.is_zero()) return;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!x[k].is_zero()) y[k] += c * x[k];
}

}  // namespace lsym
