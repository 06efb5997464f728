#ifndef LSYM_SCALAR_HPP
#define LSYM_SCALAR_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lsym {

/// Malformed scalar text. `offset` is the byte position of the first bad character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Division by zero, zero denominators and similar arithmetic domain failures.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/*
 * Exact Gaussian rational re + im*i.
 *
 * Both parts are kept canonical by GMP (reduced, positive denominator), so
 * two scalars are equal iff their parts compare equal.
 */
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0);

  static Scalar rational(long num, long den);
  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2 as a rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;
  /// Integer power; negative exponents invert.
  Scalar pow(long e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text: "R", "R*i" or "R+R*i" / "R-R*i" with R = [-]INT[/INT].
  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Parses `S := R | R "+" R "*i" | R "*i"`, `R := ["-"] INT ["/" INT]`.
/// A "-" in place of "+" before the imaginary part is accepted as well,
/// since that is how negative imaginary parts print.
Scalar parse_scalar(std::string_view text);

enum class ArithOp { add, sub, mul, div };
Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

using Vec = std::vector<Scalar>;

inline Vec zeros(std::size_t n) { return Vec(n); }
bool is_zero(const Vec& v);
/// y += c * x
void axpy(Vec& y, const Scalar& c, const Vec& x);

}  // namespace lsym

#endif  // LSYM_SCALAR_HPP
