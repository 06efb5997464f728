#include "lsym/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace lsym {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
  return m;
}

ExactMatrix ExactMatrix::from_columns(std::size_t rows, const std::vector<Vec>& columns) {
  ExactMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Vec ExactMatrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void ExactMatrix::set_column(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Vec ExactMatrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ExactMatrix ExactMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  ExactMatrix m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols.size(); ++k) m(r, k) = (*this)(r, cols[k]);
  return m;
}

ExactMatrix ExactMatrix::select_rows(const std::vector<std::size_t>& rows) const {
  ExactMatrix m(rows.size(), cols_);
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t c = 0; c < cols_; ++c) m(k, c) = (*this)(rows[k], c);
  return m;
}

ExactMatrix ExactMatrix::hcat(const ExactMatrix& other) const {
  if (other.rows_ != rows_) throw std::invalid_argument("hcat: row count mismatch");
  ExactMatrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

Vec ExactMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
  Vec out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  ExactMatrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
    }
  return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("sum: shape mismatch");
  ExactMatrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
  return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("difference: shape mismatch");
  ExactMatrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] -= b.data_[k];
  return m;
}

namespace {

struct GaussInt {
  mpz_class re{0}, im{0};

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

// a / b where b divides a exactly in Z[i].
GaussInt divexact(const GaussInt& a, const GaussInt& b) {
  if (sgn(b.im) == 0) {
    GaussInt q;
    mpz_divexact(q.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
    return q;
  }
  mpz_class n = b.re * b.re + b.im * b.im;
  mpz_class r = a.re * b.re + a.im * b.im;
  mpz_class i = a.im * b.re - a.re * b.im;
  GaussInt q;
  mpz_divexact(q.re.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(q.im.get_mpz_t(), i.get_mpz_t(), n.get_mpz_t());
  return q;
}

using IntRows = std::vector<std::vector<GaussInt>>;

IntRows clear_denominators(const ExactMatrix& m) {
  IntRows rows(m.rows(), std::vector<GaussInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& x = m(r, c);
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& x = m(r, c);
      rows[r][c].re = x.re().get_num() * (l / x.re().get_den());
      rows[r][c].im = x.im().get_num() * (l / x.im().get_den());
    }
  }
  return rows;
}

}  // namespace

Echelon row_echelon(const ExactMatrix& m) {
  IntRows a = clear_denominators(m);
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::size_t> pivots;
  GaussInt prev{1, 0};
  std::size_t k = 0;
  for (std::size_t c = 0; c < nc && k < nr; ++c) {
    std::size_t p = k;
    while (p < nr && a[p][c].is_zero()) ++p;
    if (p == nr) continue;
    std::swap(a[k], a[p]);
    const GaussInt piv = a[k][c];
    for (std::size_t r = k + 1; r < nr; ++r) {
      const GaussInt lead = a[r][c];
      for (std::size_t j = c + 1; j < nc; ++j) {
        GaussInt t = sub(mul(piv, a[r][j]), mul(lead, a[k][j]));
        a[r][j] = divexact(t, prev);
      }
      a[r][c] = GaussInt{};
    }
    prev = piv;
    pivots.push_back(c);
    ++k;
  }

  // Back substitution over Q(i) on the k echelon rows.
  ExactMatrix e(k, nc);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = pivots[r]; c < nc; ++c) e(r, c) = Scalar(mpq_class(a[r][c].re), mpq_class(a[r][c].im));
  for (std::size_t r = k; r-- > 0;) {
    const std::size_t pc = pivots[r];
    Scalar inv = e(r, pc).inverse();
    for (std::size_t c = pc; c < nc; ++c)
      if (!e(r, c).is_zero()) e(r, c) *= inv;
    for (std::size_t above = 0; above < r; ++above) {
      Scalar f = e(above, pc);
      if (f.is_zero()) continue;
      for (std::size_t c = pc; c < nc; ++c)
        if (!e(r, c).is_zero()) e(above, c) -= f * e(r, c);
    }
  }
  return Echelon{std::move(e), std::move(pivots)};
}

std::size_t rank(const ExactMatrix& m) { return row_echelon(m).rank(); }

RankNullspace rank_nullspace(const ExactMatrix& m) {
  Echelon e = row_echelon(m);
  RankNullspace out;
  out.rank = e.rank();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.rref(r, f);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const ExactMatrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  ExactMatrix aug = m.hcat(ExactMatrix::from_columns(m.rows(), {b}));
  Echelon e = row_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots[r]] = e.rref(r, m.cols());
  return x;
}

bool in_column_span(const ExactMatrix& m, const Vec& v) { return solve(m, v).has_value(); }

Vec SpanBuilder::reduce(Vec v) const {
  if (v.size() != length_) throw std::invalid_argument("SpanBuilder: length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = v[pivots_[r]];
    if (c.is_zero()) continue;
    axpy(v, -c, rows_[r]);
  }
  return v;
}

bool SpanBuilder::add(const Vec& v) {
  Vec w = reduce(v);
  std::size_t p = 0;
  while (p < w.size() && w[p].is_zero()) ++p;
  if (p == w.size()) return false;
  Scalar inv = w[p].inverse();
  for (auto& x : w)
    if (!x.is_zero()) x *= inv;
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

bool SpanBuilder::contains(const Vec& v) const { return is_zero(reduce(v)); }

}  // namespace lsym
