#ifndef LSYM_LINALG_HPP
#define LSYM_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "lsym/scalar.hpp"

namespace lsym {

/// Dense row-major matrix of exact scalars.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static ExactMatrix from_columns(std::size_t rows, const std::vector<Vec>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);
  Vec row(std::size_t r) const;

  ExactMatrix transpose() const;
  ExactMatrix select_columns(const std::vector<std::size_t>& cols) const;
  ExactMatrix select_rows(const std::vector<std::size_t>& rows) const;
  /// [this | other]
  ExactMatrix hcat(const ExactMatrix& other) const;
  Vec apply(const Vec& v) const;
  bool is_zero() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form with pivot columns; unique for a given row space.
struct Echelon {
  ExactMatrix rref;  // only the `rank` nonzero rows
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/*
 * Fraction-free (Bareiss) forward elimination over the Gaussian integers,
 * followed by back substitution to reduced echelon form over Q(i).
 * Rows are first scaled to clear denominators.
 */
Echelon row_echelon(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

struct RankNullspace {
  std::size_t rank = 0;
  /// One vector per free column, with a 1 in that column; ordered by free column.
  std::vector<Vec> nullspace;
};

RankNullspace rank_nullspace(const ExactMatrix& m);

/// Echelon-minimal solution of m x = b (free variables zero), or nullopt if inconsistent.
std::optional<Vec> solve(const ExactMatrix& m, const Vec& b);

/// True iff v lies in the column span of m.
bool in_column_span(const ExactMatrix& m, const Vec& v);

/// Incrementally grown span; add() reports whether the vector was new.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t length) : length_(length) {}

  /// Reduces v against the current span; returns true and keeps it if independent.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t length() const { return length_; }
  /// The reduced vectors kept so far (pivot entry normalized to 1).
  const std::vector<Vec>& basis() const { return rows_; }

 private:
  Vec reduce(Vec v) const;
  std::size_t length_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace lsym

#endif  // LSYM_LINALG_HPP
