#pragma once

#include "skly3/error.hpp"
#include "skly3/field.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace skly3 {

/// Dense row-major matrix over a field object.
template <Field F>
class Matrix {
public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix out(field, n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = field.one();
    return out;
  }

  /// Builds a matrix from nested rows; all rows must have equal length.
  static Matrix from_rows(const F& field, const std::vector<std::vector<Element>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix out(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) out(i, j) = rows[i][j];
    }
    return out;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Element>& data() const { return data_; }

  Matrix& operator+=(const Matrix& o) {
    check_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] + o.data_[k];
    return *this;
  }

  Matrix& operator-=(const Matrix& o) {
    check_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] - o.data_[k];
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("matrix product " + a.shape() + " * " + b.shape());
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Element& aik = a(i, k);
        if (a.field_.is_zero(aik) && F::is_exact) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = out(i, j) + aik * b(k, j);
      }
    return out;
  }

  Matrix scaled(const Element& s) const {
    Matrix out = *this;
    for (auto& e : out.data_) e = e * s;
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const Element& e) { return field_.is_zero(e); });
  }

  /// Largest entry modulus (through the complex embedding for exact fields).
  double max_abs() const {
    double m = 0.0;
    for (const auto& e : data_) m = std::max(m, field_.magnitude(e));
    return m;
  }

  /// If this is lambda * identity, returns lambda.
  std::optional<Element> scalar_value() const {
    if (!is_square() || rows_ == 0) return std::nullopt;
    const Element lambda = (*this)(0, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const Element& e = (*this)(i, j);
        if (i == j ? !field_.equal(e, lambda) : !field_.is_zero(e)) return std::nullopt;
      }
    return lambda;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!a.field_.equal(a.data_[k], b.data_[k])) return false;
    return true;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
  void check_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch("shape mismatch " + shape() + " vs " + o.shape());
  }

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// Inverse by Gauss-Jordan elimination; throws on a singular matrix.
template <Field F>
Matrix<F> inverse(const Matrix<F>& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  const auto& field = a.field();
  const std::size_t n = a.rows();
  Matrix<F> work = a;
  Matrix<F> inv = Matrix<F>::identity(field, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    double best = 0.0;
    for (std::size_t r = col; r < n; ++r) {
      if (field.is_zero(work(r, col))) continue;
      const double mag = field.magnitude(work(r, col));
      if (pivot == n || (!F::is_exact && mag > best)) {
        pivot = r;
        best = mag;
      }
    }
    if (pivot == n) throw PreconditionError("singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(work(col, j), work(pivot, j));
      std::swap(inv(col, j), inv(pivot, j));
    }
    const auto p = work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) = work(col, j) / p;
      inv(col, j) = inv(col, j) / p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || field.is_zero(work(r, col))) continue;
      const auto f = work(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) = work(r, j) - f * work(col, j);
        inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

enum class Provenance { explicit_family, numerical_search, user_supplied };

inline const char* to_string(Provenance p) {
  switch (p) {
  case Provenance::explicit_family: return "explicit_family";
  case Provenance::numerical_search: return "numerical_search";
  case Provenance::user_supplied: return "user_supplied";
  }
  return "?";
}

/// A candidate d-dimensional representation: images of x, y, z.
template <Field F>
struct MatRep {
  Matrix<F> X;
  Matrix<F> Y;
  Matrix<F> Z;
  Provenance provenance = Provenance::user_supplied;

  MatRep(Matrix<F> x, Matrix<F> y, Matrix<F> z, Provenance p = Provenance::user_supplied)
      : X(std::move(x)), Y(std::move(y)), Z(std::move(z)), provenance(p) {
    if (!X.is_square() || !Y.is_square() || !Z.is_square() || X.rows() != Y.rows() || X.rows() != Z.rows())
      throw DimensionMismatch("representation matrices must be square of equal size, got " + X.shape() + ", " +
                              Y.shape() + ", " + Z.shape());
  }

  std::size_t dimension() const { return X.rows(); }
  const F& field() const { return X.field(); }

  const Matrix<F>& generator(std::size_t i) const { return i == 0 ? X : (i == 1 ? Y : Z); }
};

} // namespace skly3
