#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mamab {

/// Dense square matrix of doubles, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  static Matrix identity(std::size_t n);
  /// Builds from nested rows; every row must have length rows.size().
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }

  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  std::span<const double> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }
  std::span<const double> data() const noexcept { return data_; }

  bool all_finite() const noexcept;
  /// max |m(i,j) - m(j,i)|
  double asymmetry() const noexcept;

  std::vector<double> operator*(std::span<const double> x) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// max_ij |a(i,j) - b(i,j)|; matrices must have equal size.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace mamab
