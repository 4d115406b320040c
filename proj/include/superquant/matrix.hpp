#ifndef SUPERQUANT_MATRIX_HPP
#define SUPERQUANT_MATRIX_HPP

#include "superquant/rational.hpp"

#include <optional>
#include <vector>

namespace sq {

/// Dense exact rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return data_[index(r, c)]; }
  const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }

  bool is_zero() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c); }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact Gauss-Jordan inverse; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

int rank(const Matrix& m);

/// Solves A x = b when the system is consistent and A has full column rank.
std::optional<std::vector<Rational>> solve_unique(const Matrix& A, const std::vector<Rational>& b);

}  // namespace sq

#endif
