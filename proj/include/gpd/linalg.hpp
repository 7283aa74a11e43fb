#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gpd/rational.hpp"

namespace gpd {

/// Coefficient field of a map chain: GF(p) for a prime p, or the rationals.
struct Field {
  enum class Kind { prime, rational };
  Kind kind = Kind::prime;
  std::uint64_t prime = 2;

  static Field gf(std::uint64_t p);
  static Field rationals() { return {Kind::rational, 0}; }
  std::string name() const;
};

/// Dense row-major matrix. Entries are stored exactly; over GF(p) they must be
/// integers and are reduced mod p when used.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// lhs * rhs over `field`. Requires lhs.cols() == rhs.rows().
Matrix multiply(const Matrix& lhs, const Matrix& rhs, const Field& field);

/// Rank by exact Gaussian elimination over `field`.
std::size_t rank(const Matrix& matrix, const Field& field);

bool is_prime(std::uint64_t n);

}  // namespace gpd
