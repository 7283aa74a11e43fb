#include "gpd/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace gpd {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::uint64_t reduce(const Rational& value, std::uint64_t p) {
  if (denominator(value) != 1) throw std::invalid_argument("non-integer entry in a GF(p) matrix");
  BigInt r = numerator(value) % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols, std::uint64_t p) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::uint64_t inv = pow_mod(rows[rank][c], p - 2, p);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const std::uint64_t factor = mul_mod(rows[r][c], inv, p);
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] = (rows[r][k] + p - mul_mod(factor, rows[rank][k], p)) % p;
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::gf(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("GF(p) requires a prime, got " + std::to_string(p));
  return {Kind::prime, p};
}

std::string Field::name() const {
  return kind == Kind::rational ? std::string("rational") : "gf" + std::to_string(prime);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id.at(i, i) = 1;
  return id;
}

Matrix multiply(const Matrix& lhs, const Matrix& rhs, const Field& field) {
  if (lhs.cols() != rhs.rows()) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      if (field.kind == Field::Kind::prime) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < lhs.cols(); ++k)
          acc = (acc + mul_mod(reduce(lhs.at(i, k), field.prime), reduce(rhs.at(k, j), field.prime), field.prime)) %
                field.prime;
        out.at(i, j) = Rational(acc);
      } else {
        Rational acc = 0;
        for (std::size_t k = 0; k < lhs.cols(); ++k) acc += lhs.at(i, k) * rhs.at(k, j);
        out.at(i, j) = acc;
      }
    }
  }
  return out;
}

std::size_t rank(const Matrix& matrix, const Field& field) {
  if (field.kind == Field::Kind::prime) {
    std::vector<std::vector<std::uint64_t>> rows(matrix.rows(), std::vector<std::uint64_t>(matrix.cols()));
    for (std::size_t r = 0; r < matrix.rows(); ++r)
      for (std::size_t c = 0; c < matrix.cols(); ++c) rows[r][c] = reduce(matrix.at(r, c), field.prime);
    return rank_mod_p(std::move(rows), matrix.cols(), field.prime);
  }
  std::vector<std::vector<Rational>> rows(matrix.rows(), std::vector<Rational>(matrix.cols()));
  for (std::size_t r = 0; r < matrix.rows(); ++r)
    for (std::size_t c = 0; c < matrix.cols(); ++c) rows[r][c] = matrix.at(r, c);
  return rank_rational(std::move(rows), matrix.cols());
}

}  // namespace gpd
