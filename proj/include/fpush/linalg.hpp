#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "fpush/field.hpp"

namespace fpush {

/// Dense univariate polynomial over F_p, coefficients low degree first,
/// no trailing zeros (the zero polynomial is empty).
using UPoly = std::vector<Coeff>;

namespace upoly {
void trim(UPoly& f);
int degree(const UPoly& f);
UPoly add(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly sub(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly mul(const PrimeField& F, const UPoly& a, const UPoly& b);
/// Returns (quotient, remainder); b must be nonzero.
std::pair<UPoly, UPoly> divmod(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly mod(const PrimeField& F, const UPoly& a, const UPoly& b);
UPoly monic(const PrimeField& F, const UPoly& a);
UPoly gcd(const PrimeField& F, UPoly a, UPoly b);
/// Extended gcd: returns g = s*a + t*b with g monic.
UPoly xgcd(const PrimeField& F, const UPoly& a, const UPoly& b, UPoly& s, UPoly& t);
UPoly derivative(const PrimeField& F, const UPoly& a);
UPoly powmod(const PrimeField& F, UPoly base, std::uint64_t e, const UPoly& m);
/// Irreducible monic factors with multiplicities (Cantor–Zassenhaus).
std::vector<std::pair<UPoly, int>> factor(const PrimeField& F, const UPoly& f, std::mt19937_64& rng);
}  // namespace upoly

/// Dense row-major matrix over F_p.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coeff operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Coeff> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Coeff> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Coeff>& data() const { return data_; }
  bool is_zero() const {
    for (auto v : data_)
      if (v) return false;
    return true;
  }
  void append_row(std::span<const Coeff> r);
  Mat transpose() const;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Coeff> data_;
};

namespace linalg {
Mat mul(const PrimeField& F, const Mat& a, const Mat& b);
Mat add(const PrimeField& F, const Mat& a, const Mat& b);
Mat sub(const PrimeField& F, const Mat& a, const Mat& b);
Mat scale(const PrimeField& F, const Mat& a, Coeff c);
/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const PrimeField& F, Mat& a);
std::size_t rank(const PrimeField& F, Mat a);
/// Rows form a basis of { x : a x = 0 }.
Mat right_kernel(const PrimeField& F, const Mat& a);
/// Rows form a basis of { y : y a = 0 }.
Mat left_kernel(const PrimeField& F, const Mat& a);
/// Rows form a basis of the row space (reduced echelon).
Mat row_basis(const PrimeField& F, Mat a);
/// Inverse of a square matrix; throws std::domain_error if singular.
Mat inverse(const PrimeField& F, const Mat& a);
bool is_invertible(const PrimeField& F, const Mat& a);
/// Characteristic polynomial det(t I - a), monic.
UPoly charpoly(const PrimeField& F, const Mat& a);
/// Evaluates f(a) for a square matrix.
Mat evaluate(const PrimeField& F, const UPoly& f, const Mat& a);
/// Solves x a = b for row vector x; returns false if inconsistent.
bool solve_left(const PrimeField& F, const Mat& a, std::span<const Coeff> b, std::vector<Coeff>& x);
}  // namespace linalg

}  // namespace fpush
