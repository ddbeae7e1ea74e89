#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace braidcong {

// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(std::vector<std::vector<long>> const& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  mpz_class const& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_identity() const;
  bool is_zero() const;
  IntegerMatrix transposed() const;

  mpz_class determinant() const;  // square only; fraction-free elimination

  friend IntegerMatrix operator*(IntegerMatrix const& a, IntegerMatrix const& b);
  friend IntegerMatrix operator+(IntegerMatrix const& a, IntegerMatrix const& b);
  friend IntegerMatrix operator-(IntegerMatrix const& a, IntegerMatrix const& b);
  friend bool operator==(IntegerMatrix const& a, IntegerMatrix const& b);

  // Row vector times matrix.
  std::vector<mpz_class> left_multiply(std::vector<mpz_class> const& row) const;

  // Aligned columns, one row per line.
  std::string pretty() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

// Square matrix over Z/mZ with entries kept in [0, m).
class ModularMatrix {
 public:
  ModularMatrix(std::size_t n, std::uint32_t modulus);

  static ModularMatrix identity(std::size_t n, std::uint32_t modulus);
  static ModularMatrix reduce(IntegerMatrix const& a, std::uint32_t modulus);

  std::size_t dim() const noexcept { return n_; }
  std::uint32_t modulus() const noexcept { return m_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  void set(std::size_t r, std::size_t c, long long value);

  bool is_identity() const noexcept;
  std::vector<std::uint32_t> const& entries() const noexcept { return data_; }

  // Row-major residues, each as a 2-byte little-endian word.
  std::string encode() const;

  friend ModularMatrix operator*(ModularMatrix const& a, ModularMatrix const& b);
  friend bool operator==(ModularMatrix const&, ModularMatrix const&) = default;

  std::string pretty() const;

 private:
  std::size_t n_;
  std::uint32_t m_;
  std::vector<std::uint32_t> data_;
};

// Basis of {x in Q^cols : A x = 0}, each vector scaled to a primitive integer
// vector. Computed by exact rational row reduction.
std::vector<std::vector<mpz_class>> rational_kernel_basis(IntegerMatrix const& a);

// Least k in [1, cap] with M^k = I; nullopt when the order exceeds cap.
std::optional<int> order_mod(ModularMatrix const& m, int cap);

}  // namespace braidcong
