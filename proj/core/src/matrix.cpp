#include "braidcong/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace braidcong {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) out(k, k) = 1;
  return out;
}

IntegerMatrix IntegerMatrix::from_rows(std::vector<std::vector<long>> const& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix out(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

bool IntegerMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](mpz_class const& x) { return x == 0; });
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

mpz_class IntegerMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  // Bareiss
  IntegerMatrix a = *this;
  std::size_t n = rows_;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j));
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntegerMatrix operator*(IntegerMatrix const& a, IntegerMatrix const& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch in product");
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      mpz_class const& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (b(k, c) != 0) out(r, c) += x * b(k, c);
      }
    }
  }
  return out;
}

IntegerMatrix operator+(IntegerMatrix const& a, IntegerMatrix const& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch in sum");
  IntegerMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

IntegerMatrix operator-(IntegerMatrix const& a, IntegerMatrix const& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch in difference");
  IntegerMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

bool operator==(IntegerMatrix const& a, IntegerMatrix const& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<mpz_class> IntegerMatrix::left_multiply(std::vector<mpz_class> const& row) const {
  if (row.size() != rows_) throw std::invalid_argument("vector length mismatch");
  std::vector<mpz_class> out(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (row[r] == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != 0) out[c] += row[r] * (*this)(r, c);
    }
  }
  return out;
}

namespace {

template <typename Cell>
std::string pretty_grid(std::size_t rows, std::size_t cols, Cell cell) {
  std::vector<std::string> text(rows * cols);
  std::size_t width = 1;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      text[r * cols + c] = cell(r, c);
      width = std::max(width, text[r * cols + c].size());
    }
  std::ostringstream os;
  for (std::size_t r = 0; r < rows; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols; ++c) {
      auto const& s = text[r * cols + c];
      os << (c ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace

std::string IntegerMatrix::pretty() const {
  return pretty_grid(rows_, cols_, [this](std::size_t r, std::size_t c) { return (*this)(r, c).get_str(); });
}

// ---------------------------------------------------------------------------

ModularMatrix::ModularMatrix(std::size_t n, std::uint32_t modulus) : n_(n), m_(modulus), data_(n * n, 0) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  if (modulus > 0xFFFF) throw std::invalid_argument("modulus must fit in 16 bits");
}

ModularMatrix ModularMatrix::identity(std::size_t n, std::uint32_t modulus) {
  ModularMatrix out(n, modulus);
  for (std::size_t k = 0; k < n; ++k) out.data_[k * n + k] = 1;
  return out;
}

ModularMatrix ModularMatrix::reduce(IntegerMatrix const& a, std::uint32_t modulus) {
  if (!a.is_square()) throw std::invalid_argument("modular reduction of a non-square matrix");
  ModularMatrix out(a.rows(), modulus);
  mpz_class r;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      mpz_fdiv_r_ui(r.get_mpz_t(), a(i, j).get_mpz_t(), modulus);
      out.data_[i * out.n_ + j] = static_cast<std::uint32_t>(r.get_ui());
    }
  return out;
}

void ModularMatrix::set(std::size_t r, std::size_t c, long long value) {
  long long m = m_;
  data_[r * n_ + c] = static_cast<std::uint32_t>(((value % m) + m) % m);
}

bool ModularMatrix::is_identity() const noexcept {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c)
      if (data_[r * n_ + c] != (r == c ? 1u : 0u)) return false;
  return true;
}

std::string ModularMatrix::encode() const {
  std::string out(data_.size() * 2, '\0');
  for (std::size_t k = 0; k < data_.size(); ++k) {
    out[2 * k] = static_cast<char>(data_[k] & 0xFF);
    out[2 * k + 1] = static_cast<char>((data_[k] >> 8) & 0xFF);
  }
  return out;
}

ModularMatrix operator*(ModularMatrix const& a, ModularMatrix const& b) {
  if (a.n_ != b.n_ || a.m_ != b.m_) throw std::invalid_argument("modular matrix mismatch in product");
  ModularMatrix out(a.n_, a.m_);
  std::size_t n = a.n_;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += std::uint64_t{a.data_[r * n + k]} * b.data_[k * n + c];
      out.data_[r * n + c] = static_cast<std::uint32_t>(acc % a.m_);
    }
  }
  return out;
}

std::string ModularMatrix::pretty() const {
  return pretty_grid(n_, n_, [this](std::size_t r, std::size_t c) { return std::to_string((*this)(r, c)); });
}

std::vector<std::vector<mpz_class>> rational_kernel_basis(IntegerMatrix const& a) {
  std::size_t rows = a.rows(), cols = a.cols();
  std::vector<mpq_class> m(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m[r * cols + c] = a(r, c);
  auto at = [&](std::size_t r, std::size_t c) -> mpq_class& { return m[r * cols + c]; };

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && at(p, col) == 0) ++p;
    if (p == rows) continue;
    for (std::size_t c = 0; c < cols; ++c) std::swap(at(row, c), at(p, c));
    mpq_class inv = 1 / at(row, col);
    for (std::size_t c = 0; c < cols; ++c) at(row, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || at(r, col) == 0) continue;
      mpq_class f = at(r, col);
      for (std::size_t c = 0; c < cols; ++c) at(r, c) -= f * at(row, c);
    }
    pivot_cols.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<mpz_class>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> x(cols, 0);
    x[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = -at(k, free);
    mpz_class denom = 1;
    for (auto const& q : x) denom = lcm(denom, mpz_class(q.get_den()));
    std::vector<mpz_class> v(cols);
    mpz_class content = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      mpq_class scaled = x[c] * denom;
      v[c] = scaled.get_num();
      content = gcd(content, v[c]);
    }
    for (auto& e : v) e /= content;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<int> order_mod(ModularMatrix const& m, int cap) {
  if (cap < 1) throw std::invalid_argument("order cap must be positive");
  ModularMatrix power = m;
  for (int k = 1; k <= cap; ++k) {
    if (power.is_identity()) return k;
    power = power * m;
  }
  return std::nullopt;
}

}  // namespace braidcong
