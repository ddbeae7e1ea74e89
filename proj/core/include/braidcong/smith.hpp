#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "braidcong/matrix.hpp"

namespace braidcong {

struct SmithOptions {
  bool track_left = false;   // U with U A V = D
  bool track_right = false;  // V and V^{-1}
};

// U A V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_rank,
// all d_k > 0.
struct SmithResult {
  std::vector<mpz_class> diagonal;  // the nonzero diagonal entries, in order
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::optional<IntegerMatrix> left;
  std::optional<IntegerMatrix> right;
  std::optional<IntegerMatrix> right_inverse;

  std::size_t rank() const noexcept { return diagonal.size(); }
};

// Row/column reduction over Z, always pivoting on an entry of least nonzero
// absolute value.
SmithResult smith_normal_form(IntegerMatrix a, SmithOptions options = {});

// Integer solution of A x = b, if one exists.
std::optional<std::vector<mpz_class>> solve_integer(IntegerMatrix const& a, std::vector<mpz_class> const& b);

}  // namespace braidcong
