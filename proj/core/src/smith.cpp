#include "braidcong/smith.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace braidcong {

namespace {

int cmpabs(mpz_class const& a, mpz_class const& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

class Reducer {
 public:
  Reducer(IntegerMatrix a, SmithOptions options) : a_(std::move(a)), options_(options) {
    if (options_.track_left) u_ = IntegerMatrix::identity(a_.rows());
    if (options_.track_right) {
      v_ = IntegerMatrix::identity(a_.cols());
      vinv_ = IntegerMatrix::identity(a_.cols());
    }
  }

  SmithResult run() {
    std::size_t limit = std::min(a_.rows(), a_.cols());
    SmithResult result;
    result.rows = a_.rows();
    result.cols = a_.cols();
    for (std::size_t t = 0; t < limit; ++t) {
      auto pivot = find_min_entry(t);
      if (!pivot) break;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);
      reduce_at(t);
      if (a_(t, t) < 0) negate_row(t);
      result.diagonal.push_back(a_(t, t));
    }
    fix_divisibility(result.diagonal);
    if (u_) result.left = std::move(*u_);
    if (v_) result.right = std::move(*v_);
    if (vinv_) result.right_inverse = std::move(*vinv_);
    return result;
  }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> find_min_entry(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    mpz_class best_abs;
    for (std::size_t r = t; r < a_.rows(); ++r) {
      for (std::size_t c = t; c < a_.cols(); ++c) {
        mpz_class const& x = a_(r, c);
        if (sgn(x) == 0) continue;
        if (!best || cmpabs(x, best_abs) < 0) {
          best = {r, c};
          best_abs = abs(x);
          if (best_abs == 1) return best;
        }
      }
    }
    return best;
  }

  void reduce_at(std::size_t t) {
    mpz_class q;
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < a_.rows(); ++r) {
        if (sgn(a_(r, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(r, t).get_mpz_t(), a_(t, t).get_mpz_t());
        if (q != 0) add_row_multiple(r, t, -q);
        if (sgn(a_(r, t)) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < a_.cols(); ++c) {
        if (sgn(a_(t, c)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, c).get_mpz_t(), a_(t, t).get_mpz_t());
        if (q != 0) add_col_multiple(c, t, -q);
        if (sgn(a_(t, c)) != 0) clean = false;
      }
      if (!clean) {
        // A remainder survived; it is smaller than the pivot, so move it in.
        std::size_t br = t, bc = t;
        for (std::size_t r = t + 1; r < a_.rows(); ++r)
          if (sgn(a_(r, t)) != 0 && cmpabs(a_(r, t), a_(br, bc)) < 0) br = r, bc = t;
        for (std::size_t c = t + 1; c < a_.cols(); ++c)
          if (sgn(a_(t, c)) != 0 && cmpabs(a_(t, c), a_(br, bc)) < 0) br = t, bc = c;
        swap_rows(t, br);
        swap_cols(t, bc);
        continue;
      }
      return;
    }
  }

  // Turns a diagonal d_1, ..., d_k into one with d_1 | d_2 | ... using
  // 2x2 unimodular moves on pairs of diagonal positions.
  void fix_divisibility(std::vector<mpz_class>& diag) {
    for (std::size_t i = 0; i < diag.size(); ++i) {
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        if (diag[j] % diag[i] == 0) continue;
        // [[a,0],[0,b]] -> add row j to row i -> [[a,b],[0,b]] -> reduce.
        add_row_multiple(i, j, 1);
        mpz_class g, s, tt;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), tt.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
        // Column operation with matrix [[s, -b/g], [t, a/g]] (det 1) on cols i, j.
        mpz_class a = diag[i], b = diag[j];
        mpz_class bg = b / g, ag = a / g;
        combine_cols(i, j, s, tt, -bg, ag);
        // Now row i = [g, 0] and row j = [b t, b a / g]; clear (j, i).
        mpz_class f = (b * tt) / g;
        add_row_multiple(j, i, -f);
        diag[i] = g;
        diag[j] = a * b / g;
        if (a_(j, j) < 0) negate_row(j);
        diag[j] = a_(j, j);
        if (a_(i, i) < 0) negate_row(i);
        diag[i] = a_(i, i);
      }
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(a, c), a_(b, c));
    if (u_) for (std::size_t c = 0; c < u_->cols(); ++c) std::swap((*u_)(a, c), (*u_)(b, c));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, a), a_(r, b));
    if (v_) {
      for (std::size_t r = 0; r < v_->rows(); ++r) std::swap((*v_)(r, a), (*v_)(r, b));
      for (std::size_t c = 0; c < vinv_->cols(); ++c) std::swap((*vinv_)(a, c), (*vinv_)(b, c));
    }
  }

  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(r, c) = -a_(r, c);
    if (u_) for (std::size_t c = 0; c < u_->cols(); ++c) (*u_)(r, c) = -(*u_)(r, c);
  }

  // row dst += f * row src
  void add_row_multiple(std::size_t dst, std::size_t src, mpz_class const& f) {
    for (std::size_t c = 0; c < a_.cols(); ++c)
      if (sgn(a_(src, c)) != 0) a_(dst, c) += f * a_(src, c);
    if (u_)
      for (std::size_t c = 0; c < u_->cols(); ++c)
        if (sgn((*u_)(src, c)) != 0) (*u_)(dst, c) += f * (*u_)(src, c);
  }

  // col dst += f * col src; V^{-1} gets row src -= f * row dst.
  void add_col_multiple(std::size_t dst, std::size_t src, mpz_class const& f) {
    for (std::size_t r = 0; r < a_.rows(); ++r)
      if (sgn(a_(r, src)) != 0) a_(r, dst) += f * a_(r, src);
    if (v_) {
      for (std::size_t r = 0; r < v_->rows(); ++r)
        if (sgn((*v_)(r, src)) != 0) (*v_)(r, dst) += f * (*v_)(r, src);
      for (std::size_t c = 0; c < vinv_->cols(); ++c)
        if (sgn((*vinv_)(dst, c)) != 0) (*vinv_)(src, c) -= f * (*vinv_)(dst, c);
    }
  }

  // (col i, col j) <- (p col i + q col j, r col i + s col j), ps - qr = 1.
  void combine_cols(std::size_t i, std::size_t j, mpz_class const& p, mpz_class const& q, mpz_class const& r,
                    mpz_class const& s) {
    auto apply = [&](IntegerMatrix& m) {
      for (std::size_t row = 0; row < m.rows(); ++row) {
        mpz_class x = m(row, i), y = m(row, j);
        m(row, i) = p * x + q * y;
        m(row, j) = r * x + s * y;
      }
    };
    apply(a_);
    if (v_) {
      apply(*v_);
      // Inverse of [[p, r], [q, s]] acting on rows i, j of V^{-1}.
      for (std::size_t c = 0; c < vinv_->cols(); ++c) {
        mpz_class x = (*vinv_)(i, c), y = (*vinv_)(j, c);
        (*vinv_)(i, c) = s * x - r * y;
        (*vinv_)(j, c) = -q * x + p * y;
      }
    }
  }

  IntegerMatrix a_;
  SmithOptions options_;
  std::optional<IntegerMatrix> u_;
  std::optional<IntegerMatrix> v_;
  std::optional<IntegerMatrix> vinv_;
};

}  // namespace

SmithResult smith_normal_form(IntegerMatrix a, SmithOptions options) {
  return Reducer(std::move(a), options).run();
}

std::optional<std::vector<mpz_class>> solve_integer(IntegerMatrix const& a, std::vector<mpz_class> const& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
  SmithResult snf = smith_normal_form(a, {.track_left = true, .track_right = true});
  IntegerMatrix const& u = *snf.left;
  std::vector<mpz_class> ub(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.rows(); ++c)
      if (sgn(u(r, c)) != 0) ub[r] += u(r, c) * b[c];
  std::vector<mpz_class> y(a.cols());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    if (k < snf.rank()) {
      if (ub[k] % snf.diagonal[k] != 0) return std::nullopt;
      y[k] = ub[k] / snf.diagonal[k];
    } else if (ub[k] != 0) {
      return std::nullopt;
    }
  }
  IntegerMatrix const& v = *snf.right;
  std::vector<mpz_class> x(a.cols());
  for (std::size_t r = 0; r < a.cols(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (sgn(v(r, c)) != 0) x[r] += v(r, c) * y[c];
  return x;
}

}  // namespace braidcong
