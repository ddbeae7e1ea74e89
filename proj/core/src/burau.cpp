#include "braidcong/burau.hpp"

#include <cstdlib>
#include <stdexcept>

namespace braidcong {

namespace {

void check_index(int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("generator index out of range");
}

}  // namespace

IntegerMatrix burau_generator(int n, int i, int sign) {
  check_index(n, i);
  auto nn = static_cast<std::size_t>(n);
  auto a = static_cast<std::size_t>(i - 1);
  IntegerMatrix m = IntegerMatrix::identity(nn);
  if (sign > 0) {
    m(a, a) = 2;
    m(a, a + 1) = -1;
    m(a + 1, a) = 1;
    m(a + 1, a + 1) = 0;
  } else {
    m(a, a) = 0;
    m(a, a + 1) = 1;
    m(a + 1, a) = -1;
    m(a + 1, a + 1) = 2;
  }
  return m;
}

IntegerMatrix rho(BraidWord const& w) {
  int n = w.strands();
  auto nn = static_cast<std::size_t>(n);
  IntegerMatrix acc = IntegerMatrix::identity(nn);
  // Right multiplication by a generator only touches columns a, a+1.
  for (int l : w.letters()) {
    auto a = static_cast<std::size_t>(std::abs(l) - 1);
    for (std::size_t r = 0; r < nn; ++r) {
      mpz_class x = acc(r, a);
      mpz_class y = acc(r, a + 1);
      if (l > 0) {
        acc(r, a) = 2 * x + y;
        acc(r, a + 1) = -x;
      } else {
        acc(r, a) = -y;
        acc(r, a + 1) = x + 2 * y;
      }
    }
  }
  return acc;
}

ModularMatrix burau_generator_mod(int n, int i, int sign, std::uint32_t m) {
  return ModularMatrix::reduce(burau_generator(n, i, sign), m);
}

ModularMatrix rho_mod(BraidWord const& w, std::uint32_t m) {
  int n = w.strands();
  auto nn = static_cast<std::size_t>(n);
  ModularMatrix acc = ModularMatrix::identity(nn, m);
  long long mod = m;
  for (int l : w.letters()) {
    auto a = static_cast<std::size_t>(std::abs(l) - 1);
    for (std::size_t r = 0; r < nn; ++r) {
      long long x = acc(r, a);
      long long y = acc(r, a + 1);
      if (l > 0) {
        acc.set(r, a, (2 * x + y) % mod);
        acc.set(r, a + 1, -x);
      } else {
        acc.set(r, a, -y);
        acc.set(r, a + 1, (x + 2 * y) % mod);
      }
    }
  }
  return acc;
}

std::vector<mpz_class> invariant_vector(int n) { return std::vector<mpz_class>(static_cast<std::size_t>(n), 1); }

std::vector<mpz_class> invariant_covector(int n) {
  std::vector<mpz_class> phi(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < phi.size(); ++k) phi[k] = k % 2 == 0 ? 1 : -1;
  return phi;
}

// ---------------------------------------------------------------------------
// Invariant skew forms

IntegerMatrix restricted_gram(IntegerMatrix const& j) {
  std::size_t n = j.rows();
  IntegerMatrix basis(n, n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    basis(k, k) = 1;
    basis(k + 1, k) = 1;
  }
  return basis.transposed() * j * basis;
}

std::vector<std::vector<mpz_class>> form_radical(IntegerMatrix const& j) { return rational_kernel_basis(j); }

InvariantFormWitness invariant_form(int n) {
  if (n < 3) throw std::invalid_argument("invariant_form needs n >= 3");
  auto nn = static_cast<std::size_t>(n);
  InvariantFormWitness witness;
  witness.n = n;
  for (int i = 1; i < n; ++i) witness.generators.push_back(burau_generator(n, i));

  std::vector<std::pair<std::size_t, std::size_t>> upper;
  for (std::size_t a = 0; a < nn; ++a)
    for (std::size_t b = a + 1; b < nn; ++b) upper.emplace_back(a, b);

  // Column u of the system holds the upper entries of M^T E_u M - E_u for
  // every generator M, where E_u is the elementary skew matrix of slot u.
  IntegerMatrix system(upper.size() * witness.generators.size(), upper.size());
  for (std::size_t u = 0; u < upper.size(); ++u) {
    IntegerMatrix e(nn, nn);
    e(upper[u].first, upper[u].second) = 1;
    e(upper[u].second, upper[u].first) = -1;
    for (std::size_t g = 0; g < witness.generators.size(); ++g) {
      auto const& m = witness.generators[g];
      IntegerMatrix diff = m.transposed() * e * m - e;
      for (std::size_t v = 0; v < upper.size(); ++v) {
        system(g * upper.size() + v, u) = diff(upper[v].first, upper[v].second);
      }
    }
  }

  for (auto const& x : rational_kernel_basis(system)) {
    IntegerMatrix j(nn, nn);
    for (std::size_t u = 0; u < upper.size(); ++u) {
      j(upper[u].first, upper[u].second) = x[u];
      j(upper[u].second, upper[u].first) = -x[u];
    }
    witness.forms.push_back(std::move(j));
  }
  if (witness.forms.empty()) throw InternalError("no invariant skew form found");

  for (auto const& j : witness.forms) {
    if (!(j.transposed() == IntegerMatrix(nn, nn) - j)) throw InternalError("invariant form is not skew");
    for (auto const& m : witness.generators) {
      if (!(m.transposed() * j * m == j)) throw InternalError("form is not preserved by a generator");
    }
  }

  IntegerMatrix const& j = witness.form();
  if (n % 2 == 1) {
    IntegerMatrix gram = restricted_gram(j);
    mpz_class content = 0;
    for (std::size_t r = 0; r < gram.rows(); ++r)
      for (std::size_t c = 0; c < gram.cols(); ++c) content = gcd(content, gram(r, c));
    if (content == 0) throw InternalError("form vanishes on ker(phi)");
    for (std::size_t r = 0; r < gram.rows(); ++r)
      for (std::size_t c = 0; c < gram.cols(); ++c) gram(r, c) /= content;
    mpz_class det = gram.determinant();
    if (abs(det) != 1) throw InternalError("form restricted to ker(phi) is not unimodular");
  } else {
    // ker(phi) contains the fixed vector, which spans the radical there.
    auto radical = form_radical(restricted_gram(j));
    if (radical.size() != 1) throw InternalError("even-n form on ker(phi) has unexpected radical");
    std::vector<mpz_class> u(nn);
    for (std::size_t k = 0; k + 1 < nn; ++k) {
      u[k] += radical[0][k];
      u[k + 1] += radical[0][k];
    }
    for (auto const& m : witness.generators) {
      if (m.transposed().left_multiply(u) != u) throw InternalError("radical vector is not fixed");
    }
  }
  return witness;
}

// ---------------------------------------------------------------------------
// Chain transvection model

ModularMatrix transvection_generator_mod(int n, int i, int sign, std::uint32_t m) {
  if (n % 2 == 0) throw std::invalid_argument("transvection model needs odd n");
  check_index(n, i);
  auto dim = static_cast<std::size_t>(n - 1);
  auto c = static_cast<std::size_t>(i - 1);
  // i(e_k, c_i) is nonzero only for neighbours: i(c_{i-1}, c_i) = 1, i(c_{i+1}, c_i) = -1.
  ModularMatrix t = ModularMatrix::identity(dim, m);
  if (c > 0) t.set(c, c - 1, sign);
  if (c + 1 < dim) t.set(c, c + 1, -sign);
  return t;
}

ModularMatrix transvection_rho_mod(BraidWord const& w, std::uint32_t m) {
  int n = w.strands();
  ModularMatrix acc = ModularMatrix::identity(static_cast<std::size_t>(n - 1), m);
  for (int l : w.letters()) acc = acc * transvection_generator_mod(n, std::abs(l), l > 0 ? 1 : -1, m);
  return acc;
}

TransvectionCheck check_transvection_model(int n, std::uint32_t m, int samples, Rng& rng) {
  if (n % 2 == 0) throw std::invalid_argument("check_transvection_model needs odd n");
  TransvectionCheck result;
  for (int s = 0; s < samples; ++s) {
    BraidWord w = s % 2 == 0 ? random_word(n, 30, rng)
                             : random_level_member(n, static_cast<int>(m), 1 + s % 4, 8, rng) * random_word(n, s % 3, rng);
    bool by_chain = transvection_rho_mod(w, m).is_identity();
    bool by_burau = rho_mod(w, m).is_identity();
    ++result.samples;
    if (by_chain || by_burau) ++result.members;
    if (by_chain != by_burau) {
      result.agree = false;
      if (!result.counterexample) result.counterexample = w;
    }
  }
  return result;
}

}  // namespace braidcong
