#include <doctest.h>

#include <braidcong/burau.hpp>
#include <braidcong/sampling.hpp>

using namespace braidcong;

namespace {

// Unreduced Burau block [[1 - t, t], [1, 0]] and its inverse [[0, 1], [1/t, 1 - 1/t]] at t = -1.
IntegerMatrix burau_oracle(int n, int i, int sign) {
  IntegerMatrix m = IntegerMatrix::identity(static_cast<std::size_t>(n));
  const long t = -1;
  auto a = static_cast<std::size_t>(i - 1);
  if (sign > 0) {
    m(a, a) = 1 - t;
    m(a, a + 1) = t;
    m(a + 1, a) = 1;
    m(a + 1, a + 1) = 0;
  } else {
    m(a, a) = 0;
    m(a, a + 1) = 1;
    m(a + 1, a) = 1 / t;
    m(a + 1, a + 1) = 1 - 1 / t;
  }
  return m;
}

std::vector<mpz_class> times_column(IntegerMatrix const& a, std::vector<mpz_class> const& v) {
  std::vector<mpz_class> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * v[c];
  return out;
}

}  // namespace

TEST_CASE("generator matrices match the unreduced Burau formula at t = -1") {
  for (int n = 2; n <= 7; ++n) {
    for (int i = 1; i < n; ++i) {
      CHECK(burau_generator(n, i, +1) == burau_oracle(n, i, +1));
      CHECK(burau_generator(n, i, -1) == burau_oracle(n, i, -1));
      CHECK((burau_generator(n, i, +1) * burau_generator(n, i, -1)).is_identity());
    }
  }
  CHECK(burau_generator(3, 1) == IntegerMatrix::from_rows({{2, -1, 0}, {1, 0, 0}, {0, 0, 1}}));
}

TEST_CASE("rho is a homomorphism respecting the braid relations") {
  for (int n = 3; n <= 7; ++n) {
    for (int i = 1; i + 1 < n; ++i) {
      CHECK(rho(BraidWord(n, {i, i + 1, i})) == rho(BraidWord(n, {i + 1, i, i + 1})));
    }
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j) CHECK(rho(BraidWord(n, {i, j})) == rho(BraidWord(n, {j, i})));
  }
  Rng rng(7);
  for (int s = 0; s < 100; ++s) {
    int n = 2 + s % 6;
    BraidWord u = random_word(n, 12, rng), v = random_word(n, 12, rng);
    CHECK(rho(u * v) == rho(u) * rho(v));
    CHECK((rho(u) * rho(u.inverse())).is_identity());
    CHECK(rho(u).determinant() == 1);
  }
}

TEST_CASE("invariant vector and covector") {
  Rng rng(8);
  for (int s = 0; s < 60; ++s) {
    int n = 2 + s % 6;
    BraidWord w = random_word(n, 15, rng);
    IntegerMatrix r = rho(w);
    auto v0 = invariant_vector(n);
    auto phi = invariant_covector(n);
    CHECK(times_column(r, v0) == v0);
    CHECK(r.left_multiply(phi) == phi);
  }
  CHECK(invariant_covector(4) == std::vector<mpz_class>{1, -1, 1, -1});
}

TEST_CASE("reduction mod m commutes with rho") {
  Rng rng(9);
  for (int s = 0; s < 100; ++s) {
    int n = 2 + s % 6;
    std::uint32_t m = 2 + static_cast<std::uint32_t>(s % 9);
    BraidWord w = random_word(n, 25, rng);
    CHECK(rho_mod(w, m) == ModularMatrix::reduce(rho(w), m));
  }
  CHECK_THROWS_AS(rho_mod(BraidWord(3), 1), std::invalid_argument);
}

TEST_CASE("full twist acts as -1 on ker(phi) for odd n") {
  for (int n : {3, 5, 7}) {
    IntegerMatrix r = rho(full_twist(n));
    auto v0 = invariant_vector(n);
    CHECK(times_column(r, v0) == v0);
    for (int j = 1; j < n; ++j) {
      std::vector<mpz_class> b(static_cast<std::size_t>(n));
      b[static_cast<std::size_t>(j - 1)] = 1;
      b[static_cast<std::size_t>(j)] = 1;
      auto image = times_column(r, b);
      for (auto& x : b) x = -x;
      CHECK(image == b);
    }
  }
}

TEST_CASE("order_mod") {
  CHECK(order_mod(ModularMatrix::identity(3, 5), 10) == 1);
  CHECK(order_mod(rho_mod(BraidWord::generator(3, 1), 5), 100) == 5);
  CHECK(order_mod(rho_mod(BraidWord::generator(3, 1), 5), 4) == std::nullopt);
  CHECK(order_mod(rho_mod(full_twist(4), 5), default_order_cap(4, 5)) == 5);
}

TEST_CASE("invariant symplectic form") {
  for (int n = 3; n <= 7; ++n) {
    InvariantFormWitness w = invariant_form(n);
    REQUIRE_FALSE(w.forms.empty());
    for (auto const& j : w.forms) {
      CHECK((j + j.transposed()).is_zero());
      CHECK_FALSE(j.is_zero());
      for (int i = 1; i < n; ++i) {
        IntegerMatrix m = burau_generator(n, i);
        CHECK(m.transposed() * j * m == j);
      }
    }
    IntegerMatrix gram = restricted_gram(w.form());
    if (n % 2 == 1) {
      mpz_class det = gram.determinant();
      CHECK(det != 0);
      CHECK(form_radical(gram).empty());
    } else {
      CHECK(w.form().determinant() != 0);
      auto radical = form_radical(gram);
      REQUIRE(radical.size() == 1);
      std::vector<mpz_class> u(static_cast<std::size_t>(n));
      for (std::size_t k = 0; k + 1 < u.size(); ++k) {
        u[k] += radical[0][k];
        u[k + 1] += radical[0][k];
      }
      for (int i = 1; i < n; ++i) CHECK(times_column(burau_generator(n, i), u) == u);
    }
  }
  CHECK_THROWS_AS(invariant_form(2), std::invalid_argument);
}

TEST_CASE("chain transvections are the Burau action on ker(phi)") {
  Rng rng(10);
  for (int n : {3, 5, 7}) {
    for (std::uint32_t m : {2u, 3u, 7u, 101u}) {
      for (int s = 0; s < 40; ++s) {
        BraidWord w = random_word(n, 20, rng);
        ModularMatrix r = rho_mod(w, m);
        ModularMatrix t = transvection_rho_mod(w, m);
        // rho(w) b_j = sum_k t_{kj} b_k with b_j = e_j + e_{j+1}.
        for (int j = 0; j + 1 < n; ++j) {
          auto uj = static_cast<std::size_t>(j);
          for (int row = 0; row < n; ++row) {
            auto ur = static_cast<std::size_t>(row);
            std::uint64_t lhs = (r(ur, uj) + r(ur, uj + 1)) % m;
            std::uint64_t rhs = 0;
            if (row < n - 1) rhs += t(ur, uj);
            if (row > 0) rhs += t(ur - 1, uj);
            CHECK(lhs == rhs % m);
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(transvection_generator_mod(4, 1, 1, 3), std::invalid_argument);
}

TEST_CASE("transvection model check") {
  Rng rng(12);
  for (auto [n, m] : std::vector<std::pair<int, std::uint32_t>>{{3, 2}, {3, 3}, {5, 2}, {5, 3}, {7, 4}}) {
    auto result = check_transvection_model(n, m, 100, rng);
    CHECK(result.agree);
    CHECK(result.samples == 100);
    CHECK(result.members >= 10);
  }
}
