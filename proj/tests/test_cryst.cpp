#include <doctest.h>

#include <braidcong/cryst.hpp>
#include <algorithm>
#include <numeric>

using namespace braidcong;

namespace {

CrystElement cls(int n, std::vector<int> letters) { return normal_form(BraidWord(n, std::move(letters))); }

CrystElement lattice(int n, std::vector<std::int64_t> v) { return CrystElement(Permutation(n), LinkingVector(n, std::move(v))); }

CrystElement random_element(int n, Rng& rng) { return normal_form(random_word(n, 20, rng)); }

}  // namespace

TEST_CASE("normal form examples") {
  CrystElement s1 = cls(3, {1});
  CHECK(to_cycle_string(s1.perm) == "(1 2)");
  CHECK(s1.vec.is_zero());
  CHECK(cls(3, {1, 1}) == lattice(3, {1, 0, 0}));
  CHECK(cls(3, {-1, -1}) == lattice(3, {-1, 0, 0}));
  CHECK(cls(3, {1, 2, 1, 2, 1, 2}) == lattice(3, {1, 1, 1}));
  CHECK(cls(4, {}).is_identity());
  // sigma_1 sigma_2 sigma_1^{-1} = sigma_2^{-1} sigma_1 sigma_2, and
  // section((1 3)) = sigma_1 sigma_2 sigma_1.
  CrystElement a = cls(4, {1, 2, -1});
  CHECK(to_cycle_string(a.perm) == "(1 3)");
  CHECK(a == multiply(cls(4, {1, 2, 1}), lattice(4, {-1, 0, 0, 0, 0, 0})));
}

TEST_CASE("representative words round trip") {
  Rng rng(41);
  for (int s = 0; s < 200; ++s) {
    int n = 2 + s % 5;
    CrystElement a = random_element(n, rng);
    CHECK(normal_form(representative_word(a)) == a);
  }
}

TEST_CASE("normal form is multiplicative") {
  Rng rng(42);
  for (int s = 0; s < 1000; ++s) {
    int n = 2 + s % 5;
    BraidWord u = random_word(n, 20, rng), v = random_word(n, 20, rng);
    CHECK(normal_form(u * v) == multiply(normal_form(u), normal_form(v)));
    CHECK(normal_form(u.inverse()) == inverse(normal_form(u)));
  }
}

TEST_CASE("group axioms") {
  Rng rng(43);
  for (int s = 0; s < 200; ++s) {
    int n = 3 + s % 4;
    CrystElement a = random_element(n, rng), b = random_element(n, rng), c = random_element(n, rng);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, inverse(a)).is_identity());
    CHECK(multiply(inverse(a), a).is_identity());
    CHECK(multiply(a, CrystElement(n)) == a);
    CHECK(power(a, 3) == multiply(a, multiply(a, a)));
    CHECK(power(a, -2) == inverse(multiply(a, a)));
    CHECK(power(a, 0).is_identity());
  }
  CHECK_THROWS_AS(multiply(CrystElement(3), CrystElement(4)), std::invalid_argument);
}

TEST_CASE("commutators of pure braids vanish") {
  Rng rng(44);
  for (int s = 0; s < 200; ++s) {
    int n = 3 + s % 4;
    BraidWord p = random_pure_word(n, 15, rng), q = random_pure_word(n, 15, rng);
    CHECK(normal_form(p * q * p.inverse() * q.inverse()).is_identity());
  }
}

TEST_CASE("conjugation permutes the lattice basis") {
  Rng rng(45);
  for (int s = 0; s < 500; ++s) {
    int n = 3 + s % 4;
    BraidWord alpha = random_word(n, 15, rng);
    Permutation pi = permutation(alpha.inverse());
    for (auto const& p : all_pairs(n)) {
      CrystElement image = normal_form(alpha * pure_generator(n, p.i, p.j) * alpha.inverse());
      CHECK(image == CrystElement(Permutation(n), LinkingVector::unit(n, StrandPair(pi(p.i), pi(p.j)))));
    }
  }
}

TEST_CASE("element orders") {
  CHECK(element_order(CrystElement(3)) == 1);
  CHECK(element_order(cls(3, {1, 2, 1, 2, 1, 2})) == std::nullopt);
  CHECK(element_order(cls(3, {1})) == std::nullopt);
  CHECK(element_order(cls(5, {1, 3})) == std::nullopt);
}

TEST_CASE("torsion search") {
  for (int n = 3; n <= 5; ++n) CHECK_FALSE(torsion_search(n, 2));

  auto three = torsion_search(3, 3);
  REQUIRE(three);
  CHECK(element_order(*three) == 3);
  CHECK(power(*three, 3).is_identity());
  CHECK_FALSE(three->is_identity());
  CHECK(*three == CrystElement(Permutation({2, 3, 1}), LinkingVector(3, {-1, 0, 0})));

  auto five = torsion_search(5, 5);
  REQUIRE(five);
  CHECK(element_order(*five) == 5);
  CHECK_FALSE(torsion_search(4, 4));
  CHECK_THROWS_AS(torsion_search(3, 1), std::invalid_argument);
}

TEST_CASE("power endomorphism") {
  CHECK(epsilon(3, cls(3, {1})) == CrystElement(Permutation::transposition(3, 1, 2), LinkingVector(3, {1, 0, 0})));
  CHECK(epsilon(3, CrystElement(4)).is_identity());
  for (int n = 3; n <= 5; ++n) {
    for (int m : {1, 3, 5, 7}) {
      for (auto const& p : all_pairs(n)) {
        CrystElement a(Permutation(n), LinkingVector::unit(n, p));
        CHECK(epsilon(m, a) == CrystElement(Permutation(n), static_cast<std::int64_t>(m) * LinkingVector::unit(n, p)));
      }
    }
  }
  CHECK_THROWS_AS(epsilon(2, cls(3, {1})), std::invalid_argument);
  CHECK_THROWS_AS(epsilon(-1, cls(3, {1})), std::invalid_argument);

  Rng rng(46);
  for (int s = 0; s < 200; ++s) {
    int n = 3 + s % 3;
    int m = s % 2 ? 3 : 5;
    BraidWord w = random_word(n, 15, rng);
    CrystElement a = normal_form(w);
    // The letterwise power of any word for a normalizes to epsilon(a).
    CHECK(epsilon(m, a) == normal_form(w.letterwise_power(m)));
    CrystElement b = random_element(n, rng);
    CHECK(epsilon(m, multiply(a, b)) == multiply(epsilon(m, a), epsilon(m, b)));
    CHECK(epsilon(1, a) == a);
  }
}

TEST_CASE("homomorphism check on the Artin relations") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 1}, {3, 3}, {3, 5}, {4, 3}, {4, 5}, {5, 3}, {6, 7}}) {
    CAPTURE(n);
    CAPTURE(m);
    CHECK(epsilon_is_homomorphism(n, m));
  }
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 2}, {4, 4}, {5, 6}}) CHECK_FALSE(epsilon_is_homomorphism(n, m));
}

TEST_CASE("power endomorphism is injective but not surjective") {
  CrystElement s1 = cls(3, {1});
  CHECK_FALSE(image_membership(3, s1));
  CHECK(epsilon_offset(3, s1) == LinkingVector(3, {-1, 0, 0}));
  CHECK(image_membership(3, lattice(3, {3, 0, 0})));
  CHECK(image_membership(3, normal_form(pure_generator(3, 1, 2).power(3))));

  Rng rng(47);
  for (int s = 0; s < 1000; ++s) {
    int n = 3 + s % 3;
    CrystElement a = random_element(n, rng), b = random_element(n, rng);
    CHECK((epsilon(3, a) == epsilon(3, b)) == (a == b));
    CHECK(image_membership(3, epsilon(3, a)));
  }
}

TEST_CASE("reduction modulo the image") {
  CHECK(quotient_reduction(3, lattice(3, {1, 0, 0})) == std::vector<std::int64_t>{1, 0, 0});
  CHECK(quotient_reduction(5, lattice(3, {-1, 0, 7})) == std::vector<std::int64_t>{4, 0, 2});
  CHECK(quotient_image_order(3, 3) == 27);
  CHECK(quotient_image_order(3, 5) == 125);
  CHECK(quotient_image_order(4, 3) == 729);

  Rng rng(48);
  for (int s = 0; s < 300; ++s) {
    int n = 3 + s % 3;
    CrystElement a = random_element(n, rng);
    auto zero = quotient_reduction(3, epsilon(3, a));
    CHECK(std::all_of(zero.begin(), zero.end(), [](auto x) { return x == 0; }));

    // Additivity holds whenever the right factor is pure.
    CrystElement p = normal_form(random_pure_word(n, 15, rng));
    auto qa = quotient_reduction(3, a), qp = quotient_reduction(3, p), qap = quotient_reduction(3, multiply(a, p));
    for (std::size_t k = 0; k < qap.size(); ++k) CHECK(qap[k] == (qa[k] + qp[k]) % 3);
  }
}

TEST_CASE("the epsilon image is not normal") {
  // Conjugating epsilon(sigma_1) by a lattice element moves it off the image,
  // so the reduction cannot be additive on all pairs.
  CrystElement e = epsilon(3, cls(3, {1}));
  CrystElement y = lattice(3, {0, 1, 0});
  CrystElement c = conjugate(y, e);
  CHECK(c.perm == e.perm);
  CHECK_FALSE(image_membership(3, c));

  CrystElement a = lattice(3, {0, 1, 0}), b = cls(3, {1});
  auto qa = quotient_reduction(3, a), qb = quotient_reduction(3, b), qab = quotient_reduction(3, multiply(a, b));
  CHECK(qab != std::vector<std::int64_t>{(qa[0] + qb[0]) % 3, (qa[1] + qb[1]) % 3, (qa[2] + qb[2]) % 3});
}

TEST_CASE("members of B_3[3] reduce into the sum-zero subgroup") {
  Rng rng(49);
  for (int s = 0; s < 500; ++s) {
    BraidWord w = random_level_member(3, 3, 1 + s % 4, 8, rng);
    auto q = quotient_reduction(3, normal_form(w));
    CHECK(std::accumulate(q.begin(), q.end(), std::int64_t{0}) % 3 == 0);
  }
}

TEST_CASE("holonomy representation") {
  CHECK_FALSE(holonomy_faithful(2));
  for (int n = 3; n <= 8; ++n) CHECK(holonomy_faithful(n));
}
