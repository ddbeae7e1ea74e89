#include <doctest.h>

#include <braidcong/braid_word.hpp>
#include <braidcong/burau.hpp>
#include <braidcong/sampling.hpp>

using namespace braidcong;

namespace {

BraidWord word(int n, std::vector<int> letters) { return BraidWord(n, std::move(letters)); }

// Strand tracking written out independently of permutation(): simulate the
// list of strand labels by position and swap neighbours.
std::vector<int> final_positions(BraidWord const& w) {
  int n = w.strands();
  std::vector<int> at(static_cast<std::size_t>(n));  // at[pos] = starting position of the strand there
  for (int p = 0; p < n; ++p) at[static_cast<std::size_t>(p)] = p + 1;
  for (int l : w.letters()) {
    auto i = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) out[static_cast<std::size_t>(at[static_cast<std::size_t>(p)] - 1)] = p + 1;
  return out;
}

// Random positive word of length inversions(pi) that differs from the bubble
// sort section: each step appends a random length-increasing letter.
BraidWord random_reduced_word(int n, Rng& rng) {
  BraidWord w(n);
  std::uniform_int_distribution<int> letter(1, n - 1);
  std::uniform_int_distribution<int> steps(0, n * (n - 1) / 2);
  int target = steps(rng);
  for (int tries = 0; static_cast<int>(w.length()) < target && tries < 200; ++tries) {
    BraidWord next = w * BraidWord::generator(n, letter(rng));
    if (permutation(next).inversions() == static_cast<int>(next.length())) w = next;
  }
  return w;
}

}  // namespace

TEST_CASE("words compose, invert and take powers") {
  BraidWord a = word(4, {1, 2, -3});
  CHECK(a.inverse() == word(4, {3, -2, -1}));
  CHECK((a * a.inverse()).freely_reduced().empty());
  CHECK(a.power(2) == word(4, {1, 2, -3, 1, 2, -3}));
  CHECK(a.power(-1) == a.inverse());
  CHECK(a.power(0).empty());
  CHECK(word(3, {1, -2}).letterwise_power(3) == word(3, {1, 1, 1, -2, -2, -2}));
  CHECK(word(3, {1, 2, -2, -1, 1}).freely_reduced() == word(3, {1}));
  CHECK_THROWS_AS(BraidWord(3, {3}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(1), std::invalid_argument);
}

TEST_CASE("permutations follow strands left to right") {
  Permutation p = permutation(word(3, {1, 2}));
  CHECK(p(1) == 3);
  CHECK(p(2) == 1);
  CHECK(p(3) == 2);
  CHECK(to_cycle_string(p) == "(1 3 2)");
  CHECK(to_cycle_string(Permutation(4)) == "()");
  CHECK(p.order() == 3);
  CHECK(p.inverse() == permutation(word(3, {-2, -1})));
  CHECK(compose(p, p.inverse()).is_identity());

  Rng rng(11);
  for (int s = 0; s < 300; ++s) {
    int n = 2 + s % 6;
    BraidWord u = random_word(n, 15, rng), v = random_word(n, 15, rng);
    CHECK(permutation(u).images() == final_positions(u));
    CHECK(permutation(u * v) == compose(permutation(u), permutation(v)));
  }
}

TEST_CASE("strand pairs are numbered lexicographically") {
  CHECK(pair_count(4) == 6);
  std::size_t k = 0;
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) {
      CHECK(pair_index(5, StrandPair(i, j)) == k);
      CHECK(pair_at(5, k) == StrandPair(i, j));
      ++k;
    }
  }
  CHECK(StrandPair(3, 1) == StrandPair(1, 3));
  CHECK(all_pairs(3).size() == 3);
}

TEST_CASE("linking vectors of standard pure braids") {
  CHECK(linking_vector(word(3, {1, 1})) == LinkingVector::unit(3, StrandPair(1, 2)));
  for (int n = 2; n <= 6; ++n) {
    for (auto const& p : all_pairs(n)) {
      CHECK(linking_vector(pure_generator(n, p.i, p.j)) == LinkingVector::unit(n, p));
    }
    std::vector<std::int64_t> ones(pair_count(n), 1);
    CHECK(linking_vector(full_twist(n)) == LinkingVector(n, ones));
  }
  CHECK(pure_generator(4, 1, 3) == word(4, {2, 1, 1, -2}));
  CHECK_THROWS_AS(linking_vector(word(3, {1})), std::invalid_argument);
  CHECK_THROWS_AS(pure_generator(3, 2, 2), std::invalid_argument);
}

TEST_CASE("linking vector is additive and equivariant") {
  Rng rng(5);
  for (int s = 0; s < 300; ++s) {
    int n = 2 + s % 5;
    BraidWord p = random_pure_word(n, 15, rng), q = random_pure_word(n, 15, rng);
    CHECK(linking_vector(p * q) == linking_vector(p) + linking_vector(q));
    CHECK(linking_vector(p.inverse()) == -linking_vector(p));
    BraidWord g = random_word(n, 10, rng);
    CHECK(linking_vector(g * p * g.inverse()) == linking_vector(p).permuted(permutation(g.inverse())));
  }
}

TEST_CASE("section words are reduced and canonical") {
  Rng rng(3);
  for (int s = 0; s < 200; ++s) {
    int n = 2 + s % 6;
    Permutation pi = random_permutation(n, rng);
    BraidWord sec = section_word(pi);
    CHECK(permutation(sec) == pi);
    CHECK(static_cast<int>(sec.length()) == pi.inversions());
    for (int l : sec.letters()) CHECK(l > 0);

    // A different reduced word for the same permutation is the same braid, so
    // section^{-1} * w is pure with zero linking vector and trivial over Z.
    BraidWord other = random_reduced_word(n, rng);
    BraidWord diff = section_word(permutation(other)).inverse() * other;
    CHECK(is_pure(diff));
    CHECK(linking_vector(diff).is_zero());
    CHECK(rho(diff).is_identity());
  }
}

TEST_CASE("full twist and chain braids") {
  CHECK(full_twist(3) == word(3, {1, 2, 1, 2, 1, 2}));
  CHECK(torelli_chain(3, 2).length() == 12);
  CHECK_THROWS_AS(torelli_chain(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(torelli_chain(4, 4), std::invalid_argument);
  CHECK(is_pure(torelli_chain(7, 4)));
}

TEST_CASE("conjugation table agrees with the braid words") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int sign : {+1, -1}) {
        BraidWord s = BraidWord::generator(n, k, sign);
        for (auto const& p : all_pairs(n)) {
          auto factors = conjugated_generator_class(k, sign, p.i, p.j, n);
          BraidWord direct = s * pure_generator(n, p.i, p.j) * s.inverse();
          CAPTURE(n);
          CAPTURE(k);
          CAPTURE(sign);
          CAPTURE(p.i);
          CAPTURE(p.j);
          CHECK(abelianize(n, factors) == linking_vector(direct));
          CHECK(rho(expand(n, factors)) == rho(direct));
        }
      }
    }
  }
}

TEST_CASE("parse_word grammar") {
  CHECK(parse_word("1 2 -1", 3) == word(3, {1, 2, -1}));
  CHECK(parse_word("1,2,,-1", 3) == word(3, {1, 2, -1}));
  CHECK(parse_word("  +2\t-1\n", 3) == word(3, {2, -1}));
  CHECK(parse_word("", 5).empty());
  CHECK_THROWS_WITH_AS(parse_word("3", 3), doctest::Contains("offset 0"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_word("1 0", 3), doctest::Contains("offset 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1 x", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1.5", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("--1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("99999999999999999999", 3), std::invalid_argument);

  Rng rng(2);
  for (int s = 0; s < 100; ++s) {
    BraidWord w = random_word(6, 20, rng);
    CHECK(parse_word(format_word(w), 6) == w);
  }
}
