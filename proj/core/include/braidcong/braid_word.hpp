#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidcong {

/// Thrown when an algorithm detects a state that its own invariants rule out.
/// Never caught internally; a throw means a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A word in the Artin generators of B_n. Letter +i stands for sigma_i and
// -i for its inverse, 1 <= i <= n-1. Words are kept fully expanded; free
// cancellation only happens when freely_reduced() is called.
class BraidWord {
 public:
  explicit BraidWord(int n);
  BraidWord(int n, std::vector<int> letters);

  static BraidWord generator(int n, int i, int sign = +1);

  int strands() const noexcept { return n_; }
  std::span<int const> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord power(long k) const;
  BraidWord freely_reduced() const;

  // Replace each letter sigma_i^s by sigma_i^{s*k}.
  BraidWord letterwise_power(int k) const;

  BraidWord& operator*=(BraidWord const& rhs);
  friend BraidWord operator*(BraidWord lhs, BraidWord const& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend bool operator==(BraidWord const&, BraidWord const&) = default;

  void push_back(int letter);

 private:
  int n_;
  std::vector<int> letters_;
};

// Bijection of {1..n}. For a braid word, image(p) is the final position of the
// strand that starts at position p when the word is read left to right.
class Permutation {
 public:
  explicit Permutation(int n);  // identity
  explicit Permutation(std::vector<int> images);  // 1-based images

  static Permutation transposition(int n, int a, int b);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point - 1)]; }
  std::vector<int> const& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  int order() const;
  int inversions() const;

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

 private:
  std::vector<int> images_;
};

/// First `a`, then `b`: result(p) = b(a(p)).
Permutation compose(Permutation const& a, Permutation const& b);

std::string to_cycle_string(Permutation const& p);

// Unordered strand pairs {i, j}, 1 <= i < j <= n, numbered lexicographically
// from 0 to n(n-1)/2 - 1.
struct StrandPair {
  int i;
  int j;

  StrandPair(int a, int b);  // normalizes so that i < j
  friend bool operator==(StrandPair const&, StrandPair const&) = default;
};

std::size_t pair_count(int n);
std::size_t pair_index(int n, StrandPair p);
StrandPair pair_at(int n, std::size_t index);
std::vector<StrandPair> all_pairs(int n);

// Abelianization coordinates of a pure braid in the basis {A_ij}.
class LinkingVector {
 public:
  explicit LinkingVector(int n);
  LinkingVector(int n, std::vector<std::int64_t> coords);

  static LinkingVector unit(int n, StrandPair p);

  int strands() const noexcept { return n_; }
  std::vector<std::int64_t> const& coords() const noexcept { return coords_; }
  std::int64_t operator[](std::size_t k) const { return coords_[k]; }
  std::int64_t& operator[](std::size_t k) { return coords_[k]; }
  std::int64_t at(StrandPair p) const { return coords_[pair_index(n_, p)]; }
  std::size_t size() const noexcept { return coords_.size(); }

  bool is_zero() const noexcept;

  // Sends e_{i,j} to e_{pi(i),pi(j)}.
  LinkingVector permuted(Permutation const& pi) const;

  LinkingVector& operator+=(LinkingVector const& rhs);
  LinkingVector& operator-=(LinkingVector const& rhs);
  LinkingVector& operator*=(std::int64_t k);
  friend LinkingVector operator+(LinkingVector a, LinkingVector const& b) { return a += b; }
  friend LinkingVector operator-(LinkingVector a, LinkingVector const& b) { return a -= b; }
  friend LinkingVector operator*(std::int64_t k, LinkingVector a) { return a *= k; }
  LinkingVector operator-() const { return (-1) * *this; }
  friend bool operator==(LinkingVector const&, LinkingVector const&) = default;

 private:
  int n_;
  std::vector<std::int64_t> coords_;
};

Permutation permutation(BraidWord const& w);

bool is_pure(BraidWord const& w);

// Positive word of length inversions(pi) whose permutation is pi, built by
// bubble sort. Every reduced word of pi gives the same braid, so this is a
// canonical set-theoretic section S_n -> B_n.
BraidWord section_word(Permutation const& pi);

// A_{i,j} = (s_{j-1} ... s_{i+1}) s_i^2 (s_{j-1} ... s_{i+1})^{-1}
BraidWord pure_generator(int n, int i, int j);

// (s_1 s_2 ... s_{n-1})^n
BraidWord full_twist(int n);

// (s_1 ... s_k)^{2k+2}; k even, 2 <= k < n.
BraidWord torelli_chain(int n, int k);

// Signed crossing count per strand pair, halved. Throws std::invalid_argument
// for non-pure input.
LinkingVector linking_vector(BraidWord const& w);

// Formal word in the pure generators: (pair, exponent) factors, left to right.
using PureFactor = std::pair<StrandPair, int>;
using PureGeneratorWord = std::vector<PureFactor>;

// sigma_k^{sign} A_{i,j} sigma_k^{-sign} rewritten as a product of A's.
PureGeneratorWord conjugated_generator_class(int k, int sign, int i, int j, int n);

BraidWord expand(int n, PureGeneratorWord const& factors);
LinkingVector abelianize(int n, PureGeneratorWord const& factors);

// Whitespace- or comma-separated nonzero integers; |i| <= n-1.
BraidWord parse_word(std::string_view text, int n);
std::string format_word(BraidWord const& w);

}  // namespace braidcong
