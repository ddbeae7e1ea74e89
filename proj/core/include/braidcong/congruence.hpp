#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidcong/braid_word.hpp"
#include "braidcong/matrix.hpp"
#include "braidcong/sampling.hpp"
#include "braidcong/smith.hpp"

namespace braidcong {

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string const& what, std::size_t partial) : std::runtime_error(what), partial_(partial) {}
  std::size_t partial() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

inline constexpr std::size_t kDefaultElementCap = 1'000'000;
inline constexpr std::size_t kDefaultMaxIndex = 10'000;

/// True iff rho_m(w) is the identity, i.e. w lies in the level-m congruence
/// subgroup B_n[m].
bool is_member(BraidWord const& w, std::uint32_t m);

// Generators are visited in the fixed order sigma_1, sigma_1^{-1}, sigma_2, ...
// A slot is 2(i-1) for sigma_i and 2(i-1)+1 for its inverse.
inline std::size_t generator_slot(int i, int sign) { return 2 * static_cast<std::size_t>(i - 1) + (sign < 0 ? 1 : 0); }
inline int slot_letter(std::size_t slot) {
  int i = static_cast<int>(slot / 2) + 1;
  return slot % 2 == 0 ? i : -i;
}

// The finite group rho_m(B_n), numbered in BFS order from the identity with
// right multiplication by generator images in slot order.
class ImageGroup {
 public:
  int strands() const noexcept { return n_; }
  std::uint32_t modulus() const noexcept { return m_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t slots() const noexcept { return generators_.size(); }

  ModularMatrix const& element(std::size_t k) const { return elements_[k]; }
  ModularMatrix const& generator(std::size_t slot) const { return generators_[slot]; }

  // Index of element k * generator(slot).
  std::uint32_t edge(std::size_t k, std::size_t slot) const { return edges_[k * generators_.size() + slot]; }

  std::optional<std::size_t> find(ModularMatrix const& g) const;

 private:
  friend ImageGroup enumerate_image(int n, std::uint32_t m, std::size_t element_cap);

  int n_ = 0;
  std::uint32_t m_ = 0;
  std::vector<ModularMatrix> elements_;
  std::vector<ModularMatrix> generators_;
  std::vector<std::uint32_t> edges_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

/// BFS closure of the generator images; throws CapExceeded past element_cap.
ImageGroup enumerate_image(int n, std::uint32_t m, std::size_t element_cap = kDefaultElementCap);

// Element indices commuting with every generator image.
std::vector<std::size_t> image_center(ImageGroup const& g);

// Right cosets of B_n[m] in B_n, identified with elements of rho_m(B_n).
// Coset 0 is the subgroup itself. The transversal is the BFS tree, so every
// representative is the shortlex-least word reaching its coset.
class CosetTable {
 public:
  explicit CosetTable(ImageGroup group);

  ImageGroup const& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return group_.size(); }
  int strands() const noexcept { return group_.strands(); }

  std::size_t act(std::size_t coset, int letter) const {
    return group_.edge(coset, generator_slot(std::abs(letter), letter > 0 ? 1 : -1));
  }
  std::size_t act(std::size_t coset, BraidWord const& w) const;

  BraidWord const& transversal(std::size_t coset) const { return transversal_[coset]; }

  // Tree edge into `coset` (not defined for coset 0).
  std::size_t parent(std::size_t coset) const { return parent_[coset]; }
  int parent_letter(std::size_t coset) const { return parent_letter_[coset]; }

 private:
  ImageGroup group_;
  std::vector<BraidWord> transversal_;
  std::vector<std::size_t> parent_;
  std::vector<int> parent_letter_;
};

CosetTable coset_table(int n, std::uint32_t m, std::size_t element_cap = kDefaultElementCap);

// Schreier generator g_{c,i} = t_c sigma_i t_{c sigma_i}^{-1}, numbered
// c * (n-1) + (i-1).
struct SchreierRewrite {
  std::vector<std::int64_t> exponents;
  std::size_t end_coset = 0;
};

std::size_t schreier_generator_count(CosetTable const& table);
BraidWord schreier_generator_word(CosetTable const& table, std::size_t generator);
SchreierRewrite schreier_rewrite(CosetTable const& table, BraidWord const& w, std::size_t start_coset = 0);

// The (n-1)(n-2)/2 defining relators of the Artin presentation.
std::vector<BraidWord> artin_relators(int n);

struct AbelianizationOptions {
  std::size_t element_cap = kDefaultElementCap;
  std::size_t max_index = kDefaultMaxIndex;
  bool keep_transforms = true;
};

// B_n[m] / [B_n[m], B_n[m]] = Z^free_rank + sum Z/d_k.
struct AbelianizationResult {
  int n = 0;
  std::uint32_t m = 0;
  std::size_t index = 0;
  std::size_t schreier_generators = 0;
  std::size_t relation_rows = 0;
  std::size_t relation_rank = 0;
  std::vector<mpz_class> invariant_factors;  // the d_k > 1
  std::size_t free_rank = 0;

  // Coordinates y = x V of a Schreier exponent vector x. Coordinate k lives in
  // Z/diagonal[k] for k < relation_rank and is free otherwise.
  std::vector<mpz_class> diagonal;
  std::optional<IntegerMatrix> right;
  std::optional<IntegerMatrix> right_inverse;

  std::shared_ptr<CosetTable const> table;

  std::vector<mpz_class> coordinates(std::vector<std::int64_t> const& exponents) const;
  bool is_trivial_class(std::vector<std::int64_t> const& exponents) const;
};

AbelianizationResult abelianization(int n, std::uint32_t m, AbelianizationOptions const& options = {});

// Assembled relation matrix, exposed for tests.
IntegerMatrix relation_matrix(CosetTable const& table);

struct ActionMatrix {
  BraidWord element;
  IntegerMatrix matrix;  // rows: images of the free basis vectors under s -> w^{-1} s w
  bool torsion_hit = false;
};

// Conjugation action of w on the free part of the abelianization, in row
// vector convention: action(uv) = action(u) * action(v).
ActionMatrix theta_action(BraidWord const& w, AbelianizationResult const& ab);

// Samples members of B_n[k] and confirms they lie in B_n[m] (m | k).
bool divisibility_check(int n, std::uint32_t m, std::uint32_t k, int samples, Rng& rng);

}  // namespace braidcong
