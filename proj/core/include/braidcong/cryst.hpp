#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "braidcong/braid_word.hpp"
#include "braidcong/sampling.hpp"

namespace braidcong {

// Element of B_n / [P_n, P_n] in normal form: the permutation together with
// the linking vector of section(perm)^{-1} w. Componentwise equality is
// equality in the group.
struct CrystElement {
  Permutation perm;
  LinkingVector vec;

  explicit CrystElement(int n) : perm(n), vec(n) {}
  CrystElement(Permutation p, LinkingVector v);

  int strands() const noexcept { return perm.size(); }
  bool is_identity() const noexcept { return perm.is_identity() && vec.is_zero(); }
  friend bool operator==(CrystElement const&, CrystElement const&) = default;
};

CrystElement normal_form(BraidWord const& w);

// section(perm) followed by the product of A_ij^{v_ij} in pair order.
BraidWord representative_word(CrystElement const& a);

// Vector part of section(a) section(b) section(a then b)^{-1}, i.e. the
// normal-form vector of section(a) * section(b).
LinkingVector section_cocycle(Permutation const& a, Permutation const& b);

CrystElement multiply(CrystElement const& a, CrystElement const& b);
CrystElement inverse(CrystElement const& a);
CrystElement power(CrystElement const& a, long k);
CrystElement conjugate(CrystElement const& g, CrystElement const& a);  // g a g^{-1}

// Finite order, or nullopt for infinite order.
std::optional<int> element_order(CrystElement const& a);

// Element of order exactly k whose permutation has order k, if the fixed-point
// equation has an integer solution for some such permutation.
std::optional<CrystElement> torsion_search(int n, int k);

// The endomorphism induced by sigma_i -> sigma_i^m; m must be odd and positive.
CrystElement epsilon(int m, CrystElement const& a);

// Whether sigma_i -> sigma_i^m respects the Artin relations in B_n/[P_n,P_n].
bool epsilon_is_homomorphism(int n, int m);

// vec(a) - vec(epsilon(section class of perm(a))).
LinkingVector epsilon_offset(int m, CrystElement const& a);

bool image_membership(int m, CrystElement const& a);

// epsilon_offset reduced into [0, m).
std::vector<std::int64_t> quotient_reduction(int m, CrystElement const& a);

// Size of the subgroup of (Z/m)^{n(n-1)/2} generated by the reductions of the
// sigma_i and A_ij classes; nullopt past `cap` elements.
std::optional<std::size_t> quotient_image_order(int n, int m, std::size_t cap = 1'000'000);

// Whether S_n acts faithfully on Z^{n(n-1)/2} by permuting pairs. Exhaustive
// for n <= 6, otherwise generators plus `samples` random permutations.
bool holonomy_faithful(int n, int samples = 1000, std::uint64_t seed = 1);

}  // namespace braidcong
