#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "braidcong/braid_word.hpp"
#include "braidcong/matrix.hpp"
#include "braidcong/sampling.hpp"

namespace braidcong {

// Unreduced Burau representation evaluated at t = -1. Generator sigma_i acts
// by the block [[2, -1], [1, 0]] on coordinates (i, i+1) of the identity, and
// rho(uv) = rho(u) rho(v).
//
// Every image fixes v0 = (1, ..., 1) on the right and the covector
// phi = (1, -1, 1, ...) on the left. For odd n, phi(v0) = 1 and Z^n splits as
// ker(phi) + Z v0 with a symplectic action on ker(phi); for even n, v0 lies in
// ker(phi) and is the fixed vector of the symplectic model.

IntegerMatrix burau_generator(int n, int i, int sign = +1);
IntegerMatrix rho(BraidWord const& w);

ModularMatrix burau_generator_mod(int n, int i, int sign, std::uint32_t m);
ModularMatrix rho_mod(BraidWord const& w, std::uint32_t m);

std::vector<mpz_class> invariant_vector(int n);    // v0
std::vector<mpz_class> invariant_covector(int n);  // phi

inline int default_order_cap(int n, std::uint32_t m) { return 4 * static_cast<int>(m) * n; }

struct InvariantFormWitness {
  int n = 0;
  // Integer basis of the space of skew J with M^T J M = J for every generator
  // image M; each basis element is primitive. forms.front() is "the" form.
  std::vector<IntegerMatrix> forms;
  std::vector<IntegerMatrix> generators;

  IntegerMatrix const& form() const { return forms.front(); }
};

// Throws InternalError when the solution space is empty or a postcondition
// fails: for odd n the form restricted to ker(phi) must be unimodular after
// removing its content; for even n the radical must be nonzero and fixed by
// every generator image.
InvariantFormWitness invariant_form(int n);

// Integer basis of the right kernel {u : J u = 0}.
std::vector<std::vector<mpz_class>> form_radical(IntegerMatrix const& j);

// Gram matrix of J on the basis e_i + e_{i+1} of ker(phi).
IntegerMatrix restricted_gram(IntegerMatrix const& j);

// Chain-of-curves model on H_1 of the double cover (odd n): basis c_1..c_{n-1},
// i(c_j, c_{j+1}) = 1, sigma_i acting by the transvection u -> u + i(u, c_i) c_i.
ModularMatrix transvection_generator_mod(int n, int i, int sign, std::uint32_t m);
ModularMatrix transvection_rho_mod(BraidWord const& w, std::uint32_t m);

struct TransvectionCheck {
  bool agree = true;
  int samples = 0;
  int members = 0;  // samples lying in the kernel, by either model
  std::optional<BraidWord> counterexample;
};

// Compares kernel membership of the chain-transvection model and rho_mod on
// random words, half unconstrained and half built as products of conjugates of
// sigma_i^{+-m}. n must be odd.
TransvectionCheck check_transvection_model(int n, std::uint32_t m, int samples, Rng& rng);

}  // namespace braidcong
