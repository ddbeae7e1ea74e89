#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "braidcong/braid_word.hpp"

namespace braidcong {

using Rng = std::mt19937_64;

// Uniform letters, length uniform in [0, max_length].
BraidWord random_word(int n, std::size_t max_length, Rng& rng);
BraidWord random_word_of_length(int n, std::size_t length, Rng& rng);

// w * section(perm(w))^{-1} for a random w.
BraidWord random_pure_word(int n, std::size_t max_length, Rng& rng);

// Product of `factors` random conjugates g sigma_i^{+-m} g^{-1}; always lies in B_n[m].
BraidWord random_level_member(int n, int m, int factors, std::size_t conjugator_length, Rng& rng);

Permutation random_permutation(int n, Rng& rng);

}  // namespace braidcong
