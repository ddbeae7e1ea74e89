#include "braidcong/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace braidcong {

BraidWord random_word_of_length(int n, std::size_t length, Rng& rng) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution flip(0.5);
  std::vector<int> letters(length);
  for (auto& l : letters) l = flip(rng) ? gen(rng) : -gen(rng);
  return BraidWord(n, std::move(letters));
}

BraidWord random_word(int n, std::size_t max_length, Rng& rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  return random_word_of_length(n, len(rng), rng);
}

BraidWord random_pure_word(int n, std::size_t max_length, Rng& rng) {
  BraidWord w = random_word(n, max_length, rng);
  return w * section_word(permutation(w)).inverse();
}

BraidWord random_level_member(int n, int m, int factors, std::size_t conjugator_length, Rng& rng) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution flip(0.5);
  BraidWord out(n);
  for (int f = 0; f < factors; ++f) {
    BraidWord g = random_word(n, conjugator_length, rng);
    BraidWord core = BraidWord::generator(n, gen(rng), flip(rng) ? 1 : -1).power(m);
    out *= g * core * g.inverse();
  }
  return out;
}

Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

}  // namespace braidcong
