#include "braidcong/cryst.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "braidcong/matrix.hpp"
#include "braidcong/smith.hpp"

namespace braidcong {

CrystElement::CrystElement(Permutation p, LinkingVector v) : perm(std::move(p)), vec(std::move(v)) {
  if (perm.size() != vec.strands()) throw std::invalid_argument("permutation and vector disagree on n");
}

CrystElement normal_form(BraidWord const& w) {
  Permutation pi = permutation(w);
  BraidWord lifted = section_word(pi).inverse() * w;
  if (!is_pure(lifted)) throw InternalError("section word does not match the permutation");
  return CrystElement(std::move(pi), linking_vector(lifted));
}

BraidWord representative_word(CrystElement const& a) {
  int n = a.strands();
  BraidWord out = section_word(a.perm);
  for (std::size_t k = 0; k < a.vec.size(); ++k) {
    if (a.vec[k] == 0) continue;
    StrandPair p = pair_at(n, k);
    out *= pure_generator(n, p.i, p.j).power(a.vec[k]);
  }
  return out;
}

LinkingVector section_cocycle(Permutation const& a, Permutation const& b) {
  BraidWord w = section_word(compose(a, b)).inverse() * section_word(a) * section_word(b);
  return linking_vector(w);
}

CrystElement multiply(CrystElement const& a, CrystElement const& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("cannot multiply elements on different n");
  // S_a P_a S_b P_b = S_a S_b (S_b^{-1} P_a S_b) P_b, and conjugating by
  // S_b^{-1} moves the pair (i, j) to (pi_b(i), pi_b(j)).
  LinkingVector v = section_cocycle(a.perm, b.perm);
  v += a.vec.permuted(b.perm);
  v += b.vec;
  return CrystElement(compose(a.perm, b.perm), std::move(v));
}

CrystElement inverse(CrystElement const& a) {
  Permutation inv = a.perm.inverse();
  // a * (inv, u) = identity  =>  u = -cocycle(a, inv) - a.vec permuted by inv.
  LinkingVector u = -section_cocycle(a.perm, inv);
  u -= a.vec.permuted(inv);
  return CrystElement(std::move(inv), std::move(u));
}

CrystElement power(CrystElement const& a, long k) {
  CrystElement base = k < 0 ? inverse(a) : a;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  CrystElement result(a.strands());
  while (e > 0) {
    if (e & 1UL) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

CrystElement conjugate(CrystElement const& g, CrystElement const& a) {
  return multiply(multiply(g, a), inverse(g));
}

std::optional<int> element_order(CrystElement const& a) {
  int k = a.perm.order();
  CrystElement ak = power(a, k);
  if (!ak.perm.is_identity()) throw InternalError("power by the permutation order is not pure");
  // (id, u)^t = (id, t u), so a nonzero u means infinite order.
  if (!ak.vec.is_zero()) return std::nullopt;
  return k;
}

std::optional<CrystElement> torsion_search(int n, int k) {
  if (k < 2) throw std::invalid_argument("torsion_search needs k >= 2");
  std::size_t dim = pair_count(n);
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    Permutation pi(images);
    if (pi.order() != k) continue;

    // M = sum_{j<k} P^j, where P e_{ij} = e_{pi(i) pi(j)}.
    IntegerMatrix m(dim, dim);
    Permutation pj(n);
    for (int j = 0; j < k; ++j) {
      for (std::size_t c = 0; c < dim; ++c) {
        StrandPair p = pair_at(n, c);
        m(pair_index(n, StrandPair(pj(p.i), pj(p.j))), c) += 1;
      }
      pj = compose(pj, pi);
    }
    LinkingVector w0 = power(CrystElement(pi, LinkingVector(n)), k).vec;
    std::vector<mpz_class> rhs(dim);
    for (std::size_t c = 0; c < dim; ++c) rhs[c] = -static_cast<long>(w0[c]);
    auto solution = solve_integer(m, rhs);
    if (!solution) continue;

    LinkingVector v(n);
    for (std::size_t c = 0; c < dim; ++c) v[c] = (*solution)[c].get_si();
    CrystElement candidate(pi, v);
    if (element_order(candidate) != k) throw InternalError("torsion solution failed certification");
    return candidate;
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Power endomorphism

namespace {

void check_odd(int m) {
  if (m < 1 || m % 2 == 0) {
    throw std::invalid_argument("sigma_i -> sigma_i^m induces an endomorphism only for odd m >= 1; got m = " +
                                std::to_string(m));
  }
}

}  // namespace

CrystElement epsilon(int m, CrystElement const& a) {
  check_odd(m);
  int n = a.strands();
  // Normalizing the letterwise m-th power of the representative word, one
  // factor at a time.
  CrystElement result = normal_form(section_word(a.perm).letterwise_power(m));
  for (std::size_t k = 0; k < a.vec.size(); ++k) {
    if (a.vec[k] == 0) continue;
    StrandPair p = pair_at(n, k);
    CrystElement image = normal_form(pure_generator(n, p.i, p.j).letterwise_power(m));
    result = multiply(result, power(image, a.vec[k]));
  }
  return result;
}

bool epsilon_is_homomorphism(int n, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  auto gen = [&](int i) { return BraidWord::generator(n, i).power(m); };
  for (int i = 1; i + 1 < n; ++i) {
    if (normal_form(gen(i) * gen(i + 1) * gen(i)) != normal_form(gen(i + 1) * gen(i) * gen(i + 1))) return false;
  }
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (normal_form(gen(i) * gen(j)) != normal_form(gen(j) * gen(i))) return false;
    }
  }
  return true;
}

LinkingVector epsilon_offset(int m, CrystElement const& a) {
  CrystElement lifted = epsilon(m, CrystElement(a.perm, LinkingVector(a.strands())));
  return a.vec - lifted.vec;
}

bool image_membership(int m, CrystElement const& a) {
  LinkingVector offset = epsilon_offset(m, a);
  return std::all_of(offset.coords().begin(), offset.coords().end(), [m](std::int64_t c) { return c % m == 0; });
}

std::vector<std::int64_t> quotient_reduction(int m, CrystElement const& a) {
  LinkingVector offset = epsilon_offset(m, a);
  std::vector<std::int64_t> out(offset.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = ((offset[k] % m) + m) % m;
  return out;
}

std::optional<std::size_t> quotient_image_order(int n, int m, std::size_t cap) {
  check_odd(m);
  std::vector<std::vector<std::int64_t>> gens;
  for (int i = 1; i < n; ++i) gens.push_back(quotient_reduction(m, normal_form(BraidWord::generator(n, i))));
  for (auto const& p : all_pairs(n)) gens.push_back(quotient_reduction(m, normal_form(pure_generator(n, p.i, p.j))));

  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<std::int64_t>> frontier{std::vector<std::int64_t>(pair_count(n), 0)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (auto const& x : frontier) {
      for (auto const& g : gens) {
        std::vector<std::int64_t> y(x.size());
        for (std::size_t k = 0; k < y.size(); ++k) y[k] = (x[k] + g[k]) % m;
        if (seen.insert(y).second) {
          if (seen.size() > cap) return std::nullopt;
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

// ---------------------------------------------------------------------------

bool holonomy_faithful(int n, int samples, std::uint64_t seed) {
  auto moves_some_pair = [n](Permutation const& pi) {
    for (auto const& p : all_pairs(n)) {
      if (!(StrandPair(pi(p.i), pi(p.j)) == p)) return true;
    }
    return false;
  };
  if (n <= 6) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    do {
      Permutation pi(images);
      if (!pi.is_identity() && !moves_some_pair(pi)) return false;
    } while (std::next_permutation(images.begin(), images.end()));
    return true;
  }
  for (int i = 1; i < n; ++i) {
    if (!moves_some_pair(Permutation::transposition(n, i, i + 1))) return false;
  }
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    Permutation pi = random_permutation(n, rng);
    if (!pi.is_identity() && !moves_some_pair(pi)) return false;
  }
  return true;
}

}  // namespace braidcong
