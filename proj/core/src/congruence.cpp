#include "braidcong/congruence.hpp"

#include <cstdlib>
#include <deque>

#include "braidcong/burau.hpp"

namespace braidcong {

bool is_member(BraidWord const& w, std::uint32_t m) {
  if (m < 2) throw std::invalid_argument("level must be at least 2");
  return rho_mod(w, m).is_identity();
}

// ---------------------------------------------------------------------------
// Image enumeration

std::optional<std::size_t> ImageGroup::find(ModularMatrix const& g) const {
  auto it = index_.find(g.encode());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ImageGroup enumerate_image(int n, std::uint32_t m, std::size_t element_cap) {
  if (n < 2) throw std::invalid_argument("strand count must be at least 2");
  if (m < 2) throw std::invalid_argument("level must be at least 2");
  if (element_cap == 0) throw std::invalid_argument("element cap must be positive");

  ImageGroup g;
  g.n_ = n;
  g.m_ = m;
  for (int i = 1; i < n; ++i) {
    g.generators_.push_back(burau_generator_mod(n, i, +1, m));
    g.generators_.push_back(burau_generator_mod(n, i, -1, m));
  }
  std::size_t slots = g.generators_.size();

  auto identity = ModularMatrix::identity(static_cast<std::size_t>(n), m);
  g.index_.emplace(identity.encode(), 0);
  g.elements_.push_back(identity);

  for (std::size_t k = 0; k < g.elements_.size(); ++k) {
    for (std::size_t s = 0; s < slots; ++s) {
      ModularMatrix next = g.elements_[k] * g.generators_[s];
      auto [it, inserted] = g.index_.emplace(next.encode(), static_cast<std::uint32_t>(g.elements_.size()));
      if (inserted) {
        if (g.elements_.size() >= element_cap) {
          throw CapExceeded("image of B_" + std::to_string(n) + " mod " + std::to_string(m) + " exceeds " +
                                std::to_string(element_cap) + " elements",
                            g.elements_.size());
        }
        g.elements_.push_back(std::move(next));
      }
      g.edges_.push_back(it->second);
    }
  }
  return g;
}

std::vector<std::size_t> image_center(ImageGroup const& g) {
  std::vector<std::size_t> center;
  for (std::size_t k = 0; k < g.size(); ++k) {
    bool central = true;
    for (std::size_t s = 0; s < g.slots() && central; s += 2) {
      central = g.element(k) * g.generator(s) == g.generator(s) * g.element(k);
    }
    if (central) center.push_back(k);
  }
  return center;
}

// ---------------------------------------------------------------------------
// Coset table

CosetTable::CosetTable(ImageGroup group) : group_(std::move(group)) {
  std::size_t count = group_.size();
  int n = group_.strands();
  transversal_.assign(count, BraidWord(n));
  parent_.assign(count, 0);
  parent_letter_.assign(count, 0);
  std::vector<bool> seen(count, false);
  seen[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t c = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < group_.slots(); ++s) {
      std::size_t d = group_.edge(c, s);
      if (seen[d]) continue;
      seen[d] = true;
      parent_[d] = c;
      parent_letter_[d] = slot_letter(s);
      transversal_[d] = transversal_[c];
      transversal_[d].push_back(slot_letter(s));
      queue.push_back(d);
    }
  }
}

std::size_t CosetTable::act(std::size_t coset, BraidWord const& w) const {
  for (int l : w.letters()) coset = act(coset, l);
  return coset;
}

CosetTable coset_table(int n, std::uint32_t m, std::size_t element_cap) {
  return CosetTable(enumerate_image(n, m, element_cap));
}

// ---------------------------------------------------------------------------
// Reidemeister-Schreier

std::size_t schreier_generator_count(CosetTable const& table) {
  return table.size() * static_cast<std::size_t>(table.strands() - 1);
}

BraidWord schreier_generator_word(CosetTable const& table, std::size_t generator) {
  auto rank = static_cast<std::size_t>(table.strands() - 1);
  std::size_t c = generator / rank;
  int i = static_cast<int>(generator % rank) + 1;
  return table.transversal(c) * BraidWord::generator(table.strands(), i) *
         table.transversal(table.act(c, i)).inverse();
}

SchreierRewrite schreier_rewrite(CosetTable const& table, BraidWord const& w, std::size_t start_coset) {
  auto rank = static_cast<std::size_t>(table.strands() - 1);
  SchreierRewrite out;
  out.exponents.assign(schreier_generator_count(table), 0);
  std::size_t d = start_coset;
  for (int l : w.letters()) {
    auto i = static_cast<std::size_t>(std::abs(l) - 1);
    if (l > 0) {
      out.exponents[d * rank + i] += 1;
      d = table.act(d, l);
    } else {
      std::size_t e = table.act(d, l);
      out.exponents[e * rank + i] -= 1;
      d = e;
    }
  }
  out.end_coset = d;
  return out;
}

std::vector<BraidWord> artin_relators(int n) {
  std::vector<BraidWord> out;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (j == i + 1) {
        out.emplace_back(n, std::vector<int>{i, j, i, -j, -i, -j});
      } else {
        out.emplace_back(n, std::vector<int>{i, j, -i, -j});
      }
    }
  }
  return out;
}

IntegerMatrix relation_matrix(CosetTable const& table) {
  int n = table.strands();
  auto rank = static_cast<std::size_t>(n - 1);
  std::size_t gens = schreier_generator_count(table);
  auto relators = artin_relators(n);
  std::size_t rows = relators.size() * table.size() + (table.size() - 1);
  IntegerMatrix rel(rows, gens);
  std::size_t row = 0;
  for (auto const& r : relators) {
    for (std::size_t c = 0; c < table.size(); ++c) {
      BraidWord const& t = table.transversal(c);
      auto rw = schreier_rewrite(table, t * r * t.inverse(), 0);
      if (rw.end_coset != 0) throw InternalError("relator conjugate does not close up");
      for (std::size_t g = 0; g < gens; ++g)
        if (rw.exponents[g] != 0) rel(row, g) = static_cast<long>(rw.exponents[g]);
      ++row;
    }
  }
  for (std::size_t c = 1; c < table.size(); ++c) {
    int l = table.parent_letter(c);
    auto i = static_cast<std::size_t>(std::abs(l) - 1);
    std::size_t g = l > 0 ? table.parent(c) * rank + i : c * rank + i;
    rel(row++, g) = 1;
  }
  return rel;
}

AbelianizationResult abelianization(int n, std::uint32_t m, AbelianizationOptions const& options) {
  auto table = std::make_shared<CosetTable const>(coset_table(n, m, options.element_cap));
  if (table->size() > options.max_index) {
    throw CapExceeded("index " + std::to_string(table->size()) + " exceeds the abelianization limit of " +
                          std::to_string(options.max_index) + " cosets",
                      table->size());
  }
  IntegerMatrix rel = relation_matrix(*table);

  AbelianizationResult result;
  result.n = n;
  result.m = m;
  result.index = table->size();
  result.schreier_generators = rel.cols();
  result.relation_rows = rel.rows();

  SmithResult snf = smith_normal_form(std::move(rel), {.track_left = false, .track_right = options.keep_transforms});
  result.relation_rank = snf.rank();
  result.diagonal = snf.diagonal;
  for (auto const& d : snf.diagonal)
    if (d > 1) result.invariant_factors.push_back(d);
  result.free_rank = result.schreier_generators - snf.rank();
  result.right = std::move(snf.right);
  result.right_inverse = std::move(snf.right_inverse);
  result.table = std::move(table);
  return result;
}

std::vector<mpz_class> AbelianizationResult::coordinates(std::vector<std::int64_t> const& exponents) const {
  if (!right) throw std::logic_error("abelianization was computed without transforms");
  std::vector<mpz_class> x(exponents.size());
  for (std::size_t k = 0; k < exponents.size(); ++k) x[k] = static_cast<long>(exponents[k]);
  return right->left_multiply(x);
}

bool AbelianizationResult::is_trivial_class(std::vector<std::int64_t> const& exponents) const {
  auto y = coordinates(exponents);
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (k < relation_rank) {
      if (y[k] % diagonal[k] != 0) return false;
    } else if (y[k] != 0) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Conjugation action

ActionMatrix theta_action(BraidWord const& w, AbelianizationResult const& ab) {
  if (!ab.right || !ab.right_inverse || !ab.table) {
    throw std::logic_error("theta_action needs an abelianization computed with transforms");
  }
  CosetTable const& table = *ab.table;
  if (w.strands() != table.strands()) throw std::invalid_argument("word and abelianization disagree on n");
  std::size_t gens = ab.schreier_generators;

  // Row s: exponent vector of w^{-1} g_s w.
  std::vector<std::vector<std::int64_t>> conj(gens);
  BraidWord winv = w.inverse();
  for (std::size_t s = 0; s < gens; ++s) {
    auto rw = schreier_rewrite(table, winv * schreier_generator_word(table, s) * w, 0);
    if (rw.end_coset != 0) throw InternalError("conjugate of a Schreier generator left the subgroup");
    conj[s] = std::move(rw.exponents);
  }

  ActionMatrix out{w, IntegerMatrix(ab.free_rank, ab.free_rank), false};
  IntegerMatrix const& v = *ab.right;
  IntegerMatrix const& vinv = *ab.right_inverse;
  for (std::size_t f = 0; f < ab.free_rank; ++f) {
    std::size_t coord = ab.relation_rank + f;
    std::vector<mpz_class> image(gens);
    for (std::size_t s = 0; s < gens; ++s) {
      mpz_class const& xs = vinv(coord, s);
      if (sgn(xs) == 0) continue;
      for (std::size_t g = 0; g < gens; ++g)
        if (conj[s][g] != 0) image[g] += xs * static_cast<long>(conj[s][g]);
    }
    std::vector<mpz_class> y = v.left_multiply(image);
    for (std::size_t k = 0; k < ab.relation_rank; ++k) {
      if (ab.diagonal[k] > 1 && y[k] % ab.diagonal[k] != 0) out.torsion_hit = true;
    }
    for (std::size_t f2 = 0; f2 < ab.free_rank; ++f2) out.matrix(f, f2) = y[ab.relation_rank + f2];
  }
  return out;
}

bool divisibility_check(int n, std::uint32_t m, std::uint32_t k, int samples, Rng& rng) {
  if (m < 2 || k % m != 0) throw std::invalid_argument("divisibility_check needs m | k");
  for (int s = 0; s < samples; ++s) {
    BraidWord w = random_level_member(n, static_cast<int>(k), 1 + s % 3, 6, rng);
    if (!is_member(w, k)) throw InternalError("sampled word is not in B_n[k]");
    if (!is_member(w, m)) return false;
  }
  return true;
}

}  // namespace braidcong
