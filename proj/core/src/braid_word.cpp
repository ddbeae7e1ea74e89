#include "braidcong/braid_word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace braidcong {

namespace {

void check_strands(int n) {
  if (n < 2) {
    throw std::invalid_argument("strand count must be at least 2, got " + std::to_string(n));
  }
}

void check_letter(int n, int letter) {
  if (letter == 0 || std::abs(letter) > n - 1) {
    throw std::invalid_argument("letter " + std::to_string(letter) + " out of range for B_" +
                                std::to_string(n));
  }
}

void check_pair(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n)) {
    throw std::invalid_argument("invalid strand pair (" + std::to_string(i) + ", " +
                                std::to_string(j) + ") for n = " + std::to_string(n));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// BraidWord

BraidWord::BraidWord(int n) : n_(n) { check_strands(n); }

BraidWord::BraidWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  check_strands(n);
  for (int l : letters_) check_letter(n_, l);
}

BraidWord BraidWord::generator(int n, int i, int sign) {
  return BraidWord(n, {sign < 0 ? -i : i});
}

BraidWord BraidWord::inverse() const {
  BraidWord out(n_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
  return out;
}

BraidWord BraidWord::power(long k) const {
  BraidWord base = k < 0 ? inverse() : *this;
  BraidWord out(n_);
  auto reps = static_cast<std::size_t>(k < 0 ? -k : k);
  out.letters_.reserve(base.letters_.size() * reps);
  for (std::size_t r = 0; r < reps; ++r) {
    out.letters_.insert(out.letters_.end(), base.letters_.begin(), base.letters_.end());
  }
  return out;
}

BraidWord BraidWord::freely_reduced() const {
  BraidWord out(n_);
  for (int l : letters_) {
    if (!out.letters_.empty() && out.letters_.back() == -l) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

BraidWord BraidWord::letterwise_power(int k) const {
  BraidWord out(n_);
  auto reps = static_cast<std::size_t>(std::abs(k));
  out.letters_.reserve(letters_.size() * reps);
  for (int l : letters_) {
    int letter = k < 0 ? -l : l;
    out.letters_.insert(out.letters_.end(), reps, letter);
  }
  return out;
}

BraidWord& BraidWord::operator*=(BraidWord const& rhs) {
  if (rhs.n_ != n_) {
    throw std::invalid_argument("cannot concatenate words on different strand counts");
  }
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

void BraidWord::push_back(int letter) {
  check_letter(n_, letter);
  letters_.push_back(letter);
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("images do not form a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p(n);
  std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
  }
  return Permutation(std::move(inv));
}

int Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  long result = 1;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    long len = 0;
    for (std::size_t k = start; !seen[k]; k = static_cast<std::size_t>(images_[k] - 1)) {
      seen[k] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return static_cast<int>(result);
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    for (std::size_t b = a + 1; b < images_.size(); ++b) {
      if (images_[a] > images_[b]) ++count;
    }
  }
  return count;
}

Permutation compose(Permutation const& a, Permutation const& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation sizes differ");
  std::vector<int> out(static_cast<std::size_t>(a.size()));
  for (int p = 1; p <= a.size(); ++p) out[static_cast<std::size_t>(p - 1)] = b(a(p));
  return Permutation(std::move(out));
}

std::string to_cycle_string(Permutation const& p) {
  std::string out;
  std::vector<bool> seen(static_cast<std::size_t>(p.size()) + 1, false);
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || p(start) == start) continue;
    out += '(';
    for (int k = start; !seen[static_cast<std::size_t>(k)]; k = p(k)) {
      seen[static_cast<std::size_t>(k)] = true;
      if (k != start) out += ' ';
      out += std::to_string(k);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------------------
// Strand pairs

StrandPair::StrandPair(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("strand pair needs two distinct strands");
}

std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2; }

std::size_t pair_index(int n, StrandPair p) {
  check_pair(n, p.i, p.j);
  // Pairs with first entry a < i contribute (n - a) each.
  auto i = static_cast<std::size_t>(p.i);
  auto nn = static_cast<std::size_t>(n);
  std::size_t before = (i - 1) * nn - (i - 1) * i / 2;
  return before + static_cast<std::size_t>(p.j - p.i - 1);
}

StrandPair pair_at(int n, std::size_t index) {
  for (int i = 1; i < n; ++i) {
    auto row = static_cast<std::size_t>(n - i);
    if (index < row) return StrandPair(i, i + 1 + static_cast<int>(index));
    index -= row;
  }
  throw std::out_of_range("pair index out of range");
}

std::vector<StrandPair> all_pairs(int n) {
  std::vector<StrandPair> out;
  out.reserve(pair_count(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

// ---------------------------------------------------------------------------
// LinkingVector

LinkingVector::LinkingVector(int n) : n_(n), coords_(pair_count(n), 0) {}

LinkingVector::LinkingVector(int n, std::vector<std::int64_t> coords) : n_(n), coords_(std::move(coords)) {
  if (coords_.size() != pair_count(n)) {
    throw std::invalid_argument("linking vector must have n(n-1)/2 coordinates");
  }
}

LinkingVector LinkingVector::unit(int n, StrandPair p) {
  LinkingVector v(n);
  v.coords_[pair_index(n, p)] = 1;
  return v;
}

bool LinkingVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

LinkingVector LinkingVector::permuted(Permutation const& pi) const {
  LinkingVector out(n_);
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k] == 0) continue;
    StrandPair p = pair_at(n_, k);
    out.coords_[pair_index(n_, StrandPair(pi(p.i), pi(p.j)))] += coords_[k];
  }
  return out;
}

LinkingVector& LinkingVector::operator+=(LinkingVector const& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("linking vectors on different strand counts");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += rhs.coords_[k];
  return *this;
}

LinkingVector& LinkingVector::operator-=(LinkingVector const& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("linking vectors on different strand counts");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= rhs.coords_[k];
  return *this;
}

LinkingVector& LinkingVector::operator*=(std::int64_t k) {
  for (auto& c : coords_) c *= k;
  return *this;
}

// ---------------------------------------------------------------------------
// Distinguished elements

Permutation permutation(BraidWord const& w) {
  // arrangement[pos] = label of the strand currently at pos
  int n = w.strands();
  std::vector<int> arrangement(static_cast<std::size_t>(n));
  std::iota(arrangement.begin(), arrangement.end(), 1);
  for (int l : w.letters()) {
    auto k = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(arrangement[k], arrangement[k + 1]);
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) {
    images[static_cast<std::size_t>(arrangement[static_cast<std::size_t>(pos)] - 1)] = pos + 1;
  }
  return Permutation(std::move(images));
}

bool is_pure(BraidWord const& w) { return permutation(w).is_identity(); }

BraidWord section_word(Permutation const& pi) {
  int n = pi.size();
  // Target arrangement: position q holds strand pi^{-1}(q). Sorting it back to
  // the identity and replaying the swaps in reverse builds it from scratch.
  std::vector<int> arrangement = pi.inverse().images();
  std::vector<int> swaps;
  for (int pass = n - 1; pass > 0; --pass) {
    for (int k = 0; k < pass; ++k) {
      auto uk = static_cast<std::size_t>(k);
      if (arrangement[uk] > arrangement[uk + 1]) {
        std::swap(arrangement[uk], arrangement[uk + 1]);
        swaps.push_back(k + 1);
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return BraidWord(n, std::move(swaps));
}

BraidWord pure_generator(int n, int i, int j) {
  check_pair(n, i, j);
  BraidWord conjugator(n);
  for (int k = j - 1; k > i; --k) conjugator.push_back(k);
  BraidWord square(n, {i, i});
  return conjugator * square * conjugator.inverse();
}

BraidWord full_twist(int n) {
  BraidWord cycle(n);
  for (int i = 1; i < n; ++i) cycle.push_back(i);
  return cycle.power(n);
}

BraidWord torelli_chain(int n, int k) {
  if (k < 2 || k >= n || k % 2 != 0) {
    throw std::invalid_argument("torelli_chain needs even k with 2 <= k < n, got k = " + std::to_string(k));
  }
  BraidWord chain(n);
  for (int i = 1; i <= k; ++i) chain.push_back(i);
  return chain.power(2 * k + 2);
}

LinkingVector linking_vector(BraidWord const& w) {
  int n = w.strands();
  std::vector<int> arrangement(static_cast<std::size_t>(n));
  std::iota(arrangement.begin(), arrangement.end(), 1);
  std::vector<std::int64_t> counters(pair_count(n), 0);
  for (int l : w.letters()) {
    auto k = static_cast<std::size_t>(std::abs(l) - 1);
    StrandPair p(arrangement[k], arrangement[k + 1]);
    counters[pair_index(n, p)] += l > 0 ? 1 : -1;
    std::swap(arrangement[k], arrangement[k + 1]);
  }
  for (int pos = 0; pos < n; ++pos) {
    if (arrangement[static_cast<std::size_t>(pos)] != pos + 1) {
      throw std::invalid_argument("linking_vector requires a pure braid word");
    }
  }
  for (auto& c : counters) {
    if (c % 2 != 0) throw InternalError("odd crossing count in a pure braid");
    c /= 2;
  }
  return LinkingVector(n, std::move(counters));
}

// ---------------------------------------------------------------------------
// Conjugation of pure generators

PureGeneratorWord conjugated_generator_class(int k, int sign, int i, int j, int n) {
  check_pair(n, i, j);
  if (k < 1 || k > n - 1 || (sign != 1 && sign != -1)) {
    throw std::invalid_argument("invalid conjugating letter");
  }
  using P = StrandPair;
  if (sign > 0) {
    // sigma_k A_ij sigma_k^{-1}
    if (k != i - 1 && k != i && k != j - 1 && k != j) return {{P(i, j), 1}};
    if (j == k) return {{P(i, j + 1), 1}};
    if (j == k + 1 && i < k) return {{P(i, j), -1}, {P(i, j - 1), 1}, {P(i, j), 1}};
    if (j == k + 1 && i == k) return {{P(i, j), 1}};
    if (i == k && k < j - 1) return {{P(i + 1, j), 1}};
    // i == k + 1
    return {{P(i, j), -1}, {P(i - 1, j), 1}, {P(i, j), 1}};
  }
  // sigma_k^{-1} A_ij sigma_k, obtained by inverting the table above.
  if (k != i - 1 && k != i && k != j - 1 && k != j) return {{P(i, j), 1}};
  if (j == k + 1 && i < k) return {{P(i, j - 1), 1}};
  if (j == k + 1 && i == k) return {{P(i, j), 1}};
  if (j == k) return {{P(i, j), 1}, {P(i, j + 1), 1}, {P(i, j), -1}};
  if (i == k + 1) return {{P(i - 1, j), 1}};
  // i == k < j - 1
  return {{P(i, j), 1}, {P(i + 1, j), 1}, {P(i, j), -1}};
}

BraidWord expand(int n, PureGeneratorWord const& factors) {
  BraidWord out(n);
  for (auto const& [p, e] : factors) out *= pure_generator(n, p.i, p.j).power(e);
  return out;
}

LinkingVector abelianize(int n, PureGeneratorWord const& factors) {
  LinkingVector v(n);
  for (auto const& [p, e] : factors) v[pair_index(n, p)] += e;
  return v;
}

// ---------------------------------------------------------------------------
// Text format

BraidWord parse_word(std::string_view text, int n) {
  check_strands(n);
  BraidWord w(n);
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t start = pos;
    while (pos < text.size() && !is_sep(text[pos])) ++pos;
    std::string_view token = text.substr(start, pos - start);
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    std::string where = "at offset " + std::to_string(start) + ": '" + std::string(token) + "'";
    if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty()) {
      throw std::invalid_argument("not an integer " + where);
    }
    if (value == 0) throw std::invalid_argument("generator index 0 " + where);
    if (std::abs(value) >= n) {
      throw std::invalid_argument("generator index out of range for n = " + std::to_string(n) + " " + where);
    }
    w.push_back(value);
  }
  return w;
}

std::string format_word(BraidWord const& w) {
  std::ostringstream os;
  bool first = true;
  for (int l : w.letters()) {
    if (!first) os << ' ';
    os << l;
    first = false;
  }
  return os.str();
}

}  // namespace braidcong
