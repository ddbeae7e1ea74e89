#include "braidcong/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "braidcong/burau.hpp"
#include "braidcong/cryst.hpp"

#ifndef BRAIDCONG_VERSION
#define BRAIDCONG_VERSION "unknown"
#endif

namespace braidcong {

std::string library_version() { return BRAIDCONG_VERSION; }

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass:
      return "pass";
    case ClaimStatus::fail:
      return "fail";
    case ClaimStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

namespace {

struct Context {
  SuiteConfig const& config;
  Rng rng;
  ClaimResult& out;

  void param(std::string key, std::string value) { out.params.emplace_back(std::move(key), std::move(value)); }
  void note(std::string const& text) {
    if (!out.note.empty()) out.note += "; ";
    out.note += text;
  }
};

struct Claim {
  std::string id;
  std::string statement;
  std::function<void(Context&)> run;
};

std::string join(std::vector<std::string> const& parts, std::string const& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

std::string ratio(std::size_t good, std::size_t total) { return std::to_string(good) + "/" + std::to_string(total); }

std::string vector_string(std::vector<std::int64_t> const& v) {
  std::vector<std::string> parts;
  for (auto x : v) parts.push_back(std::to_string(x));
  return "(" + join(parts, ",") + ")";
}

std::string element_string(CrystElement const& a) {
  return "[" + to_cycle_string(a.perm) + ", " + vector_string(a.vec.coords()) + "]";
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// |SL_2(Z/p)| = p (p^2 - 1) for p prime.
long sl2_order(long p) { return p * (p * p - 1); }

CrystElement random_element(int n, Rng& rng) { return normal_form(random_word(n, 20, rng)); }

// ---------------------------------------------------------------------------

void generator_powers(Context& c) {
  c.param("n", "3..8");
  c.param("m", "2..7");
  std::size_t total = 0, good = 0;
  for (int n = 3; n <= 8; ++n) {
    for (std::uint32_t m = 2; m <= 7; ++m) {
      for (int i = 1; i < n; ++i) {
        ++total;
        if (rho_mod(BraidWord::generator(n, i).power(m), m).is_identity()) {
          ++good;
        } else {
          c.note("sigma_" + std::to_string(i) + "^" + std::to_string(m) + " in B_" + std::to_string(n));
        }
      }
    }
  }
  c.out.computed = ratio(good, total) + " identity";
  c.out.expected = ratio(total, total) + " identity";
}

void full_twist_order(Context& c) {
  c.param("cases", "n odd: m=2..7; n in {4,6}: m=3..7");
  std::vector<std::string> computed, expected;
  auto record = [&](int n, std::uint32_t m, int want) {
    auto order = order_mod(rho_mod(full_twist(n), m), default_order_cap(n, m));
    std::string key = "n=" + std::to_string(n) + ",m=" + std::to_string(m) + ":";
    computed.push_back(key + (order ? std::to_string(*order) : std::string("over cap")));
    expected.push_back(key + std::to_string(want));
  };
  for (int n : {3, 5, 7}) {
    for (std::uint32_t m = 2; m <= 7; ++m) record(n, m, m == 2 ? 1 : 2);
  }
  for (int n : {4, 6}) {
    for (std::uint32_t m = 3; m <= 7; ++m) record(n, m, m % 2 == 1 ? static_cast<int>(m) : static_cast<int>(m / 2));
  }
  c.out.computed = join(computed, " ");
  c.out.expected = join(expected, " ");
}

void level_two_pure(Context& c) {
  c.param("n", "3..6");
  c.param("samples_per_n", "500");
  c.param("max_length", "40");
  std::size_t total = 0, good = 0;
  for (int n = 3; n <= 6; ++n) {
    for (int s = 0; s < 500; ++s) {
      BraidWord w = random_word(n, 40, c.rng);
      ++total;
      if (is_member(w, 2) == is_pure(w)) {
        ++good;
      } else if (c.out.note.empty()) {
        c.note("disagreement on [" + format_word(w) + "]");
      }
    }
  }
  c.out.computed = ratio(good, total) + " agree";
  c.out.expected = ratio(total, total) + " agree";
}

void pure_squares(Context& c) {
  c.param("n", "3..5");
  c.param("samples_per_n", "200");
  std::size_t total = 0, good = 0;
  for (int n = 3; n <= 5; ++n) {
    for (int s = 0; s < 200; ++s) {
      BraidWord p = random_pure_word(n, 20, c.rng);
      ++total;
      if (is_member(p * p, 4)) {
        ++good;
      } else if (c.out.note.empty()) {
        c.note("square of [" + format_word(p) + "] not in level 4");
      }
    }
  }
  c.out.computed = ratio(good, total) + " in B_n[4]";
  c.out.expected = ratio(total, total) + " in B_n[4]";
}

void torelli_chains(Context& c) {
  c.param("cases", "(3,2) (4,2) (5,2) (5,4) (6,4) (7,4)");
  std::vector<std::string> computed, expected;
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {5, 2}, {5, 4}, {6, 4}, {7, 4}}) {
    std::string key = "(" + std::to_string(n) + "," + std::to_string(k) + "):";
    computed.push_back(key + (rho(torelli_chain(n, k)).is_identity() ? "I" : "not I"));
    expected.push_back(key + "I");
  }
  c.out.computed = join(computed, " ");
  c.out.expected = join(expected, " ");
}

void image_orders(Context& c) {
  c.param("cases", "m=2: n=3..5; n=3: m=3,5");
  std::vector<std::string> computed, expected;
  auto record = [&](int n, std::uint32_t m, long want) {
    std::string key = "|rho_" + std::to_string(m) + "(B_" + std::to_string(n) + ")|=";
    computed.push_back(key + std::to_string(enumerate_image(n, m, c.config.element_cap).size()));
    expected.push_back(key + std::to_string(want));
  };
  for (int n = 3; n <= 5; ++n) record(n, 2, factorial(n));
  record(3, 3, sl2_order(3));
  record(3, 5, sl2_order(5));
  c.out.computed = join(computed, " ");
  c.out.expected = join(expected, " ");
}

std::string abelian_group_string(AbelianizationResult const& ab) {
  std::string out = "Z^" + std::to_string(ab.free_rank);
  for (auto const& d : ab.invariant_factors) out += " + Z/" + d.get_str();
  return out;
}

void abelianizations(Context& c) {
  c.param("cases", "(3,2) (3,3) (3,4)");
  AbelianizationOptions options{c.config.element_cap, c.config.max_index, false};
  std::vector<std::string> computed, expected;
  for (auto [m, rank] : std::vector<std::pair<std::uint32_t, int>>{{2, 3}, {3, 4}, {4, 6}}) {
    std::string key = "m=" + std::to_string(m) + ":";
    computed.push_back(key + abelian_group_string(abelianization(3, m, options)));
    expected.push_back(key + "Z^" + std::to_string(rank));
  }
  c.out.computed = join(computed, " ");
  c.out.expected = join(expected, " ");
}

void theta_kernel(Context& c) {
  c.param("n", "3");
  c.param("m", "2,3,4");
  AbelianizationOptions options{c.config.element_cap, c.config.max_index, true};
  std::vector<std::string> computed, expected;
  for (std::uint32_t m : {3u, 4u}) {
    auto ab = abelianization(3, m, options);
    auto act = theta_action(full_twist(3), ab);
    bool trivial = act.matrix == IntegerMatrix::identity(ab.free_rank);
    if (act.torsion_hit) c.note("torsion coordinates hit at m=" + std::to_string(m));
    computed.push_back("m=" + std::to_string(m) + " twist:" + (trivial ? "identity" : "nontrivial"));
    expected.push_back("m=" + std::to_string(m) + " twist:identity");
  }
  auto ab = abelianization(3, 2, options);
  std::size_t nontrivial = 0;
  for (std::size_t coset = 1; coset < ab.index; ++coset) {
    auto act = theta_action(ab.table->transversal(coset), ab);
    if (!(act.matrix == IntegerMatrix::identity(ab.free_rank))) ++nontrivial;
  }
  computed.push_back("m=2 nontrivial cosets:" + ratio(nontrivial, ab.index - 1));
  expected.push_back("m=2 nontrivial cosets:" + ratio(ab.index - 1, ab.index - 1));
  c.out.computed = join(computed, " ");
  c.out.expected = join(expected, " ");
}

void center_holonomy(Context& c) {
  c.param("n", "3");
  c.param("m", "3");
  ImageGroup g = enumerate_image(3, 3, c.config.element_cap);
  auto center = image_center(g);
  auto twist = g.find(rho_mod(full_twist(3), 3));
  bool twist_central = twist && *twist != 0 && std::find(center.begin(), center.end(), *twist) != center.end();
  c.out.computed = "|center|=" + std::to_string(center.size()) +
                   " twist:" + (twist_central ? "nontrivial central" : "not nontrivial central") +
                   " holonomy order=" + std::to_string(g.size() / center.size());
  c.out.expected = "|center|=2 twist:nontrivial central holonomy order=12";
}

void power_endomorphism(Context& c) {
  c.param("cases", "(3,3) (3,5) (4,3) (5,3)");
  c.param("additivity_pairs", "500 at (3,3)");
  std::vector<std::string> computed, expected;
  std::vector<std::pair<int, int>> cases{{3, 3}, {3, 5}, {4, 3}, {5, 3}};
  for (auto [n, m] : cases) {
    std::string key = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
    computed.push_back(key + " hom:" + (epsilon_is_homomorphism(n, m) ? "yes" : "no"));
    expected.push_back(key + " hom:yes");
  }
  std::size_t pairs_total = 0, pairs_good = 0;
  for (auto [n, m] : cases) {
    for (auto const& p : all_pairs(n)) {
      ++pairs_total;
      CrystElement a(Permutation(n), LinkingVector::unit(n, p));
      CrystElement want(Permutation(n), static_cast<std::int64_t>(m) * LinkingVector::unit(n, p));
      if (epsilon(m, a) == want) ++pairs_good;
    }
  }
  computed.push_back("eps(A_ij)=m*e_ij:" + ratio(pairs_good, pairs_total));
  expected.push_back("eps(A_ij)=m*e_ij:" + ratio(pairs_total, pairs_total));

  std::size_t additive = 0;
  for (int s = 0; s < 500; ++s) {
    CrystElement a = random_element(3, c.rng), b = random_element(3, c.rng);
    auto qa = quotient_reduction(3, a), qb = quotient_reduction(3, b), qab = quotient_reduction(3, multiply(a, b));
    bool ok = true;
    for (std::size_t k = 0; k < qab.size(); ++k) ok = ok && qab[k] == (qa[k] + qb[k]) % 3;
    if (ok) {
      ++additive;
    } else if (c.out.note.empty()) {
      c.note("q(ab) != q(a)+q(b) for a=" + element_string(a) + " b=" + element_string(b) + ": " + vector_string(qab) +
             " vs " + vector_string(qa) + "+" + vector_string(qb));
    }
  }
  computed.push_back("additive:" + ratio(additive, 500));
  expected.push_back("additive:500/500");

  auto order = quotient_image_order(3, 3);
  computed.push_back("image order (3,3):" + (order ? std::to_string(*order) : std::string("over cap")));
  expected.push_back("image order (3,3):27");
  c.out.computed = join(computed, " ");
  c.out.expected = join(expected, " ");
}

void co_hopfian(Context& c) {
  c.param("n", "3");
  c.param("m", "3");
  c.param("pairs", "1000");
  bool member = image_membership(3, normal_form(BraidWord::generator(3, 1)));
  std::size_t consistent = 0;
  for (int s = 0; s < 1000; ++s) {
    CrystElement a = random_element(3, c.rng), b = random_element(3, c.rng);
    if ((epsilon(3, a) == epsilon(3, b)) == (a == b)) {
      ++consistent;
    } else if (c.out.note.empty()) {
      c.note("epsilon collision " + element_string(a) + " " + element_string(b));
    }
  }
  c.out.computed = std::string("sigma_1 in image:") + (member ? "yes" : "no") + " injective:" + ratio(consistent, 1000);
  c.out.expected = "sigma_1 in image:no injective:1000/1000";
}

void normal_form_soundness(Context& c) {
  c.param("n", "2..6");
  c.param("product_pairs", "1000");
  c.param("commutator_pairs", "200");
  c.param("conjugation_samples", "500");
  std::size_t products = 0;
  for (int s = 0; s < 1000; ++s) {
    int n = 2 + s % 5;
    BraidWord u = random_word(n, 20, c.rng), v = random_word(n, 20, c.rng);
    if (normal_form(u * v) == multiply(normal_form(u), normal_form(v))) {
      ++products;
    } else if (c.out.note.empty()) {
      c.note("multiplicativity fails for [" + format_word(u) + "] [" + format_word(v) + "]");
    }
  }
  std::size_t commutators = 0;
  for (int s = 0; s < 200; ++s) {
    int n = 3 + s % 4;
    BraidWord p = random_pure_word(n, 15, c.rng), q = random_pure_word(n, 15, c.rng);
    if (normal_form(p * q * p.inverse() * q.inverse()).is_identity()) ++commutators;
  }
  std::size_t conjugations = 0;
  for (int s = 0; s < 500; ++s) {
    int n = 3 + s % 4;
    BraidWord alpha = random_word(n, 15, c.rng);
    StrandPair p = pair_at(n, std::uniform_int_distribution<std::size_t>(0, pair_count(n) - 1)(c.rng));
    Permutation pi = permutation(alpha.inverse());
    CrystElement want(Permutation(n), LinkingVector::unit(n, StrandPair(pi(p.i), pi(p.j))));
    if (normal_form(alpha * pure_generator(n, p.i, p.j) * alpha.inverse()) == want) ++conjugations;
  }
  c.out.computed = "products:" + ratio(products, 1000) + " commutators:" + ratio(commutators, 200) +
                   " conjugations:" + ratio(conjugations, 500);
  c.out.expected = "products:1000/1000 commutators:200/200 conjugations:500/500";
}

void transvection_model(Context& c) {
  c.param("cases", "(3,2) (3,3) (5,2) (5,3)");
  c.param("samples", "200");
  std::vector<std::string> computed, expected;
  for (auto [n, m] : std::vector<std::pair<int, std::uint32_t>>{{3, 2}, {3, 3}, {5, 2}, {5, 3}}) {
    auto check = check_transvection_model(n, m, 200, c.rng);
    std::string key = "(" + std::to_string(n) + "," + std::to_string(m) + "):";
    computed.push_back(key + (check.agree ? "agree" : "disagree"));
    expected.push_back(key + "agree");
    if (check.counterexample) c.note(key + " counterexample [" + format_word(*check.counterexample) + "]");
  }
  c.out.computed = join(computed, " ");
  c.out.expected = join(expected, " ");
}

std::vector<Claim> const& registry() {
  static std::vector<Claim> const claims{
      {"c01-generator-powers", "rho_m(sigma_i^m) is the identity mod m", generator_powers},
      {"c02-full-twist-order", "order of the full twist mod m is 2 for odd n and m or m/2 for even n", full_twist_order},
      {"c03-level-two-pure", "B_n[2] equals the pure braid group on sampled words", level_two_pure},
      {"c04-pure-squares", "squares of pure braids lie in B_n[4]", pure_squares},
      {"c05-torelli-chains", "chain braids lie in the kernel of the integral representation", torelli_chains},
      {"c06-image-orders", "orders of rho_m(B_n) match S_n and SL_2 order formulas", image_orders},
      {"c07-abelianization", "B_3[m] has free abelianization of rank 3, 4, 6 for m = 2, 3, 4", abelianizations},
      {"c08-theta-kernel", "the full twist acts trivially on H_1 of B_3[m] for m = 3, 4 while Theta_2 is faithful",
       theta_kernel},
      {"c09-center-holonomy", "rho_3(B_3) has center of order 2 generated by the full twist", center_holonomy},
      {"c10-power-endomorphism",
       "sigma_i -> sigma_i^m induces an endomorphism of B_n/[P_n,P_n] for odd m with quotient (Z/m)^N",
       power_endomorphism},
      {"c11-co-hopfian", "the power endomorphism is injective and not surjective", co_hopfian},
      {"c12-normal-form", "normal forms in B_n/[P_n,P_n] are multiplicative and equivariant", normal_form_soundness},
      {"c13-transvection-model", "the chain transvection model has the same level-m kernel as Burau at t = -1",
       transvection_model},
  };
  return claims;
}

bool matches(Claim const& claim, std::string const& filter) {
  if (filter == claim.id) return true;
  auto dash = claim.id.find('-');
  return filter == claim.id.substr(0, dash) || filter == claim.id.substr(dash + 1);
}

}  // namespace

std::vector<ClaimInfo> registered_claims() {
  std::vector<ClaimInfo> out;
  for (auto const& c : registry()) out.push_back({c.id, c.statement});
  return out;
}

VerificationReport run_suite(SuiteConfig const& config) {
  for (auto const& f : config.claims) {
    if (std::none_of(registry().begin(), registry().end(), [&](Claim const& c) { return matches(c, f); })) {
      throw std::invalid_argument("unknown claim '" + f + "'");
    }
  }
  VerificationReport report;
  report.version = library_version();
  report.seed = config.seed;
  for (std::size_t k = 0; k < registry().size(); ++k) {
    Claim const& claim = registry()[k];
    if (!config.claims.empty() &&
        std::none_of(config.claims.begin(), config.claims.end(), [&](auto const& f) { return matches(claim, f); })) {
      continue;
    }
    ClaimResult result;
    result.id = claim.id;
    result.statement = claim.statement;
    // Each claim draws from its own stream so filtering does not shift samples.
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(k)};
    Context ctx{config, Rng(seq), result};
    auto start = std::chrono::steady_clock::now();
    try {
      claim.run(ctx);
      result.status = result.computed == result.expected ? ClaimStatus::pass : ClaimStatus::fail;
    } catch (CapExceeded const& e) {
      result.status = ClaimStatus::skipped;
      result.computed.clear();
      result.note = std::string("cap exceeded: ") + e.what();
    }
    result.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.claims.push_back(std::move(result));
  }
  return report;
}

// ---------------------------------------------------------------------------

bool VerificationReport::ok() const { return count(ClaimStatus::fail) == 0; }

std::size_t VerificationReport::count(ClaimStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [s](ClaimResult const& c) { return c.status == s; }));
}

std::string VerificationReport::to_json(bool include_timing) const {
  using json = nlohmann::ordered_json;
  json doc;
  doc["suite"] = {{"version", version}, {"seed", seed}};
  json list = json::array();
  for (auto const& c : claims) {
    json params = json::object();
    for (auto const& [k, v] : c.params) params[k] = v;
    json entry = {{"id", c.id},
                  {"statement", c.statement},
                  {"params", params},
                  {"status", to_string(c.status)},
                  {"computed", c.computed},
                  {"expected", c.expected}};
    if (!c.note.empty()) entry["note"] = c.note;
    list.push_back(std::move(entry));
  }
  doc["claims"] = std::move(list);
  doc["summary"] = {{"pass", count(ClaimStatus::pass)},
                    {"fail", count(ClaimStatus::fail)},
                    {"skipped", count(ClaimStatus::skipped)}};
  if (include_timing) {
    json timing = json::object();
    double total = 0;
    for (auto const& c : claims) {
      timing[c.id] = c.runtime_ms;
      total += c.runtime_ms;
    }
    doc["timing"] = {{"total_ms", total}, {"claims_ms", timing}};
  }
  return doc.dump(2) + "\n";
}

std::string VerificationReport::to_table() const {
  std::size_t width = 5;
  for (auto const& c : claims) width = std::max(width, c.id.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "claim" << "  " << std::setw(8) << "status"
      << std::right << std::setw(10) << "ms" << "  computed\n";
  for (auto const& c : claims) {
    out << std::left << std::setw(static_cast<int>(width)) << c.id << "  " << std::setw(8) << to_string(c.status)
        << std::right << std::setw(10) << std::fixed << std::setprecision(1) << c.runtime_ms << "  " << c.computed
        << "\n";
    if (c.status == ClaimStatus::fail) out << std::string(width + 22, ' ') << "expected " << c.expected << "\n";
    if (!c.note.empty()) out << std::string(width + 22, ' ') << c.note << "\n";
  }
  out << "seed " << seed << ": " << count(ClaimStatus::pass) << " pass, " << count(ClaimStatus::fail) << " fail, "
      << count(ClaimStatus::skipped) << " skipped\n";
  return out.str();
}

}  // namespace braidcong
