#include <CLI11.hpp>
#include <braidcong/burau.hpp>
#include <braidcong/congruence.hpp>
#include <braidcong/cryst.hpp>
#include <braidcong/verify.hpp>
#include <chrono>
#include <deque>
#include <fstream>
#include <iostream>
#include <json.hpp>

using namespace braidcong;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Globals {
  std::string json_path;
  std::uint64_t seed = kDefaultSeed;
  std::size_t cap = kDefaultElementCap;
};

void write_json(Globals const& g, json const& doc) {
  if (g.json_path.empty()) return;
  std::ofstream out(g.json_path);
  if (!out) throw std::runtime_error("cannot open " + g.json_path + " for writing");
  out << doc.dump(2) << "\n";
}

json element_json(CrystElement const& a) {
  return {{"permutation", a.perm.images()}, {"cycles", to_cycle_string(a.perm)}, {"vector", a.vec.coords()}};
}

std::string element_text(CrystElement const& a) {
  std::string v;
  for (std::size_t k = 0; k < a.vec.size(); ++k) v += (k ? " " : "") + std::to_string(a.vec[k]);
  return "perm " + to_cycle_string(a.perm) + "  vector (" + v + ")";
}

std::vector<std::string> pair_labels(int n) {
  std::vector<std::string> out;
  for (auto const& p : all_pairs(n)) out.push_back(std::to_string(p.i) + "," + std::to_string(p.j));
  return out;
}

json matrix_json(IntegerMatrix const& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(row);
  }
  return rows;
}

json matrix_json(ModularMatrix const& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

// Number of elements at each word length from the identity.
std::vector<std::size_t> sphere_sizes(ImageGroup const& g) {
  std::vector<int> depth(g.size(), -1);
  depth[0] = 0;
  std::deque<std::size_t> queue{0};
  std::vector<std::size_t> spheres{1};
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < g.slots(); ++s) {
      std::size_t next = g.edge(k, s);
      if (depth[next] >= 0) continue;
      depth[next] = depth[k] + 1;
      if (spheres.size() <= static_cast<std::size_t>(depth[next])) spheres.push_back(0);
      ++spheres[static_cast<std::size_t>(depth[next])];
      queue.push_back(next);
    }
  }
  return spheres;
}

void check_strands(int n, int minimum) {
  if (n < minimum) throw std::invalid_argument("--n must be at least " + std::to_string(minimum));
}

void check_level(int m) {
  if (m < 2 || m > 0xFFFF) throw std::invalid_argument("--m must lie in [2, 65535]");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with braid group congruence subgroups and crystallographic quotients"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", library_version());

  Globals g;
  app.add_option("--json", g.json_path, "Write a machine-readable report to PATH");
  app.add_option("--seed", g.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--cap", g.cap, "Maximum number of group elements to enumerate")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  int n = 0;
  int m = 0;
  std::string word_text;

  // burau
  auto* burau = app.add_subcommand("burau", "Integral Burau matrix at t = -1 of a word");
  burau->add_option("--n", n, "Strand count")->required();
  burau->add_option("--word", word_text, "Signed generator indices, e.g. \"1 2 -1\"")->required();
  burau->add_option("--mod", m, "Reduce modulo M");

  // member
  auto* member = app.add_subcommand("member", "Decide membership in the level-m congruence subgroup");
  member->add_option("--n", n, "Strand count")->required();
  member->add_option("--m", m, "Level")->required();
  member->add_option("--word", word_text, "Signed generator indices")->required();

  // image
  bool want_center = false, order_only = false;
  auto* image = app.add_subcommand("image", "Enumerate the finite group rho_m(B_n)");
  image->add_option("--n", n, "Strand count")->required();
  image->add_option("--m", m, "Level")->required();
  image->add_flag("--center", want_center, "Also compute the center and the holonomy order");
  image->add_flag("--order-only", order_only, "Print only the group order");

  // abelianization
  std::size_t max_index = kDefaultMaxIndex;
  auto* abel = app.add_subcommand("abelianization", "Abelianization of B_n[m] by Reidemeister-Schreier");
  abel->add_option("--n", n, "Strand count")->required();
  abel->add_option("--m", m, "Level")->required();
  abel->add_option("--max-index", max_index, "Largest index to attempt")->capture_default_str();

  // cryst
  auto* cryst = app.add_subcommand("cryst", "Computations in B_n/[P_n,P_n]");
  cryst->require_subcommand(1);
  auto* nf = cryst->add_subcommand("nf", "Normal form of a word");
  nf->add_option("--n", n, "Strand count")->required();
  nf->add_option("--word", word_text, "Signed generator indices")->required();
  auto* order = cryst->add_subcommand("order", "Order of the class of a word");
  order->add_option("--n", n, "Strand count")->required();
  order->add_option("--word", word_text, "Signed generator indices")->required();
  auto* eps = cryst->add_subcommand("epsilon", "Image under sigma_i -> sigma_i^m (m odd)");
  eps->add_option("--n", n, "Strand count")->required();
  eps->add_option("--m", m, "Odd exponent")->required();
  eps->add_option("--word", word_text, "Signed generator indices")->required();
  int torsion_k = 0;
  auto* torsion = cryst->add_subcommand("torsion", "Search for an element of order k");
  torsion->add_option("--n", n, "Strand count")->required();
  torsion->add_option("--k", torsion_k, "Order")->required();
  int samples = 500;
  auto* qcheck = cryst->add_subcommand("quotient-check", "Check the reduction to (Z/m)^{n(n-1)/2} on samples");
  qcheck->add_option("--n", n, "Strand count")->required();
  qcheck->add_option("--m", m, "Odd exponent")->required();
  qcheck->add_option("--samples", samples, "Random pairs")->capture_default_str()->check(CLI::PositiveNumber);

  // verify
  SuiteConfig suite;
  bool list_claims = false;
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  app.set_config("--config", "", "Key-value config file; command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  verify->add_option("--claims", suite.claims, "Claim ids to run (default: all)");
  verify->add_option("--max-index", suite.max_index, "Largest coset index for abelianizations")
      ->capture_default_str();
  verify->add_flag("--list", list_claims, "List the registered claims and exit");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (burau->parsed()) {
      check_strands(n, 2);
      BraidWord w = parse_word(word_text, n);
      json doc{{"n", n}, {"word", format_word(w)}};
      if (m != 0) {
        check_level(m);
        ModularMatrix r = rho_mod(w, static_cast<std::uint32_t>(m));
        std::cout << r.pretty();
        doc["modulus"] = m;
        doc["matrix"] = matrix_json(r);
      } else {
        IntegerMatrix r = rho(w);
        std::cout << r.pretty();
        doc["matrix"] = matrix_json(r);
      }
      write_json(g, doc);
      return 0;
    }

    if (member->parsed()) {
      check_strands(n, 2);
      check_level(m);
      BraidWord w = parse_word(word_text, n);
      bool in = is_member(w, static_cast<std::uint32_t>(m));
      std::cout << (in ? "member" : "not a member") << " of B_" << n << "[" << m << "]\n";
      write_json(g, {{"n", n}, {"m", m}, {"word", format_word(w)}, {"member", in}});
      return 0;
    }

    if (image->parsed()) {
      check_strands(n, 2);
      check_level(m);
      auto start = std::chrono::steady_clock::now();
      ImageGroup group = enumerate_image(n, static_cast<std::uint32_t>(m), g.cap);
      json doc{{"n", n}, {"m", m}, {"order", group.size()}};
      if (order_only) {
        std::cout << group.size() << "\n";
      } else {
        auto spheres = sphere_sizes(group);
        std::cout << "|rho_" << m << "(B_" << n << ")| = " << group.size() << "\n";
        std::cout << "diameter " << spheres.size() - 1 << ", sphere sizes";
        for (auto s : spheres) std::cout << " " << s;
        std::cout << "\n";
        doc["sphere_sizes"] = spheres;
      }
      if (want_center) {
        auto center = image_center(group);
        auto twist = group.find(rho_mod(full_twist(n), static_cast<std::uint32_t>(m)));
        bool twist_central = twist && std::find(center.begin(), center.end(), *twist) != center.end();
        std::size_t holonomy = group.size() / center.size();
        if (!order_only) {
          std::cout << "|center| = " << center.size() << ", full twist " << (twist_central ? "central" : "not central")
                    << (twist && *twist == 0 ? " (identity)" : "") << "\n";
          std::cout << "holonomy order |image|/|center| = " << holonomy << "\n";
        }
        doc["center_order"] = center.size();
        doc["full_twist_index"] = twist ? json(*twist) : json(nullptr);
        doc["holonomy_order"] = holonomy;
      }
      doc["runtime_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      write_json(g, doc);
      return 0;
    }

    if (abel->parsed()) {
      check_strands(n, 2);
      check_level(m);
      auto start = std::chrono::steady_clock::now();
      auto ab = abelianization(n, static_cast<std::uint32_t>(m), {g.cap, max_index, false});
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      json factors = json::array();
      std::cout << "B_" << n << "[" << m << "]^ab = Z^" << ab.free_rank;
      for (auto const& d : ab.invariant_factors) {
        std::cout << " + Z/" << d.get_str();
        factors.push_back(d.get_str());
      }
      std::cout << "\nindex " << ab.index << ", " << ab.schreier_generators << " Schreier generators, "
                << ab.relation_rows << " relations\n";
      write_json(g, {{"n", n},
                     {"m", m},
                     {"index", ab.index},
                     {"schreier_generators", ab.schreier_generators},
                     {"invariant_factors", factors},
                     {"free_rank", ab.free_rank},
                     {"runtime_ms", ms}});
      return 0;
    }

    if (nf->parsed()) {
      check_strands(n, 2);
      BraidWord w = parse_word(word_text, n);
      CrystElement a = normal_form(w);
      std::cout << element_text(a) << "\n";
      json doc = element_json(a);
      doc["pairs"] = pair_labels(n);
      write_json(g, {{"n", n}, {"word", format_word(w)}, {"normal_form", doc}});
      return 0;
    }

    if (order->parsed()) {
      check_strands(n, 2);
      BraidWord w = parse_word(word_text, n);
      auto k = element_order(normal_form(w));
      std::cout << (k ? std::to_string(*k) : std::string("infinite")) << "\n";
      write_json(g, {{"n", n}, {"word", format_word(w)}, {"order", k ? json(*k) : json("infinite")}});
      return 0;
    }

    if (eps->parsed()) {
      check_strands(n, 2);
      BraidWord w = parse_word(word_text, n);
      CrystElement image_element = epsilon(m, normal_form(w));
      std::cout << element_text(image_element) << "\n";
      write_json(g, {{"n", n}, {"m", m}, {"word", format_word(w)}, {"epsilon", element_json(image_element)}});
      return 0;
    }

    if (torsion->parsed()) {
      check_strands(n, 2);
      auto found = torsion_search(n, torsion_k);
      if (found) {
        std::cout << "order " << torsion_k << ": " << element_text(*found) << "\n";
      } else {
        std::cout << "none found\n";
      }
      write_json(g, {{"n", n}, {"k", torsion_k}, {"element", found ? element_json(*found) : json(nullptr)}});
      return 0;
    }

    if (qcheck->parsed()) {
      check_strands(n, 3);
      Rng rng(g.seed);
      auto random_element = [&] { return normal_form(random_word(n, 20, rng)); };
      int kernel = 0, additive = 0;
      json first_failure = nullptr;
      for (int s = 0; s < samples; ++s) {
        CrystElement a = random_element(), b = random_element();
        auto zero = quotient_reduction(m, epsilon(m, a));
        if (std::all_of(zero.begin(), zero.end(), [](auto x) { return x == 0; })) ++kernel;
        auto qa = quotient_reduction(m, a), qb = quotient_reduction(m, b), qab = quotient_reduction(m, multiply(a, b));
        bool ok = true;
        for (std::size_t k = 0; k < qab.size(); ++k) ok = ok && qab[k] == (qa[k] + qb[k]) % m;
        if (ok) {
          ++additive;
        } else if (first_failure.is_null()) {
          first_failure = {{"a", element_json(a)}, {"b", element_json(b)}, {"q_a", qa}, {"q_b", qb}, {"q_ab", qab}};
        }
      }
      auto image_order = quotient_image_order(n, m, g.cap);
      std::size_t expected_order = 1;
      for (std::size_t k = 0; k < pair_count(n); ++k) expected_order *= static_cast<std::size_t>(m);
      bool sigma_member = image_membership(m, normal_form(BraidWord::generator(n, 1)));

      std::cout << "kernel contains epsilon image: " << kernel << "/" << samples << "\n";
      std::cout << "additive on pairs:             " << additive << "/" << samples << "\n";
      std::cout << "image order:                   "
                << (image_order ? std::to_string(*image_order) : std::string("over cap")) << " (m^N = "
                << expected_order << ")\n";
      std::cout << "sigma_1 class in epsilon image: " << (sigma_member ? "yes" : "no") << "\n";
      bool pass = kernel == samples && additive == samples && image_order == expected_order;
      json doc{{"n", n},
               {"m", m},
               {"seed", g.seed},
               {"samples", samples},
               {"kernel", kernel},
               {"additive", additive},
               {"image_order", image_order ? json(*image_order) : json(nullptr)},
               {"expected_image_order", expected_order},
               {"sigma1_in_image", sigma_member},
               {"pass", pass}};
      if (!first_failure.is_null()) doc["first_additivity_failure"] = first_failure;
      write_json(g, doc);
      return pass ? 0 : kExitFailure;
    }

    if (verify->parsed()) {
      if (list_claims) {
        for (auto const& c : registered_claims()) std::cout << c.id << "  " << c.statement << "\n";
        return 0;
      }
      suite.seed = g.seed;
      suite.element_cap = g.cap;
      VerificationReport report = run_suite(suite);
      std::cout << report.to_table();
      if (!g.json_path.empty()) {
        std::ofstream out(g.json_path);
        if (!out) throw std::runtime_error("cannot open " + g.json_path + " for writing");
        out << report.to_json();
      }
      return report.ok() ? 0 : kExitFailure;
    }
  } catch (CapExceeded const& e) {
    std::cerr << "error: " << e.what() << " (partial size " << e.partial() << "); raise --cap to continue\n";
    return kExitUsage;
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
