#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

#include "divpow/divpow.hpp"
#include "parse.hpp"

namespace divpow::cli {

using nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

ordered_json gamma_json(const GammaElem& u) {
  ordered_json terms = ordered_json::array();
  for (const auto& [b, c] : u.terms()) {
    ordered_json parts = ordered_json::array();
    for (const auto& [w, mult] : b.parts()) parts.push_back({{"word", to_string(w)}, {"multiplicity", mult}});
    terms.push_back({{"coefficient", c.get_str()}, {"parts", parts}});
  }
  return {{"n", u.n()}, {"terms", terms}, {"text", to_string(u)}};
}

ordered_json genpoly_json(const GenPoly& g) {
  ordered_json terms = ordered_json::array();
  for (const auto& [seq, c] : g.terms()) {
    ordered_json symbols = ordered_json::array();
    for (const auto& s : seq) symbols.push_back({{"i", s.i}, {"word", to_string(s.mu)}});
    terms.push_back({{"coefficient", c.get_str()}, {"symbols", symbols}});
  }
  return {{"n", g.n()}, {"terms", terms}, {"text", to_string(g)}};
}

ordered_json poly_json(const MultiPoly& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [mono, c] : p.terms()) {
    ordered_json factors = ordered_json::array();
    for (const auto& [v, e] : mono.factors()) factors.push_back({{"var", to_string(v)}, {"exp", e}});
    terms.push_back({{"coefficient", c.get_str()}, {"monomial", factors}});
  }
  return {{"terms", terms}, {"text", to_string(p)}};
}

struct Outcome {
  std::size_t checked = 0;
  std::size_t failures = 0;
};

Outcome oracle_pairs(std::uint32_t n, std::uint32_t m, std::uint32_t max_degree, std::uint32_t random_pairs,
                     std::uint64_t seed) {
  Outcome o;
  const auto basis = basis_elements(n, m, max_degree);
  std::vector<SymTensor> embedded;
  embedded.reserve(basis.size());
  for (const auto& b : basis) embedded.push_back(embed(b));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      ++o.checked;
      if (embed(star(basis[i], basis[j])) != ts_mul(embedded[i], embedded[j])) ++o.failures;
    }
  std::mt19937_64 rng(seed);
  for (std::uint32_t r = 0; r < random_pairs; ++r) {
    const GammaElem u = random_gamma_elem(rng, n, m, max_degree);
    const GammaElem v = random_gamma_elem(rng, n, m, max_degree);
    ++o.checked;
    if (embed(star(u, v)) != ts_mul(embed(u), embed(v))) ++o.failures;
  }
  return o;
}

Outcome norm_homomorphism_pairs(std::uint32_t n, std::uint32_t m, std::uint32_t max_degree) {
  Outcome o;
  const GenericMatrixContext ctx(n, m);
  const auto basis = basis_elements(n, m, max_degree);
  std::map<GammaBasisElem, MultiPoly> cache;
  auto norm_of = [&](const GammaBasisElem& b) -> const MultiPoly& {
    auto it = cache.find(b);
    if (it == cache.end()) it = cache.emplace(b, norm_basis(ctx, b).poly).first;
    return it->second;
  };
  for (const auto& a : basis)
    for (const auto& b : basis) {
      ++o.checked;
      MultiPoly lhs;
      const GammaElem ab = star(a, b);
      for (const auto& [t, c] : ab.terms()) lhs += norm_of(t) * c;
      if (lhs != norm_of(a) * norm_of(b)) ++o.failures;
    }
  return o;
}

Outcome decomposition_round_trip(std::uint32_t n, std::uint32_t m, std::uint32_t max_degree) {
  Outcome o;
  for (const auto& b : basis_elements(n, m, max_degree)) {
    ++o.checked;
    const GenPoly g = reduce_powers(decompose(b));
    if (expand(g) != GammaElem(b) || !all_primitive(g)) ++o.failures;
  }
  return o;
}

void report(std::ostream& out, const std::string& label, const Outcome& o) {
  out << (o.failures == 0 ? "PASS " : "FAIL ") << label << ": " << o.checked << " checks, " << o.failures
      << " failures\n";
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Rat json_rat(const ordered_json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(j.dump(), 10));
  throw Error("matrix and vector entries must be integers or \"p/q\" strings");
}

}  // namespace

Triple parse_triple_json(const std::string& text, bool& has_vector) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("m") || !doc.contains("matrices"))
    throw Error("expected a JSON object with keys n, m, matrices");
  const auto n = doc.at("n").get<std::int64_t>();
  const auto m = doc.at("m").get<std::int64_t>();
  if (n < 1 || m < 1) throw Error("n and m must be positive");
  const auto& mats = doc.at("matrices");
  if (!mats.is_array() || mats.size() != static_cast<std::size_t>(m))
    throw Error("matrices must be an array of m=" + std::to_string(m) + " matrices");
  std::vector<RatMatrix> xs;
  for (const auto& jm : mats) {
    if (!jm.is_array() || jm.size() != static_cast<std::size_t>(n)) throw Error("each matrix must have n rows");
    RatMatrix x(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < jm.size(); ++i) {
      if (!jm[i].is_array() || jm[i].size() != static_cast<std::size_t>(n)) throw Error("each matrix row must have n entries");
      for (std::size_t j = 0; j < jm[i].size(); ++j) x(i, j) = json_rat(jm[i][j]);
    }
    xs.push_back(std::move(x));
  }
  Triple t{RepPoint(static_cast<std::uint32_t>(n), std::move(xs)), {}};
  has_vector = doc.contains("v") && !doc.at("v").is_null();
  if (has_vector) {
    const auto& jv = doc.at("v");
    if (!jv.is_array() || jv.size() != static_cast<std::size_t>(n)) throw Error("v must have n entries");
    for (const auto& e : jv) t.v.push_back(json_rat(e));
  } else {
    t.v.assign(static_cast<std::size_t>(n), Rat(0));
  }
  return t;
}

std::string hc_to_json(const HCPoint& point, const Triple& t, bool has_vector) {
  ordered_json coords = ordered_json::array();
  for (const auto& [key, value] : point.coords)
    coords.push_back({{"degree", key.first.degree()}, {"necklace", to_string(key.first)}, {"i", key.second},
                      {"value", to_string(value)}});
  ordered_json doc = {{"n", t.rep.n()}, {"m", t.rep.m()}, {"max_degree", point.max_degree}};
  if (has_vector) doc["cyclic"] = is_cyclic(t);
  doc["coordinates"] = coords;
  return doc.dump(2);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the divided powers algebra of a free algebra", "divpow"};
  app.require_subcommand(1);

  std::uint32_t n = 2, m = 2, max_degree = 2, trials = 20, random_pairs = 0;
  std::uint32_t h = 1, k = 1;
  std::uint32_t power_sum_r = 0, elementary_i = 0;
  std::uint64_t seed = kDefaultSeed;
  bool json = false, reduce = false, abelian = false;
  std::string first, second, input_path = "-";
  std::optional<std::uint32_t> hc_degree;

  auto add_nm = [&](CLI::App* sub) {
    sub->add_option("--n", n, "Divided-power degree n")->check(CLI::Range(1u, 64u))->capture_default_str();
    sub->add_option("--m", m, "Number of letters m")->check(CLI::Range(1u, 64u))->capture_default_str();
  };

  auto* mul = app.add_subcommand("mul", "Star product of two elements");
  add_nm(mul);
  mul->add_option("lhs", first, "Left factor")->required();
  mul->add_option("rhs", second, "Right factor")->required();
  mul->add_flag("--json", json, "Emit JSON");

  auto* power = app.add_subcommand("power", "n-th divided power of a free-algebra element");
  add_nm(power);
  power->add_option("element", first, "Element such as \"x1 + 2*x2.x1\"")->required();
  power->add_flag("--json", json, "Emit JSON");

  auto* dec = app.add_subcommand("decompose", "Rewrite an element in the generators E(i,mu)");
  add_nm(dec);
  dec->add_option("element", first, "Element in the D(...) grammar")->required();
  dec->add_flag("--reduce", reduce, "Reduce generator words to primitive words");
  dec->add_flag("--abelianize", abelian, "Pass to cyclic representatives, commutative order");
  dec->add_flag("--json", json, "Emit JSON");

  auto* nrm = app.add_subcommand("norm", "Image of an element under the norm map, as a polynomial in xi(k,i,j)");
  add_nm(nrm);
  nrm->add_option("element", first, "Element in the D(...) grammar")->required();
  nrm->add_flag("--json", json, "Emit JSON");

  auto* oracle = app.add_subcommand("oracle-check", "Compare the star product with the symmetric-tensor model");
  add_nm(oracle);
  oracle->add_option("--max-degree", max_degree, "Largest word degree")->check(CLI::Range(1u, 8u))->capture_default_str();
  oracle->add_option("--random", random_pairs, "Additional random pairs")->capture_default_str();
  oracle->add_option("--seed", seed, "Random seed")->capture_default_str();

  auto* sym = app.add_subcommand("symfun", "P_{h,k} = e_h . p_k (or p_r, e_i) in the elementary basis");
  sym->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  sym->add_option("--n", n, "Number of variables")->check(CLI::Range(1u, 12u))->capture_default_str();
  sym->add_option("--h", h, "h in P_{h,k}")->capture_default_str();
  sym->add_option("--k", k, "k in P_{h,k}")->capture_default_str();
  auto* ps_opt = sym->add_option("--power-sum", power_sum_r, "Print p_r instead");
  auto* el_opt = sym->add_option("--elementary", elementary_i, "Print e_i instead");
  ps_opt->excludes(el_opt);
  sym->add_flag("--json", json, "Emit JSON");

  auto* neck = app.add_subcommand("necklaces", "Primitive necklaces up to a degree");
  neck->add_option("--m", m, "Number of letters m")->check(CLI::Range(1u, 64u))->capture_default_str();
  neck->add_option("--max-degree", max_degree, "Largest degree")->check(CLI::Range(1u, 16u))->capture_default_str();
  neck->add_flag("--json", json, "Emit JSON");

  auto* hc = app.add_subcommand("hc", "Hilbert-Chow coordinates of a representation or triple (JSON in, JSON out)");
  hc->add_option("input", input_path, "JSON file, or - for stdin")->capture_default_str();
  hc->add_option("--max-degree", hc_degree, "Necklace degree cutoff (default n^2)")->check(CLI::Range(1u, 16u));

  auto* inv = app.add_subcommand("invariance-check", "Test conjugation invariance of the norm of an element");
  add_nm(inv);
  inv->add_option("element", first, "Element in the D(...) grammar")->required();
  inv->add_option("--trials", trials, "Number of random specializations")->capture_default_str();
  inv->add_option("--seed", seed, "Random seed")->capture_default_str();

  auto* self = app.add_subcommand("selftest", "Oracle, homomorphism and round-trip suites for n <= 2");

  std::vector<const char*> argv{"divpow"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "divpow: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (mul->parsed()) {
      const GammaElem lhs = parse_element(first, n, m);
      const GammaElem r = star(lhs, parse_element(second, n, m));
      out << (json ? gamma_json(r).dump(2) : to_string(r)) << "\n";
    } else if (power->parsed()) {
      const GammaElem r = gamma_power(parse_free(first, m), n);
      out << (json ? gamma_json(r).dump(2) : to_string(r)) << "\n";
    } else if (dec->parsed()) {
      GenPoly g = decompose(parse_element(first, n, m));
      if (reduce) g = reduce_powers(g);
      if (abelian) g = abelianize(g);
      out << (json ? genpoly_json(g).dump(2) : to_string(g)) << "\n";
    } else if (nrm->parsed()) {
      const GenericMatrixContext ctx(n, m);
      const InvariantPoly p = norm(ctx, parse_element(first, n, m));
      out << (json ? poly_json(p.poly).dump(2) : to_string(p.poly)) << "\n";
    } else if (oracle->parsed()) {
      report(out, "oracle n=" + std::to_string(n) + " m=" + std::to_string(m) + " max-degree=" + std::to_string(max_degree),
             oracle_pairs(n, m, max_degree, random_pairs, seed));
    } else if (sym->parsed()) {
      EPoly e;
      if (*ps_opt) {
        e = express_in_elementary(power_sum(power_sum_r, n));
      } else if (*el_opt) {
        e = express_in_elementary(elementary(elementary_i, n));
      } else {
        e = P_hk(h, k, n);
      }
      out << (json ? poly_json(e.poly).dump(2) : to_string(e.poly)) << "\n";
    } else if (neck->parsed()) {
      const auto necklaces = necklaces_up_to(m, max_degree);
      if (json) {
        ordered_json arr = ordered_json::array();
        for (const auto& nk : necklaces) arr.push_back(to_string(nk.word));
        out << arr.dump() << "\n";
      } else {
        for (const auto& nk : necklaces) out << to_string(nk.word) << "\n";
      }
    } else if (hc->parsed()) {
      std::string text;
      if (input_path == "-") {
        text = read_all(in);
      } else {
        std::ifstream file(input_path);
        if (!file) throw Error("cannot open " + input_path);
        text = read_all(file);
      }
      bool has_vector = false;
      const Triple t = parse_triple_json(text, has_vector);
      const std::uint32_t cutoff = hc_degree.value_or(t.rep.n() * t.rep.n());
      out << hc_to_json(hc_eval(t.rep, cutoff), t, has_vector) << "\n";
    } else if (inv->parsed()) {
      const GenericMatrixContext ctx(n, m);
      const InvariantPoly p = norm(ctx, parse_element(first, n, m));
      const bool ok = check_conj_invariance(ctx, p.poly, trials, seed);
      out << (ok ? "invariant" : "NOT invariant") << " (" << trials << " trials, seed " << seed << ")\n";
      return ok ? kOk : kDomainError;
    } else if (self->parsed()) {
      bool ok = true;
      for (std::uint32_t deg_n = 1; deg_n <= 2; ++deg_n) {
        const std::string tag = " n=" + std::to_string(deg_n) + " m=2 max-degree=2";
        const Outcome o1 = oracle_pairs(deg_n, 2, 2, 50, kDefaultSeed);
        const Outcome o2 = norm_homomorphism_pairs(deg_n, 2, 2);
        const Outcome o3 = decomposition_round_trip(deg_n, 2, 2);
        report(out, "oracle" + tag, o1);
        report(out, "norm-homomorphism" + tag, o2);
        report(out, "decomposition" + tag, o3);
        ok = ok && o1.failures == 0 && o2.failures == 0 && o3.failures == 0;
      }
      return ok ? kOk : kDomainError;
    }
  } catch (const Error& e) {
    err << "divpow: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace divpow::cli
