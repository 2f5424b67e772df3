#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zpalg/difflie/cycles.hpp"
#include "zpalg/difflie/homology.hpp"
#include "zpalg/difflie/weights.hpp"
#include "zpalg/errors.hpp"
#include "zpalg/freelie/hall.hpp"
#include "zpalg/freelie/lie.hpp"
#include "zpalg/growth/growth.hpp"
#include "zpalg/io.hpp"
#include "zpalg/moore/moore.hpp"
#include "zpalg/selfcheck.hpp"

using namespace zpalg;
using io::json;
using zpmod::RingSpec;

namespace {

// Basic products listed by `hall` before --unsafe-limits is needed.
constexpr std::int64_t kHallListLimit = 1 << 18;

struct Output {
  std::string format = "json";
  bool unsafe = false;

  void emit(const json& j, const std::function<std::string()>& csv) const {
    if (format == "csv")
      std::cout << csv();
    else
      std::cout << j.dump(2) << '\n';
  }
};

std::string csv_join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + fields[i];
  return out + '\n';
}

// Bracket strings contain commas; CSV fields use spaces instead.
std::string csv_safe(std::string s) {
  for (char& c : s)
    if (c == ',') c = ' ';
  return s;
}

freelie::GeneratorSet numbered_generators(RingSpec ring, const std::vector<int>& degrees) {
  std::vector<freelie::Generator> gens;
  for (std::size_t i = 0; i < degrees.size(); ++i) gens.push_back({"x" + std::to_string(i + 1), degrees[i]});
  return freelie::GeneratorSet(ring, std::move(gens));
}

moore::MooreWedge wedge_of(const std::vector<int>& dims, std::int64_t p, int r) {
  moore::MooreWedge w;
  for (int d : dims) {
    const moore::MooreSummand s{d, p, r};
    s.validate();
    w.add(s);
  }
  return w;
}

void add_witt(CLI::App& app, const Output& out) {
  auto* cmd = app.add_subcommand("witt", "Witt numbers W_n(k) for k = 1..max-k");
  auto n = std::make_shared<std::int64_t>(2);
  auto max_k = std::make_shared<int>(10);
  cmd->add_option("--n", *n, "number of generators")->capture_default_str();
  cmd->add_option("--max-k", *max_k, "largest weight")->capture_default_str();
  cmd->callback([=, &out] {
    if (*max_k < 1) throw InvalidInput("--max-k must be at least 1");
    json rows = json::array();
    std::string csv = csv_join({"k", "witt"});
    for (int k = 1; k <= *max_k; ++k) {
      const BigInt w = freelie::witt(*n, k);
      rows.push_back({{"k", k}, {"witt", io::big(w)}});
      csv += csv_join({std::to_string(k), to_string(w)});
    }
    out.emit({{"n", *n}, {"rows", rows}}, [&] { return csv; });
  });
}

void add_hall(CLI::App& app, const Output& out) {
  auto* cmd = app.add_subcommand("hall", "Hall basic products by weight, checked against W_n(k)");
  auto n = std::make_shared<int>(2);
  auto max_k = std::make_shared<int>(5);
  auto list = std::make_shared<bool>(true);
  cmd->add_option("--n", *n, "number of generators")->capture_default_str();
  cmd->add_option("--max-k", *max_k, "largest weight")->capture_default_str();
  cmd->add_flag("!--count-only", *list, "omit the product lists");
  cmd->callback([=, &out] {
    if (*n < 1 || *max_k < 1) throw InvalidInput("--n and --max-k must be at least 1");
    BigInt total = 0;
    for (int k = 1; k <= *max_k; ++k) total += freelie::witt(*n, k);
    if (!out.unsafe && total > kHallListLimit)
      throw ResourceLimit("hall: " + to_string(total) + " basic products exceed " +
                          std::to_string(kHallListLimit) + " (use --unsafe-limits)");
    std::vector<int> degrees(static_cast<std::size_t>(*n), 2);
    const auto v = numbered_generators(RingSpec(2, 1), degrees);
    const auto by_weight = freelie::basic_products_upto(*n, *max_k);
    json rows = json::array();
    std::string csv = csv_join({"k", "count", "witt", "match"});
    std::string listing = csv_join({"k", "index", "product"});
    bool all_match = true;
    for (int k = 1; k <= *max_k; ++k) {
      const auto& prods = by_weight[static_cast<std::size_t>(k)];
      const BigInt w = freelie::witt(*n, k);
      const bool match = BigInt(prods.size()) == w;
      all_match = all_match && match;
      json row = {{"k", k}, {"count", prods.size()}, {"witt", io::big(w)}, {"match", match}};
      if (*list) {
        json names = json::array();
        for (std::size_t i = 0; i < prods.size(); ++i) {
          names.push_back(prods[i].str(v));
          listing += csv_join({std::to_string(k), std::to_string(i), csv_safe(prods[i].str(v))});
        }
        row["products"] = names;
      }
      rows.push_back(row);
      csv += csv_join({std::to_string(k), std::to_string(prods.size()), to_string(w), match ? "1" : "0"});
    }
    out.emit({{"n", *n}, {"all_match", all_match}, {"rows", rows}},
             [&] { return *list ? csv + '\n' + listing : csv; });
  });
}

void add_lie_dims(CLI::App& app, const Output& out) {
  auto* cmd = app.add_subcommand("lie-dims", "Summand structure of the weight-k part of L(V) over Z/p^u");
  auto degrees = std::make_shared<std::vector<int>>(std::vector<int>{2, 1});
  auto p = std::make_shared<std::int64_t>(3);
  auto s = std::make_shared<int>(1);
  auto u = std::make_shared<int>(0);
  auto max_w = std::make_shared<int>(4);
  cmd->add_option("--degrees", *degrees, "generator degrees x1, x2, ...")->delimiter(',')->capture_default_str();
  cmd->add_option("--p", *p, "prime")->capture_default_str();
  cmd->add_option("--s", *s, "generator coefficients Z/p^s")->capture_default_str();
  cmd->add_option("--u", *u, "coefficient exponent for L (default s)");
  cmd->add_option("--max-weight", *max_w, "largest weight")->capture_default_str();
  cmd->callback([=, &out] {
    const auto v = numbered_generators(RingSpec(*p, *s), *degrees);
    const int uu = *u == 0 ? *s : *u;
    const auto comps = freelie::lie_components(v, *max_w, uu, out.unsafe);
    json rows = json::array();
    std::string csv = csv_join({"weight", "degree", "exponent", "multiplicity"});
    for (const auto& c : comps) {
      json per_degree = json::object();
      std::size_t total = 0;
      for (const auto& [deg, exps] : c.dims.components()) {
        if (exps.empty()) continue;
        per_degree[std::to_string(deg)] = exps;
        total += exps.size();
        std::map<int, int, std::greater<>> mult;
        for (int e : exps) ++mult[e];
        for (const auto& [e, cnt] : mult)
          csv += csv_join({std::to_string(c.weight), std::to_string(deg), std::to_string(e), std::to_string(cnt)});
      }
      rows.push_back({{"weight", c.weight}, {"total", total}, {"components", per_degree}});
    }
    json gens = json::array();
    for (const auto& g : v.generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
    out.emit({{"p", *p}, {"u", uu}, {"generators", gens}, {"weights", rows}}, [&] { return csv; });
  });
}

struct PairOptions {
  std::shared_ptr<std::int64_t> p = std::make_shared<std::int64_t>(3);
  std::shared_ptr<int> s = std::make_shared<int>(1);
  std::shared_ptr<int> deg_x = std::make_shared<int>(2);

  void attach(CLI::App* cmd) const {
    cmd->add_option("--p", *p, "prime")->capture_default_str();
    cmd->add_option("--s", *s, "coefficients Z/p^s")->capture_default_str();
    cmd->add_option("--deg-x", *deg_x, "degree of x (even); d x = y")->capture_default_str();
  }
  difflie::DifferentialSpec differential() const { return difflie::DifferentialSpec::standard(RingSpec(*p, *s), *deg_x); }
};

void add_homology(CLI::App& app, const Output& out) {
  auto* cmd = app.add_subcommand("homology", "Bigraded homology of L(x, dx) by weight");
  const PairOptions pair;
  pair.attach(cmd);
  auto max_w = std::make_shared<int>(5);
  auto u = std::make_shared<int>(1);
  cmd->add_option("--max-weight", *max_w, "largest weight")->capture_default_str();
  cmd->add_option("--u", *u, "homology over Z/p^u, u <= s")->capture_default_str();
  cmd->callback([=, &out] {
    const auto reports = difflie::homology_upto(pair.differential(), *max_w, *u, out.unsafe);
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(io::to_json(r));
    out.emit(arr, [&] { return io::homology_csv(reports); });
  });
}

void add_tau_sigma(CLI::App& app, const Output& out) {
  auto* cmd = app.add_subcommand("tau-sigma", "The cycles tau_k(x) and sigma_k(x) with cycle checks");
  const PairOptions pair;
  pair.attach(cmd);
  auto k = std::make_shared<int>(1);
  cmd->add_option("--k", *k, "k >= 1; cycles live in weight p^k and 2p^k")->capture_default_str();
  cmd->callback([=, &out] {
    const auto d = pair.differential();
    const auto& v = d.generators();
    const freelie::FreeNAElement x(v.ring().modulus(), freelie::BracketTree::leaf(0));
    std::vector<std::pair<std::string, freelie::FreeNAElement>> cycles;
    cycles.emplace_back("tau", difflie::tau(x, *k, d, out.unsafe));
    if (*pair.p != 2) cycles.emplace_back("sigma", difflie::sigma(x, *k, d, out.unsafe));
    json arr = json::array();
    std::string csv = csv_join({"name", "weight", "degree", "terms", "cycle", "independent"});
    for (const auto& [name, xi] : cycles) {
      const bool cycle = difflie::is_cycle_mod_p(xi, d);
      // independence only makes sense over F_p
      json indep = nullptr;
      if (cycle && *pair.s == 1) indep = difflie::independent_classes(d, {xi}, out.unsafe) == 1;
      arr.push_back({{"name", name},
                     {"weight", xi.weight()},
                     {"degree", xi.degree(v)},
                     {"cycle", cycle},
                     {"nonzero_class", indep},
                     {"element", io::to_json(xi, v)}});
      csv += csv_join({name, std::to_string(xi.weight()), std::to_string(xi.degree(v)),
                       std::to_string(xi.terms().size()), cycle ? "1" : "0",
                       indep.is_null() ? "na" : (indep.get<bool>() ? "1" : "0")});
    }
    out.emit({{"p", *pair.p}, {"s", *pair.s}, {"k", *k}, {"cycles", arr}}, [&] { return csv; });
  });
}

void add_ineq(CLI::App& app, const Output& out) {
  auto* cmd = app.add_subcommand("ineq", "Weighted-dimension bounds for HL and BL over F_p");
  const PairOptions pair;
  cmd->add_option("--p", *pair.p, "prime")->capture_default_str();
  cmd->add_option("--deg-x", *pair.deg_x, "degree of x (even)")->capture_default_str();
  auto K = std::make_shared<int>(5);
  cmd->add_option("--max-weight,--K", *K, "largest k")->capture_default_str();
  cmd->callback([=, &out] {
    const auto rows = difflie::check_weight_inequalities(pair.differential(), *K, out.unsafe);
    std::string csv = csv_join({"k", "dim_L", "dim_HL", "dim_BL", "homology_bound", "boundary_bound"});
    bool all = true;
    for (const auto& r : rows) {
      all = all && r.homology_bound && r.boundary_bound;
      csv += csv_join({std::to_string(r.k), io::rational(r.dim_L), io::rational(r.dim_HL), io::rational(r.dim_BL),
                       r.homology_bound ? "1" : "0", r.boundary_bound ? "1" : "0"});
    }
    out.emit({{"p", *pair.p}, {"all_hold", all}, {"rows", io::to_json(rows)}}, [&] { return csv; });
  });
}

void add_boundary_growth(CLI::App& app, const Output& out) {
  auto* cmd = app.add_subcommand("boundary-growth", "Cumulative boundary dimensions against (p-1)/(2pk) W_l(k)");
  const PairOptions pair;
  cmd->add_option("--p", *pair.p, "prime")->capture_default_str();
  cmd->add_option("--deg-x", *pair.deg_x, "degree of x (even)")->capture_default_str();
  auto K = std::make_shared<int>(5);
  cmd->add_option("--max-weight,--K", *K, "largest k")->capture_default_str();
  cmd->callback([=, &out] {
    const auto rep = difflie::boundary_growth(pair.differential(), *K, out.unsafe);
    std::string csv = csv_join({"k", "lhs", "rhs", "holds"});
    for (const auto& r : rep.rows)
      csv += csv_join({std::to_string(r.k), to_string(r.lhs), io::rational(r.rhs), r.holds ? "1" : "0"});
    out.emit(io::to_json(rep), [&] { return csv; });
  });
}

void add_moore_split(CLI::App& app, const Output& out) {
  auto* cmd = app.add_subcommand("moore-split", "Split P^n(l) over the prime powers of l");
  auto n = std::make_shared<int>(3);
  auto ell = std::make_shared<std::int64_t>(6);
  cmd->add_option("--n", *n, "dimension, n >= 3")->capture_default_str();
  cmd->add_option("--ell", *ell, "order l >= 2")->capture_default_str();
  cmd->callback([=, &out] {
    const auto w = moore::crt_split(*n, *ell);
    out.emit({{"n", *n}, {"ell", *ell}, {"wedge", io::to_json(w)}}, [&] { return io::wedge_csv(w); });
  });
}

void add_moore_smash(CLI::App& app, const Output& out) {
  auto* cmd = app.add_subcommand("moore-smash",
                                 "Smash of two Moore wedges (--a/--b), or the binomial power "
                                 "P^n^(k1) ^ P^m^(k2)");
  auto a = std::make_shared<std::vector<int>>();
  auto b = std::make_shared<std::vector<int>>();
  auto n = std::make_shared<int>(2), m = std::make_shared<int>(2);
  auto k1 = std::make_shared<int>(1), k2 = std::make_shared<int>(1);
  auto p = std::make_shared<std::int64_t>(3);
  auto r = std::make_shared<int>(1);
  auto s = std::make_shared<int>(0);
  auto* oa = cmd->add_option("--a", *a, "dimensions of the first wedge")->delimiter(',');
  auto* ob = cmd->add_option("--b", *b, "dimensions of the second wedge")->delimiter(',');
  oa->needs(ob);
  ob->needs(oa);
  cmd->add_option("--n", *n, "dimension of the first factor")->capture_default_str()->excludes(oa);
  cmd->add_option("--m", *m, "dimension of the second factor")->capture_default_str()->excludes(oa);
  cmd->add_option("--k1", *k1, "copies of P^n")->capture_default_str()->excludes(oa);
  cmd->add_option("--k2", *k2, "copies of P^m")->capture_default_str()->excludes(oa);
  cmd->add_option("--p", *p, "prime")->capture_default_str();
  cmd->add_option("--r", *r, "order exponent")->capture_default_str();
  cmd->add_option("--s", *s, "homology coefficients Z/p^s (default r)");
  cmd->callback([=, &out] {
    const int ss = *s == 0 ? *r : *s;
    moore::MooreWedge result;
    json input;
    if (!a->empty()) {
      result = moore::smash(wedge_of(*a, *p, *r), wedge_of(*b, *p, *r));
      input = {{"a", *a}, {"b", *b}};
    } else {
      result = moore::smash_power_binomial(*n, *m, *k1, *k2, *p, *r);
      input = {{"n", *n}, {"m", *m}, {"k1", *k1}, {"k2", *k2}};
    }
    input["p"] = *p;
    input["r"] = *r;
    out.emit({{"input", input},
              {"wedge", io::to_json(result)},
              {"count", result.count()},
              {"poincare", io::to_json(moore::homology_poincare(result, *p, ss))}},
             [&] { return io::wedge_csv(result); });
  });
}

void add_moore_hm(CLI::App& app, const Output& out) {
  auto* cmd = app.add_subcommand("moore-hm", "Hilton-Milnor factors of Omega(P^n v P^m) through weight K");
  auto n = std::make_shared<int>(2), m = std::make_shared<int>(2);
  auto p = std::make_shared<std::int64_t>(3);
  auto r = std::make_shared<int>(1);
  auto K = std::make_shared<int>(4);
  cmd->add_option("--n", *n, "dimension of the first summand")->capture_default_str();
  cmd->add_option("--m", *m, "dimension of the second summand")->capture_default_str();
  cmd->add_option("--p", *p, "prime")->capture_default_str();
  cmd->add_option("--r", *r, "order exponent")->capture_default_str();
  cmd->add_option("--K", *K, "largest weight")->capture_default_str();
  cmd->callback([=, &out] {
    const auto factors = moore::hilton_milnor_expansion(*n, *m, *p, *r, *K, out.unsafe);
    json arr = json::array();
    std::string csv = csv_join({"k1", "k2", "count", "dim", "p", "r", "mult"});
    for (const auto& f : factors) {
      arr.push_back({{"k1", f.k1}, {"k2", f.k2}, {"count", io::big(f.count)}, {"wedge", io::to_json(f.wedge)}});
      for (const auto& [sm, mult] : f.wedge.entries())
        csv += csv_join({std::to_string(f.k1), std::to_string(f.k2), std::to_string(f.count), std::to_string(sm.dim),
                         std::to_string(sm.p), std::to_string(sm.r), std::to_string(mult)});
    }
    out.emit({{"n", *n}, {"m", *m}, {"p", *p}, {"r", *r}, {"K", *K}, {"factors", arr}}, [&] { return csv; });
  });
}

struct AnalyzeOptions {
  std::shared_ptr<double> epsilon = std::make_shared<double>(growth::GrowthConfig{}.epsilon);
  std::shared_ptr<double> window = std::make_shared<double>(growth::GrowthConfig{}.window);
  void attach(CLI::App* cmd) const {
    cmd->add_option("--epsilon", *epsilon, "exponential threshold on the tail infimum")->capture_default_str();
    cmd->add_option("--window", *window, "tail window as a fraction of the points")->capture_default_str();
  }
  growth::GrowthConfig config() const { return {*epsilon, *window}; }
};

void add_moore_growth(CLI::App& app, const Output& out) {
  auto* cmd = app.add_subcommand("moore-growth",
                                 "Growth certificate for Z/p^s summands of pi_*(P^n v P^m); "
                                 "the stable offset --j must be supplied");
  auto gp = std::make_shared<moore::GrowthParams>();
  const AnalyzeOptions an;
  cmd->add_option("--n", gp->n, "dimension of the first summand")->capture_default_str();
  cmd->add_option("--m", gp->m, "dimension of the second summand")->capture_default_str();
  cmd->add_option("--p", gp->p, "prime")->capture_default_str();
  cmd->add_option("--r", gp->r, "order exponent")->capture_default_str();
  cmd->add_option("--s", gp->s, "summand exponent, s <= r")->capture_default_str();
  cmd->add_option("--j", gp->j,
                  "stable offset: a stem where pi_j^S has a Z/p^s summand. For odd p the image of J "
                  "gives j = 2(p-1)p^(s-1) - 1, e.g. j = 3 for p = 3, s = 1 and j = 7 for p = 5, s = 1. "
                  "Not checked.")
      ->required();
  cmd->add_option("--K", gp->K, "largest weight")->capture_default_str();
  an.attach(cmd);
  cmd->callback([=, &out] {
    const auto cert = moore::growth_certificate(*gp, out.unsafe);
    const auto rep = growth::analyze(cert.cumulative, an.config());
    json j = io::to_json(cert);
    j["analysis"] = io::to_json(rep);
    out.emit(j, [&] { return io::certificate_csv(cert) + '\n' + io::growth_csv(rep); });
  });
}

void add_growth_analyze(CLI::App& app, const Output& out) {
  auto* cmd = app.add_subcommand("growth-analyze", "Tail infimum of log(a_m)/m and an exponential-growth verdict");
  auto values = std::make_shared<std::vector<std::string>>();
  auto start = std::make_shared<std::int64_t>(1);
  const AnalyzeOptions an;
  cmd->add_option("--values", *values, "a_start, a_start+1, ... (non-negative integers)")
      ->delimiter(',')
      ->required();
  cmd->add_option("--start", *start, "index of the first value")->capture_default_str();
  an.attach(cmd);
  cmd->callback([=, &out] {
    growth::GrowthSequence seq;
    std::int64_t m = *start;
    for (const auto& text : *values) {
      if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidInput("--values: not a non-negative integer: \"" + text + "\"");
      seq.push_back(m++, BigInt(text));
    }
    const auto rep = growth::analyze(seq, an.config());
    out.emit(io::to_json(rep), [&] { return io::growth_csv(rep); });
  });
}

void add_selftest(CLI::App& app, const Output& out, int& exit_code) {
  auto* cmd = app.add_subcommand("selftest", "Exhaustive and seeded property suites; exit 1 on any failure");
  auto cfg = std::make_shared<selfcheck::Config>();
  auto suite = std::make_shared<std::string>("all");
  cmd->add_option("--seed", cfg->seed, "RNG seed")->capture_default_str();
  cmd->add_option("--seeds", cfg->seeds, "randomized cases per suite")->capture_default_str();
  cmd->add_option("--p", cfg->p, "prime for the module suites")->capture_default_str();
  cmd->add_option("--max-s", cfg->max_s, "exhaustive runs cover s = 1..max-s")->capture_default_str();
  cmd->add_option("--random-s", cfg->random_s, "exponent for randomized runs")->capture_default_str();
  cmd->add_option("--suite", *suite, "module | tensor | algebra | all")
      ->check(CLI::IsMember({"module", "tensor", "algebra", "all"}))
      ->capture_default_str();
  cmd->callback([=, &out, &exit_code] {
    std::vector<selfcheck::SuiteResult> results;
    if (*suite == "module")
      results = selfcheck::module_suites(*cfg);
    else if (*suite == "tensor")
      results = selfcheck::tensor_suites(*cfg);
    else if (*suite == "algebra")
      results = selfcheck::algebra_suites(*cfg);
    else
      results = selfcheck::run_all(*cfg);
    std::string csv = csv_join({"suite", "cases", "failures", "ok"});
    bool ok = true;
    for (const auto& r : results) {
      ok = ok && r.ok();
      csv += csv_join({r.name, std::to_string(r.cases), std::to_string(r.failures), r.ok() ? "1" : "0"});
      if (!r.ok()) std::cerr << "selftest: " << r.name << " failed: " << r.first_failure << '\n';
    }
    out.emit({{"ok", ok}, {"suites", io::to_json(results)}}, [&] { return csv; });
    if (!ok) exit_code = 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Exact algebra over Z/p^s: free Lie algebras, Moore-space combinatorics, growth certificates", "zpalg");
  app.require_subcommand(1);
  Output out;
  if (const char* env = std::getenv("ZPALG_FORMAT")) out.format = env;
  app.add_option("--format", out.format, "json | csv (default from ZPALG_FORMAT, else json)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--unsafe-limits", out.unsafe, "disable the size guards");
  app.fallthrough();

  int exit_code = 0;
  add_witt(app, out);
  add_hall(app, out);
  add_lie_dims(app, out);
  add_homology(app, out);
  add_tau_sigma(app, out);
  add_ineq(app, out);
  add_boundary_growth(app, out);
  add_moore_split(app, out);
  add_moore_smash(app, out);
  add_moore_hm(app, out);
  add_moore_growth(app, out);
  add_growth_analyze(app, out);
  add_selftest(app, out, exit_code);
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    if (out.format != "json" && out.format != "csv")
      throw InvalidInput("ZPALG_FORMAT must be json or csv, got \"" + out.format + "\"");
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "zpalg: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << "zpalg: resource guard: " << e.what() << '\n';
    return 3;
  } catch (const InvalidInput& e) {
    std::cerr << "zpalg: invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "zpalg: internal error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
