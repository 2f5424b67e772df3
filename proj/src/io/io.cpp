#include "zpalg/io.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "zpalg/errors.hpp"

namespace zpalg::io {

json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return to_string(v);
}

std::string rational(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v), den = boost::multiprecision::denominator(v);
  return den == 1 ? to_string(num) : to_string(num) + "/" + to_string(den);
}

json real(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

namespace {

std::string csv_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  return json(x).dump();
}

std::int64_t int_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    throw InvalidInput(std::string("module JSON: missing integer field \"") + key + "\"");
  return j.at(key).get<std::int64_t>();
}

json degree_counts(const std::map<int, difflie::HomologySpot>& spots,
                   zpmod::Exponents difflie::HomologySpot::*field) {
  json out = json::object();
  for (const auto& [deg, s] : spots) out[std::to_string(deg)] = (s.*field).size();
  return out;
}

}  // namespace

json to_json(const zpmod::GradedModule& m) {
  json comps = json::object();
  for (const auto& [deg, exps] : m.components()) comps[std::to_string(deg)] = exps;
  return {{"p", m.ring().p()}, {"s", m.ring().s()}, {"components", comps}};
}

zpmod::GradedModule graded_module_from_json(const json& j) {
  const zpmod::RingSpec ring(int_field(j, "p"), static_cast<int>(int_field(j, "s")));
  if (!j.contains("components") || !j.at("components").is_object())
    throw InvalidInput("module JSON: \"components\" must be an object");
  std::map<int, zpmod::Exponents> comps;
  for (const auto& [key, val] : j.at("components").items()) {
    std::size_t used = 0;
    int deg = 0;
    try {
      deg = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) throw InvalidInput("module JSON: bad degree key \"" + key + "\"");
    if (!val.is_array()) throw InvalidInput("module JSON: degree " + key + " must list exponents");
    zpmod::Exponents exps;
    for (const auto& e : val) {
      if (!e.is_number_integer()) throw InvalidInput("module JSON: exponents must be integers");
      const auto t = e.get<std::int64_t>();
      if (t < 1 || t > ring.s())
        throw InvalidInput("module JSON: exponent " + std::to_string(t) + " outside [1, " +
                           std::to_string(ring.s()) + "] in degree " + key);
      exps.push_back(static_cast<int>(t));
    }
    comps[deg] = std::move(exps);
  }
  return zpmod::GradedModule(ring, std::move(comps));
}

json to_json(const zpmod::ModuleMorphism& f) {
  json blocks = json::object();
  for (const auto& [deg, m] : f.blocks()) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const auto r = m.row(i);
      rows.push_back(std::vector<std::int64_t>(r.begin(), r.end()));
    }
    blocks[std::to_string(deg)] = rows;
  }
  return {{"domain", to_json(f.domain())},
          {"codomain", to_json(f.codomain())},
          {"shift", f.shift()},
          {"blocks", blocks}};
}

json to_json(const freelie::BracketTree& t, const freelie::GeneratorSet& v) {
  if (t.is_leaf()) return v.name(t.generator());
  return json::array({to_json(t.left(), v), to_json(t.right(), v)});
}

json to_json(const freelie::FreeNAElement& e, const freelie::GeneratorSet& v) {
  json terms = json::array();
  for (const auto& [t, c] : e.terms()) terms.push_back({{"coeff", c}, {"tree", to_json(t, v)}});
  return {{"modulus", e.modulus()}, {"terms", terms}};
}

json to_json(const freelie::TensorElement& e, const freelie::GeneratorSet& v) {
  json terms = json::array();
  for (const auto& [w, c] : e.terms()) {
    json word = json::array();
    for (int g : w) word.push_back(v.name(g));
    terms.push_back({{"coeff", c}, {"word", word}});
  }
  return {{"modulus", e.modulus()}, {"terms", terms}};
}

json to_json(const difflie::HomologyReport& r) {
  using difflie::HomologySpot;
  json exps = json::object();
  for (const auto& [deg, s] : r.spots)
    if (!s.H.empty()) exps[std::to_string(deg)] = s.H;
  return {{"weight", r.weight},
          {"ring", {{"p", r.ring.p()}, {"s", r.ring.s()}}},
          {"L", degree_counts(r.spots, &HomologySpot::L)},
          {"Z", degree_counts(r.spots, &HomologySpot::Z)},
          {"B", degree_counts(r.spots, &HomologySpot::B)},
          {"H", degree_counts(r.spots, &HomologySpot::H)},
          {"H_exponents", exps},
          {"total_H", r.dim_H()}};
}

std::string homology_csv(const std::vector<difflie::HomologyReport>& reports) {
  std::ostringstream out;
  out << "weight,degree,dimZ,dimB,dimH\n";
  for (const auto& r : reports)
    for (const auto& [deg, s] : r.spots)
      out << r.weight << ',' << deg << ',' << s.Z.size() << ',' << s.B.size() << ',' << s.H.size() << '\n';
  return out.str();
}

json to_json(const growth::GrowthSequence& s) {
  json out = json::array();
  for (const auto& pt : s.points()) out.push_back(json::array({pt.m, big(pt.a)}));
  return out;
}

growth::GrowthSequence growth_sequence_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("growth sequence JSON must be an array of [m, a] pairs");
  growth::GrowthSequence out;
  for (const auto& pt : j) {
    if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number_integer())
      throw InvalidInput("growth sequence JSON: each point must be [m, a]");
    BigInt a;
    if (pt[1].is_number_integer())
      a = pt[1].get<std::int64_t>();
    else if (pt[1].is_string())
      try {
        a = BigInt(pt[1].get<std::string>());
      } catch (const std::exception&) {
        throw InvalidInput("growth sequence JSON: bad integer " + pt[1].dump());
      }
    else
      throw InvalidInput("growth sequence JSON: value must be an integer");
    out.push_back(pt[0].get<std::int64_t>(), a);
  }
  return out;
}

json to_json(const growth::GrowthReport& r) {
  json ratios = json::array();
  for (const auto& [m, x] : r.ratios) ratios.push_back(json::array({m, real(x)}));
  return {{"ratios", ratios},
          {"tail_inf", real(r.tail_inf)},
          {"base", real(r.base)},
          {"verdict", growth::to_string(r.verdict)},
          {"epsilon", r.config.epsilon},
          {"window", r.config.window},
          {"window_points", r.window_points}};
}

std::string growth_csv(const growth::GrowthReport& r) {
  std::ostringstream out;
  out << "m,ratio,in_window\n";
  const std::size_t first = r.ratios.size() - r.window_points;
  for (std::size_t i = 0; i < r.ratios.size(); ++i)
    out << r.ratios[i].first << ',' << csv_real(r.ratios[i].second) << ',' << (i >= first ? 1 : 0) << '\n';
  out << "\ntail_inf,base,verdict,epsilon,window\n"
      << csv_real(r.tail_inf) << ',' << csv_real(r.base) << ',' << growth::to_string(r.verdict) << ','
      << csv_real(r.config.epsilon) << ',' << csv_real(r.config.window) << '\n';
  return out.str();
}

json to_json(const moore::MooreWedge& w) {
  json out = json::array();
  for (const auto& [s, mult] : w.entries())
    out.push_back({{"dim", s.dim}, {"p", s.p}, {"r", s.r}, {"mult", mult}});
  return out;
}

std::string wedge_csv(const moore::MooreWedge& w) {
  std::ostringstream out;
  out << "dim,p,r,mult\n";
  for (const auto& [s, mult] : w.entries()) out << s.dim << ',' << s.p << ',' << s.r << ',' << mult << '\n';
  return out.str();
}

json to_json(const moore::Poly& p) {
  json out = json::object();
  for (const auto& [e, c] : p)
    if (c != 0) out[std::to_string(e)] = c;
  return out;
}

json to_json(const moore::GrowthParams& gp) {
  return {{"n", gp.n}, {"m", gp.m}, {"p", gp.p}, {"r", gp.r}, {"s", gp.s}, {"j", gp.j}, {"K", gp.K}};
}

json to_json(const moore::Certificate& c) {
  json contribs = json::array();
  for (const auto& x : c.contributions)
    contribs.push_back({{"k", x.k},
                        {"count", big(x.count)},
                        {"maxdim", x.maxdim},
                        {"comparison", rational(x.comparison)}});
  return {{"params", to_json(c.params)}, {"contributions", contribs}, {"cumulative", to_json(c.cumulative)}};
}

std::string certificate_csv(const moore::Certificate& c) {
  std::ostringstream out;
  out << "k,count,maxdim,cumulative,comparison\n";
  for (std::size_t i = 0; i < c.contributions.size(); ++i) {
    const auto& x = c.contributions[i];
    out << x.k << ',' << to_string(x.count) << ',' << x.maxdim << ','
        << to_string(c.cumulative.points()[i].a) << ',' << rational(x.comparison) << '\n';
  }
  return out.str();
}

json to_json(const std::vector<difflie::WeightInequalityRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"k", r.k},
                   {"dim_L", rational(r.dim_L)},
                   {"dim_HL", rational(r.dim_HL)},
                   {"dim_BL", rational(r.dim_BL)},
                   {"homology_bound", r.homology_bound},
                   {"boundary_bound", r.boundary_bound}});
  return out;
}

json to_json(const difflie::BoundaryGrowthReport& r) {
  json rows = json::array();
  for (const auto& x : r.rows)
    rows.push_back({{"k", x.k}, {"lhs", big(x.lhs)}, {"rhs", rational(x.rhs)}, {"holds", x.holds}});
  return {{"n", r.top_degree}, {"rank", r.rank}, {"cumulative", to_json(r.cumulative)}, {"rows", rows}};
}

json to_json(const std::vector<selfcheck::SuiteResult>& results) {
  json out = json::array();
  for (const auto& r : results)
    out.push_back({{"suite", r.name},
                   {"cases", r.cases},
                   {"failures", r.failures},
                   {"ok", r.ok()},
                   {"first_failure", r.first_failure}});
  return out;
}

}  // namespace zpalg::io
