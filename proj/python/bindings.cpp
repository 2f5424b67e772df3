#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;
using namespace zpalg;
using io::json;
using zpmod::RingSpec;

// Results cross the boundary as JSON text; the Python package decodes them.
namespace {

difflie::DifferentialSpec pair_spec(std::int64_t p, int s, int deg_x) {
  return difflie::DifferentialSpec::standard(RingSpec(p, s), deg_x);
}

std::string witt_json(std::int64_t n, int k) { return io::big(freelie::witt(n, k)).dump(); }

std::vector<std::string> basic_products(int n, int k) {
  std::vector<freelie::Generator> gens;
  for (int i = 0; i < n; ++i) gens.push_back({"x" + std::to_string(i + 1), 2});
  const freelie::GeneratorSet v(RingSpec(2, 1), gens);
  std::vector<std::string> out;
  for (const auto& t : freelie::basic_products(n, k)) out.push_back(t.str(v));
  return out;
}

std::string lie_dims(const std::vector<int>& degrees, std::int64_t p, int s, int u, int max_weight, bool unsafe) {
  std::vector<freelie::Generator> gens;
  for (std::size_t i = 0; i < degrees.size(); ++i) gens.push_back({"x" + std::to_string(i + 1), degrees[i]});
  const freelie::GeneratorSet v(RingSpec(p, s), gens);
  json out = json::array();
  for (const auto& c : freelie::lie_components(v, max_weight, u, unsafe))
    out.push_back({{"weight", c.weight}, {"module", io::to_json(c.dims)}});
  return out.dump();
}

std::string homology(std::int64_t p, int deg_x, int max_weight, int s, int u, bool unsafe) {
  json out = json::array();
  for (const auto& r : difflie::homology_upto(pair_spec(p, s, deg_x), max_weight, u, unsafe))
    out.push_back(io::to_json(r));
  return out.dump();
}

std::string tau_sigma(std::int64_t p, int deg_x, int k, bool unsafe) {
  const auto d = pair_spec(p, 1, deg_x);
  const auto& v = d.generators();
  const freelie::FreeNAElement x(p, freelie::BracketTree::leaf(0));
  json out = json::object();
  const auto t = difflie::tau(x, k, d, unsafe);
  out["tau"] = {{"element", io::to_json(t, v)}, {"cycle", difflie::is_cycle_mod_p(t, d)}};
  if (p != 2) {
    const auto sg = difflie::sigma(x, k, d, unsafe);
    out["sigma"] = {{"element", io::to_json(sg, v)}, {"cycle", difflie::is_cycle_mod_p(sg, d)}};
    out["independent_classes"] = difflie::independent_classes(d, {t, sg}, unsafe);
  }
  return out.dump();
}

std::string weight_inequalities(std::int64_t p, int deg_x, int K, bool unsafe) {
  return io::to_json(difflie::check_weight_inequalities(pair_spec(p, 1, deg_x), K, unsafe)).dump();
}

std::string boundary_growth(std::int64_t p, int deg_x, int K, bool unsafe) {
  return io::to_json(difflie::boundary_growth(pair_spec(p, 1, deg_x), K, unsafe)).dump();
}

std::string crt_split(int n, std::int64_t ell) { return io::to_json(moore::crt_split(n, ell)).dump(); }

std::string smash_power(int n, int m, int k1, int k2, std::int64_t p, int r) {
  const auto w = moore::smash_power_binomial(n, m, k1, k2, p, r);
  return json{{"wedge", io::to_json(w)}, {"poincare", io::to_json(moore::homology_poincare(w, p, r))}}.dump();
}

std::string hilton_milnor(int n, int m, std::int64_t p, int r, int K, bool unsafe) {
  json out = json::array();
  for (const auto& f : moore::hilton_milnor_expansion(n, m, p, r, K, unsafe))
    out.push_back({{"k1", f.k1}, {"k2", f.k2}, {"count", io::big(f.count)}, {"wedge", io::to_json(f.wedge)}});
  return out.dump();
}

std::string growth_certificate(int n, int m, std::int64_t p, int r, int s, int j, int K, double epsilon,
                               double window, bool unsafe) {
  const auto cert = moore::growth_certificate({n, m, p, r, s, j, K}, unsafe);
  json out = io::to_json(cert);
  out["analysis"] = io::to_json(growth::analyze(cert.cumulative, {epsilon, window}));
  return out.dump();
}

std::string analyze(const std::vector<std::string>& values, std::int64_t start, double epsilon, double window) {
  growth::GrowthSequence seq;
  std::int64_t m = start;
  for (const auto& v : values) {
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("not a non-negative integer: \"" + v + "\"");
    seq.push_back(m++, BigInt(v));
  }
  return io::to_json(growth::analyze(seq, {epsilon, window})).dump();
}

std::string selftest(const std::string& suite, std::uint64_t seed, int seeds, int max_s, int random_s) {
  selfcheck::Config cfg;
  cfg.seed = seed;
  cfg.seeds = seeds;
  cfg.max_s = max_s;
  cfg.random_s = random_s;
  if (suite == "module") return io::to_json(selfcheck::module_suites(cfg)).dump();
  if (suite == "tensor") return io::to_json(selfcheck::tensor_suites(cfg)).dump();
  if (suite == "algebra") return io::to_json(selfcheck::algebra_suites(cfg)).dump();
  if (suite == "all") return io::to_json(selfcheck::run_all(cfg)).dump();
  throw InvalidInput("unknown suite \"" + suite + "\"");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of the zpalg package";
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);

  m.def("witt", &witt_json, py::arg("n"), py::arg("k"));
  m.def("basic_products", &basic_products, py::arg("n"), py::arg("k"));
  m.def("lie_dims", &lie_dims, py::arg("degrees"), py::arg("p"), py::arg("s"), py::arg("u"), py::arg("max_weight"),
        py::arg("unsafe") = false);
  m.def("homology", &homology, py::arg("p"), py::arg("deg_x"), py::arg("max_weight"), py::arg("s") = 1,
        py::arg("u") = 1, py::arg("unsafe") = false);
  m.def("tau_sigma", &tau_sigma, py::arg("p"), py::arg("deg_x"), py::arg("k"), py::arg("unsafe") = false);
  m.def("weight_inequalities", &weight_inequalities, py::arg("p"), py::arg("deg_x"), py::arg("K"),
        py::arg("unsafe") = false);
  m.def("boundary_growth", &boundary_growth, py::arg("p"), py::arg("deg_x"), py::arg("K"), py::arg("unsafe") = false);
  m.def("crt_split", &crt_split, py::arg("n"), py::arg("ell"));
  m.def("smash_power", &smash_power, py::arg("n"), py::arg("m"), py::arg("k1"), py::arg("k2"), py::arg("p"),
        py::arg("r"));
  m.def("hilton_milnor", &hilton_milnor, py::arg("n"), py::arg("m"), py::arg("p"), py::arg("r"), py::arg("K"),
        py::arg("unsafe") = false);
  m.def("growth_certificate", &growth_certificate, py::arg("n"), py::arg("m"), py::arg("p"), py::arg("r"),
        py::arg("s"), py::arg("j"), py::arg("K"), py::arg("epsilon") = growth::GrowthConfig{}.epsilon,
        py::arg("window") = growth::GrowthConfig{}.window, py::arg("unsafe") = false);
  m.def("analyze", &analyze, py::arg("values"), py::arg("start") = 1,
        py::arg("epsilon") = growth::GrowthConfig{}.epsilon, py::arg("window") = growth::GrowthConfig{}.window);
  m.def("selftest", &selftest, py::arg("suite"), py::arg("seed"), py::arg("seeds"), py::arg("max_s"),
        py::arg("random_s"));
}
