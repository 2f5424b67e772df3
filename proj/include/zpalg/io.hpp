#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "zpalg/difflie/homology.hpp"
#include "zpalg/difflie/weights.hpp"
#include "zpalg/freelie/lie.hpp"
#include "zpalg/growth/growth.hpp"
#include "zpalg/moore/moore.hpp"
#include "zpalg/numeric.hpp"
#include "zpalg/selfcheck.hpp"
#include "zpalg/zpmod/module.hpp"

namespace zpalg::io {

using json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json big(const BigInt& v);
/// "a/b", or "a" when the value is an integer.
std::string rational(const Rational& v);
/// JSON number, or null for infinities and NaN.
json real(double x);

// {"p":3,"s":2,"components":{"4":[2,1,1]}}
json to_json(const zpmod::GradedModule& m);
/// Throws InvalidInput on missing fields, bad degree keys, or exponents
/// outside [1, s].
zpmod::GradedModule graded_module_from_json(const json& j);

json to_json(const zpmod::ModuleMorphism& f);

json to_json(const freelie::BracketTree& t, const freelie::GeneratorSet& v);
json to_json(const freelie::FreeNAElement& e, const freelie::GeneratorSet& v);
json to_json(const freelie::TensorElement& e, const freelie::GeneratorSet& v);

json to_json(const difflie::HomologyReport& r);
/// Columns weight,degree,dimZ,dimB,dimH.
std::string homology_csv(const std::vector<difflie::HomologyReport>& reports);

json to_json(const growth::GrowthSequence& s);
growth::GrowthSequence growth_sequence_from_json(const json& j);
json to_json(const growth::GrowthReport& r);
std::string growth_csv(const growth::GrowthReport& r);

json to_json(const moore::MooreWedge& w);
std::string wedge_csv(const moore::MooreWedge& w);
json to_json(const moore::Poly& p);
json to_json(const moore::GrowthParams& gp);
json to_json(const moore::Certificate& c);
std::string certificate_csv(const moore::Certificate& c);

json to_json(const std::vector<difflie::WeightInequalityRow>& rows);
json to_json(const difflie::BoundaryGrowthReport& r);

json to_json(const std::vector<selfcheck::SuiteResult>& results);

}  // namespace zpalg::io
