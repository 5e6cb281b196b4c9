#include "pbfa/analysis.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

#include "pbfa/calculus.hpp"

namespace pbfa {

AnalysisReport analyze(const FunctionTable& f, std::string source) {
  AnalysisReport r;
  r.source = std::move(source);
  r.arity = f.arity();
  r.boolean = is_boolean(f);
  r.essential = essential_variables(f);
  r.monotone = is_monotone(f);
  r.locality = local_monotonicity_degree(f);
  r.permutability = max_permutability_degree(f);
  r.symmetric = detect_symmetric(f);
  r.forbidden_sections = forbidden_binary_sections(f);
  r.decomposition = decompose(f);
  return r;
}

namespace {

nlohmann::json point_json(const Point& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (int k = 1; k <= p.arity(); ++k) arr.push_back(p.get(k) ? 1 : 0);
  return arr;
}

const char* kind_name(SectionDefectKind kind) {
  switch (kind) {
    case SectionDefectKind::Xor: return "xor";
    case SectionDefectKind::Xnor: return "xnor";
    case SectionDefectKind::CoefficientCondition: return "coefficient-condition";
  }
  return "?";
}

}  // namespace

std::string role_name(VariableMonotonicity m) {
  switch (m) {
    case VariableMonotonicity::Isotone: return "isotone";
    case VariableMonotonicity::Antitone: return "antitone";
    case VariableMonotonicity::Constant: return "constant";
    case VariableMonotonicity::Neither: return "neither";
  }
  return "?";
}

nlohmann::json to_json(const SignViolation& witness) {
  return nlohmann::json{{"k", witness.k}, {"x", point_json(witness.x)}, {"y", point_json(witness.y)}};
}

nlohmann::json to_json(const PermutabilityCounterexample& ce) {
  return nlohmann::json{
      {"indices", ce.indices.elements()},        {"joins", ce.joins.elements()},
      {"order_a", format_op_sequence(ce.order_a)}, {"order_b", format_op_sequence(ce.order_b)},
      {"point", point_json(ce.point)},           {"value_a", ce.value_a.str()},
      {"value_b", ce.value_b.str()},
  };
}

nlohmann::json to_json(const PseudoPolynomialDecomposition& d) {
  nlohmann::json orientations = nlohmann::json::array();
  for (const Orientation o : d.phi) {
    orientations.push_back(o == Orientation::Increasing ? "increasing" : "decreasing");
  }
  // Coefficients equal to the minimum contribute nothing to the max, so
  // only c_{} and the coefficients above the minimum are listed.
  nlohmann::json coef = nlohmann::json::object();
  const int n = static_cast<int>(d.phi.size());
  for (std::uint32_t s = 0; s < d.lattice_coef.size(); ++s) {
    if (s != 0 && !(d.a < d.lattice_coef[s])) continue;
    coef[SubsetMask(n, s).str()] = d.lattice_coef[s].str();
  }
  return nlohmann::json{{"monotone", true},
                        {"min", d.a.str()},
                        {"max", d.b.str()},
                        {"orientations", std::move(orientations)},
                        {"coefficients", std::move(coef)}};
}

nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json j{
      {"source", r.source},
      {"arity", r.arity},
      {"boolean", r.boolean},
      {"essential_variables", r.essential.elements()},
      {"monotone", r.monotone},
      {"degree", r.locality.degree},
      {"witness", r.locality.witness ? to_json(*r.locality.witness) : nlohmann::json(nullptr)},
      {"max_permutability", r.permutability.max_p},
      {"permutability_counterexample",
       r.permutability.counterexample ? to_json(*r.permutability.counterexample) : nlohmann::json(nullptr)},
      {"symmetric_sequence", nlohmann::json(nullptr)},
      {"forbidden_sections", nlohmann::json::array()},
      {"decomposition", r.decomposition ? to_json(*r.decomposition) : nlohmann::json{{"monotone", false}}},
  };
  if (r.symmetric) {
    nlohmann::json seq = nlohmann::json::array();
    for (const Rational& v : r.symmetric->alpha) seq.push_back(v.str());
    j["symmetric_sequence"] = std::move(seq);
  }
  for (const ForbiddenSection& fs : r.forbidden_sections) {
    j["forbidden_sections"].push_back(nlohmann::json{{"j", fs.j},
                                                     {"k", fs.k},
                                                     {"base", point_json(fs.base)},
                                                     {"kind", kind_name(fs.kind)},
                                                     {"a1", fs.a1.str()},
                                                     {"a2", fs.a2.str()},
                                                     {"a12", fs.a12.str()}});
  }
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "source: " << r.source << "\n";
  out << "arity: " << r.arity << (r.boolean ? " (Boolean)" : "") << "\n";
  out << "essential variables: " << r.essential.str() << "\n";
  out << "monotone: " << (r.monotone ? "yes" : "no") << "\n";
  out << "local monotonicity degree: " << r.locality.degree;
  if (r.locality.witness) {
    out << "  (sign change of d" << r.locality.witness->k << " between " << r.locality.witness->x.str()
        << " and " << r.locality.witness->y.str() << ")";
  }
  out << "\n";
  out << "max permutability degree: " << r.permutability.max_p;
  if (r.permutability.counterexample) {
    const auto& ce = *r.permutability.counterexample;
    out << "  (" << format_op_sequence(ce.order_a) << " = " << ce.value_a.str() << " vs "
        << format_op_sequence(ce.order_b) << " = " << ce.value_b.str() << " at " << ce.point.str() << ")";
  }
  out << "\n";
  if (r.symmetric) {
    out << "symmetric: alpha = " << format_sequence(*r.symmetric) << "\n";
  }
  if (!r.forbidden_sections.empty()) {
    out << "forbidden binary sections: " << r.forbidden_sections.size() << "\n";
    for (const ForbiddenSection& fs : r.forbidden_sections) {
      out << "  (j=" << fs.j << ", k=" << fs.k << ", base=" << fs.base.str() << ", " << kind_name(fs.kind)
          << ", a1=" << fs.a1.str() << ", a2=" << fs.a2.str() << ", a12=" << fs.a12.str() << ")\n";
    }
  }
  if (r.decomposition) {
    const auto& d = *r.decomposition;
    out << "pseudo-polynomial decomposition: min=" << d.a.str() << " max=" << d.b.str() << " orientations=";
    for (std::size_t i = 0; i < d.phi.size(); ++i) {
      out << (i ? "," : "") << (d.phi[i] == Orientation::Increasing ? "inc" : "dec");
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace pbfa
