#ifndef MEANKIT_JSON_IO_HPP
#define MEANKIT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "meankit/closure.hpp"
#include "meankit/funceq.hpp"
#include "meankit/hfamily.hpp"
#include "meankit/iterate.hpp"
#include "meankit/mean.hpp"

namespace meankit {

using json = nlohmann::json;

// Mean-spec format: {"kind": "...", ...kind-specific fields}. Arity is
// contextual, so parsers take p explicitly; mapping arrays carry it as
// their length.
json mean_to_json(const MeanExpr& expr);
MeanExpr mean_from_json(const json& j, int p);

json mapping_to_json(const MeanVector& m);
MeanVector mapping_from_json(const json& j);

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json report_to_json(const IterationReport& report);
std::string trace_to_csv(const IterationReport& report);

json exponent_vector_to_json(const ExponentVector& v);
ExponentVector exponent_vector_from_json(const json& j);

json closure_to_json(const ClosureTree& tree);
std::string closure_to_dot(const ClosureTree& tree);

json symbolic_closure_to_json(const SymbolicClosure& closure);
std::string symbolic_closure_to_dot(const SymbolicClosure& closure);

json scalar_func_to_json(const ScalarFuncSpec& phi);
ScalarFuncSpec scalar_func_from_json(const json& j);

json solution_report_to_json(const SolutionReport& report);
std::string residuals_to_csv(const SolutionReport& report);

} // namespace meankit

#endif
