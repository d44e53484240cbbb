#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "e8lab/artin.hpp"
#include "e8lab/monodromy.hpp"
#include "e8lab/root_system.hpp"
#include "e8lab/semigroup.hpp"
#include "e8lab/singularity.hpp"

namespace e8lab {

using Json = nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

Json diagram_info(const DynkinDiagram& d);
Json normal_form_json(const ArtinGroup& group, const GarsideNormalForm& nf);
Json milnor_json(const BivariatePoly& f, const MilnorData& data);
/// {"base": "...", "parameters": [{"name": "s1", "monomial": "1"}, ...]}
Json versal_json(const VersalFamily& family);
VersalFamily versal_from_json(const Json& j);
Json semigroup_json(const NumericalSemigroup& s);
Json relation_report_json(const RelationReport& report);
Json matrix_json(const IntMatrix& m);

/// One acceptance check: what was verified, whether it held, and how long
/// the computation took against its time limit.
struct CheckResult {
  std::string id;
  std::string statement;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

Json check_json(const CheckResult& c);

/// Suite names accepted by run_verification_suite, in run order.
const std::vector<std::string>& verification_suite_names();

/// Runs a named suite ("gaps", "milnor", ...) or "all". Throws
/// ValidationError for an unknown name.
std::vector<CheckResult> run_verification_suite(const std::string& name);

}  // namespace e8lab
