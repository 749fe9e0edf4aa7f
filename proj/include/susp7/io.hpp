#pragma once

#include <string>

#include <json.hpp>

#include "susp7/checker.hpp"
#include "susp7/decompose.hpp"
#include "susp7/invariants.hpp"
#include "susp7/wedge.hpp"

namespace susp7 {

// Group literals: 0, [[p,e],...], or {"free": n, "torsion": [[p,e],...]};
// bare integers in a torsion list mean [k, 1]. Descriptors carry r, d, H, T
// and wu. All parse failures throw ParseError.
RawGroup raw_group_from_json(const nlohmann::json& j);
RawDescriptor raw_descriptor_from_json(const nlohmann::json& j);
RawDescriptor raw_descriptor_from_text(const std::string& text);

nlohmann::json group_to_json(const AbelianGroup& g);
nlohmann::json descriptor_to_json(const ManifoldDescriptor& m);
nlohmann::json atom_to_json(const Atom& a);
nlohmann::json wedge_to_json(const WedgeExpr& w);
WedgeExpr wedge_from_json(const nlohmann::json& j);
nlohmann::json result_to_json(const DecompositionResult& r);
nlohmann::json report_to_json(const VerificationReport& r);

}  // namespace susp7
