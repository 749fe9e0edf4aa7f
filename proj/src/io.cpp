#include "susp7/io.hpp"

#include <utility>
#include <vector>

#include "susp7/errors.hpp"

namespace susp7 {
namespace {

using nlohmann::json;

int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer");
  return j.get<int64_t>();
}

std::pair<int64_t, int64_t> as_factor(const json& j) {
  if (j.is_number_integer()) return {j.get<int64_t>(), 1};
  if (j.is_array() && j.size() == 2)
    return {as_int(j[0], "torsion base"), as_int(j[1], "torsion exponent")};
  throw ParseError("torsion entries must be k or [k, e]");
}

std::vector<std::pair<int64_t, int64_t>> as_factors(const json& j) {
  if (!j.is_array()) throw ParseError("torsion must be a list");
  std::vector<std::pair<int64_t, int64_t>> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(as_factor(item));
  return out;
}

json factors_to_json(const std::vector<TorsionFactor>& torsion) {
  json arr = json::array();
  for (const auto& f : torsion) arr.push_back({f.prime, f.exponent});
  return arr;
}

}  // namespace

RawGroup raw_group_from_json(const json& j) {
  RawGroup g;
  if (j.is_number_integer()) {
    if (j.get<int64_t>() != 0)
      throw ParseError("a bare integer group literal must be 0");
    return g;
  }
  if (j.is_array()) {
    g.factors = as_factors(j);
    return g;
  }
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (key == "free")
        g.free_rank = as_int(value, "free rank");
      else if (key == "torsion")
        g.factors = as_factors(value);
      else
        throw ParseError("unknown group field '" + key + "'");
    }
    return g;
  }
  throw ParseError("group literals are 0, [[k,e],...], or {free, torsion}");
}

RawDescriptor raw_descriptor_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("descriptor must be a JSON object");
  RawDescriptor m;
  bool saw_wu = false;
  for (const auto& [key, value] : j.items()) {
    if (key == "r")
      m.r = as_int(value, "r");
    else if (key == "d")
      m.d = as_int(value, "d");
    else if (key == "H")
      m.h2_torsion = raw_group_from_json(value);
    else if (key == "T")
      m.h3_torsion = raw_group_from_json(value);
    else if (key == "wu") {
      if (!value.is_array()) throw ParseError("wu must be a list of integers");
      for (const auto& entry : value) m.wu.push_back(as_int(entry, "wu entry"));
      saw_wu = true;
    } else {
      throw ParseError("unknown descriptor field '" + key + "'");
    }
  }
  if (!saw_wu) throw ParseError("descriptor needs a wu list");
  return m;
}

RawDescriptor raw_descriptor_from_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return raw_descriptor_from_json(j);
}

json group_to_json(const AbelianGroup& g) {
  return {{"free", g.free_rank},
          {"torsion", factors_to_json(g.torsion)},
          {"text", render_group(g)}};
}

json descriptor_to_json(const ManifoldDescriptor& m) {
  json wu = json::array();
  for (int v : m.wu) wu.push_back(v);
  return {{"r", m.r},
          {"d", m.d},
          {"H", factors_to_json(m.h2_torsion.torsion)},
          {"T", factors_to_json(m.h3_torsion.torsion)},
          {"wu", wu}};
}

json atom_to_json(const Atom& a) {
  json j;
  if (const auto* s = std::get_if<Sphere>(&a)) {
    j["kind"] = "sphere";
    j["dim"] = s->dim;
  } else if (const auto* p = std::get_if<Moore>(&a)) {
    j["kind"] = "moore";
    j["dim"] = p->dim;
    j["prime"] = p->prime;
    j["exponent"] = p->exponent;
  } else if (const auto* c = std::get_if<Cone>(&a)) {
    j["kind"] = "cone";
    j["core"] = std::visit([](const auto& core) { return atom_to_json(core); },
                           c->core);
    j["map"] = tag_text(c->tag);
    j["top"] = c->top_dim;
  } else if (const auto* b = std::get_if<Bundle>(&a)) {
    j["kind"] = "bundle";
    j["rho"] = b->rho;
    j["nu"] = b->nu;
  }
  j["text"] = render(a);
  return j;
}

json wedge_to_json(const WedgeExpr& w) {
  json atoms = json::array();
  for (const auto& a : w.atoms()) atoms.push_back(atom_to_json(a));
  return {{"atoms", atoms}, {"text", render(w)}};
}

WedgeExpr wedge_from_json(const json& j) {
  if (j.is_string()) return parse_wedge(j.get<std::string>());
  if (j.is_object() && j.contains("text") && j["text"].is_string())
    return parse_wedge(j["text"].get<std::string>());
  throw ParseError("wedge JSON needs a 'text' field or a plain string");
}

json result_to_json(const DecompositionResult& r) {
  return {{"suspensions", r.suspensions},
          {"case", case_text(r.case_label)},
          {"wedge", wedge_to_json(r.wedge)},
          {"trace", r.trace}};
}

json report_to_json(const VerificationReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"degree", row.degree},
                    {"expected", render_group(row.expected)},
                    {"actual", render_group(row.actual)},
                    {"ok", row.ok}});
  return {{"pass", r.pass}, {"rows", rows}, {"trace", r.trace}};
}

}  // namespace susp7
