#include "modbrick/report.hpp"

#include "modbrick/error.hpp"

namespace modbrick {

Json module_ref_json(const Module& m) { return Json{{"name", m.name()}, {"dim", m.dim()}}; }

Json decomposition_to_json(const Decomposition& d) {
  Json summands = Json::array();
  for (const auto& [m, mult] : d.summands) summands.push_back({{"dim", m.dim()}, {"multiplicity", mult}});
  return Json{{"module", module_ref_json(d.original)}, {"summands", summands}};
}

Json filtration_to_json(const Filtration& f, const std::vector<Module>& members) {
  Json layers = Json::array();
  for (std::size_t i = 0; i < f.length(); ++i)
    layers.push_back({{"dim", f.chain[i].cols()}, {"quotient", members[f.quotient_tags[i]].name()}});
  return Json{{"length", f.length()}, {"layers", layers}};
}

Json clifford_to_json(const CliffordReport& r) {
  Json summands = Json::array();
  for (std::size_t i = 0; i < r.summands.size(); ++i) {
    const auto& s = r.summands[i];
    Json w = r.transitivity_witnesses[i] ? perm_to_json(*r.transitivity_witnesses[i]) : Json();
    summands.push_back({{"dim", s.dim}, {"multiplicity", s.multiplicity}, {"conjugator", w}});
  }
  return Json{{"brick", module_ref_json(r.brick)},
              {"normal_order", r.normal.order()},
              {"p_power_index", r.p_power_index},
              {"summands", summands},
              {"semibrick", r.semibrick_certificate},
              {"transitive", r.transitive},
              {"equal_dims", r.equal_dims},
              {"equal_multiplicities", r.equal_mults},
              {"witness", matrix_to_json(r.brick.field(), r.decomposition_witness)},
              {"holds", r.holds()}};
}

Json smc_certificate_to_json(const SmcCertificate& c) {
  return Json{{"bricks", c.bricks},
              {"hom_within_degree", c.hom_within_degree},
              {"hom_across", c.hom_across},
              {"ext_across", c.ext_across},
              {"k0_unimodular", c.k0_unimodular},
              {"k0_note", "necessary-only condition for thick generation"},
              {"k0", c.k0},
              {"k0_determinant", c.k0_determinant},
              {"failures", c.failures},
              {"passes", c.passes()}};
}

Json shifted_items_to_json(const std::vector<ShiftedModule>& items, bool full_modules) {
  Json out = Json::array();
  for (const auto& it : items)
    out.push_back({{"module", full_modules ? module_to_json(it.module, false) : module_ref_json(it.module)},
                   {"shift", it.shift}});
  return Json{{"items", out}};
}

Json identity_check_to_json(const IdentityCheck& c) {
  return Json{{"identity", c.name},
              {"checked", c.checked},
              {"discrepancies", c.discrepancies},
              {"hypothesis", c.hypothesis ? Json(*c.hypothesis) : Json()}};
}

std::vector<ShiftedModule> shifted_items_from_json(const Json& j, const ModuleResolver& resolve) {
  if (!j.is_object() || !j.contains("items") || !j["items"].is_array())
    raise(ErrorKind::ParseError, "collection needs an \"items\" array");
  std::vector<ShiftedModule> out;
  for (const auto& it : j["items"]) {
    if (!it.is_object() || !it.contains("module")) raise(ErrorKind::ParseError, "item needs a \"module\"");
    const int shift = it.value("shift", 0);
    if (shift != 0 && shift != 1) raise(ErrorKind::ParseError, "shift must be 0 or 1");
    out.push_back({resolve(it["module"]), shift});
  }
  return out;
}

}  // namespace modbrick
