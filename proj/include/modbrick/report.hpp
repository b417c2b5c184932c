#pragma once

// JSON forms of the library's certificates, as emitted by the CLI.

#include "modbrick/clifford.hpp"
#include "modbrick/io.hpp"
#include "modbrick/smc.hpp"
#include "modbrick/subcat.hpp"

namespace modbrick {

/// {"name", "dim"} only; full matrices go through module_to_json.
Json module_ref_json(const Module& m);
Json decomposition_to_json(const Decomposition& d);
Json filtration_to_json(const Filtration& f, const std::vector<Module>& members);
Json clifford_to_json(const CliffordReport& r);
Json smc_certificate_to_json(const SmcCertificate& c);
Json shifted_items_to_json(const std::vector<ShiftedModule>& items, bool full_modules);
Json identity_check_to_json(const IdentityCheck& c);

/// {"items": [{"module": <file or inline>, "shift": 0|1}, ...]}
std::vector<ShiftedModule> shifted_items_from_json(const Json& j, const ModuleResolver& resolve);

}  // namespace modbrick
