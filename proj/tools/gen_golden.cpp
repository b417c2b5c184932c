// Regenerates data/s4a4/*.json from the constructions in builtin.cpp, plus
// the restrictions used as counterexamples under data/remarks/.

#include "modbrick/builtin.hpp"
#include "modbrick/io.hpp"

#include <iostream>

int main(int argc, char** argv) {
  namespace mb = modbrick;
  if (argc != 2) {
    std::cerr << "usage: modbrick-golden <data-dir>\n";
    return 3;
  }
  const std::filesystem::path root = argv[1];
  std::filesystem::create_directories(root / "s4a4");
  std::filesystem::create_directories(root / "remarks");
  for (const auto& [name, mod] : mb::s4a4::generate()) {
    mb::write_json_file(root / "s4a4" / (name + ".json"), mb::module_to_json(mod.renamed(name), false));
    std::cout << "s4a4/" << name << " dim " << mod.dim() << "\n";
  }
  const auto& ex = mb::s4a4::example();
  const std::vector<std::pair<std::string, mb::Module>> remarks{
      {"kN_T2_on_N1", mb::restrict(ex.kn_t2, ex.n1)},
      {"kG_S2_on_N1", mb::restrict(ex.brick("kG_S2"), ex.n1)},
      {"kG_kG_on_N", mb::restrict(ex.kg_kg, ex.n)},
      {"kG_kG_on_N1", mb::restrict(ex.kg_kg, ex.n1)},
  };
  for (const auto& [name, mod] : remarks) {
    mb::write_json_file(root / "remarks" / (name + ".json"), mb::module_to_json(mod.renamed(name), false));
    std::cout << "remarks/" << name << " dim " << mod.dim() << "\n";
  }
  return 0;
}
