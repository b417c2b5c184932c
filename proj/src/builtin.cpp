#include "modbrick/builtin.hpp"

#include "modbrick/error.hpp"
#include "modbrick/hom.hpp"
#include "modbrick/io.hpp"

#include <mutex>

namespace modbrick::detail {
const std::map<std::string, std::string>& golden_files();
}

namespace modbrick::s4a4 {

namespace {

// S4 permutes the three ways {0,i}|{rest} of splitting 4 points into pairs.
Index pairing_image(const Perm& p, Index i) {
  const int a = p[0];
  const int b = p[i + 1];
  int partner_of_zero;
  if (a == 0) {
    partner_of_zero = b;
  } else if (b == 0) {
    partner_of_zero = a;
  } else {
    partner_of_zero = 6 - a - b;  // the remaining point of {1, 2, 3}
  }
  return partner_of_zero - 1;
}

Index top_dim(const Module& m, const std::vector<Module>& simples) {
  Index d = 0;
  for (const auto& s : simples) d += hom_dim(m, s) * s.dim();
  return d;
}

}  // namespace

Module build_s2(const FieldSpec& f) {
  const Group g = groups::symmetric(4);
  std::vector<Matrix> perm;
  for (const auto& [name, p] : g.generators()) {
    Matrix m = zeros(f, 3, 3);
    for (Index i = 0; i < 3; ++i) m(pairing_image(p, i), i) = f.one();
    perm.push_back(std::move(m));
  }
  const Module pairings = module_make(g, f, 3, perm, "k[pairings]");
  Matrix sum_zero = zeros(f, 3, 2);
  sum_zero(0, 0) = sum_zero(1, 0) = f.one();
  sum_zero(1, 1) = sum_zero(2, 1) = f.one();
  const auto sub = submodule(pairings, sum_zero);
  return module_make(g, f, 2, sub.module.action(), "S2");
}

Module build_t(const FieldSpec& f, int power) {
  const FieldElem w = f.generator();
  return linear_character(groups::alternating4(), f, {w.pow(power), f.one()}, "T" + std::to_string(power));
}

std::optional<Module> find_layered(const Module& quotient, const Module& sub, const Module& top, const Module& socle,
                                   const std::vector<Module>& simples, std::string name, const Config& cfg) {
  const ExtensionSpace ext = extension_space(quotient, sub);
  std::optional<Module> found;
  for_each_projective(quotient.field(), ext.dim(), [&](const std::vector<FieldElem>& c) {
    std::vector<Matrix> cocycle;
    for (std::size_t s = 0; s < quotient.group().num_generators(); ++s) {
      Matrix block = zeros(quotient.field(), sub.dim(), quotient.dim());
      for (std::size_t i = 0; i < c.size(); ++i) block += c[i] * ext.reps[i][s];
      cocycle.push_back(std::move(block));
    }
    Module e = extension_module(quotient, sub, cocycle, name);
    if (hom_dim(e, top) != 1 || top_dim(e, simples) != top.dim()) return false;
    if (hom_dim(socle, e) != 1 || trace_in(e, simples).cols() != socle.dim()) return false;
    if (!is_brick(e, cfg)) return false;
    found = std::move(e);
    return true;
  });
  return found;
}

std::vector<std::pair<std::string, Module>> generate(const Config& cfg) {
  const FieldSpec f = gf_make(2, 2);
  const Group g = groups::symmetric(4);
  const Group n = groups::alternating4();
  const Module kg = trivial_module(g, f).renamed("kG");
  const Module s2 = build_s2(f);
  const Module kn = trivial_module(n, f).renamed("kN");
  const Module t1 = build_t(f, 1);
  const Module t2 = build_t(f, 2);
  const std::vector<Module> simples_g{kg, s2};
  const std::vector<Module> simples_n{kn, t1, t2};

  const ExtensionSpace self = extension_space(kg, kg);
  if (self.dim() == 0) raise(ErrorKind::NotABrick, "k_G has no self-extension");
  const Module kk = extension_module(kg, kg, self.reps[0], "kG_kG");

  auto need = [](std::optional<Module> m, const std::string& what) {
    if (!m) raise(ErrorKind::NotABrick, "no module with the layers of " + what);
    return *m;
  };
  std::vector<std::pair<std::string, Module>> out;
  out.emplace_back("kG", kg);
  out.emplace_back("S2", s2);
  out.emplace_back("S2_kG_kG", need(find_layered(s2, kk, s2, kg, simples_g, "S2_kG_kG", cfg), "S2_kG_kG"));
  out.emplace_back("kG_S2", need(find_layered(kg, s2, kg, s2, simples_g, "kG_S2", cfg), "kG_S2"));
  out.emplace_back("S2_kG", need(find_layered(s2, kg, s2, kg, simples_g, "S2_kG", cfg), "S2_kG"));
  out.emplace_back("kG_kG_S2", need(find_layered(kk, s2, kg, s2, simples_g, "kG_kG_S2", cfg), "kG_kG_S2"));
  out.emplace_back("kG_kG", kk);
  out.emplace_back("kN", kn);
  out.emplace_back("T1", t1);
  out.emplace_back("T2", t2);
  out.emplace_back("kN_T2", need(find_layered(kn, t2, kn, t2, simples_n, "kN_T2", cfg), "kN_T2"));
  out.emplace_back("T1_kN", need(find_layered(t1, kn, t1, kn, simples_n, "T1_kN", cfg), "T1_kN"));
  return out;
}

const std::vector<std::string>& golden_names() {
  static const std::vector<std::string> names{"kG", "S2", "S2_kG_kG", "kG_S2", "S2_kG", "kG_kG_S2",
                                              "kG_kG", "kN", "T1", "T2", "kN_T2", "T1_kN"};
  return names;
}

const std::map<std::string, std::string>& golden_texts() { return detail::golden_files(); }

const Module& Example::brick(const std::string& name) const {
  for (const auto& b : bricks)
    if (b.name() == name) return b;
  raise(ErrorKind::ParseError, "no brick named " + name);
}

const Example& example() {
  static std::once_flag once;
  static std::unique_ptr<Example> ex;
  std::call_once(once, [] {
    std::map<std::string, Module> mods;
    for (const auto& name : golden_names()) {
      auto it = golden_texts().find(name + ".json");
      if (it == golden_texts().end()) raise(ErrorKind::ParseError, "golden file " + name + ".json is missing");
      mods.emplace(name, module_from_json(Json::parse(it->second)));
    }
    const Module& kg = mods.at("kG");
    ex = std::make_unique<Example>(Example{
        kg.field(), kg.group(), mods.at("kN").group(), groups::klein4(), perm_from_cycles(4, {{0, 1}}),
        kg, mods.at("S2"), mods.at("kN"), mods.at("T1"), mods.at("T2"),
        {kg, mods.at("S2"), mods.at("S2_kG_kG"), mods.at("kG_S2"), mods.at("S2_kG"), mods.at("kG_kG_S2")},
        mods.at("kG_kG"), mods.at("kN_T2"), mods.at("T1_kN")});
  });
  return *ex;
}

}  // namespace modbrick::s4a4
