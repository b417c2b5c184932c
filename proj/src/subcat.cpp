#include "modbrick/subcat.hpp"

#include "modbrick/builtin.hpp"
#include "modbrick/clifford.hpp"
#include "modbrick/error.hpp"

namespace modbrick {

struct SubcatPredicate::Node {
  Kind kind;
  Group group;
  FieldSpec field;
  std::vector<Module> gens;
  std::vector<SubcatPredicate> children;
};

namespace {

void check_gens(const Group& g, const FieldSpec& f, const std::vector<Module>& gens) {
  for (const auto& m : gens) {
    if (!(m.group() == g)) raise(ErrorKind::GroupMismatch, "generator " + m.name() + " lives over another group");
    if (!(m.field() == f)) raise(ErrorKind::FieldMismatch, "generator " + m.name() + " lives over another field");
  }
}

std::string list_names(const std::vector<Module>& gens) {
  std::string s = "{";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + (gens[i].name().empty() ? "?" : gens[i].name());
  return s + "}";
}

bool hom_vanishes_from(const Module& x, const std::vector<Module>& gens) {
  for (const auto& c : gens)
    if (hom_dim(x, c) != 0) return false;
  return true;
}

bool hom_vanishes_to(const Module& x, const std::vector<Module>& gens) {
  for (const auto& c : gens)
    if (hom_dim(c, x) != 0) return false;
  return true;
}

bool in_torsion_closure(Module x, const std::vector<Module>& gens) {
  // peel off the trace of the generators until nothing is left
  while (x.dim() > 0) {
    const Matrix t = trace_in(x, gens);
    if (t.cols() == 0) return false;
    if (t.cols() == x.dim()) return true;
    x = quotient(x, t).module;
  }
  return true;
}

}  // namespace

SubcatPredicate SubcatPredicate::all(const Group& g, const FieldSpec& f) {
  return SubcatPredicate(std::make_shared<const Node>(Node{Kind::All, g, f, {}, {}}));
}

SubcatPredicate SubcatPredicate::filt(const Group& g, const FieldSpec& f, std::vector<Module> gens) {
  check_gens(g, f, gens);
  return SubcatPredicate(std::make_shared<const Node>(Node{Kind::Filt, g, f, std::move(gens), {}}));
}

SubcatPredicate SubcatPredicate::fac(const Group& g, const FieldSpec& f, std::vector<Module> gens) {
  check_gens(g, f, gens);
  return SubcatPredicate(std::make_shared<const Node>(Node{Kind::Fac, g, f, std::move(gens), {}}));
}

SubcatPredicate SubcatPredicate::tclose(const Group& g, const FieldSpec& f, std::vector<Module> gens) {
  check_gens(g, f, gens);
  return SubcatPredicate(std::make_shared<const Node>(Node{Kind::TClose, g, f, std::move(gens), {}}));
}

SubcatPredicate SubcatPredicate::perp_left(const SubcatPredicate& c) {
  if (c.kind() == Kind::Fac || c.kind() == Kind::TClose)
    raise(ErrorKind::HypothesisNotVerified, "left perpendicular of " + c.describe() + " is not supported");
  return SubcatPredicate(std::make_shared<const Node>(Node{Kind::PerpL, c.group(), c.field(), {}, {c}}));
}

SubcatPredicate SubcatPredicate::perp_right(const SubcatPredicate& c) {
  return SubcatPredicate(std::make_shared<const Node>(Node{Kind::PerpR, c.group(), c.field(), {}, {c}}));
}

SubcatPredicate SubcatPredicate::star(const SubcatPredicate& c, const SubcatPredicate& d) {
  if (!(c.group() == d.group())) raise(ErrorKind::GroupMismatch, "star of predicates over different groups");
  if (!(c.field() == d.field())) raise(ErrorKind::FieldMismatch, "star of predicates over different fields");
  return SubcatPredicate(std::make_shared<const Node>(Node{Kind::Star, c.group(), c.field(), {}, {c, d}}));
}

SubcatPredicate SubcatPredicate::res_inverse(const Group& ambient, const SubcatPredicate& c) {
  if (!ambient.has_subgroup(c.group())) raise(ErrorKind::NotASubgroup, "resinv: " + c.describe() + " is not over a subgroup");
  return SubcatPredicate(std::make_shared<const Node>(Node{Kind::ResInv, ambient, c.field(), {}, {c}}));
}

SubcatPredicate SubcatPredicate::ind_inverse(const Group& normal, const SubcatPredicate& d) {
  if (!d.group().has_subgroup(normal)) raise(ErrorKind::NotASubgroup, "indinv: not a subgroup of " + d.describe());
  if (!is_normal(d.group(), normal)) raise(ErrorKind::NotNormal, "indinv needs a normal subgroup");
  return SubcatPredicate(std::make_shared<const Node>(Node{Kind::IndInv, normal, d.field(), {}, {d}}));
}

SubcatPredicate SubcatPredicate::intersect(std::vector<SubcatPredicate> parts) {
  if (parts.empty()) raise(ErrorKind::ParseError, "intersect needs at least one part");
  for (const auto& p : parts) {
    if (!(p.group() == parts.front().group())) raise(ErrorKind::GroupMismatch, "intersect over different groups");
    if (!(p.field() == parts.front().field())) raise(ErrorKind::FieldMismatch, "intersect over different fields");
  }
  const Group g = parts.front().group();
  const FieldSpec f = parts.front().field();
  return SubcatPredicate(std::make_shared<const Node>(Node{Kind::Intersect, g, f, {}, std::move(parts)}));
}

SubcatPredicate::Kind SubcatPredicate::kind() const { return n_->kind; }
const Group& SubcatPredicate::group() const { return n_->group; }
FieldSpec SubcatPredicate::field() const { return n_->field; }
const std::vector<Module>& SubcatPredicate::generators() const { return n_->gens; }
const std::vector<SubcatPredicate>& SubcatPredicate::children() const { return n_->children; }

bool SubcatPredicate::is_generated() const {
  return n_->kind == Kind::Filt || n_->kind == Kind::Fac || n_->kind == Kind::TClose;
}

bool SubcatPredicate::contains(const Module& x, const Config& cfg) const {
  if (!(x.group() == group())) raise(ErrorKind::GroupMismatch, x.name() + " is not over the group of " + describe());
  if (!(x.field() == field())) raise(ErrorKind::FieldMismatch, x.name() + " is not over the field of " + describe());
  const auto& kids = n_->children;
  switch (n_->kind) {
    case Kind::All:
      return true;
    case Kind::Filt:
      return filt_member(x, n_->gens, cfg).has_value();
    case Kind::Fac:
      return trace_in(x, n_->gens).cols() == x.dim();
    case Kind::TClose:
      return in_torsion_closure(x, n_->gens);
    case Kind::PerpR: {
      const SubcatPredicate& c = kids.front();
      if (c.kind() == Kind::All) return x.dim() == 0;
      if (c.is_generated()) return hom_vanishes_to(x, c.generators());
      for (const auto& b : submodules(x, cfg))
        if (b.cols() > 0 && c.contains(submodule(x, b).module, cfg)) return false;
      return true;
    }
    case Kind::PerpL: {
      const SubcatPredicate& c = kids.front();
      if (c.kind() == Kind::All) return x.dim() == 0;
      if (c.kind() == Kind::Filt) return hom_vanishes_from(x, c.generators());
      for (const auto& b : submodules(x, cfg))
        if (b.cols() < x.dim() && c.contains(quotient(x, b).module, cfg)) return false;
      return true;
    }
    case Kind::Star:
      for (const auto& b : submodules(x, cfg))
        if (kids[0].contains(submodule(x, b).module, cfg) && kids[1].contains(quotient(x, b).module, cfg))
          return true;
      return false;
    case Kind::ResInv:
      return kids.front().contains(restrict(x, kids.front().group()), cfg);
    case Kind::IndInv:
      return kids.front().contains(induce(x, kids.front().group()), cfg);
    case Kind::Intersect:
      for (const auto& k : kids)
        if (!k.contains(x, cfg)) return false;
      return true;
  }
  return false;
}

std::string SubcatPredicate::describe() const {
  const auto& kids = n_->children;
  switch (n_->kind) {
    case Kind::All:
      return "mod";
    case Kind::Filt:
      return "Filt" + list_names(n_->gens);
    case Kind::Fac:
      return "Fac" + list_names(n_->gens);
    case Kind::TClose:
      return "T" + list_names(n_->gens);
    case Kind::PerpL:
      return "perpL(" + kids[0].describe() + ")";
    case Kind::PerpR:
      return "perpR(" + kids[0].describe() + ")";
    case Kind::Star:
      return "(" + kids[0].describe() + " * " + kids[1].describe() + ")";
    case Kind::ResInv:
      return "Res^-1(" + kids[0].describe() + ")";
    case Kind::IndInv:
      return "Ind^-1(" + kids[0].describe() + ")";
    case Kind::Intersect: {
      std::string s = "(";
      for (std::size_t i = 0; i < kids.size(); ++i) s += (i ? " & " : "") + kids[i].describe();
      return s + ")";
    }
  }
  return "?";
}

bool subcat_member(const Module& x, const SubcatPredicate& c, const Config& cfg) { return c.contains(x, cfg); }

ModuleResolver default_resolver(const std::filesystem::path& base_dir) {
  return [base_dir](const Json& j) -> Module {
    if (j.is_object()) return module_from_json(j);
    if (!j.is_string()) raise(ErrorKind::ParseError, "module reference must be an object or a string");
    const std::string ref = j.get<std::string>();
    const auto& texts = s4a4::golden_texts();
    if (auto it = texts.find(ref + ".json"); it != texts.end())
      return module_from_json(Json::parse(it->second)).renamed(ref);
    const std::filesystem::path p = std::filesystem::path(ref).is_absolute() ? std::filesystem::path(ref) : base_dir / ref;
    return read_module_file(p);
  };
}

SubcatPredicate predicate_from_json(const Json& j, const ModuleResolver& resolve) {
  if (!j.is_object() || !j.contains("op")) raise(ErrorKind::ParseError, "predicate needs an \"op\"");
  const std::string op = j.at("op").get<std::string>();
  const Json args = j.value("args", Json::array());
  if (!args.is_array()) raise(ErrorKind::ParseError, op + ": \"args\" must be an array");
  auto is_predicate = [](const Json& a) { return a.is_object() && a.contains("op"); };

  auto modules = [&] {
    std::vector<Module> out;
    for (const auto& m : args) out.push_back(resolve(m));
    return out;
  };
  auto group_field = [&](const std::vector<Module>& mods) -> std::pair<Group, FieldSpec> {
    if (mods.empty() && !(j.contains("group") && j.contains("field")))
      raise(ErrorKind::ParseError, op + " with no modules needs \"group\" and \"field\"");
    return {j.contains("group") ? group_from_json(j["group"]) : mods.front().group(),
            j.contains("field") ? field_from_json(j["field"]) : mods.front().field()};
  };
  auto predicates = [&](std::size_t count) {
    std::vector<SubcatPredicate> out;
    for (const auto& a : args) {
      if (!is_predicate(a)) raise(ErrorKind::ParseError, op + " takes predicates as arguments");
      out.push_back(predicate_from_json(a, resolve));
    }
    if (count && out.size() != count)
      raise(ErrorKind::ParseError, op + " takes " + std::to_string(count) + " argument(s)");
    return out;
  };

  try {
    if (op == "all") {
      auto [g, f] = group_field({});
      return SubcatPredicate::all(g, f);
    }
    if (op == "filt" || op == "fac" || op == "tclose") {
      auto mods = modules();
      auto [g, f] = group_field(mods);
      if (op == "filt") return SubcatPredicate::filt(g, f, std::move(mods));
      if (op == "fac") return SubcatPredicate::fac(g, f, std::move(mods));
      return SubcatPredicate::tclose(g, f, std::move(mods));
    }
    if (op == "perpL" || op == "perpR") {
      SubcatPredicate c = [&] {
        if (args.size() == 1 && is_predicate(args[0])) return predicates(1).front();
        auto mods = modules();
        auto [g, f] = group_field(mods);
        return SubcatPredicate::filt(g, f, std::move(mods));
      }();
      return op == "perpL" ? SubcatPredicate::perp_left(c) : SubcatPredicate::perp_right(c);
    }
    if (op == "star") {
      auto p = predicates(2);
      return SubcatPredicate::star(p[0], p[1]);
    }
    if (op == "resinv" || op == "indinv") {
      if (!j.contains("group")) raise(ErrorKind::ParseError, op + " needs \"group\"");
      const Group g = group_from_json(j["group"]);
      auto p = predicates(1);
      return op == "resinv" ? SubcatPredicate::res_inverse(g, p[0]) : SubcatPredicate::ind_inverse(g, p[0]);
    }
    if (op == "intersect") return SubcatPredicate::intersect(predicates(0));
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::ParseError, std::string("predicate: ") + e.what());
  }
  raise(ErrorKind::ParseError, "unknown predicate op \"" + op + "\"");
}

std::optional<bool> predicate_is_G_invariant(const SubcatPredicate& c, const Group& ambient, const Config& cfg) {
  if (c.kind() == SubcatPredicate::Kind::All) return true;
  if (!c.is_generated()) return std::nullopt;
  const CosetSystem cs = coset_reps(ambient, c.group());
  for (const auto& m : c.generators())
    for (std::size_t i = 1; i < cs.index(); ++i)
      if (!c.contains(conjugate(ambient.element(cs.rep(i)), m), cfg)) return false;
  return true;
}

namespace {

std::optional<bool> is_tensor_stable_predicate(const SubcatPredicate& d, const Group& normal, const Config& cfg) {
  if (d.kind() == SubcatPredicate::Kind::All) return true;
  if (!d.is_generated()) return std::nullopt;
  const Module perm = perm_module(d.group(), normal, d.field());
  for (const auto& m : d.generators())
    if (!d.contains(tensor(perm, m), cfg)) return false;
  return true;
}

std::optional<bool> both(std::optional<bool> a, std::optional<bool> b) {
  if (a == false || b == false) return false;
  if (a && b) return true;
  return std::nullopt;
}

IdentityCheck compare(std::string name, const SubcatPredicate& lhs, const SubcatPredicate& rhs,
                      const std::vector<Module>& corpus, const Config& cfg) {
  IdentityCheck out{std::move(name), 0, {}, std::nullopt};
  for (const auto& x : corpus) {
    ++out.checked;
    if (lhs.contains(x, cfg) != rhs.contains(x, cfg)) out.discrepancies.push_back(x.name());
  }
  return out;
}

}  // namespace

std::vector<IdentityCheck> check_roundtrips(const SubcatPredicate& c_n, const SubcatPredicate& d_g,
                                            const std::vector<Module>& corpus_n, const std::vector<Module>& corpus_g,
                                            const Config& cfg) {
  const Group& g = d_g.group();
  const Group& n = c_n.group();
  auto c_round = SubcatPredicate::ind_inverse(n, SubcatPredicate::res_inverse(g, c_n));
  auto d_round = SubcatPredicate::res_inverse(g, SubcatPredicate::ind_inverse(n, d_g));
  std::vector<IdentityCheck> out;
  out.push_back(compare("C = Ind^-1 Res^-1 C", c_n, c_round, corpus_n, cfg));
  out.back().hypothesis = predicate_is_G_invariant(c_n, g, cfg);
  out.push_back(compare("D = Res^-1 Ind^-1 D", d_g, d_round, corpus_g, cfg));
  out.back().hypothesis = is_tensor_stable_predicate(d_g, n, cfg);
  return out;
}

std::vector<IdentityCheck> check_heart_transport(const SubcatPredicate& u_n, const SubcatPredicate& t_n,
                                                 const Group& ambient, const std::vector<Module>& corpus_g,
                                                 const Config& cfg) {
  using P = SubcatPredicate;
  const P heart_n = P::intersect({t_n, P::perp_right(u_n)});
  const P lhs = P::res_inverse(ambient, heart_n);
  const P rhs = P::intersect({P::res_inverse(ambient, t_n), P::perp_right(P::res_inverse(ambient, u_n))});
  const auto hyp = both(predicate_is_G_invariant(u_n, ambient, cfg), predicate_is_G_invariant(t_n, ambient, cfg));
  std::vector<IdentityCheck> out;
  out.push_back(compare("Res^-1 heart[U,T] = heart[Res^-1 U, Res^-1 T]", lhs, rhs, corpus_g, cfg));
  out.back().hypothesis = hyp;
  out.push_back(compare("Res^-1 (T^perp) = (Res^-1 T)^perp", P::res_inverse(ambient, P::perp_right(t_n)),
                        P::perp_right(P::res_inverse(ambient, t_n)), corpus_g, cfg));
  out.back().hypothesis = predicate_is_G_invariant(t_n, ambient, cfg);
  return out;
}

IdentityCheck check_fac_ind(const Module& x, const Group& ambient, const std::vector<Module>& corpus_g,
                            const Config& cfg) {
  const Group& n = x.group();
  const FieldSpec f = x.field();
  const CosetSystem cs = coset_reps(ambient, n);
  const Decomposition dec = x.dim() > 0 ? decompose(x, cfg) : Decomposition{x, {}, Matrix()};
  for (const auto& [u, mult] : dec.summands) {
    for (std::size_t i = 1; i < cs.index(); ++i) {
      const Module gu = conjugate(ambient.element(cs.rep(i)), u);
      bool found = false;
      for (const auto& [v, m2] : dec.summands)
        if (v.dim() == gu.dim() && is_isomorphic(gu, v, cfg)) found = true;
      if (!found)
        raise(ErrorKind::NotGInvariantModule,
              "add " + x.name() + " is not G-invariant: summand " + u.name() + " moves outside it");
    }
  }
  using P = SubcatPredicate;
  IdentityCheck out = compare("Fac(Ind X) = Res^-1 Fac X", P::fac(ambient, f, {induce(x, ambient)}),
                              P::res_inverse(ambient, P::fac(n, f, {x})), corpus_g, cfg);
  out.hypothesis = true;
  return out;
}

std::vector<IdentityCheck> check_ginv_closures(const SubcatPredicate& c_n, const SubcatPredicate& d_n,
                                               const Group& ambient, const std::vector<Module>& corpus_n,
                                               const Config& cfg) {
  using P = SubcatPredicate;
  if (!c_n.is_generated() || !d_n.is_generated())
    raise(ErrorKind::HypothesisNotVerified, "check_ginv_closures needs generated predicates");
  const Group& n = c_n.group();
  const FieldSpec f = c_n.field();
  const auto hyp = both(predicate_is_G_invariant(c_n, ambient, cfg), predicate_is_G_invariant(d_n, ambient, cfg));
  const std::vector<std::pair<std::string, P>> items{
      {"intersection", P::intersect({c_n, d_n})},
      {"Fac", P::fac(n, f, c_n.generators())},
      {"star", P::star(c_n, d_n)},
      {"Filt", P::filt(n, f, c_n.generators())},
      {"perpL", P::perp_left(P::filt(n, f, c_n.generators()))},
      {"perpR", P::perp_right(c_n)},
      {"T", P::tclose(n, f, c_n.generators())},
  };
  const CosetSystem cs = coset_reps(ambient, n);
  std::vector<IdentityCheck> out;
  for (const auto& [name, pred] : items) {
    IdentityCheck chk{name + " is G-invariant", 0, {}, hyp};
    for (const auto& x : corpus_n) {
      const bool in = pred.contains(x, cfg);
      for (std::size_t i = 1; i < cs.index(); ++i) {
        ++chk.checked;
        if (pred.contains(conjugate(ambient.element(cs.rep(i)), x), cfg) != in)
          chk.discrepancies.push_back(x.name() + " under " + ambient.word_string(cs.rep(i)));
      }
    }
    out.push_back(std::move(chk));
  }
  return out;
}

IdentityCheck check_sbrick_square(const std::vector<Module>& semibrick, const Group& normal,
                                  const std::vector<Module>& corpus_n, const Config& cfg) {
  using P = SubcatPredicate;
  if (semibrick.empty()) raise(ErrorKind::NotASemibrick, "check_sbrick_square needs a nonempty semibrick");
  const Group& g = semibrick.front().group();
  const FieldSpec f = semibrick.front().field();
  const RestrictedSemibrick res = restrict_semibrick(semibrick, normal, cfg);
  IdentityCheck out = compare("Ind^-1 Filt S = Filt Res S", P::ind_inverse(normal, P::filt(g, f, semibrick)),
                              P::filt(normal, f, res.members), corpus_n, cfg);
  out.hypothesis = res.certified;
  return out;
}

}  // namespace modbrick
