#include "modbrick/suite.hpp"

#include "modbrick/builtin.hpp"
#include "modbrick/clifford.hpp"
#include "modbrick/corpus.hpp"
#include "modbrick/error.hpp"
#include "modbrick/report.hpp"
#include "modbrick/smc.hpp"
#include "modbrick/subcat.hpp"
#include "rng.hpp"

#include <algorithm>
#include <chrono>
#include <map>

namespace modbrick {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Indeterminate:
      return "indeterminate";
  }
  return "fail";
}

Verdict SuiteReport::overall() const {
  if (count(Verdict::Fail) > 0) return Verdict::Fail;
  if (count(Verdict::Indeterminate) > 0) return Verdict::Indeterminate;
  return Verdict::Pass;
}

std::size_t SuiteReport::count(Verdict v) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [v](const auto& c) { return c.verdict == v; }));
}

Json check_result_to_json(const CheckResult& r) {
  return Json{{"id", r.id}, {"anchor", r.anchor}, {"verdict", std::string(to_string(r.verdict))}, {"witness", r.witness}};
}

namespace {

bool iso(const Module& a, const Module& b, const Config& cfg) {
  return a.dim() == b.dim() && is_isomorphic(a, b, cfg).has_value();
}

/// Index of the first entry isomorphic to m.
std::optional<std::size_t> find_iso(const Module& m, const std::vector<Module>& list, const Config& cfg) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (iso(m, list[i], cfg)) return i;
  return std::nullopt;
}

Json dims_json(const std::vector<Module>& mods) {
  Json out = Json::array();
  for (const auto& m : mods) out.push_back(m.dim());
  return out;
}

/// Res = U + gU with U isomorphic to `ref` and gU not isomorphic to U.
bool swapped_pair(const Decomposition& d, const Module& ref, const Perm& odd, Json& w, const Config& cfg) {
  w["restriction"] = decomposition_to_json(d);
  if (d.summands.size() != 2 || d.summands[0].second != 1 || d.summands[1].second != 1) return false;
  const Module gref = conjugate(odd, ref);
  const auto& a = d.summands[0].first;
  const auto& b = d.summands[1].first;
  const bool ok = (iso(a, ref, cfg) && iso(b, gref, cfg)) || (iso(b, ref, cfg) && iso(a, gref, cfg));
  w["matches"] = ref.name() + " and its conjugate";
  w["conjugate_differs"] = !iso(ref, gref, cfg);
  return ok && !iso(ref, gref, cfg);
}

/// Samples `count` pairs (i, j) with dim_a[i] * dim_b[j] * scale <= bound.
std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(const std::vector<Module>& a, const std::vector<Module>& b,
                                                              Index scale, Index bound, std::size_t count,
                                                              std::uint64_t seed) {
  std::vector<std::pair<std::size_t, std::size_t>> all;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (a[i].dim() * b[j].dim() * scale <= bound) all.emplace_back(i, j);
  detail::Rng rng(seed, 0x9A1);
  for (std::size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[rng.below(i)]);
  if (all.size() > count) all.resize(count);
  std::sort(all.begin(), all.end());
  return all;
}

const char* kExample = "Example (example:a4ands4)";
const char* kRemark = "Remark after Example";

// ---------------------------------------------------------------- s4a4

std::vector<SuiteCheck> s4a4_checks(const Config& cfg) {
  const auto& ex = s4a4::example();
  std::vector<SuiteCheck> out;

  out.push_back({"s4a4.simples.kG", kExample, [&ex, cfg](Json& w) {
                   const auto sims = simples_of(ex.g, ex.field, cfg);
                   w["dims"] = dims_json(sims);
                   return sims.size() == 2 && sims[0].dim() == 1 && sims[1].dim() == 2 && iso(sims[0], ex.k_g, cfg) &&
                          iso(sims[1], ex.s2, cfg);
                 }});
  out.push_back({"s4a4.simples.kN", kExample, [&ex, cfg](Json& w) {
                   const auto sims = simples_of(ex.n, ex.field, cfg);
                   w["dims"] = dims_json(sims);
                   if (sims.size() != 3) return false;
                   std::vector<bool> hit(3, false);
                   for (const auto& s : sims)
                     if (auto i = find_iso(s, {ex.k_n, ex.t1, ex.t2}, cfg)) hit[*i] = true;
                   return hit[0] && hit[1] && hit[2];
                 }});

  const std::vector<Index> brick_dims{1, 2, 4, 3, 3, 4};
  for (std::size_t i = 0; i < ex.bricks.size(); ++i) {
    const Module b = ex.bricks[i];
    const Index want = brick_dims[i];
    out.push_back({"s4a4.brick." + b.name(), kExample, [b, want, cfg](Json& w) {
                     w["dim"] = b.dim();
                     w["end_dim"] = hom_dim(b, b);
                     return b.dim() == want && is_brick(b, cfg);
                   }});
    out.push_back({"s4a4.clifford." + b.name(), "Thm (thm:main)", [&ex, b, cfg](Json& w) {
                     const CliffordReport r = clifford_decompose(b, ex.n, std::nullopt, cfg);
                     w = clifford_to_json(r);
                     w.erase("witness");
                     return r.holds();
                   }});
  }

  auto res_check = [&](const std::string& name, std::function<bool(const Decomposition&, Json&)> expect) {
    const Module b = ex.brick(name);
    out.push_back({"s4a4.res." + name, kExample, [&ex, b, expect, cfg](Json& w) {
                     const Decomposition d = decompose(restrict(b, ex.n), cfg);
                     w["restriction"] = decomposition_to_json(d);
                     return expect(d, w);
                   }});
  };
  res_check("kG", [&ex, cfg](const Decomposition& d, Json&) {
    return d.summands.size() == 1 && d.summands[0].second == 1 && iso(d.summands[0].first, ex.k_n, cfg);
  });
  res_check("S2", [&ex, cfg](const Decomposition& d, Json&) {
    if (d.summands.size() != 2 || d.summands[0].second != 1 || d.summands[1].second != 1) return false;
    const auto a = find_iso(d.summands[0].first, {ex.t1, ex.t2}, cfg);
    const auto b = find_iso(d.summands[1].first, {ex.t1, ex.t2}, cfg);
    return a && b && *a != *b;
  });
  res_check("S2_kG_kG", [&ex, cfg](const Decomposition& d, Json& w) { return swapped_pair(d, ex.t1_kn, ex.odd, w, cfg); });
  res_check("kG_kG_S2", [&ex, cfg](const Decomposition& d, Json& w) { return swapped_pair(d, ex.kn_t2, ex.odd, w, cfg); });
  // [k_N; T1 + T2] and [T1 + T2; k_N]: one indecomposable brick with the displayed top and socle
  auto three = [&ex, cfg](bool top_trivial) {
    return [&ex, cfg, top_trivial](const Decomposition& d, Json& w) {
      if (d.summands.size() != 1 || d.summands[0].second != 1 || d.summands[0].first.dim() != 3) return false;
      const Module& m = d.summands[0].first;
      const Index top_k = hom_dim(m, ex.k_n), top_t = hom_dim(m, ex.t1) + hom_dim(m, ex.t2);
      const Index soc_k = hom_dim(ex.k_n, m), soc_t = hom_dim(ex.t1, m) + hom_dim(ex.t2, m);
      w["top"] = {{"kN", top_k}, {"T", top_t}};
      w["socle"] = {{"kN", soc_k}, {"T", soc_t}};
      const bool layers = top_trivial ? (top_k == 1 && top_t == 0 && soc_k == 0 && soc_t == 2)
                                      : (top_k == 0 && top_t == 2 && soc_k == 1 && soc_t == 0);
      return layers && is_brick(m, cfg);
    };
  };
  res_check("kG_S2", three(true));
  res_check("S2_kG", three(false));

  out.push_back({"s4a4.conjugate.T1", kExample, [&ex, cfg](Json& w) {
                   const bool swapped = iso(conjugate(ex.odd, ex.t1), ex.t2, cfg);
                   const bool distinct = !iso(ex.t1, ex.t2, cfg);
                   w["gT1_iso_T2"] = swapped;
                   w["T1_iso_T2"] = !distinct;
                   return swapped && distinct;
                 }});

  out.push_back({"s4a4.kG_kG.not_brick", "Remark after prop:converse", [&ex, cfg](Json& w) {
                   w["end_dim"] = hom_dim(ex.kg_kg, ex.kg_kg);
                   return !is_brick(ex.kg_kg, cfg);
                 }});
  out.push_back({"s4a4.kG_kG.res_N", "Remark after prop:converse", [&ex, cfg](Json& w) {
                   const Module r = restrict(ex.kg_kg, ex.n);
                   const Module want = direct_sum(ex.n, ex.field, {ex.k_n, ex.k_n});
                   w["iso_kN_kN"] = iso(r, want, cfg);
                   return iso(r, want, cfg) && is_semibrick_module(r, cfg);
                 }});
  out.push_back({"s4a4.kG_kG.res_N1", "Remark after prop:converse", [&ex, cfg](Json& w) {
                   const Module r = restrict(ex.kg_kg, ex.n1);
                   const Module k = trivial_module(ex.n1, ex.field);
                   w["iso_k_k"] = iso(r, direct_sum(ex.n1, ex.field, {k, k}), cfg);
                   return w["iso_k_k"].get<bool>() && is_semibrick_module(r, cfg);
                 }});

  out.push_back({"s4a4.remark.kN_T2.brick", kRemark, [&ex, cfg](Json& w) {
                   w["end_dim"] = hom_dim(ex.kn_t2, ex.kn_t2);
                   return is_brick(ex.kn_t2, cfg);
                 }});
  out.push_back({"s4a4.remark.kN_T2.res_N1", kRemark, [&ex, cfg](Json& w) {
                   const Module r = restrict(ex.kn_t2, ex.n1);
                   w["restriction"] = decomposition_to_json(decompose(r, cfg));
                   w["indecomposable"] = is_indecomposable(r, cfg);
                   return !is_semibrick_module(r, cfg) && is_indecomposable(r, cfg);
                 }});
  out.push_back({"s4a4.remark.kG_S2.res_N1", kRemark, [&ex, cfg](Json& w) {
                   const Module r = restrict(ex.brick("kG_S2"), ex.n1);
                   w["restriction"] = decomposition_to_json(decompose(r, cfg));
                   return !is_semibrick_module(r, cfg);
                 }});
  out.push_back({"s4a4.remark.clifford_N1", kRemark, [&ex, cfg](Json& w) {
                   try {
                     clifford_decompose(ex.brick("kG_S2"), ex.n1, std::nullopt, cfg);
                   } catch (const Error& e) {
                     w["error"] = std::string(to_string(e.kind()));
                     return e.kind() == ErrorKind::HypothesisNotVerified;
                   }
                   w["error"] = nullptr;
                   return false;
                 }});
  out.push_back({"s4a4.remark.tensor_stable_N1", "Def (def:tensor-stable)", [&ex, cfg](Json& w) {
                   const bool stable = is_tensor_stable({ex.brick("kG_S2")}, ex.n1, cfg);
                   w["stable"] = stable;
                   return !stable;
                 }});

  out.push_back({"s4a4.golden.regenerate", kExample, [&ex, cfg](Json& w) {
                   std::map<std::string, Module> golden;
                   for (const auto& name : s4a4::golden_names())
                     golden.emplace(name, module_from_json(Json::parse(s4a4::golden_texts().at(name + ".json"))));
                   Json mismatched = Json::array();
                   for (const auto& [name, m] : s4a4::generate(cfg))
                     if (!iso(m, golden.at(name), cfg)) mismatched.push_back(name);
                   w["mismatched"] = mismatched;
                   return mismatched.empty();
                 }});
  out.push_back({"s4a4.absolute.GF16", kExample, [&ex, cfg](Json& w) {
                   // End = k over GF(4) already means End = k over any extension
                   const FieldEmbedding emb(ex.field, gf_make(2, 4));
                   Json end_dims = Json::array();
                   bool ok = true;
                   for (const auto& b : ex.bricks) {
                     const Module big = extend_scalars(b, emb);
                     end_dims.push_back(hom_dim(big, big));
                     ok = ok && is_brick(big, cfg);
                   }
                   ok = ok && is_simple(extend_scalars(ex.s2, emb), cfg);
                   w["end_dims"] = end_dims;
                   return ok;
                 }});
  return out;
}

// ---------------------------------------------------------------- functor identities

std::vector<SuiteCheck> functor_checks(const Config& cfg) {
  std::vector<SuiteCheck> out;
  for (const auto& gp : standard_pairs()) {
    const std::string tag = gp.name;
    const std::size_t idx = CosetSystem(gp.ambient, gp.normal).index();
    const Index scale = static_cast<Index>(idx);

    out.push_back({"functor.mackey." + tag, "Prop (prop:Mackey)", [gp, cfg](Json& w) {
                     const auto corpus = corpus_for(gp.normal, gp.field, 64, 4, cfg);
                     const CosetSystem cs = coset_reps(gp.ambient, gp.normal);
                     Json bad = Json::array();
                     for (const auto& u : corpus) {
                       std::vector<Module> parts;
                       for (std::size_t i = 0; i < cs.index(); ++i)
                         parts.push_back(conjugate(gp.ambient.element(cs.rep(i)), u));
                       if (!iso(restrict(induce(u, gp.ambient), gp.normal), direct_sum(gp.normal, gp.field, parts), cfg))
                         bad.push_back(u.name());
                     }
                     w["checked"] = corpus.size();
                     w["failures"] = bad;
                     return bad.empty();
                   }});
    out.push_back({"functor.indres." + tag, "Prop (prop:indres)", [gp, cfg](Json& w) {
                     const auto corpus = corpus_for(gp.ambient, gp.field, 64, 4, cfg);
                     const Module perm = perm_module(gp.ambient, gp.normal, gp.field);
                     Json bad = Json::array();
                     for (const auto& m : corpus)
                       if (!iso(induce(restrict(m, gp.normal), gp.ambient), tensor(perm, m), cfg)) bad.push_back(m.name());
                     w["checked"] = corpus.size();
                     w["failures"] = bad;
                     return bad.empty();
                   }});

    // (V over kN, U over kG) pairs; identity (1) builds modules of dim index * dim V * dim U
    auto pairs_check = [&](const std::string& which, const std::string& anchor, Index bound,
                           std::function<bool(const Module&, const Module&, Json&)> holds) {
      out.push_back({"functor." + which + "." + tag, anchor, [gp, cfg, scale, bound, holds](Json& w) {
                       const auto vs = corpus_for(gp.normal, gp.field, 64, 4, cfg);
                       const auto us = corpus_for(gp.ambient, gp.field, 64, 4, cfg);
                       const auto pairs = sample_pairs(vs, us, scale, bound, 48, cfg.seed);
                       Json bad = Json::array();
                       for (const auto& [i, j] : pairs) {
                         Json detail;
                         if (!holds(vs[i], us[j], detail)) bad.push_back({{"V", vs[i].name()}, {"U", us[j].name()}, {"detail", detail}});
                       }
                       w["pairs"] = pairs.size();
                       w["failures"] = bad;
                       return bad.empty() && pairs.size() >= 32;
                     }});
    };
    pairs_check("al1", "Prop (prop:Al)(1)", 24, [gp, cfg](const Module& v, const Module& u, Json&) {
      return iso(induce(tensor(v, restrict(u, gp.normal)), gp.ambient), tensor(induce(v, gp.ambient), u), cfg);
    });
    pairs_check("al2", "Prop (prop:Al)(2)", 96, [gp](const Module& v, const Module& u, Json& d) {
      const Index a = hom_dim(v, restrict(u, gp.normal)), b = hom_dim(induce(v, gp.ambient), u);
      d = {a, b};
      return a == b;
    });
    pairs_check("al3", "Prop (prop:Al)(3)", 96, [gp](const Module& v, const Module& u, Json& d) {
      const Index a = hom_dim(restrict(u, gp.normal), v), b = hom_dim(u, induce(v, gp.ambient));
      d = {a, b};
      return a == b;
    });
    pairs_check("al4", "Prop (prop:Al)(4)", 96, [gp](const Module& v, const Module& u, Json& d) {
      const Index a = ext1_dim(v, restrict(u, gp.normal)), b = ext1_dim(induce(v, gp.ambient), u);
      d = {a, b};
      return a == b;
    });
    pairs_check("al5", "Prop (prop:Al)(5)", 96, [gp](const Module& v, const Module& u, Json& d) {
      const Index a = ext1_dim(restrict(u, gp.normal), v), b = ext1_dim(u, induce(v, gp.ambient));
      d = {a, b};
      return a == b;
    });
  }
  return out;
}

// ---------------------------------------------------------------- appendix

Json identity_json(const std::vector<IdentityCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back(identity_check_to_json(c));
  return out;
}

bool all_hold(const std::vector<IdentityCheck>& checks) {
  for (const auto& c : checks)
    if (!c.holds() || c.hypothesis == false) return false;
  return true;
}

std::vector<SuiteCheck> appendix_checks(const Config& cfg) {
  using P = SubcatPredicate;
  const auto& ex = s4a4::example();
  const FieldSpec f = ex.field;
  std::vector<SuiteCheck> out;
  auto cn = [&ex, f, cfg] { return corpus_for(ex.n, f, 64, 4, cfg); };
  auto cg = [&ex, f, cfg] { return corpus_for(ex.g, f, 64, 4, cfg); };

  out.push_back({"appendix.gchar.all_simples", "Prop (prop:Gchar)", [=, &ex](Json& w) {
                   auto r = check_roundtrips(P::filt(ex.n, f, {ex.k_n, ex.t1, ex.t2}), P::filt(ex.g, f, {ex.k_g, ex.s2}),
                                             cn(), cg(), cfg);
                   w = identity_json(r);
                   return all_hold(r);
                 }});
  out.push_back({"appendix.gchar.T1_T2", "Prop (prop:Gchar)", [=, &ex](Json& w) {
                   auto r = check_roundtrips(P::filt(ex.n, f, {ex.t1, ex.t2}), P::filt(ex.g, f, {ex.k_g}), cn(), cg(), cfg);
                   w = identity_json(r);
                   return all_hold(r);
                 }});
  out.push_back({"appendix.gchar.negative_control", "Prop (prop:Gchar)", [=, &ex](Json& w) {
                   // Filt{T1} is not G-invariant, so the round trip must break
                   auto r = check_roundtrips(P::filt(ex.n, f, {ex.t1}), P::filt(ex.g, f, {ex.k_g}), cn(), cg(), cfg);
                   w = identity_json(r);
                   return !r[0].holds() && r[0].hypothesis == false;
                 }});
  out.push_back({"appendix.gchar2.bricks", "Prop (prop:Gchar2)", [=, &ex](Json& w) {
                   auto r = check_roundtrips(P::filt(ex.n, f, {ex.k_n}), P::filt(ex.g, f, {ex.brick("S2_kG_kG")}), cn(),
                                             cg(), cfg);
                   w = identity_json({r[1]});
                   return r[1].holds() && r[1].hypothesis != false;
                 }});
  for (const auto& gp : standard_pairs()) {
    if (!is_p_power(CosetSystem(gp.ambient, gp.normal).index(), gp.field.characteristic())) continue;
    out.push_back({"appendix.gchar.trivial." + gp.name, "Prop (prop:Gchar2)", [gp, cfg](Json& w) {
                     const auto k_n = trivial_module(gp.normal, gp.field);
                     const auto k_g = trivial_module(gp.ambient, gp.field);
                     auto r = check_roundtrips(P::filt(gp.normal, gp.field, {k_n}), P::filt(gp.ambient, gp.field, {k_g}),
                                               corpus_for(gp.normal, gp.field, 64, 4, cfg),
                                               corpus_for(gp.ambient, gp.field, 64, 4, cfg), cfg);
                     w = identity_json(r);
                     return all_hold(r);
                   }});
  }

  struct HeartCase {
    std::string id;
    std::function<P()> u, t;
  };
  const std::vector<HeartCase> hearts{
      {"equal", [&ex, f] { return P::all(ex.n, f); }, [&ex, f] { return P::all(ex.n, f); }},
      {"zero_to_all", [&ex, f] { return P::fac(ex.n, f, {}); }, [&ex, f] { return P::all(ex.n, f); }},
      {"T1T2_to_all", [&ex, f] { return P::tclose(ex.n, f, {ex.t1, ex.t2}); }, [&ex, f] { return P::all(ex.n, f); }},
      {"kN_to_all", [&ex, f] { return P::tclose(ex.n, f, {ex.k_n}); }, [&ex, f] { return P::all(ex.n, f); }},
      {"zero_to_T1T2",
       [&ex, f] { return P::fac(ex.n, f, {}); },
       [&ex, f] { return P::tclose(ex.n, f, {ex.t1, ex.t2}); }},
  };
  for (const auto& h : hearts) {
    out.push_back({"appendix.heart." + h.id, "Prop (prop:inv)(1)", [=, &ex](Json& w) {
                     auto r = check_heart_transport(h.u(), h.t(), ex.g, cg(), cfg);
                     w = identity_json({r[0]});
                     return r[0].holds() && r[0].hypothesis != false;
                   }});
    out.push_back({"appendix.resper." + h.id, "Lemma (lem:resper)", [=, &ex](Json& w) {
                     auto r = check_heart_transport(h.u(), h.t(), ex.g, cg(), cfg);
                     w = identity_json({r[1]});
                     return r[1].holds() && r[1].hypothesis != false;
                   }});
  }
  out.push_back({"appendix.tclose.sanity", "Def (def:tors)", [=, &ex](Json& w) {
                   // T(C) = Filt(Fac C) against the double perpendicular on the corpus
                   const std::vector<Module> gens{ex.t1, ex.t2};
                   const auto corpus = cn();
                   const P t = P::tclose(ex.n, f, gens);
                   const P perp = P::perp_right(t);
                   std::vector<Module> torsion_free;
                   for (const auto& y : corpus)
                     if (perp.contains(y, cfg)) torsion_free.push_back(y);
                   Json bad = Json::array();
                   for (const auto& x : corpus) {
                     bool left = true;
                     for (const auto& y : torsion_free) left = left && hom_dim(x, y) == 0;
                     if (t.contains(x, cfg) && !left) bad.push_back(x.name());
                     if (!t.contains(x, cfg)) {
                       // the peeled quotient is a nonzero torsion-free witness with Hom(X, -) != 0
                       Module q = x;
                       for (Matrix tr = trace_in(q, gens); tr.cols() > 0; tr = trace_in(q, gens)) q = quotient(q, tr).module;
                       if (q.dim() == 0 || !perp.contains(q, cfg) || hom_dim(x, q) == 0) bad.push_back(x.name());
                     }
                   }
                   w["checked"] = corpus.size();
                   w["torsion_free_in_corpus"] = torsion_free.size();
                   w["failures"] = bad;
                   return bad.empty();
                 }});

  struct FacCase {
    std::string id;
    std::function<Module()> x;
  };
  const std::vector<FacCase> facs{
      {"kN", [&ex] { return ex.k_n; }},
      {"res_S2", [&ex] { return restrict(ex.s2, ex.n); }},
      {"zero", [&ex, f] { return zero_module(ex.n, f); }},
      {"kN_plus_regular",
       [&ex, f] { return direct_sum(ex.n, f, {ex.k_n, free_module(ex.n, f, 1)}); }},
      {"T1_kN_pair", [&ex] { return direct_sum({ex.t1_kn, conjugate(ex.odd, ex.t1_kn)}); }},
  };
  for (const auto& fc : facs) {
    out.push_back({"appendix.commute." + fc.id, "Prop (prop:commute)", [=, &ex](Json& w) {
                     auto r = check_fac_ind(fc.x(), ex.g, cg(), cfg);
                     w = identity_check_to_json(r);
                     return r.holds();
                   }});
  }
  out.push_back({"appendix.commute.T1_rejected", "Prop (prop:commute)", [=, &ex](Json& w) {
                   try {
                     check_fac_ind(ex.t1, ex.g, cg(), cfg);
                   } catch (const Error& e) {
                     w["error"] = std::string(to_string(e.kind()));
                     return e.kind() == ErrorKind::NotGInvariantModule;
                   }
                   w["error"] = nullptr;
                   return false;
                 }});

  out.push_back({"appendix.ginv.T1T2_kN", "Prop (prop:Ginv)", [=, &ex](Json& w) {
                   auto r = check_ginv_closures(P::filt(ex.n, f, {ex.t1, ex.t2}), P::fac(ex.n, f, {ex.k_n}), ex.g, cn(), cfg);
                   w = identity_json(r);
                   return all_hold(r);
                 }});
  out.push_back({"appendix.ginv.kN_T1T2", "Prop (prop:Ginv)", [=, &ex](Json& w) {
                   auto r = check_ginv_closures(P::filt(ex.n, f, {ex.k_n}), P::filt(ex.n, f, {ex.t1, ex.t2}), ex.g, cn(), cfg);
                   w = identity_json(r);
                   return all_hold(r);
                 }});

  struct SquareCase {
    std::string id;
    std::function<std::vector<Module>()> s;
  };
  const std::vector<SquareCase> squares{
      {"kG", [&ex] { return std::vector<Module>{ex.k_g}; }},
      {"simples", [&ex] { return std::vector<Module>{ex.k_g, ex.s2}; }},
      {"S2_kG_kG", [&ex] { return std::vector<Module>{ex.brick("S2_kG_kG")}; }},
      {"kG_S2", [&ex] { return std::vector<Module>{ex.brick("kG_S2")}; }},
  };
  for (const auto& sq : squares) {
    out.push_back({"appendix.sbrick_square." + sq.id, "unnumbered Proposition after (prop:sbrick)", [=, &ex](Json& w) {
                     auto r = check_sbrick_square(sq.s(), ex.n, cn(), cfg);
                     w = identity_check_to_json(r);
                     return r.holds() && r.hypothesis != false;
                   }});
  }

  out.push_back({"appendix.indres_sequence", "Lemma (lem:indres)", [=, &ex](Json& w) {
                   std::vector<Module> xs = ex.bricks;
                   xs.push_back(ex.kg_kg);
                   Json rows = Json::array();
                   bool ok = true;
                   for (const auto& x : xs) {
                     const IndResSequence s = lemma_indres_sequence(x, ex.n);
                     rows.push_back({{"X", x.name()}, {"m", s.m}, {"dims", {s.left.dim(), s.middle.dim(), s.right.dim()}},
                                     {"exact", s.exact}});
                     ok = ok && s.exact;
                   }
                   const IndResSequence deg = lemma_indres_sequence(ex.s2, ex.g);
                   rows.push_back({{"X", "S2 over N = G"}, {"m", deg.m}, {"exact", deg.exact}});
                   w["sequences"] = rows;
                   return ok && deg.exact && deg.m == 0;
                 }});
  return out;
}

// ---------------------------------------------------------------- smc

Json collection_json(const std::vector<ShiftedModule>& items) { return shifted_items_to_json(items, false)["items"]; }

std::vector<SuiteCheck> smc_checks(const Config& cfg) {
  const auto& ex = s4a4::example();
  std::vector<SuiteCheck> out;
  const char* kMain2 = "Thm (thm:main2)";

  auto simples_g = [&ex] { return std::vector<ShiftedModule>{{ex.k_g, 0}, {ex.s2, 0}}; };
  out.push_back({"smc.simples.check", kMain2, [&ex, simples_g, cfg](Json& w) {
                   const auto c = check_two_term_smc(simples_g(), simples_of(ex.g, ex.field, cfg), cfg);
                   w = smc_certificate_to_json(c);
                   return c.passes();
                 }});
  out.push_back({"smc.simples.restrict", kMain2, [&ex, simples_g, cfg](Json& w) {
                   const RestrictedSmc r = restrict_smc(simples_g(), ex.n, cfg);
                   w["items"] = collection_json(r.items);
                   w["certificate"] = smc_certificate_to_json(r.certificate);
                   bool all_simple = r.items.size() == 3;
                   for (const auto& it : r.items) all_simple = all_simple && it.shift == 0 && it.module.dim() == 1;
                   return all_simple && r.certificate.passes();
                 }});
  auto nontrivial = [&ex, cfg] { return find_nontrivial_smc(ex.bricks, simples_of(ex.g, ex.field, cfg), cfg); };
  out.push_back({"smc.nontrivial.check", kMain2, [&ex, nontrivial, cfg](Json& w) {
                   const auto found = nontrivial();
                   if (!found) {
                     w["found"] = false;
                     return false;
                   }
                   const auto c = check_two_term_smc(*found, simples_of(ex.g, ex.field, cfg), cfg);
                   w["items"] = collection_json(*found);
                   w["certificate"] = smc_certificate_to_json(c);
                   return c.passes();
                 }});
  out.push_back({"smc.nontrivial.restrict", kMain2, [&ex, nontrivial, cfg](Json& w) {
                   const auto found = nontrivial();
                   if (!found) {
                     w["found"] = false;
                     return false;
                   }
                   const RestrictedSmc r = restrict_smc(*found, ex.n, cfg);
                   w["items"] = collection_json(r.items);
                   w["certificate"] = smc_certificate_to_json(r.certificate);
                   return r.certificate.passes() && r.items.size() >= found->size() && r.certificate.k0.size() == 3;
                 }});
  out.push_back({"smc.k0.example", "§4 Definition", [&ex, cfg](Json& w) {
                   const auto k0 = k0_matrix({{ex.k_g, 0}, {ex.s2, 1}}, simples_of(ex.g, ex.field, cfg), cfg);
                   w["k0"] = k0;
                   w["determinant"] = integer_determinant(k0);
                   return k0 == std::vector<std::vector<long>>{{1, 0}, {0, -1}} && integer_determinant(k0) == -1;
                 }});
  out.push_back({"smc.degenerate", "§4 Definition", [&ex, cfg](Json& w) {
                   const auto c = check_two_term_smc({{ex.k_g, 0}, {ex.k_g, 1}}, simples_of(ex.g, ex.field, cfg), cfg);
                   w = smc_certificate_to_json(c);
                   return !c.passes();
                 }});

  // Hom / Ext vanishing survives restriction along p-power index
  auto vanish = [cfg](bool ext, Json& w) {
    std::size_t pairs = 0;
    Json bad = Json::array();
    Json per = Json::object();
    for (const auto& gp : standard_pairs()) {
      if (!is_p_power(CosetSystem(gp.ambient, gp.normal).index(), gp.field.characteristic())) continue;
      const auto& corpus = full_corpus(gp.ambient, gp.field, 4, cfg).modules;
      std::size_t here = 0;
      for (const auto& x : corpus)
        for (const auto& y : corpus) {
          const Index before = ext ? ext1_dim(x, y) : hom_dim(x, y);
          if (before != 0) continue;
          ++here;
          const Module rx = restrict(x, gp.normal), ry = restrict(y, gp.normal);
          if ((ext ? ext1_dim(rx, ry) : hom_dim(rx, ry)) != 0)
            bad.push_back({{"pair", gp.name}, {"X", x.name()}, {"Y", y.name()}});
        }
      per[gp.name] = here;
      pairs += here;
    }
    w["pairs"] = pairs;
    w["per_group_pair"] = per;
    w["failures"] = bad;
    return bad.empty() && pairs >= 100;
  };
  out.push_back({"smc.vanish.hom", "Lemma (lem:vanish)", [vanish](Json& w) { return vanish(false, w); }});
  out.push_back({"smc.vanish.ext", "Lemma (lem:vanish1)", [vanish](Json& w) { return vanish(true, w); }});
  return out;
}

// ---------------------------------------------------------------- clifford

std::vector<SuiteCheck> clifford_checks(const Config& cfg) {
  std::vector<SuiteCheck> out;
  for (const auto& gp : standard_pairs()) {
    if (!is_p_power(CosetSystem(gp.ambient, gp.normal).index(), gp.field.characteristic())) continue;
    out.push_back({"clifford.thm_main." + gp.name, "Cor (p-group)", [gp, cfg](Json& w) {
                     const auto& corpus = full_corpus(gp.ambient, gp.field, 4, cfg).modules;
                     std::size_t bricks = 0;
                     Json bad = Json::array();
                     for (const auto& m : corpus) {
                       if (!is_brick(m, cfg)) continue;
                       ++bricks;
                       const CliffordReport r = clifford_decompose(m, gp.normal, std::nullopt, cfg);
                       if (!r.holds()) bad.push_back(m.name());
                     }
                     w["modules"] = corpus.size();
                     w["bricks"] = bricks;
                     w["failures"] = bad;
                     return bad.empty() && bricks > 0;
                   }});
    out.push_back({"clifford.lem_ss." + gp.name, "Lemma (lem:ss)", [gp, cfg](Json& w) {
                     // each summand of Res S occurs in the sum of conjugates of one summand T
                     const auto& corpus = full_corpus(gp.ambient, gp.field, 4, cfg).modules;
                     const CosetSystem cs = coset_reps(gp.ambient, gp.normal);
                     Json bad = Json::array();
                     for (const auto& m : corpus) {
                       if (!is_brick(m, cfg)) continue;
                       const Decomposition d = decompose(restrict(m, gp.normal), cfg);
                       std::vector<Module> conj;
                       for (std::size_t i = 0; i < cs.index(); ++i)
                         conj.push_back(conjugate(gp.ambient.element(cs.rep(i)), d.summands.front().first));
                       const Decomposition e = decompose(direct_sum(gp.normal, gp.field, conj), cfg);
                       for (const auto& [t, mult] : d.summands) {
                         int avail = 0;
                         for (const auto& [u, m2] : e.summands)
                           if (iso(t, u, cfg)) avail = m2;
                         if (avail == 0) bad.push_back(m.name());
                       }
                     }
                     w["failures"] = bad;
                     return bad.empty();
                   }});
  }

  struct RetractionCase {
    std::string id;
    Group ambient, normal;
    FieldSpec field;
  };
  const std::vector<RetractionCase> cases{
      {"S4>A4.GF3", groups::symmetric(4), groups::alternating4(), gf_make(3, 1)},
      {"S4>N1.GF5", groups::symmetric(4), groups::klein4(), gf_make(5, 1)},
  };
  for (const auto& rc : cases) {
    out.push_back({"clifford.averaged_retraction." + rc.id, "Prop (prop:converse)", [rc, cfg](Json& w) {
                     const auto corpus = corpus_for(rc.ambient, rc.field, 16, 3, cfg);
                     const auto pairs = sample_pairs(corpus, corpus, 1, 16, 24, cfg.seed);
                     detail::Rng rng(cfg.seed, 0xA7);
                     std::size_t tried = 0;
                     for (const auto& [i, j] : pairs) {
                       const Module& v = corpus[i];
                       const Module& y = corpus[j];
                       const Module wmod = direct_sum(rc.ambient, rc.field, {v, y});
                       Matrix inc = zeros(rc.field, wmod.dim(), v.dim());
                       for (Index r = 0; r < v.dim(); ++r) inc(r, r) = rc.field.one();
                       // a kN-retraction [I, phi] with phi in Hom_N(Res Y, Res V), random
                       const HomSpace h = hom_basis(restrict(y, rc.normal), restrict(v, rc.normal));
                       std::vector<FieldElem> c;
                       for (Index b = 0; b < h.dim(); ++b) c.push_back(rng.elem(rc.field));
                       Matrix pi = zeros(rc.field, v.dim(), wmod.dim());
                       pi.leftCols(v.dim()) = identity(rc.field, v.dim());
                       if (h.dim() > 0) pi.rightCols(y.dim()) = h.combine(c);
                       const ModuleMap iota(v, wmod, inc);
                       const ModuleMap avg = averaged_retraction(iota, pi, rc.normal);  // raises unless it retracts
                       if (!intertwines(wmod, v, avg.matrix())) return false;
                       ++tried;
                     }
                     w["cases"] = tried;
                     return tried > 0;
                   }});
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"s4a4", "functor-identities", "appendix", "smc", "clifford"};
  return names;
}

std::vector<SuiteCheck> suite_checks(const std::string& name, const Config& cfg) {
  std::vector<SuiteCheck> checks;
  if (name == "s4a4") checks = s4a4_checks(cfg);
  else if (name == "functor-identities") checks = functor_checks(cfg);
  else if (name == "appendix") checks = appendix_checks(cfg);
  else if (name == "smc") checks = smc_checks(cfg);
  else if (name == "clifford") checks = clifford_checks(cfg);
  else raise(ErrorKind::ParseError, "unknown suite \"" + name + "\"");
  std::sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return checks;
}

SuiteReport run_suite(const std::string& name, const Config& cfg,
                      const std::function<void(const CheckResult&)>& on_result) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report{name, {}, 0};
  for (const auto& check : suite_checks(name, cfg)) {
    CheckResult r{check.id, check.anchor, Verdict::Fail, Json::object()};
    try {
      r.verdict = check.run(r.witness) ? Verdict::Pass : Verdict::Fail;
    } catch (const Error& e) {
      r.verdict = e.is_indeterminate() ? Verdict::Indeterminate : Verdict::Fail;
      r.witness = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    }
    if (on_result) on_result(r);
    report.checks.push_back(std::move(r));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace modbrick
