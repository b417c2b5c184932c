// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "modbrick/builtin.hpp"
#include "modbrick/corpus.hpp"
#include "modbrick/hom.hpp"
#include "modbrick/suite.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef MODBRICK_CLI
#error "MODBRICK_CLI must name the CLI binary"
#endif

using namespace modbrick;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

// All checks of `suite` whose id starts with one of `prefixes` pass; `extra` may veto.
Outcome suite_filter(const std::string& suite, const std::vector<std::string>& prefixes,
                     const std::function<bool(const CheckResult&)>& extra = {}) {
  const SuiteReport r = run_suite(suite, default_config());
  Outcome o;
  std::size_t seen = 0;
  for (const auto& c : r.checks) {
    bool wanted = false;
    for (const auto& p : prefixes) wanted = wanted || starts_with(c.id, p);
    if (!wanted) continue;
    ++seen;
    if (c.verdict != Verdict::Pass || (extra && !extra(c))) {
      o.ok = false;
      o.note += " " + c.id;
    }
  }
  if (seen == 0) {
    o.ok = false;
    o.note += " no matching checks";
  }
  o.note = std::to_string(seen) + " checks" + o.note;
  return o;
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(MODBRICK_CLI) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

// The JSON Lines output with the timing field removed from the summary line.
std::string strip_timing(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    Json j = Json::parse(line);
    j.erase("seconds");
    out += j.dump() + "\n";
  }
  return out;
}

bool same_iso_multiset(const Decomposition& a, const Decomposition& b) {
  if (a.summands.size() != b.summands.size()) return false;
  std::vector<bool> used(b.summands.size());
  for (const auto& [m, mult] : a.summands) {
    bool found = false;
    for (std::size_t j = 0; j < b.summands.size() && !found; ++j)
      if (!used[j] && b.summands[j].second == mult && is_isomorphic(m, b.summands[j].first)) found = used[j] = true;
    if (!found) return false;
  }
  return true;
}

Outcome determinism() {
  Outcome o;
  for (const auto& name : suite_names()) {
    const std::string a = run_cli("suite " + name + " --seed 7"), b = run_cli("suite " + name + " --seed 7");
    if (a.empty() || strip_timing(a) != strip_timing(b)) {
      o.ok = false;
      o.note += " suite:" + name;
    }
  }
  Config one, two;
  one.seed = 1;
  two.seed = 0x5EED;
  std::size_t compared = 0;
  for (const auto& gp : standard_pairs()) {
    std::vector<Module> mods;
    for (const auto& m : full_corpus(gp.ambient, gp.field, 4).modules) mods.push_back(restrict(m, gp.normal));
    const auto& small = full_corpus(gp.normal, gp.field, 2).modules;
    for (std::size_t i = 0; i + 1 < small.size(); ++i) mods.push_back(direct_sum({small[i], small[i + 1], small[i]}));
    for (const auto& m : mods) {
      ++compared;
      if (!same_iso_multiset(decompose(m, one), decompose(m, two))) {
        o.ok = false;
        o.note += " decompose:" + gp.name + "/" + m.name();
      }
    }
  }
  o.note = std::to_string(suite_names().size()) + " suites, " + std::to_string(compared) + " decompositions" + o.note;
  return o;
}

bool pairs_at_least(const CheckResult& c, std::size_t n) {
  return c.witness.contains("pairs") && c.witness["pairs"].get<std::size_t>() >= n;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 S4/A4 example over GF(4)", 60,
       [] { return suite_filter("s4a4", {"s4a4.simples.", "s4a4.brick.", "s4a4.res.", "s4a4.conjugate.", "s4a4.golden."}); }},
      {"2 counterexamples on the Klein four subgroup", 10,
       [] { return suite_filter("s4a4", {"s4a4.remark.kN_T2.res_N1", "s4a4.remark.kG_S2.res_N1", "s4a4.kG_kG."}); }},
      {"3 restriction of bricks over p-power index", 300,
       [] { return suite_filter("clifford", {"clifford.thm_main.S4>A4", "clifford.thm_main.C4>C2"}); }},
      {"4 functor identities", 120,
       [] {
         return suite_filter("functor-identities", {"functor."}, [](const CheckResult& c) {
           return !starts_with(c.id, "functor.al") || pairs_at_least(c, 32);
         });
       }},
      {"5 Hom and Ext vanishing under restriction", 180,
       [] { return suite_filter("smc", {"smc.vanish."}, [](const CheckResult& c) { return pairs_at_least(c, 100); }); }},
      {"6 subcategory transport with negative control", 300,
       [] {
         Outcome o = suite_filter("appendix", {"appendix."});
         const auto neg = suite_filter("appendix", {"appendix.gchar.negative_control"});
         if (!neg.ok) o = {false, o.note + " negative control missing"};
         return o;
       }},
      {"7 two-term simple-minded collections", 120,
       [] { return suite_filter("smc", {"smc.simples.", "smc.nontrivial."}); }},
      {"8 determinism", 600, determinism},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) {
      o.ok = false;
      o.note += " over time limit";
    }
    all = all && o.ok;
    std::printf("%s  criterion %s  (%.1fs, limit %.0fs)  %s\n", o.ok ? "PASS" : "FAIL", c.name.c_str(), secs,
                c.limit_seconds, o.note.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
