// modbrick: command-line front end.
//
// Exit codes: 0 pass, 1 fail, 2 indeterminate, 3 input error.

#include "modbrick/builtin.hpp"
#include "modbrick/clifford.hpp"
#include "modbrick/error.hpp"
#include "modbrick/report.hpp"
#include "modbrick/smc.hpp"
#include "modbrick/subcat.hpp"
#include "modbrick/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

namespace mb = modbrick;

namespace {

enum Exit { kPass = 0, kFail = 1, kIndeterminate = 2, kInputError = 3 };

struct Options {
  std::uint64_t seed = mb::default_config().seed;
  std::uint64_t enum_cap = mb::default_config().enum_cap;
  std::uint64_t iter_cap = mb::default_config().iteration_cap;
  std::string format = "json";
  std::string out;
  std::string field;

  mb::Config config() const {
    if (enum_cap == 0 || iter_cap == 0) mb::raise(mb::ErrorKind::ParseError, "caps must be positive");
    return mb::Config{enum_cap, iter_cap, seed};
  }
  bool json() const { return format == "json"; }
};

// "GF(16)", "16" or "2^4".
mb::FieldSpec parse_field(const std::string& text) {
  std::smatch m;
  long q = 0;
  if (std::regex_match(text, m, std::regex(R"(\s*(?:GF\()?\s*(\d+)\s*\^\s*(\d+)\s*\)?\s*)"))) {
    q = 1;
    for (int i = 0; i < std::stoi(m[2]); ++i) q *= std::stol(m[1]);
  } else if (std::regex_match(text, m, std::regex(R"(\s*(?:GF\()?\s*(\d+)\s*\)?\s*)"))) {
    q = std::stol(m[1]);
  } else {
    mb::raise(mb::ErrorKind::ParseError, "cannot read field \"" + text + "\"");
  }
  for (int p = 2; p <= q; ++p) {
    if (q % p) continue;
    int n = 0;
    long r = q;
    while (r % p == 0) r /= p, ++n;
    if (r != 1) break;
    return mb::gf_make(p, n);
  }
  mb::raise(mb::ErrorKind::ParseError, "field order " + std::to_string(q) + " is not a prime power");
}

class Session {
 public:
  explicit Session(const Options& opt) : opt_(opt), cfg_(opt.config()) {
    if (!opt.field.empty()) field_ = parse_field(opt.field);
  }

  const mb::Config& cfg() const { return cfg_; }

  /// A module file, or the name of a built-in S4/A4 module such as "S2".
  mb::Module module(const std::string& ref) const {
    mb::Module m = load(ref);
    if (field_ && m.field() != *field_) m = mb::extend_scalars(m, mb::FieldEmbedding(m.field(), *field_)).renamed(m.name());
    return m;
  }

  std::vector<mb::Module> modules(const std::vector<std::string>& refs) const {
    std::vector<mb::Module> out;
    for (const auto& r : refs) out.push_back(module(r));
    return out;
  }

  mb::ModuleResolver resolver(const std::filesystem::path& base) const {
    auto inner = mb::default_resolver(base);
    return [this, inner](const mb::Json& j) {
      mb::Module m = inner(j);
      if (field_ && m.field() != *field_) m = mb::extend_scalars(m, mb::FieldEmbedding(m.field(), *field_)).renamed(m.name());
      return m;
    };
  }

  /// A built-in group name or a group JSON file.
  static mb::Group group(const std::string& ref) {
    if (auto g = mb::builtin_group(ref)) return *g;
    if (!std::filesystem::exists(ref)) mb::raise(mb::ErrorKind::ParseError, "unknown group \"" + ref + "\"");
    return mb::group_from_json(mb::read_json_file(ref));
  }

  /// Emits a single report; text mode prints the "text" lines instead.
  void emit(const mb::Json& report, const std::vector<std::string>& text) const {
    std::ostringstream s;
    if (opt_.json()) {
      s << mb::pretty_json(report) << "\n";
    } else {
      for (const auto& line : text) s << line << "\n";
    }
    write(s.str());
  }

  void write(const std::string& chunk) const {
    if (opt_.out.empty()) {
      std::cout << chunk << std::flush;
      return;
    }
    if (!out_) {
      out_ = std::make_unique<std::ofstream>(opt_.out);
      if (!*out_) mb::raise(mb::ErrorKind::ParseError, "cannot write " + opt_.out);
    }
    *out_ << chunk << std::flush;
  }

  const Options& options() const { return opt_; }

 private:
  static mb::Module load(const std::string& ref) {
    if (std::filesystem::exists(ref)) {
      mb::Module m = mb::read_module_file(ref);
      return m.name().empty() ? m.renamed(std::filesystem::path(ref).stem().string()) : m;
    }
    const auto& texts = mb::s4a4::golden_texts();
    if (auto it = texts.find(ref + ".json"); it != texts.end())
      return mb::module_from_json(mb::Json::parse(it->second)).renamed(ref);
    mb::raise(mb::ErrorKind::ParseError, "no module file or built-in module \"" + ref + "\"");
  }

  Options opt_;
  mb::Config cfg_;
  std::optional<mb::FieldSpec> field_;
  mutable std::unique_ptr<std::ofstream> out_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }
int verdict(bool pass) { return pass ? kPass : kFail; }
const char* word(bool pass) { return pass ? "pass" : "fail"; }

// ---------------------------------------------------------------- check

int check_brick(const Session& s, const std::vector<std::string>& files) {
  mb::Json rows = mb::Json::array();
  std::vector<std::string> text;
  bool all = true;
  for (const auto& m : s.modules(files)) {
    const bool b = mb::is_brick(m, s.cfg());
    all = all && b;
    rows.push_back({{"module", mb::module_ref_json(m)}, {"end_dim", mb::hom_dim(m, m)}, {"brick", b}});
    text.push_back(m.name() + ": brick " + yes_no(b));
  }
  text.push_back(word(all));
  s.emit({{"check", "brick"}, {"modules", rows}, {"verdict", word(all)}}, text);
  return verdict(all);
}

int check_semibrick(const Session& s, const std::vector<std::string>& files) {
  const auto mods = s.modules(files);
  mb::Json report{{"check", "semibrick"}};
  std::vector<std::string> text;
  bool pass = false;
  if (mods.size() == 1) {
    // one module: its indecomposable summands must form a semibrick
    const mb::Decomposition d = mb::decompose(mods[0], s.cfg());
    pass = mb::is_semibrick_module(mods[0], s.cfg());
    report["decomposition"] = mb::decomposition_to_json(d);
    text.push_back(mods[0].name() + ": " + std::to_string(d.summands.size()) + " distinct summand(s)");
  } else {
    pass = mb::is_semibrick(mods, s.cfg());
    mb::Json refs = mb::Json::array();
    for (const auto& m : mods) refs.push_back(mb::module_ref_json(m));
    report["modules"] = refs;
  }
  report["verdict"] = word(pass);
  text.push_back(std::string("semibrick ") + yes_no(pass));
  s.emit(report, text);
  return verdict(pass);
}

int check_smc(const Session& s, const std::string& file) {
  const auto path = std::filesystem::path(file);
  const auto items = mb::shifted_items_from_json(mb::read_json_file(path), s.resolver(path.parent_path()));
  const mb::SmcCertificate c = mb::check_two_term_smc(items, s.cfg());
  mb::Json report{{"check", "smc"}};
  report["items"] = mb::shifted_items_to_json(items, false)["items"];
  report["certificate"] = mb::smc_certificate_to_json(c);
  report["verdict"] = word(c.passes());
  std::vector<std::string> text{"bricks " + yes_no(c.bricks), "hom within degree " + yes_no(c.hom_within_degree),
                                "hom across " + yes_no(c.hom_across), "ext across " + yes_no(c.ext_across),
                                "K0 determinant " + std::to_string(c.k0_determinant) +
                                    " (necessary-only condition for thick generation)"};
  for (const auto& f : c.failures) text.push_back("  " + f);
  text.push_back(word(c.passes()));
  s.emit(report, text);
  return verdict(c.passes());
}

int check_filt(const Session& s, const std::string& x_ref, const std::vector<std::string>& gen_refs) {
  const mb::Module x = s.module(x_ref);
  const auto gens = s.modules(gen_refs);
  const auto f = mb::filt_member(x, gens, s.cfg());
  mb::Json report{{"check", "filt"}, {"module", mb::module_ref_json(x)}};
  std::vector<std::string> text;
  if (f) {
    report["filtration"] = mb::filtration_to_json(*f, gens);
    std::string layers;
    for (std::size_t i = 0; i < f->length(); ++i) layers += (i ? " | " : "") + gens[f->quotient_tags[i]].name();
    text.push_back("filtration: " + layers);
  } else {
    report["filtration"] = nullptr;
  }
  report["verdict"] = word(f.has_value());
  text.push_back(word(f.has_value()));
  s.emit(report, text);
  return verdict(f.has_value());
}

int check_subcat(const Session& s, const std::string& pred_file, const std::string& ambient_ref) {
  const auto path = std::filesystem::path(pred_file);
  const auto pred = mb::predicate_from_json(mb::read_json_file(path), s.resolver(path.parent_path()));
  const mb::Group ambient = Session::group(ambient_ref);
  const auto inv = mb::predicate_is_G_invariant(pred, ambient, s.cfg());
  if (!inv) mb::raise(mb::ErrorKind::HypothesisNotVerified, "G-invariance is decided for generated predicates only");
  s.emit({{"check", "subcat"}, {"predicate", pred.describe()}, {"G_invariant", *inv}, {"verdict", word(*inv)}},
         {pred.describe() + ": G-invariant " + yes_no(*inv)});
  return verdict(*inv);
}

// ---------------------------------------------------------------- other verbs

int cmd_clifford(const Session& s, const std::string& brick, const std::string& normal,
                 const std::vector<std::string>& stable) {
  const mb::Module m = s.module(brick);
  std::optional<std::vector<mb::Module>> semibrick;
  if (!stable.empty()) semibrick = s.modules(stable);
  const mb::CliffordReport r = mb::clifford_decompose(m, Session::group(normal), semibrick, s.cfg());
  std::vector<std::string> text;
  for (const auto& sm : r.summands)
    text.push_back("summand dim " + std::to_string(sm.dim) + " multiplicity " + std::to_string(sm.multiplicity));
  text.push_back("semibrick " + yes_no(r.semibrick_certificate) + ", transitive " + yes_no(r.transitive) +
                 ", equal dims " + yes_no(r.equal_dims) + ", equal multiplicities " + yes_no(r.equal_mults));
  text.push_back(word(r.holds()));
  s.emit(mb::clifford_to_json(r), text);
  return verdict(r.holds());
}

int cmd_suite(const Session& s, const std::string& name) {
  const bool json = s.options().json();
  const mb::SuiteReport r = mb::run_suite(name, s.cfg(), [&](const mb::CheckResult& c) {
    if (json) {
      s.write(mb::check_result_to_json(c).dump() + "\n");
    } else {
      std::string line(mb::to_string(c.verdict));
      line.resize(14, ' ');
      s.write(line + c.id + "  [" + c.anchor + "]\n");
    }
  });
  const auto pass = r.count(mb::Verdict::Pass), fail = r.count(mb::Verdict::Fail),
             ind = r.count(mb::Verdict::Indeterminate);
  std::ostringstream secs;
  secs.precision(3);
  secs << std::fixed << r.seconds;
  if (json) {
    mb::Json summary{{"suite", name},       {"checks", r.checks.size()}, {"pass", pass},
                     {"fail", fail},        {"indeterminate", ind},      {"verdict", std::string(mb::to_string(r.overall()))},
                     {"seconds", r.seconds}};
    s.write(summary.dump() + "\n");
  } else {
    s.write(name + ": " + std::to_string(pass) + " pass, " + std::to_string(fail) + " fail, " + std::to_string(ind) +
            " indeterminate in " + secs.str() + "s\n");
  }
  switch (r.overall()) {
    case mb::Verdict::Pass:
      return kPass;
    case mb::Verdict::Fail:
      return kFail;
    case mb::Verdict::Indeterminate:
      return kIndeterminate;
  }
  return kFail;
}

int cmd_restrict_semibrick(const Session& s, const std::vector<std::string>& files, const std::string& normal) {
  const auto mods = s.modules(files);
  const mb::RestrictedSemibrick r = mb::restrict_semibrick(mods, Session::group(normal), s.cfg());
  mb::Json members = mb::Json::array();
  std::vector<std::string> text;
  for (const auto& m : r.members) {
    members.push_back(mb::module_to_json(m, false));
    text.push_back(m.name() + " dim " + std::to_string(m.dim()));
  }
  text.push_back("semibrick " + yes_no(r.certified));
  s.emit({{"members", members}, {"semibrick", r.certified}, {"verdict", word(r.certified)}}, text);
  return verdict(r.certified);
}

int cmd_restrict_smc(const Session& s, const std::string& file, const std::string& normal) {
  const auto path = std::filesystem::path(file);
  const auto items = mb::shifted_items_from_json(mb::read_json_file(path), s.resolver(path.parent_path()));
  const mb::RestrictedSmc r = mb::restrict_smc(items, Session::group(normal), s.cfg());
  std::vector<std::string> text;
  for (const auto& it : r.items)
    text.push_back(it.module.name() + " dim " + std::to_string(it.module.dim()) + " shift " + std::to_string(it.shift));
  text.push_back("K0 determinant " + std::to_string(r.certificate.k0_determinant));
  for (const auto& f : r.certificate.failures) text.push_back("  " + f);
  text.push_back(word(r.certificate.passes()));
  mb::Json report = mb::shifted_items_to_json(r.items, true);
  report["certificate"] = mb::smc_certificate_to_json(r.certificate);
  report["verdict"] = word(r.certificate.passes());
  s.emit(report, text);
  return verdict(r.certificate.passes());
}

int cmd_subcat_member(const Session& s, const std::string& x_ref, const std::string& pred_file) {
  const auto path = std::filesystem::path(pred_file);
  const auto pred = mb::predicate_from_json(mb::read_json_file(path), s.resolver(path.parent_path()));
  const mb::Module x = s.module(x_ref);
  const bool member = mb::subcat_member(x, pred, s.cfg());
  s.emit({{"module", mb::module_ref_json(x)}, {"predicate", pred.describe()}, {"member", member},
          {"verdict", word(member)}},
         {x.name() + " in " + pred.describe() + ": " + yes_no(member)});
  return verdict(member);
}

int exit_for(const mb::Error& e) {
  if (e.is_indeterminate()) return kIndeterminate;
  switch (e.kind()) {
    case mb::ErrorKind::NotABrick:
    case mb::ErrorKind::NotASemibrick:
    case mb::ErrorKind::IndexNotPPower:
    case mb::ErrorKind::IndexDivisibleByP:
    case mb::ErrorKind::NotARetraction:
    case mb::ErrorKind::NotGInvariantModule:
      return kFail;
    default:
      return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bricks, semibricks and simple-minded collections over modular group algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the verb
  Options opt;
  app.add_option("--seed", opt.seed, "Seed for randomized searches")->envname("MODBRICK_SEED");
  app.add_option("--enum-cap", opt.enum_cap, "Largest candidate count enumerated exhaustively")->envname("MODBRICK_ENUM_CAP");
  app.add_option("--iter-cap", opt.iter_cap, "Random draws before giving up")->envname("MODBRICK_ITER_CAP");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}))->envname("MODBRICK_FORMAT");
  app.add_option("--out", opt.out, "Write the report here instead of stdout")->envname("MODBRICK_OUT");
  app.add_option("--field", opt.field, "Extend module inputs to this field, e.g. GF(16)")->envname("MODBRICK_FIELD");

  std::function<int(const Session&)> action;

  auto* check = app.add_subcommand("check", "Certify a property of the inputs");
  check->require_subcommand(1);
  check->fallthrough();
  std::vector<std::string> files;
  std::string single, pred, normal, ambient;
  std::vector<std::string> stable;

  auto* brick = check->add_subcommand("brick", "Every module has End = k");
  brick->add_option("modules", files, "Module files or built-in names")->required();
  brick->callback([&] { action = [&](const Session& s) { return check_brick(s, files); }; });

  auto* semibrick = check->add_subcommand("semibrick", "One module's summands, or a list of bricks, form a semibrick");
  semibrick->add_option("modules", files, "Module files or built-in names")->required();
  semibrick->callback([&] { action = [&](const Session& s) { return check_semibrick(s, files); }; });

  auto* smc = check->add_subcommand("smc", "Two-term simple-minded collection");
  smc->add_option("collection", single, "Collection file")->required();
  smc->callback([&] { action = [&](const Session& s) { return check_smc(s, single); }; });

  auto* filt = check->add_subcommand("filt", "Module admits a filtration by the generators");
  filt->add_option("module", single, "Module file or built-in name")->required();
  filt->add_option("generators", files, "Generator modules")->required();
  filt->callback([&] { action = [&](const Session& s) { return check_filt(s, single, files); }; });

  auto* subcat = check->add_subcommand("subcat", "Predicate is invariant under conjugation by the ambient group");
  subcat->add_option("predicate", pred, "Predicate file")->required();
  subcat->add_option("--ambient", ambient, "Ambient group name or file")->required();
  subcat->callback([&] { action = [&](const Session& s) { return check_subcat(s, pred, ambient); }; });

  auto* clifford = app.add_subcommand("clifford", "Decompose the restriction of a brick");
  clifford->add_option("brick", single, "Module file or built-in name")->required();
  clifford->add_option("--normal", normal, "Normal subgroup name or file")->required();
  clifford->add_option("--stable", stable, "Tensor-stable semibrick certifying a non-p-power index");
  clifford->callback([&] { action = [&](const Session& s) { return cmd_clifford(s, single, normal, stable); }; });

  auto* suite = app.add_subcommand("suite", "Run a named check suite");
  suite->add_option("name", single, "Suite name")->required()->check(CLI::IsMember(mb::suite_names()));
  suite->callback([&] { action = [&](const Session& s) { return cmd_suite(s, single); }; });

  auto* rsb = app.add_subcommand("restrict-semibrick", "Restrict a semibrick to a normal subgroup");
  rsb->add_option("modules", files, "Module files or built-in names")->required();
  rsb->add_option("--normal", normal, "Normal subgroup name or file")->required();
  rsb->callback([&] { action = [&](const Session& s) { return cmd_restrict_semibrick(s, files, normal); }; });

  auto* rsmc = app.add_subcommand("restrict-smc", "Restrict a two-term collection to a normal subgroup");
  rsmc->add_option("collection", single, "Collection file")->required();
  rsmc->add_option("--normal", normal, "Normal subgroup name or file")->required();
  rsmc->callback([&] { action = [&](const Session& s) { return cmd_restrict_smc(s, single, normal); }; });

  auto* member = app.add_subcommand("subcat-member", "Decide membership of a module in a subcategory");
  member->add_option("module", single, "Module file or built-in name")->required();
  member->add_option("predicate", pred, "Predicate file")->required();
  member->callback([&] { action = [&](const Session& s) { return cmd_subcat_member(s, single, pred); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  std::optional<Session> session;
  try {
    session.emplace(opt);
    return action(*session);
  } catch (const mb::Error& e) {
    std::cerr << "modbrick: " << e.what() << "\n";
    const int code = exit_for(e);
    // a domain outcome still gets a report; input errors only the message
    if (session && code != kInputError) {
      const char* v = code == kIndeterminate ? "indeterminate" : "fail";
      session->emit({{"error", std::string(mb::to_string(e.kind()))}, {"message", e.what()}, {"verdict", v}},
                    {std::string(v) + ": " + e.what()});
    }
    return code;
  } catch (const std::exception& e) {
    std::cerr << "modbrick: " << e.what() << "\n";
    return kInputError;
  }
}
