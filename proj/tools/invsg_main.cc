// Copyright 2026 The invsg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "invsg/basis.h"
#include "invsg/battery.h"
#include "invsg/catalog.h"
#include "invsg/classifier.h"
#include "invsg/enumerator.h"
#include "json.hpp"

namespace {

using invsg::Word;
using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  int jobs = 0;
  int perm_bound = invsg::kDefaultPermBound;
  int var_cap = invsg::kDefaultVarCap;
  std::string cache_dir;
  uint64_t seed = invsg::BatteryOptions{}.seed;
  bool json() const { return format == "json"; }
};

struct ModelArgs {
  std::string model, table, inv;

  void add(CLI::App* app) {
    app->add_option("--model", model, "a0, b0, sl3 or a Table 1 name (a1..c7)");
    app->add_option("--table", table, "multiplication table digits, row-major");
    app->add_option("--inv", inv, "involution digits");
  }

  bool given() const { return !model.empty() || !table.empty(); }

  invsg::InvolutionSemigroup resolve() const {
    if (!model.empty()) {
      if (!table.empty() || !inv.empty())
        throw UsageError("--model cannot be combined with --table/--inv");
      auto m = invsg::named_model(model);
      if (!m) throw UsageError("unknown model '" + model + "'");
      return *m;
    }
    if (table.empty()) throw UsageError("a model is required (--model or --table/--inv)");
    std::string iv = inv;
    if (iv.empty()) {
      int n = 1;
      while (n * n < static_cast<int>(table.size())) ++n;
      iv = invsg::format_perm(invsg::identity_perm(n));
    }
    auto s = invsg::make_table(table, iv);
    auto rep = invsg::validate(s);
    if (!rep.ok) throw UsageError("not an involution semigroup: " + rep.message);
    return s;
  }

  std::string label() const {
    return !model.empty() ? model : "table " + table + " inv " + inv;
  }
};

invsg::System parse_system(const std::string& s) {
  if (s == "a0" || s == "A0") return invsg::System::kA0;
  if (s == "b0" || s == "B0") return invsg::System::kB0;
  throw UsageError("--system must be a0 or b0");
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<invsg::CatalogEntry> read_catalog(const std::string& path) {
  std::vector<invsg::CatalogEntry> out;
  std::istringstream in(read_input(path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    invsg::CatalogEntry e;
    std::string rest;
    ls >> e.name >> e.label;
    std::getline(ls, rest);
    e.s = invsg::parse_table(rest);
    out.push_back(std::move(e));
  }
  return out;
}

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json())
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

json certificate_json(const invsg::Certificate& c) {
  json j;
  j["kind"] = invsg::certificate_name(c.kind);
  j["detail"] = c.detail;
  if (c.canonical_u) j["canonical_lhs"] = *c.canonical_u;
  if (c.canonical_v) j["canonical_rhs"] = *c.canonical_v;
  return j;
}

int cmd_validate(const Globals& g, const ModelArgs& m,
                 const std::vector<std::string>& lines, const std::string& file) {
  std::vector<std::string> inputs = lines;
  if (!file.empty()) {
    std::istringstream in(read_input(file));
    std::string l;
    while (std::getline(in, l))
      if (!l.empty() && l[0] != '#') inputs.push_back(l);
  }
  std::vector<invsg::InvolutionSemigroup> items;
  if (m.given()) {
    if (!m.model.empty()) {
      items.push_back(m.resolve());
    } else {
      std::string iv = m.inv;
      if (iv.empty()) throw UsageError("--inv is required with --table");
      items.push_back(invsg::make_table(m.table, iv));
    }
  }
  for (const auto& l : inputs) items.push_back(invsg::parse_table(l));
  if (items.empty()) throw UsageError("nothing to validate");
  json arr = json::array();
  std::string text;
  bool all_ok = true;
  for (const auto& s : items) {
    auto r = invsg::validate(s);
    all_ok = all_ok && r.ok;
    json j;
    j["table"] = invsg::format_table(s);
    j["valid"] = r.ok;
    if (!r.ok) {
      j["message"] = r.message;
      j["witness"] = r.witness;
    }
    arr.push_back(j);
    text += invsg::format_table(s) + ": " + (r.ok ? "valid" : "invalid, " + r.message) + "\n";
  }
  emit(g, items.size() == 1 ? arr[0] : arr, text);
  return all_ok ? kOk : kFails;
}

invsg::Equivalence equivalence_arg(const std::string& s) {
  auto e = invsg::parse_equivalence(s);
  if (!e) throw UsageError("--equivalence must be iso or iso+anti");
  return *e;
}

constexpr const char* kOrder5Cache = ".invsg-cache";

invsg::EnumerateOptions enumerate_opts(const Globals& g, int n, bool allow5) {
  invsg::EnumerateOptions o{g.jobs, g.cache_dir};
  if (n < 5) return o;
  if (!allow5) throw UsageError("order 5 needs --allow-order5 (slow; results are cached)");
  if (o.cache_dir.empty()) o.cache_dir = kOrder5Cache;
  return o;
}

int cmd_census(const Globals& g, int n, const std::string& eq, bool allow5) {
  auto r = invsg::census(n, equivalence_arg(eq), enumerate_opts(g, n, allow5));
  if (g.json())
    std::cout << r.to_json() << "\n";
  else
    std::cout << r.to_text();
  return kOk;
}

int cmd_enumerate(const Globals& g, int n, bool involutions, const std::string& eq,
                  bool allow5) {
  auto opts = enumerate_opts(g, n, allow5);
  std::vector<std::string> lines;
  if (involutions) {
    for (const auto& s : invsg::enumerate_involution_semigroups(
             n, equivalence_arg(eq), opts))
      lines.push_back(invsg::format_table(s));
  } else {
    for (const auto& t :
         invsg::enumerate_semigroups(n, equivalence_arg(eq), opts))
      lines.push_back("n=" + std::to_string(t.n) + " mul=" + invsg::format_mul(t));
  }
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  emit(g, json(lines), text);
  return kOk;
}

int cmd_classify(const Globals& g, const ModelArgs& m, int n,
                 const std::string& condition) {
  invsg::ClassifyOptions co;
  co.perm_bound = g.perm_bound;
  co.var_cap = g.var_cap;
  co.jobs = g.jobs;
  co.cache_dir = g.cache_dir;
  if (n > 0) {
    if (m.given() || !condition.empty())
      throw UsageError("-n cannot be combined with a model or --condition");
    auto cls = invsg::classify_census(n, co);
    bool unresolved = false;
    std::string text;
    for (const auto& c : cls) {
      unresolved = unresolved || c.verdict.tag == invsg::FBTag::kUnresolved;
      text += invsg::format_table(c.s) + "  " + c.verdict.name();
      if (c.table1_name) text += "  [" + *c.table1_name + "]";
      text += "  " + c.verdict.evidence + "\n";
    }
    if (g.json())
      std::cout << invsg::classification_json(cls) << "\n";
    else
      std::cout << text;
    return unresolved ? kFails : kOk;
  }
  auto s = m.resolve();
  if (!condition.empty()) {
    auto c = invsg::parse_condition(condition);
    if (!c) throw UsageError("--condition must be C1, C2, C3 or C4");
    auto hs = invsg::check_condition_hypotheses(s, *c, co);
    json arr = json::array();
    std::string text;
    bool all = true;
    for (const auto& h : hs) {
      all = all && h.pass;
      arr.push_back({{"hypothesis", h.name}, {"pass", h.pass}, {"witness", h.witness}});
      text += std::string(h.pass ? "pass  " : "FAIL  ") + h.name +
              (h.witness.empty() ? "" : "  (" + h.witness + ")") + "\n";
    }
    emit(g, arr, text);
    return all ? kOk : kFails;
  }
  auto v = invsg::classify(s, co);
  json j;
  j["canonical_table"] = invsg::format_mul(invsg::canonical_form(s).reduct());
  j["inv"] = invsg::format_perm(invsg::canonical_form(s).inv);
  j["verdict"] = v.name();
  j["evidence"] = v.evidence;
  if (v.perm_bound_exhausted) j["perm_bound_exhausted"] = true;
  emit(g, j, v.name() + "  " + v.evidence + "\n");
  return v.tag == invsg::FBTag::kUnresolved ? kFails : kOk;
}

int cmd_check(const Globals& g, const ModelArgs& m, const std::string& lhs_text,
              const std::string& rhs_text) {
  auto s = m.resolve();
  Word lhs = invsg::parse_word(lhs_text);
  json j;
  j["model"] = m.label();
  j["lhs"] = invsg::render(lhs);
  std::string text;
  bool holds;
  if (rhs_text == "0") {
    j["rhs"] = "0";
    holds = invsg::satisfies_zero(s, lhs, g.var_cap);
    j["holds"] = holds;
    text = invsg::render(lhs) + " = 0 " + (holds ? "holds" : "fails") + "\n";
    emit(g, j, text);
    return holds ? kOk : kFails;
  }
  Word rhs = invsg::parse_word(rhs_text);
  j["rhs"] = invsg::render(rhs);
  std::optional<invsg::System> sys;
  std::string name = m.model;
  std::transform(name.begin(), name.end(), name.begin(), ::tolower);
  if (name == "a0") sys = invsg::System::kA0;
  if (name == "b0") sys = invsg::System::kB0;
  std::optional<invsg::Assignment> ce;
  if (sys) {
    auto d = invsg::decide(*sys, lhs, rhs, g.var_cap);
    holds = d.holds;
    ce = d.certificate.counterexample;
    j["certificate"] = certificate_json(d.certificate);
    text = std::string("certificate: ") + invsg::certificate_name(d.certificate.kind) +
           " (" + d.certificate.detail + ")\n";
  } else {
    ce = invsg::satisfies(s, lhs, rhs, g.var_cap);
    holds = !ce;
  }
  j["holds"] = holds;
  if (ce) j["counterexample"] = ce->to_string();
  text = invsg::render(lhs) + " = " + invsg::render(rhs) + " " +
         (holds ? "holds" : "fails") +
         (ce ? ", counterexample " + ce->to_string() : std::string()) + "\n" + text;
  emit(g, j, text);
  return holds ? kOk : kFails;
}

json form_json(const invsg::StandardForm& f) {
  json j;
  j["prefix"] = invsg::render(f.prefix, false);
  j["pivot"] = invsg::render(Word{f.pivot}, false);
  json segs = json::array();
  for (const auto& s : f.middle)
    segs.push_back({{"kind", s.block ? "q" : "p"}, {"word", invsg::render(s.word, false)}});
  j["middle"] = segs;
  return j;
}

int cmd_normalize(const Globals& g, const std::string& system, const std::string& word,
                  const std::string& trace_out) {
  auto sys = parse_system(system);
  Word w = invsg::parse_word(word);
  invsg::Normalized n;
  try {
    n = sys == invsg::System::kA0 ? invsg::normalize_a(w) : invsg::normalize_b(w);
  } catch (const invsg::PreconditionError& e) {
    throw UsageError(e.what());
  }
  std::string trace = invsg::trace_to_json(n.trace);
  if (!trace_out.empty()) {
    std::ofstream out(trace_out);
    if (!out) throw UsageError("cannot write " + trace_out);
    out << trace << "\n";
  }
  json j;
  j["system"] = invsg::system_name(sys);
  j["input"] = invsg::render(w);
  j["standard_form"] = invsg::render(n.form.word(), false);
  j["form"] = form_json(n.form);
  j["trace"] = json::parse(trace);
  emit(g, j,
       invsg::render(n.form.word(), false) + "\n" + std::to_string(n.trace.steps.size()) +
           " steps" + (trace_out.empty() ? "" : ", trace written to " + trace_out) + "\n");
  return kOk;
}

int cmd_canonical(const Globals& g, const std::string& system, const std::string& word) {
  auto sys = parse_system(system);
  Word w = invsg::parse_word(word);
  std::string key;
  try {
    key = invsg::decision_key(sys, w);
  } catch (const invsg::PreconditionError& e) {
    throw UsageError(e.what());
  }
  json j;
  j["system"] = invsg::system_name(sys);
  j["input"] = invsg::render(w);
  j["key"] = key;
  std::string text;
  if (!invsg::is_mixed(w)) {
    j["class"] = "bipartite";
    text = "bipartite; class key " + key + "\n";
  } else if (key == "Z") {
    j["class"] = "zero";
    auto z = sys == invsg::System::kA0 ? invsg::a_zero_witness(w) : invsg::b_zero_witness(w);
    j["zero_witness"] = z->describe();
    text = "0 (" + z->describe() + ")\n";
  } else {
    Word c = invsg::canonical_mixed(sys, w);
    j["class"] = "mixed";
    j["canonical"] = invsg::render(c, false);
    text = invsg::render(c, false) + "\n";
  }
  emit(g, j, text);
  return kOk;
}

int cmd_verify_trace(const Globals& g, const std::string& system, const std::string& path,
                     bool model_check) {
  auto sys = parse_system(system);
  invsg::DerivationTrace t;
  try {
    t = invsg::trace_from_json(read_input(path));
  } catch (const invsg::ParseError& e) {
    throw UsageError(std::string("malformed trace: ") + e.what());
  }
  auto r = invsg::verify_trace(t, invsg::rules_of(sys),
                               model_check ? &invsg::model_of(sys) : nullptr);
  json j;
  j["ok"] = r.ok;
  j["steps"] = t.steps.size();
  if (!r.ok) {
    j["failed_step"] = r.failed_step;
    j["message"] = r.message;
  }
  emit(g, j,
       r.ok ? "accepted (" + std::to_string(t.steps.size()) + " steps)\n"
            : "rejected at step " + std::to_string(r.failed_step) + ": " + r.message + "\n");
  return r.ok ? kOk : kFails;
}

int cmd_table1(const Globals& g, const std::string& catalog_path) {
  auto catalog = catalog_path.empty() ? invsg::table1_catalog() : read_catalog(catalog_path);
  auto m = invsg::match_table1(
      invsg::enumerate_involution_semigroups(4, invsg::Equivalence::kIso,
                                             {g.jobs, g.cache_dir}),
      catalog);
  json j;
  json entries = json::array();
  std::string text;
  for (const auto& e : catalog) {
    entries.push_back({{"name", e.name},
                       {"label", e.label},
                       {"table", invsg::format_table(e.s)},
                       {"valid", invsg::validate(e.s).ok}});
    text += e.name + "  " + e.label + "  " + invsg::format_table(e.s) + "\n";
  }
  j["catalog"] = entries;
  j["matched"] = m.pairs.size();
  j["ok"] = m.ok;
  j["unmatched_catalog"] = m.unmatched_catalog;
  j["unmatched_enumerated"] = m.unmatched_enumerated;
  text += "matched " + std::to_string(m.pairs.size()) + " of " +
          std::to_string(catalog.size()) + (m.ok ? ", bijection\n" : ", NOT a bijection\n");
  for (const auto& u : m.unmatched_catalog) text += "  unmatched catalog entry " + u + "\n";
  for (const auto& u : m.unmatched_enumerated) text += "  unmatched class " + u + "\n";
  emit(g, j, text);
  return m.ok ? kOk : kFails;
}

int cmd_selftest(const Globals& g, bool quick, const std::string& catalog_path) {
  invsg::BatteryOptions opt;
  opt.jobs = g.jobs;
  opt.seed = g.seed;
  opt.quick = quick;
  opt.cache_dir = g.cache_dir;
  if (!catalog_path.empty()) opt.catalog = read_catalog(catalog_path);
  json arr = json::array();
  bool all = true;
  invsg::run_battery(opt, [&](const invsg::CriterionResult& r) {
    all = all && r.pass;
    if (g.json())
      arr.push_back({{"id", r.id},
                     {"title", r.title},
                     {"pass", r.pass},
                     {"skipped", r.skipped},
                     {"seconds", r.seconds},
                     {"detail", r.detail}});
    else
      std::cout << invsg::format_result(r) << std::endl;
  });
  if (g.json()) std::cout << arr.dump() << "\n";
  return all ? kOk : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite involution semigroups: census, classification, identities"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", g.jobs, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--perm-bound", g.perm_bound, "longest permutation identity searched")
      ->check(CLI::Range(2, 8));
  app.add_option("--var-cap", g.var_cap, "most variables in an exhaustive check")
      ->check(CLI::Range(1, 12));
  app.add_option("--cache-dir", g.cache_dir, "census cache directory");
  app.add_option("--seed", g.seed, "seed for randomized sweeps");

  std::function<int()> run;

  ModelArgs vm;
  std::vector<std::string> vlines;
  std::string vfile;
  auto* validate = app.add_subcommand("validate", "check the involution semigroup axioms");
  vm.add(validate);
  validate->add_option("line", vlines, "table lines: n=<k> mul=<digits> inv=<digits>");
  validate->add_option("--file", vfile, "file with one table line per line ('-' for stdin)");
  validate->callback([&] { run = [&] { return cmd_validate(g, vm, vlines, vfile); }; });

  int cn = 0;
  std::string ceq = "iso";
  auto* census = app.add_subcommand("census", "count semigroups and involution semigroups");
  census->add_option("-n,--order", cn, "order")->required()->check(CLI::Range(1, invsg::kMaxOrder));
  census->add_option("--equivalence", ceq, "iso or iso+anti (involution classes)");
  bool c5 = false;
  census->add_flag("--allow-order5", c5, "permit order 5 (cached under --cache-dir or .invsg-cache)");
  census->callback([&] { run = [&] { return cmd_census(g, cn, ceq, c5); }; });

  int en = 0;
  bool einv = false;
  std::string eeq = "iso+anti";
  auto* enumerate = app.add_subcommand("enumerate", "list canonical tables");
  enumerate->add_option("-n,--order", en, "order")->required()->check(CLI::Range(1, invsg::kMaxOrder));
  enumerate->add_flag("--involutions", einv, "list involution semigroups (default iso)");
  enumerate->add_option("--equivalence", eeq, "iso or iso+anti");
  bool e5 = false;
  enumerate->add_flag("--allow-order5", e5, "permit order 5 (cached under --cache-dir or .invsg-cache)");
  enumerate->callback([&] {
    if (einv && enumerate->count("--equivalence") == 0) eeq = "iso";
    run = [&] { return cmd_enumerate(g, en, einv, eeq, e5); };
  });

  ModelArgs km;
  int kn = 0;
  std::string kcond;
  auto* classify = app.add_subcommand("classify", "finite-basis verdict");
  km.add(classify);
  classify->add_option("-n,--order", kn, "classify the whole census of this order")
      ->check(CLI::Range(1, 4));
  classify->add_option("--condition", kcond, "itemize the hypotheses of C1..C4");
  classify->callback([&] { run = [&] { return cmd_classify(g, km, kn, kcond); }; });

  ModelArgs hm;
  std::string hl, hr;
  auto* check = app.add_subcommand("check", "decide an identity in a model");
  hm.add(check);
  check->add_option("--lhs", hl, "left-hand word")->required();
  check->add_option("--rhs", hr, "right-hand word, or 0")->required();
  check->callback([&] { run = [&] { return cmd_check(g, hm, hl, hr); }; });

  std::string ns = "a0", nw, nt;
  auto* normalize = app.add_subcommand("normalize", "A- or B-standard form with trace");
  normalize->add_option("--system", ns, "a0 or b0");
  normalize->add_option("--word,word", nw, "mixed word")->required();
  normalize->add_option("--trace-out", nt, "write the derivation trace JSON here");
  normalize->callback([&] { run = [&] { return cmd_normalize(g, ns, nw, nt); }; });

  std::string cs = "a0", cw;
  auto* canonical = app.add_subcommand("canonical", "class representative of a word");
  canonical->add_option("--system", cs, "a0 or b0");
  canonical->add_option("--word,word", cw, "word")->required();
  canonical->callback([&] { run = [&] { return cmd_canonical(g, cs, cw); }; });

  std::string ts = "a0", tp;
  bool tmodel = false;
  auto* verify = app.add_subcommand("verify-trace", "replay a derivation trace");
  verify->add_option("--system", ts, "a0 or b0");
  verify->add_option("--trace,trace", tp, "trace JSON file ('-' for stdin)")->required();
  verify->add_flag("--model-check", tmodel, "also check each step in the model");
  verify->callback([&] { run = [&] { return cmd_verify_trace(g, ts, tp, tmodel); }; });

  std::string tcat;
  auto* table1 = app.add_subcommand("table1", "print Table 1 and match it to the census");
  table1->add_option("--catalog", tcat, "alternative catalog: NAME LABEL <table line>");
  table1->callback([&] { run = [&] { return cmd_table1(g, tcat); }; });

  bool quick = false;
  std::string scat;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance battery");
  selftest->add_flag("--quick", quick, "skip the exhaustive word sweep");
  selftest->add_option("--catalog", scat, "alternative Table 1 catalog");
  selftest->callback([&] { run = [&] { return cmd_selftest(g, quick, scat); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const invsg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const invsg::VarCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
  }
  return kUsage;
}
