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

#include "invsg/battery.h"

#include <chrono>
#include <cstdio>
#include <map>
#include <mutex>
#include <random>
#include <unordered_map>

#include "invsg/basis.h"
#include "invsg/classifier.h"
#include "invsg/enumerator.h"
#include "invsg/parallel.h"

namespace invsg {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const char* kTitles[kCriteria + 1] = {
    "",
    "census of order 2",
    "census of order 3",
    "census of order 4",
    "Table 1 round trip",
    "classifier labels on the order-4 census",
    "basis identities hold in the models",
    "decide agrees with the model oracle",
    "normalization soundness",
    "zero-word characterization",
    "quotient maps onto Sl3",
};

void add_example(SweepStats& s, const std::string& e) {
  if (s.examples.size() < 8) s.examples.push_back(e);
}

std::string census_detail(const CensusReport& r) {
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "iso %ld, iso+anti %ld, no involution %ld, involution %ld "
                "(%ld trivial / %ld non-trivial)",
                r.semigroups_up_to_iso, r.semigroups_up_to_iso_antiiso,
                r.no_involution, r.involution_semigroups, r.trivial_involution,
                r.nontrivial_involution);
  return buf;
}

struct Universe {
  int max_len;
  std::vector<long> start;  // first index of each length
  long size = 0;

  explicit Universe(int len) : max_len(len) {
    long count = 1;
    for (int l = 1; l <= len; ++l) {
      count *= 6;
      start.push_back(size);
      size += count;
    }
  }

  Word at(long idx) const {
    int l = max_len;
    while (start[l - 1] > idx) --l;
    long r = idx - start[l - 1];
    Word w(l);
    for (int i = l - 1; i >= 0; --i) {
      int d = static_cast<int>(r % 6);
      r /= 6;
      w[i] = Letter{static_cast<uint8_t>(d / 2), d % 2 == 1};
    }
    return w;
  }
};

Word random_word(std::mt19937_64& rng, int len, int bases) {
  Word w(len);
  for (auto& l : w) {
    l.base = static_cast<uint8_t>(rng() % bases);
    l.star = rng() % 2;
  }
  return w;
}

// p·s(lhs)·q and p·s(rhs)·q for a random non-zero rule and substitution.
std::pair<Word, Word> related_pair(std::mt19937_64& rng, const RuleSystem& rules,
                                   int bases, size_t max_len) {
  for (;;) {
    const auto& r = rules.rules[rng() % rules.rules.size()];
    if (r.zero_rule) continue;
    Substitution s;
    for (auto b : bases_of(concat({r.lhs, r.rhs})))
      s[b] = random_word(rng, 1 + static_cast<int>(rng() % (b == kVarT ? 3 : 2)), bases);
    Word p = random_word(rng, static_cast<int>(rng() % 3), bases);
    Word q = random_word(rng, static_cast<int>(rng() % 3), bases);
    Word u = concat({p, instantiate(r.lhs, s), q});
    Word v = concat({p, instantiate(r.rhs, s), q});
    if (u.size() > max_len || v.size() > max_len) continue;
    if (rng() % 2) {
      u = star_word(u);
      v = star_word(v);
    }
    return {u, v};
  }
}

struct WordOutcome {
  std::string key[2];
  std::string sig[2];
};

void check_word(System sys, const Word& w, WordOutcome& o, SweepStats& st) {
  int k = sys == System::kA0 ? 0 : 1;
  const auto& model = model_of(sys);
  std::string sig;
  for (Element e : evaluation_table(model, w, {0, 1, 2}))
    sig += static_cast<char>('1' + e);
  o.sig[k] = sig;
  try {
    o.key[k] = decision_key(sys, w);
  } catch (const std::exception& e) {
    o.key[k] = "error:" + render(w);
    ++st.partition_mismatches;
    add_example(st, "decision_key " + render(w) + ": " + e.what());
  }
  if (!is_mixed(w)) return;
  try {
    bool z = sys == System::kA0 ? a_zero_witness(w).has_value()
                                : b_zero_witness(w).has_value();
    bool oz = satisfies_zero(model, w);
    if (z != oz) {
      ++st.zero_discrepancies;
      add_example(st, std::string("zero ") + render(w) + (z ? " witness" : " no witness") +
                          ", model says " + (oz ? "zero" : "non-zero"));
    }
    if (z) return;
    ++st.mixed_nonzero;
    Normalized n = sys == System::kA0 ? normalize_a(w) : normalize_b(w);
    Word out = n.form.word();
    bool standard = sys == System::kA0 ? is_a_standard(out) : is_b_standard(out);
    auto tc = verify_trace(n.trace, rules_of(sys));
    if (!standard || !tc.ok || n.trace.start != w || n.trace.end != out ||
        satisfies(model, w, out)) {
      ++st.normalize_failures;
      add_example(st, "normalize " + render(w) + " -> " + render(out) + " " + tc.message);
    }
  } catch (const std::exception& e) {
    ++st.normalize_failures;
    add_example(st, "normalize " + render(w) + ": " + e.what());
  }
}

void merge_stats(SweepStats& into, const SweepStats& from) {
  into.mixed_nonzero += from.mixed_nonzero;
  into.partition_mismatches += from.partition_mismatches;
  into.normalize_failures += from.normalize_failures;
  into.zero_discrepancies += from.zero_discrepancies;
  for (const auto& e : from.examples) add_example(into, e);
}

void random_pairs(const BatteryOptions& opt, Sweep& sw) {
  std::mt19937_64 rng(opt.seed);
  std::vector<std::pair<Word, Word>> pairs;
  for (int i = 0; i < opt.random_pairs; ++i) {
    int bases = 1 + static_cast<int>(rng() % 4);
    if (i % 2 == 0) {
      pairs.emplace_back(random_word(rng, 1 + rng() % 12, bases),
                         random_word(rng, 1 + rng() % 12, bases));
    } else {
      const auto& rules = i % 4 == 1 ? system_a0() : system_b0();
      pairs.push_back(related_pair(rng, rules, bases, 12));
    }
  }
  std::mutex mu;
  parallel_for(pairs.size(), opt.jobs, [&](size_t i) {
    for (int k = 0; k < 2; ++k) {
      System sys = k == 0 ? System::kA0 : System::kB0;
      SweepStats& st = k == 0 ? sw.a0 : sw.b0;
      const auto& [u, v] = pairs[i];
      std::string err;
      try {
        bool holds = decide(sys, u, v).holds;
        bool oracle = !satisfies(model_of(sys), u, v).has_value();
        if (holds != oracle) err = "verdict differs from oracle";
        if (holds) {
          std::lock_guard<std::mutex> lock(mu);
          ++st.random_holds;
        }
      } catch (const std::exception& e) {
        err = e.what();
      }
      std::lock_guard<std::mutex> lock(mu);
      ++st.random_pairs;
      if (!err.empty()) {
        ++st.random_failures;
        add_example(st, "random pair " + render(u) + " / " + render(v) + ": " + err);
      }
    }
  });
}

}  // namespace

Sweep run_sweep(const BatteryOptions& opt) {
  auto t0 = Clock::now();
  Sweep sw;
  Universe uni(opt.max_len);
  constexpr long kChunk = 2048;
  long chunks = (uni.size + kChunk - 1) / kChunk;
  std::vector<std::vector<WordOutcome>> outcomes(chunks);
  std::mutex mu;
  parallel_for(static_cast<size_t>(chunks), opt.jobs, [&](size_t c) {
    SweepStats la, lb;
    long lo = static_cast<long>(c) * kChunk, hi = std::min(uni.size, lo + kChunk);
    auto& out = outcomes[c];
    out.resize(hi - lo);
    for (long i = lo; i < hi; ++i) {
      Word w = uni.at(i);
      check_word(System::kA0, w, out[i - lo], la);
      check_word(System::kB0, w, out[i - lo], lb);
    }
    std::lock_guard<std::mutex> lock(mu);
    merge_stats(sw.a0, la);
    merge_stats(sw.b0, lb);
  });
  for (int k = 0; k < 2; ++k) {
    SweepStats& st = k == 0 ? sw.a0 : sw.b0;
    System sys = k == 0 ? System::kA0 : System::kB0;
    st.words = uni.size;
    std::unordered_map<std::string, std::string> key_sig, sig_key;
    std::unordered_map<std::string, int> sig_class;
    std::vector<int> sig_of(uni.size);
    std::vector<std::vector<long>> members;
    for (long i = 0; i < uni.size; ++i) {
      const auto& o = outcomes[i / kChunk][i % kChunk];
      auto [si, snew] = sig_class.emplace(o.sig[k], static_cast<int>(sig_class.size()));
      if (snew) members.emplace_back();
      members[si->second].push_back(i);
      sig_of[i] = si->second;
      // Equal keys must mean equal value tables and conversely.
      auto ks = key_sig.emplace(o.key[k], o.sig[k]).first;
      auto sk = sig_key.emplace(o.sig[k], o.key[k]).first;
      if (ks->second != o.sig[k] || sk->second != o.key[k]) {
        ++st.partition_mismatches;
        add_example(st, "class of " + render(uni.at(i)) + " (key " + o.key[k] +
                            ") disagrees with its value table");
      }
    }
    st.classes = static_cast<long>(sig_class.size());
    std::mt19937_64 rng(opt.seed + k);
    int samples = 10000;
    std::vector<std::pair<long, long>> picks;
    for (int s = 0; s < samples; ++s) {
      long i = static_cast<long>(rng() % uni.size), j;
      if (s % 2 == 0) {
        const auto& m = members[sig_of[i]];
        j = m[rng() % m.size()];
      } else {
        j = static_cast<long>(rng() % uni.size);
      }
      picks.emplace_back(i, j);
    }
    parallel_for(picks.size(), opt.jobs, [&](size_t s) {
      Word u = uni.at(picks[s].first), v = uni.at(picks[s].second);
      std::string err;
      try {
        bool holds = decide(sys, u, v).holds;
        if (holds != (sig_of[picks[s].first] == sig_of[picks[s].second]))
          err = "verdict differs from value tables";
      } catch (const std::exception& e) {
        err = e.what();
      }
      std::lock_guard<std::mutex> lock(mu);
      ++st.decide_samples;
      if (!err.empty()) {
        ++st.decide_failures;
        add_example(st, "decide " + render(u) + " / " + render(v) + ": " + err);
      }
    });
  }
  random_pairs(opt, sw);
  sw.seconds = since(t0);
  return sw;
}

namespace {

CriterionResult census_criterion(int id, int n, const BatteryOptions& opt,
                                 const CensusReport& want, bool check_anti) {
  CriterionResult r;
  auto got = census(n, Equivalence::kIso, {opt.jobs, opt.cache_dir});
  r.detail = census_detail(got);
  r.pass = got.involution_semigroups == want.involution_semigroups &&
           got.trivial_involution == want.trivial_involution &&
           got.nontrivial_involution == want.nontrivial_involution;
  if (check_anti)
    r.pass = r.pass &&
             got.semigroups_up_to_iso_antiiso == want.semigroups_up_to_iso_antiiso &&
             got.no_involution == want.no_involution;
  (void)id;
  return r;
}

CriterionResult basis_criterion() {
  CriterionResult r;
  std::vector<std::string> failed;
  auto check = [&](const InvolutionSemigroup& m, const char* name,
                   const std::vector<IdentityRule>& rules) {
    int n = 0;
    for (const auto& rule : rules) {
      bool ok = rule.zero_rule ? satisfies_zero(m, rule.lhs)
                               : !satisfies(m, rule.lhs, rule.rhs).has_value();
      if (!ok) failed.push_back(std::string(name) + " " + rule.tag + " " + rule.render());
      ++n;
    }
    return n;
  };
  auto a = basis_a0_rules(), da = derived_rules_a0();
  a.insert(a.end(), da.begin(), da.end());
  auto b = basis_b0_rules(), db = derived_rules_b0();
  b.insert(b.end(), db.begin(), db.end());
  b.insert(b.end(), da.begin(), da.end());
  int na = check(model_a0(), "A0", a);
  int nb = check(model_b0(), "B0", b);
  r.pass = failed.empty();
  r.detail = std::to_string(na) + " identities in A0, " + std::to_string(nb) +
             " in B0";
  for (const auto& f : failed) r.detail += "; fails: " + f;
  return r;
}

CriterionResult quotient_criterion() {
  CriterionResult r;
  Perm map{0, 0, 1, 2};
  bool a = is_homomorphism(model_a0(), model_sl3(), map);
  bool b = is_homomorphism(model_b0(), model_sl3(), map);
  r.pass = a && b;
  r.detail = std::string("A0 -> Sl3 ") + (a ? "ok" : "fails") + ", B0 -> Sl3 " +
             (b ? "ok" : "fails") + " (1,2 -> 0, 3 -> e, 4 -> f; onto)";
  return r;
}

CriterionResult sweep_criterion(int id, const Sweep& sw) {
  CriterionResult r;
  const SweepStats* st[2] = {&sw.a0, &sw.b0};
  long bad = 0;
  std::string d;
  for (int k = 0; k < 2; ++k) {
    const auto& s = *st[k];
    long b = 0;
    if (!d.empty()) d += "; ";
    d += k == 0 ? "A0: " : "B0: ";
    if (id == 7) {
      b = s.partition_mismatches + s.decide_failures + s.random_failures;
      d += std::to_string(s.words) + " words in " + std::to_string(s.classes) +
           " classes, " + std::to_string(s.partition_mismatches) +
           " partition mismatches, " + std::to_string(s.decide_failures) + "/" +
           std::to_string(s.decide_samples) + " sampled decide failures, " +
           std::to_string(s.random_failures) + "/" + std::to_string(s.random_pairs) +
           " random pair failures (" + std::to_string(s.random_holds) + " holding)";
    } else if (id == 8) {
      if (k == 0) d = "measured in the sweep above; " + d;
      b = s.normalize_failures;
      d += std::to_string(s.normalize_failures) + " failures over " +
           std::to_string(s.mixed_nonzero) + " mixed non-zero words";
    } else {
      if (k == 0) d = "measured in the sweep above; " + d;
      b = s.zero_discrepancies;
      d += std::to_string(s.zero_discrepancies) + " discrepancies";
    }
    bad += b;
    if (b)
      for (const auto& e : s.examples) d += "; " + e;
  }
  r.pass = bad == 0;
  r.detail = d;
  return r;
}

CriterionResult run_one(int id, const BatteryOptions& opt, const Sweep* sweep) {
  auto t0 = Clock::now();
  CriterionResult r;
  try {
    switch (id) {
      case 1: {
        CensusReport w;
        w.involution_semigroups = 3;
        w.trivial_involution = 3;
        r = census_criterion(id, 2, opt, w, false);
        break;
      }
      case 2: {
        CensusReport w;
        w.involution_semigroups = 15;
        w.trivial_involution = 12;
        w.nontrivial_involution = 3;
        r = census_criterion(id, 3, opt, w, false);
        break;
      }
      case 3: {
        CensusReport w;
        w.semigroups_up_to_iso_antiiso = 126;
        w.no_involution = 62;
        w.involution_semigroups = 83;
        w.trivial_involution = 58;
        w.nontrivial_involution = 25;
        r = census_criterion(id, 4, opt, w, true);
        break;
      }
      case 4: {
        auto m = match_table1(
            enumerate_involution_semigroups(4, Equivalence::kIso, {opt.jobs, opt.cache_dir}),
            opt.catalog);
        r.pass = m.ok && m.pairs.size() == 25;
        r.detail = std::to_string(m.pairs.size()) + " matched";
        for (const auto& u : m.unmatched_catalog) r.detail += "; unmatched catalog " + u;
        for (const auto& u : m.unmatched_enumerated)
          r.detail += "; unmatched class " + u;
        break;
      }
      case 5: {
        ClassifyOptions co;
        co.jobs = opt.jobs;
        co.cache_dir = opt.cache_dir;
        std::map<std::string, int> ms;
        for (const auto& c : classify_census(4, co)) ++ms[c.verdict.label()];
        std::map<std::string, int> want{{"C0", 58}, {"C1", 19}, {"C2", 2},
                                        {"C3", 1},  {"C4", 1},  {"A0", 1},
                                        {"B0", 1}};
        r.pass = ms == want;
        for (const auto& [k, v] : ms)
          r.detail += (r.detail.empty() ? "" : " ") + k + "x" + std::to_string(v);
        break;
      }
      case 6:
        r = basis_criterion();
        break;
      case 7:
      case 8:
      case 9:
        if (opt.quick) {
          r.skipped = true;
          r.pass = true;
          r.detail = "skipped (quick)";
        } else if (sweep) {
          r = sweep_criterion(id, *sweep);
        } else {
          r = sweep_criterion(id, run_sweep(opt));
        }
        break;
      case 10:
        r = quotient_criterion();
        break;
      default:
        throw std::invalid_argument("no criterion " + std::to_string(id));
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.id = id;
  r.title = kTitles[id];
  r.seconds = since(t0);
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const BatteryOptions& opt) {
  return run_one(id, opt, nullptr);
}

std::vector<CriterionResult> run_battery(
    const BatteryOptions& opt,
    const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  std::optional<Sweep> sweep;
  double sweep_seconds = 0;
  for (int id = 1; id <= kCriteria; ++id) {
    if (id == 7 && !opt.quick) {
      auto t0 = Clock::now();
      sweep = run_sweep(opt);
      sweep_seconds = since(t0);
    }
    auto r = run_one(id, opt, sweep ? &*sweep : nullptr);
    if (id == 7) r.seconds += sweep_seconds;
    out.push_back(r);
    if (on_result) on_result(r);
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "%s %2d  %-42s (%.2f s)  ",
                r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL"), r.id,
                r.title.c_str(), r.seconds);
  return head + r.detail;
}

}  // namespace invsg
