// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// fails. Every check is exact; there are no floating-point tolerances.

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "sandhi/compound.hpp"
#include "sandhi/report.hpp"
#include "sandhi/sandhi_rules.hpp"
#include "support.hpp"

using namespace sandhi;
using sandhi::testing::P;
using sandhi::testing::seg;

namespace {

const RuleSet& rules() { return testing::default_rules(); }

// Collects failed sub-checks for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

const MatchSet* slot(const AlignmentResult& r, std::string_view lemma) {
  for (const auto& m : r.match_sets) {
    if (m.lemma == P(lemma)) return &m;
  }
  return nullptr;
}

bool has(const AlignmentResult& r, DiagnosticCode code) {
  return std::any_of(r.diagnostics.begin(), r.diagnostics.end(), [&](const Diagnostic& d) { return d.code == code; });
}

AlignmentResult align(SentenceId id) {
  const auto& b = testing::fixture(id);
  return align_sentence(b.sentence, b.graph, rules()).result;
}

void normalization(Check& c) {
  c.expect(render_iast(normalize_anunasika(P("śrīśaṃkaraḥ"))) == "śrīśaṅkaraḥ", "śrīśaṃkaraḥ");
  testing::Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto s = testing::random_string(rng, 24, true);
    if (normalize(normalize(s)) != normalize(s)) {
      c.expect(false, "idempotence on " + render_iast(s));
      break;
    }
  }
}

void preverb_sandhi(Check& c) {
  const auto& t = rules().sandhi;
  c.expect(apply_preverb(P("pra"), P("nam"), t) == P("praṇam"), "pra+nam");
  c.expect(apply_preverb(P("pra"), P("śaṃs"), t) == P("praśaṃs"), "pra+śaṃs");
  c.expect(apply_preverb(P("vi"), P("rāj"), t) == P("virāj"), "vi+rāj");
  testing::Rng rng(2);
  for (int i = 0; i < 500; ++i) {
    const auto l = testing::random_word(rng, 1, 8);
    const auto r = testing::random_word(rng, 1, 8);
    const auto j = vowel_sandhi_join(l, r, t);
    const auto head = l.substr(0, l.size() - 1);
    const auto tail = r.substr(1);
    const bool local = j.size() >= head.size() + tail.size() && j.substr(0, head.size()) == head &&
                       j.substr(j.size() - tail.size()) == tail;
    if (!local) {
      c.expect(false, "locality on " + render_iast(l) + "+" + render_iast(r));
      break;
    }
  }
}

void compound_merge(Check& c) {
  c.expect(vowel_sandhi_join(P("śukti"), P("udbhavam"), rules().sandhi) == P("śuktyudbhavam"), "śukti+udbhavam");
  for (std::size_t n = 1; n <= 10; ++n) {
    // gap-subset oracle: each subset of the n-1 gaps is one set of cuts
    std::set<std::vector<std::size_t>> oracle;
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
      std::vector<std::size_t> cuts;
      for (std::size_t g = 0; g + 1 < n; ++g) {
        if (mask & (std::size_t{1} << g)) cuts.push_back(g + 1);
      }
      oracle.insert(cuts);
    }
    std::set<std::vector<std::size_t>> got;
    for (const auto& p : enumerate_partition_ranges(n)) {
      std::vector<std::size_t> cuts;
      for (std::size_t k = 0; k + 1 < p.size(); ++k) cuts.push_back(p[k].last);
      got.insert(cuts);
    }
    c.expect(got == oracle && enumerate_partition_ranges(n).size() == (std::size_t{1} << (n - 1)),
             "partitions n=" + std::to_string(n));
  }
  // brute-force bracketing oracle
  std::function<std::uint64_t(std::size_t)> trees = [&](std::size_t n) -> std::uint64_t {
    if (n == 1) return 1;
    std::uint64_t total = 0;
    for (std::size_t l = 1; l < n; ++l) total += trees(l) * trees(n - l);
    return total;
  };
  const std::uint64_t expected[] = {1, 1, 2, 5, 14, 42, 132};
  for (std::size_t n = 1; n <= 7; ++n) {
    c.expect(count_bracketings(n) == trees(n) && trees(n) == expected[n - 1], "bracketings n=" + std::to_string(n));
  }
}

void graph(Check& c) {
  const auto& g = testing::fixture(102).graph;
  auto id = [&](std::string_view word) -> NodeId {
    for (const auto& n : g.nodes()) {
      if (n.word == P(word)) return n.id;
    }
    return -1;
  };
  c.expect(g.label(id("virāji"), id("virājitam")) == EdgeLabel::conflicting, "(virāji, virājitam) = 2");
  c.expect(g.label(id("padma"), id("virāji")) == EdgeLabel::compatible, "(padma, virāji) = 1");
  c.expect(g.label(id("padma"), id("virājitam")) == EdgeLabel::compatible, "(padma, virājitam) = 1");

  testing::Rng rng(3);
  std::uniform_int_distribution<std::size_t> count(0, 50);
  std::uniform_int_distribution<std::size_t> pos(0, 40);
  std::uniform_int_distribution<std::size_t> width(1, 8);
  for (int round = 0; round < 100; ++round) {
    std::vector<CandidateSegment> nodes;
    const auto n = count(rng);
    for (std::size_t i = 0; i < n; ++i) {
      auto word = testing::random_word(rng, width(rng), 8);
      const auto start = pos(rng);
      auto s = seg(static_cast<NodeId>(i + 1), "a", "a", 29, {"m. sg. nom."}, {start, start + word.size()});
      s.word = word;
      nodes.push_back(with_length(std::move(s)));
    }
    const auto rg = build_graph(nodes);
    bool ok = rg.edges().size() == n * (n - 1) / 2;
    for (const auto& e : rg.edges()) {
      const auto& x = nodes[static_cast<std::size_t>(e.a - 1)].char_pos;
      const auto& y = nodes[static_cast<std::size_t>(e.b - 1)].char_pos;
      const bool shared = std::max(x.start, y.start) < std::min(x.end, y.end);
      ok = ok && e.label == (shared ? EdgeLabel::conflicting : EdgeLabel::compatible);
    }
    const auto back = read_graphml(write_graphml(rg));
    ok = ok && back.nodes() == rg.nodes() && back.edges() == rg.edges();
    if (!ok) {
      c.expect(false, "random graph round " + std::to_string(round));
      break;
    }
  }
  for (const auto& b : testing::fixture_bundles()) {
    const auto back = read_graphml(write_graphml(b.graph));
    if (back.nodes() != b.graph.nodes() || back.edges() != b.graph.edges()) {
      c.expect(false, "round trip " + std::to_string(b.sentence.sent_id));
    }
  }
}

void homonymy(Check& c) {
  auto siddha = seg(1, "siddhaḥ", "siddha", 29, {"m. sg. nom."}, {0, 6});
  auto siddha2 = siddha;
  siddha2.id = 2;
  siddha2.sense = {2};
  auto hita = seg(3, "hitam", "hita", 71, {"n. sg. acc."}, {7, 12});
  auto hita2 = hita;
  hita2.id = 4;
  hita2.sense = {2};
  const auto merged = merge_homonyms(build_graph({siddha, siddha2, hita, hita2}));
  c.expect(merged.size() == 2, "two nodes after merging");
  c.expect(merged.find(1) && merged.find(1)->sense == std::set<int>{1, 2}, "siddha senses {1,2}");
  c.expect(merged.find(3) && merged.find(3)->sense == std::set<int>{1, 2}, "hita senses {1,2}");
  c.expect(merge_homonyms(merged) == merged, "idempotence");
  for (SentenceId id : {115, 116}) {
    const auto& g = testing::fixture(id).graph;
    const auto* node = g.find(2);
    c.expect(g.size() == 2 && node && node->sense == std::set<int>{1, 2} && !g.find(3),
             "fixture " + std::to_string(id) + " merges its homonyms");
  }
  for (const auto& b : testing::fixture_bundles()) {
    if (merge_homonyms(b.graph) != b.graph) c.expect(false, "idempotence on " + std::to_string(b.sentence.sent_id));
  }
}

void alignment_stages(Check& c) {
  const auto stage = [&](SentenceId id, std::string_view lemma) -> std::optional<MatchStage> {
    const auto r = align(id);
    const auto* m = slot(r, lemma);
    return m ? m->stage : std::nullopt;
  };
  c.expect(stage(106, "kṛ") == MatchStage::DerivedStem, "kartavyā -> kṛ at DerivedStem");
  c.expect(stage(107, "tvad") == MatchStage::PronounTable, "tvam -> tvad at PronounTable");
  c.expect(stage(108, "mahā") == MatchStage::IicSegment, "mahā at IicSegment");

  // One node per stage, added in every combination: the earliest stage
  // present always wins.
  auto derived = seg(2, "tvattaḥ", "tvatta", 29, {"m. sg. nom."}, {0, 7});
  derived.der_lemma = P("tvad");
  const std::vector<std::pair<CandidateSegment, MatchStage>> nodes{
      {seg(1, "tvam", "tvad", 29, {"m. sg. nom."}, {0, 4}), MatchStage::LemmaCng},
      {derived, MatchStage::DerivedStem},
      {seg(3, "tvam", "yuṣmad", 29, {"m. sg. nom."}, {0, 4}), MatchStage::PronounTable},
  };
  const auto sentence = testing::gold(1, {{{"tvad", 29}}});
  for (unsigned mask = 1; mask < 8; ++mask) {
    std::vector<CandidateSegment> present;
    std::optional<MatchStage> want;
    for (unsigned k = 0; k < 3; ++k) {
      if ((mask & (1U << k)) == 0) continue;
      present.push_back(nodes[k].first);
      if (!want) want = nodes[k].second;
    }
    const auto m = match_lemma(sentence, build_graph(present), rules().tables, rules().cng);
    c.expect(m[0].stage == want && m[0].nodes.size() == 1, "first match wins, subset " + std::to_string(mask));
  }
}

void failure_taxonomy(Check& c) {
  const auto srutam = align(105);
  const auto* sru = slot(srutam, "śru");
  c.expect(srutam.category == Category::some_multiple, "śrutam category 2");
  c.expect(sru && sru->nodes.size() == 3, "śrutam matches three nodes");
  c.expect(has(srutam, DiagnosticCode::DerivInflMismatch), "śrutam DerivInflMismatch");

  const auto dvija = align(112);
  const auto* dvijottama = slot(dvija, "dvijottama");
  c.expect(dvijottama && dvijottama->nodes.size() == 2 && dvijottama->stage == MatchStage::CompoundMerge,
           "dvijottama two compound-merge parallels");
  c.expect(has(dvija, DiagnosticCode::MultiCompoundSplit), "dvijottama MultiCompoundSplit");

  const auto prameya = align(113);
  c.expect(prameya.category == Category::some_missing, "prameyatvam category 3");
  c.expect(has(prameya, DiagnosticCode::UnanalyzedWord), "prameyatvam UnanalyzedWord");
}

void end_to_end(Check& c) {
  const auto expected = testing::slurp(testing::source_path("tests/data/expected/alignment.jsonl"));
  for (std::size_t jobs : {1, 3, 8}) {
    const auto out = std::filesystem::temp_directory_path() / ("sandhi-align-acceptance-" + std::to_string(jobs));
    std::filesystem::remove_all(out);
    RunConfig config;
    config.corpus = testing::source_path("tests/data/fixture/corpus.jsonl");
    config.analyses = testing::source_path("tests/data/fixture/analyses.jsonl");
    config.rules_dir = testing::rules_dir();
    config.out_dir = out.string();
    config.jobs = jobs;
    std::ostringstream err;
    c.expect(run_align(config, err) == 0, "run with " + std::to_string(jobs) + " jobs: " + err.str());
    c.expect(testing::slurp((out / "alignment.jsonl").string()) == expected,
             "alignment.jsonl identical with " + std::to_string(jobs) + " jobs");
    std::filesystem::remove_all(out);
  }

  std::vector<AlignmentResult> results;
  for (const auto& b : testing::fixture_bundles()) results.push_back(align_sentence(b.sentence, b.graph, rules()).result);
  const auto r = summarize(results);
  c.expect(r.total == 20, "20 sentences");
  c.expect(r.total == r.category[0] + r.category[1] + r.category[2] + r.category[3], "total = sum of categories");
  c.expect(r.fully_matched == r.category[0] + r.category[1], "fully_matched = cat1 + cat2");

  std::vector<AlignmentResult> shaped;
  for (int i = 0; i < 39793; ++i) shaped.push_back({.category = Category::all_single});
  for (int i = 0; i < 52988; ++i) shaped.push_back({.category = Category::some_multiple});
  c.expect(summarize(shaped).fully_matched == 92781, "39,793 + 52,988 = 92,781");
}

void monotonicity(Check& c) {
  for (const auto& b : testing::fixture_bundles()) {
    const auto before = match_lemma(b.sentence, b.graph, rules().tables, rules().cng);
    const auto after = align_sentence(b.sentence, b.graph, rules()).result;
    const auto id = std::to_string(b.sentence.sent_id);
    bool superset = after.match_sets.size() == before.size();
    for (std::size_t i = 0; superset && i < before.size(); ++i) {
      const auto& a = after.match_sets[i].nodes;
      superset = std::includes(a.begin(), a.end(), before[i].nodes.begin(), before[i].nodes.end());
    }
    c.expect(superset, "superset on " + id);
    const auto was = categorize(before);
    const bool fine = was == Category::all_single || was == Category::some_multiple
                          ? after.category == was
                          : after.category != Category::missing_and_multiple || was == Category::missing_and_multiple;
    c.expect(fine, "category on " + id);
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, void (*)(Check&)>> criteria{
      {"Normalization", normalization},
      {"Preverb sandhi", preverb_sandhi},
      {"Compound merge", compound_merge},
      {"Graph", graph},
      {"Homonymy", homonymy},
      {"Alignment stages", alignment_stages},
      {"Failure taxonomy", failure_taxonomy},
      {"End-to-end", end_to_end},
      {"Modification monotonicity", monotonicity},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (c.failures.empty() ? "[PASS] " : "[FAIL] ") << name;
    for (const auto& f : c.failures) std::cout << "\n       " << f;
    std::cout << '\n';
    if (!c.failures.empty()) ++failed;
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
