// Command-line front end: evaluates tangle words and plat descriptions to
// graded matrix families over Z[t,t^-1], prints the closed-braid oracle, runs
// the shipped corpus, and self-tests the algebra.

#include <chrono>
#include <exception>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "talex/talex.hpp"

namespace {

using nlohmann::json;
using namespace talex;

json graded_to_json(const GradedMap& g, bool normalized, int degree_filter) {
  json out;
  out["shift"] = g.shift;
  out["unit_normalized"] = normalized;
  json grades = json::array();
  for (std::size_t i = 0; i <= g.source_rank; ++i) {
    if (degree_filter >= 0 && static_cast<std::size_t>(degree_filter) != i) continue;
    const RingMatrix& b = g.blocks[i];
    if (b.rows() == 0 || b.cols() == 0) continue;
    json rows = json::array();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < b.cols(); ++c) row.push_back(b.at(r, c).to_string());
      rows.push_back(row);
    }
    grades.push_back({{"i", i}, {"rows", b.rows()}, {"cols", b.cols()}, {"matrix", rows}});
  }
  out["grades"] = grades;
  if (g.source_rank == 0 && g.target_rank == 0) {
    LaurentPoly delta = g.blocks[0].at(0, 0);
    out["alexander_polynomial"] = delta.to_string();
    if (has_symmetric_form(delta))
      out["alexander_polynomial_symmetric"] = render_symmetric(delta);
  }
  return out;
}

int emit_graded(const GradedMap& g, bool normalized, int degree) {
  std::cout << graded_to_json(g, normalized, degree).dump(2) << "\n";
  return 0;
}

struct CorpusEntry {
  std::string name;
  std::string kind;
  std::string input;
  std::string expected;
  std::string provenance;
};

LaurentPoly evaluate_11(const CorpusEntry& e) {
  GradedMap rho;
  if (e.kind == "word") {
    rho = rho_word(parse_tangle_word(e.input));
  } else if (e.kind == "plat") {
    rho = rho_plat(parse_plat_text(e.input));
  } else {
    throw std::invalid_argument("corpus entry kind must be 'word' or 'plat'");
  }
  if (rho.source_rank != 0 || rho.target_rank != 0)
    throw std::invalid_argument("corpus entry is not a (1,1)-tangle");
  return alexander_of_11(rho);
}

int run_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "corpus: cannot open " << path << "\n";
    return 1;
  }
  json doc = json::parse(in);
  std::vector<CorpusEntry> entries;
  for (const auto& e : doc)
    entries.push_back({e.at("name"), e.at("kind"), e.at("input"), e.at("expected"),
                       e.value("provenance", "")});

  std::vector<std::future<std::pair<bool, std::string>>> jobs;
  for (const CorpusEntry& e : entries)
    jobs.push_back(std::async(std::launch::async, [&e]() -> std::pair<bool, std::string> {
      try {
        LaurentPoly got = evaluate_11(e);
        LaurentPoly want = parse_laurent(e.expected);
        bool ok = eq_up_to_unit(got, want);
        return {ok, ok ? got.normalize().first.to_string()
                       : "got " + got.normalize().first.to_string() + ", expected " +
                             want.normalize().first.to_string()};
      } catch (const std::exception& ex) {
        return {false, std::string("error: ") + ex.what()};
      }
    }));

  std::size_t failures = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto [ok, detail] = jobs[i].get();
    if (!ok) ++failures;
    std::cout << (ok ? "PASS  " : "FAIL  ") << entries[i].name << "  " << detail << "\n";
  }
  std::cout << entries.size() - failures << "/" << entries.size() << " corpus entries pass\n";
  return failures == 0 ? 0 : 1;
}

bool selftest_burau() {
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t bits = 0; bits < (1u << m); ++bits) {
      SignSequence e(m);
      for (std::size_t i = 0; i < m; ++i) e[i] = (bits >> i) & 1 ? +1 : -1;
      for (int i = 1; static_cast<std::size_t>(i) + 1 < m; ++i) {
        BraidWord lhs{m, {{i, +1}, {i + 1, +1}, {i, +1}}};
        BraidWord rhs{m, {{i + 1, +1}, {i, +1}, {i + 1, +1}}};
        if (!(burau_word(e, lhs) == burau_word(e, rhs))) return false;
      }
      for (int i = 1; static_cast<std::size_t>(i) < m; ++i) {
        BraidWord w{m, {{i, +1}, {i, -1}}};
        if (!(burau_word(e, w).matrix == RingMatrix::identity(m - 1))) return false;
      }
    }
  return true;
}

bool selftest_cross_validation(Rng& rng) {
  for (int trial = 0; trial < 60; ++trial) {
    PlatDescription pd = random_plat(rng, 5, 6);
    if (!graded_map_eq(rho_plat(pd), rho_word(canonical_word(pd)))) return false;
  }
  return true;
}

bool selftest_invariance(Rng& rng) {
  int done = 0;
  while (done < 40) {
    PlatDescription pd = random_plat(rng, 5, 5);
    GradedMap base = rho_plat(pd);
    if (!graded_map_eq(base, rho_plat(stabilize(pd)))) return false;
    ++done;
    if (pd.n_minus() >= 1) {
      BraidWord h = random_hilden_word(rng, pd.m_minus, pd.n_minus(), 2);
      if (!graded_map_eq(base, rho_plat(hilden_move_bottom(pd, h)))) return false;
      ++done;
    }
    if (pd.n_plus() >= 1) {
      BraidWord h = random_hilden_word(rng, pd.m_plus, pd.n_plus(), 2);
      if (!graded_map_eq(base, rho_plat(hilden_move_top(pd, h)))) return false;
      ++done;
    }
  }
  return true;
}

bool selftest_oracle() {
  const std::vector<std::pair<std::string, std::size_t>> braids = {
      {"s1 s1 s1", 2}, {"s1 s1", 2}, {"s1^5", 2}, {"s1 s2^-1 s1 s2^-1", 3}};
  for (const auto& [text, strands] : braids) {
    BraidWord w = parse_braid_word(text, strands);
    TangleWord tw = braid_closure_to_11_word(w);
    if (!eq_up_to_unit(alexander_of_11(rho_word(tw)), closed_braid_oracle(w))) return false;
  }
  return true;
}

int run_selftest() {
  Rng rng(0xC0FFEE);
  auto t0 = std::chrono::steady_clock::now();
  struct Suite {
    const char* name;
    bool ok;
  };
  std::vector<Suite> suites;
  suites.push_back({"burau groupoid relations", selftest_burau()});
  suites.push_back({"plat vs word cross-validation", selftest_cross_validation(rng)});
  suites.push_back({"hilden/stabilization invariance", selftest_invariance(rng)});
  suites.push_back({"closed-braid oracle agreement", selftest_oracle()});
  bool all = true;
  for (const Suite& s : suites) {
    all = all && s.ok;
    std::cout << (s.ok ? "ok    " : "FAIL  ") << s.name << "\n";
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cout << (all ? "selftest passed" : "selftest FAILED") << " in " << ms << " ms\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander invariants of oriented tangles over Z[t,t^-1]"};
  app.require_subcommand(1);

  std::string word_text, braid_text, signs_text, corpus_path = "data/corpus.json";
  long strands = 0, bottom_ends = 1, top_ends = 1;
  bool normalize = true;
  int degree = -1;

  CLI::App* word = app.add_subcommand("word", "evaluate a tangle word");
  word->add_option("text", word_text, "e.g. \"bottom:+ ; cup@1(+-) ; s1 ; s1 ; s1 ; cap@1(+-)\"")
      ->required();
  word->add_flag("--normalize,!--no-normalize", normalize, "unit-normalize the output (default on)");
  word->add_option("--degree", degree, "print only this exterior degree");

  CLI::App* plat = app.add_subcommand("plat", "evaluate a plat description");
  plat->add_option("--strands", strands, "strand count of the braid")->required();
  plat->add_option("--signs", signs_text, "signs on the middle disk, e.g. \"++-\"")->required();
  plat->add_option("--braid", braid_text, "braid word, e.g. \"s1 s1 s1\"");
  plat->add_option("--bottom-ends", bottom_ends, "free endpoints at the bottom")->required();
  plat->add_option("--top-ends", top_ends, "free endpoints at the top")->required();
  plat->add_flag("--normalize,!--no-normalize", normalize, "unit-normalize the output (default on)");
  plat->add_option("--degree", degree, "print only this exterior degree");

  CLI::App* oracle = app.add_subcommand("oracle", "Alexander polynomial of a braid closure");
  oracle->add_option("--strands", strands, "strand count")->required();
  oracle->add_option("--braid", braid_text, "braid word");

  CLI::App* corpus = app.add_subcommand("corpus", "run the known-knot corpus");
  corpus->add_option("file", corpus_path, "corpus JSON file");

  app.add_subcommand("selftest", "run the randomized consistency suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (word->parsed()) {
      TangleWord w = parse_tangle_word(word_text);
      return emit_graded(normalize ? rho_word(w) : rho_word_raw(w), normalize, degree);
    }
    if (plat->parsed()) {
      PlatDescription pd;
      pd.braid = parse_braid_word(braid_text, static_cast<std::size_t>(strands));
      pd.middle = parse_signs(signs_text);
      pd.m_minus = static_cast<std::size_t>(bottom_ends);
      pd.m_plus = static_cast<std::size_t>(top_ends);
      pd.validate();
      return emit_graded(normalize ? rho_plat(pd) : rho_plat_raw(pd), normalize, degree);
    }
    if (oracle->parsed()) {
      BraidWord w = parse_braid_word(braid_text, static_cast<std::size_t>(strands));
      LaurentPoly delta = closed_braid_oracle(w);
      json out;
      out["alexander_polynomial"] = delta.to_string();
      if (has_symmetric_form(delta)) out["symmetric"] = render_symmetric(delta);
      out["closure_components"] = closure_component_count(w);
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (corpus->parsed()) return run_corpus(corpus_path);
    return run_selftest();
  } catch (const ParseError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  } catch (const IllFormed& ex) {
    std::cerr << "error: ill-formed tangle word: " << ex.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return 2;
  }
}
