// Regenerates data/corpus.json: every expected value is computed by the
// closed-braid oracle here, never typed in by hand. Each entry is verified
// against both engines before being emitted.

#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "talex/talex.hpp"

using namespace talex;
using nlohmann::json;

namespace {

std::string provenance_word(const std::string& braid_text) {
  return braid_text.empty() ? "identity" : braid_text;
}

json entry_from_braid(const std::string& name, const std::string& braid_text,
                      std::size_t strands) {
  BraidWord b = parse_braid_word(braid_text, strands);
  LaurentPoly expected = closed_braid_oracle(b);
  TangleWord w = braid_closure_to_11_word(b);
  LaurentPoly got = alexander_of_11(rho_word(w));
  if (!eq_up_to_unit(got, expected)) throw std::logic_error(name + ": engines disagree");
  LaurentPoly plat_got = alexander_of_11(rho_plat(word_to_plat(w)));
  if (!eq_up_to_unit(plat_got, expected)) throw std::logic_error(name + ": plat disagrees");
  return {{"name", name},
          {"kind", "word"},
          {"input", render_tangle_word(w)},
          {"expected", expected.to_string()},
          {"provenance", "closed_braid_oracle(" + provenance_word(braid_text) + " in B_" +
                             std::to_string(strands) + ")"}};
}

json entry_from_word(const std::string& name, const std::string& word_text,
                     const std::string& oracle_braid, std::size_t strands) {
  BraidWord b = parse_braid_word(oracle_braid, strands);
  LaurentPoly expected = closed_braid_oracle(b);
  TangleWord w = parse_tangle_word(word_text);
  if (!eq_up_to_unit(alexander_of_11(rho_word(w)), expected))
    throw std::logic_error(name + ": engines disagree");
  return {{"name", name},
          {"kind", "word"},
          {"input", word_text},
          {"expected", expected.to_string()},
          {"provenance", "closed_braid_oracle(" + provenance_word(oracle_braid) + " in B_" +
                             std::to_string(strands) + ")"}};
}

json entry_from_plat(const std::string& name, const PlatDescription& pd,
                     const std::string& oracle_braid, std::size_t strands) {
  BraidWord b = parse_braid_word(oracle_braid, strands);
  LaurentPoly expected = closed_braid_oracle(b);
  if (!eq_up_to_unit(alexander_of_11(rho_plat(pd)), expected))
    throw std::logic_error(name + ": engines disagree");
  return {{"name", name},
          {"kind", "plat"},
          {"input", render_plat_text(pd)},
          {"expected", expected.to_string()},
          {"provenance", "closed_braid_oracle(" + provenance_word(oracle_braid) + " in B_" +
                             std::to_string(strands) + ")"}};
}

}  // namespace

int main() {
  json corpus = json::array();

  corpus.push_back(entry_from_word("unknot-identity-strand", "bottom:+", "", 1));
  corpus.push_back(entry_from_word(
      "trefoil", "bottom:+ ; cup@1(+-) ; s1 ; s1 ; s1 ; cap@1(+-)", "s1 s1 s1", 2));

  PlatDescription trefoil_plat =
      parse_plat_text("strands=3; signs=++-; braid=s1 s1 s1; bottom=1; top=1");
  corpus.push_back(entry_from_plat("trefoil-plat", trefoil_plat, "s1 s1 s1", 2));
  corpus.push_back(
      entry_from_plat("trefoil-plat-stabilized", stabilize(trefoil_plat), "s1 s1 s1", 2));
  corpus.push_back(
      entry_from_plat("trefoil-plat-stabilized-twice", stabilize(stabilize(trefoil_plat)),
                      "s1 s1 s1", 2));

  corpus.push_back(entry_from_braid("figure-eight", "s1 s2^-1 s1 s2^-1", 3));
  corpus.push_back(entry_from_word("cinquefoil", "bottom:+ ; cup@1(+-) ; s1^5 ; cap@1(+-)",
                                   "s1^5", 2));
  corpus.push_back(entry_from_word("torus-2-7", "bottom:+ ; cup@1(+-) ; s1^7 ; cap@1(+-)",
                                   "s1^7", 2));
  corpus.push_back(entry_from_word("hopf-link", "bottom:+ ; cup@1(+-) ; s1 ; s1 ; cap@1(+-)",
                                   "s1 s1", 2));
  corpus.push_back(entry_from_word("torus-link-2-4", "bottom:+ ; cup@1(+-) ; s1^4 ; cap@1(+-)",
                                   "s1^4", 2));
  corpus.push_back(entry_from_braid("granny-knot", "s1^3 s2^3", 3));
  corpus.push_back(entry_from_braid("square-knot", "s1^3 s2^-3", 3));
  corpus.push_back(entry_from_braid("knot-6-2-braid", "s1^3 s2^-1 s1 s2^-1", 3));

  corpus.push_back(entry_from_word("split-two-unknots", "bottom:+ ; cup@1(+-) ; cap@1(+-)", "",
                                   2));
  PlatDescription split = parse_plat_text("strands=3; signs=++-; braid=; bottom=1; top=1");
  corpus.push_back(entry_from_plat("split-two-unknots-plat", split, "", 2));

  std::cout << corpus.dump(2) << "\n";
  return 0;
}
