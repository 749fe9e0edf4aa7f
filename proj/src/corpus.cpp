#include "susp7/corpus.hpp"

#include "susp7/decompose.hpp"
#include "susp7/io.hpp"
#include "susp7/wedge.hpp"

namespace susp7 {

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"string-h2-free",
       R"({"r":1,"d":1,"H":0,"T":{"torsion":[[3,1],[5,1]]},"wu":[0,0]})", 1,
       "S^3 v S^4 v P^5(3) v P^5(5) v S^5 v S^6 v S^8",
       "linking-form-free case with torsion-free H2: one suspension, "
       "trivial first Pontryagin class mod 3"},
      {"string-h3-free",
       R"({"r":1,"d":1,"H":{"torsion":[[3,2]]},"T":0,"wu":[0,0]})", 1,
       "S^3 v P^4(9) v S^4 v S^5 v P^6(9) v S^6 v S^8",
       "torsion-free H3: one suspension, trivial first Pontryagin class "
       "mod 3"},
      {"string-double",
       R"({"r":1,"d":1,"H":{"torsion":[[3,1]]},"T":{"torsion":[[3,2]]},)"
       R"("wu":[0,0,0]})",
       2, "S^4 v P^5(3) v S^5 v P^6(9) v S^6 v P^7(3) v S^7 v S^9",
       "both torsion groups nonzero: double suspension, trivial first "
       "Pontryagin class mod 3"},
      {"aloff-wallach-type-3",
       R"({"r":1,"d":0,"H":0,"T":{"torsion":[[3,1]]},"wu":[0]})", 1,
       "S^3 v P^5(3) v S^6 v S^8",
       "homogeneous-space type with third homology Z/3 and p1 = 0 mod 3"},
      {"aloff-wallach-type-45",
       R"({"r":1,"d":0,"H":0,"T":{"torsion":[[3,2],[5,1]]},"wu":[1]})", 1,
       "S^3 v P^5(5) v C(P^5(9);i.alpha;8) v S^6",
       "homogeneous-space type with third homology Z/45 and p1 /= 0 mod 3: "
       "the 3-primary part carries the twisted top cell"},
      {"h2-free-p1-zero", R"({"r":0,"d":0,"H":0,"T":0,"wu":[]})", 1, "S^8",
       "homotopy 7-sphere: suspension is an 8-sphere away from 2"},
      {"h2-free-rad-zero",
       R"({"r":1,"d":1,"H":0,"T":{"torsion":[[3,1]]},"wu":[1,0]})", 1,
       "S^3 v P^5(3) v C(S^4;alpha;8) v S^5 v S^6",
       "torsion-free H2, p1 lands on a free slot: top cell attaches by "
       "alpha onto a 4-sphere"},
      {"h2-free-rad-pos",
       R"({"r":0,"d":0,"H":0,"T":{"torsion":[[3,1],[3,2]]},"wu":[0,1]})", 1,
       "P^5(9) v C(P^5(3);i.alpha;8)",
       "torsion-free H2, p1 lands on the smaller 3-torsion slot of T"},
      {"h3-free-p1-zero",
       R"({"r":0,"d":0,"H":{"torsion":[[5,1]]},"T":0,"wu":[]})", 1,
       "P^4(5) v P^6(5) v S^8",
       "torsion-free H3 with 5-torsion in H2: no 3-primary slots, so the "
       "top cell splits off"},
      {"h3-free-rad-neg",
       R"({"r":0,"d":0,"H":{"torsion":[[3,1],[3,2]]},"T":0,"wu":[1,0]})", 1,
       "P^4(9) v C(P^4(3);alpha~;8) v P^6(3) v P^6(9)",
       "torsion-free H3, p1 lands on the Z/3 slot of H: top cell attaches "
       "by the lifted alpha onto P^4(3)"},
      {"h3-free-rad-zero",
       R"({"r":0,"d":1,"H":{"torsion":[[3,1]]},"T":0,"wu":[0,1]})", 1,
       "P^4(3) v C(S^4;alpha;8) v S^5 v P^6(3)",
       "torsion-free H3, p1 lands on the free slot"},
      {"general-p1-zero",
       R"({"r":2,"d":0,"H":{"torsion":[[3,1]]},"T":{"torsion":[[5,1]]},)"
       R"("wu":[0]})",
       2, "S^4 v S^4 v P^5(3) v P^6(5) v P^7(3) v S^7 v S^7 v S^9",
       "general double suspension with trivial p1 mod 3"},
      {"general-rad-neg",
       R"({"r":0,"d":0,"H":{"torsion":[[3,2]]},"T":{"torsion":[[3,1]]},)"
       R"("wu":[1,0]})",
       2, "C(P^5(9);alpha~;9) v P^6(3) v P^7(9)",
       "general double suspension, p1 lands on the H slot"},
      {"general-rad-zero",
       R"({"r":0,"d":2,"H":{"torsion":[[3,1]]},"T":{"torsion":[[3,1]]},)"
       R"("wu":[0,1,0,0]})",
       2, "P^5(3) v S^5 v P^6(3) v C(S^5;alpha;9) v S^6 v S^6 v P^7(3)",
       "general double suspension, p1 lands on a free slot"},
      {"general-rad-pos",
       R"({"r":0,"d":0,"H":{"torsion":[[3,1]]},"T":{"torsion":[[3,1]]},)"
       R"("wu":[0,1]})",
       2, "P^5(3) v C(P^6(3);i.alpha;9) v P^7(3)",
       "general double suspension, p1 lands on the T slot: suspended "
       "twisted block"},
  };
  return entries;
}

std::vector<CorpusOutcome> run_corpus() {
  std::vector<CorpusOutcome> outcomes;
  for (const auto& entry : builtin_corpus()) {
    CorpusOutcome o;
    o.name = entry.name;
    o.want = entry.expected;
    try {
      const RawDescriptor raw = raw_descriptor_from_text(entry.descriptor_json);
      const ManifoldDescriptor m = validate(raw);
      const DecompositionResult result =
          entry.suspensions == 1 ? decompose_sigma(m) : decompose_sigma2(m);
      o.got = render(result.wedge);
      // Round-trip the frozen string so the corpus also exercises the parser.
      const bool grammar_ok = render(parse_wedge(entry.expected)) ==
                              entry.expected;
      o.ok = grammar_ok && o.got == o.want;
    } catch (const std::exception& e) {
      o.got = std::string("error: ") + e.what();
      o.ok = false;
    }
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

}  // namespace susp7
