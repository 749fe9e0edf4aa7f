#pragma once

#include <string>
#include <vector>

namespace susp7 {

// Golden cases, one per published decomposition statement this tool covers.
struct CorpusEntry {
  std::string name;
  std::string descriptor_json;
  int suspensions = 1;
  std::string expected;  // canonical wedge text
  std::string citation;
};

const std::vector<CorpusEntry>& builtin_corpus();

struct CorpusOutcome {
  std::string name;
  bool ok = false;
  std::string got;
  std::string want;
};

// Decomposes every entry, compares canonical text, and re-parses the expected
// string as a self-check of the grammar.
std::vector<CorpusOutcome> run_corpus();

}  // namespace susp7
