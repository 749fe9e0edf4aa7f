#include "susp7/cli.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "susp7/checker.hpp"
#include "susp7/corpus.hpp"
#include "susp7/decompose.hpp"
#include "susp7/errors.hpp"
#include "susp7/invariants.hpp"
#include "susp7/io.hpp"
#include "susp7/reduce.hpp"
#include "susp7/tables.hpp"
#include "susp7/wedge.hpp"

namespace susp7::cli {
namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

ManifoldDescriptor load_descriptor(const std::string& path,
                                   std::ostream& err) {
  const RawDescriptor raw = raw_descriptor_from_text(slurp(path));
  std::vector<std::string> warnings;
  ManifoldDescriptor m = validate(raw, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  return m;
}

std::vector<std::int64_t> parse_int_list(const std::string& text,
                                         const std::string& what) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string piece = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const std::size_t first = piece.find_first_not_of(" \t");
    const std::size_t last = piece.find_last_not_of(" \t");
    if (first == std::string::npos)
      throw ParseError(what + " has an empty entry");
    piece = piece.substr(first, last - first + 1);
    std::int64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size())
      throw ParseError(what + " entry '" + piece + "' is not an integer");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int as_checked_int(std::int64_t v, const std::string& what) {
  if (v < -1000000 || v > 1000000)
    throw ParseError(what + " out of supported range");
  return static_cast<int>(v);
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

std::string pad_left(const std::string& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

void print_report(const VerificationReport& report, std::ostream& out) {
  std::size_t we = std::string("expected").size();
  std::size_t wa = std::string("actual").size();
  for (const auto& row : report.rows) {
    we = std::max(we, render_group(row.expected).size());
    wa = std::max(wa, render_group(row.actual).size());
  }
  out << "degree  " << pad_right("expected", we) << "  "
      << pad_right("actual", wa) << "  ok\n";
  for (const auto& row : report.rows)
    out << pad_left(std::to_string(row.degree), 6) << "  "
        << pad_right(render_group(row.expected), we) << "  "
        << pad_right(render_group(row.actual), wa) << "  "
        << (row.ok ? "yes" : "NO") << "\n";
  out << "result: " << (report.pass ? "pass" : "FAIL") << "\n";
}

std::string join_entries(const std::vector<int>& entries) {
  std::string text;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) text += ',';
    text += std::to_string(entries[i]);
  }
  return text;
}

struct Options {
  std::string input;
  int suspensions = 1;
  int level = 5;
  std::string format = "text";
  std::string entries;
  std::string moore;
  int degree = 0;
  std::string left, right;
};

int do_decompose(const Options& opt, std::ostream& out, std::ostream& err) {
  const ManifoldDescriptor m = load_descriptor(opt.input, err);
  const DecompositionResult result =
      opt.suspensions == 1 ? decompose_sigma(m) : decompose_sigma2(m);
  if (opt.format == "json")
    out << result_to_json(result).dump(2) << "\n";
  else
    out << render(result.wedge) << "\n";
  return 0;
}

int do_stage(const Options& opt, std::ostream& out, std::ostream& err) {
  const ManifoldDescriptor m = load_descriptor(opt.input, err);
  const WedgeExpr w = stage(m, opt.level);
  if (opt.format == "json")
    out << json{{"level", opt.level}, {"wedge", wedge_to_json(w)}}.dump(2)
        << "\n";
  else
    out << render(w) << "\n";
  return 0;
}

int do_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const ManifoldDescriptor m = load_descriptor(opt.input, err);
  const DecompositionResult result =
      opt.suspensions == 1 ? decompose_sigma(m) : decompose_sigma2(m);
  const VerificationReport report = verify_homology(m, result);
  if (opt.format == "json")
    out << report_to_json(report).dump(2) << "\n";
  else
    print_report(report, out);
  return report.pass ? 0 : 3;
}

int do_reduce(const Options& opt, std::ostream& out) {
  std::vector<int> entries;
  for (std::int64_t v : parse_int_list(opt.entries, "--entries"))
    entries.push_back(as_checked_int(v, "--entries"));
  const CanonicalForm form = canonical_form(make_vector(entries));
  if (opt.format == "json") {
    json witness = json::array();
    for (const auto& m : form.witness) witness.push_back(render_move(m));
    json j{{"canonical", form.vector.entries}, {"witness", witness}};
    j["pivot"] = form.pivot ? json(*form.pivot) : json(nullptr);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "canonical: " << join_entries(form.vector.entries) << "\n";
  out << "pivot: " << (form.pivot ? std::to_string(*form.pivot) : "none")
      << "\n";
  if (form.witness.empty()) {
    out << "witness: (none)\n";
  } else {
    out << "witness:";
    for (const auto& m : form.witness) out << " " << render_move(m);
    out << "\n";
  }
  return 0;
}

int do_tables_pi(const Options& opt, std::ostream& out) {
  const auto parts = parse_int_list(opt.moore, "--moore");
  if (parts.size() != 3) throw ParseError("--moore wants n,p,e");
  const PiEntry entry =
      pi_moore(as_checked_int(parts[0], "--moore"), parts[1],
               as_checked_int(parts[2], "--moore"), opt.degree);
  if (opt.format == "json") {
    json j{{"group", group_to_json(entry.group)},
           {"citation", entry.citation}};
    j["generator"] =
        entry.generator ? json(tag_text(*entry.generator)) : json(nullptr);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "group: " << render_group(entry.group) << "\n";
  if (entry.generator) out << "generator: " << tag_text(*entry.generator)
                           << "\n";
  out << "citation: " << entry.citation << "\n";
  return 0;
}

int do_tables_smash(const Options& opt, std::ostream& out) {
  const auto left = parse_int_list(opt.left, "--left");
  const auto right = parse_int_list(opt.right, "--right");
  if (left.size() != 3 || right.size() != 3)
    throw ParseError("--left and --right want m,p,e triples");
  const SmashEntry entry = smash_moore(
      as_checked_int(left[0], "--left"), left[1],
      as_checked_int(left[2], "--left"), as_checked_int(right[0], "--right"),
      right[1], as_checked_int(right[2], "--right"));
  if (opt.format == "json") {
    out << json{{"wedge", wedge_to_json(entry.wedge)},
                {"citation", entry.citation}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "wedge: " << render(entry.wedge) << "\n";
  out << "citation: " << entry.citation << "\n";
  return 0;
}

int do_corpus(std::ostream& out) {
  const auto outcomes = run_corpus();
  int passed = 0;
  for (const auto& o : outcomes) {
    if (o.ok) {
      ++passed;
      out << "ok    " << o.name << "\n";
    } else {
      out << "FAIL  " << o.name << "\n";
      out << "      got:  " << o.got << "\n";
      out << "      want: " << o.want << "\n";
    }
  }
  out << "passed " << passed << "/" << outcomes.size() << "\n";
  return passed == static_cast<int>(outcomes.size()) ? 0 : 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"suspension splittings of 2-connected 7-dimensional Poincare "
               "homology data away from the prime 2"};
  app.name("susp7");
  Options opt;

  auto* dec = app.add_subcommand(
      "decompose", "print the wedge decomposition of a suspension");
  dec->add_option("--input", opt.input, "descriptor JSON file ('-' = stdin)")
      ->required();
  dec->add_option("--suspensions", opt.suspensions, "1 or 2")
      ->check(CLI::IsMember({1, 2}));
  dec->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* stg = app.add_subcommand(
      "stage", "print the wedge for a homology stage of the suspension");
  stg->add_option("--input", opt.input, "descriptor JSON file ('-' = stdin)")
      ->required();
  stg->add_option("--level", opt.level, "3, 4, or 5")
      ->required()
      ->check(CLI::IsMember({3, 4, 5}));
  stg->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* ver = app.add_subcommand(
      "verify", "decompose and check reduced homology degree by degree");
  ver->add_option("--input", opt.input, "descriptor JSON file ('-' = stdin)")
      ->required();
  ver->add_option("--suspensions", opt.suspensions, "1 or 2")
      ->check(CLI::IsMember({1, 2}));
  ver->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* red = app.add_subcommand(
      "reduce-vector", "canonical form of a mod-3 vector under ordered moves");
  red->add_option("--entries", opt.entries, "comma-separated mod-3 entries")
      ->required();
  red->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* tab = app.add_subcommand("tables", "query the closed-form tables");
  tab->require_subcommand(1);
  auto* pi = tab->add_subcommand(
      "pi", "homotopy group of a Moore space in the tabulated range");
  pi->add_option("--moore", opt.moore, "n,p,e for P^n(p^e)")->required();
  pi->add_option("--degree", opt.degree, "homotopy degree k")->required();
  pi->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  auto* smash = tab->add_subcommand(
      "smash", "smash product of two Moore spaces as a wedge");
  smash->add_option("--left", opt.left, "m,p,e for P^m(p^e)")->required();
  smash->add_option("--right", opt.right, "n,q,e for P^n(q^e)")->required();
  smash->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* cor = app.add_subcommand("corpus", "golden decompositions");
  cor->require_subcommand(1);
  auto* cor_run =
      cor->add_subcommand("run", "decompose every golden entry and compare");

  app.require_subcommand(1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (dec->parsed()) return do_decompose(opt, out, err);
    if (stg->parsed()) return do_stage(opt, out, err);
    if (ver->parsed()) return do_verify(opt, out, err);
    if (red->parsed()) return do_reduce(opt, out);
    if (tab->parsed() && pi->parsed()) return do_tables_pi(opt, out);
    if (tab->parsed() && smash->parsed()) return do_tables_smash(opt, out);
    if (cor->parsed() && cor_run->parsed()) return do_corpus(out);
  } catch (const NeedsDoubleSuspension& e) {
    err << json{{"kind", "needs-double-suspension"},
                {"error", e.what()},
                {"suspensions", 2}}
               .dump()
        << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << json{{"kind", "parse"}, {"error", e.what()}}.dump() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    err << json{{"kind", "validation"}, {"error", e.what()}}.dump() << "\n";
    return 1;
  } catch (const Error& e) {
    err << json{{"kind", "domain"}, {"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace susp7::cli
