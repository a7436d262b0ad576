// Command-line front end: parse a Boolean function, run the requested
// analyses, emit a text or JSON report on stdout. Exit codes: 0 success,
// 2 usage error, 3 domain error (malformed values, out-of-range inputs).

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bfa/bfa.hpp"

namespace {

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (item.empty()) throw std::invalid_argument("--set: empty index in list");
    size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("--set: malformed index '" + item + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("--set: empty list");
  return out;
}

bfa::BooleanFunction parse_function(const std::string& tt, const std::string& hex,
                                    const std::string& anf, int n, std::string& form) {
  if (!tt.empty()) {
    form = "tt";
    size_t len = tt.size();
    if (len < 2 || (len & (len - 1)))
      throw std::invalid_argument("--tt: length is not a power of two >= 2");
    int bits = std::countr_zero(len);
    return bfa::BooleanFunction::from_bits(bits, tt);
  }
  if (!hex.empty()) {
    form = "hex";
    return bfa::BooleanFunction::from_hex(n, hex);
  }
  form = "anf";
  return bfa::build_from_anf(anf, n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectral and influence analysis of Boolean functions"};
  app.get_formatter()->column_width(26);

  std::string tt, hex, anf;
  int n = 0;
  std::vector<std::string> set_args;
  std::vector<int> t_args;
  std::vector<std::string> measure_args;
  bool characterize = false, entropy = false, paths = false, json = false;

  auto* tt_opt = app.add_option("--tt", tt, "Truth table over {0,1}, index 0 first");
  auto* hex_opt = app.add_option("--hex", hex, "Truth table as big-endian hex (needs --n)");
  auto* anf_opt = app.add_option("--anf", anf,
                                 "Algebraic normal form, e.g. \"x1*x2 + x3\" (needs --n)");
  auto* n_opt = app.add_option("--n", n, "Variable count for --hex/--anf");
  app.add_option("--set", set_args, "Variable subset as 1-based indices, e.g. 1,3 (repeatable)");
  app.add_option("--t", t_args, "Subset size for t-aggregates (repeatable)");
  app.add_option("--measure", measure_args, "ac|pi|bl|gs|fb|mu|all (repeatable)")
      ->check(CLI::IsMember({"ac", "pi", "bl", "gs", "fb", "mu", "all"}));
  std::vector<std::string> spectrum_args;
  app.add_flag("--characterize", characterize, "Bent/resiliency/PC order, entropy");
  app.add_flag("--entropy", entropy, "Include Fourier entropy (implies --characterize)");
  app.add_flag("--paths", paths, "Hypercube edge boundary and path census summary");
  app.add_option("--spectrum", spectrum_args, "Export a full spectrum: walsh|ac (repeatable)")
      ->check(CLI::IsMember({"walsh", "ac"}));
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.set_version_flag("--version", bfa::kVersion);

  tt_opt->excludes(hex_opt)->excludes(anf_opt)->excludes(n_opt);
  hex_opt->excludes(anf_opt)->needs(n_opt);
  anf_opt->needs(n_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  int inputs = int(!tt.empty()) + int(!hex.empty()) + int(!anf.empty());
  if (inputs != 1) {
    std::cerr << "error: exactly one of --tt, --hex, --anf is required\n";
    return 2;
  }

  try {
    bfa::ReportOptions options;
    bfa::BooleanFunction f = parse_function(tt, hex, anf, n, options.input_form);

    for (const std::string& s : set_args)
      options.subsets.push_back(bfa::VariableSubset::from_indices(f.n(), parse_index_list(s)));
    options.levels = t_args;
    for (const std::string& m : measure_args) {
      if (m == "all") {
        for (bfa::Measure mm : {bfa::Measure::ac, bfa::Measure::pi, bfa::Measure::bl,
                                bfa::Measure::gs, bfa::Measure::fb, bfa::Measure::mu})
          options.measures.push_back(mm);
      } else {
        options.measures.push_back(m == "ac"   ? bfa::Measure::ac
                                   : m == "pi" ? bfa::Measure::pi
                                   : m == "bl" ? bfa::Measure::bl
                                   : m == "gs" ? bfa::Measure::gs
                                   : m == "fb" ? bfa::Measure::fb
                                               : bfa::Measure::mu);
      }
    }
    if ((!options.subsets.empty() || !options.levels.empty()) && options.measures.empty())
      options.measures.push_back(bfa::Measure::ac);
    options.characterize = characterize || entropy;
    options.paths = paths;
    for (const std::string& s : spectrum_args) {
      if (s == "walsh") options.walsh_export = true;
      if (s == "ac") options.autocorrelation_export = true;
    }

    bfa::AnalysisReport report = bfa::run_report(f, options);
    std::cout << (json ? bfa::emit_json(report) : bfa::emit_text(report));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
