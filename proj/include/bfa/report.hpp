#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bfa/boolean_function.hpp"
#include "bfa/characterizations.hpp"
#include "bfa/geometry.hpp"
#include "bfa/influence.hpp"
#include "bfa/rational.hpp"
#include "bfa/spectra.hpp"
#include "bfa/subsets.hpp"

namespace bfa {

inline constexpr const char* kVersion = "0.1.0";

struct MeasureEntry {
  Measure measure;
  std::optional<VariableSubset> subset;  // exactly one of subset / level set
  std::optional<int> level;
  Rational value;
};

struct GeometrySummary {
  int64_t edge_boundary = 0;
  std::vector<int64_t> pairs_per_weight;  // sum of x_a over wt(a) = w
};

struct AnalysisReport {
  int n = 0;
  uint64_t weight = 0;
  std::string input_form;  // "tt", "hex" or "anf"
  std::vector<MeasureEntry> measures;
  std::optional<CharacterizationReport> characterization;
  std::optional<GeometrySummary> geometry;
  std::vector<std::pair<std::string, RealSpectrum>> spectra;
  std::string version = kVersion;
};

struct ReportOptions {
  std::vector<VariableSubset> subsets;
  std::vector<int> levels;  // t values for t-aggregates
  std::vector<Measure> measures;
  bool characterize = false;
  bool paths = false;
  bool walsh_export = false;
  bool autocorrelation_export = false;
  std::string input_form = "tt";
};

/// Deterministic report: subsets in ascending mask order, measures in the
/// fixed order ac, pi, bl, gs, fb, mu; all values exact.
inline AnalysisReport run_report(const BooleanFunction& f, const ReportOptions& options) {
  AnalysisReport report;
  report.n = f.n();
  report.weight = f.weight();
  report.input_form = options.input_form;

  std::vector<VariableSubset> subsets = options.subsets;
  std::sort(subsets.begin(), subsets.end(),
            [](const VariableSubset& a, const VariableSubset& b) { return a.mask() < b.mask(); });
  subsets.erase(std::unique(subsets.begin(), subsets.end()), subsets.end());
  std::vector<int> levels = options.levels;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  static constexpr Measure order[] = {Measure::ac, Measure::pi, Measure::bl,
                                      Measure::gs, Measure::fb, Measure::mu};
  auto wanted = [&](Measure m) {
    return std::find(options.measures.begin(), options.measures.end(), m) !=
           options.measures.end();
  };

  for (const VariableSubset& T : subsets) {
    if (T.n() != f.n()) throw std::invalid_argument("run_report: subset with mismatched n");
    for (Measure m : order) {
      if (!wanted(m)) continue;
      Rational v;
      switch (m) {
        case Measure::ac: v = influence(f, T).value; break;
        case Measure::pi: v = pseudo_influence(f, T).value; break;
        case Measure::bl: v = bl_influence(f, T).value; break;
        case Measure::gs: v = gs_influence(f, T).value; break;
        case Measure::fb: v = fb_influence(f, T).value; break;
        case Measure::mu: v = mu_probability(f, T).value; break;
      }
      report.measures.push_back({m, T, std::nullopt, v});
    }
  }

  for (int t : levels) {
    if (t < 1 || t > f.n()) throw std::out_of_range("run_report: t outside [1,n]");
    bool any = false;
    for (Measure m : {Measure::ac, Measure::pi, Measure::bl}) {
      if (!wanted(m)) continue;
      any = true;
      Rational v = m == Measure::ac   ? t_influence(f, t)
                   : m == Measure::pi ? t_pseudo_influence(f, t)
                                      : t_bl_influence(f, t);
      report.measures.push_back({m, std::nullopt, t, v});
    }
    if (!any && !options.measures.empty())
      throw std::domain_error("run_report: requested measures define no t-aggregate");
  }

  if (options.characterize) report.characterization = characterize(f);

  if (options.paths) {
    PathCensus census = path_census(f);
    GeometrySummary geo;
    geo.edge_boundary = edge_boundary(f);
    geo.pairs_per_weight.assign(f.n() + 1, 0);
    for (uint64_t a = 0; a < census.size(); ++a)
      geo.pairs_per_weight[std::popcount(a)] += census.pair_count(a);
    report.geometry = geo;
  }

  if (options.walsh_export) report.spectra.emplace_back("walsh", walsh_spectrum(f));
  if (options.autocorrelation_export)
    report.spectra.emplace_back("autocorrelation", autocorrelation_spectrum(f));
  return report;
}

namespace detail {

inline nlohmann::ordered_json measure_entry_json(const MeasureEntry& e) {
  nlohmann::ordered_json j;
  j["measure"] = measure_name(e.measure);
  if (e.subset) j["subset"] = e.subset->indices();
  if (e.level) j["t"] = *e.level;
  j["num"] = e.value.numerator();
  // Subset measures are dyadic by construction; t-aggregates carry the
  // binomial subset count, so those emit the full denominator instead.
  if (e.value.is_dyadic() && !e.level)
    j["log2_den"] = e.value.log2_denominator();
  else
    j["den"] = e.value.denominator();
  j["float"] = e.value.to_double();
  return j;
}

}  // namespace detail

/// Stable key order, byte-identical across runs for identical inputs.
inline std::string emit_json(const AnalysisReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["weight"] = report.weight;
  j["input"] = report.input_form;
  j["measures"] = nlohmann::ordered_json::array();
  for (const MeasureEntry& e : report.measures)
    j["measures"].push_back(detail::measure_entry_json(e));
  if (report.characterization) {
    const CharacterizationReport& c = *report.characterization;
    nlohmann::ordered_json jc;
    jc["is_bent"] = c.is_bent;
    if (c.resiliency_order)
      jc["resiliency_order"] = *c.resiliency_order;
    else
      jc["resiliency_order"] = nullptr;
    jc["pc_order"] = c.pc_order;
    jc["entropy"] = c.entropy;
    jc["notes"] = c.notes;
    j["characterization"] = jc;
  }
  if (report.geometry) {
    nlohmann::ordered_json jg;
    jg["edge_boundary"] = report.geometry->edge_boundary;
    jg["pairs_per_weight"] = report.geometry->pairs_per_weight;
    j["geometry"] = jg;
  }
  if (!report.spectra.empty()) {
    nlohmann::ordered_json js;
    for (const auto& [name, spectrum] : report.spectra) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (uint64_t i = 0; i < spectrum.size(); ++i) {
        Rational v = spectrum.value(i);
        nlohmann::ordered_json e;
        e["index"] = i;
        e["num"] = v.numerator();
        e["log2_den"] = v.log2_denominator();
        e["float"] = v.to_double();
        arr.push_back(e);
      }
      js[name] = arr;
    }
    j["spectra"] = js;
  }
  j["version"] = report.version;
  return j.dump(2) + "\n";
}

inline std::string emit_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "n: " << report.n << "\n";
  out << "weight: " << report.weight << "\n";
  for (const MeasureEntry& e : report.measures) {
    out << measure_name(e.measure);
    if (e.subset) {
      out << "{";
      bool first = true;
      for (int v : e.subset->indices()) {
        if (!first) out << ",";
        out << v;
        first = false;
      }
      out << "}";
    } else {
      out << "[t=" << *e.level << "]";
    }
    out << " = " << e.value.to_string() << " (" << e.value.to_double() << ")\n";
  }
  if (report.characterization) {
    const CharacterizationReport& c = *report.characterization;
    out << "bent: " << (c.is_bent ? "yes" : "no") << "\n";
    out << "resiliency_order: ";
    if (c.resiliency_order)
      out << *c.resiliency_order;
    else
      out << "none";
    out << "\n";
    out << "pc_order: " << c.pc_order << "\n";
    out << "entropy: " << c.entropy << "\n";
    for (const std::string& note : c.notes) out << "note: " << note << "\n";
  }
  if (report.geometry) {
    out << "edge_boundary: " << report.geometry->edge_boundary << "\n";
    out << "pairs_per_weight:";
    for (int64_t v : report.geometry->pairs_per_weight) out << " " << v;
    out << "\n";
  }
  for (const auto& [name, spectrum] : report.spectra) {
    out << name << ":";
    for (uint64_t i = 0; i < spectrum.size(); ++i) out << " " << spectrum.value(i).to_string();
    out << "\n";
  }
  out << "version: " << report.version << "\n";
  return out.str();
}

}  // namespace bfa
