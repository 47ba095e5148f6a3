#pragma once

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "udc/model.hpp"
#include "udc/record.hpp"

namespace udc {

struct Fraction {
  int filled = 0;
  int total = 1;

  double value() const { return static_cast<double>(filled) / total; }
  double percent() const { return 100.0 * value(); }

  bool operator==(const Fraction&) const = default;
};

struct CompletionReport {
  std::string entry_id;
  std::map<int, Fraction> per_level;
  std::map<Category, Fraction> per_category;
  Fraction overall;
  std::set<std::string> filled_keys;

  bool operator==(const CompletionReport&) const = default;
};

namespace detail {

inline const std::set<std::string>& tabular_stat_keys() {
  static const std::set<std::string> keys = {"rows", "columns", "cells"};
  return keys;
}

inline const std::set<std::string>& rdf_stat_keys() {
  static const std::set<std::string> keys = {"triples", "classes", "properties"};
  return keys;
}

inline const std::set<std::string>& indigenous_level4_keys() {
  static const std::set<std::string> keys = {
      "containsIndigenousData", "indigenousRightsHolder",
      "spatialIndigenousCommunity"};
  return keys;
}

}  // namespace detail

/// Completion fractions by level and category. A field counts as filled when
/// it holds at least one filled value (see value_filled; explicitly set
/// booleans count either way). With modality_aware on, the statistical fields
/// of the modality the entry does not declare leave both numerator and
/// denominator.
inline CompletionReport completion(const MaturityModel& model,
                                   const CatalogueEntry& entry,
                                   bool modality_aware = false) {
  const std::set<std::string>* excluded = nullptr;
  if (modality_aware) {
    if (entry.modality == Modality::Tabular) {
      excluded = &detail::rdf_stat_keys();
    } else if (entry.modality == Modality::Rdf) {
      excluded = &detail::tabular_stat_keys();
    }
  }

  CompletionReport report;
  report.entry_id = entry.id;
  report.overall = Fraction{0, 0};

  for (const MaturityLevel& level : model.levels) {
    Fraction level_frac{0, 0};
    for (const std::string& key : level.fields) {
      if (excluded && excluded->count(key)) continue;
      const bool filled = entry.field_filled(key);
      const Category category = model.property(key).category;
      auto [cat_it, unused] =
          report.per_category.try_emplace(category, Fraction{0, 0});
      ++level_frac.total;
      ++cat_it->second.total;
      ++report.overall.total;
      if (filled) {
        ++level_frac.filled;
        ++cat_it->second.filled;
        ++report.overall.filled;
        report.filled_keys.insert(key);
      }
    }
    if (level_frac.total > 0) {
      report.per_level.emplace(level.number, level_frac);
    }
  }
  if (report.overall.total == 0) report.overall.total = 1;
  return report;
}

struct GroupStats {
  double mean_pct = 0.0;
  double std_pp = 0.0;

  bool operator==(const GroupStats&) const = default;
};

struct CorpusReport {
  std::size_t n = 0;
  std::map<int, GroupStats> per_level;
  std::map<Category, GroupStats> per_category;
};

namespace detail {

// Population standard deviation: these are descriptive statistics of the
// whole corpus, not a sample estimate.
inline GroupStats stats_of(const std::vector<double>& percentages) {
  double sum = 0.0;
  for (double p : percentages) sum += p;
  const double mean = sum / static_cast<double>(percentages.size());
  double sq = 0.0;
  for (double p : percentages) sq += (p - mean) * (p - mean);
  return GroupStats{mean,
                    std::sqrt(sq / static_cast<double>(percentages.size()))};
}

}  // namespace detail

/// Mean and population standard deviation of per-entry completion
/// percentages, by level and category.
inline CorpusReport corpus_report(const std::vector<CompletionReport>& reports) {
  if (reports.empty()) {
    throw Error(ErrorCode::EmptyCorpus, "corpus_report needs at least one entry");
  }
  CorpusReport out;
  out.n = reports.size();

  std::map<int, std::vector<double>> by_level;
  std::map<Category, std::vector<double>> by_category;
  for (const CompletionReport& r : reports) {
    for (const auto& [level, frac] : r.per_level) {
      by_level[level].push_back(frac.percent());
    }
    for (const auto& [category, frac] : r.per_category) {
      by_category[category].push_back(frac.percent());
    }
  }
  for (const auto& [level, values] : by_level) {
    out.per_level.emplace(level, detail::stats_of(values));
  }
  for (const auto& [category, values] : by_category) {
    out.per_category.emplace(category, detail::stats_of(values));
  }
  return out;
}

struct Level4Split {
  double indigenous_pct = 0.0;
  double other_pct = 0.0;

  bool operator==(const Level4Split&) const = default;
};

/// Mean fill rate of the three Indigenous Level-4 fields versus the remaining
/// Level-4 fields, over the whole corpus.
inline Level4Split split_level4(const std::vector<CompletionReport>& reports) {
  if (reports.empty()) {
    throw Error(ErrorCode::EmptyCorpus, "split_level4 needs at least one entry");
  }
  const std::set<std::string>& indigenous = detail::indigenous_level4_keys();
  std::vector<std::string> other;
  for (const PropertySpec& spec : properties_by(builtin_model(), 4)) {
    if (!indigenous.count(spec.key)) other.push_back(spec.key);
  }

  std::size_t indigenous_filled = 0, other_filled = 0;
  for (const CompletionReport& r : reports) {
    for (const std::string& key : indigenous) {
      if (r.filled_keys.count(key)) ++indigenous_filled;
    }
    for (const std::string& key : other) {
      if (r.filled_keys.count(key)) ++other_filled;
    }
  }
  const double n = static_cast<double>(reports.size());
  return Level4Split{
      100.0 * static_cast<double>(indigenous_filled) /
          (n * static_cast<double>(indigenous.size())),
      100.0 * static_cast<double>(other_filled) /
          (n * static_cast<double>(other.size()))};
}

}  // namespace udc
