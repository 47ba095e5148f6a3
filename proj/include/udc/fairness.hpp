#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "udc/model.hpp"
#include "udc/record.hpp"
#include "udc/scoring.hpp"

namespace udc {

enum class FairTier { Essential, Important, Useful, Unspecified };

constexpr std::string_view to_string(FairTier tier) {
  switch (tier) {
    case FairTier::Essential: return "essential";
    case FairTier::Important: return "important";
    case FairTier::Useful: return "useful";
    case FairTier::Unspecified: return "unspecified";
  }
  return "unspecified";
}

struct FairIndicator {
  std::string rda_id;     // e.g. "RDA-A1-04D"
  std::string field_key;  // model property carrying it
  char facet = 'F';       // F, A, I or R
  FairTier tier = FairTier::Unspecified;
};

/// The data-level RDA indicators carried by the built-in model, with their
/// published tier. The two F1 findability indicators have no published tier
/// and stay unspecified rather than guessed.
inline const std::vector<FairIndicator>& fair_indicators() {
  static const std::vector<FairIndicator> table = {
      {"RDA-F1-01D", "hasRDA_F1_01D", 'F', FairTier::Unspecified},
      {"RDA-F1-02D", "hasRDA_F1_02D", 'F', FairTier::Unspecified},
      {"RDA-A1-02D", "hasRDA_A1_02D", 'A', FairTier::Essential},
      {"RDA-A1-03D", "hasRDA_A1_03D", 'A', FairTier::Essential},
      {"RDA-A1-04D", "hasRDA_A1_04D", 'A', FairTier::Essential},
      {"RDA-A1-05D", "hasRDA_A1_05D", 'A', FairTier::Important},
      {"RDA-A1.1-01D", "hasRDA_A1_1_01D", 'A', FairTier::Important},
      {"RDA-A1.2-01D", "hasRDA_A1_2_01D", 'A', FairTier::Useful},
      {"RDA-I1-01D", "hasRDA_I1_01D", 'I', FairTier::Important},
      {"RDA-I1-02D", "hasRDA_I1_02D", 'I', FairTier::Important},
      {"RDA-I2-01D", "hasRDA_I2_01D", 'I', FairTier::Useful},
      {"RDA-I3-01D", "hasRDA_I3_01D", 'I', FairTier::Useful},
      {"RDA-R1.3-01D", "hasRDA_R1_3_01D", 'R', FairTier::Essential},
  };
  return table;
}

struct FairReport {
  std::set<std::string> asserted_true;        // rda_ids
  std::map<FairTier, int> counts;             // asserted per tier
  std::map<FairTier, Fraction> coverage;      // asserted / available per tier
};

/// Classifies the entry's boolean FAIR fields that are asserted true.
inline FairReport fair_report(const CatalogueEntry& entry) {
  FairReport report;
  for (FairTier tier : {FairTier::Essential, FairTier::Important,
                        FairTier::Useful, FairTier::Unspecified}) {
    report.counts[tier] = 0;
    report.coverage[tier] = Fraction{0, 0};
  }
  for (const FairIndicator& ind : fair_indicators()) {
    ++report.coverage[ind.tier].total;
    const auto* values = entry.values(ind.field_key);
    if (!values) continue;
    const bool asserted =
        std::any_of(values->begin(), values->end(), [](const Value& v) {
          const auto* b = std::get_if<BoolValue>(&v);
          return b && b->value;
        });
    if (asserted) {
      report.asserted_true.insert(ind.rda_id);
      ++report.counts[ind.tier];
      ++report.coverage[ind.tier].filled;
    }
  }
  return report;
}

struct DcatApReport {
  bool mandatory_satisfied = false;
  std::vector<std::string> missing_mandatory;
  Fraction recommended_present{0, 7};
  Fraction optional_present{0, 15};
};

namespace detail {

inline const std::vector<std::string>& dcat_ap_recommended_fields() {
  // "distribution" is handled separately via attached resources.
  static const std::vector<std::string> fields = {
      "contactPoint", "keyword", "publisher", "spatial", "temporal", "theme"};
  return fields;
}

inline const std::vector<std::string>& dcat_ap_optional_fields() {
  static const std::vector<std::string> fields = {
      "accessCategory", "creator", "hasVersion", "identifier", "isVersionOf",
      "landingPage", "language", "issued", "provenance",
      "spatialResolutionInMeters", "temporalResolution", "versionInfo",
      "versionNotes", "license", "format"};
  return fields;
}

}  // namespace detail

/// Mandatory / recommended / optional conformance over the fields the model
/// shares with the application profile.
inline DcatApReport dcat_ap_report(const CatalogueEntry& entry) {
  DcatApReport report;
  for (const char* key : {"title", "description"}) {
    if (!entry.field_filled(key)) {
      report.missing_mandatory.push_back(key);
    }
  }
  report.mandatory_satisfied = report.missing_mandatory.empty();

  int recommended = 0;
  for (const std::string& key : detail::dcat_ap_recommended_fields()) {
    if (entry.field_filled(key)) ++recommended;
  }
  if (!entry.resources.empty()) ++recommended;  // distribution
  report.recommended_present = Fraction{recommended, 7};

  int optional_count = 0;
  const auto& optional_fields = detail::dcat_ap_optional_fields();
  for (const std::string& key : optional_fields) {
    if (entry.field_filled(key)) ++optional_count;
  }
  report.optional_present =
      Fraction{optional_count, static_cast<int>(optional_fields.size())};
  return report;
}

/// The stable-key-order JSON report shape. The dcat_ap section is included
/// when a report is supplied.
inline nlohmann::ordered_json fair_report_json(
    const FairReport& fair, const DcatApReport* dcat_ap = nullptr) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json fair_doc;
  for (FairTier tier : {FairTier::Essential, FairTier::Important,
                        FairTier::Useful, FairTier::Unspecified}) {
    const Fraction& cov = fair.coverage.at(tier);
    fair_doc[std::string(to_string(tier))] = {{"n", cov.filled},
                                              {"of", cov.total}};
  }
  doc["fair"] = std::move(fair_doc);
  if (dcat_ap) {
    nlohmann::ordered_json d;
    d["mandatory"] = dcat_ap->mandatory_satisfied;
    d["missing"] = dcat_ap->missing_mandatory;
    d["recommended"] = {{"n", dcat_ap->recommended_present.filled},
                        {"of", dcat_ap->recommended_present.total}};
    d["optional"] = {{"n", dcat_ap->optional_present.filled},
                     {"of", dcat_ap->optional_present.total}};
    doc["dcat_ap"] = std::move(d);
  }
  return doc;
}

}  // namespace udc
