#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "udc/errors.hpp"

namespace udc {

// ---------------------------------------------------------------------------
// Categories

enum class Category {
  Content,
  Access,
  Ownership,
  Provenance,
  TemporalGeospatial,
  Statistical,
  Quality,
};

constexpr std::array<Category, 7> kAllCategories = {
    Category::Content,      Category::Access,      Category::Ownership,
    Category::Provenance,   Category::TemporalGeospatial,
    Category::Statistical,  Category::Quality,
};

constexpr std::string_view to_string(Category c) {
  switch (c) {
    case Category::Content: return "Content";
    case Category::Access: return "Access";
    case Category::Ownership: return "Ownership";
    case Category::Provenance: return "Provenance";
    case Category::TemporalGeospatial: return "TemporalGeospatial";
    case Category::Statistical: return "Statistical";
    case Category::Quality: return "Quality";
  }
  return "Content";
}

inline std::optional<Category> category_from_string(std::string_view s) {
  for (Category c : kAllCategories) {
    if (s == to_string(c)) return c;
  }
  if (s == "Temporal/Geospatial" || s == "TempGeo" || s == "Temp-Geo") {
    return Category::TemporalGeospatial;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Value ranges

struct ValueRange {
  enum class Kind {
    PlainText,
    LangText,
    Boolean,
    Date,
    DateTime,
    Decimal,
    Duration,
    PositiveInteger,
    ResourceIri,
    Concept,
    Agent,
    Location,
    PeriodOfTime,
    Enumerated,
    Document,
    MediaType,
    Policy,
    License,
    DataService,
    DatasetRef,
    QualityAnnotation,
    QualityDimension,
    ProvenanceStatement,
    ProvEntity,
    LinguisticSystem,
    AdministrativeArea,
  };

  Kind kind = Kind::PlainText;
  std::vector<std::string> tokens;  // Enumerated only; lowercase, duplicate-free

  static ValueRange of(Kind k) { return ValueRange{k, {}}; }

  static ValueRange enumerated(std::vector<std::string> toks) {
    if (toks.empty()) {
      throw Error(ErrorCode::MalformedDocument, "enumerated range needs tokens");
    }
    for (auto& t : toks) {
      std::transform(t.begin(), t.end(), t.begin(),
                     [](unsigned char c) { return std::tolower(c); });
    }
    std::sort(toks.begin(), toks.end());
    if (std::adjacent_find(toks.begin(), toks.end()) != toks.end()) {
      throw Error(ErrorCode::MalformedDocument, "duplicate enum token");
    }
    return ValueRange{Kind::Enumerated, std::move(toks)};
  }

  bool allows_token(std::string_view t) const {
    return std::find(tokens.begin(), tokens.end(), t) != tokens.end();
  }

  bool operator==(const ValueRange&) const = default;
};

constexpr std::string_view to_string(ValueRange::Kind k) {
  using K = ValueRange::Kind;
  switch (k) {
    case K::PlainText: return "plain_text";
    case K::LangText: return "lang_text";
    case K::Boolean: return "boolean";
    case K::Date: return "date";
    case K::DateTime: return "date_time";
    case K::Decimal: return "decimal";
    case K::Duration: return "duration";
    case K::PositiveInteger: return "positive_integer";
    case K::ResourceIri: return "resource_iri";
    case K::Concept: return "concept";
    case K::Agent: return "agent";
    case K::Location: return "location";
    case K::PeriodOfTime: return "period_of_time";
    case K::Enumerated: return "enumerated";
    case K::Document: return "document";
    case K::MediaType: return "media_type";
    case K::Policy: return "policy";
    case K::License: return "license";
    case K::DataService: return "data_service";
    case K::DatasetRef: return "dataset_ref";
    case K::QualityAnnotation: return "quality_annotation";
    case K::QualityDimension: return "quality_dimension";
    case K::ProvenanceStatement: return "provenance_statement";
    case K::ProvEntity: return "prov_entity";
    case K::LinguisticSystem: return "linguistic_system";
    case K::AdministrativeArea: return "administrative_area";
  }
  return "plain_text";
}

inline std::optional<ValueRange::Kind> range_kind_from_string(std::string_view s) {
  using K = ValueRange::Kind;
  static const std::array<K, 26> kinds = {
      K::PlainText,      K::LangText, K::Boolean,   K::Date,
      K::DateTime,       K::Decimal,  K::Duration,  K::PositiveInteger,
      K::ResourceIri,    K::Concept,  K::Agent,     K::Location,
      K::PeriodOfTime,   K::Enumerated, K::Document, K::MediaType,
      K::Policy,         K::License,  K::DataService, K::DatasetRef,
      K::QualityAnnotation, K::QualityDimension, K::ProvenanceStatement,
      K::ProvEntity,     K::LinguisticSystem, K::AdministrativeArea,
  };
  for (K k : kinds) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Prefixes and CURIEs

namespace detail {

inline bool valid_prefix_name(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::islower(c) || std::isdigit(c);
  });
}

// Absolute IRI: a scheme part followed by "://", or one of the
// scheme-only forms that appear in metadata values (urn:, mailto:, doi:).
inline bool looks_absolute_iri(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (static_cast<unsigned char>(c) <= 0x20) return false;
  }
  auto colon = s.find(':');
  if (colon == 0 || colon == std::string_view::npos) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    unsigned char c = s[i];
    if (!std::isalnum(c) && c != '+' && c != '-' && c != '.') return false;
  }
  if (s.substr(colon, 3) == "://") return s.size() > colon + 3;
  std::string_view scheme = s.substr(0, colon);
  return (scheme == "urn" || scheme == "mailto" || scheme == "doi") &&
         s.size() > colon + 1;
}

}  // namespace detail

/// Ordered prefix-name -> namespace IRI map. Namespace IRIs must be absolute
/// and end in '/' or '#'.
class PrefixMap {
 public:
  void set(const std::string& name, const std::string& iri) {
    if (!detail::valid_prefix_name(name)) {
      throw Error(ErrorCode::MalformedDocument, "bad prefix name '" + name + "'");
    }
    if (!detail::looks_absolute_iri(iri) || (iri.back() != '/' && iri.back() != '#')) {
      throw Error(ErrorCode::MalformedDocument,
                  "namespace IRI must be absolute and end in '/' or '#': " + iri);
    }
    entries_[name] = iri;
  }

  const std::string* find(std::string_view name) const {
    auto it = entries_.find(std::string(name));
    return it == entries_.end() ? nullptr : &it->second;
  }

  const std::string& get(std::string_view name) const {
    const std::string* iri = find(name);
    if (!iri) throw Error(ErrorCode::UnknownPrefix, std::string(name));
    return *iri;
  }

  bool contains(std::string_view name) const { return find(name) != nullptr; }

  const std::map<std::string, std::string>& entries() const { return entries_; }

  bool operator==(const PrefixMap&) const = default;

 private:
  std::map<std::string, std::string> entries_;
};

/// Expands `prefix:local` against the map; absolute IRIs pass through.
inline std::string resolve_curie(const PrefixMap& prefixes, std::string_view token) {
  if (detail::looks_absolute_iri(token)) return std::string(token);
  auto colon = token.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::MalformedCurie, std::string(token));
  }
  std::string_view prefix = token.substr(0, colon);
  if (!detail::valid_prefix_name(prefix)) {
    throw Error(ErrorCode::MalformedCurie, std::string(token));
  }
  const std::string* ns = prefixes.find(prefix);
  if (!ns) {
    throw Error(ErrorCode::UnknownPrefix, std::string(prefix));
  }
  return *ns + std::string(token.substr(colon + 1));
}

// ---------------------------------------------------------------------------
// Property specifications and the model

struct PropertySpec {
  std::string key;          // stable local identifier
  std::string label;
  std::string description;  // help text shown on entry forms
  std::string curie;
  Category category = Category::Content;
  int level = 1;
  ValueRange range;
  bool single_valued = false;  // max cardinality 1 when true, unbounded otherwise
  std::optional<std::string> sub_property_of;

  bool operator==(const PropertySpec&) const = default;
};

struct MaturityLevel {
  int number = 1;
  std::string title;
  std::string name;                 // slug used by config files
  std::vector<std::string> fields;  // property keys, display order

  bool operator==(const MaturityLevel&) const = default;
};

struct MaturityModel {
  PrefixMap prefixes;
  std::vector<MaturityLevel> levels;
  std::map<std::string, PropertySpec> properties;

  const PropertySpec* find_property(std::string_view key) const {
    auto it = properties.find(std::string(key));
    return it == properties.end() ? nullptr : &it->second;
  }

  const PropertySpec& property(std::string_view key) const {
    const PropertySpec* spec = find_property(key);
    if (!spec) throw Error(ErrorCode::UnknownEntry, "no property '" + std::string(key) + "'");
    return *spec;
  }

  std::size_t property_count() const { return properties.size(); }

  bool operator==(const MaturityModel&) const = default;
};

/// Properties filtered by level and/or category, preserving level order and
/// the in-level display order.
inline std::vector<PropertySpec> properties_by(
    const MaturityModel& model, std::optional<int> level = std::nullopt,
    std::optional<Category> category = std::nullopt) {
  if (level && (*level < 1 || *level > 6)) {
    throw Error(ErrorCode::LevelOutOfRange, std::to_string(*level));
  }
  std::vector<PropertySpec> out;
  for (const MaturityLevel& lvl : model.levels) {
    if (level && lvl.number != *level) continue;
    for (const std::string& key : lvl.fields) {
      const PropertySpec& spec = model.property(key);
      if (category && spec.category != *category) continue;
      out.push_back(spec);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Built-in model

namespace detail {

inline PrefixMap builtin_prefixes() {
  PrefixMap p;
  p.set("adms", "http://www.w3.org/ns/adms#");
  p.set("cc", "http://creativecommons.org/ns#");
  p.set("cuadr", "http://data.urbandatacentre.ca/");
  p.set("dc", "http://purl.org/dc/elements/1.1/");
  p.set("dcat", "http://www.w3.org/ns/dcat#");
  p.set("dct", "http://purl.org/dc/terms/");
  p.set("dqv", "http://www.w3.org/ns/dqv#");
  p.set("fair", "http://ontology.eil.utoronto.ca/fair#");
  p.set("foaf", "http://xmlns.com/foaf/0.1/");
  p.set("oa", "http://www.w3.org/ns/oa#");
  p.set("odrl", "http://www.w3.org/ns/odrl/2/");
  p.set("owl", "http://www.w3.org/2002/07/owl#");
  p.set("prov", "http://www.w3.org/ns/prov#");
  p.set("rdfs", "http://www.w3.org/2000/01/rdf-schema#");
  p.set("sc", "https://schema.org/");
  p.set("skos", "http://www.w3.org/2004/02/skos/core#");
  p.set("vann", "http://purl.org/vocab/vann/");
  p.set("vcard", "http://www.w3.org/2006/vcard/ns#");
  p.set("void", "http://rdfs.org/ns/void#");
  p.set("xsd", "http://www.w3.org/2001/XMLSchema#");
  return p;
}

inline MaturityModel build_builtin_model() {
  using K = ValueRange::Kind;
  MaturityModel m;
  m.prefixes = builtin_prefixes();

  auto add = [&m](int level, std::string key, std::string label,
                  std::string description, std::string curie, Category cat,
                  ValueRange range, bool single = false,
                  std::optional<std::string> sub = std::nullopt) {
    PropertySpec spec;
    spec.key = key;
    spec.label = std::move(label);
    spec.description = std::move(description);
    spec.curie = std::move(curie);
    spec.category = cat;
    spec.level = level;
    spec.range = std::move(range);
    spec.single_valued = single;
    spec.sub_property_of = std::move(sub);
    m.properties.emplace(key, std::move(spec));
    m.levels[static_cast<std::size_t>(level) - 1].fields.push_back(std::move(key));
  };

  m.levels = {
      {1, "Maturity Level 1 (Basic Information)", "maturity_level_1", {}},
      {2, "Maturity Level 2 (Access and Ownership)", "maturity_level_2", {}},
      {3, "Maturity Level 3 (Content and Versioning)", "maturity_level_3", {}},
      {4, "Maturity Level 4 (Individual and Indigenous Data)", "maturity_level_4", {}},
      {5, "Maturity Level 5 (FAIR Principles)", "maturity_level_5", {}},
      {6, "Maturity Level 6 (Statistics and Quality)", "maturity_level_6", {}},
  };

  // Level 1
  add(1, "theme", "Domain / Topic",
      "Domain or topic of the dataset being catalogued.", "dcat:theme",
      Category::Content, ValueRange::of(K::Concept));
  add(1, "title", "Title", "Title of the dataset.", "dct:title",
      Category::Content, ValueRange::of(K::PlainText));
  add(1, "description", "Description", "A description of the dataset.",
      "dct:description", Category::Content, ValueRange::of(K::PlainText));
  add(1, "keyword", "Tags / Keywords", "Keywords or tags categorizing the dataset.",
      "dcat:keyword", Category::Content, ValueRange::of(K::PlainText));
  add(1, "issued", "Published date", "Date the dataset was published.",
      "dct:issued", Category::Provenance, ValueRange::of(K::DateTime),
      /*single=*/true);
  add(1, "temporal", "Time period", "Time period the data spans.",
      "dct:temporal", Category::TemporalGeospatial,
      ValueRange::of(K::PeriodOfTime));
  add(1, "spatial", "Geospatial area", "Geospatial area the data spans.",
      "dct:spatial", Category::TemporalGeospatial, ValueRange::of(K::Location));

  // Level 2
  add(2, "identifier", "Unique identifier",
      "Unique identifier for the dataset. Often assigned by creator or publisher.",
      "dct:identifier", Category::Content, ValueRange::of(K::PlainText));
  add(2, "accessCategory", "Access category",
      "Access category: open, closed, or available through a service.",
      "cuadr:accessCategory", Category::Access,
      ValueRange::enumerated({"open", "closed", "service"}), /*single=*/true);
  add(2, "license", "License", "License under which the dataset is published.",
      "dct:license", Category::Access, ValueRange::of(K::License),
      /*single=*/true);
  add(2, "accessURL", "Access URL",
      "Location of the dataset: where it can be accessed.", "dcat:accessURL",
      Category::Access, ValueRange::of(K::ResourceIri));
  add(2, "access_visibility", "Visibility",
      "What organization or community this is visible to.", "dct:description",
      Category::Access, ValueRange::of(K::PlainText));
  add(2, "accessService", "Access service", "Access service specification.",
      "dcat:accessService", Category::Access, ValueRange::of(K::DataService));
  add(2, "rightsHolder", "Owner", "Owner of the dataset.", "dct:rightsHolder",
      Category::Ownership, ValueRange::of(K::Agent));
  add(2, "contactPoint", "Contact point", "Contact point for the dataset.",
      "dcat:contactPoint", Category::Ownership, ValueRange::of(K::Agent));
  add(2, "publisher", "Publisher",
      "Entity responsible for making the dataset available.", "dct:publisher",
      Category::Ownership, ValueRange::of(K::Agent), /*single=*/true);
  add(2, "creator", "Creator",
      "Entity primarily responsible for producing the dataset.", "dct:creator",
      Category::Ownership, ValueRange::of(K::Agent), /*single=*/true);

  // Level 3
  add(3, "landingPage", "Documentation",
      "A page or document about the dataset.", "dcat:landingPage",
      Category::Content, ValueRange::of(K::Document));
  add(3, "language", "Language", "Language of the dataset.", "dct:language",
      Category::Content, ValueRange::of(K::LinguisticSystem));
  add(3, "hasRDA_F1_01D", "Persistent identifier",
      "Data is identified by a persistent identifier.", "fair:hasRDA_F1_01D",
      Category::Content, ValueRange::of(K::Boolean));
  add(3, "hasRDA_F1_02D", "Globally unique identifier",
      "Data is identified by a globally unique identifier.", "fair:hasRDA_F1_02D",
      Category::Content, ValueRange::of(K::Boolean));
  add(3, "format", "Format", "Format (file type) if relevant.", "dct:format",
      Category::Access, ValueRange::of(K::MediaType));
  add(3, "downloadURL", "Download URL", "URL for a downloadable file.",
      "dcat:downloadURL", Category::Access, ValueRange::of(K::ResourceIri));
  add(3, "versionInfo", "Version", "Version of the dataset.", "owl:versionInfo",
      Category::Provenance, ValueRange::of(K::PlainText), /*single=*/true);
  add(3, "versionNotes", "Version notes", "Version notes.", "adms:versionNotes",
      Category::Provenance, ValueRange::of(K::PlainText));
  add(3, "isVersionOf", "Is version of",
      "Link to a dataset that it is a version of.", "dct:isVersionOf",
      Category::Provenance, ValueRange::of(K::DatasetRef));
  add(3, "hasVersion", "Has version",
      "Link to datasets that are versions of it.", "dct:hasVersion",
      Category::Provenance, ValueRange::of(K::DatasetRef));
  add(3, "provenance", "Provenance", "Provenance of the data.",
      "dct:provenance", Category::Provenance,
      ValueRange::of(K::ProvenanceStatement));
  add(3, "wasQuotedFrom", "Provenance document",
      "Provenance document location.", "prov:wasQuotedFrom",
      Category::Provenance, ValueRange::of(K::ProvEntity));
  add(3, "temporalResolution", "Temporal resolution",
      "Minimum time period resolvable in the dataset.",
      "dcat:temporalResolution", Category::TemporalGeospatial,
      ValueRange::of(K::Duration));
  add(3, "spatialResolutionInMeters", "Spatial resolution (meters)",
      "Minimum spatial separation resolvable in the dataset, in meters.",
      "dcat:spatialResolutionInMeters", Category::TemporalGeospatial,
      ValueRange::of(K::Decimal));
  add(3, "spatialResolutionInRegion", "Spatial resolution (region)",
      "Spatial resolution in geographical regions.",
      "cuadr:spatialResolutionInRegion", Category::TemporalGeospatial,
      ValueRange::of(K::AdministrativeArea));

  // Level 4
  add(4, "containsIndividualData", "Contains individual data",
      "Whether the dataset holds individualized data.",
      "cuadr:containsIndividualData", Category::Content,
      ValueRange::of(K::Boolean));
  add(4, "containsIdentifiableIndividualData", "Contains identifiable individual data",
      "Whether the data can be used to uniquely identify an individual.",
      "cuadr:containsIdentifiableIndividualData", Category::Content,
      ValueRange::of(K::Boolean));
  add(4, "containsIndigenousData", "Contains Indigenous data",
      "Whether the dataset holds data about Indigenous communities.",
      "cuadr:containsIndigenousData", Category::Content,
      ValueRange::of(K::Boolean));
  add(4, "hasPolicy", "Limits on use",
      "Limits on use (e.g., academic purposes), going beyond the license.",
      "odrl:hasPolicy", Category::Access, ValueRange::of(K::Policy));
  add(4, "indigenousRightsHolder", "Indigenous rights holder",
      "Agent that manages access rights to Indigenous data.",
      "cuadr:indigenousRightsHolder", Category::Ownership,
      ValueRange::of(K::Agent), /*single=*/false, "dct:rightsHolder");
  add(4, "spatialIndigenousCommunity", "Indigenous community",
      "Indigenous communities from which the data is derived.",
      "cuadr:spatialIndigenousCommunity", Category::TemporalGeospatial,
      ValueRange::of(K::Location), /*single=*/false, "dct:spatial");

  // Level 5
  add(5, "hasRDA_R1_3_01D", "Community standard",
      "Data complies with a community standard.", "fair:hasRDA_R1_3_01D",
      Category::Content, ValueRange::of(K::Boolean));
  add(5, "hasRDA_I1_01D", "Standardised knowledge representation",
      "Data uses knowledge representation expressed in standardised format.",
      "fair:hasRDA_I1_01D", Category::Content, ValueRange::of(K::Boolean));
  add(5, "hasRDA_I1_02D", "Machine-understandable representation",
      "Data uses machine-understandable knowledge representation.",
      "fair:hasRDA_I1_02D", Category::Content, ValueRange::of(K::Boolean));
  add(5, "hasRDA_I2_01D", "FAIR-compliant vocabularies",
      "Data uses FAIR-compliant vocabularies.", "fair:hasRDA_I2_01D",
      Category::Content, ValueRange::of(K::Boolean));
  add(5, "hasRDA_I3_01D", "References to other data",
      "Data includes references to other data.", "fair:hasRDA_I3_01D",
      Category::Content, ValueRange::of(K::Boolean));
  add(5, "hasRDA_A1_2_01D", "Authenticated access protocol",
      "Data is accessible through an access protocol that supports "
      "authentication and authorisation.",
      "fair:hasRDA_A1_2_01D", Category::Access, ValueRange::of(K::Boolean));
  add(5, "hasRDA_A1_02D", "Manual access",
      "Data can be accessed manually (i.e., with human intervention).",
      "fair:hasRDA_A1_02D", Category::Access, ValueRange::of(K::Boolean));
  add(5, "hasRDA_A1_03D", "Identifier resolves",
      "Data identifier resolves to a digital object.", "fair:hasRDA_A1_03D",
      Category::Access, ValueRange::of(K::Boolean));
  add(5, "hasRDA_A1_04D", "Standardised protocol",
      "Data is accessible through standardised protocol.", "fair:hasRDA_A1_04D",
      Category::Access, ValueRange::of(K::Boolean));
  add(5, "hasRDA_A1_05D", "Automatic access",
      "Data can be accessed automatically (i.e. by a computer program).",
      "fair:hasRDA_A1_05D", Category::Access, ValueRange::of(K::Boolean));
  add(5, "hasRDA_A1_1_01D", "Free access protocol",
      "Data is accessible through a free access protocol.",
      "fair:hasRDA_A1_1_01D", Category::Access, ValueRange::of(K::Boolean));

  // Level 6
  add(6, "rows", "Rows", "If tabular dataset, number of rows.", "void:rows",
      Category::Statistical, ValueRange::of(K::PositiveInteger));
  add(6, "columns", "Columns", "If tabular dataset, number of columns.",
      "void:columns", Category::Statistical, ValueRange::of(K::PositiveInteger));
  add(6, "cells", "Cells", "If tabular dataset, the number of filled-in data cells.",
      "void:cells", Category::Statistical, ValueRange::of(K::PositiveInteger));
  add(6, "triples", "Triples", "If RDF dataset, total number of triples.",
      "void:triples", Category::Statistical, ValueRange::of(K::PositiveInteger));
  add(6, "classes", "Classes", "If RDF dataset, total number of entities in the dataset.",
      "void:classes", Category::Statistical, ValueRange::of(K::PositiveInteger));
  add(6, "properties", "Properties", "If RDF dataset, total number of properties in the dataset.",
      "void:properties", Category::Statistical,
      ValueRange::of(K::PositiveInteger));
  add(6, "hasQualityAnnotation", "Quality annotation",
      "Description of data quality.", "dqv:hasQualityAnnotation",
      Category::Quality, ValueRange::of(K::QualityAnnotation));
  add(6, "inDimension", "Quality dimension",
      "Metrics for data quality, like completeness, accuracy, etc.",
      "dqv:inDimension", Category::Quality, ValueRange::of(K::QualityDimension));

  return m;
}

}  // namespace detail

/// The six-level, 57-property built-in model. Immutable; identical across calls.
inline const MaturityModel& builtin_model() {
  static const MaturityModel model = detail::build_builtin_model();
  return model;
}

// ---------------------------------------------------------------------------
// Model configuration files
//
// Shape: {"maturity_model": [{"title":..., "name":..., "fields":[
//   {"ckanField": "<builtin key>"} | {"name":..., "label":..., ...}]}]}

namespace detail {

// CKAN form-field name -> built-in property key.
inline const std::map<std::string, std::string>& ckan_field_bindings() {
  static const std::map<std::string, std::string> bindings = {
      {"id", "identifier"},       {"title", "title"},
      {"notes", "description"},   {"tags", "keyword"},
      {"author", "creator"},      {"author_email", "contactPoint"},
      {"url", "landingPage"},     {"organization", "publisher"},
      {"visibility", "access_visibility"}, {"license_id", "license"},
  };
  return bindings;
}

}  // namespace detail

inline MaturityModel load_model_config(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  if (!doc.is_object() || !doc.contains("maturity_model") ||
      !doc["maturity_model"].is_array()) {
    throw Error(ErrorCode::MalformedDocument,
                "expected top-level 'maturity_model' array");
  }
  const auto& levels = doc["maturity_model"];
  if (levels.empty() || levels.size() > 6) {
    throw Error(ErrorCode::MalformedDocument,
                "maturity_model must define between 1 and 6 levels");
  }

  MaturityModel model;
  model.prefixes = detail::builtin_prefixes();
  const MaturityModel& builtin = builtin_model();

  int number = 0;
  for (const auto& level_doc : levels) {
    ++number;
    if (!level_doc.is_object() || !level_doc.contains("title") ||
        !level_doc.contains("name") || !level_doc.contains("fields") ||
        !level_doc["fields"].is_array()) {
      throw Error(ErrorCode::MalformedDocument,
                  "level " + std::to_string(number) +
                      " needs 'title', 'name' and a 'fields' array");
    }
    MaturityLevel level;
    level.number = number;
    level.title = level_doc["title"].get<std::string>();
    level.name = level_doc["name"].get<std::string>();

    for (const auto& field : level_doc["fields"]) {
      if (!field.is_object()) {
        throw Error(ErrorCode::MalformedDocument, "field entries must be objects");
      }
      PropertySpec spec;
      if (field.contains("ckanField")) {
        const std::string ckan = field["ckanField"].get<std::string>();
        auto binding = detail::ckan_field_bindings().find(ckan);
        if (binding == detail::ckan_field_bindings().end()) {
          throw Error(ErrorCode::UnknownCkanField, ckan);
        }
        spec = builtin.property(binding->second);
      } else if (field.contains("name")) {
        spec.key = field["name"].get<std::string>();
        spec.label = field.value("label", spec.key);
        spec.description = field.value("description", "");
        spec.curie = field.value("curie", "cuadr:" + spec.key);
        spec.range = ValueRange::of(ValueRange::Kind::PlainText);
        spec.category = Category::Content;
      } else {
        throw Error(ErrorCode::ConfigMissingKey,
                    "field needs either 'ckanField' or 'name'");
      }
      if (field.contains("category")) {
        auto cat = category_from_string(field["category"].get<std::string>());
        if (!cat) {
          throw Error(ErrorCode::MalformedDocument,
                      "unknown category '" + field["category"].get<std::string>() + "'");
        }
        spec.category = *cat;
      }
      if (field.contains("curie")) {
        spec.curie = field["curie"].get<std::string>();
      }
      if (field.contains("range")) {
        const auto& range_doc = field["range"];
        if (range_doc.is_string()) {
          auto kind = range_kind_from_string(range_doc.get<std::string>());
          if (!kind || *kind == ValueRange::Kind::Enumerated) {
            throw Error(ErrorCode::MalformedDocument,
                        "unknown range '" + range_doc.get<std::string>() + "'");
          }
          spec.range = ValueRange::of(*kind);
        } else if (range_doc.is_object() && range_doc.contains("enum")) {
          spec.range = ValueRange::enumerated(
              range_doc["enum"].get<std::vector<std::string>>());
        } else {
          throw Error(ErrorCode::MalformedDocument, "bad 'range' value");
        }
      }
      spec.level = number;
      resolve_curie(model.prefixes, spec.curie);  // surfaces UnknownPrefix now
      if (model.properties.count(spec.key)) {
        throw Error(ErrorCode::DuplicateFieldKey, spec.key);
      }
      level.fields.push_back(spec.key);
      model.properties.emplace(spec.key, std::move(spec));
    }
    model.levels.push_back(std::move(level));
  }
  return model;
}

}  // namespace udc
