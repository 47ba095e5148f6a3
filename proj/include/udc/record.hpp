#pragma once

#include <algorithm>
#include <cstring>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "udc/errors.hpp"
#include "udc/media_types.hpp"
#include "udc/model.hpp"

namespace udc {

// ---------------------------------------------------------------------------
// Lexical forms

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

inline bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c);
  });
}

inline bool valid_timezone(std::string_view s) {
  if (s.empty()) return true;
  if (s == "Z") return true;
  if (s.size() != 6 || (s[0] != '+' && s[0] != '-') || s[3] != ':') return false;
  return all_digits(s.substr(1, 2)) && all_digits(s.substr(4, 2)) &&
         (s[1] - '0') * 10 + (s[2] - '0') <= 14 && s[4] <= '5';
}

inline bool valid_ymd(int y, int m, int d) {
  if (m < 1 || m > 12 || d < 1) return false;
  static constexpr int days[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  int max_day = days[m - 1];
  if (m == 2 && (y % 4 == 0 && (y % 100 != 0 || y % 400 == 0))) max_day = 29;
  return d <= max_day && y >= 0 && y <= 9999;
}

// xsd:date — YYYY-MM-DD with optional timezone.
inline bool is_valid_date(std::string_view s) {
  if (s.size() < 10 || s[4] != '-' || s[7] != '-') return false;
  if (!all_digits(s.substr(0, 4)) || !all_digits(s.substr(5, 2)) ||
      !all_digits(s.substr(8, 2))) {
    return false;
  }
  int y = std::stoi(std::string(s.substr(0, 4)));
  int m = std::stoi(std::string(s.substr(5, 2)));
  int d = std::stoi(std::string(s.substr(8, 2)));
  return valid_ymd(y, m, d) && valid_timezone(s.substr(10));
}

// xsd:dateTime — date 'T' hh:mm:ss with optional fraction and timezone.
inline bool is_valid_datetime(std::string_view s) {
  if (s.size() < 19 || s[10] != 'T') return false;
  if (!is_valid_date(s.substr(0, 10))) return false;
  std::string_view t = s.substr(11);
  if (t.size() < 8 || t[2] != ':' || t[5] != ':') return false;
  if (!all_digits(t.substr(0, 2)) || !all_digits(t.substr(3, 2)) ||
      !all_digits(t.substr(6, 2))) {
    return false;
  }
  if (t.substr(0, 2) > "23" || t.substr(3, 2) > "59" || t.substr(6, 2) > "59") {
    return false;
  }
  std::size_t pos = 8;
  if (pos < t.size() && t[pos] == '.') {
    std::size_t frac = pos + 1;
    while (frac < t.size() && std::isdigit(static_cast<unsigned char>(t[frac]))) {
      ++frac;
    }
    if (frac == pos + 1) return false;
    pos = frac;
  }
  return valid_timezone(t.substr(pos));
}

inline bool is_valid_date_or_datetime(std::string_view s) {
  return is_valid_date(s) || is_valid_datetime(s);
}

// xsd:decimal.
inline bool is_valid_decimal(std::string_view s) {
  if (s.empty()) return false;
  if (s[0] == '+' || s[0] == '-') s.remove_prefix(1);
  auto dot = s.find('.');
  if (dot == std::string_view::npos) return all_digits(s);
  std::string_view ipart = s.substr(0, dot), fpart = s.substr(dot + 1);
  if (ipart.empty() && fpart.empty()) return false;
  return (ipart.empty() || all_digits(ipart)) && (fpart.empty() || all_digits(fpart));
}

// xsd:duration — -?PnYnMnDTnHnMn(.n)S with at least one component.
inline bool is_valid_duration(std::string_view s) {
  if (!s.empty() && s[0] == '-') s.remove_prefix(1);
  if (s.size() < 2 || s[0] != 'P') return false;
  s.remove_prefix(1);
  bool any = false, in_time = false, time_any = true;
  const char* date_units = "YMD";
  const char* time_units = "HMS";
  std::size_t unit_at = 0;
  while (!s.empty()) {
    if (s[0] == 'T') {
      if (in_time) return false;
      in_time = true;
      time_any = false;
      unit_at = 0;
      s.remove_prefix(1);
      continue;
    }
    std::size_t n = 0;
    while (n < s.size() && std::isdigit(static_cast<unsigned char>(s[n]))) ++n;
    bool fraction = false;
    if (in_time && n > 0 && n < s.size() && s[n] == '.') {
      std::size_t f = n + 1;
      while (f < s.size() && std::isdigit(static_cast<unsigned char>(s[f]))) ++f;
      if (f == n + 1) return false;
      n = f;
      fraction = true;
    }
    if (n == 0 || n >= s.size()) return false;
    const char* units = in_time ? time_units : date_units;
    const char* hit = std::strchr(units, s[n]);
    if (!hit || static_cast<std::size_t>(hit - units) < unit_at) return false;
    if (fraction && s[n] != 'S') return false;
    unit_at = static_cast<std::size_t>(hit - units) + 1;
    any = true;
    if (in_time) time_any = true;
    s.remove_prefix(n + 1);
  }
  return any && time_any;
}

inline bool is_valid_slug(std::string_view s) {
  if (s.empty()) return false;
  if (!std::islower(static_cast<unsigned char>(s[0])) &&
      !std::isdigit(static_cast<unsigned char>(s[0]))) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::islower(c) || std::isdigit(c) || c == '-';
  });
}

// Chronological key for inversion checks; dates count as midnight, offsets are
// applied, absent timezone reads as UTC.
inline double temporal_key(std::string_view s) {
  int y = std::stoi(std::string(s.substr(0, 4)));
  int mo = std::stoi(std::string(s.substr(5, 2)));
  int d = std::stoi(std::string(s.substr(8, 2)));
  double minutes = ((y * 12 + mo) * 31 + d) * 24.0 * 60.0;
  std::string_view rest = s.substr(10);
  if (!rest.empty() && rest[0] == 'T') {
    minutes += std::stoi(std::string(rest.substr(1, 2))) * 60.0;
    minutes += std::stoi(std::string(rest.substr(4, 2)));
    minutes += std::stod(std::string(rest.substr(7, 2))) / 60.0;
    rest = rest.substr(9);
    if (!rest.empty() && rest[0] == '.') {
      std::size_t f = 1;
      while (f < rest.size() && std::isdigit(static_cast<unsigned char>(rest[f]))) ++f;
      rest = rest.substr(f);
    }
  }
  if (!rest.empty() && (rest[0] == '+' || rest[0] == '-')) {
    int off = std::stoi(std::string(rest.substr(1, 2))) * 60 +
              std::stoi(std::string(rest.substr(4, 2)));
    minutes += rest[0] == '+' ? -off : off;
  }
  return minutes;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Values

struct TextValue {
  std::string text;
  std::optional<std::string> lang;
  bool operator==(const TextValue&) const = default;
};

struct BoolValue {
  bool value = false;
  bool operator==(const BoolValue&) const = default;
};

struct DateValue {
  std::string lexical;  // valid xsd:date
  bool operator==(const DateValue&) const = default;
};

struct DateTimeValue {
  std::string lexical;  // valid xsd:dateTime
  bool operator==(const DateTimeValue&) const = default;
};

struct DecimalValue {
  std::string lexical;  // valid xsd:decimal, arbitrary precision
  bool operator==(const DecimalValue&) const = default;
};

struct DurationValue {
  std::string lexical;  // valid xsd:duration
  bool operator==(const DurationValue&) const = default;
};

struct PosIntValue {
  std::uint64_t value = 1;
  bool operator==(const PosIntValue&) const = default;
};

struct IriValue {
  std::string iri;  // absolute
  bool operator==(const IriValue&) const = default;
};

struct TokenValue {
  std::string token;  // lowercase enumeration member
  bool operator==(const TokenValue&) const = default;
};

/// indigenous=true marks the agent as an Indigenous agent.
struct AgentValue {
  std::string name;
  std::optional<std::string> email;
  bool indigenous = false;
  bool operator==(const AgentValue&) const = default;
};

struct PeriodValue {
  std::optional<std::string> start;  // date or dateTime lexical
  std::optional<std::string> end;
  bool operator==(const PeriodValue&) const = default;
};

struct LocationValue {
  std::string label;
  std::optional<std::string> region_code;
  bool operator==(const LocationValue&) const = default;
};

using Value = std::variant<TextValue, BoolValue, DateValue, DateTimeValue,
                           DecimalValue, DurationValue, PosIntValue, IriValue,
                           TokenValue, AgentValue, PeriodValue, LocationValue>;

/// Bare text rendering used by scoring, search and template expansion.
inline std::string value_text(const Value& v) {
  struct {
    std::string operator()(const TextValue& t) const { return t.text; }
    std::string operator()(const BoolValue& b) const { return b.value ? "true" : "false"; }
    std::string operator()(const DateValue& d) const { return d.lexical; }
    std::string operator()(const DateTimeValue& d) const { return d.lexical; }
    std::string operator()(const DecimalValue& d) const { return d.lexical; }
    std::string operator()(const DurationValue& d) const { return d.lexical; }
    std::string operator()(const PosIntValue& p) const { return std::to_string(p.value); }
    std::string operator()(const IriValue& i) const { return i.iri; }
    std::string operator()(const TokenValue& t) const { return t.token; }
    std::string operator()(const AgentValue& a) const { return a.name; }
    std::string operator()(const PeriodValue& p) const {
      if (p.start && p.end) return *p.start + "/" + *p.end;
      return p.start ? *p.start : p.end.value_or("");
    }
    std::string operator()(const LocationValue& l) const { return l.label; }
  } render;
  return std::visit(render, v);
}

/// A value is "filled" when it carries information: non-blank text, or an
/// explicitly set boolean (true or false both count).
inline bool value_filled(const Value& v) {
  struct {
    bool operator()(const TextValue& t) const { return !detail::trim(t.text).empty(); }
    bool operator()(const BoolValue&) const { return true; }
    bool operator()(const DateValue&) const { return true; }
    bool operator()(const DateTimeValue&) const { return true; }
    bool operator()(const DecimalValue&) const { return true; }
    bool operator()(const DurationValue&) const { return true; }
    bool operator()(const PosIntValue&) const { return true; }
    bool operator()(const IriValue& i) const { return !i.iri.empty(); }
    bool operator()(const TokenValue& t) const { return !t.token.empty(); }
    bool operator()(const AgentValue& a) const {
      return !detail::trim(a.name).empty() ||
             (a.email && !detail::trim(*a.email).empty());
    }
    bool operator()(const PeriodValue& p) const {
      return p.start.has_value() || p.end.has_value();
    }
    bool operator()(const LocationValue& l) const {
      return !detail::trim(l.label).empty() ||
             (l.region_code && !detail::trim(*l.region_code).empty());
    }
  } probe;
  return std::visit(probe, v);
}

// ---------------------------------------------------------------------------
// Catalogue entries

/// An attached dataset distribution.
struct ResourceRef {
  std::string name;
  std::string url;  // absolute
  std::string format;
  std::optional<std::string> description;
  bool operator==(const ResourceRef&) const = default;
};

enum class Modality { Unspecified, Tabular, Rdf, Both };

constexpr std::string_view to_string(Modality m) {
  switch (m) {
    case Modality::Unspecified: return "unspecified";
    case Modality::Tabular: return "tabular";
    case Modality::Rdf: return "rdf";
    case Modality::Both: return "both";
  }
  return "unspecified";
}

struct CatalogueEntry {
  std::string id;  // URL-safe slug
  std::optional<std::string> organization;
  Modality modality = Modality::Unspecified;
  std::map<std::string, std::vector<Value>> fields;
  std::vector<ResourceRef> resources;
  std::int64_t revision = 1;

  const std::vector<Value>* values(std::string_view key) const {
    auto it = fields.find(std::string(key));
    return it == fields.end() ? nullptr : &it->second;
  }

  /// First value's bare text, or empty.
  std::string first_text(std::string_view key) const {
    const auto* vals = values(key);
    return vals && !vals->empty() ? value_text(vals->front()) : std::string();
  }

  bool field_filled(std::string_view key) const {
    const auto* vals = values(key);
    if (!vals) return false;
    return std::any_of(vals->begin(), vals->end(), value_filled);
  }

  bool operator==(const CatalogueEntry&) const = default;
};

// ---------------------------------------------------------------------------
// Validation

enum class IssueCode {
  TypeMismatch,
  EnumViolation,
  Cardinality,
  MalformedIri,
  MalformedDate,
  MalformedDecimal,
  MalformedDuration,
  NonPositive,
  UnknownField,
  PeriodInverted,
};

constexpr std::string_view to_string(IssueCode code) {
  switch (code) {
    case IssueCode::TypeMismatch: return "TypeMismatch";
    case IssueCode::EnumViolation: return "EnumViolation";
    case IssueCode::Cardinality: return "Cardinality";
    case IssueCode::MalformedIri: return "MalformedIri";
    case IssueCode::MalformedDate: return "MalformedDate";
    case IssueCode::MalformedDecimal: return "MalformedDecimal";
    case IssueCode::MalformedDuration: return "MalformedDuration";
    case IssueCode::NonPositive: return "NonPositive";
    case IssueCode::UnknownField: return "UnknownField";
    case IssueCode::PeriodInverted: return "PeriodInverted";
  }
  return "TypeMismatch";
}

enum class Severity { Error, Warning };

struct ValidationIssue {
  std::string field_key;
  IssueCode code = IssueCode::TypeMismatch;
  Severity severity = Severity::Error;
  std::string message;
  bool operator==(const ValidationIssue&) const = default;
};

namespace detail {

inline ValidationIssue issue(std::string key, IssueCode code, std::string msg,
                             Severity severity = Severity::Error) {
  return ValidationIssue{std::move(key), code, severity, std::move(msg)};
}

inline bool reference_range(ValueRange::Kind k) {
  using K = ValueRange::Kind;
  switch (k) {
    case K::Concept:
    case K::Document:
    case K::DataService:
    case K::DatasetRef:
    case K::License:
    case K::Policy:
    case K::ProvenanceStatement:
    case K::ProvEntity:
    case K::QualityAnnotation:
    case K::QualityDimension:
    case K::LinguisticSystem:
    case K::AdministrativeArea:
      return true;
    default:
      return false;
  }
}

}  // namespace detail

/// Checks one value against a property's range. Purely local; an empty result
/// means the value conforms.
inline std::vector<ValidationIssue> validate_value(const PropertySpec& spec,
                                                   const Value& v) {
  using K = ValueRange::Kind;
  std::vector<ValidationIssue> out;
  const std::string& key = spec.key;
  const K kind = spec.range.kind;

  auto mismatch = [&](std::string_view want) {
    out.push_back(detail::issue(
        key, IssueCode::TypeMismatch,
        "expected " + std::string(want) + ", got '" + value_text(v) + "'"));
  };

  switch (kind) {
    case K::PlainText:
    case K::LangText:
      if (!std::holds_alternative<TextValue>(v)) mismatch("text");
      break;
    case K::Boolean:
      if (!std::holds_alternative<BoolValue>(v)) mismatch("boolean");
      break;
    case K::Date:
      if (std::holds_alternative<DateValue>(v)) break;
      if (std::holds_alternative<TextValue>(v)) {
        out.push_back(detail::issue(key, IssueCode::MalformedDate,
                                    "'" + value_text(v) + "' is not an ISO date"));
      } else {
        mismatch("date");
      }
      break;
    case K::DateTime:
      if (std::holds_alternative<DateValue>(v) ||
          std::holds_alternative<DateTimeValue>(v)) {
        break;
      }
      if (std::holds_alternative<TextValue>(v)) {
        out.push_back(detail::issue(key, IssueCode::MalformedDate,
                                    "'" + value_text(v) +
                                        "' is not an ISO date or date-time"));
      } else {
        mismatch("date or date-time");
      }
      break;
    case K::Decimal:
      if (std::holds_alternative<DecimalValue>(v)) break;
      if (std::holds_alternative<TextValue>(v)) {
        out.push_back(detail::issue(key, IssueCode::MalformedDecimal,
                                    "'" + value_text(v) + "' is not a decimal"));
      } else {
        mismatch("decimal");
      }
      break;
    case K::Duration:
      if (std::holds_alternative<DurationValue>(v)) break;
      if (std::holds_alternative<TextValue>(v)) {
        out.push_back(detail::issue(key, IssueCode::MalformedDuration,
                                    "'" + value_text(v) + "' is not a duration"));
      } else {
        mismatch("duration");
      }
      break;
    case K::PositiveInteger: {
      if (std::holds_alternative<PosIntValue>(v)) break;
      if (const auto* t = std::get_if<TextValue>(&v)) {
        std::string_view s = detail::trim(t->text);
        std::string_view digits = s;
        if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
          digits.remove_prefix(1);
        }
        if (detail::all_digits(digits)) {
          out.push_back(detail::issue(key, IssueCode::NonPositive,
                                      "'" + t->text + "' must be >= 1"));
          break;
        }
      }
      mismatch("positive integer");
      break;
    }
    case K::Enumerated: {
      const std::string* token = nullptr;
      std::string lowered;
      if (const auto* t = std::get_if<TokenValue>(&v)) {
        token = &t->token;
      } else if (const auto* t = std::get_if<TextValue>(&v)) {
        lowered = detail::ascii_lower(t->text);
        token = &lowered;
      } else {
        mismatch("one of the allowed tokens");
        break;
      }
      if (!spec.range.allows_token(*token)) {
        std::string allowed;
        for (const auto& t : spec.range.tokens) {
          allowed += allowed.empty() ? t : ", " + t;
        }
        out.push_back(detail::issue(key, IssueCode::EnumViolation,
                                    "'" + *token + "' is not one of {" +
                                        allowed + "}"));
      }
      break;
    }
    case K::ResourceIri:
      if (std::holds_alternative<IriValue>(v)) break;
      if (std::holds_alternative<TextValue>(v)) {
        out.push_back(detail::issue(key, IssueCode::MalformedIri,
                                    "'" + value_text(v) +
                                        "' is not an absolute IRI"));
      } else {
        mismatch("IRI");
      }
      break;
    case K::MediaType: {
      const TextValue* t = std::get_if<TextValue>(&v);
      const TokenValue* tok = std::get_if<TokenValue>(&v);
      if (std::holds_alternative<IriValue>(v)) break;
      if (!t && !tok) {
        mismatch("media type or file extension");
        break;
      }
      const std::string& fmt = t ? t->text : tok->token;
      if (!known_format_token(fmt)) {
        out.push_back(detail::issue(key, IssueCode::EnumViolation,
                                    "'" + fmt +
                                        "' is not a known media type or extension",
                                    Severity::Warning));
      }
      break;
    }
    case K::Agent:
      if (!std::holds_alternative<AgentValue>(v)) mismatch("agent");
      break;
    case K::Location:
      if (!std::holds_alternative<LocationValue>(v)) mismatch("location");
      break;
    case K::PeriodOfTime: {
      const auto* p = std::get_if<PeriodValue>(&v);
      if (!p) {
        mismatch("period");
        break;
      }
      bool parts_ok = true;
      for (const auto& part : {p->start, p->end}) {
        if (part && !detail::is_valid_date_or_datetime(*part)) {
          out.push_back(detail::issue(key, IssueCode::MalformedDate,
                                      "'" + *part +
                                          "' is not an ISO date or date-time"));
          parts_ok = false;
        }
      }
      if (parts_ok && p->start && p->end &&
          detail::temporal_key(*p->start) > detail::temporal_key(*p->end)) {
        out.push_back(detail::issue(key, IssueCode::PeriodInverted,
                                    "period starts after it ends"));
      }
      break;
    }
    default:
      // Reference ranges carry either an IRI or opaque text.
      if (detail::reference_range(kind)) {
        if (!std::holds_alternative<IriValue>(v) &&
            !std::holds_alternative<TextValue>(v)) {
          mismatch("IRI or text");
        }
      }
      break;
  }
  return out;
}

/// Per-entry validation: per-value range checks, cardinality, unknown fields.
/// Field absence is never an issue. Stable order: field key, then value index.
inline std::vector<ValidationIssue> validate_entry(const MaturityModel& model,
                                                   const CatalogueEntry& entry) {
  std::vector<ValidationIssue> out;
  for (const auto& [key, values] : entry.fields) {
    const PropertySpec* spec = model.find_property(key);
    if (!spec) {
      out.push_back(detail::issue(key, IssueCode::UnknownField,
                                  "'" + key + "' is not a model property"));
      continue;
    }
    for (const Value& v : values) {
      auto issues = validate_value(*spec, v);
      out.insert(out.end(), issues.begin(), issues.end());
    }
    if (spec->single_valued && values.size() > 1) {
      out.push_back(detail::issue(key, IssueCode::Cardinality,
                                  "'" + key + "' allows at most one value, has " +
                                      std::to_string(values.size())));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

/// Range-directed coercion. Lossless coercions produce typed values; anything
/// else stays text for validate_entry to flag.
inline Value coerce_scalar(const ValueRange& range, const std::string& s) {
  using K = ValueRange::Kind;
  switch (range.kind) {
    case K::Boolean: {
      const std::string lower = ascii_lower(s);
      if (lower == "true") return BoolValue{true};
      if (lower == "false") return BoolValue{false};
      break;
    }
    case K::Date:
      if (is_valid_date(s)) return DateValue{s};
      break;
    case K::DateTime:
      if (is_valid_datetime(s)) return DateTimeValue{s};
      if (is_valid_date(s)) return DateValue{s};
      break;
    case K::Decimal:
      if (is_valid_decimal(s)) return DecimalValue{s};
      break;
    case K::Duration:
      if (is_valid_duration(s)) return DurationValue{s};
      break;
    case K::PositiveInteger:
      if (all_digits(s) && s.size() <= 19 && s != std::string(s.size(), '0')) {
        return PosIntValue{std::stoull(s)};
      }
      break;
    case K::Enumerated: {
      const std::string lower = ascii_lower(s);
      if (range.allows_token(lower)) return TokenValue{lower};
      break;
    }
    case K::ResourceIri:
      if (looks_absolute_iri(s)) return IriValue{s};
      break;
    case K::Agent:
      return AgentValue{s, std::nullopt, false};
    case K::Location:
      return LocationValue{s, std::nullopt};
    default:
      if (reference_range(range.kind) && looks_absolute_iri(s)) {
        return IriValue{s};
      }
      break;
  }
  return TextValue{s, std::nullopt};
}

inline Value coerce_value(const ValueRange& range, const nlohmann::json& j) {
  using K = ValueRange::Kind;
  if (j.is_string()) return coerce_scalar(range, j.get<std::string>());
  if (j.is_boolean()) {
    if (range.kind == K::Boolean) return BoolValue{j.get<bool>()};
    return TextValue{j.get<bool>() ? "true" : "false", std::nullopt};
  }
  if (j.is_number()) {
    if (range.kind == K::PositiveInteger && j.is_number_integer() &&
        j.get<std::int64_t>() >= 1) {
      return PosIntValue{static_cast<std::uint64_t>(j.get<std::int64_t>())};
    }
    return coerce_scalar(range, j.dump());
  }
  if (j.is_object()) {
    if (range.kind == K::Agent && j.contains("name")) {
      AgentValue a;
      a.name = j["name"].get<std::string>();
      if (j.contains("email") && j["email"].is_string()) {
        a.email = j["email"].get<std::string>();
      }
      a.indigenous = j.value("indigenous", false);
      return a;
    }
    if (range.kind == K::PeriodOfTime &&
        (j.contains("start") || j.contains("end"))) {
      PeriodValue p;
      if (j.contains("start") && j["start"].is_string()) {
        p.start = j["start"].get<std::string>();
      }
      if (j.contains("end") && j["end"].is_string()) {
        p.end = j["end"].get<std::string>();
      }
      return p;
    }
    if (range.kind == K::Location && j.contains("label")) {
      LocationValue l;
      l.label = j["label"].get<std::string>();
      if (j.contains("region_code") && j["region_code"].is_string()) {
        l.region_code = j["region_code"].get<std::string>();
      }
      return l;
    }
    if ((range.kind == K::PlainText || range.kind == K::LangText) &&
        j.contains("text")) {
      TextValue t;
      t.text = j["text"].get<std::string>();
      if (j.contains("lang") && j["lang"].is_string()) {
        t.lang = j["lang"].get<std::string>();
      }
      return t;
    }
  }
  return TextValue{j.dump(), std::nullopt};
}

}  // namespace detail

/// Parses the entry file format. Values are coerced to the governing field's
/// range where lossless; unknown keys are kept as text for validation to flag.
inline CatalogueEntry parse_entry(const std::string& text,
                                  const MaturityModel& model) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::MalformedDocument, "entry must be a JSON object");
  }
  if (!doc.contains("id") || !doc["id"].is_string()) {
    throw Error(ErrorCode::MissingId, "entry has no 'id'");
  }

  CatalogueEntry entry;
  entry.id = doc["id"].get<std::string>();
  if (!detail::is_valid_slug(entry.id)) {
    throw Error(ErrorCode::MissingId, "'" + entry.id + "' is not a URL-safe slug");
  }
  if (doc.contains("organization") && doc["organization"].is_string()) {
    entry.organization = doc["organization"].get<std::string>();
  }
  if (doc.contains("revision") && doc["revision"].is_number_integer()) {
    entry.revision = doc["revision"].get<std::int64_t>();
  }
  if (doc.contains("modality") && doc["modality"].is_string()) {
    const std::string m = doc["modality"].get<std::string>();
    if (m == "tabular") entry.modality = Modality::Tabular;
    else if (m == "rdf") entry.modality = Modality::Rdf;
    else if (m == "both") entry.modality = Modality::Both;
    else if (m != "unspecified") {
      throw Error(ErrorCode::MalformedDocument, "unknown modality '" + m + "'");
    }
  }

  static const ValueRange text_range = ValueRange::of(ValueRange::Kind::PlainText);
  if (doc.contains("fields")) {
    if (!doc["fields"].is_object()) {
      throw Error(ErrorCode::MalformedDocument, "'fields' must be an object");
    }
    for (const auto& [key, raw] : doc["fields"].items()) {
      const PropertySpec* spec = model.find_property(key);
      const ValueRange& range = spec ? spec->range : text_range;
      std::vector<Value> values;
      if (raw.is_array()) {
        for (const auto& item : raw) {
          if (item.is_null()) continue;
          values.push_back(detail::coerce_value(range, item));
        }
      } else if (!raw.is_null()) {
        values.push_back(detail::coerce_value(range, raw));
      }
      entry.fields.emplace(key, std::move(values));
    }
  }

  if (doc.contains("resources")) {
    if (!doc["resources"].is_array()) {
      throw Error(ErrorCode::MalformedDocument, "'resources' must be an array");
    }
    for (const auto& r : doc["resources"]) {
      if (!r.is_object() || !r.contains("url") || !r["url"].is_string()) {
        throw Error(ErrorCode::MalformedDocument, "resource needs a 'url'");
      }
      ResourceRef ref;
      ref.url = r["url"].get<std::string>();
      if (!detail::looks_absolute_iri(ref.url)) {
        throw Error(ErrorCode::MalformedDocument,
                    "resource url must be absolute: " + ref.url);
      }
      ref.name = r.value("name", "");
      ref.format = r.value("format", "");
      if (r.contains("description") && r["description"].is_string()) {
        ref.description = r["description"].get<std::string>();
      }
      entry.resources.push_back(std::move(ref));
    }
  }
  return entry;
}

}  // namespace udc
