#include <catch2/catch_amalgamated.hpp>

#include "udc/record.hpp"

using namespace udc;

namespace {

const MaturityModel& model() { return builtin_model(); }

ErrorCode parse_fails(const std::string& text) {
  try {
    parse_entry(text, model());
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected parse_entry to throw");
  return ErrorCode::Usage;
}

}  // namespace

TEST_CASE("lexical forms") {
  CHECK(detail::is_valid_date("2024-02-07"));
  CHECK(detail::is_valid_date("2024-02-29"));   // leap year
  CHECK_FALSE(detail::is_valid_date("2023-02-29"));
  CHECK_FALSE(detail::is_valid_date("07/02/2024"));
  CHECK_FALSE(detail::is_valid_date("2024-13-01"));

  CHECK(detail::is_valid_datetime("2022-03-05T10:00:00Z"));
  CHECK(detail::is_valid_datetime("2022-03-05T10:00:00.123-05:00"));
  CHECK_FALSE(detail::is_valid_datetime("2022-03-05 10:00:00"));
  CHECK_FALSE(detail::is_valid_datetime("2022-03-05T25:00:00"));

  CHECK(detail::is_valid_decimal("12.5"));
  CHECK(detail::is_valid_decimal("-0.75"));
  CHECK(detail::is_valid_decimal("30"));
  CHECK_FALSE(detail::is_valid_decimal("1,5"));
  CHECK_FALSE(detail::is_valid_decimal("."));

  CHECK(detail::is_valid_duration("P1Y"));
  CHECK(detail::is_valid_duration("PT15M"));
  CHECK(detail::is_valid_duration("P3DT4H30M1.5S"));
  CHECK(detail::is_valid_duration("-P2M"));
  CHECK_FALSE(detail::is_valid_duration("P"));
  CHECK_FALSE(detail::is_valid_duration("PT"));
  CHECK_FALSE(detail::is_valid_duration("P1H"));  // hours only after T

  CHECK(detail::is_valid_slug("ontario-s-southern-highways-program"));
  CHECK_FALSE(detail::is_valid_slug("-leading"));
  CHECK_FALSE(detail::is_valid_slug("Upper"));
  CHECK_FALSE(detail::is_valid_slug(""));
}

TEST_CASE("parse_entry basics") {
  CatalogueEntry e = parse_entry(R"json({"id":"x","fields":{"title":["T"]}})json", model());
  CHECK(e.id == "x");
  REQUIRE(e.values("title") != nullptr);
  REQUIRE(e.values("title")->size() == 1);
  CHECK(std::get<TextValue>(e.values("title")->front()).text == "T");
  CHECK(e.revision == 1);
}

TEST_CASE("parse_entry coerces by range") {
  CatalogueEntry e = parse_entry(R"json({
    "id": "x",
    "modality": "tabular",
    "fields": {
      "issued": ["2024-02-07"],
      "accessCategory": ["Open"],
      "containsIndigenousData": ["false"],
      "hasRDA_A1_04D": [true],
      "rows": ["1200"],
      "spatialResolutionInMeters": ["30"],
      "temporalResolution": ["P1D"],
      "accessURL": ["https://data.example.org/d1"],
      "creator": [{"name": "Jane", "email": "jane@example.org"}],
      "temporal": [{"start": "2022-01-01", "end": "2025-12-31"}],
      "spatial": ["Southern Ontario"],
      "license": ["cc-by"]
    }
  })json", model());

  CHECK(e.modality == Modality::Tabular);
  CHECK(std::holds_alternative<DateValue>(e.values("issued")->front()));
  CHECK(std::get<TokenValue>(e.values("accessCategory")->front()).token == "open");
  CHECK(std::get<BoolValue>(e.values("containsIndigenousData")->front()).value == false);
  CHECK(std::get<BoolValue>(e.values("hasRDA_A1_04D")->front()).value == true);
  CHECK(std::get<PosIntValue>(e.values("rows")->front()).value == 1200);
  CHECK(std::get<DecimalValue>(e.values("spatialResolutionInMeters")->front()).lexical == "30");
  CHECK(std::holds_alternative<DurationValue>(e.values("temporalResolution")->front()));
  CHECK(std::holds_alternative<IriValue>(e.values("accessURL")->front()));
  const auto& agent = std::get<AgentValue>(e.values("creator")->front());
  CHECK(agent.name == "Jane");
  CHECK(agent.email == "jane@example.org");
  CHECK(agent.indigenous == false);
  const auto& period = std::get<PeriodValue>(e.values("temporal")->front());
  CHECK(period.start == "2022-01-01");
  CHECK(period.end == "2025-12-31");
  CHECK(std::get<LocationValue>(e.values("spatial")->front()).label == "Southern Ontario");
  // license_id style text stays as opaque text for a reference range
  CHECK(std::holds_alternative<TextValue>(e.values("license")->front()));
  CHECK(validate_entry(model(), e).empty());
}

TEST_CASE("parse_entry errors") {
  CHECK(parse_fails(R"json({"fields":{}})json") == ErrorCode::MissingId);
  CHECK(parse_fails("{nope") == ErrorCode::MalformedDocument);
  CHECK(parse_fails(R"json({"id":"Bad Slug"})json") == ErrorCode::MissingId);
  CHECK(parse_fails(R"json({"id":"x","resources":[{"name":"r"}]})json") ==
        ErrorCode::MalformedDocument);
}

TEST_CASE("validate_value enumeration") {
  const PropertySpec& spec = model().property("accessCategory");
  CHECK(validate_value(spec, TokenValue{"open"}).empty());

  auto issues = validate_value(spec, TokenValue{"partial"});
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].code == IssueCode::EnumViolation);
  CHECK(issues[0].severity == Severity::Error);
}

TEST_CASE("validate_value boolean range") {
  const PropertySpec& spec = model().property("hasRDA_A1_04D");
  auto issues = validate_value(spec, TextValue{"yes", std::nullopt});
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].code == IssueCode::TypeMismatch);
  CHECK(validate_value(spec, BoolValue{false}).empty());
}

TEST_CASE("validate_value media type warnings") {
  const PropertySpec& spec = model().property("format");
  CHECK(validate_value(spec, TextValue{"csv", std::nullopt}).empty());
  CHECK(validate_value(spec, TextValue{"application/vnd.ms-excel", std::nullopt}).empty());
  CHECK(validate_value(spec, TextValue{"GeoJSON", std::nullopt}).empty());

  auto issues = validate_value(spec, TextValue{"html, pdf", std::nullopt});
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].code == IssueCode::EnumViolation);
  CHECK(issues[0].severity == Severity::Warning);
}

TEST_CASE("validate_value periods") {
  const PropertySpec& spec = model().property("temporal");
  CHECK(validate_value(spec, PeriodValue{"2022-01-01", "2025-12-31"}).empty());
  CHECK(validate_value(spec, PeriodValue{"2022-01-01", std::nullopt}).empty());

  auto inverted = validate_value(spec, PeriodValue{"2025-01-01", "2022-01-01"});
  REQUIRE(inverted.size() == 1);
  CHECK(inverted[0].code == IssueCode::PeriodInverted);

  auto malformed = validate_value(spec, PeriodValue{"last year", std::nullopt});
  REQUIRE(malformed.size() == 1);
  CHECK(malformed[0].code == IssueCode::MalformedDate);
}

TEST_CASE("validate_entry") {
  SECTION("empty entry is valid; absence is not invalidity") {
    CatalogueEntry e;
    e.id = "empty";
    CHECK(validate_entry(model(), e).empty());
  }

  SECTION("cardinality") {
    CatalogueEntry e = parse_entry(
        R"json({"id":"x","fields":{"versionInfo":["1.0","2.0"]}})json", model());
    auto issues = validate_entry(model(), e);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].code == IssueCode::Cardinality);
    CHECK(issues[0].field_key == "versionInfo");
  }

  SECTION("malformed date") {
    CatalogueEntry e = parse_entry(
        R"json({"id":"x","fields":{"issued":["07/02/2024"]}})json", model());
    auto issues = validate_entry(model(), e);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].code == IssueCode::MalformedDate);
  }

  SECTION("unknown field") {
    CatalogueEntry e = parse_entry(
        R"json({"id":"x","fields":{"published_date":["2024-01-02"]}})json", model());
    auto issues = validate_entry(model(), e);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].code == IssueCode::UnknownField);
  }

  SECTION("issue order is stable: field key, then value index") {
    CatalogueEntry e = parse_entry(R"json({"id":"x","fields":{
      "issued": ["bad1", "bad2"],
      "accessURL": ["not a url"]
    }})json", model());
    auto issues = validate_entry(model(), e);
    REQUIRE(issues.size() == 4);  // 2 dates + 1 iri + 1 cardinality on issued
    CHECK(issues[0].field_key == "accessURL");
    CHECK(issues[1].field_key == "issued");
    CHECK(issues[1].message.find("bad1") != std::string::npos);
    CHECK(issues[2].message.find("bad2") != std::string::npos);
    CHECK(issues[3].code == IssueCode::Cardinality);
    CHECK(validate_entry(model(), e) == issues);  // deterministic
  }
}

TEST_CASE("value_filled semantics") {
  CHECK(value_filled(BoolValue{false}));
  CHECK(value_filled(TextValue{"x", std::nullopt}));
  CHECK_FALSE(value_filled(TextValue{"   ", std::nullopt}));
  CHECK_FALSE(value_filled(AgentValue{"", std::nullopt, false}));
  CHECK(value_filled(AgentValue{"", std::string("a@x.org"), false}));
  CHECK_FALSE(value_filled(PeriodValue{std::nullopt, std::nullopt}));
  CHECK(value_filled(LocationValue{"Toronto", std::nullopt}));
}
