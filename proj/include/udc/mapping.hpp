#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "udc/detail/uuid.hpp"
#include "udc/errors.hpp"
#include "udc/model.hpp"
#include "udc/rdf.hpp"
#include "udc/record.hpp"
#include "udc/template_expr.hpp"

namespace udc {

// Namespace for name-based minted-node UUIDs; never change it, or re-syncs
// would churn every minted IRI.
inline constexpr std::string_view kUuidNamespace =
    "a48e23b6-72a9-4843-850f-9d23cab40a23";

enum class UuidMode { Deterministic, Random };

/// Position of the template being evaluated; deterministic UUIDs are named
/// after (entry id, template path).
struct EvalScope {
  std::string entry_id;
  std::string template_path;
};

using Helper =
    std::function<std::string(const std::vector<std::string>&, const EvalScope&)>;

inline std::map<std::string, Helper> default_helpers(UuidMode mode) {
  std::map<std::string, Helper> helpers;
  helpers["generate_uuid"] = [mode](const std::vector<std::string>& args,
                                    const EvalScope& scope) {
    if (!args.empty()) {
      throw Error(ErrorCode::HelperFailure, "generate_uuid takes no arguments");
    }
    if (mode == UuidMode::Random) return detail::uuid_v4();
    return detail::uuid_v5(kUuidNamespace,
                           scope.entry_id + "/" + scope.template_path);
  };
  helpers["to_date"] = [](const std::vector<std::string>& args,
                          const EvalScope&) {
    if (args.size() != 1) {
      throw Error(ErrorCode::HelperFailure, "to_date expects one argument");
    }
    const std::string& v = args[0];
    if (detail::is_valid_date(v)) return v.substr(0, 10);
    if (detail::is_valid_datetime(v)) return v.substr(0, 10);
    if (detail::all_digits(v) && v.size() == 4) return v + "-01-01";
    throw Error(ErrorCode::HelperFailure,
                "to_date: '" + v + "' is not a date, date-time or year");
  };
  return helpers;
}

/// Evaluation inputs: the entry, a CKAN-style view of its built-in fields,
/// and the helper registry.
struct EvalContext {
  const CatalogueEntry* entry = nullptr;
  std::map<std::string, std::vector<std::string>> ckan_view;
  std::map<std::string, Helper> helpers;
  UuidMode uuid_mode = UuidMode::Deterministic;

  static EvalContext for_entry(const CatalogueEntry& entry,
                               UuidMode mode = UuidMode::Deterministic) {
    EvalContext ctx;
    ctx.entry = &entry;
    ctx.uuid_mode = mode;
    ctx.helpers = default_helpers(mode);
    ctx.ckan_view = build_ckan_view(entry);
    return ctx;
  }

  static std::map<std::string, std::vector<std::string>> build_ckan_view(
      const CatalogueEntry& entry) {
    std::map<std::string, std::vector<std::string>> view;
    view["id"] = {entry.id};
    auto texts = [&entry](std::string_view key) {
      std::vector<std::string> out;
      if (const auto* values = entry.values(key)) {
        for (const Value& v : *values) out.push_back(value_text(v));
      }
      return out;
    };
    view["title"] = texts("title");
    view["notes"] = texts("description");
    view["tags"] = texts("keyword");
    view["url"] = texts("landingPage");
    view["visibility"] = texts("access_visibility");
    view["license_id"] = texts("license");
    if (entry.organization) view["organization"] = {*entry.organization};
    std::vector<std::string> authors, emails;
    if (const auto* creators = entry.values("creator")) {
      for (const Value& v : *creators) {
        if (const auto* agent = std::get_if<AgentValue>(&v)) {
          if (!agent->name.empty()) authors.push_back(agent->name);
          if (agent->email) emails.push_back(*agent->email);
        } else {
          authors.push_back(value_text(v));
        }
      }
    }
    view["author"] = std::move(authors);
    view["author_email"] = std::move(emails);
    return view;
  }
};

// ---------------------------------------------------------------------------
// Template evaluation

namespace detail {

inline std::optional<std::string> value_component(const Value& v,
                                                  std::string_view component) {
  if (const auto* agent = std::get_if<AgentValue>(&v)) {
    if (component == "name") return agent->name;
    if (component == "email") return agent->email;
    if (component == "indigenous") return std::string(agent->indigenous ? "true" : "false");
  } else if (const auto* period = std::get_if<PeriodValue>(&v)) {
    if (component == "start") return period->start;
    if (component == "end") return period->end;
  } else if (const auto* loc = std::get_if<LocationValue>(&v)) {
    if (component == "label") return loc->label;
    if (component == "region_code") return loc->region_code;
  } else if (const auto* text = std::get_if<TextValue>(&v)) {
    if (component == "text") return text->text;
    if (component == "lang") return text->lang;
  }
  return std::nullopt;
}

// Resolved placeholder values; empty strings are dropped, an empty list
// reads as "absent".
inline std::vector<std::string> eval_expr(const Expr& expr,
                                          const EvalContext& ctx,
                                          const EvalScope& scope) {
  std::vector<std::string> out;
  if (expr.kind == Expr::Kind::Path) {
    const auto& path = expr.path;
    if (path.front() == "ckanField") {
      if (path.size() == 2) {
        auto it = ctx.ckan_view.find(path[1]);
        if (it != ctx.ckan_view.end()) out = it->second;
      }
    } else if (ctx.entry) {
      const auto* values = ctx.entry->values(path.front());
      if (values && path.size() == 1) {
        for (const Value& v : *values) out.push_back(value_text(v));
      } else if (values && path.size() == 2) {
        for (const Value& v : *values) {
          if (auto part = value_component(v, path[1])) out.push_back(*part);
        }
      }
    }
  } else {
    auto helper = ctx.helpers.find(expr.call_name);
    if (helper == ctx.helpers.end()) {
      throw Error(ErrorCode::UnknownHelper, expr.call_name);
    }
    std::vector<std::vector<std::string>> arg_values;
    std::size_t multi_count = 0, fanout = 1;
    for (const Expr& arg : expr.args) {
      auto vals = eval_expr(arg, ctx, scope);
      if (vals.empty()) return {};  // absent argument, absent call
      if (vals.size() > 1) {
        ++multi_count;
        fanout = vals.size();
      }
      arg_values.push_back(std::move(vals));
    }
    if (multi_count > 1) {
      throw Error(ErrorCode::MultiValueAmbiguity,
                  "call '" + expr.call_name +
                      "' has more than one multi-valued argument");
    }
    for (std::size_t i = 0; i < fanout; ++i) {
      std::vector<std::string> args;
      for (const auto& vals : arg_values) {
        args.push_back(vals.size() == 1 ? vals[0] : vals[i]);
      }
      out.push_back(helper->second(args, scope));
    }
  }
  std::erase_if(out, [](const std::string& s) { return s.empty(); });
  return out;
}

}  // namespace detail

/// Expands a template. One multi-valued placeholder fans out to one output
/// per value; an unresolvable or empty placeholder makes the whole template
/// absent (nullopt).
inline std::optional<std::vector<std::string>> expand(
    const TemplateExpr& tpl, const EvalContext& ctx,
    const std::string& template_path = "") {
  EvalScope scope{ctx.entry ? ctx.entry->id : "", template_path};

  std::vector<std::vector<std::string>> resolved(tpl.segments.size());
  std::size_t fanout = 1, multi_count = 0;
  for (std::size_t i = 0; i < tpl.segments.size(); ++i) {
    if (!tpl.segments[i].is_placeholder) continue;
    resolved[i] = detail::eval_expr(tpl.segments[i].expr, ctx, scope);
    if (resolved[i].empty()) return std::nullopt;
    if (resolved[i].size() > 1) {
      ++multi_count;
      fanout = resolved[i].size();
    }
  }
  if (multi_count > 1) {
    throw Error(ErrorCode::MultiValueAmbiguity,
                "template '" + tpl.source +
                    "' has more than one multi-valued placeholder");
  }

  std::vector<std::string> outputs;
  for (std::size_t n = 0; n < fanout; ++n) {
    std::string text;
    for (std::size_t i = 0; i < tpl.segments.size(); ++i) {
      const auto& seg = tpl.segments[i];
      if (!seg.is_placeholder) {
        text += seg.text;
      } else {
        text += resolved[i].size() == 1 ? resolved[i][0] : resolved[i][n];
      }
    }
    outputs.push_back(std::move(text));
  }
  return outputs;
}

// ---------------------------------------------------------------------------
// Mapping configuration

struct NodeTemplate;

struct PropertyTemplate {
  enum class Kind { Literal, Iri, Node };

  Kind kind = Kind::Literal;
  TemplateExpr value;              // Literal and Iri
  std::string datatype;            // Literal; resolved absolute IRI
  std::shared_ptr<NodeTemplate> node;  // Node
};

struct NodeTemplate {
  TemplateExpr id_template;
  std::string rdf_type;  // resolved absolute IRI
  std::string path;      // template path prefix, e.g. "dct:creator"
  std::vector<std::pair<std::string, PropertyTemplate>> properties;  // key: resolved predicate IRI, paired with its path below
  std::vector<std::string> property_paths;  // original predicate spellings
};

struct MappingConfig {
  PrefixMap context;
  std::shared_ptr<NodeTemplate> root;
};

namespace detail {

inline std::string resolve_mapping_curie(const PrefixMap& context,
                                         const std::string& token) {
  if (token.rfind("rdf:", 0) == 0 && !context.contains("rdf")) {
    return std::string(rdf::kRdfNamespace) + token.substr(4);
  }
  return resolve_curie(context, token);
}

inline std::shared_ptr<NodeTemplate> parse_node(const nlohmann::ordered_json& doc,
                                                const PrefixMap& context,
                                                const std::string& path) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::MalformedDocument, "node must be an object");
  }
  if (!doc.contains("@id") || !doc["@id"].is_string()) {
    throw Error(ErrorCode::MissingId,
                path.empty() ? "root node has no '@id'"
                             : "node at '" + path + "' has no '@id'");
  }
  auto node = std::make_shared<NodeTemplate>();
  node->path = path;
  node->id_template = parse_template(doc["@id"].get<std::string>());
  if (!doc.contains("@type") || !doc["@type"].is_string()) {
    throw Error(ErrorCode::MalformedDocument,
                "node at '" + (path.empty() ? std::string("@root") : path) +
                    "' has no '@type'");
  }
  node->rdf_type =
      resolve_mapping_curie(context, doc["@type"].get<std::string>());

  for (const auto& [key, value] : doc.items()) {
    if (key == "@id" || key == "@type" || key == "@context") continue;
    const std::string predicate = resolve_mapping_curie(context, key);
    const std::string child_path = path.empty() ? key : path + "/" + key;
    PropertyTemplate prop;
    if (value.is_string()) {
      prop.kind = PropertyTemplate::Kind::Literal;
      prop.value = parse_template(value.get<std::string>());
      prop.datatype = std::string(rdf::kXsdString);
    } else if (value.is_object() && value.contains("@value")) {
      prop.kind = PropertyTemplate::Kind::Literal;
      if (!value["@value"].is_string()) {
        throw Error(ErrorCode::MalformedDocument,
                    "'@value' at '" + child_path + "' must be a string");
      }
      prop.value = parse_template(value["@value"].get<std::string>());
      prop.datatype =
          value.contains("@type")
              ? resolve_mapping_curie(context, value["@type"].get<std::string>())
              : std::string(rdf::kXsdString);
    } else if (value.is_object() && value.contains("@id") && value.size() == 1) {
      prop.kind = PropertyTemplate::Kind::Iri;
      prop.value = parse_template(value["@id"].get<std::string>());
    } else if (value.is_object()) {
      prop.kind = PropertyTemplate::Kind::Node;
      prop.node = parse_node(value, context, child_path);
    } else {
      throw Error(ErrorCode::MalformedDocument,
                  "unsupported mapping value at '" + child_path + "'");
    }
    node->properties.emplace_back(predicate, std::move(prop));
    node->property_paths.push_back(child_path);
  }
  return node;
}

}  // namespace detail

/// Compiles a mapping configuration. All templates are parsed and all CURIEs
/// resolved here, so syntax problems surface before any entry is processed.
inline MappingConfig parse_mapping(const std::string& text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedDocument, e.what());
  }
  if (!doc.is_object() || !doc.contains("mappings") ||
      !doc["mappings"].is_object()) {
    throw Error(ErrorCode::MalformedDocument,
                "expected a top-level 'mappings' object");
  }
  const auto& mappings = doc["mappings"];

  MappingConfig config;
  if (mappings.contains("@context")) {
    if (!mappings["@context"].is_object()) {
      throw Error(ErrorCode::MalformedDocument, "'@context' must be an object");
    }
    for (const auto& [name, iri] : mappings["@context"].items()) {
      if (!iri.is_string()) {
        throw Error(ErrorCode::MalformedDocument,
                    "'@context' entries must be strings");
      }
      config.context.set(name, iri.get<std::string>());
    }
  }
  config.root = detail::parse_node(mappings, config.context, "");
  return config;
}

// ---------------------------------------------------------------------------
// Graph emission

struct MapResult {
  Graph graph;
  std::vector<std::string> minted;  // non-root subjects, emission order
};

namespace detail {

inline std::string require_iri(const std::string& value, const std::string& where) {
  if (!looks_absolute_iri(value)) {
    throw Error(ErrorCode::MalformedIri,
                "'" + value + "' produced at '" + where + "' is not an absolute IRI");
  }
  return value;
}

// Emits one node's property triples into `out`. Child nodes are pruned
// entirely when they would carry no data triple of their own.
inline void emit_node_properties(const NodeTemplate& node,
                                 const std::string& subject,
                                 const EvalContext& ctx,
                                 std::vector<Triple>& out,
                                 std::vector<std::string>& minted) {
  for (std::size_t i = 0; i < node.properties.size(); ++i) {
    const auto& [predicate, prop] = node.properties[i];
    const std::string& prop_path = node.property_paths[i];
    switch (prop.kind) {
      case PropertyTemplate::Kind::Literal: {
        auto values = expand(prop.value, ctx, prop_path + "/@value");
        if (!values) break;
        for (const std::string& v : *values) {
          out.push_back({subject, predicate, Term::literal(v, prop.datatype)});
        }
        break;
      }
      case PropertyTemplate::Kind::Iri: {
        auto values = expand(prop.value, ctx, prop_path + "/@id");
        if (!values) break;
        for (const std::string& v : *values) {
          out.push_back({subject, predicate,
                         Term::iri(require_iri(v, prop_path + "/@id"))});
        }
        break;
      }
      case PropertyTemplate::Kind::Node: {
        auto ids = expand(prop.node->id_template, ctx, prop_path + "/@id");
        if (!ids) break;
        if (ids->size() > 1) {
          throw Error(ErrorCode::MultiValueAmbiguity,
                      "node id at '" + prop_path + "' expanded to " +
                          std::to_string(ids->size()) + " values");
        }
        const std::string child_iri = require_iri(ids->front(), prop_path + "/@id");
        std::vector<Triple> child_triples;
        std::vector<std::string> child_minted;
        emit_node_properties(*prop.node, child_iri, ctx, child_triples,
                             child_minted);
        if (child_triples.empty()) break;  // prune data-less children
        out.push_back({subject, predicate, Term::iri(child_iri)});
        out.push_back({child_iri, std::string(rdf::kRdfType),
                       Term::iri(prop.node->rdf_type)});
        minted.push_back(child_iri);
        out.insert(out.end(), child_triples.begin(), child_triples.end());
        minted.insert(minted.end(), child_minted.begin(), child_minted.end());
        break;
      }
    }
  }
}

}  // namespace detail

/// Expands the whole mapping against one entry. The root always emits its
/// rdf:type triple; minted lists every non-root subject in emission order.
inline MapResult map_entry(const MappingConfig& config,
                           const CatalogueEntry& entry,
                           const EvalContext& ctx) {
  auto root_ids = expand(config.root->id_template, ctx, "@id");
  if (!root_ids) {
    throw Error(ErrorCode::MissingId, "root '@id' template produced no value");
  }
  if (root_ids->size() > 1) {
    throw Error(ErrorCode::MultiValueAmbiguity,
                "root '@id' template expanded to multiple values");
  }
  const std::string root_iri = detail::require_iri(root_ids->front(), "@id");

  std::vector<Triple> triples;
  triples.push_back({root_iri, std::string(rdf::kRdfType),
                     Term::iri(config.root->rdf_type)});
  std::vector<std::string> minted;
  detail::emit_node_properties(*config.root, root_iri, ctx, triples, minted);

  MapResult result;
  result.graph.set_prefix_hints(config.context);
  for (Triple& t : triples) result.graph.insert(std::move(t));
  // Deduplicate while keeping first-emission order.
  std::vector<std::string> unique;
  for (std::string& iri : minted) {
    if (std::find(unique.begin(), unique.end(), iri) == unique.end()) {
      unique.push_back(std::move(iri));
    }
  }
  result.minted = std::move(unique);
  return result;
}

inline MapResult map_entry(const MappingConfig& config,
                           const CatalogueEntry& entry,
                           UuidMode mode = UuidMode::Deterministic) {
  return map_entry(config, entry, EvalContext::for_entry(entry, mode));
}

/// Root IRI for an entry under this mapping (used by deletion sync).
inline std::string entry_iri(const MappingConfig& config,
                             const CatalogueEntry& entry) {
  EvalContext ctx = EvalContext::for_entry(entry);
  auto ids = expand(config.root->id_template, ctx, "@id");
  if (!ids || ids->size() != 1) {
    throw Error(ErrorCode::MissingId, "root '@id' template produced no value");
  }
  return detail::require_iri(ids->front(), "@id");
}

}  // namespace udc
