#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "udc/model.hpp"

namespace udc {

namespace rdf {

inline constexpr std::string_view kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfNamespace =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kXsdString =
    "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kLangString =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";

}  // namespace rdf

/// An IRI or a literal. Blank nodes are never produced by this engine.
struct Term {
  enum class Kind { Iri, Literal };

  Kind kind = Kind::Iri;
  std::string value;              // IRI or lexical form
  std::string datatype;           // literals only; absolute IRI
  std::optional<std::string> lang;

  static Term iri(std::string v) { return Term{Kind::Iri, std::move(v), "", {}}; }

  static Term literal(std::string lexical,
                      std::string datatype = std::string(rdf::kXsdString)) {
    return Term{Kind::Literal, std::move(lexical), std::move(datatype), {}};
  }

  static Term lang_literal(std::string lexical, std::string tag) {
    return Term{Kind::Literal, std::move(lexical), std::string(rdf::kLangString),
                std::move(tag)};
  }

  bool is_iri() const { return kind == Kind::Iri; }

  auto operator<=>(const Term&) const = default;
};

struct Triple {
  std::string subject;    // absolute IRI
  std::string predicate;  // absolute IRI
  Term object;

  auto operator<=>(const Triple&) const = default;
};

/// Duplicate-free triple set with optional prefix hints for Turtle output.
class Graph {
 public:
  bool insert(Triple t) { return triples_.insert(std::move(t)).second; }

  bool insert(std::string s, std::string p, Term o) {
    return insert(Triple{std::move(s), std::move(p), std::move(o)});
  }

  bool contains(const Triple& t) const { return triples_.count(t) > 0; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  auto begin() const { return triples_.begin(); }
  auto end() const { return triples_.end(); }

  const PrefixMap& prefix_hints() const { return hints_; }
  void set_prefix_hints(PrefixMap hints) { hints_ = std::move(hints); }

  bool operator==(const Graph& other) const { return triples_ == other.triples_; }

 private:
  std::set<Triple> triples_;
  PrefixMap hints_;
};

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

// N-Triples string escaping: the five named escapes, then \uXXXX for other
// control characters and all non-ASCII (output stays pure ASCII).
inline void append_escaped(std::string& out, std::string_view s) {
  static const char* hex = "0123456789ABCDEF";
  std::size_t i = 0;
  auto append_u16 = [&](std::uint32_t cp) {
    out += "\\u";
    out += hex[(cp >> 12) & 0xF];
    out += hex[(cp >> 8) & 0xF];
    out += hex[(cp >> 4) & 0xF];
    out += hex[cp & 0xF];
  };
  while (i < s.size()) {
    unsigned char c = s[i];
    if (c == '"') { out += "\\\""; ++i; continue; }
    if (c == '\\') { out += "\\\\"; ++i; continue; }
    if (c == '\n') { out += "\\n"; ++i; continue; }
    if (c == '\r') { out += "\\r"; ++i; continue; }
    if (c == '\t') { out += "\\t"; ++i; continue; }
    if (c < 0x20 || c == 0x7F) { append_u16(c); ++i; continue; }
    if (c < 0x80) { out += static_cast<char>(c); ++i; continue; }
    // Decode UTF-8 to a code point.
    std::uint32_t cp = 0;
    int extra = 0;
    if ((c & 0xE0) == 0xC0) { cp = c & 0x1F; extra = 1; }
    else if ((c & 0xF0) == 0xE0) { cp = c & 0x0F; extra = 2; }
    else if ((c & 0xF8) == 0xF0) { cp = c & 0x07; extra = 3; }
    else { append_u16(0xFFFD); ++i; continue; }
    if (i + extra >= s.size()) { append_u16(0xFFFD); ++i; continue; }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      unsigned char cc = s[i + k];
      if ((cc & 0xC0) != 0x80) { ok = false; break; }
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (!ok) { append_u16(0xFFFD); ++i; continue; }
    i += extra + 1;
    if (cp <= 0xFFFF) {
      append_u16(cp);
    } else {
      out += "\\U";
      for (int shift = 28; shift >= 0; shift -= 4) {
        out += hex[(cp >> shift) & 0xF];
      }
    }
  }
}

inline void append_iri(std::string& out, std::string_view iri) {
  out += '<';
  for (char c : iri) {
    unsigned char uc = c;
    if (uc <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' ||
        c == '}' || c == '|' || c == '^' || c == '`' || c == '\\') {
      static const char* hex = "0123456789ABCDEF";
      out += "\\u00";
      out += hex[(uc >> 4) & 0xF];
      out += hex[uc & 0xF];
    } else {
      out += c;
    }
  }
  out += '>';
}

inline std::string term_ntriples(const Term& t) {
  std::string out;
  if (t.is_iri()) {
    append_iri(out, t.value);
    return out;
  }
  out += '"';
  append_escaped(out, t.value);
  out += '"';
  if (t.lang) {
    out += '@';
    out += *t.lang;
  } else {
    out += "^^";
    append_iri(out, t.datatype);
  }
  return out;
}

inline std::string triple_ntriples(const Triple& t) {
  std::string line;
  append_iri(line, t.subject);
  line += ' ';
  append_iri(line, t.predicate);
  line += ' ';
  line += term_ntriples(t.object);
  line += " .";
  return line;
}

inline std::vector<std::string> sorted_ntriples_lines(const Graph& g) {
  std::vector<std::string> lines;
  lines.reserve(g.size());
  for (const Triple& t : g) {
    lines.push_back(triple_ntriples(t));
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

}  // namespace detail

/// Canonical N-Triples: one line per triple, bytewise-sorted, trailing newline.
inline std::string serialize_ntriples(const Graph& g) {
  std::string out;
  for (const std::string& line : detail::sorted_ntriples_lines(g)) {
    out += line;
    out += '\n';
  }
  return out;
}

namespace detail {

inline bool turtle_local_ok(std::string_view local) {
  if (local.empty()) return false;
  unsigned char first = local[0];
  if (!std::isalpha(first) && first != '_') return false;
  return std::all_of(local.begin(), local.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-';
  });
}

// CURIE form when a namespace matches and the local part is unproblematic.
inline std::string turtle_iri(const std::string& iri, const PrefixMap& prefixes,
                              std::set<std::string>& used) {
  for (const auto& [name, ns] : prefixes.entries()) {
    if (iri.size() > ns.size() && iri.compare(0, ns.size(), ns) == 0) {
      std::string_view local(iri.data() + ns.size(), iri.size() - ns.size());
      if (turtle_local_ok(local)) {
        used.insert(name);
        return name + ":" + std::string(local);
      }
    }
  }
  std::string out;
  append_iri(out, iri);
  return out;
}

inline std::string turtle_term(const Term& t, const PrefixMap& prefixes,
                               std::set<std::string>& used) {
  if (t.is_iri()) return turtle_iri(t.value, prefixes, used);
  std::string out = "\"";
  append_escaped(out, t.value);
  out += '"';
  if (t.lang) {
    out += '@';
    out += *t.lang;
  } else if (t.datatype != rdf::kXsdString) {
    out += "^^";
    out += turtle_iri(t.datatype, prefixes, used);
  }
  return out;
}

}  // namespace detail

/// Turtle with @prefix headers for the namespaces actually used, subjects and
/// predicates sorted, ';'/',' abbreviations. rdf:type prints as 'a'.
inline std::string serialize_turtle(const Graph& g, const PrefixMap& prefixes) {
  if (g.empty()) return "";

  std::set<std::string> used;
  // subject -> predicate -> serialized objects (sorted)
  std::map<std::string, std::map<std::string, std::set<std::string>>> by_subject;
  for (const Triple& t : g) {
    by_subject[t.subject][t.predicate].insert(
        detail::turtle_term(t.object, prefixes, used));
  }

  std::string body;
  for (const auto& [subject, preds] : by_subject) {
    body += detail::turtle_iri(subject, prefixes, used);
    bool first_pred = true;
    for (const auto& [pred, objects] : preds) {
      body += first_pred ? " " : " ;\n    ";
      first_pred = false;
      body += pred == rdf::kRdfType ? "a"
                                    : detail::turtle_iri(pred, prefixes, used);
      body += ' ';
      bool first_obj = true;
      for (const std::string& obj : objects) {
        if (!first_obj) body += ", ";
        first_obj = false;
        body += obj;
      }
    }
    body += " .\n";
  }

  std::string out;
  for (const std::string& name : used) {
    out += "@prefix " + name + ": <" + *prefixes.find(name) + "> .\n";
  }
  if (!used.empty()) out += '\n';
  out += body;
  return out;
}

// ---------------------------------------------------------------------------
// SPARQL 1.1 Update text

/// INSERT DATA with a canonical N-Triples body.
inline std::string sparql_insert(const Graph& g) {
  std::string out = "INSERT DATA {\n";
  for (const std::string& line : detail::sorted_ntriples_lines(g)) {
    out += line;
    out += '\n';
  }
  out += "}";
  return out;
}

/// One DELETE WHERE per subject, in the given order, ';'-separated.
inline std::string sparql_delete_subjects(const std::vector<std::string>& subjects) {
  std::string out;
  for (const std::string& s : subjects) {
    if (!out.empty()) out += " ;\n";
    out += "DELETE WHERE { ";
    detail::append_iri(out, s);
    out += " ?p ?o . }";
  }
  return out;
}

/// Deletes the entry's previous triples (root and previously minted nodes),
/// then inserts the new graph. An empty graph emits only the delete part.
inline std::string sync_script(const std::string& entry_iri,
                               const std::vector<std::string>& prev_minted,
                               const Graph& new_graph) {
  std::vector<std::string> subjects;
  subjects.push_back(entry_iri);
  for (const std::string& iri : prev_minted) {
    if (std::find(subjects.begin(), subjects.end(), iri) == subjects.end()) {
      subjects.push_back(iri);
    }
  }
  std::string out = sparql_delete_subjects(subjects);
  if (!new_graph.empty()) {
    if (!out.empty()) out += " ;\n";
    out += sparql_insert(new_graph);
  }
  return out;
}

}  // namespace udc
