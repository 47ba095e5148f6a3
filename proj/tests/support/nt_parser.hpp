// Test-only N-Triples reader, written against the W3C grammar and kept
// independent of the library's serializer so round-trips are an honest check.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "udc/rdf.hpp"

namespace udc_test {

class NtParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace nt_detail {

inline void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Scanner {
 public:
  explicit Scanner(std::string_view line) : s_(line) {}

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool at_end() const { return pos_ >= s_.size(); }

  char peek() const {
    if (at_end()) throw NtParseError("unexpected end of line");
    return s_[pos_];
  }

  char take() {
    char c = peek();
    ++pos_;
    return c;
  }

  void expect(char c) {
    if (take() != c) throw NtParseError(std::string("expected '") + c + "'");
  }

  std::uint32_t take_hex(int digits) {
    std::uint32_t v = 0;
    for (int i = 0; i < digits; ++i) {
      char c = take();
      v <<= 4;
      if (c >= '0' && c <= '9') v |= static_cast<std::uint32_t>(c - '0');
      else if (c >= 'a' && c <= 'f') v |= static_cast<std::uint32_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') v |= static_cast<std::uint32_t>(c - 'A' + 10);
      else throw NtParseError("bad hex digit");
    }
    return v;
  }

  std::string take_iri() {
    expect('<');
    std::string out;
    while (true) {
      char c = take();
      if (c == '>') break;
      if (c == '\\') {
        char esc = take();
        if (esc == 'u') append_utf8(out, take_hex(4));
        else if (esc == 'U') append_utf8(out, take_hex(8));
        else throw NtParseError("bad IRI escape");
        continue;
      }
      if (static_cast<unsigned char>(c) <= 0x20) {
        throw NtParseError("raw control character in IRI");
      }
      out += c;
    }
    if (out.find(':') == std::string::npos) {
      throw NtParseError("IRI is not absolute: " + out);
    }
    return out;
  }

  std::string take_string() {
    expect('"');
    std::string out;
    while (true) {
      char c = take();
      if (c == '"') break;
      if (c == '\\') {
        char esc = take();
        switch (esc) {
          case 't': out += '\t'; break;
          case 'b': out += '\b'; break;
          case 'n': out += '\n'; break;
          case 'r': out += '\r'; break;
          case 'f': out += '\f'; break;
          case '"': out += '"'; break;
          case '\'': out += '\''; break;
          case '\\': out += '\\'; break;
          case 'u': append_utf8(out, take_hex(4)); break;
          case 'U': append_utf8(out, take_hex(8)); break;
          default: throw NtParseError("bad string escape");
        }
        continue;
      }
      if (c == '\n' || c == '\r') throw NtParseError("raw newline in literal");
      out += c;
    }
    return out;
  }

  std::string take_lang_tag() {
    std::string out;
    while (!at_end()) {
      char c = s_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '-') {
        out += c;
        ++pos_;
      } else {
        break;
      }
    }
    if (out.empty()) throw NtParseError("empty language tag");
    return out;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace nt_detail

/// Parses one N-Triples statement line (without the trailing newline).
inline udc::Triple parse_ntriples_line(std::string_view line) {
  nt_detail::Scanner sc(line);
  sc.skip_ws();
  udc::Triple t;
  t.subject = sc.take_iri();
  sc.skip_ws();
  t.predicate = sc.take_iri();
  sc.skip_ws();
  if (sc.peek() == '<') {
    t.object = udc::Term::iri(sc.take_iri());
  } else {
    std::string lexical = sc.take_string();
    if (!sc.at_end() && sc.peek() == '^') {
      sc.expect('^');
      sc.expect('^');
      t.object = udc::Term::literal(std::move(lexical), sc.take_iri());
    } else if (!sc.at_end() && sc.peek() == '@') {
      sc.take();
      t.object = udc::Term::lang_literal(std::move(lexical), sc.take_lang_tag());
    } else {
      // RDF 1.1: a plain literal is an xsd:string literal.
      t.object = udc::Term::literal(std::move(lexical));
    }
  }
  sc.skip_ws();
  sc.expect('.');
  sc.skip_ws();
  if (!sc.at_end()) throw NtParseError("trailing content after '.'");
  return t;
}

/// Parses a whole N-Triples document into a triple set.
inline std::set<udc::Triple> parse_ntriples(std::string_view doc) {
  std::set<udc::Triple> out;
  std::size_t start = 0;
  while (start < doc.size()) {
    std::size_t nl = doc.find('\n', start);
    std::string_view line = doc.substr(
        start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? doc.size() : nl + 1;
    // Skip blank lines and comments.
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    out.insert(parse_ntriples_line(line));
  }
  return out;
}

}  // namespace udc_test
