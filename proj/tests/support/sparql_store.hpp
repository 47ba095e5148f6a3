// Test-only in-memory triple store that interprets exactly the update
// statements the engine emits: INSERT DATA and per-subject DELETE WHERE.
#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "support/nt_parser.hpp"
#include "udc/rdf.hpp"

namespace udc_test {

class ScriptedTripleStore {
 public:
  void apply(std::string_view script) {
    std::size_t pos = 0;
    while (true) {
      pos = script.find_first_not_of(" \t\r\n;", pos);
      if (pos == std::string_view::npos) break;
      if (script.compare(pos, 14, "DELETE WHERE {") == 0) {
        std::size_t close = script.find('}', pos);
        if (close == std::string_view::npos) {
          throw std::runtime_error("unterminated DELETE WHERE");
        }
        apply_delete(script.substr(pos + 14, close - pos - 14));
        pos = close + 1;
      } else if (script.compare(pos, 13, "INSERT DATA {") == 0) {
        std::size_t close = script.find("\n}", pos);
        std::size_t body_start = pos + 13;
        std::string_view body;
        if (close == std::string_view::npos) {
          // Empty insert is emitted as "INSERT DATA {\n}".
          close = script.find('}', pos);
          if (close == std::string_view::npos) {
            throw std::runtime_error("unterminated INSERT DATA");
          }
          body = script.substr(body_start, close - body_start);
          pos = close + 1;
        } else {
          body = script.substr(body_start, close - body_start);
          pos = close + 2;
        }
        for (const udc::Triple& t : parse_ntriples(body)) {
          triples_.insert(t);
        }
      } else {
        throw std::runtime_error("unrecognized update statement at offset " +
                                 std::to_string(pos));
      }
    }
  }

  const std::set<udc::Triple>& triples() const { return triples_; }

  std::size_t count_subject(std::string_view subject) const {
    std::size_t n = 0;
    for (const udc::Triple& t : triples_) {
      if (t.subject == subject) ++n;
    }
    return n;
  }

 private:
  void apply_delete(std::string_view pattern) {
    nt_detail::Scanner sc(pattern);
    sc.skip_ws();
    std::string subject = sc.take_iri();
    // Remaining pattern must be the wildcard "?p ?o ." shape.
    std::erase_if(triples_, [&](const udc::Triple& t) {
      return t.subject == subject;
    });
  }

  std::set<udc::Triple> triples_;
};

}  // namespace udc_test
