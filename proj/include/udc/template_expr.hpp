#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "udc/errors.hpp"

namespace udc {

// Template mini-language:
//   template := (text | "{" expr "}")*
//   expr     := call | path
//   call     := ident "(" [expr ("," expr)*] ")"
//   path     := ident ("." ident)*
// "{{" and "}}" escape literal braces.

struct Expr {
  enum class Kind { Path, Call };

  Kind kind = Kind::Path;
  std::vector<std::string> path;  // Path
  std::string call_name;          // Call
  std::vector<Expr> args;         // Call

  bool operator==(const Expr&) const = default;
};

struct TemplateSegment {
  bool is_placeholder = false;
  std::string text;  // literal segments
  Expr expr;         // placeholder segments

  bool operator==(const TemplateSegment&) const = default;
};

struct TemplateExpr {
  std::string source;
  std::vector<TemplateSegment> segments;

  bool has_placeholder() const {
    for (const auto& seg : segments) {
      if (seg.is_placeholder) return true;
    }
    return false;
  }

  bool operator==(const TemplateExpr&) const = default;
};

namespace detail {

class TemplateParser {
 public:
  explicit TemplateParser(std::string_view src) : src_(src) {}

  TemplateExpr parse() {
    TemplateExpr tpl;
    tpl.source = std::string(src_);
    std::string literal;
    auto flush = [&] {
      if (!literal.empty()) {
        tpl.segments.push_back({false, std::move(literal), {}});
        literal.clear();
      }
    };
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '{') {
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '{') {
          literal += '{';
          pos_ += 2;
          continue;
        }
        ++pos_;
        flush();
        TemplateSegment seg;
        seg.is_placeholder = true;
        seg.expr = parse_expr();
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != '}') {
          fail("expected '}' to close the placeholder");
        }
        ++pos_;
        tpl.segments.push_back(std::move(seg));
        continue;
      }
      if (c == '}') {
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '}') {
          literal += '}';
          pos_ += 2;
          continue;
        }
        fail("unescaped '}' outside a placeholder");
      }
      literal += c;
      ++pos_;
    }
    flush();
    return tpl;
  }

 private:
  [[noreturn]] void fail(const std::string& reason) const {
    throw Error(ErrorCode::TemplateSyntax,
                "position " + std::to_string(pos_) + ": " + reason);
  }

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  std::string parse_ident() {
    skip_ws();
    if (pos_ >= src_.size()) fail("expected identifier");
    const unsigned char first = src_[pos_];
    if (!std::isalpha(first) && first != '_') fail("expected identifier");
    std::string out;
    while (pos_ < src_.size()) {
      const unsigned char c = src_[pos_];
      if (std::isalnum(c) || c == '_') {
        out += static_cast<char>(c);
        ++pos_;
      } else {
        break;
      }
    }
    return out;
  }

  Expr parse_expr() {
    Expr expr;
    std::string ident = parse_ident();
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '(') {
      ++pos_;
      expr.kind = Expr::Kind::Call;
      expr.call_name = std::move(ident);
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == ')') {
        ++pos_;
        return expr;
      }
      while (true) {
        expr.args.push_back(parse_expr());
        skip_ws();
        if (pos_ >= src_.size()) fail("expected ')' to close the call");
        if (src_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (src_[pos_] == ')') {
          ++pos_;
          return expr;
        }
        fail("expected ',' or ')'");
      }
    }
    expr.kind = Expr::Kind::Path;
    expr.path.push_back(std::move(ident));
    while (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      expr.path.push_back(parse_ident());
    }
    return expr;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline TemplateExpr parse_template(std::string_view source) {
  return detail::TemplateParser(source).parse();
}

}  // namespace udc
