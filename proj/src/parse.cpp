#include "lelongkit/parse.hpp"

#include <cctype>
#include <sstream>

namespace lk {

namespace {

enum class Tok { End, Number, Ident, Plus, Minus, Star, Slash, Caret,
                 LParen, RParen };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' ||
            text_[pos_] == '\n')) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    cur_.line = line_;
    cur_.col = col_;
    cur_.text.clear();
    if (pos_ >= text_.size()) {
      cur_.kind = Tok::End;
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur_.kind = Tok::Number;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        cur_.text += text_[pos_++];
        ++col_;
      }
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      cur_.kind = Tok::Ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        cur_.text += text_[pos_++];
        ++col_;
      }
      return;
    }
    switch (c) {
      case '+': cur_.kind = Tok::Plus; break;
      case '-': cur_.kind = Tok::Minus; break;
      case '*': cur_.kind = Tok::Star; break;
      case '/': cur_.kind = Tok::Slash; break;
      case '^': cur_.kind = Tok::Caret; break;
      case '(': cur_.kind = Tok::LParen; break;
      case ')': cur_.kind = Tok::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         line_, col_);
    }
    cur_.text = c;
    ++pos_;
    ++col_;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token cur_{};
};

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars)
      : lex_(text), vars_(vars) {}

  MultiPoly run() {
    MultiPoly p = expr();
    const Token& t = lex_.peek();
    if (t.kind != Tok::End)
      throw ParseError("unexpected token '" + t.text + "'", t.line, t.col);
    return p;
  }

 private:
  MultiPoly expr() {
    MultiPoly p = term();
    while (true) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Plus) {
        lex_.take();
        p = p + term();
      } else if (k == Tok::Minus) {
        lex_.take();
        p = p - term();
      } else {
        return p;
      }
    }
  }

  MultiPoly term() {
    MultiPoly p = factor();
    while (true) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Star) {
        lex_.take();
        p = p * factor();
      } else if (k == Tok::Slash) {
        Token slash = lex_.take();
        MultiPoly d = factor();
        if (!d.is_constant())
          throw ParseError("division by a non-constant expression", slash.line,
                           slash.col);
        CRat c = d.constant_value();
        if (c.is_zero())
          throw ParseError("division by zero", slash.line, slash.col);
        p = p.scale(c.inv());
      } else {
        return p;
      }
    }
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      Token e = lex_.peek();
      if (e.kind != Tok::Number)
        throw ParseError("exponent must be a natural number literal", e.line,
                         e.col);
      lex_.take();
      long n;
      try {
        n = std::stol(e.text);
      } catch (const std::exception&) {
        throw ParseError("exponent out of range", e.line, e.col);
      }
      MultiPoly r = MultiPoly::constant(arity(), crat_one(), vars_);
      MultiPoly sq = b;
      // Binary powering keeps huge exponents from degenerating.
      while (n > 0) {
        if (n & 1) r = r * sq;
        n >>= 1;
        if (n > 0) sq = sq * sq;
      }
      return r;
    }
    return b;
  }

  MultiPoly base() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Tok::Number: {
        lex_.take();
        return MultiPoly::constant(arity(), CRat(rat_from_string(t.text)),
                                   vars_);
      }
      case Tok::Ident: {
        lex_.take();
        for (size_t v = 0; v < vars_.size(); ++v)
          if (vars_[v] == t.text)
            return MultiPoly::variable(arity(), static_cast<int>(v), vars_);
        if (t.text == "i")
          return MultiPoly::constant(arity(), crat_i(), vars_);
        throw ParseError("undeclared identifier '" + t.text + "'", t.line,
                         t.col);
      }
      case Tok::LParen: {
        lex_.take();
        MultiPoly p = expr();
        Token close = lex_.peek();
        if (close.kind != Tok::RParen)
          throw ParseError("expected ')'", close.line, close.col);
        lex_.take();
        return p;
      }
      case Tok::Minus: {
        lex_.take();
        return -factor();
      }
      default:
        throw ParseError("expected a number, variable, or '('", t.line, t.col);
    }
  }

  int arity() const { return static_cast<int>(vars_.size()); }

  Lexer lex_;
  const std::vector<std::string>& vars_;
};

// Renders one term; sign is returned separately so the caller can join with
// " + " / " - ".
std::pair<bool, std::string> term_string(const Expo& e, const CRat& c,
                                         const std::vector<std::string>& names,
                                         const std::vector<int>& perm) {
  std::string mono;
  for (int v : perm) {
    if (e[v] == 0) continue;
    if (!mono.empty()) mono += '*';
    mono += names[v];
    if (e[v] != 1) mono += '^' + std::to_string(e[v]);
  }

  bool neg = false;
  std::string coef;
  if (c.is_real()) {
    neg = c.re < 0;
    Rat mag = rat_abs(c.re);
    if (mag != 1 || mono.empty()) coef = rat_to_string(mag);
  } else if (c.re == 0) {
    neg = c.im < 0;
    Rat mag = rat_abs(c.im);
    coef = (mag == 1) ? "i" : rat_to_string(mag) + "*i";
  } else {
    coef = "(" + crat_to_string(c) + ")";
  }

  std::string body = coef;
  if (!mono.empty()) {
    if (!body.empty()) body += '*';
    body += mono;
  }
  return {neg, body};
}

}  // namespace

MultiPoly parse_poly(const std::string& text,
                     const std::vector<std::string>& declared_vars) {
  return Parser(text, declared_vars).run();
}

std::string serialize_poly(const MultiPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) return "0";
  std::vector<std::string> names = p.names();
  if (names.empty()) names = default_names(p.arity());
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.sorted_terms(order)) {
    auto [neg, body] = term_string(e, c, names, order.perm);
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += body;
  }
  return out;
}

std::string serialize_poly(const MultiPoly& p) {
  return serialize_poly(p, MonomialOrder::paper(p.arity()));
}

std::vector<std::string> split_var_list(const std::string& csv) {
  std::vector<std::string> vars;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      vars.push_back(cur);
      cur.clear();
    }
  };
  for (char c : csv) {
    if (c == ',') {
      flush();
    } else if (c == ' ' || c == '\t') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  for (const auto& v : vars) {
    if (!(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw InputError("bad variable name '" + v + "'");
    for (char c : v)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw InputError("bad variable name '" + v + "'");
  }
  for (size_t a = 0; a < vars.size(); ++a)
    for (size_t b = a + 1; b < vars.size(); ++b)
      if (vars[a] == vars[b])
        throw InputError("duplicate variable '" + vars[a] + "'");
  if (vars.empty()) throw InputError("empty variable list");
  return vars;
}

PolySystem parse_system(const std::string& text) {
  PolySystem sys;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_vars = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (!have_vars) {
      if (line.rfind("vars:", 0) != 0)
        throw ParseError("expected 'vars:' declaration", lineno, 1);
      sys.vars = split_var_list(line.substr(5));
      have_vars = true;
      continue;
    }
    sys.polys.push_back(parse_poly(line, sys.vars));
  }
  if (!have_vars) throw InputError("system file has no 'vars:' declaration");
  return sys;
}

}  // namespace lk
