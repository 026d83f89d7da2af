#include "nomfix/text.hpp"

#include <cctype>
#include <cstring>
#include <optional>
#include <sstream>


namespace nomfix {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      message_(msg),
      line_(line),
      column_(column) {}

// ---------------------------------------------------------------- printing

std::string to_string(const Permutation& p) {
  if (p.empty_list()) return "id";
  std::string out;
  for (const auto& s : p.swappings()) out += "(" + s.left().str() + " " + s.right().str() + ")";
  return out;
}

std::string to_string(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::atom:
      return t.as_atom().str();
    case Term::Kind::abs:
      return "[" + t.binder().str() + "]" + to_string(t.body());
    case Term::Kind::tuple: {
      std::string out = "(";
      for (std::size_t i = 0; i < t.items().size(); ++i) {
        if (i) out += ", ";
        out += to_string(t.items()[i]);
      }
      return out + ")";
    }
    case Term::Kind::app:
      if (t.arg().is_tuple()) return t.symbol() + to_string(t.arg());
      return t.symbol() + "(" + to_string(t.arg()) + ")";
    case Term::Kind::susp:
      if (t.perm().acts_as_identity()) return t.var().name();
      return to_string(t.perm()) + "." + t.var().name();
  }
  return "";
}

std::string to_string(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [x, t] : s.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += x.name() + " -> " + to_string(t);
  }
  return out + "}";
}

std::string to_string(const FixpointContext& ctx) {
  std::string out = "{";
  bool first = true;
  for (const auto& c : ctx.constraints()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(c.perm) + " fix " + c.var.name();
  }
  return out + "}";
}

std::string to_string(const FreshnessContext& ctx) {
  std::string out = "{";
  bool first = true;
  for (const auto& c : ctx.constraints()) {
    if (!first) out += ", ";
    first = false;
    out += c.atom.str() + " fresh " + c.var.name();
  }
  return out + "}";
}

std::string to_string(const Constraint& c) {
  if (const auto* eq = std::get_if<EqConstraint>(&c)) {
    return to_string(eq->lhs) + " =? " + to_string(eq->rhs);
  }
  const auto& fx = std::get<FixConstraint>(c);
  return to_string(fx.perm) + " fix? " + to_string(fx.target);
}

std::string to_string(const Problem& pr) {
  std::string out = "{";
  for (std::size_t i = 0; i < pr.constraints.size(); ++i) {
    if (i) out += ", ";
    out += to_string(pr.constraints[i]);
  }
  return out + "}";
}

std::string to_string(const Solution& sol) {
  return to_string(sol.context) + " |- " + to_string(sol.subst);
}

std::string to_string(const ParsedConstraint& c) {
  switch (c.kind) {
    case ParsedConstraint::Kind::eq:
      return to_string(c.lhs) + " =? " + to_string(c.rhs);
    case ParsedConstraint::Kind::fix:
      return to_string(c.perm) + " fix? " + to_string(c.lhs);
    case ParsedConstraint::Kind::fresh:
      return c.atom.str() + " fresh? " + to_string(c.lhs);
  }
  return "";
}

std::string serialize_problem(const ProblemFile& file) {
  std::ostringstream out;
  for (const auto& [name, th] : file.signature.symbols()) {
    out << "sym " << name << " : " << theory_name(th) << " ;\n";
  }
  if (file.context_kind == ProblemFile::ContextKind::fix && !file.fix_context.empty()) {
    out << "context: ";
    bool first = true;
    for (const auto& c : file.fix_context.constraints()) {
      out << (first ? "" : ", ") << to_string(c.perm) << " fix " << c.var.name();
      first = false;
    }
    out << " ;\n";
  } else if (file.context_kind == ProblemFile::ContextKind::fresh && !file.fresh_context.empty()) {
    out << "context: ";
    bool first = true;
    for (const auto& c : file.fresh_context.constraints()) {
      out << (first ? "" : ", ") << c.atom.str() << " fresh " << c.var.name();
      first = false;
    }
    out << " ;\n";
  }
  for (std::size_t i = 0; i < file.constraints.size(); ++i) {
    out << to_string(file.constraints[i]) << (i + 1 < file.constraints.size() ? ",\n" : "\n");
  }
  return out.str();
}

// ---------------------------------------------------------------- lexing

namespace {

enum class Tok {
  ident,      // lowercase-initial identifier
  var,        // uppercase-initial identifier
  generated,  // #c3
  op,         // operator symbol such as +
  lparen,
  rparen,
  lbrack,
  rbrack,
  lbrace,
  rbrace,
  comma,
  dot,
  semi,
  colon,
  eq_query,     // =?
  fix_query,    // fix?
  fresh_query,  // fresh?
  arrow,        // ->
  turnstile,    // |-
  end,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

constexpr const char* kOpChars = "+*-/^&|<>~!@$";

bool is_op_char(char c) { return c != '\0' && std::strchr(kOpChars, c) != nullptr; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const int l = line;
    const int k = col;
    auto single = [&](Tok t) {
      out.push_back({t, std::string(1, c), l, k});
      advance(1);
    };
    switch (c) {
      case '(': single(Tok::lparen); continue;
      case ')': single(Tok::rparen); continue;
      case '[': single(Tok::lbrack); continue;
      case ']': single(Tok::rbrack); continue;
      case '{': single(Tok::lbrace); continue;
      case '}': single(Tok::rbrace); continue;
      case ',': single(Tok::comma); continue;
      case '.': single(Tok::dot); continue;
      case ';': single(Tok::semi); continue;
      case ':': single(Tok::colon); continue;
      default: break;
    }
    if (c == '=' ) {
      if (i + 1 < src.size() && src[i + 1] == '?') {
        out.push_back({Tok::eq_query, "=?", l, k});
        advance(2);
        continue;
      }
      throw ParseError("expected '=?'", l, k);
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::arrow, "->", l, k});
      advance(2);
      continue;
    }
    if (c == '|' && i + 1 < src.size() && src[i + 1] == '-') {
      out.push_back({Tok::turnstile, "|-", l, k});
      advance(2);
      continue;
    }
    if (c == '#') {
      std::size_t j = i + 1;
      while (j < src.size() && std::isalpha(static_cast<unsigned char>(src[j]))) ++j;
      std::size_t d = j;
      while (d < src.size() && std::isdigit(static_cast<unsigned char>(src[d]))) ++d;
      if (j == i + 1 || d == j) throw ParseError("malformed generated atom", l, k);
      out.push_back({Tok::generated, src.substr(i, d - i), l, k});
      advance(d - i);
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && is_ident_char(src[j])) ++j;
      std::string word = src.substr(i, j - i);
      if (j < src.size() && src[j] == '?' && (word == "fix" || word == "fresh")) {
        out.push_back({word == "fix" ? Tok::fix_query : Tok::fresh_query, word + "?", l, k});
        advance(j - i + 1);
        continue;
      }
      const bool upper = std::isupper(static_cast<unsigned char>(c));
      out.push_back({upper ? Tok::var : Tok::ident, word, l, k});
      advance(j - i);
      continue;
    }
    if (is_op_char(c)) {
      std::size_t j = i;
      while (j < src.size() && is_op_char(src[j])) {
        if (src[j] == '-' && j + 1 < src.size() && src[j + 1] == '>') break;
        ++j;
      }
      out.push_back({Tok::op, src.substr(i, j - i), l, k});
      advance(j - i);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", l, k);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

bool reserved(const std::string& w) {
  return w == "fix" || w == "fresh" || w == "sym" || w == "context" || w == "id" || w == "none";
}

// ---------------------------------------------------------------- parsing

class Parser {
 public:
  Parser(std::vector<Token> toks, Signature sig, ParseOptions opts)
      : toks_(std::move(toks)), sig_(std::move(sig)), opts_(opts) {}

  Signature& signature() { return sig_; }

  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at(Tok t, std::size_t k = 0) const { return peek(k).kind == t; }
  bool at_end() const { return at(Tok::end); }

  Token take() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }

  Token expect(Tok t, const char* what) {
    if (!at(t)) fail(std::string("expected ") + what);
    return take();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const auto& t = peek();
    throw ParseError(msg + (t.kind == Tok::end ? " at end of input" : " near '" + t.text + "'"),
                     t.line, t.column);
  }

  bool is_symbol_token(std::size_t k = 0) const {
    const auto& t = peek(k);
    if (t.kind == Tok::op) return true;
    if (t.kind != Tok::ident || reserved(t.text)) return false;
    if (sig_.declared(t.text)) return true;
    return sig_.permissive() && (at(Tok::lparen, k + 1) || at(Tok::lbrack, k + 1));
  }

  bool is_atom_token(std::size_t k = 0) const {
    const auto& t = peek(k);
    if (t.kind == Tok::generated) return true;
    return t.kind == Tok::ident && !reserved(t.text) && !sig_.declared(t.text);
  }

  bool at_swapping(std::size_t k = 0) const {
    return at(Tok::lparen, k) && is_atom_token(k + 1) && is_atom_token(k + 2) &&
           at(Tok::rparen, k + 3);
  }

  bool at_perm() const {
    return at_swapping() || (at(Tok::ident) && peek().text == "id");
  }

  Atom atom() {
    const Token t = peek();
    if (t.kind == Tok::generated) {
      if (!opts_.allow_generated) fail("generated atoms are not allowed in input");
      take();
      std::size_t d = 1;
      while (d < t.text.size() && std::isalpha(static_cast<unsigned char>(t.text[d]))) ++d;
      return Atom::generated(t.text.substr(0, d), std::stoull(t.text.substr(d)));
    }
    if (!is_atom_token()) fail("expected an atom");
    take();
    return Atom::user(t.text);
  }

  Var var() {
    const Token t = expect(Tok::var, "a variable");
    return Var(t.text);
  }

  Permutation perm() {
    if (at(Tok::ident) && peek().text == "id") {
      take();
      return Permutation::identity();
    }
    std::vector<Swapping> swaps;
    if (!at_swapping()) fail("expected a swapping '(a b)'");
    while (at_swapping()) {
      const Token open = take();
      Atom a = atom();
      Atom b = atom();
      take();
      if (a == b) {
        throw ParseError("swapping of an atom with itself: (" + a.str() + " " + b.str() + ")",
                         open.line, open.column);
      }
      swaps.emplace_back(a, b);
    }
    return Permutation(std::move(swaps));
  }

  Term term() {
    if (at(Tok::lbrack)) {
      take();
      Atom a = atom();
      expect(Tok::rbrack, "']'");
      return Term::abs(a, term());
    }
    if (is_symbol_token()) {
      const Token sym = take();
      if (!sig_.declared(sym.text) && !sig_.permissive()) {
        throw ParseError("undeclared function symbol '" + sym.text + "'", sym.line, sym.column);
      }
      Term arg = term();
      Term t = Term::app(sym.text, arg);
      try {
        check_well_formed(sig_, t);
      } catch (const SignatureError& e) {
        throw ParseError(e.what(), sym.line, sym.column);
      }
      return t;
    }
    return primary();
  }

  Term primary() {
    if (at_perm()) {
      Permutation p = perm();
      expect(Tok::dot, "'.' after permutation");
      return Term::susp(std::move(p), var());
    }
    if (at(Tok::var)) return Term::var(var());
    if (at(Tok::lparen)) {
      take();
      std::vector<Term> items{term()};
      while (at(Tok::comma)) {
        take();
        items.push_back(term());
      }
      expect(Tok::rparen, "')'");
      return Term::tuple(std::move(items));
    }
    if (is_atom_token()) return Term::atom(atom());
    fail("expected a term");
  }

  ParsedConstraint constraint() {
    const Token start = peek();
    ParsedConstraint c{ParsedConstraint::Kind::eq, Term::atom(Atom::user("_")),
                       Term::atom(Atom::user("_")), {}, {}, start.line, start.column};
    if (at_perm()) {
      // Either "pi fix? t" or a suspension starting an equation.
      const std::size_t save = pos_;
      Permutation p = perm();
      if (at(Tok::fix_query)) {
        take();
        c.kind = ParsedConstraint::Kind::fix;
        c.perm = std::move(p);
        c.lhs = term();
        return c;
      }
      pos_ = save;
    }
    if (is_atom_token() && at(Tok::fresh_query, 1)) {
      c.kind = ParsedConstraint::Kind::fresh;
      c.atom = atom();
      take();
      c.lhs = term();
      return c;
    }
    c.lhs = term();
    expect(Tok::eq_query, "'=?'");
    c.rhs = term();
    return c;
  }

  void declaration() {
    take();  // sym
    const Token name = peek();
    if (name.kind != Tok::ident && name.kind != Tok::op) fail("expected a symbol name");
    if (name.kind == Tok::ident && reserved(name.text)) fail("reserved word used as symbol");
    take();
    expect(Tok::colon, "':'");
    const Token th = peek();
    if (th.kind != Tok::ident && th.kind != Tok::var) fail("expected a theory");
    take();
    const auto theory = parse_theory(th.text);
    if (!theory) throw ParseError("unknown theory '" + th.text + "'", th.line, th.column);
    try {
      sig_.declare(name.text, *theory);
    } catch (const SignatureError& e) {
      throw ParseError(e.what(), name.line, name.column);
    }
    expect(Tok::semi, "';'");
  }

  void context(ProblemFile& file) {
    const Token kw = take();  // context
    expect(Tok::colon, "':'");
    if (file.context_kind != ProblemFile::ContextKind::none) {
      throw ParseError("duplicate context section", kw.line, kw.column);
    }
    ProblemFile::ContextKind kind = ProblemFile::ContextKind::none;
    auto set_kind = [&](ProblemFile::ContextKind k, const Token& at_tok) {
      if (kind != ProblemFile::ContextKind::none && kind != k) {
        throw ParseError("context mixes fixed-point and freshness constraints", at_tok.line,
                         at_tok.column);
      }
      kind = k;
    };
    while (!at(Tok::semi)) {
      const Token start = peek();
      if (at_perm()) {
        Permutation p = perm();
        if (!(at(Tok::ident) && peek().text == "fix")) fail("expected 'fix'");
        take();
        set_kind(ProblemFile::ContextKind::fix, start);
        file.fix_context.add(p, var());
      } else if (is_atom_token()) {
        Atom a = atom();
        if (!(at(Tok::ident) && peek().text == "fresh")) fail("expected 'fresh'");
        take();
        set_kind(ProblemFile::ContextKind::fresh, start);
        file.fresh_context.add(a, var());
      } else {
        fail("expected a context constraint");
      }
      if (at(Tok::comma)) take();
      else if (!at(Tok::semi)) fail("expected ',' or ';'");
    }
    take();
    file.context_kind = kind == ProblemFile::ContextKind::none ? ProblemFile::ContextKind::fix : kind;
  }

  ProblemFile problem() {
    ProblemFile file;
    while (!at_end()) {
      if (at(Tok::ident) && peek().text == "sym") {
        declaration();
        continue;
      }
      if (at(Tok::ident) && peek().text == "context" && at(Tok::colon, 1)) {
        context(file);
        continue;
      }
      file.constraints.push_back(constraint());
      if (at(Tok::comma) || at(Tok::semi)) {
        take();
      } else if (!at_end() && !(at(Tok::ident) && (peek().text == "sym" || peek().text == "context"))) {
        fail("expected ',' between constraints");
      }
    }
    file.signature = sig_;
    return file;
  }

  FixpointContext fix_context_braced() {
    expect(Tok::lbrace, "'{'");
    FixpointContext ctx;
    while (!at(Tok::rbrace)) {
      Permutation p = perm();
      if (!(at(Tok::ident) && peek().text == "fix")) fail("expected 'fix'");
      take();
      ctx.add(p, var());
      if (at(Tok::comma)) take();
      else if (!at(Tok::rbrace)) fail("expected ',' or '}'");
    }
    take();
    return ctx;
  }

  Substitution subst_braced() {
    expect(Tok::lbrace, "'{'");
    Substitution s;
    while (!at(Tok::rbrace)) {
      Var x = var();
      expect(Tok::arrow, "'->'");
      s.bind(x, term());
      if (at(Tok::comma)) take();
      else if (!at(Tok::rbrace)) fail("expected ',' or '}'");
    }
    take();
    return s;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Signature sig_;
  ParseOptions opts_;
};

}  // namespace

Term parse_term(const std::string& text, const Signature& sig, const ParseOptions& opts) {
  Parser p(lex(text), sig, opts);
  Term t = p.term();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return t;
}

Permutation parse_perm(const std::string& text, const ParseOptions& opts) {
  Parser p(lex(text), Signature(), opts);
  Permutation perm = p.perm();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return perm;
}

ProblemFile parse_problem(const std::string& text, const Signature& base, const ParseOptions& opts) {
  Parser p(lex(text), base, opts);
  return p.problem();
}

Signature parse_signature(const std::string& text) {
  Parser p(lex(text), Signature(), {});
  while (!p.at_end()) {
    if (!(p.at(Tok::ident) && p.peek().text == "sym")) p.fail("expected 'sym'");
    p.declaration();
  }
  return p.signature();
}

Solution parse_solution(const std::string& text, const Signature& sig, const ParseOptions& opts) {
  Parser p(lex(text), sig, opts);
  Solution sol;
  sol.context = p.fix_context_braced();
  p.expect(Tok::turnstile, "'|-'");
  sol.subst = p.subst_braced();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return sol;
}

}  // namespace nomfix
