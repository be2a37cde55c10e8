#include "mcg/dsl.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include "mcg/errors.hpp"

namespace mcg {

const PositiveWord& Inputs::word(const std::string& name) const {
  auto it = words.find(name);
  if (it == words.end()) throw Error("unknown word '" + name + "'");
  return it->second;
}

const DerivationScript& Inputs::script(const std::string& name) const {
  auto it = scripts.find(name);
  if (it == scripts.end()) throw Error("unknown script '" + name + "'");
  return it->second;
}

namespace {

enum class Tok { Name, Int, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t col = 0;  // 1-based
};

struct SourceLine {
  std::string file;
  std::size_t number = 0;
  bool indented = false;
  std::vector<Token> tokens;
};

bool name_start(char c) { return std::isalpha((unsigned char)c) || c == '_'; }
bool name_char(char c) {
  return std::isalnum((unsigned char)c) || c == '_' || c == '\'';
}

// Phase one: split into token lines.
std::vector<SourceLine> lex(const std::string& text, const std::string& file) {
  std::vector<SourceLine> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    SourceLine line{file, number, false, {}};
    line.indented = !raw.empty() && (raw[0] == ' ' || raw[0] == '\t');
    std::size_t i = 0;
    while (i < raw.size()) {
      const char c = raw[i];
      if (c == '#') break;
      if (c == ' ' || c == '\t') {
        ++i;
        continue;
      }
      Token t;
      t.col = i + 1;
      if (name_start(c)) {
        std::size_t j = i;
        while (j < raw.size() && name_char(raw[j])) ++j;
        t.kind = Tok::Name;
        t.text = raw.substr(i, j - i);
        i = j;
      } else if (std::isdigit((unsigned char)c)) {
        std::size_t j = i;
        while (j < raw.size() && std::isdigit((unsigned char)raw[j])) ++j;
        t.kind = Tok::Int;
        t.text = raw.substr(i, j - i);
        i = j;
      } else if ((c == '=' || c == '<') && i + 1 < raw.size() &&
                 raw[i + 1] == (c == '=' ? '>' : '=')) {
        t.kind = Tok::Sym;
        t.text = raw.substr(i, 2);
        i += 2;
      } else if (std::string("=:[]()^+-*@,").find(c) != std::string::npos) {
        t.kind = Tok::Sym;
        t.text = std::string(1, c);
        ++i;
      } else {
        throw ParseError(file, number, i + 1, std::string(1, c),
                         "unexpected character");
      }
      line.tokens.push_back(std::move(t));
    }
    if (!line.tokens.empty()) {
      Token end;
      end.col = raw.size() + 1;
      line.tokens.push_back(end);
      out.push_back(std::move(line));
    }
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(const SourceLine& line) : line_(line) {}

  const Token& peek() const { return line_.tokens[pos_]; }
  const Token& next() {
    const Token& t = line_.tokens[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_sym(const char* s) const {
    return peek().kind == Tok::Sym && peek().text == s;
  }
  bool accept(const char* s) {
    if (!is_sym(s)) return false;
    next();
    return true;
  }
  void expect_sym(const char* s) {
    if (!accept(s)) fail(peek(), std::string("expected '") + s + "'");
  }
  const Token& expect_name(const char* what) {
    if (peek().kind != Tok::Name) fail(peek(), std::string("expected ") + what);
    return next();
  }
  void expect_keyword(const char* kw) {
    if (peek().kind != Tok::Name || peek().text != kw)
      fail(peek(), std::string("expected '") + kw + "'");
    next();
  }
  long expect_int(bool allow_sign) {
    const Token& start = peek();
    bool negative = false;
    if (allow_sign && (is_sym("-") || is_sym("+"))) negative = next().text == "-";
    if (peek().kind != Tok::Int) fail(start, "expected an integer");
    const Token& t = next();
    if (t.text.size() > 9) fail(t, "integer too large");
    const long v = std::stol(t.text);
    return negative ? -v : v;
  }
  void expect_end() {
    if (!at_end()) fail(peek(), "unexpected trailing input");
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(line_.file, line_.number, t.col,
                     t.kind == Tok::End ? "end of line" : t.text, msg);
  }
  const SourceLine& line() const { return line_; }

 private:
  const SourceLine& line_;
  std::size_t pos_ = 0;
};

struct ExprContext {
  const CurveSystem& sys;
  const std::map<std::string, PositiveWord>& words;
  bool positive_only;
};

std::vector<Factor> parse_expr(Cursor& c, const ExprContext& ctx, bool nested);

std::vector<Factor> powered(const std::vector<Factor>& base, long p) {
  std::vector<Factor> out;
  std::vector<Factor> unit = base;
  if (p < 0) {
    unit.assign(base.rbegin(), base.rend());
    for (auto& f : unit) f.sign = -f.sign;
    p = -p;
  }
  for (long i = 0; i < p; ++i) out.insert(out.end(), unit.begin(), unit.end());
  return out;
}

long parse_power(Cursor& c, const ExprContext& ctx) {
  if (!c.accept("^")) return 1;
  const Token& at = c.peek();
  const long p = c.expect_int(true);
  if (ctx.positive_only && p < 1) c.fail(at, "powers must be >= 1");
  return p;
}

Conjugator parse_conj(Cursor& c, const ExprContext& ctx) {
  Conjugator conj;
  ExprContext inner{ctx.sys, ctx.words, false};
  if (c.is_sym("]")) c.fail(c.peek(), "empty conjugator");
  while (!c.is_sym("]")) {
    if (c.at_end()) c.fail(c.peek(), "expected ']'");
    const Token& t = c.expect_name("a curve name");
    if (!ctx.sys.has_curve(t.text)) c.fail(t, "unknown curve");
    const long p = parse_power(c, inner);
    for (long i = 0; i < std::abs(p); ++i)
      conj.push_back(Generator{t.text, p > 0 ? 1 : -1});
  }
  c.expect_sym("]");
  return conj;
}

std::vector<Factor> parse_factor(Cursor& c, const ExprContext& ctx) {
  if (c.accept("(")) {
    auto inner = parse_expr(c, ctx, true);
    c.expect_sym(")");
    return powered(inner, parse_power(c, ctx));
  }
  Conjugator conj;
  bool has_conj = false;
  if (c.accept("[")) {
    conj = parse_conj(c, ctx);
    has_conj = true;
  }
  const Token& t = c.expect_name("a curve or word name");
  std::vector<Factor> atom;
  if (ctx.sys.has_curve(t.text)) {
    try {
      atom.push_back(Factor{make_letter(ctx.sys, conj, t.text), 1});
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      c.fail(t, e.what());
    }
  } else if (auto it = ctx.words.find(t.text); it != ctx.words.end()) {
    if (has_conj) {
      for (auto const& l : it->second.letters())
        atom.push_back(Factor{twist_conjugate_letter(
                                  ctx.sys, conjugator_word(ctx.sys, conj), l),
                              1});
    } else {
      atom = it->second.word().factors();
    }
  } else {
    c.fail(t, "unresolved name");
  }
  return powered(atom, parse_power(c, ctx));
}

std::vector<Factor> parse_expr(Cursor& c, const ExprContext& ctx, bool nested) {
  std::vector<Factor> out;
  bool any = false;
  while (!c.at_end() && !(nested && c.is_sym(")"))) {
    auto f = parse_factor(c, ctx);
    out.insert(out.end(), f.begin(), f.end());
    any = true;
  }
  if (!any) c.fail(c.peek(), "empty expression");
  return out;
}

std::optional<IntVector> parse_class(Cursor& c, int genus) {
  IntVector v(2 * std::size_t(genus));
  if (c.peek().kind == Tok::Int && c.peek().text == "0") {
    Cursor probe = c;
    probe.next();
    if (probe.at_end()) {
      c.next();
      return v;
    }
  }
  bool first = true;
  while (!c.at_end()) {
    long sign = 1;
    if (c.accept("-")) sign = -1;
    else if (!c.accept("+") && !first) c.fail(c.peek(), "expected '+' or '-'");
    long coeff = 1;
    if (c.peek().kind == Tok::Int) {
      coeff = c.expect_int(false);
      c.accept("*");
    }
    const Token& t = c.expect_name("a basis symbol");
    static const std::regex basis("([ab])([0-9]+)");
    std::smatch m;
    if (!std::regex_match(t.text, m, basis)) c.fail(t, "unresolved basis symbol");
    const long idx = std::stol(m[2]);
    if (idx < 1 || idx > genus) c.fail(t, "unresolved basis symbol");
    v[2 * std::size_t(idx - 1) + (m[1] == "b" ? 1 : 0)] += sign * coeff;
    first = false;
  }
  if (first) c.fail(c.peek(), "expected a homology class");
  return v;
}

struct PendingRef {
  std::string file;
  std::size_t line = 0;
  std::size_t col = 0;
  std::string name;
  enum { Word, Relation } kind = Word;
};

struct PendingScript {
  DerivationScript script;
  std::vector<PendingRef> refs;
};

class Builder {
 public:
  void feed(const std::string& text, const std::string& file) {
    const auto lines = lex(text, file);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (lines[i].indented && !in_script_) {
        Cursor c(lines[i]);
        c.fail(c.peek(), "indented line outside a script");
      }
      if (!lines[i].indented) in_script_ = false;
      statement(lines[i]);
    }
    in_script_ = false;
  }

  Inputs finish() {
    if (!inputs_.system) throw ParseError("<input>", 0, 0, "", "missing 'genus'");
    for (auto& p : pending_) {
      for (auto const& r : p.refs) {
        const bool ok = r.kind == PendingRef::Word
                            ? inputs_.words.count(r.name) > 0
                            : has_relation(r.name);
        if (!ok)
          throw ParseError(r.file, r.line, r.col, r.name,
                           r.kind == PendingRef::Word ? "unresolved word"
                                                      : "unresolved relation");
      }
      if (!p.script.steps.empty()) {
        if (auto const* cp = std::get_if<Checkpoint>(&p.script.steps.back())) {
          p.script.expected = cp->word;
          p.script.steps.pop_back();
        }
      }
      inputs_.scripts[p.script.name] = std::move(p.script);
    }
    auto violations = validate_system(*inputs_.system);
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return std::move(inputs_);
  }

 private:
  bool has_relation(const std::string& name) const {
    for (auto const& r : inputs_.system->relations())
      if (r.name == name) return true;
    return false;
  }

  CurveSystem& sys(Cursor& c) {
    if (!inputs_.system) c.fail(c.peek(), "'genus' must come first");
    return *inputs_.system;
  }

  void fresh_name(Cursor& c, const Token& t) {
    if (inputs_.system && inputs_.system->has_curve(t.text))
      c.fail(t, "name already declared as a curve");
    if (inputs_.words.count(t.text)) c.fail(t, "name already declared as a word");
  }

  const Token& curve_ref(Cursor& c) {
    const Token& t = c.expect_name("a curve name");
    if (!sys(c).has_curve(t.text)) c.fail(t, "unknown curve");
    return t;
  }

  Letter relation_letter(Cursor& c) {
    ExprContext ctx{sys(c), inputs_.words, true};
    const Token& at = c.peek();
    Conjugator conj;
    if (c.accept("[")) conj = parse_conj(c, ctx);
    const Token& base = curve_ref(c);
    try {
      return make_letter(sys(c), conj, base.text);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      c.fail(at, e.what());
    }
  }

  std::vector<Letter> letters_until(Cursor& c, const char* stop) {
    std::vector<Letter> out;
    while (!c.at_end() && !(stop && c.is_sym(stop))) out.push_back(relation_letter(c));
    return out;
  }

  void pair_statement(Cursor& c, bool disjoint) {
    const std::string a = curve_ref(c).text;
    std::vector<std::string> others;
    if (c.accept(":")) {
      while (!c.at_end()) others.push_back(curve_ref(c).text);
      if (others.empty()) c.fail(c.peek(), "expected curve names");
    } else {
      others.push_back(curve_ref(c).text);
      c.expect_end();
    }
    for (auto const& b : others) {
      if (b == a) c.fail(c.peek(), "a curve paired with itself");
      if (disjoint) sys(c).declare_disjoint(a, b);
      else sys(c).declare_meet_once(a, b);
    }
  }

  void add_relation(Cursor& c, const Token& at, RelationDecl r) {
    if (has_relation(r.name)) c.fail(at, "relation already declared");
    try {
      sys(c).add_relation(std::move(r));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      c.fail(at, e.what());
    }
  }

  void relation(Cursor& c, RelationKind kind) {
    const Token& name = c.expect_name("a relation name");
    RelationDecl r;
    r.kind = kind;
    r.name = name.text;
    c.expect_sym(":");
    if (kind == RelationKind::Lantern || kind == RelationKind::Chain2) {
      auto lhs = letters_until(c, "=>");
      if (c.accept("=>")) {
        r.left = std::move(lhs);
        r.right = letters_until(c, nullptr);
      } else {
        c.fail(c.peek(), "expected '=>'");
      }
    } else {
      r.left = letters_until(c, nullptr);
    }
    add_relation(c, name, std::move(r));
  }

  void lantern(Cursor& c) {
    const Token& name = c.expect_name("a relation name");
    RelationDecl r;
    r.kind = RelationKind::Lantern;
    r.name = name.text;
    c.expect_sym(":");
    std::vector<Letter> first;
    while (!c.at_end() && !c.is_sym("=>") && !c.is_sym("<="))
      first.push_back(relation_letter(c));
    if (c.accept("=>")) {
      r.left = std::move(first);
      r.right = letters_until(c, nullptr);
    } else if (c.accept("<=")) {
      r.right = std::move(first);
      r.left = letters_until(c, nullptr);
    } else {
      c.fail(c.peek(), "expected '=>' or '<='");
    }
    add_relation(c, name, std::move(r));
  }

  void statement(const SourceLine& line) {
    Cursor c(line);
    if (line.indented) {
      script_step(c);
      return;
    }
    const Token& kw = c.expect_name("a statement keyword");
    try {
      if (kw.text == "genus") {
        const Token& at = c.peek();
        const long g = c.expect_int(false);
        c.expect_end();
        if (inputs_.system) c.fail(kw, "'genus' given twice");
        if (g < 2) c.fail(at, "genus must be at least 2");
        inputs_.system = std::make_shared<CurveSystem>(int(g));
      } else if (kw.text == "curve") {
        sys(c);
        const Token& name = c.expect_name("a curve name");
        fresh_name(c, name);
        std::optional<IntVector> cls;
        if (c.accept("=")) cls = parse_class(c, sys(c).genus());
        c.expect_end();
        sys(c).add_curve(name.text, cls);
      } else if (kw.text == "disjoint" || kw.text == "meet1") {
        pair_statement(c, kw.text == "disjoint");
      } else if (kw.text == "septype") {
        const std::string n = curve_ref(c).text;
        const long h = c.expect_int(false);
        c.expect_end();
        sys(c).set_separating_type(n, int(h));
      } else if (kw.text == "lantern") {
        sys(c);
        lantern(c);
      } else if (kw.text == "braid" || kw.text == "commute" || kw.text == "chain2") {
        sys(c);
        relation(c, kw.text == "braid"     ? RelationKind::Braid
                    : kw.text == "commute" ? RelationKind::Commute
                                           : RelationKind::Chain2);
      } else if (kw.text == "word") {
        sys(c);
        const Token& name = c.expect_name("a word name");
        fresh_name(c, name);
        c.expect_sym("=");
        ExprContext ctx{sys(c), inputs_.words, true};
        auto factors = parse_expr(c, ctx, false);
        inputs_.words.emplace(name.text, PositiveWord(make_word(std::move(factors))));
        inputs_.word_order.push_back(name.text);
      } else if (kw.text == "script") {
        sys(c);
        const Token& name = c.expect_name("a script name");
        for (auto const& p : pending_)
          if (p.script.name == name.text) c.fail(name, "script already declared");
        c.expect_keyword("on");
        const Token& src = c.expect_name("a word name");
        c.expect_sym(":");
        c.expect_end();
        PendingScript p;
        p.script.name = name.text;
        p.script.source = src.text;
        p.refs.push_back({line.file, line.number, src.col, src.text, PendingRef::Word});
        pending_.push_back(std::move(p));
        inputs_.script_order.push_back(name.text);
        in_script_ = true;
      } else {
        c.fail(kw, "unknown statement");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      c.fail(kw, e.what());
    }
  }

  void script_step(Cursor& c) {
    PendingScript& p = pending_.back();
    const SourceLine& line = c.line();
    const Token& kw = c.expect_name("a script step");
    if (kw.text == "elem") {
      const Token& at = c.peek();
      const long i = c.expect_int(false);
      if (i < 1) c.fail(at, "positions are 1-based");
      const Token& side = c.expect_name("L or R");
      if (side.text != "L" && side.text != "R") c.fail(side, "expected L or R");
      c.expect_end();
      p.script.steps.push_back(
          Move{ElemMove{std::size_t(i), side.text == "L" ? Side::Left : Side::Right}});
    } else if (kw.text == "conj") {
      ExprContext ctx{sys(c), inputs_.words, false};
      auto fs = parse_expr(c, ctx, false);
      p.script.steps.push_back(Move{ConjMove{make_word(std::move(fs))}});
    } else if (kw.text == "rot") {
      const long k = c.expect_int(true);
      c.expect_end();
      p.script.steps.push_back(Move{RotateMove{k}});
    } else if (kw.text == "subst") {
      const Token& rel = c.expect_name("a relation name");
      c.expect_sym("@");
      const Token& at = c.peek();
      const long i = c.expect_int(false);
      if (i < 1) c.fail(at, "positions are 1-based");
      const Token& dir = c.expect_name("fwd or rev");
      if (dir.text != "fwd" && dir.text != "rev") c.fail(dir, "expected fwd or rev");
      c.expect_end();
      p.refs.push_back({line.file, line.number, rel.col, rel.text, PendingRef::Relation});
      p.script.steps.push_back(Move{SubstMove{
          rel.text, std::size_t(i),
          dir.text == "fwd" ? Direction::Forward : Direction::Reverse}});
    } else if (kw.text == "expect") {
      const Token& w = c.expect_name("a word name");
      c.expect_end();
      p.refs.push_back({line.file, line.number, w.col, w.text, PendingRef::Word});
      p.script.steps.push_back(Checkpoint{w.text});
    } else {
      c.fail(kw, "unknown script step");
    }
  }

  Inputs inputs_;
  std::vector<PendingScript> pending_;
  bool in_script_ = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, 0, "", "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Inputs parse_text(const std::string& text, const std::string& filename) {
  Builder b;
  b.feed(text, filename);
  return b.finish();
}

Inputs parse_inputs(const std::vector<std::string>& paths) {
  Builder b;
  for (auto const& p : paths) b.feed(read_file(p), p);
  return b.finish();
}

Word parse_word_expr(const CurveSystem& sys, const std::string& expr,
                     const std::map<std::string, PositiveWord>& words) {
  auto lines = lex(expr, "<expr>");
  if (lines.empty()) return Word{};
  if (lines.size() != 1) throw ParseError("<expr>", 1, 1, "", "expected one expression");
  Cursor c(lines[0]);
  ExprContext ctx{sys, words, false};
  return make_word(parse_expr(c, ctx, false));
}

std::string render_word(const Word& w) { return w.str(); }
std::string render_word(const PositiveWord& w) { return w.str(); }

}  // namespace mcg
