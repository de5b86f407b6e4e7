#include "cyco/parser.hpp"

#include <cctype>
#include <functional>

namespace cyco {

namespace {

struct Tok {
  enum Kind { Ident, Punct, End };
  Kind kind;
  std::string text;
  int line, col;
};

struct Lexer {
  std::string src;
  size_t pos = 0;
  int line = 1, col = 1;
  std::vector<Tok> toks;

  explicit Lexer(std::string s) : src(std::move(s)) { run(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }

  void advance() {
    if (src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#' || c == '\'';
  }

  void run() {
    while (pos < src.size()) {
      char c = src[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      int l = line, co = col;
      if (c == '/' && pos + 1 < src.size() && src[pos + 1] == '/') {
        while (pos < src.size() && src[pos] != '\n') advance();
        continue;
      }
      if (ident_char(c)) {
        std::string t;
        while (pos < src.size() && ident_char(src[pos])) {
          t += src[pos];
          advance();
        }
        toks.push_back({Tok::Ident, t, l, co});
        continue;
      }
      // multi-char punctuation
      if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '>') {
        toks.push_back({Tok::Punct, "->", l, co});
        advance();
        advance();
        continue;
      }
      if (c == '<' && pos + 1 < src.size() && src[pos + 1] == '>') {
        toks.push_back({Tok::Punct, "<>", l, co});
        advance();
        advance();
        continue;
      }
      std::string p(1, c);
      if (p.find_first_of("{}()[]^,;|@:-") == std::string::npos)
        fail(std::string("unexpected character '") + c + "'");
      toks.push_back({Tok::Punct, p, l, co});
      advance();
    }
    toks.push_back({Tok::End, "", line, col});
  }
};

struct Parser {
  std::vector<Tok> toks;
  size_t at = 0;
  Signature* sig;

  [[noreturn]] void fail(const std::string& msg) const {
    const Tok& t = toks[at];
    throw ParseError(std::to_string(t.line) + ":" + std::to_string(t.col) + ": " + msg +
                     (t.kind == Tok::End ? " (at end of input)" : " (at '" + t.text + "')"));
  }

  const Tok& peek(int k = 0) const { return toks[std::min(at + k, toks.size() - 1)]; }
  bool is_punct(const std::string& p, int k = 0) const {
    return peek(k).kind == Tok::Punct && peek(k).text == p;
  }
  bool is_ident(const std::string& s, int k = 0) const {
    return peek(k).kind == Tok::Ident && peek(k).text == s;
  }
  Tok next() { return toks[at++]; }
  void expect(const std::string& p) {
    if (!is_punct(p)) fail("expected '" + p + "'");
    ++at;
  }
  std::string ident() {
    if (peek().kind != Tok::Ident) fail("expected an identifier");
    return next().text;
  }

  void declare_if_new(const std::string& name, const FinSet& fv) {
    if (!sig->declared(name)) sig->declare(name, fv);
  }

  FinSet varlist_braced() {
    expect("{");
    FinSet out;
    while (!is_punct("}")) {
      out.insert(ident());
      if (is_punct(",")) ++at;
    }
    expect("}");
    return out;
  }

  Bijection bijection() {
    expect("[");
    std::map<VarName, VarName, NatLess> m;
    while (!is_punct("]")) {
      VarName from = ident();
      expect("->");
      VarName to = ident();
      if (m.count(from)) fail("duplicate bijection entry " + from);
      m[from] = to;
      if (is_punct(",")) ++at;
    }
    expect("]");
    return Bijection(std::move(m));
  }

  ObjPtr object() {
    ObjPtr w = object_primary();
    while (is_punct("^")) {
      ++at;
      w = mk_act(w, bijection());
    }
    return w;
  }

  ObjPtr object_primary() {
    if (is_punct("(")) {
      ++at;
      ObjPtr l = object();
      VarName x = ident();
      expect("<>");
      VarName y = ident();
      ObjPtr r = object();
      expect(")");
      return mk_comp(l, x, y, r);
    }
    if (peek().kind != Tok::Ident) fail("expected an object term");
    std::string name = ident();
    if (name == "id" && is_punct("{")) {
      FinSet vs = varlist_braced();
      if (vs.size() != 2) fail("a unit has exactly two entries");
      sig->units = true;
      auto it = vs.begin();
      VarName a = *it++;
      return mk_unit(a, *it);
    }
    if (is_punct("{")) {
      FinSet vs = varlist_braced();
      declare_if_new(name, vs);
      ObjPtr leaf = mk_param(name, vs);
      return leaf;
    }
    if (is_punct("^") && is_punct("[", 1)) {
      ++at;
      Bijection dec = bijection();
      return mk_param(name, dec);
    }
    fail("parameter " + name + " needs an entry set {..} or a decoration ^[..]");
  }

  ArrowPtr arrow() {
    ArrowPtr f = arrow_item();
    while (is_punct(";")) {
      ++at;
      f = mk_vcomp(f, arrow_item());
    }
    return f;
  }

  ArrowPtr arrow_item() {
    ArrowPtr f = arrow_atom();
    while (is_punct("^")) {
      ++at;
      f = mk_aact(f, bijection());
    }
    return f;
  }

  std::vector<ObjPtr> object_list(size_t n) {
    std::vector<ObjPtr> out;
    out.push_back(object());
    while (out.size() < n) {
      expect(",");
      out.push_back(object());
    }
    return out;
  }

  // x,y;u,v
  std::vector<VarName> four_vars() {
    std::vector<VarName> v;
    v.push_back(ident());
    expect(",");
    v.push_back(ident());
    expect(";");
    v.push_back(ident());
    expect(",");
    v.push_back(ident());
    return v;
  }

  ArrowPtr arrow_atom() {
    if (is_punct("(")) {
      ++at;
      ArrowPtr l = arrow();
      if (is_punct(")")) {
        ++at;
        return l;
      }
      VarName x = ident();
      expect("<>");
      VarName y = ident();
      ArrowPtr r = arrow();
      expect(")");
      return mk_hcomp(l, x, y, r);
    }
    if (peek().kind != Tok::Ident) fail("expected an arrow term");
    std::string head = ident();
    if (head == "1") {
      expect("(");
      ObjPtr w = object();
      expect(")");
      return mk_id(w);
    }
    if (head == "beta" || head == "betainv") {
      expect("(");
      auto v = four_vars();
      expect("|");
      auto os = object_list(3);
      expect(")");
      return mk_beta(os[0], os[1], os[2], v[0], v[1], v[2], v[3], head == "betainv");
    }
    if (head == "gamma") {
      expect("(");
      VarName x = ident();
      expect(",");
      VarName y = ident();
      expect("|");
      auto os = object_list(2);
      expect(")");
      return mk_gamma(os[0], os[1], x, y);
    }
    if (head == "eps1" || head == "eps1inv") {
      expect("(");
      Bijection s = bijection();
      expect("|");
      ObjPtr leaf = object();
      expect(")");
      return mk_eps1(leaf, s, head == "eps1inv");
    }
    if (head == "eps2" || head == "eps2inv") {
      expect("(");
      ObjPtr w = object();
      expect(")");
      return mk_eps2(w, head == "eps2inv");
    }
    if (head == "eps3" || head == "eps3inv") {
      expect("(");
      Bijection s = bijection();
      expect(",");
      Bijection t = bijection();
      expect("|");
      ObjPtr w = object();
      expect(")");
      return mk_eps3(w, s, t, head == "eps3inv");
    }
    if (head == "eps4" || head == "eps4inv") {
      expect("(");
      auto v = four_vars();
      expect("|");
      Bijection s = bijection();
      Bijection sigma = s;
      if (is_punct(";")) {
        // the (sigma1, sigma2) spelling: recombine into sigma
        ++at;
        Bijection s2 = bijection();
        std::map<VarName, VarName, NatLess> m;
        for (const auto& [k, w] : s.pairs())
          if (k != v[2]) m[k] = w;
        for (const auto& [k, w] : s2.pairs())
          if (k != v[3]) m[k] = w;
        if (!s.defined_on(v[2]) || s.apply(v[2]) != v[0])
          fail("eps4: sigma1 must send " + v[2] + " to " + v[0]);
        if (!s2.defined_on(v[3]) || s2.apply(v[3]) != v[1])
          fail("eps4: sigma2 must send " + v[3] + " to " + v[1]);
        sigma = Bijection(std::move(m));
      }
      expect("|");
      auto os = object_list(2);
      expect(")");
      return mk_eps4(os[0], os[1], v[0], v[1], v[2], v[3], sigma, head == "eps4inv");
    }
    if (head == "iota") {
      sig->units = true;
      expect("(");
      VarName x = ident();
      expect(",");
      VarName y = ident();
      expect(",");
      VarName z = ident();
      expect("|");
      ObjPtr w = object();
      expect(")");
      return mk_iota(w, x, y, z);
    }
    if (head == "nu") {
      sig->units = true;
      expect("(");
      auto v = four_vars();
      expect(")");
      return mk_nu(v[0], v[1], v[2], v[3]);
    }
    fail("unknown arrow head '" + head + "'");
  }

  UnrootedTree tree() {
    if (!is_ident("tree")) fail("expected 'tree'");
    ++at;
    expect("{");
    UnrootedTree t;
    FinSet all;
    while (true) {
      std::string name = ident();
      Bijection dec;
      bool has_dec = false;
      if (is_punct("^")) {
        ++at;
        dec = bijection();
        has_dec = true;
      }
      expect("(");
      FinSet vs;
      std::vector<VarName> order;
      while (!is_punct(")")) {
        VarName v = ident();
        vs.insert(v);
        order.push_back(v);
        if (is_punct(",")) ++at;
      }
      expect(")");
      if (!has_dec) {
        dec = Bijection::identity(vs);
        declare_if_new(name, vs);
      } else if (dec.dom() != vs) {
        fail("corolla " + name + ": half-edges differ from the decoration domain");
      }
      t.cors.push_back(Corolla{name, dec});
      for (const auto& v : vs) {
        t.inv[v] = v;
        all.insert(v);
      }
      if (is_punct(";")) {
        ++at;
        continue;
      }
      break;
    }
    if (is_punct("|")) {
      ++at;
      while (!is_punct("}")) {
        VarName a = ident();
        expect("-");
        VarName b = ident();
        if (!all.count(a) || !all.count(b)) fail("edge uses an unknown half-edge");
        t.inv[a] = b;
        t.inv[b] = a;
        if (is_punct(",")) ++at;
      }
    }
    expect("}");
    return t;
  }

  void params_block() {
    ++at;  // 'params'
    expect("{");
    while (!is_punct("}")) {
      std::string name = ident();
      expect("(");
      FinSet vs;
      while (!is_punct(")")) {
        vs.insert(ident());
        if (is_punct(",")) ++at;
      }
      expect(")");
      sig->declare(name, vs);
      if (is_punct(";")) ++at;
    }
    expect("}");
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail("trailing input");
  }
};

bool looks_like_arrow(const Parser& p) {
  const Tok& t = p.peek();
  if (t.kind != Tok::Ident) return false;
  static const std::set<std::string> heads = {"1",    "beta", "betainv", "gamma", "eps1",
                                              "eps1inv", "eps2", "eps2inv", "eps3", "eps3inv",
                                              "eps4", "eps4inv", "iota", "nu"};
  return heads.count(t.text) != 0;
}

}  // namespace

Input parse_input(const std::string& text) {
  Lexer lex(text);
  Input in;
  in.sig.units = false;
  Parser p{lex.toks, 0, &in.sig};
  if (p.is_ident("params")) p.params_block();
  if (p.is_ident("tree")) {
    in.kind = PayloadKind::Tree;
    in.tree = p.tree();
    p.expect_end();
    return in;
  }
  size_t save = p.at;
  if (looks_like_arrow(p)) {
    in.kind = PayloadKind::Arrow;
    in.arrow = p.arrow();
    p.expect_end();
    return in;
  }
  // '(' could start either an object or a horizontally composed arrow.
  try {
    Parser q = p;
    in.kind = PayloadKind::Object;
    in.object = q.object();
    q.expect_end();
    p = q;
    return in;
  } catch (const ParseError&) {
    p.at = save;
    in.kind = PayloadKind::Arrow;
    in.arrow = p.arrow();
    p.expect_end();
    return in;
  }
}

ObjPtr parse_object(const std::string& text, Signature& sig) {
  Lexer lex(text);
  Parser p{lex.toks, 0, &sig};
  ObjPtr w = p.object();
  p.expect_end();
  return w;
}

ArrowPtr parse_arrow(const std::string& text, Signature& sig) {
  Lexer lex(text);
  Parser p{lex.toks, 0, &sig};
  ArrowPtr f = p.arrow();
  p.expect_end();
  return f;
}

UnrootedTree parse_tree(const std::string& text, Signature& sig) {
  Lexer lex(text);
  Parser p{lex.toks, 0, &sig};
  UnrootedTree t = p.tree();
  p.expect_end();
  return t;
}

Bijection parse_bijection(const std::string& text) {
  Lexer lex(text);
  Signature sig;
  Parser p{lex.toks, 0, &sig};
  Bijection b = p.bijection();
  p.expect_end();
  return b;
}

}  // namespace cyco
