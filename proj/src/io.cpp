#include "diamond/io.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <vector>

#include "diamond/errors.hpp"

namespace diamond {

namespace {

enum class Tok { Ident, Number, Symbol, Arrow, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

using Statement = std::vector<Token>;

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw ParseError(t.line, t.column, msg);
}

// Splits the text into statements of tokens. Each statement ends with an
// End token carrying the position just past it.
std::vector<Statement> tokenize(std::string_view text) {
  std::vector<Statement> out;
  Statement cur;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto finish = [&] {
    if (!cur.empty()) {
      cur.push_back({Tok::End, "", line, col});
      out.push_back(std::move(cur));
      cur.clear();
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      finish();
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == ';') {
      finish();
      ++i;
      ++col;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    Token t{Tok::Symbol, "", line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_')) {
        ++j;
      }
      t.kind = Tok::Ident;
      t.text = std::string(text.substr(i, j - i));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      t.kind = Tok::Number;
      t.text = std::string(text.substr(i, j - i));
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      t.kind = Tok::Arrow;
      t.text = "->";
    } else if (std::string_view("+-*^()/:<>=,").find(c) !=
               std::string_view::npos) {
      t.text = std::string(1, c);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c +
                                      "'");
    }
    i += t.text.size();
    col += static_cast<int>(t.text.size());
    cur.push_back(std::move(t));
  }
  finish();
  return out;
}

// ---------------------------------------------------------------------------
// Expressions

class ExprParser {
 public:
  ExprParser(const Theory& th, Field field, const Statement& toks,
             std::size_t begin, std::size_t end)
      : th_(th), field_(field), toks_(toks), pos_(begin), end_(end) {}

  Element parse_all() {
    Value v = expr();
    if (pos_ < end_) fail(toks_[pos_], "unexpected '" + toks_[pos_].text + "'");
    return to_element(v, toks_[std::min(pos_, toks_.size() - 1)]);
  }

 private:
  // A constant or an element; constants need a unit to become elements.
  struct Value {
    bool constant = true;
    Scalar scalar;
    Element element;
  };

  const Token& peek() const {
    return pos_ < end_ ? toks_[pos_] : toks_[std::min(end_, toks_.size() - 1)];
  }
  bool at(const char* sym) const {
    return pos_ < end_ && toks_[pos_].kind == Tok::Symbol &&
           toks_[pos_].text == sym;
  }
  const Token& take() { return toks_[pos_++]; }

  Element to_element(const Value& v, const Token& where) const {
    if (!v.constant) return v.element;
    if (v.scalar.is_zero()) return Element(field_);
    auto one = th_.one();
    if (!one) fail(where, "constant term without a unit monomial");
    return Element::term(*one, v.scalar);
  }

  Value add(Value a, Value b, bool subtract, const Token& where) const {
    if (subtract) {
      b.scalar = -b.scalar;
      b.element = -b.element;
    }
    if (a.constant && b.constant) {
      a.scalar += b.scalar;
      return a;
    }
    Value r{false, Scalar::zero(field_), to_element(a, where)};
    r.element += to_element(b, where);
    return r;
  }

  Value expr() {
    bool negate = false;
    if (at("+") || at("-")) negate = take().text == "-";
    const Token& first = peek();
    Value v = term();
    if (negate) v = add(zero(), v, true, first);
    while (at("+") || at("-")) {
      const Token& op = take();
      Value rhs = term();
      v = add(std::move(v), std::move(rhs), op.text == "-", op);
    }
    return v;
  }

  Value zero() const { return {true, Scalar::zero(field_), Element(field_)}; }

  Value term() {
    Value v = power();
    int factors = v.constant ? 0 : 1;
    while (at("*")) {
      take();
      const Token& where = peek();
      Value rhs = power();
      if (!rhs.constant) ++factors;
      if (th_.kind() == TheoryKind::FreeMagma && factors > 2) {
        fail(where, "magma products of more than two factors need parentheses");
      }
      v = multiply(std::move(v), std::move(rhs));
    }
    return v;
  }

  Value multiply(Value a, Value b) const {
    if (a.constant && b.constant) {
      a.scalar *= b.scalar;
      return a;
    }
    if (a.constant) {
      b.element *= a.scalar;
      return b;
    }
    if (b.constant) {
      a.element *= b.scalar;
      return a;
    }
    return {false, Scalar::zero(field_),
            diamond::multiply(th_, a.element, b.element)};
  }

  Value power() {
    const Token& base_tok = peek();
    Value base = atom();
    if (!at("^")) return base;
    take();
    const Token& e = peek();
    if (e.kind != Tok::Number) fail(e, "expected an exponent");
    take();
    if (e.text.size() > 6) fail(e, "exponent too large");
    const int n = std::stoi(e.text);
    if (th_.kind() == TheoryKind::FreeMagma && !base.constant && n > 2) {
      fail(base_tok, "magma powers above 2 need parentheses");
    }
    Value r{true, Scalar::one(field_), Element(field_)};
    for (int i = 0; i < n; ++i) r = multiply(std::move(r), base);
    if (n == 0 && !base.constant) {
      r = {false, Scalar::zero(field_), to_element(r, base_tok)};
    }
    return r;
  }

  Value atom() {
    const Token& t = peek();
    if (pos_ >= end_) fail(t, "expected an expression");
    if (t.kind == Tok::Number) {
      take();
      mpz_class num(t.text), den(1);
      if (at("/")) {
        take();
        const Token& d = peek();
        if (d.kind != Tok::Number) fail(d, "expected a denominator");
        take();
        den = mpz_class(d.text);
        if (den == 0) fail(d, "zero denominator");
      }
      try {
        return {true, Scalar::from_rational(field_, num, den), Element(field_)};
      } catch (const Error& e) {
        fail(t, e.what());
      }
    }
    if (at("(")) {
      take();
      Value v = expr();
      if (!at(")")) fail(peek(), "expected ')'");
      take();
      return v;
    }
    if (t.kind == Tok::Ident) {
      take();
      if (auto g = th_.find_generator(t.text)) {
        return {false, Scalar::zero(field_),
                Element::monomial(field_, th_.generator(*g))};
      }
      if (th_.kind() == TheoryKind::Path && t.text.size() > 1 &&
          t.text[0] == 'e') {
        if (auto v = th_.find_vertex(t.text.substr(1))) {
          return {false, Scalar::zero(field_),
                  Element::monomial(field_, th_.vertex(*v))};
        }
      }
      fail(t, "unknown generator '" + t.text + "'");
    }
    fail(t, "unexpected '" + t.text + "'");
  }

  const Theory& th_;
  Field field_;
  const Statement& toks_;
  std::size_t pos_;
  std::size_t end_;
};

Element parse_range(const Theory& th, Field field, const Statement& s,
                    std::size_t begin, std::size_t end) {
  if (begin >= end) fail(s[std::min(begin, s.size() - 1)], "empty expression");
  return ExprParser(th, field, s, begin, end).parse_all();
}

// ---------------------------------------------------------------------------
// System files

struct Header {
  std::optional<TheoryKind> kind;
  const Token* kind_tok = nullptr;
  std::vector<std::string> vars, central, vertices;
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>>
      arrows;
  std::vector<const Token*> arrow_toks;
  OrderKind order = OrderKind::Deglex;
  const Statement* order_stmt = nullptr;
  const Statement* weights_stmt = nullptr;
  Field field;
};

std::string name_of(const Token& t) {
  if (t.kind != Tok::Ident && t.kind != Tok::Number) {
    fail(t, "expected a name");
  }
  return t.text;
}

TheoryKind parse_kind(const Token& t) {
  if (t.text == "assoc") return TheoryKind::FreeMonoid;
  if (t.text == "comm") return TheoryKind::Commutative;
  if (t.text == "mixed") return TheoryKind::Mixed;
  if (t.text == "magma") return TheoryKind::FreeMagma;
  if (t.text == "path") return TheoryKind::Path;
  fail(t, "unknown theory '" + t.text + "'");
}

OrderKind parse_order_kind(const Token& t) {
  if (t.text == "deglex") return OrderKind::Deglex;
  if (t.text == "weighted") return OrderKind::WeightedDeglex;
  if (t.text == "lex") return OrderKind::Lex;
  if (t.text == "series") return OrderKind::SeriesDeglex;
  if (t.text == "graded") return OrderKind::Graded;
  fail(t, "unknown order '" + t.text + "'");
}

std::vector<int> parse_chain(const Theory& th, const Statement& s) {
  const std::size_t n = th.generator_count();
  std::vector<int> rank;
  if (s.size() <= 3) return rank;  // keyword, kind, End
  std::vector<std::size_t> chain;
  std::string dir;
  for (std::size_t i = 2; s[i].kind != Tok::End; ++i) {
    if ((i - 2) % 2 == 1) {
      if (s[i].kind != Tok::Symbol || (s[i].text != "<" && s[i].text != ">")) {
        fail(s[i], "expected '<' or '>'");
      }
      if (!dir.empty() && dir != s[i].text) {
        fail(s[i], "mixed '<' and '>' in one chain");
      }
      dir = s[i].text;
      continue;
    }
    auto g = th.find_generator(s[i].text);
    if (s[i].kind != Tok::Ident || !g) {
      fail(s[i], "unknown generator '" + s[i].text + "'");
    }
    if (std::find(chain.begin(), chain.end(), *g) != chain.end()) {
      fail(s[i], "generator '" + s[i].text + "' listed twice");
    }
    chain.push_back(*g);
  }
  if (chain.size() != n) {
    fail(s[2], "the chain must list all " + std::to_string(n) + " generators");
  }
  rank.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    rank[chain[k]] = static_cast<int>(dir == ">" ? n - 1 - k : k);
  }
  return rank;
}

std::vector<mpq_class> parse_weights(const Theory& th, const Statement& s) {
  std::vector<mpq_class> w(th.generator_count(), mpq_class(0));
  std::vector<bool> set(w.size(), false);
  std::size_t i = 1;
  while (s[i].kind != Tok::End) {
    auto g = th.find_generator(s[i].text);
    if (s[i].kind != Tok::Ident || !g) {
      fail(s[i], "unknown generator '" + s[i].text + "'");
    }
    if (set[*g]) fail(s[i], "weight given twice");
    set[*g] = true;
    ++i;
    if (s[i].text != ":") fail(s[i], "expected ':'");
    ++i;
    bool neg = false;
    if (s[i].text == "-") {
      neg = true;
      ++i;
    }
    if (s[i].kind != Tok::Number) fail(s[i], "expected a weight");
    mpq_class q(mpz_class(s[i].text), 1);
    ++i;
    if (s[i].text == "/") {
      ++i;
      if (s[i].kind != Tok::Number || mpz_class(s[i].text) == 0) {
        fail(s[i], "expected a nonzero denominator");
      }
      q = mpq_class(q.get_num(), mpz_class(s[i].text));
      q.canonicalize();
      ++i;
    }
    w[*g] = neg ? mpq_class(-q) : q;
    if (s[i].text == ",") ++i;
  }
  return w;
}

std::size_t find_arrow(const Statement& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].kind == Tok::Arrow) return i;
  }
  return s.size();
}

}  // namespace

RewritingSystem parse_system(std::string_view text) {
  const auto stmts = tokenize(text);
  Header h;
  std::vector<const Statement*> body;
  for (const auto& s : stmts) {
    const Token& kw = s[0];
    if (kw.kind != Tok::Ident) fail(kw, "expected a statement keyword");
    auto args = [&](std::vector<std::string>& into) {
      for (std::size_t i = 1; s[i].kind != Tok::End; ++i) {
        if (s[i].text == ",") continue;
        into.push_back(name_of(s[i]));
      }
    };
    if (kw.text == "rule" || kw.text == "relation") {
      body.push_back(&s);
      continue;
    }
    if (!body.empty()) fail(kw, "header statement after the first rule");
    if (kw.text == "theory") {
      if (h.kind) fail(kw, "theory declared twice");
      if (s[1].kind != Tok::Ident || s[2].kind != Tok::End) {
        fail(s[1], "expected one of assoc, comm, mixed, magma, path");
      }
      h.kind = parse_kind(s[1]);
      h.kind_tok = &s[1];
    } else if (kw.text == "vars") {
      args(h.vars);
    } else if (kw.text == "central") {
      args(h.central);
    } else if (kw.text == "vertices") {
      args(h.vertices);
    } else if (kw.text == "arrow") {
      // arrow a: 1 -> 2
      if (s.size() != 7 || s[2].text != ":" || s[4].kind != Tok::Arrow) {
        fail(kw, "expected 'arrow NAME: SOURCE -> TARGET'");
      }
      h.arrows.push_back({name_of(s[1]), {name_of(s[3]), name_of(s[5])}});
      h.arrow_toks.push_back(&s[1]);
    } else if (kw.text == "order") {
      if (h.order_stmt) fail(kw, "order declared twice");
      if (s[1].kind != Tok::Ident) fail(s[1], "expected an order kind");
      h.order = parse_order_kind(s[1]);
      h.order_stmt = &s;
    } else if (kw.text == "weights") {
      if (h.weights_stmt) fail(kw, "weights declared twice");
      h.weights_stmt = &s;
    } else if (kw.text == "field") {
      if (s[2].kind != Tok::End) fail(s[2], "unexpected token");
      if (s[1].kind == Tok::Ident && s[1].text == "Q") {
        h.field = Field::rationals();
      } else if (s[1].kind == Tok::Number && s[1].text.size() <= 19) {
        try {
          h.field = Field::prime(std::stoull(s[1].text));
        } catch (const Error& e) {
          fail(s[1], e.what());
        }
      } else {
        fail(s[1], "expected Q or a prime below 2^63");
      }
    } else {
      fail(kw, "unknown statement '" + kw.text + "'");
    }
  }
  if (!h.kind) {
    throw ParseError(stmts.empty() ? 1 : stmts[0][0].line, 1,
                     "missing theory declaration");
  }

  const Token& at_theory = *h.kind_tok;
  std::shared_ptr<const Theory> th;
  try {
    switch (*h.kind) {
      case TheoryKind::FreeMonoid:
        th = std::make_shared<Theory>(Theory::free_monoid(h.vars));
        break;
      case TheoryKind::Commutative:
        th = std::make_shared<Theory>(Theory::commutative(h.vars));
        break;
      case TheoryKind::FreeMagma:
        th = std::make_shared<Theory>(Theory::free_magma(h.vars));
        break;
      case TheoryKind::Mixed:
        th = std::make_shared<Theory>(Theory::mixed(h.central, h.vars));
        break;
      case TheoryKind::Path: {
        std::vector<Arrow> arrows;
        for (std::size_t k = 0; k < h.arrows.size(); ++k) {
          const auto& [name, ends] = h.arrows[k];
          auto vs = std::find(h.vertices.begin(), h.vertices.end(), ends.first);
          auto vt = std::find(h.vertices.begin(), h.vertices.end(), ends.second);
          if (vs == h.vertices.end() || vt == h.vertices.end()) {
            fail(*h.arrow_toks[k], "arrow '" + name + "' uses an undeclared vertex");
          }
          arrows.push_back({name,
                            static_cast<std::int32_t>(vs - h.vertices.begin()),
                            static_cast<std::int32_t>(vt - h.vertices.begin())});
        }
        th = std::make_shared<Theory>(Theory::path(h.vertices, std::move(arrows)));
        break;
      }
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(at_theory, e.what());
  }

  std::optional<WeightData> weights;
  if (h.weights_stmt) weights = WeightData{parse_weights(*th, *h.weights_stmt)};

  const Token& at_order = h.order_stmt ? (*h.order_stmt)[1] : at_theory;
  std::optional<MonomialOrder> order;
  try {
    std::vector<int> rank;
    if (h.order_stmt) rank = parse_chain(*th, *h.order_stmt);
    std::vector<mpq_class> ow;
    if (h.order != OrderKind::Deglex && h.order != OrderKind::Lex && weights) {
      ow = weights->weights;
    }
    if ((h.order == OrderKind::WeightedDeglex ||
         h.order == OrderKind::SeriesDeglex) &&
        !weights) {
      fail(at_order, std::string(to_string(h.order)) +
                         " order needs a weights statement");
    }
    order = MonomialOrder::make(*th, h.order, std::move(rank), std::move(ow));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(at_order, e.what());
  }

  // Validate rules one at a time so errors point at their statement.
  RewritingSystem empty(th, *order, h.field, {}, weights);
  std::vector<Rule> rules;
  std::vector<const Token*> origin;
  for (const Statement* sp : body) {
    const Statement& s = *sp;
    const Token& kw = s[0];
    try {
      if (kw.text == "rule") {
        const std::size_t arrow = find_arrow(s);
        if (arrow == s.size()) fail(kw, "expected 'rule LEAD -> LOWER'");
        Element lhs = parse_range(*th, h.field, s, 1, arrow);
        Element rhs = parse_range(*th, h.field, s, arrow + 1, s.size() - 1);
        if (lhs.size() != 1 || !lhs.terms().begin()->second.is_one()) {
          fail(s[1], "rule lead must be a single monomial with coefficient 1");
        }
        Rule r{lhs.terms().begin()->first, std::move(rhs)};
        empty.validate_rule(r);
        rules.push_back(std::move(r));
        origin.push_back(&s[1]);
      } else {
        Element f = parse_range(*th, h.field, s, 1, s.size() - 1);
        std::vector<Element> parts;
        if (th->kind() == TheoryKind::Path) {
          parts = uniform_components(f);
        } else {
          parts.push_back(std::move(f));
        }
        for (const auto& p : parts) {
          Rule r = orient(p, *order);
          empty.validate_rule(r);
          rules.push_back(std::move(r));
          origin.push_back(&s[1]);
        }
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(s.size() > 1 ? s[1] : kw, e.what());
    }
  }

  if (order->kind() == OrderKind::SeriesDeglex && weights) {
    for (std::size_t k = 0; k < rules.size(); ++k) {
      auto n = weights->norm(rules[k].lower);
      if (n && *n > weights->exponent(rules[k].lead)) {
        fail(*origin[k], "inadmissible series rule: the lower part has a "
                         "larger norm than the lead");
      }
    }
  }
  try {
    return RewritingSystem(th, *order, h.field, std::move(rules), weights);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(at_order, e.what());
  }
}

Element parse_element(const Theory& theory, Field field,
                      std::string_view text) {
  auto stmts = tokenize(text);
  if (stmts.size() != 1) {
    throw ParseError(1, 1, stmts.empty() ? "empty expression"
                                         : "expected a single expression");
  }
  return parse_range(theory, field, stmts[0], 0, stmts[0].size() - 1);
}

Element parse_element(const RewritingSystem& sys, std::string_view text) {
  return parse_element(sys.theory(), sys.field(), text);
}

std::string format_element(const Theory& theory, const MonomialOrder& order,
                           const Element& a) {
  if (a.is_zero()) return "0";
  std::string out;
  auto one = theory.one();
  for (const auto& [m, c] : sorted_terms(order, a)) {
    const bool neg = c.is_negative();
    const Scalar mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = one && m == *one;
    if (unit) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += theory.format(m);
    } else {
      out += mag.to_string() + "*" + theory.format(m);
    }
  }
  return out;
}

std::string format_element(const RewritingSystem& sys, const Element& a) {
  return format_element(sys.theory(), sys.order(), a);
}

std::string format_rule(const RewritingSystem& sys, const Rule& r) {
  return sys.theory().format(r.lead) + " -> " + format_element(sys, r.lower);
}

std::string format_system(const RewritingSystem& sys) {
  const Theory& th = sys.theory();
  std::string out = std::string("theory ") + to_string(th.kind()) + "\n";
  auto list = [&](const char* kw, const std::vector<std::string>& names) {
    out += kw;
    for (const auto& n : names) out += " " + n;
    out += "\n";
  };
  switch (th.kind()) {
    case TheoryKind::Mixed:
      list("central", th.central_alphabet());
      list("vars", th.alphabet());
      break;
    case TheoryKind::Path:
      list("vertices", th.vertices());
      for (const auto& a : th.arrows()) {
        out += "arrow " + a.name + ": " + th.vertices()[a.source] + " -> " +
               th.vertices()[a.target] + "\n";
      }
      break;
    default:
      list("vars", th.alphabet());
      break;
  }
  const auto& rank = sys.order().rank();
  std::vector<std::size_t> ascending(rank.size());
  for (std::size_t i = 0; i < rank.size(); ++i) ascending[rank[i]] = i;
  out += std::string("order ") + to_string(sys.order().kind());
  for (std::size_t k = 0; k < ascending.size(); ++k) {
    out += (k == 0 ? " " : "<") + th.generator_name(ascending[k]);
  }
  out += "\n";
  std::optional<std::vector<mpq_class>> w;
  if (sys.weights()) {
    w = sys.weights()->weights;
  } else if (sys.order().kind() == OrderKind::WeightedDeglex ||
             sys.order().kind() == OrderKind::Graded) {
    w = sys.order().weights();
  }
  if (w) {
    out += "weights";
    for (std::size_t i = 0; i < w->size(); ++i) {
      out += " " + th.generator_name(i) + ":" + (*w)[i].get_str();
    }
    out += "\n";
  }
  if (!sys.field().is_rational()) {
    out += "field " + std::to_string(sys.field().modulus()) + "\n";
  }
  for (const auto& r : sys.rules()) out += "rule " + format_rule(sys, r) + "\n";
  return out;
}

}  // namespace diamond
