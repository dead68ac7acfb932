#include "pomlab/formula.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace pomlab {

namespace {

enum class Tok { ident, zero, one, prime, meet, join, le, eq, neg, conj, disj, impl, lparen, rparen, forall, colon, end };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t start = i;
    if (c == '0') {
      out.push_back({Tok::zero, "0", start});
      ++i;
    } else if (c == '1') {
      out.push_back({Tok::one, "1", start});
      ++i;
    } else if (c == '\'') {
      out.push_back({Tok::prime, "'", start});
      ++i;
    } else if (c == '^') {
      out.push_back({Tok::meet, "^", start});
      ++i;
    } else if (c == '~') {
      out.push_back({Tok::neg, "~", start});
      ++i;
    } else if (c == '&') {
      out.push_back({Tok::conj, "&", start});
      ++i;
    } else if (c == '|') {
      out.push_back({Tok::disj, "|", start});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::lparen, "(", start});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::rparen, ")", start});
      ++i;
    } else if (c == ':') {
      out.push_back({Tok::colon, ":", start});
      ++i;
    } else if (c == '<') {
      if (i + 1 >= s.size() || s[i + 1] != '=')
        throw Error(ErrorKind::SyntaxError, "expected '<=' at position " + std::to_string(start),
                    {static_cast<Element>(start)});
      out.push_back({Tok::le, "<=", start});
      i += 2;
    } else if (c == '=') {
      out.push_back({Tok::eq, "=", start});
      ++i;
    } else if (c == '-') {
      if (i + 1 >= s.size() || s[i + 1] != '>')
        throw Error(ErrorKind::SyntaxError, "expected '->' at position " + std::to_string(start),
                    {static_cast<Element>(start)});
      out.push_back({Tok::impl, "->", start});
      i += 2;
    } else if (std::islower(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && (std::islower(static_cast<unsigned char>(s[j])) ||
                              std::isdigit(static_cast<unsigned char>(s[j]))))
        ++j;
      std::string word = s.substr(i, j - i);
      if (word == "v")
        out.push_back({Tok::join, word, start});
      else if (word == "forall")
        out.push_back({Tok::forall, word, start});
      else
        out.push_back({Tok::ident, word, start});
      i = j;
    } else {
      throw Error(ErrorKind::SyntaxError,
                  std::string("unexpected character '") + c + "' at position " + std::to_string(start),
                  {static_cast<Element>(start)});
    }
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  ParsedFormula run() {
    ParsedFormula f;
    f.root = parse_impl();
    expect(Tok::end, "end of input");
    f.variables = vars_;
    std::set<int> bound;
    collect_bound(f.root, bound);
    for (int id = 0; id < static_cast<int>(vars_.size()); ++id)
      if (!bound.count(id)) f.free_variables.push_back(id);
    return f;
  }

private:
  std::vector<Token> toks_;
  size_t at_ = 0;
  std::vector<std::string> vars_;

  const Token& peek() const { return toks_[at_]; }
  Token take() { return toks_[at_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++at_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorKind::SyntaxError,
                "expected " + what + " at position " + std::to_string(peek().pos),
                {static_cast<Element>(peek().pos)});
  }
  void expect(Tok k, const std::string& what) {
    if (!accept(k)) fail(what);
  }

  int var_id(const std::string& name) {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    vars_.push_back(name);
    return static_cast<int>(vars_.size()) - 1;
  }

  static void collect_bound(const FormulaNode& n, std::set<int>& bound) {
    for (int id : n.bound) bound.insert(id);
    for (const auto& c : n.children) collect_bound(c, bound);
  }

  FormulaNode parse_impl() {
    FormulaNode lhs = parse_quant();
    if (accept(Tok::impl)) {
      FormulaNode rhs = parse_impl();
      FormulaNode n;
      n.kind = FormulaNode::Kind::impl;
      n.children = {std::move(lhs), std::move(rhs)};
      return n;
    }
    return lhs;
  }

  FormulaNode parse_quant() {
    if (accept(Tok::forall)) {
      FormulaNode n;
      n.kind = FormulaNode::Kind::forall;
      if (peek().kind != Tok::ident) fail("quantified variable");
      while (peek().kind == Tok::ident) n.bound.push_back(var_id(take().text));
      expect(Tok::colon, "':' after quantified variables");
      n.children.push_back(parse_quant());
      return n;
    }
    return parse_or();
  }

  FormulaNode parse_or() {
    FormulaNode lhs = parse_and();
    while (accept(Tok::disj)) {
      FormulaNode rhs = parse_and();
      FormulaNode n;
      n.kind = FormulaNode::Kind::disj;
      n.children = {std::move(lhs), std::move(rhs)};
      lhs = std::move(n);
    }
    return lhs;
  }

  FormulaNode parse_and() {
    FormulaNode lhs = parse_not();
    while (accept(Tok::conj)) {
      FormulaNode rhs = parse_not();
      FormulaNode n;
      n.kind = FormulaNode::Kind::conj;
      n.children = {std::move(lhs), std::move(rhs)};
      lhs = std::move(n);
    }
    return lhs;
  }

  FormulaNode parse_not() {
    if (accept(Tok::neg)) {
      FormulaNode n;
      n.kind = FormulaNode::Kind::neg;
      n.children.push_back(parse_not());
      return n;
    }
    return parse_atom();
  }

  // An atom is either a comparison between terms or a parenthesized
  // formula; '(' is ambiguous, so try the term reading first.
  FormulaNode parse_atom() {
    size_t save = at_;
    size_t vars_save = vars_.size();
    try {
      auto lhs = parse_term();
      FormulaNode n;
      if (accept(Tok::le))
        n.kind = FormulaNode::Kind::le;
      else if (accept(Tok::eq))
        n.kind = FormulaNode::Kind::eq;
      else
        fail("comparison operator");
      n.lhs = std::move(lhs);
      n.rhs = parse_term();
      return n;
    } catch (const Error&) {
      at_ = save;
      vars_.resize(vars_save);
    }
    expect(Tok::lparen, "atom or '('");
    FormulaNode inner = parse_impl();
    expect(Tok::rparen, "')'");
    return inner;
  }

  std::shared_ptr<Term> parse_term() {
    auto lhs = parse_postfix();
    while (peek().kind == Tok::meet || peek().kind == Tok::join) {
      Tok op = take().kind;
      auto rhs = parse_postfix();
      auto n = std::make_shared<Term>();
      n->kind = (op == Tok::meet) ? Term::Kind::meet : Term::Kind::join;
      n->lhs = std::move(lhs);
      n->rhs = std::move(rhs);
      lhs = std::move(n);
    }
    return lhs;
  }

  std::shared_ptr<Term> parse_postfix() {
    auto t = parse_primary();
    while (accept(Tok::prime)) {
      auto n = std::make_shared<Term>();
      n->kind = Term::Kind::prime;
      n->lhs = std::move(t);
      t = std::move(n);
    }
    return t;
  }

  std::shared_ptr<Term> parse_primary() {
    if (accept(Tok::lparen)) {
      auto t = parse_term();
      expect(Tok::rparen, "')'");
      return t;
    }
    auto n = std::make_shared<Term>();
    if (accept(Tok::zero)) {
      n->kind = Term::Kind::const0;
      return n;
    }
    if (accept(Tok::one)) {
      n->kind = Term::Kind::const1;
      return n;
    }
    if (peek().kind == Tok::ident) {
      n->kind = Term::Kind::var;
      n->var = var_id(take().text);
      return n;
    }
    fail("term");
  }
};

void print_term(std::ostream& os, const Term& t, const std::vector<std::string>& vars) {
  switch (t.kind) {
    case Term::Kind::var: os << vars[static_cast<size_t>(t.var)]; return;
    case Term::Kind::const0: os << '0'; return;
    case Term::Kind::const1: os << '1'; return;
    case Term::Kind::prime: {
      bool paren = t.lhs->kind == Term::Kind::meet || t.lhs->kind == Term::Kind::join;
      if (paren) os << '(';
      print_term(os, *t.lhs, vars);
      if (paren) os << ')';
      os << '\'';
      return;
    }
    case Term::Kind::meet:
    case Term::Kind::join: {
      char op = t.kind == Term::Kind::meet ? '^' : 'v';
      auto side = [&](const Term& s, bool right) {
        bool paren = (s.kind == Term::Kind::meet || s.kind == Term::Kind::join) &&
                     (s.kind != t.kind || right);
        if (paren) os << '(';
        print_term(os, s, vars);
        if (paren) os << ')';
      };
      side(*t.lhs, false);
      os << ' ' << op << ' ';
      side(*t.rhs, true);
      return;
    }
  }
}

int precedence(FormulaNode::Kind k) {
  switch (k) {
    case FormulaNode::Kind::impl: return 0;
    case FormulaNode::Kind::forall: return 1;
    case FormulaNode::Kind::disj: return 2;
    case FormulaNode::Kind::conj: return 3;
    case FormulaNode::Kind::neg: return 4;
    default: return 5;
  }
}

void print_node(std::ostream& os, const FormulaNode& n, const std::vector<std::string>& vars,
                int parent_prec) {
  int prec = precedence(n.kind);
  bool paren = prec < parent_prec;
  if (paren) os << '(';
  switch (n.kind) {
    case FormulaNode::Kind::le:
    case FormulaNode::Kind::eq:
      print_term(os, *n.lhs, vars);
      os << (n.kind == FormulaNode::Kind::le ? " <= " : " = ");
      print_term(os, *n.rhs, vars);
      break;
    case FormulaNode::Kind::neg:
      os << "~(";
      print_node(os, n.children[0], vars, 0);
      os << ')';
      break;
    case FormulaNode::Kind::conj:
      print_node(os, n.children[0], vars, prec);
      os << " & ";
      print_node(os, n.children[1], vars, prec + 1);
      break;
    case FormulaNode::Kind::disj:
      print_node(os, n.children[0], vars, prec);
      os << " | ";
      print_node(os, n.children[1], vars, prec + 1);
      break;
    case FormulaNode::Kind::impl:
      print_node(os, n.children[0], vars, prec + 1);
      os << " -> ";
      print_node(os, n.children[1], vars, prec);
      break;
    case FormulaNode::Kind::forall:
      os << "forall";
      for (int id : n.bound) os << ' ' << vars[static_cast<size_t>(id)];
      os << ": ";
      print_node(os, n.children[0], vars, prec);
      break;
  }
  if (paren) os << ')';
}

// Shared evaluation core: a structure is anything giving meet/join/inv/le
// over elements plus bottom/top.
struct PosetView {
  const Poset& p;
  int size() const { return p.size(); }
  Element bottom() const { return p.bottom(); }
  Element top() const { return p.top(); }
  Element prime(Element x) const { return p.inv(x); }
  Element meet(Element, Element) const {
    throw Error(ErrorKind::SignatureMismatch, "meet term evaluated against a bare poset");
  }
  Element join(Element, Element) const {
    throw Error(ErrorKind::SignatureMismatch, "join term evaluated against a bare poset");
  }
  bool le(Element x, Element y) const { return p.le(x, y); }
};

struct DirectoidView {
  const Directoid& d;
  int size() const { return d.size(); }
  Element bottom() const { return d.zero(); }
  Element top() const { return d.one(); }
  Element prime(Element x) const { return d.inv(x); }
  Element meet(Element x, Element y) const { return d.meet(x, y); }
  Element join(Element x, Element y) const { return d.join(x, y); }
  bool le(Element x, Element y) const { return d.induced_le(x, y); }
};

template <class View>
Element eval_term(const View& v, const Term& t, const std::vector<Element>& env) {
  switch (t.kind) {
    case Term::Kind::var: return env[static_cast<size_t>(t.var)];
    case Term::Kind::const0: return v.bottom();
    case Term::Kind::const1: return v.top();
    case Term::Kind::prime: return v.prime(eval_term(v, *t.lhs, env));
    case Term::Kind::meet: return v.meet(eval_term(v, *t.lhs, env), eval_term(v, *t.rhs, env));
    case Term::Kind::join: return v.join(eval_term(v, *t.lhs, env), eval_term(v, *t.rhs, env));
  }
  throw Error(ErrorKind::UsageError, "corrupt term");
}

template <class View>
bool eval_node(const View& v, const FormulaNode& n, std::vector<Element>& env) {
  switch (n.kind) {
    case FormulaNode::Kind::le:
      return v.le(eval_term(v, *n.lhs, env), eval_term(v, *n.rhs, env));
    case FormulaNode::Kind::eq:
      return eval_term(v, *n.lhs, env) == eval_term(v, *n.rhs, env);
    case FormulaNode::Kind::neg:
      return !eval_node(v, n.children[0], env);
    case FormulaNode::Kind::conj:
      return eval_node(v, n.children[0], env) && eval_node(v, n.children[1], env);
    case FormulaNode::Kind::disj:
      return eval_node(v, n.children[0], env) || eval_node(v, n.children[1], env);
    case FormulaNode::Kind::impl:
      return !eval_node(v, n.children[0], env) || eval_node(v, n.children[1], env);
    case FormulaNode::Kind::forall: {
      // odometer over the bound variables
      std::vector<Element> saved;
      saved.reserve(n.bound.size());
      for (int id : n.bound) saved.push_back(env[static_cast<size_t>(id)]);
      const int sz = v.size();
      std::vector<Element> idx(n.bound.size(), 0);
      bool ok = true;
      while (ok) {
        for (size_t i = 0; i < n.bound.size(); ++i) env[static_cast<size_t>(n.bound[i])] = idx[i];
        if (!eval_node(v, n.children[0], env)) ok = false;
        size_t i = n.bound.size();
        bool advanced = false;
        while (i > 0) {
          --i;
          if (++idx[i] < sz) {
            advanced = true;
            break;
          }
          idx[i] = 0;
        }
        if (!advanced) break;
      }
      for (size_t i = 0; i < n.bound.size(); ++i) env[static_cast<size_t>(n.bound[i])] = saved[i];
      return ok;
    }
  }
  throw Error(ErrorKind::UsageError, "corrupt formula");
}

template <class View>
EvalResult eval_closed(const View& v, const ParsedFormula& f) {
  std::vector<Element> env(f.variables.size(), 0);
  const auto& free = f.free_variables;
  std::vector<Element> idx(free.size(), 0);
  const int sz = v.size();
  while (true) {
    for (size_t i = 0; i < free.size(); ++i) env[static_cast<size_t>(free[i])] = idx[i];
    if (!eval_node(v, f.root, env)) {
      EvalResult r;
      r.holds = false;
      for (size_t i = 0; i < free.size(); ++i)
        r.witness.emplace_back(f.variables[static_cast<size_t>(free[i])], idx[i]);
      return r;
    }
    size_t i = free.size();
    bool advanced = false;
    while (i > 0) {
      --i;
      if (++idx[i] < sz) {
        advanced = true;
        break;
      }
      idx[i] = 0;
    }
    if (!advanced) return {};
  }
}

bool term_in_order_signature(const Term& t) {
  switch (t.kind) {
    case Term::Kind::meet:
    case Term::Kind::join:
      return false;
    case Term::Kind::prime:
      return term_in_order_signature(*t.lhs);
    default:
      return true;
  }
}

FormulaNode translate_node(const FormulaNode& n) {
  switch (n.kind) {
    case FormulaNode::Kind::le: {
      if (!term_in_order_signature(*n.lhs) || !term_in_order_signature(*n.rhs))
        throw Error(ErrorKind::SignatureMismatch, "translation input contains meet/join terms");
      FormulaNode out;
      out.kind = FormulaNode::Kind::eq;
      auto m = std::make_shared<Term>();
      m->kind = Term::Kind::meet;
      m->lhs = n.lhs;
      m->rhs = n.rhs;
      out.lhs = std::move(m);
      out.rhs = n.lhs;
      return out;
    }
    case FormulaNode::Kind::eq:
      if (!term_in_order_signature(*n.lhs) || !term_in_order_signature(*n.rhs))
        throw Error(ErrorKind::SignatureMismatch, "translation input contains meet/join terms");
      return n;
    default: {
      FormulaNode out = n;
      out.children.clear();
      for (const auto& c : n.children) out.children.push_back(translate_node(c));
      return out;
    }
  }
}

}  // namespace

ParsedFormula parse_formula(const std::string& text) { return Parser(text).run(); }

std::string print_formula(const ParsedFormula& f) {
  std::ostringstream os;
  print_node(os, f.root, f.variables, 0);
  return os.str();
}

EvalResult evaluate(const Poset& p, const ParsedFormula& f) { return eval_closed(PosetView{p}, f); }

EvalResult evaluate(const Directoid& d, const ParsedFormula& f) {
  return eval_closed(DirectoidView{d}, f);
}

ParsedFormula translate_order_to_meet(const ParsedFormula& f) {
  ParsedFormula out;
  out.root = translate_node(f.root);
  out.variables = f.variables;
  out.free_variables = f.free_variables;
  return out;
}

std::vector<NamedFormula> load_formulas(std::istream& in) {
  std::vector<NamedFormula> out;
  std::string line, pending_name;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    std::string comment = hash == std::string::npos ? "" : line.substr(hash + 1);
    std::string body = hash == std::string::npos ? line : line.substr(0, hash);
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      size_t b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    body = trim(body);
    comment = trim(comment);
    if (body.empty()) {
      if (!comment.empty()) pending_name = comment;
      continue;
    }
    NamedFormula nf;
    nf.name = !comment.empty() ? comment
              : !pending_name.empty() ? pending_name
                                      : "line" + std::to_string(lineno);
    nf.text = body;
    nf.formula = parse_formula(body);
    out.push_back(std::move(nf));
    pending_name.clear();
  }
  return out;
}

std::vector<NamedFormula> load_formula_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FormatError, "cannot open formula file " + path);
  return load_formulas(in);
}

const std::vector<std::pair<std::string, std::string>>& axiom_catalog() {
  static const std::vector<std::pair<std::string, std::string>> catalog = {
      {"id4", "x'' = x"},
      {"id5", "(x ^ y)' ^ y' = y'"},
      {"cond6", "(forall z: ((x ^ y)' ^ z) ^ (x ^ z) = 0) -> x <= y"},
      {"qid8", "(x ^ y)' ^ y = 0 -> x ^ y = y"},
      {"qid9", "((x ^ y)' ^ y) v (y' ^ (x ^ y)) = 0 -> x ^ y = y"},
      {"id14", "z <= ((x v z) v (y v z)') ^ (y v z)"},
      {"omd1", "x v x' = 1"},
      {"omd2", "(((x v z) v (y v z)') ^ (y v z)) ^ z = z"},
      {"omd3", "(x ^ y) v ((x ^ y) v y')' = y"},
      {"od1", "x ^ y = y ^ x"},
      {"od2", "x v x' = 1"},
      {"od3", "0 v x = x"},
      {"od4", "((x ^ y') v y) v (((x ^ y') v y) v z)' = (x ^ y') v (y v (((x ^ y') v y) v z)')"},
      {"od5", "(x ^ y) v ((x ^ y) v y')' = y"},
      {"od6", "(x ^ y') v (y v (((x ^ y') v y) v z)')' = (y v (((x ^ y') v y) v z)')'"},
      {"law1", "0' = 1"},
      {"law2", "x'' = x"},
      {"law3", "1' = 0"},
      {"law4a", "x ^ x' = 0"},
      {"law4b", "x ^ 0 = 0"},
      {"law4c", "x ^ 1 = x"},
      {"law4d", "(x ^ y) v y = y"},
      {"law4e", "(x v y) ^ y = y"},
      {"law4f", "x v 1 = 1"},
      {"law5", "(x ^ y)' ^ y' = y'"},
      {"law6", "(x ^ y)' ^ y = 0 -> x ^ y = y"},
      {"law7", "x ^ x = x"},
      {"law8", "x ^ ((x ^ y) ^ z) = (x ^ y) ^ z"},
      {"remark45", "((x ^ y)' ^ y')' = y"},
  };
  return catalog;
}

const std::vector<std::string>& order_formula_battery() {
  static const std::vector<std::string> battery = {
      "x <= x",
      "0 <= x",
      "x <= 1",
      "~(x <= y) | y' <= x'",
      "x <= y -> y' <= x'",
      "x <= y & y <= z -> x <= z",
      "x <= y' -> y <= x'",
      "x'' <= x",
      "x <= x''",
      "~(x <= y) -> ~(y' <= x')",
      "x <= y | y <= x",
      "0 <= 1",
      "1 <= x -> x <= 0",
      "x <= y & y <= x | ~(x <= y) | ~(y <= x)",
      "x <= y' | y <= x'",
      "x' <= y -> y' <= x",
      "~(1 <= 0)",
      "x <= y & x <= z | ~(x <= y)",
      "0 <= x & x <= 1 & x'' <= x",
      "x <= y -> x <= y",
      "~(x <= x')",
      "x <= 0 -> x <= y",
  };
  return battery;
}

}  // namespace pomlab
