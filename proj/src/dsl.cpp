#include "gzero/dsl.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "gzero/symset.hpp"

namespace gzero::dsl {

bool operator==(const Node& a, const Node& b) {
  return a.kind == b.kind && a.text == b.text && a.kids == b.kids &&
         (a.kind != NodeKind::Interval || a.iv == b.iv);
}

bool operator==(const Statement& a, const Statement& b) {
  return a.kind == b.kind && a.name == b.name && a.args == b.args && a.check == b.check;
}

namespace {

const std::map<std::string, int>& arities() {
  static const std::map<std::string, int> table{
      {"member", 2}, {"leq", 2},   {"equiv", 2}, {"proper", 1}, {"balanced", 1}, {"selfadj", 1},
      {"inspace", 2}, {"pair", 2}, {"gsum", 2},  {"nbhd", 3},   {"apply", 2},    {"vecmat", 2},
      {"mul", 2},    {"entry", 3}, {"contl", 3}, {"contr", 3},  {"m1", 3},       {"m2", 3},
      {"eval", 1},
  };
  return table;
}

struct Token {
  enum Kind { Number, Ident, Symbol, End } kind = End;
  std::string text;
  int column = 0;
  bool glued = false;  // no whitespace before the token
};

std::vector<Token> tokenize(const std::string& line, int lineNo) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t last = std::string::npos;  // end of the previous token
  auto push = [&](Token::Kind kind, std::string text, int col) {
    out.push_back({kind, std::move(text), col, last == static_cast<std::size_t>(col - 1)});
  };
  while (i < line.size()) {
    const char c = line[i];
    const int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      push(Token::Number, line.substr(i, j - i), col);
      i = last = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_' || line[j] == '\'')) {
        ++j;
      }
      push(Token::Ident, line.substr(i, j - i), col);
      i = last = j;
    } else if (line.compare(i, 2, "..") == 0) {
      push(Token::Symbol, "..", col);
      i = last = i + 2;
    } else if (std::string("()[]{},;:=+-*/").find(c) != std::string::npos) {
      push(Token::Symbol, std::string(1, c), col);
      i = last = i + 1;
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", lineNo, col);
    }
  }
  out.push_back({Token::End, "", static_cast<int>(line.size()) + 1, false});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, int line) : t_(std::move(toks)), line_(line) {}

  const Token& peek(std::size_t k = 0) const { return t_[std::min(pos_ + k, t_.size() - 1)]; }
  bool at(const std::string& sym) const { return peek().kind == Token::Symbol && peek().text == sym; }
  bool atEnd() const { return peek().kind == Token::End; }

  [[noreturn]] void fail(const std::string& msg, const Token& tok) const {
    throw SyntaxError(msg, line_, tok.column);
  }

  Token take() { return t_[pos_ < t_.size() - 1 ? pos_++ : pos_]; }

  void expect(const std::string& sym) {
    if (!at(sym)) fail("expected '" + sym + "'" + found(), peek());
    take();
  }

  std::string found() const {
    return atEnd() ? " at end of line" : " but found '" + peek().text + "'";
  }

  Node make(NodeKind kind, const Token& tok, std::string text = {}) const {
    Node n;
    n.kind = kind;
    n.text = std::move(text);
    n.line = line_;
    n.column = tok.column;
    return n;
  }

  Node expr() {
    Node left = term();
    while (at("+") || at("-")) {
      Token op = take();
      Node b = make(NodeKind::Binary, op, op.text);
      b.kids = {std::move(left), term()};
      left = std::move(b);
    }
    return left;
  }

  Node term() {
    Node left = factor();
    while (at("*")) {
      Token op = take();
      Node b = make(NodeKind::Binary, op, "*");
      b.kids = {std::move(left), factor()};
      left = std::move(b);
    }
    return left;
  }

  Node factor() {
    if (at("-")) {
      Token op = take();
      Node n = make(NodeKind::Negate, op);
      n.kids.push_back(factor());
      return n;
    }
    return primary();
  }

  Point bound(bool allowNegInf) {
    const Token& tok = peek();
    bool neg = false;
    if (at("-")) {
      take();
      neg = true;
    }
    if (peek().kind == Token::Ident && peek().text == "inf") {
      take();
      if (neg != allowNegInf) fail("misplaced infinity in interval", tok);
      return neg ? kNegInf : kPosInf;
    }
    if (peek().kind != Token::Number) fail("expected an interval bound" + found(), peek());
    Point v = std::stoll(take().text);
    return neg ? -v : v;
  }

  Node intervalRest(const Token& open, Point lo) {
    expect("..");
    Point hi = bound(false);
    if (hi == kPosInf) {
      expect(")");
    } else {
      expect("]");
    }
    if (lo == kNegInf && open.text != "(") fail("an infinite lower end needs '('", open);
    if (lo != kNegInf && open.text != "[") fail("a finite lower end needs '['", open);
    Node n = make(NodeKind::Interval, open);
    n.iv = {lo, hi};
    return n;
  }

  std::vector<Node> items(const std::string& close) {
    std::vector<Node> out;
    if (at(close)) {
      take();
      return out;
    }
    while (true) {
      Node first = expr();
      if (at(":") && close == "}") {
        Token colon = take();
        Node e = make(NodeKind::Entry, colon);
        e.kids = {std::move(first), expr()};
        out.push_back(std::move(e));
      } else if ((at("=") || at(":")) && first.kind == NodeKind::Ident) {
        Token sep = take();
        Node l = make(NodeKind::Labeled, sep, first.text + sep.text);
        l.kids.push_back(expr());
        out.push_back(std::move(l));
      } else {
        out.push_back(std::move(first));
      }
      if (at(",") || at(";")) {
        take();
        continue;
      }
      if (!at(close)) fail("expected ',' or '" + close + "'" + found(), peek());
      take();
      return out;
    }
  }

  Node primary() {
    const Token tok = peek();
    if (tok.kind == Token::Number) {
      take();
      std::string text = tok.text;
      if (at("/") && peek(1).kind == Token::Number) {
        take();
        text += "/" + take().text;
      }
      return make(NodeKind::Number, tok, text);
    }
    if (tok.kind == Token::Ident) {
      take();
      if (tok.text == "mat") return primary();
      if (at("(") && peek().glued) {
        take();
        Node n = make(NodeKind::Call, tok, tok.text);
        n.kids = items(")");
        return n;
      }
      if (at("{") && peek().glued) {
        take();
        Node n = make(NodeKind::Braced, tok, tok.text);
        n.kids = items("}");
        return n;
      }
      return make(NodeKind::Ident, tok, tok.text);
    }
    if (at("{")) {
      take();
      Node n = make(NodeKind::Braced, tok);
      n.kids = items("}");
      return n;
    }
    if (at("[")) {
      take();
      if (peek().kind == Token::Number && peek(1).kind == Token::Symbol && peek(1).text == "..") {
        return intervalRest(tok, bound(false));
      }
      if (at("-") && peek(1).kind == Token::Number && peek(2).kind == Token::Symbol &&
          peek(2).text == "..") {
        return intervalRest(tok, bound(false));
      }
      Node n = make(NodeKind::List, tok);
      n.kids = items("]");
      return n;
    }
    if (at("(")) {
      take();
      if (at("-") && peek(1).kind == Token::Ident && peek(1).text == "inf") {
        return intervalRest(tok, bound(true));
      }
      Node first = expr();
      if (at(")")) {
        take();
        return first;
      }
      Node n = make(NodeKind::Pair, tok);
      n.kids.push_back(std::move(first));
      while (at(",")) {
        take();
        n.kids.push_back(expr());
      }
      expect(")");
      return n;
    }
    fail(atEnd() ? "expected an expression at end of line" : "unexpected '" + tok.text + "'", tok);
  }

  Node universe() {
    Node u = primary();
    if (peek().kind == Token::Ident && peek().text == "x") {
      Token op = take();
      Node b = make(NodeKind::Binary, op, "x");
      b.kids = {std::move(u), primary()};
      return b;
    }
    return u;
  }

  Statement statement() {
    Statement st;
    st.line = line_;
    const Token head = peek();
    st.column = head.column;
    if (head.kind != Token::Ident) fail("expected a statement", head);
    take();
    if (head.text == "let") {
      if (peek().kind != Token::Ident) fail("expected a name after 'let'", peek());
      st.kind = StatementKind::Let;
      st.name = take().text;
      expect("=");
      st.args.push_back(expr());
    } else if (head.text == "universe") {
      st.kind = StatementKind::Universe;
      st.name = "universe";
      st.args.push_back(universe());
    } else {
      Token verb = head;
      if (head.text == "check") {
        if (peek().kind != Token::Ident) fail("expected a query after 'check'", peek());
        verb = take();
        st.check = true;
      }
      const int n = queryArity(verb.text);
      if (n < 0) fail("unknown query '" + verb.text + "'", verb);
      st.kind = StatementKind::Query;
      st.name = verb.text;
      for (int i = 0; i < n; ++i) {
        if (atEnd()) {
          fail("'" + verb.text + "' expects " + std::to_string(n) + " argument" + (n == 1 ? "" : "s") +
                   ", missing argument " + std::to_string(i + 1),
               peek());
        }
        st.args.push_back(expr());
      }
    }
    if (!atEnd()) fail("unexpected '" + peek().text + "' after statement", peek());
    return st;
  }

 private:
  std::vector<Token> t_;
  std::size_t pos_ = 0;
  int line_;
};

int precedence(const Node& n) {
  if (n.kind != NodeKind::Binary) return 3;
  return n.text == "*" ? 2 : 1;
}

std::string joined(const std::vector<Node>& kids) {
  std::string s;
  for (std::size_t i = 0; i < kids.size(); ++i) s += (i ? ", " : "") + print(kids[i]);
  return s;
}

}  // namespace

int queryArity(const std::string& verb) {
  auto it = arities().find(verb);
  return it == arities().end() ? -1 : it->second;
}

const std::vector<std::string>& queryVerbs() {
  static const std::vector<std::string> verbs = [] {
    std::vector<std::string> v;
    for (const auto& [k, n] : arities()) v.push_back(k);
    return v;
  }();
  return verbs;
}

std::vector<Statement> parse(const std::string& text) {
  std::vector<Statement> out;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    auto toks = tokenize(line, lineNo);
    if (toks.size() == 1) continue;
    Parser p(std::move(toks), lineNo);
    out.push_back(p.statement());
  }
  return out;
}

Node parseExpression(const std::string& text) {
  Parser p(tokenize(text, 1), 1);
  Node n = p.expr();
  if (!p.atEnd()) p.fail("unexpected '" + p.peek().text + "' after expression", p.peek());
  return n;
}

std::string print(const Node& n) {
  switch (n.kind) {
    case NodeKind::Number:
    case NodeKind::Ident: return n.text;
    case NodeKind::Interval: return intervalStr(n.iv);
    case NodeKind::Call: return n.text + "(" + joined(n.kids) + ")";
    case NodeKind::Braced: return n.text + "{" + joined(n.kids) + "}";
    case NodeKind::List: return "[" + joined(n.kids) + "]";
    case NodeKind::Pair: return "(" + joined(n.kids) + ")";
    case NodeKind::Entry: return print(n.kids[0]) + ":" + print(n.kids[1]);
    case NodeKind::Labeled: return n.text + print(n.kids[0]);
    case NodeKind::Negate: {
      const std::string k = print(n.kids[0]);
      return precedence(n.kids[0]) < 3 ? "-(" + k + ")" : "-" + k;
    }
    case NodeKind::Binary: {
      if (n.text == "x") return print(n.kids[0]) + " x " + print(n.kids[1]);
      const int p = precedence(n);
      std::string l = print(n.kids[0]), r = print(n.kids[1]);
      if (precedence(n.kids[0]) < p) l = "(" + l + ")";
      if (precedence(n.kids[1]) <= p) r = "(" + r + ")";
      return l + " " + n.text + " " + r;
    }
  }
  return "?";
}

std::string print(const Statement& s) {
  switch (s.kind) {
    case StatementKind::Let: return "let " + s.name + " = " + print(s.args[0]);
    case StatementKind::Universe: return "universe " + print(s.args[0]);
    case StatementKind::Query: break;
  }
  std::string out = (s.check ? "check " : "") + s.name;
  for (const auto& a : s.args) {
    const bool wrap = a.kind == NodeKind::Binary || a.kind == NodeKind::Negate;
    out += " " + (wrap ? "(" + print(a) + ")" : print(a));
  }
  return out;
}

std::string print(const std::vector<Statement>& program) {
  std::string out;
  for (const auto& s : program) out += print(s) + "\n";
  return out;
}

}  // namespace gzero::dsl
