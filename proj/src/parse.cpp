#include "jetflow/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "jetflow/generators.hpp"

namespace jetflow {
namespace {

struct Token {
  enum Kind { kNumber, kIdent, kOp, kEnd } kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
    if (i_ >= s_.size()) {
      tok_ = {Token::kEnd, "", i_};
      return;
    }
    std::size_t start = i_;
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[i_])))
        ++i_;
      tok_ = {Token::kNumber, s_.substr(start, i_ - start), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
              s_[i_] == '_'))
        ++i_;
      tok_ = {Token::kIdent, s_.substr(start, i_ - start), start};
      return;
    }
    if (std::string("+-*/^()").find(c) != std::string::npos) {
      ++i_;
      tok_ = {Token::kOp, std::string(1, c), start};
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token tok_{Token::kEnd, "", 0};
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Expression run() {
    Expression e = expr();
    if (lex_.peek().kind != Token::kEnd)
      throw ParseError("trailing input after expression", lex_.peek().pos);
    return e;
  }

 private:
  Lexer lex_;

  bool eat_op(const char* op) {
    if (lex_.peek().kind == Token::kOp && lex_.peek().text == op) {
      lex_.take();
      return true;
    }
    return false;
  }

  void expect_op(const char* op) {
    if (!eat_op(op))
      throw ParseError(std::string("expected '") + op + "'", lex_.peek().pos);
  }

  Expression expr() {
    Expression e = term();
    for (;;) {
      if (eat_op("+"))
        e += term();
      else if (eat_op("-"))
        e -= term();
      else
        return e;
    }
  }

  Expression term() {
    Expression e = unary();
    for (;;) {
      if (eat_op("*")) {
        e *= unary();
      } else if (eat_op("/")) {
        Expression d = unary();
        if (d.is_zero())
          throw ParseError("division by zero", lex_.peek().pos);
        e /= d;
      } else {
        return e;
      }
    }
  }

  Expression unary() {
    if (eat_op("-")) return -unary();
    return power();
  }

  Expression power() {
    Expression base = primary();
    if (!eat_op("^")) return base;
    auto [p, q] = exponent();
    if (q == 1) return base.pow(p);
    if (q != 2 && q != 3 && q != 5)
      throw ParseError("fractional exponent denominator must be 2, 3, or 5",
                       lex_.peek().pos);
    return Expression::radical_root(base, static_cast<int>(q)).pow(p);
  }

  long take_integer() {
    const Token& t = lex_.peek();
    if (t.kind != Token::kNumber)
      throw ParseError("expected an integer", t.pos);
    long v = std::stol(lex_.take().text);
    return v;
  }

  // NUMBER | '(' ['-'] NUMBER ['/' NUMBER] ')'
  std::pair<long, long> exponent() {
    if (lex_.peek().kind == Token::kNumber) return {take_integer(), 1};
    expect_op("(");
    bool neg = eat_op("-");
    long p = take_integer();
    long q = 1;
    if (eat_op("/")) q = take_integer();
    expect_op(")");
    if (q <= 0) throw ParseError("exponent denominator must be positive",
                                 lex_.peek().pos);
    return {neg ? -p : p, q};
  }

  Expression primary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Token::kNumber: {
        Token tok = lex_.take();
        return Expression(mpq_class(tok.text));
      }
      case Token::kIdent: {
        Token tok = lex_.take();
        auto slot = resolve_identifier(tok.text);
        if (!slot)
          throw ParseError("unknown identifier '" + tok.text + "'", tok.pos);
        return Expression::variable(*slot);
      }
      case Token::kOp:
        if (t.text == "(") {
          lex_.take();
          Expression e = expr();
          expect_op(")");
          return e;
        }
        break;
      case Token::kEnd:
        break;
    }
    throw ParseError("expected a number, identifier, or '('", t.pos);
  }
};

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

Expression parse_expression(const std::string& text,
                            const std::vector<std::string>& params) {
  for (const auto& p : params) ParamRegistry::instance().intern(p);
  return Parser(text).run();
}

SourceFile read_source_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  SourceFile out;
  std::ostringstream body;
  std::string line;
  while (std::getline(in, line)) {
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    if (s.rfind("params:", 0) == 0) {
      std::string list = s.substr(7);
      std::string cur;
      for (char c : list + ",") {
        if (c == ',' || c == ' ' || c == '\t') {
          if (!cur.empty()) out.params.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      continue;
    }
    if (s.rfind("dx:", 0) == 0) {
      std::string v = strip(s.substr(3));
      out.apply_dx = (v == "1" || v == "yes" || v == "true");
      continue;
    }
    body << s << " ";
  }
  out.expr_text = strip(body.str());
  if (out.expr_text.empty()) throw Error("no expression in '" + path + "'");
  return out;
}

}  // namespace jetflow
