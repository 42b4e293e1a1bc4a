#include "hedgeprop/parse.hpp"

#include <cctype>
#include <vector>

#include "hedgeprop/errors.hpp"

namespace hedgeprop {

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' || c == '*';
}

struct Token {
  enum Kind { name, lparen, rparen, comma, arrow, end } kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      out.push_back({Token::lparen, "("});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::rparen, ")"});
      ++i;
    } else if (c == ',') {
      out.push_back({Token::comma, ","});
      ++i;
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Token::arrow, "->"});
      i += 2;
    } else if (is_name_char(c)) {
      size_t j = i;
      while (j < s.size() && is_name_char(s[j])) ++j;
      out.push_back({Token::name, s.substr(i, j - i)});
      i = j;
    } else {
      fail(errc::parse_error, "unexpected character '" + std::string(1, c) + "' in '" + s + "'");
    }
  }
  out.push_back({Token::end, ""});
  return out;
}

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text), tokens_(tokenize(text)) {}

  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }
  void expect(Token::Kind k, const char* what) {
    if (peek().kind != k)
      fail(errc::parse_error, std::string("expected ") + what + " near '" + peek().text +
                                  "' in '" + text_ + "'");
    ++pos_;
  }
  void expect_end() {
    if (peek().kind != Token::end)
      fail(errc::parse_error, "trailing input '" + peek().text + "' in '" + text_ + "'");
  }

 private:
  const std::string& text_;
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

uint32_t parse_var_id(const std::string& digits, const std::string& name) {
  uint32_t id = 0;
  for (char c : digits) {
    if (id > 1000000u) fail(errc::parse_error, "variable id overflow in '" + name + "'");
    id = id * 10 + static_cast<uint32_t>(c - '0');
  }
  if (id == 0) fail(errc::parse_error, "variable ids start at 1 ('" + name + "')");
  return id;
}

void check_not_lambda(const std::string& name) {
  if (name == "_lambda_")
    fail(errc::parse_error,
         "'_lambda_' is accepted only in substitution display output, not as input");
}

Term parse_term_at(Cursor& cur, const Signature& sig);

std::vector<Term> parse_term_args(Cursor& cur, const Signature& sig) {
  std::vector<Term> args;
  cur.expect(Token::lparen, "'('");
  args.push_back(parse_term_at(cur, sig));
  while (cur.peek().kind == Token::comma) {
    cur.take();
    args.push_back(parse_term_at(cur, sig));
  }
  cur.expect(Token::rparen, "')'");
  return args;
}

Term parse_term_at(Cursor& cur, const Signature& sig) {
  if (cur.peek().kind != Token::name)
    fail(errc::parse_error, "expected a symbol or variable near '" + cur.peek().text + "'");
  std::string name = cur.take().text;
  check_not_lambda(name);
  if (auto v = parse_variable_name(name)) {
    if (v->kind != VarKind::term)
      fail(errc::parse_error, "only z-variables may occur in concrete terms ('" + name + "')");
    return make_var_term(v->id);
  }
  int sym = sig.index_of(name);
  if (sym < 0) fail(errc::unknown_symbol, "'" + name + "'");
  int rank = sig.at(sym).rank;
  std::vector<Term> args;
  if (cur.peek().kind == Token::lparen) args = parse_term_args(cur, sig);
  if (static_cast<int>(args.size()) != rank)
    fail(errc::arity_mismatch, "'" + name + "' expects " + std::to_string(rank) +
                                   " arguments, got " + std::to_string(args.size()));
  return make_term(sym, std::move(args));
}

Hedge parse_hedge_at(Cursor& cur, const LanguagePair& lp) {
  if (cur.peek().kind != Token::name)
    fail(errc::parse_error, "expected a symbol or variable near '" + cur.peek().text + "'");
  std::string name = cur.take().text;
  check_not_lambda(name);
  if (auto v = parse_variable_name(name)) return make_leaf(v->kind, v->id);
  int sym = lp.merged_index(name);
  if (sym < 0) fail(errc::unknown_symbol, "'" + name + "' is not a merged symbol");
  std::vector<Hedge> kids;
  if (cur.peek().kind == Token::lparen) {
    cur.take();
    kids.push_back(parse_hedge_at(cur, lp));
    while (cur.peek().kind == Token::comma) {
      cur.take();
      kids.push_back(parse_hedge_at(cur, lp));
    }
    cur.expect(Token::rparen, "')'");
  }
  return make_hedge(sym, std::move(kids));
}

}  // namespace

bool is_valid_symbol_name(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name)
    if (!is_name_char(c)) return false;
  return true;
}

std::optional<Variable> parse_variable_name(const std::string& name) {
  if (name.size() < 2) return std::nullopt;
  VarKind kind;
  switch (name[0]) {
    case 'x': kind = VarKind::constant; break;
    case 'z': kind = VarKind::term; break;
    case 'Z': kind = VarKind::hedge; break;
    default: return std::nullopt;
  }
  for (size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
  return Variable{kind, parse_var_id(name.substr(1), name)};
}

bool is_reserved_name(const std::string& name) {
  return name == "_lambda_" || parse_variable_name(name).has_value();
}

Term parse_term(const std::string& text, const Signature& sig) {
  Cursor cur(text);
  Term t = parse_term_at(cur, sig);
  cur.expect_end();
  return t;
}

Hedge parse_hedge(const std::string& text, const LanguagePair& lp) {
  Cursor cur(text);
  Hedge h = parse_hedge_at(cur, lp);
  cur.expect_end();
  validate_hedge(h, lp);
  return h;
}

Justification parse_justification(const std::string& text, const LanguagePair& lp) {
  Cursor cur(text);
  Hedge lhs = parse_hedge_at(cur, lp);
  cur.expect(Token::arrow, "'->'");
  Hedge rhs = parse_hedge_at(cur, lp);
  cur.expect_end();
  validate_hedge(lhs, lp);
  validate_hedge(rhs, lp);
  return Justification::make(std::move(lhs), std::move(rhs));
}

}  // namespace hedgeprop
