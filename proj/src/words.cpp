#include "artin/words.hpp"

#include <cassert>
#include <cctype>
#include <set>
#include <sstream>

namespace artin {

const char* convention_name(Convention c) {
  return c == Convention::conjugate_left ? "a^b = b^-1*a*b" : "a^b = b*a*b^-1";
}

ExprPtr WordExpr::generator(int label) {
  auto e = std::make_shared<WordExpr>();
  e->kind = Kind::generator;
  e->gen_label = label;
  return e;
}

ExprPtr WordExpr::named(std::string symbol) {
  auto e = std::make_shared<WordExpr>();
  e->kind = Kind::named;
  e->name = std::move(symbol);
  return e;
}

ExprPtr WordExpr::product(std::vector<ExprPtr> parts) {
  auto e = std::make_shared<WordExpr>();
  e->kind = Kind::product;
  e->parts = std::move(parts);
  return e;
}

ExprPtr WordExpr::power(ExprPtr base, long long exponent) {
  auto e = std::make_shared<WordExpr>();
  e->kind = Kind::power;
  e->base = std::move(base);
  e->exponent = exponent;
  return e;
}

ExprPtr WordExpr::conjugate(ExprPtr base, ExprPtr by) {
  auto e = std::make_shared<WordExpr>();
  e->kind = Kind::conjugate;
  e->base = std::move(base);
  e->by = std::move(by);
  return e;
}

bool WordExpr::structurally_equal(const WordExpr& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::generator:
      return gen_label == other.gen_label;
    case Kind::named:
      return name == other.name;
    case Kind::product: {
      if (parts.size() != other.parts.size()) return false;
      for (std::size_t i = 0; i < parts.size(); ++i)
        if (!parts[i]->structurally_equal(*other.parts[i])) return false;
      return true;
    }
    case Kind::power:
      return exponent == other.exponent && base->structurally_equal(*other.base);
    case Kind::conjugate:
      return base->structurally_equal(*other.base) && by->structurally_equal(*other.by);
  }
  return false;
}

// ---------------------------------------------------------------------------
// lexer / parser

namespace {

struct Token {
  enum class Kind { name, integer, star, caret, lparen, rparen, let, equals, semicolon, end };
  Kind kind = Kind::end;
  std::string text;
  long long value = 0;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {  // comment to end of line
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        continue;
      }
      break;
    }
    Token t;
    t.pos = pos_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    switch (c) {
      case '*': t.kind = Token::Kind::star; ++pos_; return t;
      case '^': t.kind = Token::Kind::caret; ++pos_; return t;
      case '(': t.kind = Token::Kind::lparen; ++pos_; return t;
      case ')': t.kind = Token::Kind::rparen; ++pos_; return t;
      case '=': t.kind = Token::Kind::equals; ++pos_; return t;
      case ';': t.kind = Token::Kind::semicolon; ++pos_; return t;
      default: break;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      if (c == '-') ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail(Errc::syntax_error, "stray `-`", start);
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      t.kind = Token::Kind::integer;
      t.text = text_.substr(start, pos_ - start);
      try {
        t.value = std::stoll(t.text);
      } catch (const std::exception&) {
        fail(Errc::syntax_error, "integer out of range: " + t.text, start);
      }
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      t.text = text_.substr(start, pos_ - start);
      t.kind = t.text == "let" ? Token::Kind::let : Token::Kind::name;
      return t;
    }
    fail(Errc::syntax_error, std::string("unexpected character `") + c + "`", pos_);
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) { advance(); }

  ExprPtr parse_expression() {
    std::vector<ExprPtr> parts;
    parts.push_back(parse_term());
    while (cur_.kind == Token::Kind::star) {
      advance();
      parts.push_back(parse_term());
    }
    if (parts.size() == 1) return parts[0];
    return WordExpr::product(std::move(parts));
  }

  const Token& current() const { return cur_; }
  void advance() { cur_ = lexer_.next(); }

  void expect(Token::Kind kind, const char* what) {
    if (cur_.kind != kind)
      fail(Errc::syntax_error, std::string("expected ") + what, cur_.pos);
    advance();
  }

  /// Named atom or generator `aN`; `eps` is the empty product.
  static ExprPtr atom_from_name(const std::string& name, std::size_t pos) {
    if (name == "eps") return WordExpr::product({});
    if (name.size() >= 2 && name[0] == 'a' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
      if (name[1] == '0')
        fail(Errc::syntax_error, "generator labels start at 1", pos);
      long long label = 0;
      try {
        label = std::stoll(name.substr(1));
      } catch (const std::exception&) {
        fail(Errc::syntax_error, "generator label out of range", pos);
      }
      if (label < 1 || label > 1'000'000'000)
        fail(Errc::syntax_error, "generator label out of range", pos);
      return WordExpr::generator(static_cast<int>(label));
    }
    return WordExpr::named(name);
  }

 private:
  ExprPtr parse_term() {
    ExprPtr base = parse_atom();
    while (cur_.kind == Token::Kind::caret) {
      advance();
      if (cur_.kind == Token::Kind::integer) {
        base = WordExpr::power(std::move(base), cur_.value);
        advance();
      } else if (cur_.kind == Token::Kind::name) {
        base = WordExpr::conjugate(std::move(base), atom_from_name(cur_.text, cur_.pos));
        advance();
      } else if (cur_.kind == Token::Kind::lparen) {
        advance();
        ExprPtr by = parse_expression();
        expect(Token::Kind::rparen, "`)`");
        base = WordExpr::conjugate(std::move(base), std::move(by));
      } else {
        fail(Errc::syntax_error, "expected integer, name or `(` after `^`", cur_.pos);
      }
    }
    return base;
  }

  ExprPtr parse_atom() {
    if (cur_.kind == Token::Kind::name) {
      ExprPtr e = atom_from_name(cur_.text, cur_.pos);
      advance();
      return e;
    }
    if (cur_.kind == Token::Kind::lparen) {
      advance();
      ExprPtr e = parse_expression();
      expect(Token::Kind::rparen, "`)`");
      return e;
    }
    fail(Errc::syntax_error, "expected a generator, name, `eps` or `(`", cur_.pos);
  }

  Lexer lexer_;
  Token cur_;
};

}  // namespace

ExprPtr parse_word(const std::string& text) {
  Parser parser(text);
  ExprPtr e = parser.parse_expression();
  if (parser.current().kind != Token::Kind::end)
    fail(Errc::syntax_error, "trailing input after expression", parser.current().pos);
  return e;
}

// ---------------------------------------------------------------------------
// printing

namespace {

void print_rec(const WordExpr& e, std::ostringstream& out) {
  // A `^` base needs parens when it is a nonempty product (lower precedence)
  // or itself a power/conjugate (keeps chains like (a1^-1)^b readable).
  auto print_base = [&out](const WordExpr& child) {
    bool parens = (child.kind == WordExpr::Kind::product && !child.parts.empty()) ||
                  child.kind == WordExpr::Kind::power ||
                  child.kind == WordExpr::Kind::conjugate;
    if (parens) out << "(";
    print_rec(child, out);
    if (parens) out << ")";
  };
  switch (e.kind) {
    case WordExpr::Kind::generator:
      out << "a" << e.gen_label;
      return;
    case WordExpr::Kind::named:
      out << e.name;
      return;
    case WordExpr::Kind::product: {
      if (e.parts.empty()) {
        out << "eps";
        return;
      }
      for (std::size_t i = 0; i < e.parts.size(); ++i) {
        if (i) out << " * ";
        const WordExpr& part = *e.parts[i];
        bool parens = part.kind == WordExpr::Kind::product && !part.parts.empty();
        if (parens) out << "(";
        print_rec(part, out);
        if (parens) out << ")";
      }
      return;
    }
    case WordExpr::Kind::power: {
      print_base(*e.base);
      out << "^" << e.exponent;
      return;
    }
    case WordExpr::Kind::conjugate: {
      print_base(*e.base);
      out << "^";
      const WordExpr& by = *e.by;
      if (by.kind == WordExpr::Kind::named) {
        out << by.name;
      } else if (by.kind == WordExpr::Kind::generator) {
        out << "a" << by.gen_label;
      } else {
        out << "(";
        print_rec(by, out);
        out << ")";
      }
      return;
    }
  }
}

}  // namespace

std::string print_word(const ExprPtr& expr) {
  assert(expr);
  std::ostringstream out;
  print_rec(*expr, out);
  return out.str();
}

// ---------------------------------------------------------------------------
// environment / scripts

const ExprPtr* Environment::find(const std::string& name) const {
  for (const auto& [n, e] : bindings_)
    if (n == name) return &e;
  return nullptr;
}

void Environment::bind(const std::string& name, ExprPtr expr) {
  if (name == "eps" ||
      (name.size() >= 2 && name[0] == 'a' &&
       name.find_first_not_of("0123456789", 1) == std::string::npos))
    fail(Errc::duplicate_name, "`" + name + "` is reserved");
  if (find(name)) fail(Errc::duplicate_name, "`" + name + "` is already bound");
  bindings_.emplace_back(name, std::move(expr));
}

namespace {

void collect_names(const WordExpr& e, std::set<std::string>& out) {
  switch (e.kind) {
    case WordExpr::Kind::generator:
      return;
    case WordExpr::Kind::named:
      out.insert(e.name);
      return;
    case WordExpr::Kind::product:
      for (const auto& p : e.parts) collect_names(*p, out);
      return;
    case WordExpr::Kind::power:
      collect_names(*e.base, out);
      return;
    case WordExpr::Kind::conjugate:
      collect_names(*e.base, out);
      collect_names(*e.by, out);
      return;
  }
}

}  // namespace

std::vector<std::string> unresolved_names(const ExprPtr& expr, const Environment& env) {
  // names reachable through bindings count as resolved; walk them transitively
  // so a binding's own free names surface too
  std::set<std::string> frontier;
  collect_names(*expr, frontier);
  std::set<std::string> visited;
  std::set<std::string> unresolved;
  while (!frontier.empty()) {
    std::set<std::string> next;
    for (const auto& n : frontier) {
      if (!visited.insert(n).second) continue;
      if (const ExprPtr* bound = env.find(n))
        collect_names(**bound, next);
      else
        unresolved.insert(n);
    }
    frontier = std::move(next);
  }
  return {unresolved.begin(), unresolved.end()};
}

Environment load_script(const std::string& text) {
  Environment env;
  Parser parser(text);
  while (parser.current().kind != Token::Kind::end) {
    std::size_t let_pos = parser.current().pos;
    if (parser.current().kind != Token::Kind::let)
      fail(Errc::syntax_error, "expected `let`", let_pos);
    parser.advance();
    if (parser.current().kind != Token::Kind::name)
      fail(Errc::syntax_error, "expected a name after `let`", parser.current().pos);
    std::string name = parser.current().text;
    std::size_t name_pos = parser.current().pos;
    parser.advance();
    parser.expect(Token::Kind::equals, "`=`");
    ExprPtr expr = parser.parse_expression();
    if (parser.current().kind != Token::Kind::semicolon)
      fail(Errc::syntax_error, "expected `;`", parser.current().pos);
    parser.advance();
    std::set<std::string> used;
    collect_names(*expr, used);
    if (used.count(name))
      fail(Errc::cyclic_binding, "`" + name + "` refers to itself", name_pos);
    env.bind(name, std::move(expr));
  }
  return env;
}

// ---------------------------------------------------------------------------
// expansion

namespace {

struct Expander {
  const Environment& env;
  const Environment* fallback;
  Convention convention;
  std::vector<std::string> active;  // named bindings being expanded
  GeneratorWord out;

  void guard_size(std::size_t extra) {
    if (out.size() + extra > kMaxExpandedLetters)
      fail(Errc::expansion_too_large,
           "expansion exceeds " + std::to_string(kMaxExpandedLetters) + " letters");
  }

  void emit(const WordExpr& e, bool inverted) {
    switch (e.kind) {
      case WordExpr::Kind::generator:
        guard_size(1);
        out.push_back(Letter{e.gen_label, inverted ? -1 : +1});
        return;
      case WordExpr::Kind::named: {
        const ExprPtr* bound = env.find(e.name);
        if (!bound && fallback) bound = fallback->find(e.name);
        if (!bound) fail(Errc::unbound_name, "`" + e.name + "` is not bound");
        for (const auto& a : active)
          if (a == e.name)
            fail(Errc::cyclic_binding, "`" + e.name + "` is defined in terms of itself");
        active.push_back(e.name);
        emit(**bound, inverted);
        active.pop_back();
        return;
      }
      case WordExpr::Kind::product: {
        if (!inverted) {
          for (const auto& p : e.parts) emit(*p, false);
        } else {
          for (auto it = e.parts.rbegin(); it != e.parts.rend(); ++it) emit(**it, true);
        }
        return;
      }
      case WordExpr::Kind::power: {
        long long k = e.exponent;
        if (k > kMaxExponent || k < -kMaxExponent)
          fail(Errc::exponent_out_of_range,
               "|exponent| must be at most " + std::to_string(kMaxExponent));
        // (x^k)^-1 = (x^-1)^k, so a negative exponent flips the base sign
        bool base_inverted = (k < 0) != inverted;
        long long reps = k < 0 ? -k : k;
        for (long long r = 0; r < reps; ++r) emit(*e.base, base_inverted);
        return;
      }
      case WordExpr::Kind::conjugate: {
        // a^b = b^-1 a b (left convention) or b a b^-1 (right convention);
        // inversion swaps the inner signs but not the sandwich order:
        // (b^-1 a b)^-1 = b^-1 a^-1 b.
        bool left = convention == Convention::conjugate_left;
        emit(*e.by, left);
        emit(*e.base, inverted);
        emit(*e.by, !left);
        return;
      }
    }
  }
};

}  // namespace

GeneratorWord expand(const ExprPtr& expr, const Environment& env, Convention convention,
                     const Environment* fallback) {
  assert(expr);
  Expander ex{env, fallback, convention, {}, {}};
  ex.emit(*expr, false);
  return ex.out;
}

}  // namespace artin
