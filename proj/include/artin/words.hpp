#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "artin/errors.hpp"
#include "artin/garside.hpp"

namespace artin {

/// Conjugation convention for a^b.  The default reading is b^-1 * a * b;
/// the verification pipelines additionally run the opposite convention to
/// show the headline results do not depend on the choice.
enum class Convention {
  conjugate_left,   // a^b = b^-1 a b
  conjugate_right,  // a^b = b a b^-1
};

const char* convention_name(Convention c);

struct WordExpr;
using ExprPtr = std::shared_ptr<const WordExpr>;

/// AST of the word language.  Atoms are generators `aN`, `eps` (the empty
/// product) and names; `^k` with an integer is a power, `^name` / `^(expr)`
/// is conjugation; `*` is the (left-associative, n-ary) product.
struct WordExpr {
  enum class Kind { generator, named, product, power, conjugate };

  Kind kind = Kind::product;
  int gen_label = 0;            // generator
  std::string name;             // named
  std::vector<ExprPtr> parts;   // product (empty product = identity `eps`)
  ExprPtr base;                 // power, conjugate
  long long exponent = 0;       // power
  ExprPtr by;                   // conjugate

  static ExprPtr generator(int label);
  static ExprPtr named(std::string symbol);
  static ExprPtr product(std::vector<ExprPtr> parts);
  static ExprPtr power(ExprPtr base, long long exponent);
  static ExprPtr conjugate(ExprPtr base, ExprPtr by);

  bool structurally_equal(const WordExpr& other) const;
};

/// Parse a word expression.  Grammar:
///   expr    := term (`*` term)*
///   term    := atom (`^` integer | `^` name | `^` `(` expr `)`)*
///   atom    := `aN` | `eps` | name | `(` expr `)`
/// `^` binds tighter than `*`; whitespace is insignificant.  Errors carry
/// the byte position of the offending token.
ExprPtr parse_word(const std::string& text);

/// Canonical printing; parse(print(e)) is structurally identical to e.
std::string print_word(const ExprPtr& expr);

/// Insertion-ordered named bindings.
class Environment {
 public:
  const ExprPtr* find(const std::string& name) const;
  /// Throws duplicate_name if the name is already bound here.
  void bind(const std::string& name, ExprPtr expr);
  const std::vector<std::pair<std::string, ExprPtr>>& bindings() const {
    return bindings_;
  }

 private:
  std::vector<std::pair<std::string, ExprPtr>> bindings_;
};

/// Load a script of `let name = expr;` lines (`#` starts a line comment).
/// Later lines may reference earlier names; names that stay unresolved are
/// legal at load time (they may be bound by an outer environment) and fail
/// only at expansion.  A binding that references its own name is rejected
/// immediately as cyclic_binding.
Environment load_script(const std::string& text);

inline constexpr long long kMaxExponent = 1'000'000;
/// Guard against pathological nested powers; exceeding it is an error, not
/// truncation.
inline constexpr std::size_t kMaxExpandedLetters = std::size_t(1) << 26;

/// Expand to a flat letter sequence (no free reduction).  Name lookup tries
/// `env` first, then `fallback` if non-null.  Unbound names and binding
/// cycles are reported as unbound_name / cyclic_binding.
GeneratorWord expand(const ExprPtr& expr, const Environment& env,
                     Convention convention = Convention::conjugate_left,
                     const Environment* fallback = nullptr);

/// Free names of an expression that the environment does not bind.
std::vector<std::string> unresolved_names(const ExprPtr& expr, const Environment& env);

}  // namespace artin
