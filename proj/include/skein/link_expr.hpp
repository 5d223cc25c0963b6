#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace skein {

/// Link described algebraically: closed-form atoms and the operations the
/// Jones evaluator knows how to follow.
struct LinkExpr {
  enum class Kind { unknot, fig8, borromean, torus, split, connsum, cable };

  Kind kind = Kind::unknot;
  int p = 0, q = 0;                          // torus(p,q), cable(p,q,K)
  std::shared_ptr<const LinkExpr> a, b;      // split/connsum operands; cable uses a
  int comp_a = 0, comp_b = 0;                // 0-based components joined by connsum

  static LinkExpr unknot() { return {}; }
  static LinkExpr fig8() { return make(Kind::fig8); }
  static LinkExpr borromean() { return make(Kind::borromean); }
  /// Requires gcd(p,q) = 1.  |p| or |q| = 1 gives an unknotted curve.
  static LinkExpr torus(int p, int q);
  static LinkExpr split(LinkExpr x, LinkExpr y);
  static LinkExpr connsum(LinkExpr x, LinkExpr y, int comp_x = 0, int comp_y = 0);
  /// (p,q)-cable of a knot expression.
  static LinkExpr cable(int p, int q, LinkExpr knot);

 private:
  static LinkExpr make(Kind k) {
    LinkExpr e;
    e.kind = k;
    return e;
  }
};

class LinkParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Number of link components.
int components(const LinkExpr& e);

/// Parses `unknot`, `fig8`, `borromean`, `torus(p,q)`, `split(a,b)`,
/// `connsum(a,b)`, `connsum(a,b,i,j)` (1-based components), `cable(p,q,K)`.
LinkExpr parse_link(const std::string& text);
/// Canonical text form; parse_link(to_string(e)) reproduces e.
std::string to_string(const LinkExpr& e);

}  // namespace skein
