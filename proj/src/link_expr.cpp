#include "skein/link_expr.hpp"

#include <cctype>
#include <numeric>
#include <vector>

namespace skein {

LinkExpr LinkExpr::torus(int p, int q) {
  if (p == 0 || q == 0 || std::gcd(p, q) != 1)
    throw std::invalid_argument("torus(" + std::to_string(p) + "," + std::to_string(q) + "): need gcd(p,q) = 1");
  LinkExpr e = make(Kind::torus);
  e.p = p;
  e.q = q;
  return e;
}

LinkExpr LinkExpr::split(LinkExpr x, LinkExpr y) {
  LinkExpr e = make(Kind::split);
  e.a = std::make_shared<const LinkExpr>(std::move(x));
  e.b = std::make_shared<const LinkExpr>(std::move(y));
  return e;
}

LinkExpr LinkExpr::connsum(LinkExpr x, LinkExpr y, int comp_x, int comp_y) {
  if (comp_x < 0 || comp_x >= components(x) || comp_y < 0 || comp_y >= components(y))
    throw std::invalid_argument("connsum: component index out of range");
  LinkExpr e = make(Kind::connsum);
  e.a = std::make_shared<const LinkExpr>(std::move(x));
  e.b = std::make_shared<const LinkExpr>(std::move(y));
  e.comp_a = comp_x;
  e.comp_b = comp_y;
  return e;
}

LinkExpr LinkExpr::cable(int p, int q, LinkExpr knot) {
  if (components(knot) != 1) throw std::invalid_argument("cable: companion must be a knot");
  if (p == 0 || std::gcd(p, q) != 1)
    throw std::invalid_argument("cable(" + std::to_string(p) + "," + std::to_string(q) + "): need gcd(p,q) = 1");
  LinkExpr e = make(Kind::cable);
  e.p = p;
  e.q = q;
  e.a = std::make_shared<const LinkExpr>(std::move(knot));
  return e;
}

int components(const LinkExpr& e) {
  switch (e.kind) {
    case LinkExpr::Kind::borromean:
      return 3;
    case LinkExpr::Kind::split:
      return components(*e.a) + components(*e.b);
    case LinkExpr::Kind::connsum:
      return components(*e.a) + components(*e.b) - 1;
    default:
      return 1;
  }
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  LinkExpr parse() {
    LinkExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw LinkParseError("link expression '" + s_ + "' at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }

  int integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string tok = s_.substr(start, pos_ - start);
    if (tok.empty() || tok == "-" || tok == "+") fail("expected an integer");
    try {
      return std::stoi(tok);
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }

  LinkExpr expr() {
    const std::string name = word();
    try {
      if (name == "unknot") return LinkExpr::unknot();
      if (name == "fig8") return LinkExpr::fig8();
      if (name == "borromean") return LinkExpr::borromean();
      if (name == "torus") {
        expect('(');
        const int p = integer();
        expect(',');
        const int q = integer();
        expect(')');
        return LinkExpr::torus(p, q);
      }
      if (name == "split") {
        expect('(');
        LinkExpr x = expr();
        expect(',');
        LinkExpr y = expr();
        expect(')');
        return LinkExpr::split(std::move(x), std::move(y));
      }
      if (name == "connsum") {
        expect('(');
        LinkExpr x = expr();
        expect(',');
        LinkExpr y = expr();
        int cx = 1, cy = 1;
        if (accept(',')) {
          cx = integer();
          expect(',');
          cy = integer();
        }
        expect(')');
        return LinkExpr::connsum(std::move(x), std::move(y), cx - 1, cy - 1);
      }
      if (name == "cable") {
        expect('(');
        const int p = integer();
        expect(',');
        const int q = integer();
        expect(',');
        LinkExpr k = expr();
        expect(')');
        return LinkExpr::cable(p, q, std::move(k));
      }
    } catch (const LinkParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    fail("unknown link '" + name + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

LinkExpr parse_link(const std::string& text) { return Parser(text).parse(); }

std::string to_string(const LinkExpr& e) {
  using K = LinkExpr::Kind;
  switch (e.kind) {
    case K::unknot:
      return "unknot";
    case K::fig8:
      return "fig8";
    case K::borromean:
      return "borromean";
    case K::torus:
      return "torus(" + std::to_string(e.p) + "," + std::to_string(e.q) + ")";
    case K::split:
      return "split(" + to_string(*e.a) + "," + to_string(*e.b) + ")";
    case K::connsum: {
      std::string s = "connsum(" + to_string(*e.a) + "," + to_string(*e.b);
      if (e.comp_a != 0 || e.comp_b != 0) s += "," + std::to_string(e.comp_a + 1) + "," + std::to_string(e.comp_b + 1);
      return s + ")";
    }
    case K::cable:
      return "cable(" + std::to_string(e.p) + "," + std::to_string(e.q) + "," + to_string(*e.a) + ")";
  }
  return "?";
}

}  // namespace skein
