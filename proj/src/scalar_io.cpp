#include "qcov/scalar_io.hpp"

#include <cctype>
#include <sstream>

#include "qcov/error.hpp"

namespace qcov {

namespace {

std::string rat_string(const Rat& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

// q^(k/2) for the t-exponent k.
std::string q_power_string(int k) {
  if (k == 0) return "1";
  if (k == 2) return "q";
  std::string e;
  if (k % 2 == 0)
    e = std::to_string(k / 2);
  else
    e = std::to_string(k) + "/2";
  return "q^(" + e + ")";
}

struct TermText {
  bool negative;
  std::string body;
};

TermText monomial_text(const Rat& coef, int k) {
  Rat a = abs(coef);
  TermText t{coef < 0, ""};
  if (k == 0) {
    t.body = rat_string(a);
  } else if (a == 1) {
    t.body = q_power_string(k);
  } else {
    t.body = rat_string(a) + "*" + q_power_string(k);
  }
  return t;
}

std::string join_terms(const std::vector<TermText>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i == 0)
      out += terms[i].negative ? "-" : "";
    else
      out += terms[i].negative ? " - " : " + ";
    out += terms[i].body;
  }
  return out;
}

bool is_sum(const std::string& s) {
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || (c == '-' && i > 0 && s[i - 1] == ' '))) return true;
  }
  return false;
}

}  // namespace

namespace detail {

std::string laurent_string(const Poly& num, int tshift) {
  std::vector<TermText> terms;
  for (int i = num.deg(); i >= 0; --i) {
    Rat c = num.coef(i);
    if (c == 0) continue;
    terms.push_back(monomial_text(c, i - tshift));
  }
  return join_terms(terms);
}

}  // namespace detail

std::string to_string(const Poly& p) { return detail::laurent_string(p, 0); }

std::string to_string(const RatFun& f) {
  if (f.is_zero()) return "0";
  const Poly& d = f.den();
  // Monomial denominator: print as a Laurent polynomial.
  bool monomial_den = true;
  for (int i = 0; i < d.deg(); ++i)
    if (d.coef(i) != 0) monomial_den = false;
  if (monomial_den) return detail::laurent_string(f.num(), d.deg());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

std::string to_string(const QScalar& s) {
  if (s.is_zero()) return "0";
  std::vector<TermText> terms;
  for (const auto& [rad, coef] : s.terms()) {
    if (rad.is_one()) {
      std::string body = to_string(coef);
      if (body[0] == '-')
        terms.push_back({true, body.substr(1)});
      else if (is_sum(body))
        terms.push_back({false, "(" + body + ")"});
      else
        terms.push_back({false, body});
      continue;
    }
    std::string radstr = "sqrt(" + to_string(rad.f * Poly(Rat(rad.n))) + ")";
    std::string c = to_string(coef);
    TermText t{false, ""};
    if (c == "1") {
      t.body = radstr;
    } else if (c == "-1") {
      t.negative = true;
      t.body = radstr;
    } else if (is_sum(c)) {
      t.body = "(" + c + ")*" + radstr;
    } else {
      if (c[0] == '-') {
        t.negative = true;
        c = c.substr(1);
      }
      t.body = c + "*" + radstr;
    }
    terms.push_back(t);
  }
  return join_terms(terms);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Lexer {
  std::string s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos) +
                       " in \"" + s + "\"");
  }
  bool peek_ident(std::string& out) {
    skip();
    size_t p = pos;
    if (p >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[p])) || s[p] == '_')) return false;
    std::string id;
    while (p < s.size() && (std::isalnum(static_cast<unsigned char>(s[p])) || s[p] == '_')) id += s[p++];
    out = id;
    return true;
  }
  std::string ident() {
    std::string id;
    if (!peek_ident(id)) throw ParseError("expected identifier in \"" + s + "\"");
    pos += id.size();
    return id;
  }
  Int integer() {
    skip();
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
    if (digits.empty()) throw ParseError("expected integer at offset " + std::to_string(pos));
    return Int(digits);
  }
};

struct ScalarParser {
  Lexer lx;

  QScalar parse() {
    QScalar v = expr();
    if (!lx.eof()) throw ParseError("trailing input in \"" + lx.s + "\"");
    return v;
  }

  QScalar expr() {
    QScalar acc = lx.accept('-') ? -term() : term();
    for (;;) {
      if (lx.accept('+'))
        acc += term();
      else if (lx.accept('-'))
        acc += -term();
      else
        return acc;
    }
  }

  QScalar term() {
    QScalar acc = factor();
    for (;;) {
      if (lx.accept('*'))
        acc *= factor();
      else if (lx.accept('/'))
        acc = acc / factor();
      else
        return acc;
    }
  }

  // exponent: integer or (±int) or (±odd/2)
  std::pair<Int, bool> exponent() {  // (value, halved)
    bool paren = lx.accept('(');
    bool neg = lx.accept('-');
    Int v = lx.integer();
    bool halved = false;
    if (paren && lx.accept('/')) {
      Int d = lx.integer();
      if (d != 2) throw ParseError("only /2 exponents are supported");
      halved = true;
    }
    if (paren) lx.expect(')');
    if (neg) v = -v;
    return {v, halved};
  }

  QScalar factor() {
    if (lx.accept('-')) return -factor();
    QScalar base = atom();
    if (lx.accept('^')) {
      auto [v, halved] = exponent();
      long e = v.get_si();
      if (halved) throw ParseError("fractional exponent only allowed on q");
      QScalar acc(Rat(1));
      QScalar b = e < 0 ? base.inverse() : base;
      for (long i = 0; i < (e < 0 ? -e : e); ++i) acc *= b;
      return acc;
    }
    return base;
  }

  QScalar atom() {
    std::string id;
    if (lx.peek() == '(') {
      lx.expect('(');
      QScalar v = expr();
      lx.expect(')');
      return v;
    }
    if (lx.peek_ident(id)) {
      if (id == "q") {
        lx.pos += id.size();
        if (lx.accept('^')) {
          auto [v, halved] = exponent();
          long k = v.get_si();
          return QScalar::q_power(halved ? static_cast<int>(k) : static_cast<int>(2 * k));
        }
        return QScalar::q_power(2);
      }
      if (id == "sqrt") {
        lx.pos += id.size();
        lx.expect('(');
        QScalar arg = expr();
        lx.expect(')');
        return formal_sqrt(arg.as_ratfun());
      }
      throw ParseError("unknown symbol '" + id + "' in scalar expression");
    }
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      Int v = lx.integer();
      return QScalar(Rat(v));
    }
    throw ParseError("unexpected character at offset " + std::to_string(lx.pos) + " in \"" + lx.s + "\"");
  }
};

}  // namespace

QScalar parse_scalar(const std::string& text) {
  ScalarParser p;
  p.lx.s = text;
  return p.parse();
}

}  // namespace qcov
