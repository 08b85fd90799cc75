#include "splitforge/textio.hpp"

#include <cctype>
#include <sstream>

namespace splitforge {

namespace {

// ---- printing ---------------------------------------------------------------

std::string rational_str(const Rational& q) {
  Int n = boost::multiprecision::numerator(q);
  Int d = boost::multiprecision::denominator(q);
  std::string s = n.str();
  if (d != 1) s += "/" + d.str();
  return s;
}

struct Atom {
  bool negative = false;
  std::string magnitude;
};

std::string join_atoms(const std::vector<Atom>& atoms) {
  if (atoms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i == 0) {
      if (atoms[i].negative) out += "-";
    } else {
      out += atoms[i].negative ? " - " : " + ";
    }
    out += atoms[i].magnitude;
  }
  return out;
}

std::string power_str(char var, unsigned deg) {
  std::string s(1, var);
  if (deg >= 2) s += "^" + std::to_string(deg);
  return s;
}

// one atom per term of a base-ring polynomial
std::vector<Atom> element_atoms(const RingElement& a) {
  std::vector<Atom> atoms;
  switch (a.ring().kind) {
    case RingKind::Integers: {
      if (a.is_zero()) return atoms;
      const Int& n = a.as_integer();
      atoms.push_back(Atom{n < 0, (n < 0 ? Int(-n) : n).str()});
      return atoms;
    }
    case RingKind::RationalPolys: {
      const auto& cs = a.qcoeffs();
      for (std::size_t i = cs.size(); i-- > 0;) {
        if (cs[i] == 0) continue;
        bool neg = cs[i] < 0;
        Rational mag = neg ? Rational(-cs[i]) : cs[i];
        std::string piece;
        if (i == 0)
          piece = rational_str(mag);
        else
          piece = (mag == 1 ? "" : rational_str(mag) + "*") +
                  power_str(a.ring().variable, static_cast<unsigned>(i));
        atoms.push_back(Atom{neg, piece});
      }
      return atoms;
    }
    case RingKind::PrimePolys: {
      const auto& cs = a.pcoeffs();
      for (std::size_t i = cs.size(); i-- > 0;) {
        if (cs[i] == 0) continue;
        std::string piece;
        if (i == 0)
          piece = std::to_string(cs[i]);
        else
          piece = (cs[i] == 1 ? "" : std::to_string(cs[i]) + "*") +
                  power_str(a.ring().variable, static_cast<unsigned>(i));
        atoms.push_back(Atom{false, piece});
      }
      return atoms;
    }
  }
  return atoms;
}

// atom for coefficient*monomial; multi-term coefficients are parenthesized
Atom term_atom(const RingElement& c, const std::string& mono) {
  auto atoms = element_atoms(c);
  if (atoms.size() == 1) {
    Atom a = atoms[0];
    if (mono.empty()) return a;
    if (a.magnitude == "1") return Atom{a.negative, mono};
    return Atom{a.negative, a.magnitude + "*" + mono};
  }
  std::string inner = "(" + join_atoms(atoms) + ")";
  if (!mono.empty()) inner += "*" + mono;
  return Atom{false, inner};
}

std::string wrap_if_compound(const std::string& s) {
  if (s.find(' ') != std::string::npos) return "(" + s + ")";
  return s;
}

// ---- tokens -----------------------------------------------------------------

struct Token {
  enum Kind {
    Integer,
    Ident,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End
  };
  Kind kind = End;
  std::string text;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      out.push_back(Token{Token::Integer, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() &&
             std::isalnum(static_cast<unsigned char>(s[j])))
        ++j;
      out.push_back(Token{Token::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Plus; break;
      case '-': k = Token::Minus; break;
      case '*': k = Token::Star; break;
      case '/': k = Token::Slash; break;
      case '^': k = Token::Caret; break;
      case '(': k = Token::LParen; break;
      case ')': k = Token::RParen; break;
      default:
        fail(Errc::syntax_error, "at position " + std::to_string(i) +
                                     ": unexpected character '" +
                                     std::string(1, c) + "'");
    }
    out.push_back(Token{k, std::string(1, c), i});
    ++i;
  }
  out.push_back(Token{Token::End, "", s.size()});
  return out;
}

// ---- expression parser -------------------------------------------------------

struct VarMask {
  bool x = false, y = false, z = false;
};

// Recursive-descent evaluator into a bivariate polynomial over the fraction
// field; z (when allowed) occupies the x slot.
class ExprParser {
 public:
  ExprParser(RingDescriptor ring, VarMask vars, const std::string& text)
      : ring_(std::move(ring)), vars_(vars), tokens_(tokenize(text)) {}

  FracBiPoly parse() {
    FracBiPoly v = expr();
    expect(Token::End, "end of input");
    return v;
  }

 private:
  RingDescriptor ring_;
  VarMask vars_;
  std::vector<Token> tokens_;
  std::size_t at_ = 0;

  const Token& cur() const { return tokens_[at_]; }
  void advance() { ++at_; }
  [[noreturn]] void err(const std::string& expected) const {
    fail(Errc::syntax_error, "at position " + std::to_string(cur().pos) +
                                 ": expected " + expected);
  }
  void expect(Token::Kind k, const std::string& what) {
    if (cur().kind != k) err(what);
    advance();
  }

  FracBiPoly expr() {
    FracBiPoly v = term();
    while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
      bool minus = cur().kind == Token::Minus;
      advance();
      FracBiPoly rhs = term();
      if (minus)
        v -= rhs;
      else
        v += rhs;
    }
    return v;
  }

  FracBiPoly term() {
    FracBiPoly v = factor();
    while (cur().kind == Token::Star || cur().kind == Token::Slash) {
      bool divide = cur().kind == Token::Slash;
      std::size_t pos = cur().pos;
      advance();
      FracBiPoly rhs = factor();
      if (divide) {
        if (rhs.total_degree() > 0)
          fail(Errc::syntax_error,
               "at position " + std::to_string(pos) +
                   ": division by a polynomial in x or y is not supported");
        FractionElement scalar = rhs.coeff(0, 0);
        if (scalar.is_zero())
          fail(Errc::syntax_error, "at position " + std::to_string(pos) +
                                       ": division by zero");
        v.scale(scalar.inverse());
      } else {
        v *= rhs;
      }
    }
    return v;
  }

  FracBiPoly factor() {
    if (cur().kind == Token::Minus) {
      advance();
      return -factor();
    }
    if (cur().kind == Token::Plus) {
      advance();
      return factor();
    }
    FracBiPoly base = primary();
    if (cur().kind == Token::Caret) {
      advance();
      if (cur().kind != Token::Integer) err("a nonnegative integer exponent");
      long e = std::stol(cur().text);
      if (e > 64)
        fail(Errc::syntax_error, "at position " + std::to_string(cur().pos) +
                                     ": exponent too large");
      advance();
      FracBiPoly acc = FracBiPoly::constant(FractionElement::one(ring_));
      for (long i = 0; i < e; ++i) acc *= base;
      return acc;
    }
    return base;
  }

  FracBiPoly primary() {
    switch (cur().kind) {
      case Token::Integer: {
        Int n(cur().text);
        advance();
        return FracBiPoly::constant(FractionElement::from_int(ring_, n));
      }
      case Token::Ident: {
        std::string name = cur().text;
        std::size_t pos = cur().pos;
        advance();
        if (name.size() == 1) {
          char v = name[0];
          if (v == 'x' && vars_.x) return FracBiPoly::variable(ring_, Var::X);
          if (v == 'y' && vars_.y) return FracBiPoly::variable(ring_, Var::Y);
          if (v == 'z' && vars_.z) return FracBiPoly::variable(ring_, Var::X);
          if (v == ring_.variable && ring_.is_poly())
            return FracBiPoly::constant(
                FractionElement(RingElement::generator(ring_)));
        }
        fail(Errc::syntax_error, "at position " + std::to_string(pos) +
                                     ": unknown variable '" + name + "'");
      }
      case Token::LParen: {
        advance();
        FracBiPoly v = expr();
        expect(Token::RParen, "')'");
        return v;
      }
      default:
        err("an integer, a variable, or '('");
    }
  }
};

BiPoly to_ring_bipoly(const FracBiPoly& p, const std::string& what) {
  BiPoly out(p.ring());
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_ring_element())
      fail(Errc::syntax_error,
           what + ": coefficient " + to_string(c) + " is not an element of " +
               p.ring().name());
    out.add_term(m.dx, m.dy, c.as_ring_element());
  }
  return out;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string to_string(const RingElement& a) {
  return join_atoms(element_atoms(a));
}

std::string to_string(const FractionElement& a) {
  if (a.denominator().is_one()) return to_string(a.numerator());
  return wrap_if_compound(to_string(a.numerator())) + "/" +
         wrap_if_compound(to_string(a.denominator()));
}

std::string to_string(const BiPoly& p) {
  std::vector<Atom> atoms;
  for (const auto& [m, c] : p.terms()) {
    std::string mono;
    if (m.dx > 0) mono = power_str('x', m.dx);
    if (m.dy > 0) {
      if (!mono.empty()) mono += "*";
      mono += power_str('y', m.dy);
    }
    atoms.push_back(term_atom(c, mono));
  }
  return join_atoms(atoms);
}

std::string univar_to_string(char var, const std::vector<RingElement>& coeffs) {
  std::vector<Atom> atoms;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i].is_zero()) continue;
    atoms.push_back(term_atom(
        coeffs[i], i == 0 ? "" : power_str(var, static_cast<unsigned>(i))));
  }
  return join_atoms(atoms);
}

std::string to_string(const MonicQuadratic& q) {
  return univar_to_string(
      q.variable, {q.b, -q.a, RingElement::from_int(q.ring(), 1)});
}

RingElement parse_ring_element(const RingDescriptor& ring,
                               const std::string& text) {
  ExprParser parser(ring, VarMask{}, text);
  FracBiPoly v = parser.parse();
  FractionElement c = v.coeff(0, 0);
  if (!c.is_ring_element())
    fail(Errc::syntax_error,
         "'" + text + "' is not an element of " + ring.name());
  return c.as_ring_element();
}

BiPoly parse_bipoly(const RingDescriptor& ring, const std::string& text) {
  ExprParser parser(ring, VarMask{true, true, false}, text);
  return to_ring_bipoly(parser.parse(), "'" + text + "'");
}

std::pair<RingElement, RingElement> parse_linear_z(const RingDescriptor& ring,
                                                   const std::string& text) {
  ExprParser parser(ring, VarMask{false, false, true}, text);
  BiPoly p = to_ring_bipoly(parser.parse(), "'" + text + "'");
  if (p.degree(Var::X) > 1 || p.degree(Var::Y) > 0)
    fail(Errc::syntax_error, "'" + text + "' is not linear in z");
  return {p.coeff(0, 0), p.coeff(1, 0)};
}

MonicQuadratic parse_monic_quadratic_z(const RingDescriptor& ring,
                                       const std::string& text) {
  ExprParser parser(ring, VarMask{false, false, true}, text);
  BiPoly p = to_ring_bipoly(parser.parse(), "'" + text + "'");
  if (p.degree(Var::X) != 2 || p.degree(Var::Y) > 0)
    fail(Errc::syntax_error, "'" + text + "' is not quadratic in z");
  if (!p.coeff(2, 0).is_one())
    fail(Errc::non_monic, "'" + text + "' is not monic in z");
  return MonicQuadratic(-p.coeff(1, 0), p.coeff(0, 0), 'z');
}

ExtensionProblem parse_problem(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> decls;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      fail(Errc::syntax_error,
           "expected 'name: value' but found '" + line + "'");
    decls.emplace_back(strip(line.substr(0, colon)),
                       strip(line.substr(colon + 1)));
  }
  if (decls.size() < 3 || decls[0].first != "ring" ||
      decls[1].first != "f1" || decls[2].first != "f2")
    fail(Errc::syntax_error,
         "a problem needs 'ring:', 'f1:', 'f2:' and an optional 'J:' line, "
         "in that order");
  if (decls.size() > 4 || (decls.size() == 4 && decls[3].first != "J"))
    fail(Errc::syntax_error, "unexpected declaration after f2 (only 'J:')");

  ExtensionProblem p;
  const std::string& ring_name = decls[0].second;
  if (ring_name == "Z") {
    p.ring = integers();
  } else if (ring_name == "Q[t]") {
    p.ring = rational_polys('t');
  } else if (ring_name.size() > 4 && ring_name[0] == 'F' &&
             ring_name.substr(ring_name.size() - 3) == "[t]") {
    std::string digits = ring_name.substr(1, ring_name.size() - 4);
    if (digits.empty() || digits.size() > 9 ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      fail(Errc::unknown_ring, "unknown ring '" + ring_name + "'");
    p.ring = prime_polys(std::stoull(digits), 't');
  } else {
    fail(Errc::unknown_ring, "unknown ring '" + ring_name +
                                 "' (supported: Z, Q[t], F<p>[t])");
  }

  auto parse_quadratic = [&](const std::string& src, Var v,
                             const std::string& name) {
    ExprParser parser(p.ring, VarMask{true, true, false}, src);
    BiPoly poly = to_ring_bipoly(parser.parse(), name);
    Var other = v == Var::X ? Var::Y : Var::X;
    if (poly.degree(other) > 0)
      fail(Errc::wrong_degree,
           name + " must be a polynomial in " +
               (v == Var::X ? std::string("x") : std::string("y")) + " alone");
    if (poly.degree(v) != 2)
      fail(Errc::wrong_degree, name + " must have degree 2");
    RingElement lead = v == Var::X ? poly.coeff(2, 0) : poly.coeff(0, 2);
    if (!lead.is_one()) fail(Errc::non_monic, name + " must be monic");
    RingElement lin = v == Var::X ? poly.coeff(1, 0) : poly.coeff(0, 1);
    return MonicQuadratic(-lin, poly.coeff(0, 0), v == Var::X ? 'x' : 'y');
  };
  p.f1 = parse_quadratic(decls[1].second, Var::X, "f1");
  p.f2 = parse_quadratic(decls[2].second, Var::Y, "f2");

  if (decls.size() == 4) {
    // split on top-level commas
    const std::string& src = decls[3].second;
    std::vector<std::string> parts;
    std::size_t depth = 0, start = 0;
    for (std::size_t i = 0; i <= src.size(); ++i) {
      if (i == src.size() || (src[i] == ',' && depth == 0)) {
        parts.push_back(strip(src.substr(start, i - start)));
        start = i + 1;
      } else if (src[i] == '(') {
        ++depth;
      } else if (src[i] == ')') {
        if (depth == 0)
          fail(Errc::syntax_error, "unbalanced ')' in the J declaration");
        --depth;
      }
    }
    for (const auto& part : parts) {
      if (part.empty())
        fail(Errc::syntax_error, "empty generator in the J declaration");
      p.j_generators.push_back(parse_bipoly(p.ring, part));
    }
  }
  return p;
}

std::string print_problem(const ExtensionProblem& p) {
  std::string out = "ring: " + p.ring.name() + "\n";
  out += "f1: " + to_string(p.f1.as_bipoly(Var::X)) + "\n";
  out += "f2: " + to_string(p.f2.as_bipoly(Var::Y)) + "\n";
  if (!p.j_generators.empty()) {
    out += "J: ";
    for (std::size_t i = 0; i < p.j_generators.size(); ++i) {
      if (i) out += ", ";
      out += to_string(p.j_generators[i]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace splitforge
