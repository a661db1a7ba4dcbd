#include "qgal/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace qgal {

namespace {

enum class Tok { Int, Name, Plus, Minus, Star, Caret, Slash, At, LParen,
                 RParen, End };

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
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      out.push_back({Tok::Int, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                              s[j] == '_'))
        ++j;
      out.push_back({Tok::Name, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '/': k = Tok::Slash; break;
      case '@': k = Tok::At; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// A parsed factor: an element, possibly known to be the bare symbol a
// (the only atom allowed a negative exponent).
struct Value {
  NCElement elem;
  bool is_a_symbol = false;
};

class Parser {
 public:
  Parser(const std::string& text, const Presentation& pres, bool allow_tensor)
      : pres_(pres), toks_(lex(text)), allow_tensor_(allow_tensor) {}

  NCElement parse_expr_element() {
    NCElement e = expr_scalar();
    expect(Tok::End, "end of input");
    return e;
  }

  Tensor2 parse_expr_tensor() {
    Tensor2 t = Tensor2::zero(pres_);
    bool neg = accept(Tok::Minus);
    t += tensor_term(neg);
    for (;;) {
      if (accept(Tok::Plus))
        t += tensor_term(false);
      else if (accept(Tok::Minus))
        t += tensor_term(true);
      else
        break;
    }
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[idx_]; }
  const Token& advance() { return toks_[idx_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++idx_;
      return true;
    }
    return false;
  }
  void expect(Tok k, const std::string& what) {
    if (!accept(k))
      throw ParseError("expected " + what + " but found '" + peek().text + "'",
                       peek().pos);
  }

  NCElement expr_scalar() {
    NCElement e = NCElement::zero(pres_);
    bool neg = accept(Tok::Minus);
    NCElement t = product();
    e += neg ? -t : t;
    for (;;) {
      if (accept(Tok::Plus))
        e += product();
      else if (accept(Tok::Minus))
        e -= product();
      else
        break;
    }
    return e;
  }

  Tensor2 tensor_term(bool neg) {
    size_t start = peek().pos;
    NCElement left = product();
    if (!accept(Tok::At))
      throw ParseError("tensor term without '@'", start);
    NCElement right = product();
    Tensor2 t = Tensor2::simple(left, right);
    if (neg) t = -t;
    return t;
  }

  NCElement product() {
    NCElement e = factor().elem;
    while (accept(Tok::Star)) e *= factor().elem;
    return e;
  }

  Value factor() {
    Value v = atom();
    if (accept(Tok::Caret)) {
      bool negexp = accept(Tok::Minus);
      const Token& t = peek();
      expect(Tok::Int, "integer exponent");
      int e = std::stoi(t.text);
      if (negexp) {
        if (!v.is_a_symbol)
          throw ParseError(
              "negative exponent only permitted on the deformation "
              "parameter a",
              t.pos);
        v.elem = NCElement::monomial(pres_, Monomial(pres_.num_gens(), 0),
                                     CoeffPoly::a_power(Rat(1), -e));
        v.is_a_symbol = false;
      } else {
        v.elem = v.elem.pow(e);
        v.is_a_symbol = false;
      }
    }
    return v;
  }

  Value atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        advance();
        Rat num = parse_rat(t.text);
        if (accept(Tok::Slash)) {
          const Token& d = peek();
          expect(Tok::Int, "integer denominator");
          Rat den = parse_rat(d.text);
          if (qgal::is_zero(den))
            throw ParseError("division by zero", d.pos);
          num /= den;
        }
        return {NCElement::monomial(pres_, Monomial(pres_.num_gens(), 0),
                                    CoeffPoly(num)),
                false};
      }
      case Tok::Name: {
        advance();
        int g = pres_.gen_index(t.text);
        if (g >= 0) return {NCElement::gen(pres_, g), false};
        std::optional<CoeffPoly::Var> var;
        if (t.text == "a") var = CoeffPoly::A;
        else if (t.text == "alpha") var = CoeffPoly::Alpha;
        else if (t.text == "beta") var = CoeffPoly::Beta;
        else if (t.text == "gamma") var = CoeffPoly::Gamma;
        else if (t.text == "E") var = CoeffPoly::E;
        if (!var)
          throw ParseError("unknown generator or symbol '" + t.text + "'",
                           t.pos);
        return {NCElement::monomial(pres_, Monomial(pres_.num_gens(), 0),
                                    CoeffPoly::var(*var)),
                *var == CoeffPoly::A};
      }
      case Tok::LParen: {
        advance();
        NCElement e = expr_scalar();
        expect(Tok::RParen, "')'");
        return {e, false};
      }
      default:
        throw ParseError("unexpected token '" + t.text + "'", t.pos);
    }
  }

  const Presentation& pres_;
  std::vector<Token> toks_;
  size_t idx_ = 0;
  bool allow_tensor_;
};

}  // namespace

NCElement parse_element(const std::string& text, const Presentation& pres) {
  return Parser(text, pres, false).parse_expr_element();
}

Tensor2 parse_tensor(const std::string& text, const Presentation& pres) {
  return Parser(text, pres, true).parse_expr_tensor();
}

}  // namespace qgal
