#include "bform/parser.hpp"

#include <cctype>
#include <optional>

namespace bform {

namespace {

enum class Tok { Int, Imag, Coord, Form, Tangent, Exp, Plus, Minus, Star, Slash, Hat, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t col;  // 1-based
  long value = 0;   // Int: literal; Coord/Form/Tangent: index (1-based)
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto col = [&] { return i + 1; };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Tok::Int, start + 1, std::stol(text.substr(start, i - start))});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
      std::string word = text.substr(start, i - start);
      auto index_of = [&](std::size_t prefix) -> std::optional<long> {
        if (word.size() <= prefix) return std::nullopt;
        long v = 0;
        for (std::size_t k = prefix; k < word.size(); ++k) {
          if (!std::isdigit(static_cast<unsigned char>(word[k]))) return std::nullopt;
          v = v * 10 + (word[k] - '0');
        }
        return v;
      };
      if (word == "i") {
        out.push_back({Tok::Imag, start + 1});
      } else if (word == "exp") {
        out.push_back({Tok::Exp, start + 1});
      } else if (word.rfind("dx", 0) == 0) {
        auto idx = index_of(2);
        if (!idx || *idx < 1) throw ParseError(start + 1, "bad form symbol '" + word + "'");
        out.push_back({Tok::Form, start + 1, *idx});
      } else if (word[0] == 'x') {
        auto idx = index_of(1);
        if (!idx || *idx < 1) throw ParseError(start + 1, "bad coordinate '" + word + "'");
        out.push_back({Tok::Coord, start + 1, *idx});
      } else if (word[0] == 'e') {
        auto idx = index_of(1);
        if (!idx || *idx < 1) throw ParseError(start + 1, "bad tangent symbol '" + word + "'");
        out.push_back({Tok::Tangent, start + 1, *idx});
      } else {
        throw ParseError(start + 1, "unknown symbol '" + word + "'");
      }
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Hat; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw ParseError(col(), std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, col()});
    ++i;
  }
  out.push_back({Tok::End, text.size() + 1});
  return out;
}

// Intermediate value: mixed form plus tangent components.
struct Value {
  int dim;
  PolyForm form;
  PolyVec tangent;

  explicit Value(int n) : dim(n), form(n), tangent(n) {}

  bool has_tangent() const {
    for (const auto& v : tangent)
      if (!v.is_zero()) return true;
    return false;
  }
  bool is_function() const { return !has_tangent() && form.max_grade() <= 0; }
  PolyScalar function() const { return form.coeff(0); }
};

class Parser {
 public:
  Parser(std::vector<Token> toks, int dim) : toks_(std::move(toks)), dim_(dim) {}

  Value parse() {
    Value v = expr();
    expect(Tok::End, "end of input");
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  void expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) throw ParseError(peek().col, "expected " + what);
    ++pos_;
  }

  Value expr() {
    Value v = wedge_term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = take().kind == Tok::Minus;
      Value rhs = wedge_term();
      if (minus) {
        v.form -= rhs.form;
        for (int j = 0; j < dim_; ++j) v.tangent[j] -= rhs.tangent[j];
      } else {
        v.form += rhs.form;
        for (int j = 0; j < dim_; ++j) v.tangent[j] += rhs.tangent[j];
      }
    }
    return v;
  }

  Value wedge_term() {
    Value v = prod();
    while (peek().kind == Tok::Hat) {
      std::size_t col = take().col;
      Value rhs = prod();
      if (v.has_tangent() || rhs.has_tangent())
        throw ParseError(col, "tangent symbols cannot be wedged");
      v.form = wedge(v.form, rhs.form);
    }
    return v;
  }

  Value prod() {
    Value v = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      Token op = take();
      Value rhs = unary();
      if (op.kind == Tok::Star) {
        if (v.is_function())
          v = scale(rhs, v.function());
        else if (rhs.is_function())
          v = scale(v, rhs.function());
        else
          throw ParseError(op.col, "'*' needs a scalar operand (use '^' to wedge)");
      } else {
        if (!rhs.is_function())
          throw ParseError(op.col, "'/' needs a scalar divisor");
        PolyScalar f = rhs.function();
        if (f.is_zero()) throw ParseError(op.col, "division by zero");
        v = scale(v, PolyScalar(1) / f);
      }
    }
    return v;
  }

  static Value scale(Value v, const PolyScalar& f) {
    v.form = v.form * f;
    for (auto& t : v.tangent) t = t * f;
    return v;
  }

  Value unary() {
    bool minus = false;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      if (take().kind == Tok::Minus) minus = !minus;
    }
    Value v = atom();
    if (minus) v = scale(v, PolyScalar(-1));
    return v;
  }

  Value atom() {
    Token t = take();
    Value v(dim_);
    switch (t.kind) {
      case Tok::Int:
        v.form.set(0, PolyScalar(Scalar(t.value)));
        return v;
      case Tok::Imag:
        v.form.set(0, PolyScalar(Scalar::i()));
        return v;
      case Tok::Coord:
        check_index(t);
        v.form.set(0, PolyScalar::variable(static_cast<int>(t.value) - 1));
        return v;
      case Tok::Form:
        check_index(t);
        v.form.set(Blade(1) << (t.value - 1), PolyScalar(1));
        return v;
      case Tok::Tangent:
        check_index(t);
        v.tangent[t.value - 1] = PolyScalar(1);
        return v;
      case Tok::Exp: {
        expect(Tok::LParen, "'(' after exp");
        Value arg = expr();
        expect(Tok::RParen, "')'");
        if (arg.has_tangent()) throw ParseError(t.col, "exp of a tangent expression");
        v.form = exp_even(arg.form);
        return v;
      }
      case Tok::LParen: {
        Value inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw ParseError(t.col, "expected a value");
    }
  }

  std::vector<Token> toks_;
  int dim_;
  std::size_t pos_ = 0;

  void check_index(const Token& t) const {
    if (t.value > dim_)
      throw ParseError(t.col, "index " + std::to_string(t.value) +
                                  " exceeds dimension " + std::to_string(dim_));
  }
};

}  // namespace

Parsed parse_expr(const std::string& text, int dim) {
  std::vector<Token> toks = tokenize(text);
  if (dim == 0) {
    for (const auto& t : toks)
      if (t.kind == Tok::Coord || t.kind == Tok::Form || t.kind == Tok::Tangent)
        dim = std::max(dim, static_cast<int>(t.value));
    if (dim == 0) dim = 1;
  }
  if (dim > kMaxVars) throw error("dimension exceeds the supported maximum of 12");
  Parser p(std::move(toks), dim);
  Value v = p.parse();
  Parsed out;
  out.dim = dim;
  out.form = std::move(v.form);
  out.tangent = std::move(v.tangent);
  return out;
}

Multivector Parsed::as_multivector() const {
  if (has_tangent()) throw error("expected a differential form, found tangent symbols");
  if (!is_constant(form)) throw error("expected constant coefficients");
  return constant_value(form);
}

PolyForm Parsed::as_polyform() const {
  if (has_tangent()) throw error("expected a differential form, found tangent symbols");
  return form;
}

PolySection Parsed::as_section() const {
  if (form.max_grade() > 1) throw error("a section may only contain 1-form parts");
  PolySection z(dim);
  z.tan = tangent;
  for (int j = 0; j < dim; ++j) z.cot[j] = form.coeff(Blade(1) << j);
  if (!form.coeff(0).is_zero()) throw error("a section may not contain a scalar part");
  return z;
}

}  // namespace bform
