#include "efgc/cli/parse.hpp"

#include <algorithm>
#include <cctype>

#include "efgc/ringkit/linalg.hpp"

namespace efgc {
namespace {

[[noreturn]] void expr_error(const std::string& text, size_t pos, const std::string& msg) {
  throw Error(ErrorKind::kExprError, msg + " at offset " + std::to_string(pos) + " in '" + text + "'");
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\n\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\n\r");
  return s.substr(a, b - a + 1);
}

// A value of some ring in the tower under `ring`, named by `name`.
std::optional<RingValue> ring_symbol(const Ring& ring, const std::string& name) {
  for (Ring r = ring; r; r = r->base()) {
    switch (r->kind()) {
      case RingKind::kGroupRing: {
        const auto& syms = r->symbols();
        for (size_t j = 0; j < syms.size(); ++j) {
          if (syms[j] != name) continue;
          GroupElement g = r->group().zero();
          g[j] = 1;
          return embed(RingValue::group_basis(r, r->group().index(r->group().reduce(g))), ring);
        }
        break;
      }
      case RingKind::kPolyQuotient:
        if (r->variable() == name) return embed(RingValue::generator(r), ring);
        break;
      case RingKind::kSquareZeroF2: {
        if (name == "e") return embed(RingValue::from_square_zero(r, {{2}, {}}), ring);
        if (name.size() > 1 && name[0] == 'u') {
          bool digits = true;
          for (size_t i = 1; i < name.size(); ++i) digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
          int idx = digits ? std::stoi(name.substr(1)) : 0;
          if (digits && idx >= 1) return embed(RingValue::from_square_zero(r, {{}, {idx}}), ring);
        }
        break;
      }
      default: break;
    }
  }
  return std::nullopt;
}

class ExprParser {
 public:
  ExprParser(const std::string& text, Ring ring, const std::vector<std::string>& vars)
      : text_(text), ring_(std::move(ring)), vars_(vars) {}

  MPoly parse() {
    MPoly out = expr();
    skip();
    if (pos_ != text_.size()) expr_error(text_, pos_, "unexpected character");
    return out;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  int nv() const { return static_cast<int>(vars_.size()); }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        size_t at = pos_;
        MPoly d = unary();
        acc = acc * constant_inverse(d, at);
      } else {
        return acc;
      }
    }
  }

  RingValue constant_inverse(const MPoly& d, size_t at) {
    for (const auto& [e, c] : d.terms())
      if (MPoly::total_degree(e) != 0) expr_error(text_, at, "division by a non-constant");
    RingValue c = d.coeff(std::vector<int>(nv(), 0));
    auto inv = try_inverse(c);
    if (!inv) expr_error(text_, at, "division by a non-invertible constant");
    return *inv;
  }

  MPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (accept('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) expr_error(text_, pos_, "expected a non-negative exponent");
      base = base.pow(std::stoul(text_.substr(start, pos_ - start)));
    }
    return base;
  }

  MPoly atom() {
    skip();
    if (pos_ >= text_.size()) expr_error(text_, pos_, "unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!accept(')')) expr_error(text_, pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class n(text_.substr(start, pos_ - start));
      return MPoly::constant(RingValue::from_int(ring_, n), nv());
    }
    if (is_ident_start(c)) {
      size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      for (int i = 0; i < nv(); ++i)
        if (vars_[i] == name) return MPoly::variable(ring_, nv(), i);
      if (auto v = ring_symbol(ring_, name)) return MPoly::constant(*v, nv());
      expr_error(text_, start, "unknown name '" + name + "'");
    }
    expr_error(text_, pos_, std::string("unexpected '") + c + "'");
  }

  const std::string& text_;
  Ring ring_;
  const std::vector<std::string>& vars_;
  size_t pos_ = 0;
};

class RingParser {
 public:
  RingParser(const std::string& text, const std::optional<FinAbGroup>& group) : text_(text), group_(group) {}

  Ring parse() {
    Ring r = ring();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::kParseError, "ring descriptor '" + text_ + "': " + msg);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(const std::string& s) {
    skip();
    if (text_.compare(pos_, s.size(), s) == 0) {
      pos_ += s.size();
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(text_.substr(start, pos_ - start));
  }
  // Text up to the bracket closing the one just consumed.
  std::string balanced(char open, char close) {
    int depth = 1;
    size_t start = pos_;
    for (; pos_ < text_.size(); ++pos_) {
      if (text_[pos_] == open) ++depth;
      if (text_[pos_] == close && --depth == 0) return text_.substr(start, pos_++ - start);
    }
    fail(std::string("missing '") + close + "'");
  }

  Ring atom() {
    if (accept("(")) {
      Ring r = ring();
      if (!accept(")")) fail("expected ')'");
      return r;
    }
    if (accept("SZ2")) return square_zero_f2();
    if (accept("Z")) {
      if (accept("/")) return integers_mod(integer());
      return integers();
    }
    if (accept("Q")) return rationals();
    if (accept("F")) {
      accept("_");
      return prime_field(integer());
    }
    fail("unknown base ring");
  }

  Ring ring() {
    Ring r = atom();
    while (accept("[")) {
      std::string inside = trim(balanced('[', ']'));
      if (inside == "A*") {
        if (!group_) fail("[A*] needs a group");
        r = group_ring(r, *group_);
      } else if (!inside.empty() && std::isdigit(static_cast<unsigned char>(inside[0]))) {
        r = explicit_group_ring(r, inside);
      } else if (!inside.empty() && is_ident_start(inside[0])) {
        for (char c : inside)
          if (!is_ident_char(c)) fail("bad variable name '" + inside + "'");
        if (!accept("/") || !accept("(")) fail("expected '/(' after [" + inside + "]");
        std::string modulus = balanced('(', ')');
        Poly m = parse_poly(modulus, r, inside);
        if (m.degree() < 1 || !m.is_monic()) fail("quotient modulus must be monic of degree >= 1");
        r = poly_quotient(r, m.coeffs(), inside);
      } else {
        fail("bad suffix [" + inside + "]");
      }
    }
    return r;
  }

  Ring explicit_group_ring(const Ring& base, const std::string& inside) {
    std::string factors_text = inside, symbols_text;
    if (auto semi = inside.find(';'); semi != std::string::npos) {
      factors_text = inside.substr(0, semi);
      symbols_text = inside.substr(semi + 1);
    }
    auto split = [](const std::string& s) {
      std::vector<std::string> parts;
      size_t start = 0;
      for (;;) {
        size_t comma = s.find(',', start);
        parts.push_back(trim(s.substr(start, comma - start)));
        if (comma == std::string::npos) return parts;
        start = comma + 1;
      }
    };
    std::vector<int> factors;
    for (const auto& p : split(factors_text)) {
      if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos) fail("bad group factor '" + p + "'");
      factors.push_back(std::stoi(p));
    }
    std::vector<std::string> symbols;
    if (!symbols_text.empty()) symbols = split(symbols_text);
    return group_ring(base, FinAbGroup(factors), symbols);
  }

  const std::string& text_;
  const std::optional<FinAbGroup>& group_;
  size_t pos_ = 0;
};

class DivisorParser {
 public:
  DivisorParser(const std::string& text, const EFG& e) : text_(text), e_(e) {}

  Divisor parse() {
    Divisor d = sum();
    skip();
    if (pos_ != text_.size()) expr_error(text_, pos_, "unexpected character");
    return d;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) expr_error(text_, pos_, std::string("expected '") + c + "'");
  }
  std::string balanced() {
    int depth = 1;
    size_t start = pos_;
    for (; pos_ < text_.size(); ++pos_) {
      if (text_[pos_] == '(') ++depth;
      if (text_[pos_] == ')' && --depth == 0) return text_.substr(start, pos_++ - start);
    }
    expr_error(text_, start, "missing ')'");
  }

  std::optional<GroupElement> as_character(const std::string& raw) const {
    std::string s = trim(raw);
    const FinAbGroup& A = e_.group();
    if (s.empty() || s.find_first_not_of("0123456789,- ") != std::string::npos) return std::nullopt;
    if (A.rank() == 0) {
      if (s == "0") return GroupElement{};
      return std::nullopt;
    }
    if (static_cast<int>(std::count(s.begin(), s.end(), ',')) + 1 != A.rank()) return std::nullopt;
    return A.reduce(A.parse_label(s));
  }

  Divisor sum() {
    Divisor acc = product();
    for (;;) {
      if (accept('+')) acc = divisor_sum(acc, product());
      else if (accept('-')) acc = subtract(acc, product());
      else return acc;
    }
  }

  Divisor product() {
    Divisor acc = atom();
    while (accept('*')) acc = convolution(acc, atom());
    return acc;
  }

  Divisor atom() {
    if (accept('(')) {
      Divisor d = sum();
      expect(')');
      return d;
    }
    skip();
    size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    std::string word = text_.substr(start, pos_ - start);
    if (word == "zero") return empty_divisor(e_);
    if (word == "full") return full_divisor(e_);
    if (word == "point") {
      expect('(');
      std::string raw = balanced();
      if (auto alpha = as_character(raw)) return character_divisor(e_, *alpha);
      return point_divisor(e_, parse_value(raw, e_.base()));
    }
    if (word == "tr") {
      expect('(');
      GroupElement alpha = character_argument();
      expect(',');
      Divisor d = sum();
      expect(')');
      return translate_divisor(d, alpha);
    }
    if (word.empty()) expr_error(text_, start, "expected a divisor");
    expr_error(text_, start, "unknown divisor atom '" + word + "'");
  }

  // "(1,0)" or the first rank() comma-separated integers.
  GroupElement character_argument() {
    size_t start = pos_;
    std::string raw;
    if (accept('(')) {
      raw = balanced();
    } else {
      int parts = std::max(1, e_.group().rank());
      size_t p = pos_;
      for (int i = 0; i < parts; ++i) {
        size_t comma = text_.find(',', p);
        if (comma == std::string::npos) expr_error(text_, start, "expected a character");
        raw += (i ? "," : "") + text_.substr(p, comma - p);
        p = comma + 1;
      }
      pos_ = p - 1;
    }
    auto alpha = as_character(raw);
    if (!alpha) expr_error(text_, start, "bad character '" + trim(raw) + "'");
    return *alpha;
  }

  const std::string& text_;
  const EFG& e_;
  size_t pos_ = 0;
};

}  // namespace

Ring parse_ring(const std::string& text, const std::optional<FinAbGroup>& group) {
  return RingParser(text, group).parse();
}

MPoly parse_mpoly(const std::string& text, const Ring& ring, const std::vector<std::string>& vars) {
  return ExprParser(text, ring, vars).parse();
}

Poly parse_poly(const std::string& text, const Ring& ring, const std::string& var) {
  MPoly m = parse_mpoly(text, ring, {var});
  std::vector<RingValue> c(m.degree_in(0) + 1, RingValue::zero(ring));
  for (const auto& [e, v] : m.terms()) c[e[0]] = v;
  return Poly(ring, c);
}

RingValue parse_value(const std::string& text, const Ring& ring) {
  return parse_mpoly(text, ring, {}).coeff({});
}

Divisor parse_divisor(const std::string& text, const EFG& e) { return DivisorParser(text, e).parse(); }

}  // namespace efgc
