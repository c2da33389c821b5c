#include "balg/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "balg/free_product.hpp"

namespace balg {
namespace {

enum class Tok {
  lbrace, rbrace, comma, lparen, rparen, amp, bar, bang, xor_op,
  star, plus, minus, slash, number, ident, end
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::number, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalpha(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Tok::ident, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (s.substr(i, 3) == "(+)") {
      out.push_back({Tok::xor_op, "(+)", i});
      i += 3;
      continue;
    }
    Tok kind;
    switch (c) {
      case '{': kind = Tok::lbrace; break;
      case '}': kind = Tok::rbrace; break;
      case ',': kind = Tok::comma; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case '&': kind = Tok::amp; break;
      case '|': kind = Tok::bar; break;
      case '!': kind = Tok::bang; break;
      case '*': kind = Tok::star; break;
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '/': kind = Tok::slash; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) +
                         "' at offset " + std::to_string(i));
    }
    out.push_back({kind, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek() const { return tokens_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_ident(std::string_view name) const {
    return at(Tok::ident) && peek().text == name;
  }
  Token take() { return tokens_[pos_++]; }

  Token expect(Tok k, const char* what) {
    if (!at(k))
      throw ParseError(std::string("expected ") + what + " at offset " +
                       std::to_string(peek().pos));
    return take();
  }

  void expect_end() {
    if (!at(Tok::end))
      throw ParseError("unexpected '" + peek().text + "' at offset " +
                       std::to_string(peek().pos));
  }

  Elem element(const Algebra& a) {
    Elem acc = xor_term(a);
    while (at(Tok::bar)) {
      take();
      acc = a.join(acc, xor_term(a));
    }
    return acc;
  }

  Algebra algebra() {
    Algebra acc = algebra_factor();
    while (at(Tok::star)) {
      take();
      acc = Algebra::free_product(acc, algebra_factor());
    }
    return acc;
  }

 private:
  Elem xor_term(const Algebra& a) {
    Elem acc = and_term(a);
    while (at(Tok::xor_op)) {
      take();
      acc = a.disjoint_sum(acc, and_term(a));
    }
    return acc;
  }

  Elem and_term(const Algebra& a) {
    Elem acc = unary(a);
    while (at(Tok::amp)) {
      take();
      acc = a.meet(acc, unary(a));
    }
    return acc;
  }

  Elem unary(const Algebra& a) {
    if (at(Tok::bang)) {
      take();
      return a.complement(unary(a));
    }
    return primary(a);
  }

  std::vector<std::uint64_t> index_list() {
    expect(Tok::lbrace, "'{'");
    std::vector<std::uint64_t> out;
    if (!at(Tok::rbrace)) {
      for (;;) {
        const Token n = expect(Tok::number, "an index");
        out.push_back(std::stoull(n.text));
        if (at(Tok::comma)) {
          take();
          continue;
        }
        break;
      }
    }
    expect(Tok::rbrace, "'}'");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Elem primary(const Algebra& a) {
    const Token& t = peek();
    if (t.kind == Tok::lparen) {
      take();
      Elem inner = element(a);
      expect(Tok::rparen, "')'");
      return inner;
    }
    if (t.kind == Tok::number) {
      const Token n = take();
      if (n.text == "0") return a.zero();
      if (n.text == "1") return a.one();
      throw ParseError("only the constants 0 and 1 may appear bare, got '" +
                       n.text + "'");
    }
    if (t.kind == Tok::lbrace) {
      const auto atoms = index_list();
      if (a.kind() != AlgebraKind::powerset)
        throw AlgebraError("powerset literal used in algebra " + a.describe());
      const int n = a.atom_count();
      AtomSet s{static_cast<std::uint8_t>(n), 0u};
      for (auto i : atoms) {
        if (i < 1 || i > static_cast<std::uint64_t>(n))
          throw AlgebraError("atom " + std::to_string(i) +
                             " is out of range for " + a.describe());
        s.bits |= 1u << (i - 1);
      }
      return s;
    }
    if (t.kind == Tok::ident && (t.text == "fin" || t.text == "cof")) {
      const bool cof = take().text == "cof";
      auto support = index_list();
      if (a.kind() != AlgebraKind::finite_cofinite)
        throw AlgebraError("finite-cofinite literal used in algebra " +
                           a.describe());
      return IndexSet{cof, std::move(support)};
    }
    if (t.kind == Tok::ident && t.text == "rect") {
      take();
      if (a.kind() != AlgebraKind::free_product)
        throw AlgebraError("rect literal used in algebra " + a.describe());
      expect(Tok::lparen, "'('");
      Elem l = element(a.left());
      expect(Tok::comma, "','");
      Elem r = element(a.right());
      expect(Tok::rparen, "')'");
      return rectangle(a, l, r);
    }
    throw ParseError("unexpected '" + t.text + "' at offset " +
                     std::to_string(t.pos));
  }

  Algebra algebra_factor() {
    if (at(Tok::lparen)) {
      take();
      Algebra inner = algebra();
      expect(Tok::rparen, "')'");
      return inner;
    }
    const Token t = expect(Tok::ident, "an algebra name");
    if (t.text == "P" || t.text == "p") {
      const Token n = expect(Tok::number, "an atom count");
      return Algebra::powerset(std::stoi(n.text));
    }
    if (t.text == "FC" || t.text == "fc") return Algebra::finite_cofinite();
    if (t.text == "trivial") return Algebra::trivial();
    throw ParseError("unknown algebra '" + t.text + "'");
  }

 public:
  Rational coefficient() {
    const Token n = expect(Tok::number, "a coefficient");
    std::string text = n.text;
    if (at(Tok::slash)) {
      take();
      text += "/" + expect(Tok::number, "a denominator").text;
    }
    return parse_rational(text);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string index_list_text(const std::vector<std::uint64_t>& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << '}';
  return os.str();
}

}  // namespace

Algebra parse_algebra(std::string_view spec) {
  Parser p(spec);
  Algebra a = p.algebra();
  p.expect_end();
  return a;
}

Elem evaluate(const Algebra& a, std::string_view expr) {
  Parser p(expr);
  Elem x = p.element(a);
  p.expect_end();
  return x;
}

std::string format_elem(const Algebra& a, const Elem& x) {
  a.require(x);
  if (a.is_trivial()) return "0";
  switch (a.kind()) {
    case AlgebraKind::powerset: {
      std::vector<std::uint64_t> atoms;
      for (int i = 0; i < a.atom_count(); ++i)
        if (x.atom_set()->bits & (1u << i)) atoms.push_back(i + 1);
      return index_list_text(atoms);
    }
    case AlgebraKind::finite_cofinite: {
      const IndexSet& s = *x.index_set();
      return (s.cofinite ? "cof" : "fin") + index_list_text(s.support);
    }
    case AlgebraKind::free_product: {
      if (a.is_zero(x)) return "0";
      if (x == a.one()) return "1";
      std::string out;
      for (const Rectangle& r : decompose_disjoint(a, x)) {
        if (!out.empty()) out += " | ";
        out += "rect(" + format_elem(a.left(), r.left) + ", " +
               format_elem(a.right(), r.right) + ")";
      }
      return out;
    }
  }
  return {};
}

GridText grid_text(const Algebra& product, const Elem& x) {
  if (product.kind() != AlgebraKind::free_product)
    throw AlgebraError("grid_text needs a free-product algebra");
  product.require(x);
  GridText out;
  const RectForm& g = *x.rect_form();
  for (const Elem& c : g.left_cells)
    out.left_cells.push_back(format_elem(product.left(), c));
  for (const Elem& c : g.right_cells)
    out.right_cells.push_back(format_elem(product.right(), c));
  for (std::size_t i = 0; i < g.left_cells.size(); ++i) {
    std::vector<int> row;
    for (std::size_t j = 0; j < g.right_cells.size(); ++j)
      row.push_back(g.at(i, j) ? 1 : 0);
    out.matrix.push_back(std::move(row));
  }
  return out;
}

PlaceFunction parse_place_function(const PlaceSpace& space,
                                   std::string_view text) {
  Parser p(text);
  const Algebra& a = space.algebra();
  if (p.at(Tok::number) && p.peek().text == "0") {
    p.take();
    p.expect_end();
    return space.zero();
  }
  std::vector<Term> terms;
  bool first = true;
  while (!p.at(Tok::end)) {
    bool negative = false;
    if (p.at(Tok::plus) || p.at(Tok::minus)) {
      negative = p.take().kind == Tok::minus;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between place-function terms at offset " +
                       std::to_string(p.peek().pos));
    }
    Rational c = 1;
    if (p.at(Tok::number)) {
      c = p.coefficient();
      p.expect(Tok::star, "'*'");
    }
    if (!p.at_ident("chi"))
      throw ParseError("expected chi(...) at offset " + std::to_string(p.peek().pos));
    p.take();
    p.expect(Tok::lparen, "'('");
    Elem x = p.element(a);
    p.expect(Tok::rparen, "')'");
    terms.push_back(Term{negative ? Rational(-c) : c, std::move(x)});
    first = false;
  }
  if (terms.empty()) throw ParseError("empty place-function expression");
  return space.canonicalize(terms);
}

std::string format_place_function(const PlaceSpace& space,
                                  const PlaceFunction& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const Term& t : f.terms()) {
    const bool negative = t.coeff < 0;
    const Rational magnitude = negative ? Rational(-t.coeff) : t.coeff;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += to_string(magnitude) + "*chi(" +
           format_elem(space.algebra(), t.support) + ")";
  }
  return out;
}

}  // namespace balg
