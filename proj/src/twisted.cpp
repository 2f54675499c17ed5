#include "tga/twisted.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>

namespace tga {

RootOfUnity group_commutator(const AlgebraPtr& alg, int g, int h) {
  const Group& grp = *alg->group();
  check_math(grp.commutes(g, h), "group commutator: elements do not commute");
  TwistedElement gh = TwistedElement::unit(alg, g) * TwistedElement::unit(alg, h);
  TwistedElement hg = TwistedElement::unit(alg, h) * TwistedElement::unit(alg, g);
  Cyclo ratio = gh.coeff(grp.op(g, h)) * hg.coeff(grp.op(h, g)).inv();
  auto r = ratio.as_root_of_unity();
  check_math(r.has_value(), "group commutator: scalar is not a root of unity");
  return RootOfUnity(r->second, r->first);
}

namespace {

// Basis vectors of {x : M x = 0} for a matrix over the cyclotomic field,
// one per free column, in ascending column order.
std::vector<std::vector<Cyclo>> nullspace(std::vector<std::vector<Cyclo>> rows, int cols) {
  int rank = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < cols && rank < (int)rows.size(); ++c) {
    int r = -1;
    for (int i = rank; i < (int)rows.size(); ++i)
      if (!rows[i][c].is_zero()) {
        r = i;
        break;
      }
    if (r < 0) continue;
    std::swap(rows[rank], rows[r]);
    Cyclo piv_inv = rows[rank][c].inv();
    for (int j = c; j < cols; ++j) rows[rank][j] *= piv_inv;
    for (int i = 0; i < (int)rows.size(); ++i) {
      if (i == rank || rows[i][c].is_zero()) continue;
      Cyclo f = rows[i][c];
      for (int j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Cyclo>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Cyclo> x(cols);
    x[f] = Cyclo(1);
    for (int i = 0; i < rank; ++i) x[pivot_col[i]] = -rows[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace

std::vector<TwistedElement> center_basis(const AlgebraPtr& alg, bool against_all) {
  const Group& grp = *alg->group();
  int n = grp.size();
  std::vector<int> hs;
  if (against_all) {
    for (int h = 1; h < n; ++h) hs.push_back(h);
  } else {
    for (const auto& [name, h] : grp.generators()) hs.push_back(h);
  }
  // x u_h - u_h x = 0: coefficient of u_k gives, per h, the equation
  //   x_{k h^-1} c(k h^-1, h) - x_{h^-1 k} c(h, h^-1 k) = 0.
  std::vector<std::vector<Cyclo>> rows;
  for (int h : hs) {
    int hi = grp.inv(h);
    for (int k = 0; k < n; ++k) {
      std::vector<Cyclo> row(n);
      int g1 = grp.op(k, hi);
      int g2 = grp.op(hi, k);
      row[g1] += alg->at(g1, h).to_cyclo();
      row[g2] -= alg->at(h, g2).to_cyclo();
      bool nonzero = false;
      for (const Cyclo& v : row) nonzero = nonzero || !v.is_zero();
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  std::vector<TwistedElement> basis;
  for (const auto& x : nullspace(std::move(rows), n)) {
    TwistedElement e(alg);
    for (int g = 0; g < n; ++g)
      if (!x[g].is_zero()) e += TwistedElement::unit(alg, g, x[g]);
    basis.push_back(std::move(e));
  }
  return basis;
}

std::vector<std::vector<Cyclo>> left_matrix(const TwistedElement& x) {
  check_input(x.algebra() != nullptr, "left matrix: zero element has no algebra");
  const AlgebraPtr& alg = x.algebra();
  int n = alg->group()->size();
  std::vector<std::vector<Cyclo>> m(n, std::vector<Cyclo>(n));
  for (int h = 0; h < n; ++h) {
    TwistedElement col = x * TwistedElement::unit(alg, h);
    for (const auto& [k, v] : col.coeffs()) m[k][h] = v;
  }
  return m;
}

std::vector<std::vector<std::vector<Cyclo>>> regular_representation(const AlgebraPtr& alg) {
  int n = alg->group()->size();
  std::vector<std::vector<std::vector<Cyclo>>> out;
  out.reserve(n);
  for (int g = 0; g < n; ++g) out.push_back(left_matrix(TwistedElement::unit(alg, g)));
  return out;
}

namespace {

struct Token {
  enum Kind { kOp, kInt, kIdent, kUnit, kEnd } kind;
  std::string text;  // op char / integer digits / identifier / word inside u(...)
};

std::vector<Token> lex_element(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace((unsigned char)c)) {
      ++i;
    } else if (std::strchr("+-*/^()", c)) {
      out.push_back({Token::kOp, std::string(1, c)});
      ++i;
    } else if (std::isdigit((unsigned char)c)) {
      size_t j = i;
      while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
      out.push_back({Token::kInt, s.substr(i, j - i)});
      i = j;
    } else if (std::isalpha((unsigned char)c) || c == '_') {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum((unsigned char)s[j]) || s[j] == '_'))
        ++j;
      std::string name = s.substr(i, j - i);
      if (name == "u" && j < s.size() && s[j] == '(') {
        size_t k = j + 1, depth = 1;
        while (k < s.size() && depth > 0) {
          if (s[k] == '(') ++depth;
          if (s[k] == ')') --depth;
          ++k;
        }
        check_input(depth == 0, "element literal: unbalanced u(...)");
        out.push_back({Token::kUnit, s.substr(j + 1, k - j - 2)});
        i = k;
      } else {
        out.push_back({Token::kIdent, name});
        i = j;
      }
    } else {
      throw input_error("element literal: unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Token::kEnd, ""});
  return out;
}

struct ElementParser {
  const AlgebraPtr& alg;
  std::vector<Token> toks;
  size_t pos = 0;

  const Token& peek() const { return toks[pos]; }
  Token next() { return toks[pos++]; }
  bool eat_op(const char* op) {
    if (peek().kind == Token::kOp && peek().text == op) {
      ++pos;
      return true;
    }
    return false;
  }

  long integer() {
    long sign = 1;
    while (eat_op("-")) sign = -sign;
    check_input(peek().kind == Token::kInt, "element literal: expected integer");
    return sign * std::stol(next().text);
  }

  TwistedElement primary() {
    if (eat_op("(")) {
      TwistedElement e = expression();
      check_input(eat_op(")"), "element literal: expected ')'");
      return e;
    }
    Token t = next();
    if (t.kind == Token::kUnit)
      return TwistedElement::unit(alg, alg->group()->eval_word(t.text));
    if (t.kind == Token::kInt)
      return TwistedElement::unit(alg, 0, Cyclo(std::stol(t.text)));
    if (t.kind == Token::kIdent) {
      auto r = RootOfUnity::parse(t.text);
      check_input(r.has_value(), "element literal: unknown scalar '" + t.text + "'");
      return TwistedElement::unit(alg, 0, r->to_cyclo());
    }
    throw input_error("element literal: unexpected token '" + t.text + "'");
  }

  TwistedElement factor() {
    TwistedElement e = primary();
    if (eat_op("^")) e = e.pow(integer());
    return e;
  }

  TwistedElement term() {
    TwistedElement e = factor();
    for (;;) {
      if (eat_op("*")) {
        e *= factor();
      } else if (eat_op("/")) {
        e *= factor().inv();
      } else {
        return e;
      }
    }
  }

  TwistedElement expression() {
    bool neg = false;
    while (true) {
      if (eat_op("-")) {
        neg = !neg;
      } else if (eat_op("+")) {
        // leading plus: no effect
      } else {
        break;
      }
    }
    TwistedElement e = term();
    if (neg) e = -e;
    for (;;) {
      if (eat_op("+")) {
        e += term();
      } else if (eat_op("-")) {
        e -= term();
      } else {
        return e;
      }
    }
  }
};

}  // namespace

TwistedElement parse_element(const AlgebraPtr& alg, const std::string& text) {
  check_input(alg != nullptr, "element literal: null algebra");
  ElementParser p{alg, lex_element(text)};
  TwistedElement e = p.expression();
  check_input(p.peek().kind == Token::kEnd, "element literal: trailing input");
  return e;
}

}  // namespace tga
