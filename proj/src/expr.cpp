#include "binform/expr.hpp"

#include <cctype>

#include "binform/error.hpp"

namespace binform {

namespace {

// Guards expansion of inputs like ((x+y)^256)^256.
constexpr int kMaxDegree = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::unique_ptr<ExprAST> parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    auto node = sum();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, ErrorKind kind = ErrorKind::SyntaxError) const {
    fail_at(pos_, msg, kind);
  }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg, ErrorKind kind = ErrorKind::SyntaxError) const {
    throw Error(kind, msg + " at offset " + std::to_string(at), at);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  static std::unique_ptr<ExprAST> node(ExprAST::Kind kind, std::size_t offset) {
    auto n = std::make_unique<ExprAST>();
    n->kind = kind;
    n->offset = offset;
    return n;
  }

  std::unique_ptr<ExprAST> sum() {
    auto lhs = product();
    for (skip_space(); peek() == '+' || peek() == '-'; skip_space()) {
      const auto kind = peek() == '+' ? ExprAST::Kind::Sum : ExprAST::Kind::Difference;
      auto n = node(kind, lhs->offset);
      ++pos_;
      n->children.push_back(std::move(lhs));
      n->children.push_back(product());
      lhs = std::move(n);
    }
    return lhs;
  }

  std::unique_ptr<ExprAST> product() {
    auto lhs = unary();
    for (skip_space(); peek() == '*'; skip_space()) {
      auto n = node(ExprAST::Kind::Product, lhs->offset);
      ++pos_;
      n->children.push_back(std::move(lhs));
      n->children.push_back(unary());
      lhs = std::move(n);
    }
    return lhs;
  }

  std::unique_ptr<ExprAST> unary() {
    skip_space();
    if (peek() == '-') {
      auto n = node(ExprAST::Kind::Negate, pos_);
      ++pos_;
      n->children.push_back(unary());
      return n;
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  std::unique_ptr<ExprAST> power() {
    auto base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    auto n = node(ExprAST::Kind::Power, base->offset);
    n->exponent = exponent();
    n->children.push_back(std::move(base));
    return n;
  }

  // Right-associative chain of non-negative integer constants.
  unsigned exponent() {
    skip_space();
    const std::size_t start = pos_;
    unsigned value = 0;
    if (peek() == '-') fail("negative exponent", ErrorKind::NegativeExponent);
    if (peek() == '(') {
      ++pos_;
      value = exponent();
      skip_space();
      if (peek() != ')') fail("expected ')' in exponent");
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        value = value * 10 + static_cast<unsigned>(peek() - '0');
        if (value > kMaxExponent) fail_at(start, "exponent exceeds " + std::to_string(kMaxExponent));
        ++pos_;
      }
      if (peek() == '.' || peek() == '/') fail("exponent must be an integer");
    } else {
      fail(at_end() ? "missing exponent" : "exponent must be a non-negative integer");
    }
    skip_space();
    if (peek() == '^') {
      ++pos_;
      const unsigned e = exponent();
      unsigned long long r = 1;
      for (unsigned i = 0; i < e; ++i) {
        r *= value;
        if (r > kMaxExponent) fail_at(start, "exponent exceeds " + std::to_string(kMaxExponent));
      }
      value = static_cast<unsigned>(r);
    }
    return value;
  }

  std::unique_ptr<ExprAST> primary() {
    skip_space();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      auto n = node(ExprAST::Kind::Group, start);
      n->children.push_back(sum());
      skip_space();
      if (peek() != ')') fail(at_end() ? "missing ')'" : "expected ')'");
      ++pos_;
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return literal();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (name != "x" && name != "y") {
        fail_at(start, "unknown identifier '" + std::string(name) + "'", ErrorKind::UnknownIdentifier);
      }
      auto n = node(ExprAST::Kind::Variable, start);
      n->variable = name[0];
      return n;
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  std::unique_ptr<ExprAST> literal() {
    const std::size_t start = pos_;
    auto digits = [this] {
      std::size_t n = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t n = digits();
    if (peek() == '.') {
      ++pos_;
      n += digits();
      if (n == 0) fail_at(start, "malformed number");
    } else if (peek() == '/' && pos_ + 1 < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      digits();
    }
    if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
      fail("implicit multiplication is not supported; use '*'");
    }
    auto node_ = node(ExprAST::Kind::Literal, start);
    try {
      node_->value = parse_rational(text_.substr(start, pos_ - start));
    } catch (const Error& e) {
      fail_at(start, e.what());
    }
    return node_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_monomial(std::string& out, const Rational& coeff, int i, int j, bool first) {
  const int s = sgn(coeff);
  const Rational mag = abs(coeff);
  if (first) {
    if (s < 0) out += "-";
  } else {
    out += s < 0 ? " - " : " + ";
  }
  std::string body;
  auto factor = [&body](const std::string& piece) {
    if (!body.empty()) body += "*";
    body += piece;
  };
  if (mag != 1 || (i == 0 && j == 0)) factor(to_string(mag));
  if (i > 0) factor(i == 1 ? "x" : "x^" + std::to_string(i));
  if (j > 0) factor(j == 1 ? "y" : "y^" + std::to_string(j));
  out += body;
}

}  // namespace

std::unique_ptr<ExprAST> parse_expression(std::string_view text) { return Parser(text).parse(); }

BivariatePoly evaluate(const ExprAST& n) {
  switch (n.kind) {
    case ExprAST::Kind::Variable:
      return n.variable == 'x' ? BivariatePoly::x() : BivariatePoly::y();
    case ExprAST::Kind::Literal:
      return BivariatePoly::constant(n.value);
    case ExprAST::Kind::Negate:
      return -evaluate(*n.children[0]);
    case ExprAST::Kind::Group:
      return evaluate(*n.children[0]);
    case ExprAST::Kind::Sum:
      return evaluate(*n.children[0]) + evaluate(*n.children[1]);
    case ExprAST::Kind::Difference:
      return evaluate(*n.children[0]) - evaluate(*n.children[1]);
    case ExprAST::Kind::Product: {
      BivariatePoly a = evaluate(*n.children[0]), b = evaluate(*n.children[1]);
      if (!a.is_zero() && !b.is_zero() && a.total_degree() + b.total_degree() > kMaxDegree) {
        throw Error(ErrorKind::SyntaxError, "expression degree exceeds " + std::to_string(kMaxDegree), n.offset);
      }
      return a * b;
    }
    case ExprAST::Kind::Power: {
      BivariatePoly base = evaluate(*n.children[0]);
      if (!base.is_zero() && static_cast<long>(base.total_degree()) * n.exponent > kMaxDegree) {
        throw Error(ErrorKind::SyntaxError, "expression degree exceeds " + std::to_string(kMaxDegree), n.offset);
      }
      return pow(base, static_cast<int>(n.exponent));
    }
  }
  throw Error(ErrorKind::Internal, "unknown expression node");
}

BivariatePoly parse_polynomial(std::string_view text) { return evaluate(*parse_expression(text)); }

HomogeneousForm to_homogeneous(const BivariatePoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroForm, "the polynomial is identically zero");
  const std::set<int> degs = p.total_degrees();
  if (degs.size() > 1) {
    std::vector<int> details(degs.rbegin(), degs.rend());
    std::string list;
    for (int d : details) list += (list.empty() ? "" : ", ") + std::to_string(d);
    throw Error(ErrorKind::NotHomogeneous, "monomials of total degrees {" + list + "}", std::nullopt, details);
  }
  return form_of_degree(p, *degs.begin());
}

std::string to_text(const BivariatePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  // Descending x exponent, then descending y exponent.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    append_monomial(out, it->second, it->first.first, it->first.second, first);
    first = false;
  }
  return out;
}

std::string to_text(const HomogeneousForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  const int p = f.degree();
  for (int i = 0; i <= p; ++i) {
    if (sgn(f.coeff(i)) == 0) continue;
    append_monomial(out, f.coeff(i), p - i, i, first);
    first = false;
  }
  return out;
}

}  // namespace binform
