#include "hypercurv/expression.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <utility>

namespace hypercurv {

ExpressionTree::ExpressionTree(std::vector<Node> nodes, int root, std::size_t arity)
    : nodes_(std::move(nodes)), root_(root), arity_(arity) {
  if (arity_ == 0) throw InvalidArgument("expression arity must be positive");
  if (root_ < 0 || static_cast<std::size_t>(root_) >= nodes_.size())
    throw InvalidArgument("expression root out of range");
  for (const Node& node : nodes_) {
    if (node.kind == Kind::Variable && node.variable >= arity_)
      throw InvalidArgument("expression variable index exceeds arity");
  }
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t arity) : text_(text), arity_(arity) {}

  ExpressionTree parse() {
    const int root = parse_expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return ExpressionTree(std::move(nodes_), root, arity_);
  }

 private:
  using Kind = ExpressionTree::Kind;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t offset) const {
    throw ParseError(what, offset);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int add(ExpressionTree::Node node) {
    nodes_.push_back(node);
    return static_cast<int>(nodes_.size() - 1);
  }

  int binary(Kind kind, int lhs, int rhs) {
    ExpressionTree::Node node{kind};
    node.lhs = lhs;
    node.rhs = rhs;
    return add(node);
  }

  int parse_expr() {
    int lhs = parse_term();
    for (;;) {
      if (accept('+'))
        lhs = binary(Kind::Add, lhs, parse_term());
      else if (accept('-'))
        lhs = binary(Kind::Sub, lhs, parse_term());
      else
        return lhs;
    }
  }

  int parse_term() {
    int lhs = parse_factor();
    for (;;) {
      if (accept('*'))
        lhs = binary(Kind::Mul, lhs, parse_factor());
      else if (accept('/'))
        lhs = binary(Kind::Div, lhs, parse_factor());
      else
        return lhs;
    }
  }

  int parse_factor() {
    if (accept('-')) {
      ExpressionTree::Node node{Kind::Neg};
      node.lhs = parse_factor();
      return add(node);
    }
    const int base = parse_atom();
    if (!accept('^')) return base;
    ExpressionTree::Node node{Kind::Pow};
    node.lhs = base;
    node.exponent = parse_exponent();
    return add(node);
  }

  // digits ('^' exponent)?, folded right to left.
  std::uint64_t parse_exponent() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) fail("expected exponent");
    if (text_[pos_] == '-') fail("negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("exponent must be a non-negative integer literal");
    std::uint64_t base = 0;
    const auto* first = text_.data() + pos_;
    const auto* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, base);
    if (ec != std::errc()) fail_at("exponent too large", start);
    pos_ += static_cast<std::size_t>(ptr - first);
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
      fail_at("exponent must be a non-negative integer literal", start);
    if (!accept('^')) return base;
    const std::uint64_t power = parse_exponent();
    std::uint64_t result = 1;
    for (std::uint64_t k = 0; k < power; ++k) {
      if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
        fail_at("exponent too large", start);
      result *= base;
      if (result == 0 || result == 1) break;
    }
    return result;
  }

  int parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      const int inner = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  int parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t count = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++count;
      }
      return count;
    };
    std::size_t mantissa = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) fail_at("malformed number", start);
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) fail("malformed number exponent");
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) fail_at("malformed number", start);
    ExpressionTree::Node node{Kind::Constant};
    node.constant = value;
    return add(node);
  }

  int parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string_view ident = text_.substr(start, pos_ - start);
    if (ident.size() < 2 || ident[0] != 'x' ||
        ident.substr(1).find_first_not_of("0123456789") != std::string_view::npos)
      fail_at("unknown identifier '" + std::string(ident) + "'", start);
    std::size_t index = 0;
    const auto [ptr, ec] = std::from_chars(ident.data() + 1, ident.data() + ident.size(), index);
    if (ec != std::errc() || index == 0 || index > arity_)
      fail_at("variable " + std::string(ident) + " out of range x1..x" + std::to_string(arity_), start);
    ExpressionTree::Node node{Kind::Variable};
    node.variable = index - 1;
    return add(node);
  }

  std::string_view text_;
  std::size_t arity_;
  std::size_t pos_ = 0;
  std::vector<ExpressionTree::Node> nodes_;
};

void write_node(std::ostringstream& out, const ExpressionTree& tree, int index) {
  using Kind = ExpressionTree::Kind;
  const auto& node = tree.nodes()[static_cast<std::size_t>(index)];
  auto infix = [&](const char* op) {
    out << '(';
    write_node(out, tree, node.lhs);
    out << ' ' << op << ' ';
    write_node(out, tree, node.rhs);
    out << ')';
  };
  switch (node.kind) {
    case Kind::Constant: {
      char buf[64];
      const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, node.constant);
      out << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
      break;
    }
    case Kind::Variable:
      out << 'x' << node.variable + 1;
      break;
    case Kind::Add: infix("+"); break;
    case Kind::Sub: infix("-"); break;
    case Kind::Mul: infix("*"); break;
    case Kind::Div: infix("/"); break;
    case Kind::Pow:
      out << '(';
      write_node(out, tree, node.lhs);
      out << ")^" << node.exponent;
      break;
    case Kind::Neg:
      out << "(-";
      write_node(out, tree, node.lhs);
      out << ')';
      break;
  }
}

}  // namespace

ExpressionTree parse_expression(std::string_view text, std::size_t arity) {
  if (arity == 0) throw InvalidArgument("expression arity must be positive");
  return Parser(text, arity).parse();
}

std::string to_string(const ExpressionTree& tree) {
  std::ostringstream out;
  write_node(out, tree, tree.root());
  return out.str();
}

}  // namespace hypercurv
