#ifndef KHR_DSL_HPP
#define KHR_DSL_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "khr/core.hpp"

namespace khr {

struct SourceSpan {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  friend bool operator==(SourceSpan, SourceSpan) = default;
};

enum class ParseErrorKind { UnknownElement, MissingCell, DuplicateCell, BadHeader, EmptySet, Syntax };

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, ParseErrorKind kind, const std::string& detail);

  SourceSpan span() const { return span_; }
  ParseErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  SourceSpan span_;
  ParseErrorKind kind_;
  std::string detail_;
};

/**
 * Parses the line-oriented `.khr` table format:
 *
 *     hyperring H3
 *     elements: 0 1 a
 *     zero: 0
 *     one: 1          # optional
 *     add:
 *       1 1 -> {0,1,a}
 *     mul:
 *       1 a -> a
 *
 * Cells (x, y) and (y, x) may be given once; the missing one is mirrored.
 * A repeated cell must agree with the first occurrence. Every cell must be
 * covered. Axioms are not checked.
 */
HyperringTable parse_hyperring(std::string_view text);

/// Canonical text: elements in index order, every cell in row-major order,
/// subset members ascending. parse_hyperring(serialize_hyperring(r)) == r.
std::string serialize_hyperring(const HyperringTable& ring);

class ParamOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ChainMulRule { Min };

/// Z/nZ with singleton addition, 2 <= n <= 64.
HyperringTable build_classical_zn(int n);

/**
 * Finite chain 0 < c1 < ... < 1 with x+y = {max(x,y)} for x != y and
 * x+x = {0, ..., x}. Multiplication follows `rule`. The result is only a
 * candidate; callers must validate it.
 */
HyperringTable build_chain(int n, ChainMulRule rule = ChainMulRule::Min);

/// Componentwise product; element (x1, x2) has index x1 * |R2| + x2.
HyperringTable build_product(const HyperringTable& left, const HyperringTable& right);

/// Plain constructor with the builder's range checks (order >= 2).
HyperringTable build_from_tables(std::string name, std::vector<std::string> names, std::vector<ElementSubset> add,
                                 std::vector<Element> mul, Element zero, std::optional<Element> one = std::nullopt);

/// The three-element hyperring with 1+1 = {0,1,a}, a+a = {0,a}, a*a = 0.
HyperringTable build_h3();

}  // namespace khr

#endif
