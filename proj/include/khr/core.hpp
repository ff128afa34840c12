#ifndef KHR_CORE_HPP
#define KHR_CORE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "khr/subset.hpp"

namespace khr {

/// Raised when a table violates the structural invariants (sizes, ranges,
/// empty hyperaddition cells, duplicate names).
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by negate() when zero or inverse uniqueness fails.
class NotCanonical : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Complete finite presentation of a candidate commutative Krasner hyperring.
 *
 * The addition table maps each ordered pair to a nonempty subset of the
 * carrier; the multiplication table maps each pair to a single element.
 * Nothing about the ring axioms is checked here, only shape. Instances are
 * immutable once built.
 */
class HyperringTable {
 public:
  HyperringTable(std::string name, std::vector<std::string> names, std::vector<ElementSubset> add,
                 std::vector<Element> mul, Element zero, std::optional<Element> one = std::nullopt);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name_of(Element x) const { return names_[static_cast<std::size_t>(x)]; }
  std::optional<Element> find(std::string_view label) const;

  ElementSubset add(Element x, Element y) const { return add_[cell(x, y)]; }
  Element mul(Element x, Element y) const { return mul_[cell(x, y)]; }
  Element zero() const { return zero_; }
  std::optional<Element> one() const { return one_; }
  ElementSubset carrier() const { return ElementSubset::full(order()); }

  const std::vector<ElementSubset>& add_table() const { return add_; }
  const std::vector<Element>& mul_table() const { return mul_; }

  HyperringTable renamed(std::string name) const;

  friend bool operator==(const HyperringTable&, const HyperringTable&) = default;

 private:
  std::size_t cell(Element x, Element y) const {
    return static_cast<std::size_t>(x) * names_.size() + static_cast<std::size_t>(y);
  }

  std::string name_;
  std::vector<std::string> names_;
  std::vector<ElementSubset> add_;
  std::vector<Element> mul_;
  Element zero_ = 0;
  std::optional<Element> one_;
};

/// Setwise extension of hyperaddition: the union of x+y over x in a, y in b.
ElementSubset hyper_sum(const HyperringTable& ring, ElementSubset a, ElementSubset b);

/// The unique x' with zero in x+x'. Throws NotCanonical when it does not exist.
Element negate(const HyperringTable& ring, Element x);

/// Inverses of every element, or -1 where no unique inverse exists.
std::vector<Element> inverse_table(const HyperringTable& ring);

/// Setwise difference x - y = x + (-y) over subsets.
ElementSubset hyper_difference(const HyperringTable& ring, ElementSubset a, ElementSubset b);

/// r * S for a subset S.
ElementSubset scale(const HyperringTable& ring, Element r, ElementSubset s);

/// x^k for k >= 1.
Element power(const HyperringTable& ring, Element x, int k);

/// Declared identity, or one found by search when none was declared.
std::optional<Element> identity_element(const HyperringTable& ring);

struct AxiomViolation {
  std::string axiom_id;
  std::vector<Element> witness;  // first witness in lexicographic order
  std::string message;
  std::size_t count = 0;
  std::vector<std::vector<Element>> all_witnesses;  // only filled when requested
};

struct AxiomReport {
  std::vector<std::string> checked;  // axiom ids, in checking order
  std::vector<AxiomViolation> violations;

  bool passed() const { return violations.empty(); }
  bool violated(std::string_view axiom_id) const;
  /// Number of checked axioms whose id starts with `prefix` that hold.
  int satisfied(std::string_view prefix) const;
  int total(std::string_view prefix) const;
};

struct ValidationOptions {
  bool all_witnesses = false;
};

namespace axiom {
inline constexpr std::string_view kAssociative = "C1-associative";
inline constexpr std::string_view kCommutative = "C2-commutative";
inline constexpr std::string_view kZeroScalar = "C3-zero-scalar";
inline constexpr std::string_view kUniqueInverse = "C4-unique-inverse";
inline constexpr std::string_view kReversible = "C5-reversible";
inline constexpr std::string_view kMulAssociative = "K1-mul-associative";
inline constexpr std::string_view kAbsorbingZero = "K2-absorbing-zero";
inline constexpr std::string_view kDistributive = "K3-distributive";
inline constexpr std::string_view kMulCommutative = "K4-mul-commutative";
}  // namespace axiom

/// Exhaustive check of the five canonical hypergroup axioms.
AxiomReport validate_canonical_hypergroup(const HyperringTable& ring, const ValidationOptions& opts = {});

/// Canonical hypergroup axioms plus the multiplicative ones (associativity,
/// absorbing zero and declared identity, both distributive laws as set
/// equalities, commutativity).
AxiomReport validate_krasner_hyperring(const HyperringTable& ring, const ValidationOptions& opts = {});

/// Human-readable subset, e.g. "{0,a}".
std::string format_subset(const HyperringTable& ring, ElementSubset s);

}  // namespace khr

#endif
