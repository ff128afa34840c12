#ifndef KHR_CLASSIFY_HPP
#define KHR_CLASSIFY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "khr/ideals.hpp"

namespace khr {

class NotProper : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * A reduction of hyperideals. phi_empty maps every ideal to the Empty
 * marker, which removes no premise; the others map N to a sub-ideal of N.
 */
class PhiReducer {
 public:
  enum class Kind { Empty, Zero, One, Power, Omega };

  static PhiReducer empty() { return PhiReducer(Kind::Empty, 0); }
  static PhiReducer zero() { return PhiReducer(Kind::Zero, 0); }
  static PhiReducer one() { return PhiReducer(Kind::One, 0); }
  static PhiReducer omega() { return PhiReducer(Kind::Omega, 0); }
  /// phi_n(N) = N^n, n >= 2.
  static PhiReducer power(int n);

  /// "empty", "0", "1", "omega", "n:K" or a bare integer K >= 2.
  static PhiReducer parse(const std::string& text);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  std::string label() const;

  friend bool operator==(const PhiReducer&, const PhiReducer&) = default;

 private:
  PhiReducer(Kind kind, int n) : kind_(kind), n_(n) {}
  Kind kind_;
  int n_;
};

/// The family swept by the corpus checks: empty, 0, 1, 2, 3, omega.
std::vector<PhiReducer> standard_phi_family();

/// phi(N); std::nullopt stands for the Empty marker.
std::optional<ElementSubset> apply_phi(const PhiReducer& phi, const IdealHandle& ideal);

/// N minus phi(N), with Empty removing nothing.
ElementSubset phi_difference(const PhiReducer& phi, const IdealHandle& ideal);

struct ClassicalFlags {
  ClassificationResult prime;
  ClassificationResult maximal;
  ClassificationResult primary;
};

ClassicalFlags classify_classical(const IdealHandle& ideal);

/// Regular a with a*b in N forces b in N. Witness roles a, b.
ClassificationResult is_r_hyperideal(const IdealHandle& ideal);

/// Regular a with a*b in N forces some power of b into N.
ClassificationResult is_pr_hyperideal(const IdealHandle& ideal);

struct SpecialFlags {
  ClassificationResult z0;
  ClassificationResult pure;
  ClassificationResult vn_regular;
};

SpecialFlags classify_special(const IdealHandle& ideal);

enum class PhiClass { R, Pr, Prime, Primary, Pure, Vnr, StronglyR };

std::string to_string(PhiClass c);
std::vector<PhiClass> all_phi_classes();

/// The chosen predicate with its premise restricted to N - phi(N).
ClassificationResult is_phi_class(const IdealHandle& ideal, const PhiReducer& phi, PhiClass cls);

/// Same, reusing a precomputed ideal list (only StronglyR reads it).
ClassificationResult is_phi_class(const IdealHandle& ideal, const PhiReducer& phi, PhiClass cls,
                                  const std::vector<ElementSubset>& all_ideals);

struct RingConditions {
  ClassificationResult property_a;
  ClassificationResult annihilator_condition;
  ClassificationResult sac;
  ClassificationResult reduced;
  ClassificationResult hyperdomain;
};

RingConditions ring_conditions(const HyperringTable& ring);

}  // namespace khr

#endif
