#ifndef KHR_IDEALS_HPP
#define KHR_IDEALS_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "khr/core.hpp"
#include "khr/result.hpp"

namespace khr {

class NotAHyperideal : public std::invalid_argument {
 public:
  NotAHyperideal(const std::string& what, ClassificationResult detail)
      : std::invalid_argument(what), detail_(std::move(detail)) {}
  const ClassificationResult& detail() const { return detail_; }

 private:
  ClassificationResult detail_;
};

/// Lemma-style membership test: contains zero, closed under x - y, absorbs
/// multiplication by any ring element.
ClassificationResult is_hyperideal(const HyperringTable& ring, ElementSubset s);

/**
 * A hyperideal together with the ring it lives in. The ring is referenced,
 * not owned, and must outlive the handle.
 */
class IdealHandle {
 public:
  /// Throws NotAHyperideal with the closure witness when `members` is not one.
  static IdealHandle checked(const HyperringTable& ring, ElementSubset members);
  /// For subsets already known to be hyperideals (enumeration output, closures).
  static IdealHandle trusted(const HyperringTable& ring, ElementSubset members) { return {ring, members}; }

  const HyperringTable& ring() const { return *ring_; }
  ElementSubset members() const { return members_; }
  bool proper() const { return members_ != ring_->carrier(); }

 private:
  IdealHandle(const HyperringTable& ring, ElementSubset members) : ring_(&ring), members_(members) {}

  const HyperringTable* ring_;
  ElementSubset members_;
};

/// Least hyperideal containing `gens` (and zero).
ElementSubset generated_hyperideal(const HyperringTable& ring, ElementSubset gens);

/// Every hyperideal, sorted by (size, mask).
std::vector<ElementSubset> enumerate_hyperideals(const HyperringTable& ring);

/// {r : r*s = 0 for all s in S}; the whole carrier for S empty.
ElementSubset annihilator(const HyperringTable& ring, ElementSubset s);

struct RegularSplit {
  ElementSubset regular;
  ElementSubset zero_divisors;
};

/// Partition into regular elements (ann = {0}) and zero divisors; zero is
/// always a zero divisor.
RegularSplit regulars(const HyperringTable& ring);

/// {r : r^k in N for some 1 <= k <= order}.
ElementSubset radical(const IdealHandle& ideal);

/// Nilradical, the radical of the zero ideal.
ElementSubset nilradical(const HyperringTable& ring);

/// (N : S) = {x : s*x in N for all s in S}.
ElementSubset colon(const IdealHandle& ideal, ElementSubset s);

enum class IdealOp { Sum, Product, Intersection, Power };

ElementSubset ideal_sum(const HyperringTable& ring, ElementSubset a, ElementSubset b);
ElementSubset ideal_product(const HyperringTable& ring, ElementSubset a, ElementSubset b);
ElementSubset ideal_intersection(ElementSubset a, ElementSubset b);
ElementSubset ideal_power(const HyperringTable& ring, ElementSubset a, int k);

/// Folds `op` over `args` left to right; Power uses args[0] and `k`.
ElementSubset ideal_arith(const HyperringTable& ring, IdealOp op, std::span<const ElementSubset> args, int k = 1);

/// Prime test: proper, and a*b in P forces a in P or b in P. Witness roles a, b.
ClassificationResult prime_check(const HyperringTable& ring, ElementSubset p);

struct MinimalPrimes {
  std::vector<ElementSubset> primes;
  bool no_prime_found = false;
};

/// Primes containing N that are minimal under inclusion among such primes.
MinimalPrimes minimal_primes_over(const IdealHandle& ideal);

/// Sum of all minimal nonzero hyperideals, or {zero} when there are none.
ElementSubset socle(const HyperringTable& ring);

/// e with e*e = e.
ElementSubset idempotents(const HyperringTable& ring);

}  // namespace khr

#endif
