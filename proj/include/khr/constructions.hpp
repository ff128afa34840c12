#ifndef KHR_CONSTRUCTIONS_HPP
#define KHR_CONSTRUCTIONS_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "khr/ideals.hpp"

namespace khr {

/// A structure map between two tables. Goodness means x+y maps onto
/// f(x)+f(y) exactly, not merely into it.
struct GoodHomomorphism {
  HyperringTable source;
  HyperringTable target;
  std::vector<Element> map;  // indexed by source element
};

struct HomomorphismReport {
  AxiomReport axioms;
  bool surjective = false;
  bool injective = false;
  ElementSubset kernel;

  bool passed() const { return axioms.passed(); }
};

HomomorphismReport validate_good_homomorphism(const GoodHomomorphism& h);

class IllFormedQuotient : public std::runtime_error {
 public:
  IllFormedQuotient(const std::string& what, std::vector<Element> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<Element>& witness() const { return witness_; }

 private:
  std::vector<Element> witness_;
};

struct QuotientPresentation {
  HyperringTable ring;                        // R/N
  std::vector<Element> coset_of;              // source element -> class index
  std::vector<ElementSubset> coset_members;   // class index -> members in the source
  GoodHomomorphism projection;
};

/**
 * R/N with classes x+N, class(x) + class(y) = { class(z) : z in x'+y' } and
 * class(x)*class(y) = class(x*y). Throws IllFormedQuotient when the classes
 * do not partition R, an operation depends on representatives, or the
 * result fails validation.
 */
QuotientPresentation quotient(const IdealHandle& ideal);

enum class Transport { Image, Preimage };

/// Image (closed to a hyperideal of the target) or preimage of `subset`.
ElementSubset transport_ideal(const GoodHomomorphism& h, Transport direction, ElementSubset subset);

GoodHomomorphism identity_homomorphism(const HyperringTable& ring);

/// Coordinate projection of `product` = build_product(left, right); which = 0 or 1.
GoodHomomorphism product_projection(const HyperringTable& left, const HyperringTable& right,
                                    const HyperringTable& product, int which);

/// x -> (x, 0) for which = 0, x -> (0, x) for which = 1.
GoodHomomorphism product_injection(const HyperringTable& left, const HyperringTable& right,
                                   const HyperringTable& product, int which);

/// A bijection a -> b preserving zero, both tables, and any identity.
std::optional<std::vector<Element>> find_isomorphism(const HyperringTable& a, const HyperringTable& b);

inline bool isomorphic(const HyperringTable& a, const HyperringTable& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace khr

#endif
