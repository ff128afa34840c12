#include "khr/ideals.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace khr {

namespace {

std::vector<Element> inverses_or_throw(const HyperringTable& ring) {
  auto inv = inverse_table(ring);
  for (Element x = 0; x < ring.order(); ++x)
    if (inv[static_cast<std::size_t>(x)] < 0) negate(ring, x);  // throws with the right message
  return inv;
}

bool closed(const HyperringTable& ring, const std::vector<Element>& inv, ElementSubset s) {
  if (!s.contains(ring.zero())) return false;
  for (Element x : s)
    for (Element y : s)
      if (!ring.add(x, inv[static_cast<std::size_t>(y)]).subset_of(s)) return false;
  for (Element x : s)
    for (Element r = 0; r < ring.order(); ++r)
      if (!s.contains(ring.mul(r, x))) return false;
  return true;
}

}  // namespace

ClassificationResult is_hyperideal(const HyperringTable& ring, ElementSubset s) {
  if (!s.contains(ring.zero())) return ClassificationResult::fails({{"zero", ring.zero()}}, "zero is missing");
  const auto inv = inverses_or_throw(ring);
  for (Element x : s)
    for (Element y : s) {
      const ElementSubset diff = ring.add(x, inv[static_cast<std::size_t>(y)]);
      if (!diff.subset_of(s)) {
        const Element out = (diff - s).first();
        return ClassificationResult::fails({{"x", x}, {"y", y}, {"outside", out}},
                                           ring.name_of(x) + "-" + ring.name_of(y) + " contains " +
                                               ring.name_of(out) + " which is not in the set");
      }
    }
  for (Element x : s)
    for (Element r = 0; r < ring.order(); ++r)
      if (!s.contains(ring.mul(r, x)))
        return ClassificationResult::fails({{"r", r}, {"x", x}}, ring.name_of(r) + "*" + ring.name_of(x) + " = " +
                                                                     ring.name_of(ring.mul(r, x)) +
                                                                     " is not in the set");
  return ClassificationResult::holds();
}

IdealHandle IdealHandle::checked(const HyperringTable& ring, ElementSubset members) {
  auto res = is_hyperideal(ring, members);
  if (!res) throw NotAHyperideal(format_subset(ring, members) + " is not a hyperideal: " + res.note, res);
  return {ring, members};
}

ElementSubset generated_hyperideal(const HyperringTable& ring, ElementSubset gens) {
  const auto inv = inverses_or_throw(ring);
  ElementSubset s = gens | ElementSubset::singleton(ring.zero());
  while (true) {
    ElementSubset next = s;
    for (Element x : s) {
      for (Element y : s) next |= ring.add(x, inv[static_cast<std::size_t>(y)]);
      for (Element r = 0; r < ring.order(); ++r) next.insert(ring.mul(r, x));
    }
    if (next == s) return s;
    s = next;
  }
}

std::vector<ElementSubset> enumerate_hyperideals(const HyperringTable& ring) {
  const int n = ring.order();
  std::vector<ElementSubset> out;
  if (n <= 16) {
    const auto inv = inverses_or_throw(ring);
    // Scan every subset of the carrier minus zero, then add zero back.
    const Element z = ring.zero();
    const std::uint64_t others = ElementSubset::full(n).bits() & ~(std::uint64_t{1} << z);
    std::uint64_t sub = 0;
    do {
      ElementSubset s{sub | (std::uint64_t{1} << z)};
      if (closed(ring, inv, s)) out.push_back(s);
      sub = (sub - others) & others;
    } while (sub != 0);
  } else {
    std::set<std::uint64_t> seen;
    std::vector<ElementSubset> principal;
    for (Element x = 0; x < n; ++x) {
      auto p = generated_hyperideal(ring, ElementSubset::singleton(x));
      if (seen.insert(p.bits()).second) principal.push_back(p);
    }
    std::vector<ElementSubset> frontier = principal;
    out = principal;
    while (!frontier.empty()) {
      std::vector<ElementSubset> next;
      for (auto a : frontier)
        for (auto p : principal) {
          auto s = ideal_sum(ring, a, p);
          if (seen.insert(s.bits()).second) {
            next.push_back(s);
            out.push_back(s);
          }
        }
      frontier = std::move(next);
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

ElementSubset annihilator(const HyperringTable& ring, ElementSubset s) {
  ElementSubset out;
  for (Element r = 0; r < ring.order(); ++r) {
    bool kills = true;
    for (Element x : s)
      if (ring.mul(r, x) != ring.zero()) {
        kills = false;
        break;
      }
    if (kills) out.insert(r);
  }
  return out;
}

RegularSplit regulars(const HyperringTable& ring) {
  RegularSplit split;
  const ElementSubset zero_only = ElementSubset::singleton(ring.zero());
  for (Element a = 0; a < ring.order(); ++a) {
    if (a != ring.zero() && annihilator(ring, ElementSubset::singleton(a)) == zero_only)
      split.regular.insert(a);
    else
      split.zero_divisors.insert(a);
  }
  return split;
}

ElementSubset radical(const IdealHandle& ideal) {
  const HyperringTable& ring = ideal.ring();
  const ElementSubset n = ideal.members();
  ElementSubset out;
  // The sequence x, x^2, ... revisits a value within `order` steps, so any
  // power that ever lands in N does so by then.
  for (Element x = 0; x < ring.order(); ++x) {
    Element p = x;
    for (int k = 1; k <= ring.order(); ++k) {
      if (n.contains(p)) {
        out.insert(x);
        break;
      }
      p = ring.mul(p, x);
    }
  }
  return out;
}

ElementSubset nilradical(const HyperringTable& ring) {
  return radical(IdealHandle::trusted(ring, ElementSubset::singleton(ring.zero())));
}

ElementSubset colon(const IdealHandle& ideal, ElementSubset s) {
  const HyperringTable& ring = ideal.ring();
  ElementSubset out;
  for (Element x = 0; x < ring.order(); ++x) {
    bool inside = true;
    for (Element t : s)
      if (!ideal.members().contains(ring.mul(t, x))) {
        inside = false;
        break;
      }
    if (inside) out.insert(x);
  }
  return out;
}

ElementSubset ideal_sum(const HyperringTable& ring, ElementSubset a, ElementSubset b) {
  return generated_hyperideal(ring, hyper_sum(ring, a, b));
}

ElementSubset ideal_product(const HyperringTable& ring, ElementSubset a, ElementSubset b) {
  ElementSubset products;
  for (Element x : a)
    for (Element y : b) products.insert(ring.mul(x, y));
  return generated_hyperideal(ring, products);
}

ElementSubset ideal_intersection(ElementSubset a, ElementSubset b) { return a & b; }

ElementSubset ideal_power(const HyperringTable& ring, ElementSubset a, int k) {
  assert(k >= 1);
  ElementSubset acc = a;
  for (int i = 1; i < k; ++i) acc = ideal_product(ring, acc, a);
  return acc;
}

ElementSubset ideal_arith(const HyperringTable& ring, IdealOp op, std::span<const ElementSubset> args, int k) {
  if (args.empty()) throw std::invalid_argument("ideal_arith needs at least one argument");
  if (op == IdealOp::Power) return ideal_power(ring, args[0], k);
  ElementSubset acc = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) {
    switch (op) {
      case IdealOp::Sum: acc = ideal_sum(ring, acc, args[i]); break;
      case IdealOp::Product: acc = ideal_product(ring, acc, args[i]); break;
      case IdealOp::Intersection: acc = ideal_intersection(acc, args[i]); break;
      case IdealOp::Power: break;
    }
  }
  return acc;
}

ClassificationResult prime_check(const HyperringTable& ring, ElementSubset p) {
  if (p == ring.carrier()) return ClassificationResult::fails({}, "not proper");
  for (Element a = 0; a < ring.order(); ++a)
    for (Element b = 0; b < ring.order(); ++b)
      if (p.contains(ring.mul(a, b)) && !p.contains(a) && !p.contains(b))
        return ClassificationResult::fails({{"a", a}, {"b", b}}, ring.name_of(a) + "*" + ring.name_of(b) + " = " +
                                                                     ring.name_of(ring.mul(a, b)) +
                                                                     " is in N but neither factor is");
  return ClassificationResult::holds();
}

MinimalPrimes minimal_primes_over(const IdealHandle& ideal) {
  const HyperringTable& ring = ideal.ring();
  std::vector<ElementSubset> primes;
  for (auto p : enumerate_hyperideals(ring))
    if (ideal.members().subset_of(p) && prime_check(ring, p)) primes.push_back(p);
  MinimalPrimes out;
  for (auto p : primes) {
    bool minimal = std::none_of(primes.begin(), primes.end(), [&](ElementSubset q) { return q != p && q.subset_of(p); });
    if (minimal) out.primes.push_back(p);
  }
  out.no_prime_found = primes.empty();
  return out;
}

ElementSubset socle(const HyperringTable& ring) {
  const auto all = enumerate_hyperideals(ring);
  const ElementSubset zero_only = ElementSubset::singleton(ring.zero());
  ElementSubset acc = zero_only;
  for (auto m : all) {
    if (m == zero_only) continue;
    bool minimal = std::none_of(all.begin(), all.end(), [&](ElementSubset q) {
      return q != zero_only && q != m && q.subset_of(m);
    });
    if (minimal) acc = ideal_sum(ring, acc, m);
  }
  return acc;
}

ElementSubset idempotents(const HyperringTable& ring) {
  ElementSubset out;
  for (Element e = 0; e < ring.order(); ++e)
    if (ring.mul(e, e) == e) out.insert(e);
  return out;
}

}  // namespace khr
