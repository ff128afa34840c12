#include "khr/classify.hpp"

#include <algorithm>
#include <charconv>

namespace khr {

PhiReducer PhiReducer::power(int n) {
  if (n < 2) throw std::invalid_argument("phi_n needs n >= 2");
  return PhiReducer(Kind::Power, n);
}

PhiReducer PhiReducer::parse(const std::string& text) {
  if (text == "empty" || text == "phi_empty") return empty();
  if (text == "0" || text == "zero" || text == "weak") return zero();
  if (text == "1" || text == "one") return one();
  if (text == "omega" || text == "w") return omega();
  std::string_view digits = text;
  if (digits.starts_with("n:")) digits.remove_prefix(2);
  int n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 2)
    throw std::invalid_argument("unknown phi '" + text + "' (use empty, 0, 1, omega, n:K with K >= 2)");
  return power(n);
}

std::string PhiReducer::label() const {
  switch (kind_) {
    case Kind::Empty: return "phi_empty";
    case Kind::Zero: return "phi_0";
    case Kind::One: return "phi_1";
    case Kind::Power: return "phi_" + std::to_string(n_);
    case Kind::Omega: return "phi_omega";
  }
  return "phi";
}

std::vector<PhiReducer> standard_phi_family() {
  return {PhiReducer::empty(), PhiReducer::zero(), PhiReducer::one(), PhiReducer::power(2), PhiReducer::power(3),
          PhiReducer::omega()};
}

std::optional<ElementSubset> apply_phi(const PhiReducer& phi, const IdealHandle& ideal) {
  const HyperringTable& ring = ideal.ring();
  const ElementSubset n = ideal.members();
  switch (phi.kind()) {
    case PhiReducer::Kind::Empty: return std::nullopt;
    case PhiReducer::Kind::Zero: return ElementSubset::singleton(ring.zero());
    case PhiReducer::Kind::One: return n;
    case PhiReducer::Kind::Power: return ideal_power(ring, n, phi.n());
    case PhiReducer::Kind::Omega: {
      // N ⊇ N^2 ⊇ ... stabilises; the stable power is the intersection.
      ElementSubset cur = n;
      while (true) {
        ElementSubset next = ideal_product(ring, cur, n);
        if (next == cur) return cur;
        cur = next;
      }
    }
  }
  return std::nullopt;
}

ElementSubset phi_difference(const PhiReducer& phi, const IdealHandle& ideal) {
  auto reduced = apply_phi(phi, ideal);
  return reduced ? ideal.members() - *reduced : ideal.members();
}

namespace {

void require_proper(const IdealHandle& ideal) {
  if (!ideal.proper()) throw NotProper(format_subset(ideal.ring(), ideal.members()) + " is the whole ring");
}

std::string prod(const HyperringTable& ring, Element a, Element b) {
  return ring.name_of(a) + "*" + ring.name_of(b) + " = " + ring.name_of(ring.mul(a, b));
}

// Regular a, any b, a*b in `premise` must give b in `target`.
ClassificationResult regular_cancellation(const HyperringTable& ring, ElementSubset premise, ElementSubset target,
                                          const char* target_label) {
  const ElementSubset reg = regulars(ring).regular;
  bool any = false;
  for (Element a : reg)
    for (Element b = 0; b < ring.order(); ++b) {
      if (!premise.contains(ring.mul(a, b))) continue;
      any = true;
      if (!target.contains(b))
        return ClassificationResult::fails({{"a", a}, {"b", b}}, prod(ring, a, b) + " in N, ann(" + ring.name_of(a) +
                                                                     ")=0, " + ring.name_of(b) + " not in " +
                                                                     target_label);
    }
  return ClassificationResult::holds(!any);
}

ClassificationResult two_factor(const HyperringTable& ring, ElementSubset premise, ElementSubset n,
                                ElementSubset second, const char* second_label) {
  bool any = false;
  for (Element a = 0; a < ring.order(); ++a)
    for (Element b = 0; b < ring.order(); ++b) {
      if (!premise.contains(ring.mul(a, b))) continue;
      any = true;
      if (!n.contains(a) && !second.contains(b))
        return ClassificationResult::fails({{"a", a}, {"b", b}}, prod(ring, a, b) + " in N, " + ring.name_of(a) +
                                                                     " not in N, " + ring.name_of(b) + " not in " +
                                                                     second_label);
    }
  return ClassificationResult::holds(!any);
}

}  // namespace

ClassicalFlags classify_classical(const IdealHandle& ideal) {
  require_proper(ideal);
  const HyperringTable& ring = ideal.ring();
  const ElementSubset n = ideal.members();
  ClassicalFlags flags;
  flags.prime = prime_check(ring, n);
  flags.primary = two_factor(ring, n, n, radical(ideal), "rad(N)");
  flags.maximal = ClassificationResult::holds();
  for (auto j : enumerate_hyperideals(ring)) {
    if (j != n && n.subset_of(j) && j != ring.carrier()) {
      flags.maximal = ClassificationResult::fails({{"x", (j - n).first()}},
                                                  "N is strictly inside the proper hyperideal " + format_subset(ring, j));
      break;
    }
  }
  return flags;
}

ClassificationResult is_r_hyperideal(const IdealHandle& ideal) {
  require_proper(ideal);
  return regular_cancellation(ideal.ring(), ideal.members(), ideal.members(), "N");
}

ClassificationResult is_pr_hyperideal(const IdealHandle& ideal) {
  require_proper(ideal);
  return regular_cancellation(ideal.ring(), ideal.members(), radical(ideal), "rad(N)");
}

SpecialFlags classify_special(const IdealHandle& ideal) {
  require_proper(ideal);
  const HyperringTable& ring = ideal.ring();
  const ElementSubset n = ideal.members();
  SpecialFlags flags{ClassificationResult::holds(), ClassificationResult::holds(), ClassificationResult::holds()};

  std::vector<ElementSubset> ann(static_cast<std::size_t>(ring.order()));
  for (Element x = 0; x < ring.order(); ++x) ann[static_cast<std::size_t>(x)] = annihilator(ring, ElementSubset::singleton(x));

  for (Element a : n) {
    for (Element b = 0; b < ring.order() && flags.z0; ++b)
      if (ann[static_cast<std::size_t>(a)] == ann[static_cast<std::size_t>(b)] && !n.contains(b))
        flags.z0 = ClassificationResult::fails({{"a", a}, {"b", b}}, "ann(" + ring.name_of(a) + ") = ann(" +
                                                                         ring.name_of(b) + ") but " + ring.name_of(b) +
                                                                         " not in N");
    if (flags.pure && std::none_of(n.begin(), n.end(), [&](Element b) { return ring.mul(a, b) == a; }))
      flags.pure = ClassificationResult::fails({{"a", a}}, "no b in N with " + ring.name_of(a) + "*b = " + ring.name_of(a));
    if (flags.vn_regular) {
      bool found = false;
      for (Element r = 0; r < ring.order() && !found; ++r) found = ring.mul(ring.mul(a, r), a) == a;
      if (!found)
        flags.vn_regular =
            ClassificationResult::fails({{"a", a}}, "no r with " + ring.name_of(a) + "*r*" + ring.name_of(a) + " = " +
                                                        ring.name_of(a));
    }
  }
  return flags;
}

std::string to_string(PhiClass c) {
  switch (c) {
    case PhiClass::R: return "r";
    case PhiClass::Pr: return "pr";
    case PhiClass::Prime: return "prime";
    case PhiClass::Primary: return "primary";
    case PhiClass::Pure: return "pure";
    case PhiClass::Vnr: return "vnr";
    case PhiClass::StronglyR: return "strongly_r";
  }
  return "?";
}

std::vector<PhiClass> all_phi_classes() {
  return {PhiClass::R,    PhiClass::Pr,  PhiClass::Prime,    PhiClass::Primary,
          PhiClass::Pure, PhiClass::Vnr, PhiClass::StronglyR};
}

ClassificationResult is_phi_class(const IdealHandle& ideal, const PhiReducer& phi, PhiClass cls) {
  if (cls != PhiClass::StronglyR) return is_phi_class(ideal, phi, cls, {});
  return is_phi_class(ideal, phi, cls, enumerate_hyperideals(ideal.ring()));
}

ClassificationResult is_phi_class(const IdealHandle& ideal, const PhiReducer& phi, PhiClass cls,
                                  const std::vector<ElementSubset>& all_ideals) {
  require_proper(ideal);
  const HyperringTable& ring = ideal.ring();
  const ElementSubset n = ideal.members();
  const auto reduced = apply_phi(phi, ideal);
  const ElementSubset premise = reduced ? n - *reduced : n;

  switch (cls) {
    case PhiClass::R: return regular_cancellation(ring, premise, n, "N");
    case PhiClass::Pr: return regular_cancellation(ring, premise, radical(ideal), "rad(N)");
    case PhiClass::Prime: return two_factor(ring, premise, n, n, "N");
    case PhiClass::Primary: return two_factor(ring, premise, n, radical(ideal), "rad(N)");
    case PhiClass::Pure:
      for (Element a : premise)
        if (std::none_of(n.begin(), n.end(), [&](Element b) { return ring.mul(a, b) == a; }))
          return ClassificationResult::fails({{"a", a}}, "no b in N with " + ring.name_of(a) + "*b = " + ring.name_of(a));
      return ClassificationResult::holds(premise.empty());
    case PhiClass::Vnr:
      for (Element a : premise)
        if (std::none_of(n.begin(), n.end(), [&](Element b) { return ring.mul(ring.mul(a, a), b) == a; }))
          return ClassificationResult::fails({{"a", a}},
                                             "no b in N with " + ring.name_of(a) + "^2*b = " + ring.name_of(a));
      return ClassificationResult::holds(premise.empty());
    case PhiClass::StronglyR: {
      const ElementSubset zero_only = ElementSubset::singleton(ring.zero());
      bool any = false;
      for (auto j : all_ideals) {
        if (annihilator(ring, j) != zero_only) continue;
        for (auto k : all_ideals) {
          const ElementSubset jk = ideal_product(ring, j, k);
          if (!jk.subset_of(n)) continue;
          if (reduced && jk.subset_of(*reduced)) continue;
          any = true;
          if (!k.subset_of(n))
            return ClassificationResult::fails({{"k", (k - n).first()}},
                                               "J = " + format_subset(ring, j) + ", K = " + format_subset(ring, k) +
                                                   ": JK inside N, ann(J) = 0, K not inside N");
        }
      }
      return ClassificationResult::holds(!any);
    }
  }
  return ClassificationResult::holds();
}

RingConditions ring_conditions(const HyperringTable& ring) {
  RingConditions out{ClassificationResult::holds(), ClassificationResult::holds(), ClassificationResult::holds(),
                     ClassificationResult::holds(), ClassificationResult::holds()};
  const ElementSubset zero_only = ElementSubset::singleton(ring.zero());
  const ElementSubset zd = regulars(ring).zero_divisors;

  std::vector<ElementSubset> point_ann(static_cast<std::size_t>(ring.order()));
  for (Element x = 0; x < ring.order(); ++x)
    point_ann[static_cast<std::size_t>(x)] = annihilator(ring, ElementSubset::singleton(x));
  auto realised_in = [&](ElementSubset where, ElementSubset target) {
    return std::any_of(where.begin(), where.end(),
                       [&](Element a) { return point_ann[static_cast<std::size_t>(a)] == target; });
  };

  for (auto n : enumerate_hyperideals(ring)) {
    const ElementSubset ann = annihilator(ring, n);
    const std::string label = format_subset(ring, n);
    if (out.property_a && n.subset_of(zd) && ann == zero_only)
      out.property_a = ClassificationResult::fails({{"n", n.first()}}, label + " lies in zd but ann = 0");
    if (out.annihilator_condition && !realised_in(ring.carrier(), ann))
      out.annihilator_condition = ClassificationResult::fails({{"n", n.first()}}, "ann" + label + " is no ann(a)");
    if (out.sac && !realised_in(n, ann))
      out.sac = ClassificationResult::fails({{"n", n.first()}}, "ann" + label + " is no ann(a) with a in the ideal");
  }
  const ElementSubset nil = nilradical(ring);
  if (nil != zero_only) {
    const Element x = (nil - zero_only).first();
    out.reduced = ClassificationResult::fails({{"x", x}}, ring.name_of(x) + " is a nonzero nilpotent");
  }
  if (zd != zero_only) {
    const Element x = (zd - zero_only).first();
    out.hyperdomain = ClassificationResult::fails({{"x", x}}, ring.name_of(x) + " is a nonzero zero divisor");
  }
  return out;
}

}  // namespace khr
