#include "khr/core.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace khr {

HyperringTable::HyperringTable(std::string name, std::vector<std::string> names, std::vector<ElementSubset> add,
                               std::vector<Element> mul, Element zero, std::optional<Element> one)
    : name_(std::move(name)), names_(std::move(names)), add_(std::move(add)), mul_(std::move(mul)), zero_(zero),
      one_(one) {
  const int n = order();
  if (n < 1 || n > kMaxOrder) throw StructureError("order must be in [1, 64], got " + std::to_string(n));
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (add_.size() != cells) throw StructureError("addition table must have order^2 cells");
  if (mul_.size() != cells) throw StructureError("multiplication table must have order^2 cells");
  std::set<std::string_view> seen;
  for (const auto& label : names_) {
    if (label.empty()) throw StructureError("element names must be nonempty");
    if (!seen.insert(label).second) throw StructureError("duplicate element name '" + label + "'");
  }
  if (zero_ < 0 || zero_ >= n) throw StructureError("zero index out of range");
  if (one_ && (*one_ < 0 || *one_ >= n)) throw StructureError("one index out of range");
  const ElementSubset all = carrier();
  for (std::size_t c = 0; c < cells; ++c) {
    if (add_[c].empty()) throw StructureError("empty hyperaddition cell");
    if (!add_[c].subset_of(all)) throw StructureError("hyperaddition cell leaves the carrier");
    if (mul_[c] < 0 || mul_[c] >= n) throw StructureError("multiplication cell out of range");
  }
}

std::optional<Element> HyperringTable::find(std::string_view label) const {
  auto it = std::find(names_.begin(), names_.end(), label);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

HyperringTable HyperringTable::renamed(std::string name) const {
  HyperringTable copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

ElementSubset hyper_sum(const HyperringTable& ring, ElementSubset a, ElementSubset b) {
  ElementSubset out;
  for (Element x : a)
    for (Element y : b) out |= ring.add(x, y);
  return out;
}

std::vector<Element> inverse_table(const HyperringTable& ring) {
  const int n = ring.order();
  std::vector<Element> inv(static_cast<std::size_t>(n), -1);
  for (Element x = 0; x < n; ++x) {
    int found = 0;
    for (Element y = 0; y < n; ++y) {
      if (ring.add(x, y).contains(ring.zero())) {
        ++found;
        inv[static_cast<std::size_t>(x)] = y;
      }
    }
    if (found != 1) inv[static_cast<std::size_t>(x)] = -1;
  }
  return inv;
}

Element negate(const HyperringTable& ring, Element x) {
  Element found = -1;
  for (Element y = 0; y < ring.order(); ++y) {
    if (!ring.add(x, y).contains(ring.zero())) continue;
    if (found >= 0) throw NotCanonical("element '" + ring.name_of(x) + "' has more than one inverse");
    found = y;
  }
  if (found < 0) throw NotCanonical("element '" + ring.name_of(x) + "' has no inverse");
  return found;
}

ElementSubset hyper_difference(const HyperringTable& ring, ElementSubset a, ElementSubset b) {
  ElementSubset negs;
  for (Element y : b) negs.insert(negate(ring, y));
  return hyper_sum(ring, a, negs);
}

ElementSubset scale(const HyperringTable& ring, Element r, ElementSubset s) {
  ElementSubset out;
  for (Element x : s) out.insert(ring.mul(r, x));
  return out;
}

Element power(const HyperringTable& ring, Element x, int k) {
  Element acc = x;
  for (int i = 1; i < k; ++i) acc = ring.mul(acc, x);
  return acc;
}

std::optional<Element> identity_element(const HyperringTable& ring) {
  if (ring.one()) return ring.one();
  for (Element e = 0; e < ring.order(); ++e) {
    bool neutral = true;
    for (Element x = 0; x < ring.order() && neutral; ++x) neutral = ring.mul(e, x) == x && ring.mul(x, e) == x;
    if (neutral) return e;
  }
  return std::nullopt;
}

std::string format_subset(const HyperringTable& ring, ElementSubset s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    if (!first) out += ',';
    out += ring.name_of(x);
    first = false;
  }
  return out + "}";
}

bool AxiomReport::violated(std::string_view axiom_id) const {
  return std::any_of(violations.begin(), violations.end(), [&](const auto& v) { return v.axiom_id == axiom_id; });
}

int AxiomReport::total(std::string_view prefix) const {
  return static_cast<int>(
      std::count_if(checked.begin(), checked.end(), [&](const auto& id) { return id.starts_with(prefix); }));
}

int AxiomReport::satisfied(std::string_view prefix) const {
  int ok = 0;
  for (const auto& id : checked)
    if (id.starts_with(prefix) && !violated(id)) ++ok;
  return ok;
}

namespace {

// Accumulates the violations of a single axiom.
class AxiomCheck {
 public:
  AxiomCheck(AxiomReport& report, std::string_view id, const ValidationOptions& opts)
      : report_(report), opts_(opts) {
    report_.checked.emplace_back(id);
    v_.axiom_id = id;
  }
  AxiomCheck(const AxiomCheck&) = delete;
  AxiomCheck& operator=(const AxiomCheck&) = delete;
  ~AxiomCheck() {
    if (v_.count > 0) report_.violations.push_back(std::move(v_));
  }

  template <typename MakeMessage>
  void fail(std::vector<Element> witness, MakeMessage&& make_message) {
    if (v_.count == 0) {
      v_.witness = witness;
      v_.message = make_message();
    }
    ++v_.count;
    if (opts_.all_witnesses) v_.all_witnesses.push_back(std::move(witness));
  }

 private:
  AxiomReport& report_;
  const ValidationOptions& opts_;
  AxiomViolation v_;
};

void check_canonical(const HyperringTable& ring, AxiomReport& report, const ValidationOptions& opts) {
  const int n = ring.order();
  auto nm = [&](Element x) { return ring.name_of(x); };
  auto set = [&](ElementSubset s) { return format_subset(ring, s); };

  {
    AxiomCheck check(report, axiom::kAssociative, opts);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z) {
          auto left = hyper_sum(ring, ElementSubset::singleton(x), ring.add(y, z));
          auto right = hyper_sum(ring, ring.add(x, y), ElementSubset::singleton(z));
          if (left != right)
            check.fail({x, y, z}, [&] {
              return nm(x) + "+(" + nm(y) + "+" + nm(z) + ") = " + set(left) + " but (" + nm(x) + "+" + nm(y) +
                     ")+" + nm(z) + " = " + set(right);
            });
        }
  }
  {
    AxiomCheck check(report, axiom::kCommutative, opts);
    for (Element x = 0; x < n; ++x)
      for (Element y = x + 1; y < n; ++y)
        if (ring.add(x, y) != ring.add(y, x))
          check.fail({x, y}, [&] {
            return nm(x) + "+" + nm(y) + " = " + set(ring.add(x, y)) + " but " + nm(y) + "+" + nm(x) + " = " +
                   set(ring.add(y, x));
          });
  }
  {
    AxiomCheck check(report, axiom::kZeroScalar, opts);
    const Element z0 = ring.zero();
    for (Element x = 0; x < n; ++x)
      if (ring.add(x, z0) != ElementSubset::singleton(x))
        check.fail({x, z0}, [&] { return nm(x) + "+" + nm(z0) + " = " + set(ring.add(x, z0)) + ", expected {" + nm(x) + "}"; });
  }
  const auto inv = inverse_table(ring);
  {
    AxiomCheck check(report, axiom::kUniqueInverse, opts);
    for (Element x = 0; x < n; ++x) {
      if (inv[static_cast<std::size_t>(x)] >= 0) continue;
      ElementSubset candidates;
      for (Element y = 0; y < n; ++y)
        if (ring.add(x, y).contains(ring.zero())) candidates.insert(y);
      std::vector<Element> witness{x};
      for (Element y : candidates) witness.push_back(y);
      check.fail(witness, [&] {
        return candidates.empty() ? nm(x) + " has no inverse"
                                  : nm(x) + " has several inverses " + set(candidates);
      });
    }
  }
  {
    AxiomCheck check(report, axiom::kReversible, opts);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        const Element nx = inv[static_cast<std::size_t>(x)];
        const Element ny = inv[static_cast<std::size_t>(y)];
        if (nx < 0 || ny < 0) continue;
        for (Element z : ring.add(x, y)) {
          const bool back_y = ring.add(nx, z).contains(y);
          const bool back_x = ring.add(z, ny).contains(x);
          if (!back_y || !back_x)
            check.fail({x, y, z}, [&] {
              return nm(z) + " in " + nm(x) + "+" + nm(y) + " but " +
                     (back_y ? nm(x) + " not in " + nm(z) + "-" + nm(y) : nm(y) + " not in -" + nm(x) + "+" + nm(z));
            });
        }
      }
  }
}

void check_multiplicative(const HyperringTable& ring, AxiomReport& report, const ValidationOptions& opts) {
  const int n = ring.order();
  auto nm = [&](Element x) { return ring.name_of(x); };
  auto set = [&](ElementSubset s) { return format_subset(ring, s); };

  {
    AxiomCheck check(report, axiom::kMulAssociative, opts);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (ring.mul(ring.mul(x, y), z) != ring.mul(x, ring.mul(y, z)))
            check.fail({x, y, z}, [&] {
              return "(" + nm(x) + "*" + nm(y) + ")*" + nm(z) + " = " + nm(ring.mul(ring.mul(x, y), z)) + " but " + nm(x) +
                     "*(" + nm(y) + "*" + nm(z) + ") = " + nm(ring.mul(x, ring.mul(y, z)));
            });
  }
  {
    AxiomCheck check(report, axiom::kAbsorbingZero, opts);
    const Element z0 = ring.zero();
    for (Element x = 0; x < n; ++x) {
      if (ring.mul(x, z0) != z0 || ring.mul(z0, x) != z0)
        check.fail({x}, [&] { return nm(z0) + " does not absorb " + nm(x); });
      if (auto one = ring.one(); one && (ring.mul(*one, x) != x || ring.mul(x, *one) != x))
        check.fail({x}, [&] { return "declared one " + nm(*one) + " is not neutral on " + nm(x); });
    }
  }
  {
    AxiomCheck check(report, axiom::kDistributive, opts);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z) {
          ElementSubset left, right_sum;
          for (Element w : ring.add(y, z)) left.insert(ring.mul(x, w));
          right_sum = ring.add(ring.mul(x, y), ring.mul(x, z));
          ElementSubset left_r;
          for (Element w : ring.add(y, z)) left_r.insert(ring.mul(w, x));
          ElementSubset right_r = ring.add(ring.mul(y, x), ring.mul(z, x));
          if (left != right_sum || left_r != right_r)
            check.fail({x, y, z}, [&] {
              if (left != right_sum)
                return nm(x) + "*(" + nm(y) + "+" + nm(z) + ") = " + set(left) + " but " + nm(x) + "*" + nm(y) + "+" +
                       nm(x) + "*" + nm(z) + " = " + set(right_sum);
              return "(" + nm(y) + "+" + nm(z) + ")*" + nm(x) + " = " + set(left_r) + " but " + nm(y) + "*" + nm(x) +
                     "+" + nm(z) + "*" + nm(x) + " = " + set(right_r);
            });
        }
  }
  {
    AxiomCheck check(report, axiom::kMulCommutative, opts);
    for (Element x = 0; x < n; ++x)
      for (Element y = x + 1; y < n; ++y)
        if (ring.mul(x, y) != ring.mul(y, x))
          check.fail({x, y}, [&] {
            return nm(x) + "*" + nm(y) + " = " + nm(ring.mul(x, y)) + " but " + nm(y) + "*" + nm(x) + " = " +
                   nm(ring.mul(y, x));
          });
  }
}

}  // namespace

AxiomReport validate_canonical_hypergroup(const HyperringTable& ring, const ValidationOptions& opts) {
  AxiomReport report;
  check_canonical(ring, report, opts);
  return report;
}

AxiomReport validate_krasner_hyperring(const HyperringTable& ring, const ValidationOptions& opts) {
  AxiomReport report;
  check_canonical(ring, report, opts);
  check_multiplicative(ring, report, opts);
  return report;
}

}  // namespace khr
