#include <algorithm>
#include <random>

#include "khr/explorer.hpp"

namespace khr {

namespace {

std::vector<std::string> generic_names(int n) {
  std::vector<std::string> names{"0"};
  for (int i = 1; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i - 1)));
  return names;
}

std::vector<std::pair<Element, Element>> upper_cells(int n) {
  std::vector<std::pair<Element, Element>> cells;
  for (Element x = 1; x < n; ++x)
    for (Element y = x; y < n; ++y) cells.emplace_back(x, y);
  return cells;
}

// Tables with zero at index 0: its add row is {y} and its mul row is 0.
struct Draft {
  int n;
  std::vector<ElementSubset> add;
  std::vector<Element> mul;

  explicit Draft(int order)
      : n(order), add(static_cast<std::size_t>(order * order)), mul(static_cast<std::size_t>(order * order), 0) {
    for (Element y = 0; y < n; ++y) {
      set_add(0, y, ElementSubset::singleton(y));
    }
  }
  std::size_t idx(Element x, Element y) const { return static_cast<std::size_t>(x * n + y); }
  void set_add(Element x, Element y, ElementSubset s) { add[idx(x, y)] = add[idx(y, x)] = s; }
  void set_mul(Element x, Element y, Element z) { mul[idx(x, y)] = mul[idx(y, x)] = z; }
  ElementSubset sum(Element x, Element y) const { return add[idx(x, y)]; }

  HyperringTable build(const std::string& name) const {
    HyperringTable t(name, generic_names(n), add, mul, 0, std::nullopt);
    const auto one = identity_element(t);
    return HyperringTable(name, generic_names(n), add, mul, 0, one);
  }
};

// Associativity of + over triples whose cells are all filled (empty = unset).
bool add_partial_ok(const Draft& d) {
  const int n = d.n;
  std::vector<int> zero_partners(static_cast<std::size_t>(n), 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (d.sum(x, y).contains(0)) ++zero_partners[static_cast<std::size_t>(x)];
  for (int c : zero_partners)
    if (c > 1) return false;

  auto lift = [&](ElementSubset s, Element z, bool left, ElementSubset& out) {
    for (Element w : s) {
      const ElementSubset part = left ? d.sum(w, z) : d.sum(z, w);
      if (part.empty()) return false;
      out = out | part;
    }
    return true;
  };
  for (Element x = 1; x < n; ++x)
    for (Element y = 1; y < n; ++y)
      for (Element z = 1; z < n; ++z) {
        const ElementSubset xy = d.sum(x, y), yz = d.sum(y, z);
        if (xy.empty() || yz.empty()) continue;
        ElementSubset lhs, rhs;
        if (!lift(xy, z, true, lhs) || !lift(yz, x, false, rhs)) continue;
        if (lhs != rhs) return false;
      }
  return true;
}

// Associativity and distributivity of * where determined (-1 = unset).
bool mul_partial_ok(const Draft& d, const std::vector<Element>& mul) {
  const int n = d.n;
  auto m = [&](Element x, Element y) { return mul[static_cast<std::size_t>(x * n + y)]; };
  for (Element x = 1; x < n; ++x)
    for (Element y = 1; y < n; ++y)
      for (Element z = 1; z < n; ++z) {
        const Element xy = m(x, y), yz = m(y, z);
        if (xy >= 0 && yz >= 0) {
          const Element l = m(xy, z), r = m(x, yz);
          if (l >= 0 && r >= 0 && l != r) return false;
        }
        // x*(y+z) against x*y + x*z
        const Element xz = m(x, z);
        if (xy < 0 || xz < 0) continue;
        ElementSubset lhs;
        bool known = true;
        for (Element w : d.sum(y, z)) {
          const Element p = m(x, w);
          if (p < 0) {
            known = false;
            break;
          }
          lhs.insert(p);
        }
        if (known && lhs != d.sum(xy, xz)) return false;
      }
  return true;
}

std::vector<Element> with_zero_row(int n) {
  std::vector<Element> mul(static_cast<std::size_t>(n * n), -1);
  for (Element y = 0; y < n; ++y) mul[static_cast<std::size_t>(y)] = mul[static_cast<std::size_t>(y * n)] = 0;
  return mul;
}

void add_unless_isomorphic(std::vector<HyperringTable>& out, HyperringTable t) {
  for (const auto& s : out)
    if (isomorphic(s, t)) return;
  out.push_back(std::move(t));
}

std::vector<HyperringTable> exhaustive(int n) {
  const auto cells = upper_cells(n);
  const std::uint64_t nonempty = (std::uint64_t{1} << n) - 1;
  std::vector<HyperringTable> out;

  Draft d(n);
  std::vector<std::uint64_t> choice(cells.size(), 1);
  // Odometer over the addition cells.
  while (true) {
    for (std::size_t i = 0; i < cells.size(); ++i) d.set_add(cells[i].first, cells[i].second, ElementSubset(choice[i]));
    if (validate_canonical_hypergroup(d.build("probe")).passed()) {
      std::vector<Element> mchoice(cells.size(), 0);
      while (true) {
        for (std::size_t i = 0; i < cells.size(); ++i) d.set_mul(cells[i].first, cells[i].second, mchoice[i]);
        HyperringTable t = d.build("E" + std::to_string(n));
        if (validate_krasner_hyperring(t).passed()) add_unless_isomorphic(out, std::move(t));
        std::size_t i = 0;
        while (i < cells.size() && ++mchoice[i] == n) mchoice[i++] = 0;
        if (i == cells.size()) break;
      }
    }
    std::size_t i = 0;
    while (i < cells.size() && ++choice[i] > nonempty) choice[i++] = 1;
    if (i == cells.size()) break;
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i].renamed("E" + std::to_string(n) + "-" + std::to_string(i + 1));
  return out;
}

class RandomSearch {
 public:
  RandomSearch(int n, std::uint64_t seed) : n_(n), cells_(upper_cells(n)), rng_(seed) {}

  std::optional<HyperringTable> draw() {
    for (int attempt = 0; attempt < 32; ++attempt) {
      Draft d(n_);
      for (auto [x, y] : cells_) d.set_add(x, y, ElementSubset());
      budget_ = 20000;
      if (!fill_add(d, 0)) continue;
      std::vector<Element> mul = with_zero_row(n_);
      budget_ = 20000;
      if (!fill_mul(d, mul, 0)) {
        // zero multiplication always distributes
        mul.assign(mul.size(), 0);
      }
      d.mul = mul;
      HyperringTable t = d.build("random");
      if (validate_krasner_hyperring(t).passed()) return t;
    }
    return std::nullopt;
  }

 private:
  bool fill_add(Draft& d, std::size_t i) {
    if (budget_-- <= 0) return false;
    if (i == cells_.size()) return validate_canonical_hypergroup(d.build("probe")).passed();
    std::vector<std::uint64_t> options;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n_); ++m) options.push_back(m);
    std::shuffle(options.begin(), options.end(), rng_);
    const auto [x, y] = cells_[i];
    for (std::uint64_t m : options) {
      d.set_add(x, y, ElementSubset(m));
      if (add_partial_ok(d) && fill_add(d, i + 1)) return true;
      if (budget_ <= 0) break;
    }
    d.set_add(x, y, ElementSubset());
    return false;
  }

  bool fill_mul(Draft& d, std::vector<Element>& mul, std::size_t i) {
    if (budget_-- <= 0) return false;
    if (i == cells_.size()) {
      d.mul = mul;
      return validate_krasner_hyperring(d.build("probe")).passed();
    }
    std::vector<Element> options(static_cast<std::size_t>(n_));
    for (Element z = 0; z < n_; ++z) options[static_cast<std::size_t>(z)] = z;
    std::shuffle(options.begin(), options.end(), rng_);
    const auto [x, y] = cells_[i];
    for (Element z : options) {
      mul[static_cast<std::size_t>(x * n_ + y)] = mul[static_cast<std::size_t>(y * n_ + x)] = z;
      if (mul_partial_ok(d, mul) && fill_mul(d, mul, i + 1)) return true;
      if (budget_ <= 0) break;
    }
    mul[static_cast<std::size_t>(x * n_ + y)] = mul[static_cast<std::size_t>(y * n_ + x)] = -1;
    return false;
  }

  int n_;
  std::vector<std::pair<Element, Element>> cells_;
  std::mt19937_64 rng_;
  long budget_ = 0;
};

}  // namespace

std::vector<HyperringTable> enumerate_hyperrings(int order, const EnumerationMode& mode) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  if (std::holds_alternative<Exhaustive>(mode)) {
    if (order > 3) throw OrderTooLarge("exhaustive enumeration supports order <= 3, got " + std::to_string(order));
    return exhaustive(order);
  }
  const auto& sample = std::get<RandomSample>(mode);
  if (order > 6) throw OrderTooLarge("random enumeration supports order <= 6, got " + std::to_string(order));
  if (sample.count < 0) throw std::invalid_argument("count must be non-negative");

  RandomSearch search(order, sample.seed);
  std::vector<HyperringTable> out;
  for (int draws = 0; static_cast<int>(out.size()) < sample.count && draws < sample.count * 8 + 8; ++draws)
    if (auto t = search.draw()) add_unless_isomorphic(out, std::move(*t));
  const std::string stem = "R" + std::to_string(order) + "s" + std::to_string(sample.seed) + "-";
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i].renamed(stem + std::to_string(i + 1));
  return out;
}

}  // namespace khr
