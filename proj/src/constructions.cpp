#include "khr/constructions.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace khr {

namespace {

ElementSubset image_of(const std::vector<Element>& map, ElementSubset s) {
  ElementSubset out;
  for (Element x : s) out.insert(map[static_cast<std::size_t>(x)]);
  return out;
}

}  // namespace

HomomorphismReport validate_good_homomorphism(const GoodHomomorphism& h) {
  HomomorphismReport report;
  AxiomReport& ax = report.axioms;
  const auto& src = h.source;
  const auto& tgt = h.target;
  const int n = src.order();

  ax.checked = {"H0-total", "H1-zero", "H2-good-addition", "H3-multiplicative"};
  auto fail = [&](const char* id, std::vector<Element> witness, std::string message) {
    for (auto& v : ax.violations)
      if (v.axiom_id == id) {
        ++v.count;
        return;
      }
    ax.violations.push_back({id, std::move(witness), std::move(message), 1, {}});
  };

  if (static_cast<int>(h.map.size()) != n ||
      std::any_of(h.map.begin(), h.map.end(), [&](Element y) { return y < 0 || y >= tgt.order(); })) {
    fail("H0-total", {}, "map does not send every source element into the target");
    return report;
  }
  auto f = [&](Element x) { return h.map[static_cast<std::size_t>(x)]; };

  if (f(src.zero()) != tgt.zero())
    fail("H1-zero", {src.zero()}, "zero goes to " + tgt.name_of(f(src.zero())));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const ElementSubset mapped = image_of(h.map, src.add(x, y));
      const ElementSubset expect = tgt.add(f(x), f(y));
      if (mapped != expect)
        fail("H2-good-addition", {x, y},
             "f(" + src.name_of(x) + "+" + src.name_of(y) + ") = " + format_subset(tgt, mapped) + " but f(" +
                 src.name_of(x) + ")+f(" + src.name_of(y) + ") = " + format_subset(tgt, expect));
      if (f(src.mul(x, y)) != tgt.mul(f(x), f(y)))
        fail("H3-multiplicative", {x, y},
             "f(" + src.name_of(x) + "*" + src.name_of(y) + ") = " + tgt.name_of(f(src.mul(x, y))) + " but f(" +
                 src.name_of(x) + ")*f(" + src.name_of(y) + ") = " + tgt.name_of(tgt.mul(f(x), f(y))));
    }

  const ElementSubset img = image_of(h.map, src.carrier());
  report.surjective = img == tgt.carrier();
  report.injective = img.size() == n;
  for (Element x = 0; x < n; ++x)
    if (f(x) == tgt.zero()) report.kernel.insert(x);
  return report;
}

QuotientPresentation quotient(const IdealHandle& ideal) {
  const HyperringTable& ring = ideal.ring();
  const ElementSubset n_set = ideal.members();
  const int n = ring.order();

  std::vector<ElementSubset> coset(static_cast<std::size_t>(n));
  for (Element x = 0; x < n; ++x) coset[static_cast<std::size_t>(x)] = hyper_sum(ring, ElementSubset::singleton(x), n_set);

  std::vector<ElementSubset> classes;
  std::vector<Element> coset_of(static_cast<std::size_t>(n), -1);
  for (Element x = 0; x < n; ++x) {
    if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    const ElementSubset c = coset[static_cast<std::size_t>(x)];
    if (!c.contains(x)) throw IllFormedQuotient(ring.name_of(x) + " is not in its own class", {x});
    const auto idx = static_cast<Element>(classes.size());
    for (Element y : c) {
      if (coset_of[static_cast<std::size_t>(y)] >= 0 || coset[static_cast<std::size_t>(y)] != c)
        throw IllFormedQuotient("classes of " + ring.name_of(x) + " and " + ring.name_of(y) + " overlap", {x, y});
      coset_of[static_cast<std::size_t>(y)] = idx;
    }
    classes.push_back(c);
  }

  const int q = static_cast<int>(classes.size());
  std::vector<ElementSubset> add(static_cast<std::size_t>(q * q));
  std::vector<Element> mul(static_cast<std::size_t>(q * q));
  for (Element i = 0; i < q; ++i)
    for (Element j = 0; j < q; ++j) {
      const Element ri = classes[static_cast<std::size_t>(i)].first();
      const Element rj = classes[static_cast<std::size_t>(j)].first();
      ElementSubset sum;
      for (Element z : ring.add(ri, rj)) sum.insert(coset_of[static_cast<std::size_t>(z)]);
      const Element prod = coset_of[static_cast<std::size_t>(ring.mul(ri, rj))];
      for (Element x : classes[static_cast<std::size_t>(i)])
        for (Element y : classes[static_cast<std::size_t>(j)]) {
          ElementSubset alt;
          for (Element z : ring.add(x, y)) alt.insert(coset_of[static_cast<std::size_t>(z)]);
          if (alt != sum)
            throw IllFormedQuotient("class sum depends on representatives " + ring.name_of(x) + ", " + ring.name_of(y),
                                    {x, y});
          if (coset_of[static_cast<std::size_t>(ring.mul(x, y))] != prod)
            throw IllFormedQuotient(
                "class product depends on representatives " + ring.name_of(x) + ", " + ring.name_of(y), {x, y});
        }
      add[static_cast<std::size_t>(i * q + j)] = sum;
      mul[static_cast<std::size_t>(i * q + j)] = prod;
    }

  std::vector<std::string> names;
  for (const auto& c : classes) names.push_back("[" + ring.name_of(c.first()) + "]");
  std::optional<Element> one;
  if (ring.one()) one = coset_of[static_cast<std::size_t>(*ring.one())];

  HyperringTable qring(ring.name() + "/" + format_subset(ring, n_set), std::move(names), std::move(add),
                       std::move(mul), coset_of[static_cast<std::size_t>(ring.zero())], one);
  if (auto rep = validate_krasner_hyperring(qring); !rep.passed())
    throw IllFormedQuotient("quotient fails " + rep.violations.front().axiom_id + ": " + rep.violations.front().message,
                            rep.violations.front().witness);

  GoodHomomorphism proj{ring, qring, coset_of};
  return {std::move(qring), coset_of, std::move(classes), std::move(proj)};
}

ElementSubset transport_ideal(const GoodHomomorphism& h, Transport direction, ElementSubset subset) {
  if (direction == Transport::Image) return generated_hyperideal(h.target, image_of(h.map, subset));
  ElementSubset out;
  for (Element x = 0; x < h.source.order(); ++x)
    if (subset.contains(h.map[static_cast<std::size_t>(x)])) out.insert(x);
  return out;
}

GoodHomomorphism identity_homomorphism(const HyperringTable& ring) {
  std::vector<Element> map(static_cast<std::size_t>(ring.order()));
  for (Element x = 0; x < ring.order(); ++x) map[static_cast<std::size_t>(x)] = x;
  return {ring, ring, std::move(map)};
}

GoodHomomorphism product_projection(const HyperringTable& left, const HyperringTable& right,
                                    const HyperringTable& product, int which) {
  const int n2 = right.order();
  std::vector<Element> map(static_cast<std::size_t>(product.order()));
  for (Element x = 0; x < product.order(); ++x) map[static_cast<std::size_t>(x)] = which == 0 ? x / n2 : x % n2;
  return {product, which == 0 ? left : right, std::move(map)};
}

GoodHomomorphism product_injection(const HyperringTable& left, const HyperringTable& right,
                                   const HyperringTable& product, int which) {
  const int n2 = right.order();
  const HyperringTable& factor = which == 0 ? left : right;
  std::vector<Element> map(static_cast<std::size_t>(factor.order()));
  for (Element x = 0; x < factor.order(); ++x)
    map[static_cast<std::size_t>(x)] = which == 0 ? x * n2 + right.zero() : left.zero() * n2 + x;
  return {factor, product, std::move(map)};
}

namespace {

using Signature = std::tuple<int, bool, bool, int, std::vector<int>, std::vector<int>>;

std::vector<Signature> signatures(const HyperringTable& r, std::optional<Element> one) {
  std::vector<Signature> out;
  for (Element x = 0; x < r.order(); ++x) {
    std::vector<int> add_sizes, mul_hits(static_cast<std::size_t>(r.order()), 0);
    int zeros = 0;
    for (Element y = 0; y < r.order(); ++y) {
      add_sizes.push_back(r.add(x, y).size());
      if (r.mul(x, y) == r.zero()) ++zeros;
      ++mul_hits[static_cast<std::size_t>(r.mul(x, y))];
    }
    std::sort(add_sizes.begin(), add_sizes.end());
    std::sort(mul_hits.begin(), mul_hits.end());
    out.emplace_back(r.add(x, x).size(), x == r.zero(), one && *one == x, zeros, add_sizes, mul_hits);
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const HyperringTable& a, const HyperringTable& b) : a_(a), b_(b) {}

  std::optional<std::vector<Element>> run() {
    const int n = a_.order();
    if (n != b_.order()) return std::nullopt;
    const auto one_a = identity_element(a_);
    const auto one_b = identity_element(b_);
    if (one_a.has_value() != one_b.has_value()) return std::nullopt;
    sig_a_ = signatures(a_, one_a);
    sig_b_ = signatures(b_, one_b);
    auto sa = sig_a_, sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;

    map_.assign(static_cast<std::size_t>(n), -1);
    used_.assign(static_cast<std::size_t>(n), false);
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool consistent(Element k) const {
    auto f = [&](Element x) { return map_[static_cast<std::size_t>(x)]; };
    for (Element i = 0; i <= k; ++i) {
      for (Element p : {i, k}) {
        const Element q = p == i ? k : i;
        const Element m = a_.mul(p, q);
        if (m <= k && f(m) != b_.mul(f(p), f(q))) return false;
        const ElementSubset target = b_.add(f(p), f(q));
        const ElementSubset sum = a_.add(p, q);
        ElementSubset mapped;
        bool complete = true;
        for (Element z : sum) {
          if (z > k) {
            complete = false;
            continue;
          }
          mapped.insert(f(z));
        }
        if (!mapped.subset_of(target)) return false;
        if (complete && mapped != target) return false;
        if (sum.size() != target.size()) return false;
      }
    }
    return true;
  }

  bool extend(Element k) {
    if (k == a_.order()) return true;
    for (Element y = 0; y < b_.order(); ++y) {
      if (used_[static_cast<std::size_t>(y)] || sig_a_[static_cast<std::size_t>(k)] != sig_b_[static_cast<std::size_t>(y)])
        continue;
      map_[static_cast<std::size_t>(k)] = y;
      used_[static_cast<std::size_t>(y)] = true;
      if (consistent(k) && extend(k + 1)) return true;
      used_[static_cast<std::size_t>(y)] = false;
      map_[static_cast<std::size_t>(k)] = -1;
    }
    return false;
  }

  const HyperringTable& a_;
  const HyperringTable& b_;
  std::vector<Signature> sig_a_, sig_b_;
  std::vector<Element> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const HyperringTable& a, const HyperringTable& b) {
  return IsoSearch(a, b).run();
}

}  // namespace khr
