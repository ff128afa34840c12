#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <thread>
#include <tuple>

#include "khr/dsl.hpp"
#include "khr/explorer.hpp"

namespace khr {

namespace {

// ---------------------------------------------------------------------------
// Per-ring cache

class RingContext {
 public:
  explicit RingContext(const CorpusEntry& e)
      : entry(e), R(e.ring), ideals(enumerate_hyperideals(R)), split(regulars(R)), one(identity_element(R)) {
    for (auto s : ideals)
      if (s != R.carrier()) proper.push_back(s);
  }

  const CorpusEntry& entry;
  const HyperringTable& R;
  std::vector<ElementSubset> ideals;
  std::vector<ElementSubset> proper;
  RegularSplit split;
  std::optional<Element> one;

  IdealHandle h(ElementSubset s) const { return IdealHandle::trusted(R, s); }
  std::string fmt(ElementSubset s) const { return format_subset(R, s); }
  std::string nm(Element x) const { return R.name_of(x); }
  ElementSubset zero_ideal() const { return ElementSubset::singleton(R.zero()); }

  bool is_r(ElementSubset n) const {
    if (n == R.carrier()) return false;
    auto [it, fresh] = r_cache_.try_emplace(n.bits(), false);
    if (fresh) it->second = is_r_hyperideal(h(n)).verdict;
    return it->second;
  }
  bool is_pr(ElementSubset n) const { return n != R.carrier() && is_pr_hyperideal(h(n)).verdict; }
  bool is_prime(ElementSubset n) const { return prime_check(R, n).verdict; }
  ElementSubset rad(ElementSubset n) const { return radical(h(n)); }
  ElementSubset col(ElementSubset n, ElementSubset s) const { return colon(h(n), s); }
  ElementSubset col_phi(const std::optional<ElementSubset>& phi_n, Element r) const {
    return phi_n ? colon(h(*phi_n), ElementSubset::singleton(r)) : ElementSubset();
  }
  ElementSubset ann(ElementSubset s) const { return annihilator(R, s); }

  std::optional<ElementSubset> phi(const PhiReducer& p, ElementSubset n) const { return apply_phi(p, h(n)); }
  bool phi_class(ElementSubset n, const PhiReducer& p, PhiClass c) const {
    const auto key = std::make_tuple(n.bits(), p.label(), static_cast<int>(c));
    auto [it, fresh] = phi_cache_.try_emplace(key, false);
    if (fresh) it->second = is_phi_class(h(n), p, c, ideals).verdict;
    return it->second;
  }

  const RingConditions& conds() const {
    if (!conds_) conds_ = ring_conditions(R);
    return *conds_;
  }

  std::vector<ElementSubset> proper_primes() const {
    std::vector<ElementSubset> out;
    for (auto p : proper)
      if (is_prime(p)) out.push_back(p);
    return out;
  }

  const QuotientPresentation* quotient_by(ElementSubset n) const {
    auto [it, fresh] = quotients_.try_emplace(n.bits());
    if (fresh) {
      try {
        it->second = std::make_unique<QuotientPresentation>(quotient(h(n)));
      } catch (const IllFormedQuotient&) {
      }
    }
    return it->second.get();
  }

  // Every nonempty subset for small rings; singletons and ideals otherwise.
  std::vector<ElementSubset> probe_subsets() const {
    std::vector<ElementSubset> out;
    if (R.order() <= 8) {
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << R.order()); ++m) out.emplace_back(m);
      return out;
    }
    for (Element x : R.carrier()) out.push_back(ElementSubset::singleton(x));
    for (auto s : ideals)
      if (s.size() > 1) out.push_back(s);
    return out;
  }

 private:
  mutable std::map<std::uint64_t, bool> r_cache_;
  mutable std::map<std::tuple<std::uint64_t, std::string, int>, bool> phi_cache_;
  mutable std::optional<RingConditions> conds_;
  mutable std::map<std::uint64_t, std::unique_ptr<QuotientPresentation>> quotients_;
};

// ---------------------------------------------------------------------------
// Outcome sink for one (theorem, ring) pair

class Sink {
 public:
  Sink(std::string ring_id, std::size_t cap, const HyperringTable* ring = nullptr) : ring_(ring), cap_(cap) {
    tally.ring_id = std::move(ring_id);
  }

  // Ring used to name witness elements.
  void bind(const HyperringTable& ring) { ring_ = &ring; }

  void skip(std::size_t n = 1) { tally.skipped += n; }
  void pass() { ++tally.checked; }
  void fail(std::vector<ElementSubset> ideals, std::vector<WitnessItem> witness, std::string message) {
    ++tally.checked;
    ++tally.violations;
    if (stored.size() >= cap_) return;
    std::string text;
    if (ring_ && !witness.empty()) {
      for (const auto& w : witness) text += (text.empty() ? "(" : ",") + ring_->name_of(w.element);
      text += ")";
    }
    stored.push_back({tally.ring_id, std::move(ideals), std::move(witness), std::move(text), std::move(message)});
  }
  template <class Describe>
  void check(bool ok, Describe&& describe) {
    if (ok) {
      pass();
      return;
    }
    auto [ideals, witness, message] = describe();
    fail(std::move(ideals), std::move(witness), std::move(message));
  }

  RingTally tally;
  std::vector<TheoremViolation> stored;

 private:
  const HyperringTable* ring_;
  std::size_t cap_;
};

using Described = std::tuple<std::vector<ElementSubset>, std::vector<WitnessItem>, std::string>;

std::string yn(bool b) { return b ? "yes" : "no"; }

struct TheoremDef {
  TheoremInfo info;
  std::function<void(const RingContext&, Sink&)> per_ring;
  std::function<void(Sink&)> global;
  std::string global_ring_id;
};

// ---------------------------------------------------------------------------
// Shared predicate pieces

// (a*R) ∩ N = a*N for every regular a.
bool scaled_intersection(const RingContext& c, ElementSubset n) {
  for (Element a : c.split.regular)
    if ((scale(c.R, a, c.R.carrier()) & n) != scale(c.R, a, n)) return false;
  return true;
}

// J*K ⊆ N with a regular element in J forces K ⊆ N.
bool regular_ideal_cancellation(const RingContext& c, ElementSubset n) {
  for (auto j : c.ideals) {
    if (!j.intersects(c.split.regular)) continue;
    for (auto k : c.ideals)
      if (ideal_product(c.R, j, k).subset_of(n) && !k.subset_of(n)) return false;
  }
  return true;
}

// J*K ⊆ N and ann(J) = 0 force K ⊆ N.
bool faithful_ideal_cancellation(const RingContext& c, ElementSubset n) {
  for (auto j : c.ideals) {
    if (c.ann(j) != c.zero_ideal()) continue;
    for (auto k : c.ideals)
      if (ideal_product(c.R, j, k).subset_of(n) && !k.subset_of(n)) return false;
  }
  return true;
}

bool phi_order_preserving(const RingContext& c, const PhiReducer& p) {
  for (auto a : c.ideals)
    for (auto b : c.ideals) {
      if (!a.subset_of(b)) continue;
      auto pa = c.phi(p, a), pb = c.phi(p, b);
      if (pa && (!pb || !pa->subset_of(*pb))) return false;
    }
  return true;
}

// Premise a*b in `premise` with ann(a) = 0 in `ring` forces b into `target`.
bool cancels(const HyperringTable& ring, ElementSubset premise, ElementSubset target) {
  const auto reg = regulars(ring).regular;
  for (Element a : reg)
    for (Element b : ring.carrier())
      if (premise.contains(ring.mul(a, b)) && !target.contains(b)) return false;
  return true;
}

std::vector<GoodHomomorphism> epimorphisms(const RingContext& c) {
  std::vector<GoodHomomorphism> out;
  for (auto k : c.proper) {
    if (k.size() == 1) continue;
    if (auto q = c.quotient_by(k)) out.push_back(q->projection);
  }
  if (c.entry.factors) {
    const auto& f = *c.entry.factors;
    out.push_back(product_projection(f.left, f.right, c.R, 0));
    out.push_back(product_projection(f.left, f.right, c.R, 1));
  }
  return out;
}

std::vector<GoodHomomorphism> monomorphisms(const RingContext& c) {
  std::vector<GoodHomomorphism> out{identity_homomorphism(c.R)};
  if (c.entry.factors) {
    const auto& f = *c.entry.factors;
    out.push_back(product_injection(f.left, f.right, c.R, 0));
    out.push_back(product_injection(f.left, f.right, c.R, 1));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Section-three style statements

void thm_3_1(const RingContext& c, Sink& s) {
  for (auto n : c.proper) {
    const bool a = c.is_r(n);
    const bool b = scaled_intersection(c, n);
    bool cc = true;
    for (Element r : c.split.regular - n)
      if (c.col(n, ElementSubset::singleton(r)) != n) cc = false;
    s.check(a == b && b == cc, [&]() -> Described {
      return {{n}, {}, "N=" + c.fmt(n) + ": r=" + yn(a) + ", (aR)∩N=aN " + yn(b) + ", (N:a)=N " + yn(cc)};
    });
  }
}

void cor_1a(const RingContext& c, Sink& s) {
  if (c.R.order() < 2) return s.skip();
  s.check(c.is_r(c.zero_ideal()), [&]() -> Described {
    const auto w = is_r_hyperideal(c.h(c.zero_ideal()));
    return {{c.zero_ideal()}, w.witness, "zero ideal is not r: " + w.note};
  });
}

void cor_1b(const RingContext& c, Sink& s) {
  std::vector<ElementSubset> rs;
  for (auto n : c.proper)
    if (c.is_r(n)) rs.push_back(n);
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      const auto m = ideal_intersection(rs[i], rs[j]);
      s.check(c.is_r(m), [&]() -> Described {
        return {{rs[i], rs[j]}, {}, c.fmt(rs[i]) + " ∩ " + c.fmt(rs[j]) + " = " + c.fmt(m) + " is not r"};
      });
    }
  if (rs.size() > 2) {
    ElementSubset all = c.R.carrier();
    for (auto n : rs) all = all & n;
    s.check(c.is_r(all), [&]() -> Described { return {rs, {}, "intersection of all r-ideals " + c.fmt(all) + " is not r"}; });
  }
}

void cor_1c(const RingContext& c, Sink& s) {
  for (auto n : c.proper) {
    if (!c.is_r(n)) {
      s.skip();
      continue;
    }
    s.check(n.subset_of(c.split.zero_divisors), [&]() -> Described {
      const Element x = (n - c.split.zero_divisors).first();
      return {{n}, {{"x", x}}, c.fmt(n) + " is r but contains regular " + c.nm(x)};
    });
  }
}

void cor_1d(const RingContext& c, Sink& s) {
  for (auto n : c.proper) {
    if (!c.is_r(n)) {
      s.skip();
      continue;
    }
    s.check(c.is_pr(n), [&]() -> Described { return {{n}, {}, c.fmt(n) + " is r but not pr"}; });
  }
}

void cor_1e(const RingContext& c, Sink& s) {
  const auto primes = c.proper_primes();
  if (primes.empty()) return s.skip();
  for (auto p : primes) {
    const bool r = c.is_r(p), inside = p.subset_of(c.split.zero_divisors);
    s.check(r == inside, [&]() -> Described {
      return {{p}, {}, "prime " + c.fmt(p) + ": r=" + yn(r) + ", inside zd=" + yn(inside)};
    });
  }
  for (auto p : minimal_primes_over(c.h(c.zero_ideal())).primes)
    s.check(c.is_r(p), [&]() -> Described { return {{p}, {}, "minimal prime " + c.fmt(p) + " is not r"}; });
}

void cor_1f(const RingContext& c, Sink& s) {
  const auto subsets = c.probe_subsets();
  for (auto n : c.proper) {
    if (!c.is_r(n)) {
      s.skip();
      continue;
    }
    for (auto a : subsets) {
      if (a.subset_of(n)) continue;
      const auto q = c.col(n, a);
      if (q == c.R.carrier()) {
        s.skip();
        continue;
      }
      s.check(c.is_r(q), [&]() -> Described {
        return {{n, q}, {}, "(" + c.fmt(n) + " : " + c.fmt(a) + ") = " + c.fmt(q) + " is not r"};
      });
    }
  }
}

void cor_1g(const RingContext& c, Sink& s) {
  if (!c.conds().reduced) return s.skip();
  for (auto m : c.ideals) {
    if (m.size() == 1) continue;
    const bool minimal = std::none_of(c.ideals.begin(), c.ideals.end(), [&](ElementSubset k) {
      return k.size() > 1 && k != m && k.subset_of(m);
    });
    if (!minimal) continue;
    if (m == c.R.carrier()) {
      s.skip();
      continue;
    }
    s.check(c.is_r(m), [&]() -> Described { return {{m}, {}, "minimal ideal " + c.fmt(m) + " is not r"}; });
  }
}

void cor_1h(const RingContext& c, Sink& s) {
  for (auto n : c.proper) {
    const auto sp = classify_special(c.h(n));
    if (!sp.pure && !sp.vn_regular) {
      s.skip();
      continue;
    }
    s.check(c.is_r(n), [&]() -> Described {
      return {{n}, {}, c.fmt(n) + " is " + (sp.pure ? "pure" : "von Neumann regular") + " but not r"};
    });
  }
}

void cor_1i(const RingContext& c, Sink& s) {
  if (!c.conds().sac) return s.skip();
  for (auto n : c.proper) {
    const bool lhs = c.is_r(n), rhs = faithful_ideal_cancellation(c, n);
    s.check(lhs == rhs, [&]() -> Described {
      return {{n}, {}, c.fmt(n) + ": r=" + yn(lhs) + ", ideal cancellation=" + yn(rhs)};
    });
  }
}

void cor_1j(const RingContext& c, Sink& s) {
  for (std::size_t i = 0; i < c.proper.size(); ++i)
    for (std::size_t j = i + 1; j < c.proper.size(); ++j) {
      const auto n = c.proper[i], m = c.proper[j];
      if (!c.is_r(n) || !c.is_r(m)) continue;
      const auto sum = ideal_sum(c.R, n, m);
      s.check(c.is_r(sum), [&]() -> Described {
        return {{n, m, sum},
                {},
                c.fmt(n) + "+" + c.fmt(m) + " = " + c.fmt(sum) +
                    (sum == c.R.carrier() ? " (not proper, hence not r)" : " is not r")};
      });
    }
}

void lem_2a(const RingContext& c, Sink& s) {
  for (auto n : c.proper) {
    const bool lhs = c.is_r(n), rhs = regular_ideal_cancellation(c, n);
    s.check(lhs == rhs, [&]() -> Described {
      return {{n}, {}, c.fmt(n) + ": r=" + yn(lhs) + ", J∩r(R)≠∅ cancellation=" + yn(rhs)};
    });
  }
}

void lem_2b(const RingContext& c, Sink& s) {
  for (auto n : c.proper) {
    if (!n.subset_of(c.split.zero_divisors) || c.is_r(n)) {
      s.skip();
      continue;
    }
    const auto w = is_r_hyperideal(c.h(n));
    const Element x = w.at("b");
    const auto j = c.col(n, ElementSubset::singleton(x));
    const auto k = c.col(n, j);
    const bool ok = j.intersects(c.split.regular) && n.subset_of(j) && n != j && n.subset_of(k) && n != k &&
                    ideal_product(c.R, j, k).subset_of(n);
    s.check(ok, [&]() -> Described {
      return {{n, j, k}, w.witness, "J=(N:" + c.nm(x) + ")=" + c.fmt(j) + ", K=(N:J)=" + c.fmt(k) + " fail the containments"};
    });
  }
}

void prop_1a(const RingContext& c, Sink& s) {
  std::vector<ElementSubset> rs;
  for (auto n : c.proper)
    if (c.is_r(n)) rs.push_back(n);
  for (auto n : c.ideals) {
    if (!n.intersects(c.split.regular)) {
      s.skip();
      continue;
    }
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = i + 1; j < rs.size(); ++j) {
        const bool prod = ideal_product(c.R, n, rs[i]) == ideal_product(c.R, n, rs[j]);
        const bool meet = (n & rs[i]) == (n & rs[j]);
        if (!prod && !meet) continue;
        s.check(false, [&]() -> Described {
          return {{n, rs[i], rs[j]}, {}, "N=" + c.fmt(n) + " identifies distinct r-ideals " + c.fmt(rs[i]) + ", " + c.fmt(rs[j])};
        });
      }
  }
}

void prop_1b(const RingContext& c, Sink& s) {
  for (auto m : c.ideals) {
    if (!m.intersects(c.split.regular)) {
      s.skip();
      continue;
    }
    for (auto n : c.ideals) {
      const auto p = ideal_product(c.R, n, m);
      if (!c.is_r(p)) continue;
      s.check(n == p && c.is_r(n), [&]() -> Described {
        return {{n, m, p}, {}, c.fmt(n) + "·" + c.fmt(m) + " = " + c.fmt(p) + " is r but N differs or is not r"};
      });
    }
  }
}

void thm_2(const RingContext& c, Sink& s) {
  const auto primes = c.proper_primes();
  if (primes.size() < 2 || primes.size() > 12) return s.skip();
  const std::size_t k = primes.size();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
    if (std::popcount(m) < 2) continue;
    std::vector<ElementSubset> chosen;
    for (std::size_t i = 0; i < k; ++i)
      if (m >> i & 1) chosen.push_back(primes[i]);
    bool antichain = true;
    for (auto a : chosen)
      for (auto b : chosen)
        if (a != b && a.subset_of(b)) antichain = false;
    if (!antichain) continue;
    ElementSubset meet = c.R.carrier();
    for (auto p : chosen) meet = meet & p;
    if (!c.is_r(meet)) {
      s.skip();
      continue;
    }
    const bool all = std::all_of(chosen.begin(), chosen.end(), [&](ElementSubset p) { return c.is_r(p); });
    s.check(all, [&]() -> Described { return {chosen, {}, "intersection " + c.fmt(meet) + " is r but a member is not"}; });
  }
}

void thm_img(const RingContext& c, Sink& s) {
  for (const auto& f : epimorphisms(c)) {
    const auto rep = validate_good_homomorphism(f);
    if (!rep.passed() || !rep.surjective) {
      s.skip();
      continue;
    }
    for (auto n : c.proper) {
      if (!rep.kernel.subset_of(n) || !c.is_r(n)) {
        s.skip();
        continue;
      }
      const auto img = transport_ideal(f, Transport::Image, n);
      const bool ok = img != f.target.carrier() && is_r_hyperideal(IdealHandle::trusted(f.target, img)).verdict;
      s.check(ok, [&]() -> Described {
        return {{n, rep.kernel}, {}, "image of " + c.fmt(n) + " in " + f.target.name() + " is " + format_subset(f.target, img) + ", not r"};
      });
    }
  }
}

void thm_pre(const RingContext& c, Sink& s) {
  // Here the ring is the target of each embedding.
  for (const auto& f : monomorphisms(c)) {
    const auto rep = validate_good_homomorphism(f);
    if (!rep.passed() || !rep.injective) {
      s.skip();
      continue;
    }
    for (auto m : c.proper) {
      if (!c.is_r(m)) {
        s.skip();
        continue;
      }
      const auto pre = transport_ideal(f, Transport::Preimage, m);
      if (pre == f.source.carrier()) {
        s.skip();
        continue;
      }
      s.check(is_r_hyperideal(IdealHandle::trusted(f.source, pre)).verdict, [&]() -> Described {
        return {{m}, {}, "preimage of " + c.fmt(m) + " in " + f.source.name() + " is " + format_subset(f.source, pre) + ", not r"};
      });
    }
  }
}

void thm_hd(const RingContext& c, Sink& s) {
  if (!c.one) return s.skip();
  const bool a = c.conds().hyperdomain.verdict;
  bool b = true;
  for (auto n : c.proper)
    if (c.is_r(n) && n != c.zero_ideal()) b = false;
  bool cc = true;
  for (Element x : c.R.carrier())
    for (Element y : c.R.carrier())
      if (c.ann(ElementSubset::singleton(c.R.mul(x, y))) !=
          (c.ann(ElementSubset::singleton(x)) | c.ann(ElementSubset::singleton(y))))
        cc = false;
  s.check(a == b && b == cc, [&]() -> Described {
    return {{}, {}, "hyperdomain=" + yn(a) + ", only r-ideal is zero=" + yn(b) + ", ann(xy)=ann(x)∪ann(y) " + yn(cc)};
  });
}

void prop_2(const RingContext& c, Sink& s) {
  std::vector<Element> es;
  for (Element e : idempotents(c.R)) es.push_back(e);
  if (es.size() > 12) return s.skip();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << es.size()); ++m) {
    ElementSubset n = c.zero_ideal();
    for (std::size_t i = 0; i < es.size(); ++i)
      if (m >> i & 1) n = ideal_sum(c.R, n, scale(c.R, es[i], c.R.carrier()));
    if (n == c.R.carrier() || !is_hyperideal(c.R, n).verdict) {
      s.skip();
      continue;
    }
    s.check(c.is_r(n), [&]() -> Described { return {{n}, {}, "sum of eR over idempotents is " + c.fmt(n) + ", not r"}; });
  }
}

void prop_3a(const RingContext& c, Sink& s) {
  if (!c.one) return s.skip();
  for (Element x : c.R.carrier())
    for (Element y : c.R.carrier()) {
      if (y < x || !c.R.add(x, y).contains(*c.one)) continue;
      const auto n = ideal_sum(c.R, c.ann(ElementSubset::singleton(x)), c.ann(ElementSubset::singleton(y)));
      if (n == c.R.carrier()) {
        s.skip();
        continue;
      }
      s.check(c.is_r(n), [&]() -> Described {
        return {{n}, {{"x", x}, {"y", y}}, "ann(" + c.nm(x) + ")+ann(" + c.nm(y) + ") = " + c.fmt(n) + " is not r"};
      });
    }
}

void prop_3b(const RingContext& c, Sink& s) {
  if (!c.one || !c.conds().reduced) return s.skip();
  for (auto i : minimal_primes_over(c.h(c.zero_ideal())).primes)
    for (Element e : idempotents(c.R)) {
      const auto n = ideal_sum(c.R, i, c.ann(ElementSubset::singleton(e)));
      if (n == c.R.carrier()) {
        s.skip();
        continue;
      }
      s.check(c.is_r(n), [&]() -> Described {
        return {{i, n}, {{"e", e}}, c.fmt(i) + "+ann(" + c.nm(e) + ") = " + c.fmt(n) + " is not r"};
      });
    }
}

void cor_3a(const RingContext& c, Sink& s) {
  std::vector<ElementSubset> anns;
  for (auto k : c.ideals) anns.push_back(c.ann(k));
  for (std::size_t i = 0; i < c.ideals.size(); ++i)
    for (std::size_t j = i; j < c.ideals.size(); ++j) {
      const auto sum = ideal_sum(c.R, anns[i], anns[j]);
      if (sum == c.R.carrier() || std::find(anns.begin(), anns.end(), sum) == anns.end()) {
        s.skip();
        continue;
      }
      s.check(c.is_r(sum), [&]() -> Described {
        return {{c.ideals[i], c.ideals[j], sum}, {}, "ann sum " + c.fmt(sum) + " is an annihilator but not r"};
      });
    }
}

void cor_3b(const RingContext& c, Sink& s) {
  for (std::size_t i = 0; i < c.proper.size(); ++i)
    for (std::size_t j = i + 1; j < c.proper.size(); ++j) {
      const auto m = c.proper[i], k = c.proper[j];
      if ((m & k) != c.zero_ideal()) continue;
      const auto n = ideal_sum(c.R, m, k);
      if (n == c.R.carrier()) {
        s.skip();
        continue;
      }
      const bool parts = c.is_r(m) && c.is_r(k), whole = c.is_r(n);
      s.check(parts == whole, [&]() -> Described {
        return {{m, k, n}, {}, c.fmt(m) + "⊕" + c.fmt(k) + ": summands r=" + yn(parts) + ", sum r=" + yn(whole)};
      });
    }
}

void cor_3c(const RingContext& c, Sink& s) {
  const auto soc = socle(c.R);
  if (!c.conds().reduced || soc == c.R.carrier()) return s.skip();
  s.check(c.is_r(soc), [&]() -> Described { return {{soc}, {}, "socle " + c.fmt(soc) + " is not r"}; });
}

void prop_4(const RingContext& c, Sink& s) {
  for (auto n : c.proper) {
    const auto rn = c.rad(n);
    if (rn == c.R.carrier()) {
      s.skip();
      continue;
    }
    const bool pr = c.is_pr(n), r = c.is_r(rn);
    s.check(pr == r, [&]() -> Described {
      return {{n, rn}, {}, c.fmt(n) + ": pr=" + yn(pr) + ", √N=" + c.fmt(rn) + " r=" + yn(r)};
    });
  }
}

void prop_5(const RingContext& c, Sink& s) {
  const auto nil = nilradical(c.R);
  if (nil == c.R.carrier()) return s.skip();
  s.check(c.is_r(nil), [&]() -> Described { return {{nil}, {}, "nilradical " + c.fmt(nil) + " is not r"}; });
}

void cor_4(const RingContext& c, Sink& s) {
  for (auto n : c.proper) {
    const auto rn = c.rad(n);
    const bool a = c.is_pr(n);
    const bool b = scaled_intersection(c, rn);
    bool cc = true;
    for (Element r : c.split.regular - n)
      if (c.rad(c.col(n, ElementSubset::singleton(r))) != rn) cc = false;
    s.check(a == b && b == cc, [&]() -> Described {
      return {{n}, {}, c.fmt(n) + ": pr=" + yn(a) + ", (rR)∩√N=r√N " + yn(b) + ", √N=√(N:r) " + yn(cc)};
    });
  }
}

void thm_9(const RingContext& c, Sink& s) {
  for (auto n : c.proper) {
    if (!classify_special(c.h(n)).z0) {
      s.skip();
      continue;
    }
    s.check(c.is_r(n), [&]() -> Described { return {{n}, {}, "z0-ideal " + c.fmt(n) + " is not r"}; });
  }
}

void thm_10(const RingContext& c, Sink& s) {
  if (!c.one) return s.skip();
  const auto primes = c.proper_primes();
  for (auto n : c.proper) {
    if (!n.subset_of(c.split.zero_divisors)) {
      s.skip();
      continue;
    }
    const bool found = std::any_of(primes.begin(), primes.end(), [&](ElementSubset p) { return n.subset_of(p) && c.is_r(p); });
    s.check(found, [&]() -> Described { return {{n}, {}, c.fmt(n) + " ⊆ zd lies in no prime r-ideal"}; });
  }
}

void thm_11(const RingContext& c, Sink& s) {
  for (auto n : c.proper) {
    const auto mp = minimal_primes_over(c.h(n));
    if (mp.no_prime_found) {
      s.skip();
      continue;
    }
    for (auto p : mp.primes)
      s.check(c.is_r(p), [&]() -> Described {
        return {{n, p}, {}, "minimal prime " + c.fmt(p) + " over " + c.fmt(n) + " is not r"};
      });
  }
}

void prop_6(const RingContext& c, Sink& s) {
  for (auto n : c.proper) {
    if (!c.is_r(n)) {
      s.skip();
      continue;
    }
    const auto* q = c.quotient_by(n);
    if (!q) {
      s.skip();
      continue;
    }
    for (auto m : c.proper) {
      if (!n.subset_of(m)) continue;
      const auto mn = transport_ideal(q->projection, Transport::Image, m);
      if (mn == q->ring.carrier() || !is_r_hyperideal(IdealHandle::trusted(q->ring, mn)).verdict) {
        s.skip();
        continue;
      }
      s.check(c.is_r(m), [&]() -> Described {
        return {{n, m}, {}, "M/N = " + format_subset(q->ring, mn) + " is r in " + q->ring.name() + " but M=" + c.fmt(m) + " is not"};
      });
    }
  }
}

std::vector<ElementSubset> maximal_r(const RingContext& c) {
  std::vector<ElementSubset> rs, out;
  for (auto n : c.proper)
    if (c.is_r(n)) rs.push_back(n);
  for (auto n : rs)
    if (std::none_of(rs.begin(), rs.end(), [&](ElementSubset m) { return m != n && n.subset_of(m); })) out.push_back(n);
  return out;
}

void prop_7(const RingContext& c, Sink& s) {
  if (!c.one) return s.skip();
  for (auto n : maximal_r(c))
    s.check(c.is_prime(n), [&]() -> Described {
      const auto w = prime_check(c.R, n);
      return {{n}, w.witness, "maximal r-ideal " + c.fmt(n) + " is not prime: " + w.note};
    });
}

void prop_8(const RingContext& c, Sink& s) {
  const auto primes = c.proper_primes();
  if (!std::all_of(primes.begin(), primes.end(), [&](ElementSubset p) { return c.is_r(p); })) return s.skip();
  for (auto m : c.proper) {
    const bool maximal = std::none_of(c.proper.begin(), c.proper.end(), [&](ElementSubset k) { return k != m && m.subset_of(k); });
    if (!maximal) continue;
    s.check(c.is_r(m), [&]() -> Described { return {{m}, {}, "maximal ideal " + c.fmt(m) + " is not r"}; });
  }
}

void prop_9(const RingContext& c, Sink& s) {
  if (!c.conds().reduced || !c.conds().property_a) return s.skip();
  for (auto n : maximal_r(c))
    s.check(classify_special(c.h(n)).z0.verdict, [&]() -> Described {
      const auto w = classify_special(c.h(n)).z0;
      return {{n}, w.witness, "maximal r-ideal " + c.fmt(n) + " is not z0: " + w.note};
    });
}

// ---------------------------------------------------------------------------
// Reduction family

bool phi_leq(const std::optional<ElementSubset>& a, const std::optional<ElementSubset>& b) {
  if (!a) return true;
  return b && a->subset_of(*b);
}

void thm_4_1_i(const RingContext& c, Sink& s) {
  const auto fam = standard_phi_family();
  for (auto n : c.proper)
    for (const auto& p1 : fam)
      for (const auto& p2 : fam) {
        if (p1 == p2) continue;
        if (!phi_leq(c.phi(p1, n), c.phi(p2, n))) {
          s.skip();
          continue;
        }
        if (!c.phi_class(n, p1, PhiClass::R)) continue;
        s.check(c.phi_class(n, p2, PhiClass::R), [&]() -> Described {
          return {{n}, {}, c.fmt(n) + " is " + p1.label() + "-r but not " + p2.label() + "-r"};
        });
      }
}

void implication_sweep(const RingContext& c, Sink& s, PhiClass from, PhiClass to) {
  for (auto n : c.proper)
    for (const auto& p : standard_phi_family()) {
      if (!c.phi_class(n, p, from)) {
        s.skip();
        continue;
      }
      s.check(c.phi_class(n, p, to), [&]() -> Described {
        return {{n}, {}, c.fmt(n) + " is " + p.label() + "-" + to_string(from) + " but not " + p.label() + "-" + to_string(to)};
      });
    }
}

void thm_4_1_iii(const RingContext& c, Sink& s) {
  const std::vector<PhiReducer> chain{PhiReducer::empty(), PhiReducer::zero(), PhiReducer::omega(), PhiReducer::power(4),
                                      PhiReducer::power(3), PhiReducer::power(2)};
  for (auto n : c.proper)
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      if (!c.phi_class(n, chain[i], PhiClass::R)) {
        s.skip();
        continue;
      }
      s.check(c.phi_class(n, chain[i + 1], PhiClass::R), [&]() -> Described {
        return {{n}, {}, c.fmt(n) + " is " + chain[i].label() + "-r but not " + chain[i + 1].label() + "-r"};
      });
    }
}

void thm_4_2(const RingContext& c, Sink& s) {
  for (auto n : c.proper)
    for (const auto& p : standard_phi_family()) {
      const auto pn = c.phi(p, n);
      const bool i = c.phi_class(n, p, PhiClass::R);
      bool ii = true, iii = true;
      for (Element r : c.split.regular - n) {
        const auto nr = c.col(n, ElementSubset::singleton(r));
        const auto pr = c.col_phi(pn, r);
        if (nr != (n | pr)) ii = false;
        if (nr != n && nr != pr) iii = false;
      }
      s.check(i == ii && ii == iii, [&]() -> Described {
        return {{n}, {}, c.fmt(n) + " under " + p.label() + ": phi-r=" + yn(i) + ", (N:r)=N∪(phi(N):r) " + yn(ii) + ", split form " + yn(iii)};
      });
    }
}

void thm_strong(const RingContext& c, Sink& s) {
  implication_sweep(c, s, PhiClass::StronglyR, PhiClass::R);
}

// phi(N) is a proper r-ideal (the Empty marker never qualifies).
bool phi_is_r(const RingContext& c, const std::optional<ElementSubset>& pn) { return pn && c.is_r(*pn); }

void thm_phi_sac(const RingContext& c, Sink& s) {
  if (!c.conds().sac) return s.skip();
  for (auto n : c.proper)
    for (const auto& p : standard_phi_family()) {
      if (!phi_is_r(c, c.phi(p, n))) {
        s.skip();
        continue;
      }
      const bool lhs = c.phi_class(n, p, PhiClass::R), rhs = c.phi_class(n, p, PhiClass::StronglyR);
      s.check(lhs == rhs, [&]() -> Described {
        return {{n}, {}, c.fmt(n) + " under " + p.label() + ": phi-r=" + yn(lhs) + ", strongly=" + yn(rhs)};
      });
    }
}

void thm_phi_n_zd(const RingContext& c, Sink& s) {
  for (auto n : c.proper)
    for (const auto& p : standard_phi_family()) {
      if (!phi_is_r(c, c.phi(p, n)) || !c.phi_class(n, p, PhiClass::R)) {
        s.skip();
        continue;
      }
      s.check(n.subset_of(c.split.zero_divisors), [&]() -> Described {
        return {{n}, {}, c.fmt(n) + " is " + p.label() + "-r yet holds a regular element"};
      });
    }
}

void thm_phi_prime(const RingContext& c, Sink& s) {
  for (auto n : c.proper)
    for (const auto& p : standard_phi_family()) {
      if (!c.is_prime(n) || !phi_is_r(c, c.phi(p, n))) {
        s.skip();
        continue;
      }
      const bool lhs = c.phi_class(n, p, PhiClass::R), rhs = n.subset_of(c.split.zero_divisors);
      s.check(lhs == rhs, [&]() -> Described {
        return {{n}, {}, "prime " + c.fmt(n) + " under " + p.label() + ": phi-r=" + yn(lhs) + ", inside zd=" + yn(rhs)};
      });
    }
}

void thm_phi_zd(const RingContext& c, Sink& s) {
  for (auto n : c.proper)
    for (const auto& p : standard_phi_family()) {
      if (!c.phi_class(n, p, PhiClass::R)) {
        s.skip();
        continue;
      }
      const auto diff = phi_difference(p, c.h(n));
      s.check(diff.subset_of(c.split.zero_divisors), [&]() -> Described {
        const Element x = (diff - c.split.zero_divisors).first();
        return {{n}, {{"x", x}}, c.fmt(n) + " is " + p.label() + "-r but " + c.nm(x) + " in N-phi(N) is regular"};
      });
    }
}

void thm_phi_r_iff_r(const RingContext& c, Sink& s) {
  for (auto n : c.proper)
    for (const auto& p : standard_phi_family()) {
      if (!phi_is_r(c, c.phi(p, n))) {
        s.skip();
        continue;
      }
      const bool lhs = c.phi_class(n, p, PhiClass::R), rhs = c.is_r(n);
      s.check(lhs == rhs, [&]() -> Described {
        return {{n}, {}, c.fmt(n) + " under " + p.label() + ": phi-r=" + yn(lhs) + ", r=" + yn(rhs)};
      });
    }
}

// M/N is phi_N-r in R/N, where phi_N(M/N) = (phi(M)+N)/N.
bool quotient_phi_r(const RingContext& c, const QuotientPresentation& q, ElementSubset n, ElementSubset m,
                    const PhiReducer& p) {
  const auto mn = transport_ideal(q.projection, Transport::Image, m);
  ElementSubset premise = mn;
  if (auto pm = c.phi(p, m)) premise = mn - transport_ideal(q.projection, Transport::Image, ideal_sum(c.R, *pm, n));
  return cancels(q.ring, premise, mn);
}

void thm_phi_quot(const RingContext& c, Sink& s, bool literal) {
  for (auto n : c.proper) {
    const bool hyp = literal ? n.subset_of(c.split.regular) : (n - c.zero_ideal()).subset_of(c.split.regular);
    if (!hyp) {
      s.skip();
      continue;
    }
    const auto* q = c.quotient_by(n);
    if (!q) {
      s.skip();
      continue;
    }
    for (auto m : c.proper) {
      if (!n.subset_of(m)) continue;
      for (const auto& p : standard_phi_family()) {
        if (!c.phi_class(m, p, PhiClass::R)) {
          s.skip();
          continue;
        }
        s.check(quotient_phi_r(c, *q, n, m, p), [&]() -> Described {
          return {{n, m}, {}, c.fmt(m) + "/" + c.fmt(n) + " is not " + p.label() + "-r in the quotient"};
        });
      }
    }
  }
}

void thm_phi_quot_lift(const RingContext& c, Sink& s) {
  for (auto n : c.proper) {
    if (!c.is_r(n)) {
      s.skip();
      continue;
    }
    const auto* q = c.quotient_by(n);
    if (!q) {
      s.skip();
      continue;
    }
    for (auto m : c.proper) {
      if (!n.subset_of(m)) continue;
      const auto mn = transport_ideal(q->projection, Transport::Image, m);
      if (mn == q->ring.carrier() || !is_r_hyperideal(IdealHandle::trusted(q->ring, mn)).verdict) {
        s.skip();
        continue;
      }
      for (const auto& p : standard_phi_family())
        s.check(c.phi_class(m, p, PhiClass::R), [&]() -> Described {
          return {{n, m}, {}, "M/N r in the quotient but " + c.fmt(m) + " is not " + p.label() + "-r"};
        });
    }
  }
}

void thm_phi_colon(const RingContext& c, Sink& s) {
  const auto subsets = c.probe_subsets();
  for (const auto& p : standard_phi_family()) {
    if (!phi_order_preserving(c, p)) {
      s.skip();
      continue;
    }
    for (auto n : c.proper) {
      if (!c.phi_class(n, p, PhiClass::R)) {
        s.skip();
        continue;
      }
      for (auto a : subsets) {
        if (a.subset_of(n)) continue;
        const auto q = c.col(n, a);
        if (q == c.R.carrier()) {
          s.skip();
          continue;
        }
        s.check(c.phi_class(q, p, PhiClass::R), [&]() -> Described {
          return {{n, q}, {}, "(" + c.fmt(n) + " : " + c.fmt(a) + ") = " + c.fmt(q) + " is not " + p.label() + "-r"};
        });
      }
    }
  }
}

void cor_5(const RingContext& c, Sink& s) {
  for (const auto& p : standard_phi_family()) {
    if (!phi_order_preserving(c, p)) {
      s.skip();
      continue;
    }
    std::vector<ElementSubset> members;
    for (auto n : c.proper)
      if (c.phi_class(n, p, PhiClass::R)) members.push_back(n);
    for (auto a : members)
      for (auto b : members) {
        if (a == b || !a.subset_of(b)) continue;
        const auto u = a | b;
        s.check(c.phi_class(u, p, PhiClass::R), [&]() -> Described {
          return {{a, b}, {}, "union of chain " + c.fmt(a) + " ⊆ " + c.fmt(b) + " is not " + p.label() + "-r"};
        });
      }
  }
}

// ---------------------------------------------------------------------------
// Worked examples, evaluated once

void ex1(Sink& s) {
  const auto z6 = build_classical_zn(6);
  s.bind(z6);
  const auto ideals = enumerate_hyperideals(z6);
  const std::vector<ElementSubset> expect{ElementSubset::of({0}), ElementSubset::of({0, 3}), ElementSubset::of({0, 2, 4}),
                                          z6.carrier()};
  s.check(ideals == expect, [&]() -> Described { return {ideals, {}, "Z6 ideal lattice differs"}; });
  const auto n = ElementSubset::of({0, 2, 4});
  s.check(is_r_hyperideal(IdealHandle::trusted(z6, n)).verdict,
          [&]() -> Described { return {{n}, {}, "{0,2,4} is not r in Z6"}; });
}

void ex2(Sink& s) {
  const auto h3 = build_h3();
  s.bind(h3);
  s.check(validate_krasner_hyperring(h3).passed(), [&]() -> Described { return {{}, {}, "H3 fails validation"}; });
  const auto b = ElementSubset::of({h3.zero(), *h3.find("a")});
  s.check(is_r_hyperideal(IdealHandle::trusted(h3, b)).verdict,
          [&]() -> Described { return {{b}, {}, "{0,a} is not r in H3"}; });
}

void ex3_claim(Sink& s) {
  const auto chain = build_chain(3, ChainMulRule::Min);
  s.bind(chain);
  const auto n = ElementSubset::of({chain.zero(), *chain.find("a")});
  const auto w = is_r_hyperideal(IdealHandle::trusted(chain, n));
  s.check(w.verdict, [&]() -> Described {
    return {{n},
            w.witness,
            "claim that {0,a} is an r-hyperideal fails on the finite chain: " + w.note +
                " (see the open question on the infinite chain example)"};
  });
}

std::vector<TheoremDef> registry() {
  using E = Expectation;
  std::vector<TheoremDef> r;
  auto per = [&](std::string id, std::string statement, E e, std::function<void(const RingContext&, Sink&)> f,
                 std::string note = {}) { r.push_back({{std::move(id), std::move(statement), e, std::move(note)}, std::move(f), {}, {}}); };
  auto once = [&](std::string id, std::string statement, E e, std::function<void(Sink&)> f, std::string ring_id,
                  std::string note = {}) {
    r.push_back({{std::move(id), std::move(statement), e, std::move(note)}, {}, std::move(f), std::move(ring_id)});
  };

  once("EX1", "Z6 has ideals {0},{0,3},{0,2,4},Z6 and {0,2,4} is r", E::Holds, ex1, "Z6");
  once("EX2", "H3 validates and {0,a} is r", E::Holds, ex2, "H3");
  once("EX3-CLAIM", "{0,a} is r in the chain with min multiplication", E::Falsified, ex3_claim, "chain(3,min)",
       "finite analogue; expected to fail with witness (a,1)");
  per("THM-3.1", "r  <=>  (aR)∩N = aN for regular a  <=>  (N:a) = N for regular a not in N", E::Holds, thm_3_1);
  per("COR-1a", "the zero hyperideal is r", E::Holds, cor_1a);
  per("COR-1b", "intersections of r-hyperideals are r", E::Holds, cor_1b);
  per("COR-1c", "r-hyperideals lie inside zd(R)", E::Holds, cor_1c);
  per("COR-1d", "r implies pr", E::Holds, cor_1d);
  per("COR-1e", "a prime is r iff it lies in zd(R); minimal primes are r", E::Holds, cor_1e);
  per("COR-1f", "(N:S) is r for r-hyperideal N and S not inside N", E::Holds, cor_1f,
      "colons equal to the whole ring are skipped");
  per("COR-1g", "minimal hyperideals of a reduced ring are r", E::Holds, cor_1g);
  per("COR-1h", "pure and von Neumann regular hyperideals are r", E::Holds, cor_1h);
  per("COR-1i", "under s.a.c.: r iff JK ⊆ N with ann(J)=0 forces K ⊆ N", E::Holds, cor_1i);
  per("COR-1j", "sum of two r-hyperideals is r", E::Falsified, cor_1j, "expected to fail");
  per("LEM-2a", "r iff JK ⊆ N with J∩r(R) nonempty forces K ⊆ N", E::Holds, lem_2a);
  per("LEM-2b", "non-r N ⊆ zd(R) admits J=(N:x), K=(N:J) with J∩r(R) nonempty, N ⊊ J, K and JK ⊆ N", E::Holds, lem_2b);
  per("PROP-1a", "N meeting r(R): N·J=N·K or N∩J=N∩K forces J=K for r-hyperideals", E::Holds, prop_1a);
  per("PROP-1b", "M meeting r(R) and N·M r imply N = N·M and N r", E::Holds, prop_1b);
  per("THM-2", "incomparable primes with r intersection are each r", E::Holds, thm_2);
  per("THM-IMG", "good epimorphism with kernel inside r-hyperideal N maps N to an r-hyperideal", E::Holds, thm_img);
  per("THM-PRE", "preimage of an r-hyperideal under a good monomorphism is r", E::Holds, thm_pre,
      "improper preimages are skipped");
  per("THM-HD", "hyperdomain <=> only r-hyperideal is zero <=> ann(xy) = ann(x) ∪ ann(y)", E::Holds, thm_hd,
      "rings without identity are skipped");
  per("PROP-2", "a proper sum of eR over idempotents e is r", E::Holds, prop_2);
  per("PROP-3a", "1 ∈ x+y implies ann(x)+ann(y) is r when proper", E::Holds, prop_3a);
  per("PROP-3b", "reduced ring: I+ann(e) is r for I minimal prime, e idempotent", E::ReportOnly, prop_3b,
      "reported only");
  per("COR-3a", "ann(N)+ann(M) equal to some ann(K) is r", E::ReportOnly, cor_3a, "reported only");
  per("COR-3b", "a direct sum is r iff both summands are r", E::ReportOnly, cor_3b, "reported only");
  per("COR-3c", "the socle of a reduced ring is r (socle proper)", E::ReportOnly, cor_3c, "reported only");
  per("PROP-4", "N is pr iff √N is r", E::Holds, prop_4);
  per("PROP-5", "the nilradical is r when proper", E::Holds, prop_5);
  per("COR-4", "pr  <=>  (rR)∩√N = r√N  <=>  √N = √(N:r) for regular r not in N", E::Holds, cor_4);
  per("THM-9", "every z0-hyperideal is r", E::Holds, thm_9);
  per("THM-10", "a hyperideal inside zd(R) lies in a prime r-hyperideal", E::Holds, thm_10,
      "rings without identity are skipped");
  per("THM-11", "minimal primes over a proper hyperideal are r", E::Holds, thm_11);
  per("PROP-6", "N r, N ⊆ M and M/N r in R/N imply M r", E::Holds, prop_6);
  per("PROP-7", "a maximal r-hyperideal is prime", E::Holds, prop_7, "rings without identity are skipped");
  per("PROP-8", "all primes r implies all maximal hyperideals r", E::Holds, prop_8);
  per("PROP-9", "reduced with Property A: maximal r-hyperideals are z0", E::Holds, prop_9);
  per("THM-4.1-i", "phi1 <= phi2 and N phi1-r imply N phi2-r", E::Holds, thm_4_1_i);
  per("THM-4.1-ii", "phi-r implies phi-pr", E::Holds,
      [](const RingContext& c, Sink& s) { implication_sweep(c, s, PhiClass::R, PhiClass::Pr); });
  per("THM-4.1-iii", "r => phi_0-r => phi_omega-r => phi_4-r => phi_3-r => phi_2-r", E::Holds, thm_4_1_iii);
  per("THM-4.1-iv", "phi-pure implies phi-r", E::Holds,
      [](const RingContext& c, Sink& s) { implication_sweep(c, s, PhiClass::Pure, PhiClass::R); });
  per("THM-4.1-v", "phi-von Neumann regular implies phi-r", E::Holds,
      [](const RingContext& c, Sink& s) { implication_sweep(c, s, PhiClass::Vnr, PhiClass::R); });
  per("THM-4.2", "phi-r  <=>  (N:r) = N ∪ (phi(N):r)  <=>  (N:r) ∈ {N, (phi(N):r)}", E::Holds, thm_4_2);
  per("THM-STRONG", "strongly phi-r implies phi-r", E::Holds, thm_strong);
  per("THM-φsac", "s.a.c. and phi(N) r: phi-r iff strongly phi-r", E::Holds, thm_phi_sac);
  per("THM-φN-zd", "phi(N) r and N phi-r imply N ⊆ zd(R)", E::Holds, thm_phi_n_zd);
  per("THM-φprime", "phi(N) r and N prime: phi-r iff N ⊆ zd(R)", E::Holds, thm_phi_prime);
  per("THM-φzd", "N phi-r implies N - phi(N) ⊆ zd(R)", E::Holds, thm_phi_zd);
  per("THM-φr-iff-r", "phi(N) r: phi-r iff r", E::Holds, thm_phi_r_iff_r);
  per("THM-φquot", "N minus zero inside r(R), N ⊆ M, M phi-r imply M/N phi_N-r", E::Holds,
      [](const RingContext& c, Sink& s) { thm_phi_quot(c, s, false); });
  per("THM-φquot-literal", "N ⊆ r(R), N ⊆ M, M phi-r imply M/N phi_N-r", E::Holds,
      [](const RingContext& c, Sink& s) { thm_phi_quot(c, s, true); }, "hypothesis can never hold since 0 ∈ N");
  per("THM-φquot-lift", "N r, N ⊆ M, M/N r imply M phi-r", E::Holds, thm_phi_quot_lift);
  per("THM-φcolon", "phi order-preserving, N phi-r, A not inside N: (N:A) is phi-r", E::Holds, thm_phi_colon);
  per("COR-5", "phi order-preserving: union of an ascending chain of phi-r hyperideals is phi-r", E::Holds, cor_5);
  return r;
}

const std::vector<TheoremDef>& theorem_defs() {
  static const std::vector<TheoremDef> defs = registry();
  return defs;
}

}  // namespace

bool TheoremReport::ok() const {
  switch (expectation) {
    case Expectation::Holds: return violation_count == 0;
    case Expectation::Falsified: return violation_count > 0;
    case Expectation::ReportOnly: return true;
  }
  return false;
}

std::string TheoremReport::status() const {
  if (expectation == Expectation::Falsified) return violation_count > 0 ? "falsified as expected" : "NOT falsified";
  if (violation_count > 0) return expectation == Expectation::ReportOnly ? "violated (report only)" : "VIOLATED";
  if (instances_checked == 0) return "0 applicable instances";
  return "confirmed at desk scale";
}

std::vector<TheoremInfo> theorem_catalog() {
  std::vector<TheoremInfo> out;
  for (const auto& d : theorem_defs()) out.push_back(d.info);
  return out;
}

std::vector<TheoremReport> run_theorem_suite(const Corpus& corpus, const std::vector<std::string>& filter,
                                             const SuiteOptions& opts) {
  const auto& defs = theorem_defs();
  std::vector<const TheoremDef*> chosen;
  if (filter.empty()) {
    for (const auto& d : defs) chosen.push_back(&d);
  } else {
    for (const auto& id : filter) {
      auto it = std::find_if(defs.begin(), defs.end(), [&](const TheoremDef& d) { return d.info.id == id; });
      if (it == defs.end()) throw UnknownTheoremId("unknown theorem id '" + id + "'");
      if (std::find(chosen.begin(), chosen.end(), &*it) == chosen.end()) chosen.push_back(&*it);
    }
    std::sort(chosen.begin(), chosen.end());
  }
  if (corpus.empty() && std::any_of(chosen.begin(), chosen.end(), [](const TheoremDef* d) { return d->per_ring != nullptr; }))
    throw std::invalid_argument("corpus is empty");

  const std::size_t rings = corpus.size();
  // sinks[ring][theorem]
  std::vector<std::vector<Sink>> sinks(rings);
  auto work = [&](std::size_t i) {
    const auto& e = corpus.entries()[i];
    RingContext ctx(e);
    auto& row = sinks[i];
    row.reserve(chosen.size());
    for (const auto* d : chosen) {
      row.emplace_back(e.id, opts.stored_violations, &e.ring);
      if (d->per_ring) d->per_ring(ctx, row.back());
    }
  };

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(rings, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < rings; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < rings;) work(i);
      });
    for (auto& t : pool) t.join();
  }

  std::vector<TheoremReport> reports;
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    const auto* d = chosen[k];
    TheoremReport rep;
    rep.theorem_id = d->info.id;
    rep.statement = d->info.statement;
    rep.expectation = d->info.expectation;
    rep.note = d->info.note;
    auto absorb = [&](Sink& s) {
      rep.instances_checked += s.tally.checked;
      rep.skipped_hypothesis_unmet += s.tally.skipped;
      rep.violation_count += s.tally.violations;
      for (auto& v : s.stored)
        if (rep.violations.size() < opts.stored_violations) rep.violations.push_back(std::move(v));
      if (s.tally.checked || s.tally.skipped) rep.per_ring.push_back(s.tally);
    };
    if (d->global) {
      Sink s(d->global_ring_id, opts.stored_violations);
      d->global(s);
      absorb(s);
    } else {
      for (std::size_t i = 0; i < rings; ++i) absorb(sinks[i][k]);
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

// ---------------------------------------------------------------------------

std::vector<std::string> counterexample_properties() {
  return {"sum-of-r-is-r", "product-of-r-is-r", "pr-implies-r", "example3-chain-ideal-is-r"};
}

std::variant<Counterexample, NotFound> find_counterexample(const std::string& property_id, const Corpus& corpus) {
  const auto props = counterexample_properties();
  if (std::find(props.begin(), props.end(), property_id) == props.end())
    throw UnknownPropertyId("unknown property '" + property_id + "'");

  NotFound nf{property_id, 0, 0};
  if (property_id == "example3-chain-ideal-is-r") {
    for (int n = 3; n <= 5; ++n) {
      const auto chain = build_chain(n, ChainMulRule::Min);
      ++nf.rings_scanned;
      for (Element x = 1; x + 1 < chain.order(); ++x) {
        ElementSubset s;
        for (Element y = 0; y <= x; ++y) s.insert(y);
        if (!is_hyperideal(chain, s).verdict) continue;
        ++nf.instances;
        const auto w = is_r_hyperideal(IdealHandle::trusted(chain, s));
        if (!w.verdict)
          return Counterexample{property_id, "chain(" + std::to_string(n) + ",min)", {s}, w.witness,
                                format_subset(chain, s) + " is not r: " + w.note};
      }
    }
    return nf;
  }

  for (const auto& e : corpus.entries()) {
    ++nf.rings_scanned;
    const auto& R = e.ring;
    std::vector<ElementSubset> proper;
    for (auto s : enumerate_hyperideals(R))
      if (s != R.carrier()) proper.push_back(s);
    auto is_r = [&](ElementSubset s) { return s != R.carrier() && is_r_hyperideal(IdealHandle::trusted(R, s)).verdict; };

    if (property_id == "pr-implies-r") {
      for (auto n : proper) {
        const auto pr = is_pr_hyperideal(IdealHandle::trusted(R, n));
        if (!pr.verdict) continue;
        ++nf.instances;
        const auto r = is_r_hyperideal(IdealHandle::trusted(R, n));
        if (!r.verdict) return Counterexample{property_id, e.id, {n}, r.witness, format_subset(R, n) + " is pr but not r: " + r.note};
      }
      continue;
    }
    for (std::size_t i = 0; i < proper.size(); ++i)
      for (std::size_t j = i + 1; j < proper.size(); ++j) {
        const auto n = proper[i], m = proper[j];
        if (!is_r(n) || !is_r(m)) continue;
        ++nf.instances;
        const bool sum = property_id == "sum-of-r-is-r";
        const auto out = sum ? ideal_sum(R, n, m) : ideal_product(R, n, m);
        if (is_r(out)) continue;
        const std::string op = sum ? "+" : "·";
        return Counterexample{property_id, e.id, {n, m, out}, {},
                              format_subset(R, n) + op + format_subset(R, m) + " = " + format_subset(R, out) +
                                  (out == R.carrier() ? " (not proper)" : " (not r)")};
      }
  }
  return nf;
}

}  // namespace khr
