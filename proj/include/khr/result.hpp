#ifndef KHR_RESULT_HPP
#define KHR_RESULT_HPP

#include <string>
#include <utility>
#include <vector>

#include "khr/subset.hpp"

namespace khr {

/// One labelled element of a counterexample, e.g. {"a", 2}.
struct WitnessItem {
  std::string role;
  Element element = 0;
  friend bool operator==(const WitnessItem&, const WitnessItem&) = default;
};

/**
 * Verdict of a predicate on an ideal or subset.
 *
 * A false verdict always carries the first witness in lexicographic order.
 * A true verdict whose premise set was empty is marked vacuous.
 */
struct ClassificationResult {
  bool verdict = true;
  std::vector<WitnessItem> witness;
  std::string note;
  bool vacuous = false;

  explicit operator bool() const { return verdict; }

  static ClassificationResult holds(bool was_vacuous = false) {
    ClassificationResult r;
    r.vacuous = was_vacuous;
    if (was_vacuous) r.note = "vacuous";
    return r;
  }
  static ClassificationResult fails(std::vector<WitnessItem> witness, std::string note) {
    ClassificationResult r;
    r.verdict = false;
    r.witness = std::move(witness);
    r.note = std::move(note);
    return r;
  }

  /// Element bound to `role`, or -1.
  Element at(const std::string& role) const {
    for (const auto& w : witness)
      if (w.role == role) return w.element;
    return -1;
  }
};

}  // namespace khr

#endif
