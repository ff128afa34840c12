#ifndef KHR_EXPLORER_HPP
#define KHR_EXPLORER_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "khr/classify.hpp"
#include "khr/constructions.hpp"

namespace khr {

// ---------------------------------------------------------------------------
// Enumeration

class OrderTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Exhaustive {};
struct RandomSample {
  std::uint64_t seed = 1;
  int count = 1;
};
using EnumerationMode = std::variant<Exhaustive, RandomSample>;

/**
 * Krasner hyperrings of the given order, pairwise non-isomorphic.
 *
 * Exhaustive mode (order <= 3) fixes zero at index 0, fills the upper
 * triangle of both tables and keeps every table that validates. Random mode
 * (order <= 6) runs a seeded randomized depth-first search over addition
 * cells with fail-fast partial checks, then over multiplication cells; the
 * same seed always yields the same list.
 */
std::vector<HyperringTable> enumerate_hyperrings(int order, const EnumerationMode& mode);

// ---------------------------------------------------------------------------
// Corpus

enum class Provenance { Builder, Exhaustive, File, Random, Quotient };

std::string to_string(Provenance p);

struct ProductFactors {
  HyperringTable left;
  HyperringTable right;
};

struct CorpusEntry {
  std::string id;
  HyperringTable ring;
  Provenance provenance = Provenance::Builder;
  std::shared_ptr<const ProductFactors> factors;  // set for product builds
};

/// Validated, uniquely named hyperrings in a fixed order.
class Corpus {
 public:
  /// Throws std::invalid_argument on a duplicate id or a table that fails
  /// validate_krasner_hyperring.
  void add(CorpusEntry entry);

  const std::vector<CorpusEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const CorpusEntry* find(const std::string& id) const;

  /// Candidates that were offered but rejected, with the reason.
  const std::vector<std::string>& excluded() const { return excluded_; }
  void note_excluded(std::string line) { excluded_.push_back(std::move(line)); }

 private:
  std::vector<CorpusEntry> entries_;
  std::vector<std::string> excluded_;
};

struct CorpusOptions {
  int max_order = 12;
  std::optional<std::uint64_t> seed;  // adds random structures when set
  int random_count = 4;
  int random_order = 4;
  bool with_quotients = true;
};

/// Zn (2..8), H3, finite chains, exhaustive orders 2-3, products of pairs
/// from {Z2, Z3, Z4, H3}, Z2xZ2xZ2, Z2 times each exhaustive structure, and
/// the quotient of each of these by every nonzero proper hyperideal. Entries above max_order are dropped; tables that fail
/// validation land in excluded().
Corpus default_corpus(const CorpusOptions& opts = {});

/// Every `*.khr` file in `dir`, in filename order. Unparsable or invalid
/// files are listed in excluded(). Throws std::runtime_error when the
/// directory cannot be read.
Corpus load_corpus(const std::filesystem::path& dir);

// ---------------------------------------------------------------------------
// Theorem suite

enum class Expectation { Holds, Falsified, ReportOnly };

struct TheoremViolation {
  std::string ring_id;
  std::vector<ElementSubset> ideals;
  std::vector<WitnessItem> witness;
  std::string witness_text;  // e.g. "(a,1)", element names in witness order
  std::string message;
};

struct RingTally {
  std::string ring_id;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
};

struct TheoremReport {
  std::string theorem_id;
  std::string statement;
  Expectation expectation = Expectation::Holds;
  std::string note;
  std::size_t instances_checked = 0;
  std::size_t skipped_hypothesis_unmet = 0;
  std::size_t violation_count = 0;
  std::vector<TheoremViolation> violations;  // the first few, in corpus order
  std::vector<RingTally> per_ring;           // rings with at least one instance or skip

  /// Whether the outcome matches the expectation.
  bool ok() const;
  std::string status() const;
};

class UnknownTheoremId : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TheoremInfo {
  std::string id;
  std::string statement;
  Expectation expectation;
  std::string note;
};

/// Registered theorem ids with their statements, in evaluation order.
std::vector<TheoremInfo> theorem_catalog();

struct SuiteOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  std::size_t stored_violations = 64;
};

/// Evaluates the selected theorems (all when `filter` is empty) over every
/// corpus entry. Reports come back in catalog order and do not depend on
/// the thread count.
std::vector<TheoremReport> run_theorem_suite(const Corpus& corpus, const std::vector<std::string>& filter = {},
                                             const SuiteOptions& opts = {});

// ---------------------------------------------------------------------------
// Counterexample search

struct Counterexample {
  std::string property_id;
  std::string ring_id;
  std::vector<ElementSubset> ideals;
  std::vector<WitnessItem> witness;
  std::string message;
};

struct NotFound {
  std::string property_id;
  std::size_t rings_scanned = 0;
  std::size_t instances = 0;
};

class UnknownPropertyId : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> counterexample_properties();

/**
 * First counterexample in corpus order. Properties: "sum-of-r-is-r",
 * "product-of-r-is-r", "pr-implies-r", "example3-chain-ideal-is-r". The last
 * one inspects the finite chains chain(3..5, min) rather than the corpus,
 * since those tables are not Krasner hyperrings and never enter it.
 */
std::variant<Counterexample, NotFound> find_counterexample(const std::string& property_id, const Corpus& corpus);

}  // namespace khr

#endif
