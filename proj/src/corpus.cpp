#include <algorithm>
#include <fstream>
#include <sstream>

#include "khr/dsl.hpp"
#include "khr/explorer.hpp"

namespace khr {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Builder: return "builder";
    case Provenance::Exhaustive: return "exhaustive";
    case Provenance::File: return "file";
    case Provenance::Random: return "random";
    case Provenance::Quotient: return "quotient";
  }
  return "?";
}

void Corpus::add(CorpusEntry entry) {
  if (find(entry.id)) throw std::invalid_argument("duplicate corpus id " + entry.id);
  if (auto rep = validate_krasner_hyperring(entry.ring); !rep.passed())
    throw std::invalid_argument(entry.id + " fails " + rep.violations.front().axiom_id + ": " +
                                rep.violations.front().message);
  entries_.push_back(std::move(entry));
}

const CorpusEntry* Corpus::find(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

namespace {

void offer(Corpus& corpus, CorpusEntry entry, int max_order) {
  if (entry.ring.order() > max_order || corpus.find(entry.id)) return;
  try {
    corpus.add(std::move(entry));
  } catch (const std::invalid_argument& e) {
    corpus.note_excluded(e.what());
  }
}

CorpusEntry product_entry(const HyperringTable& l, const HyperringTable& r) {
  HyperringTable p = build_product(l, r);
  std::string id = p.name();
  return {std::move(id), std::move(p), Provenance::Builder, std::make_shared<ProductFactors>(ProductFactors{l, r})};
}

}  // namespace

Corpus default_corpus(const CorpusOptions& opts) {
  Corpus corpus;
  for (int n = 2; n <= 8; ++n) {
    auto z = build_classical_zn(n);
    std::string id = z.name();
    offer(corpus, {std::move(id), std::move(z), Provenance::Builder, nullptr}, opts.max_order);
  }
  offer(corpus, {"H3", build_h3(), Provenance::Builder, nullptr}, opts.max_order);
  for (int n = 3; n <= 5; ++n) {
    auto c = build_chain(n, ChainMulRule::Min);
    std::string id = c.name();
    offer(corpus, {std::move(id), std::move(c), Provenance::Builder, nullptr}, opts.max_order);
  }
  std::vector<HyperringTable> exhaustive;
  for (int n = 2; n <= std::min(3, opts.max_order); ++n)
    for (auto& t : enumerate_hyperrings(n, Exhaustive{})) {
      exhaustive.push_back(t);
      std::string id = t.name();
      offer(corpus, {std::move(id), std::move(t), Provenance::Exhaustive, nullptr}, opts.max_order);
    }

  // Products, for enough (ring, ideal) pairs and for projections/injections.
  const std::vector<HyperringTable> small{build_classical_zn(2), build_classical_zn(3), build_classical_zn(4), build_h3()};
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i; j < small.size(); ++j) offer(corpus, product_entry(small[i], small[j]), opts.max_order);
  offer(corpus, product_entry(build_product(small[0], small[0]), small[0]), opts.max_order);
  for (const auto& t : exhaustive) offer(corpus, product_entry(small[0], t), opts.max_order);

  if (opts.seed && opts.random_order <= opts.max_order)
    for (auto& t : enumerate_hyperrings(opts.random_order, RandomSample{*opts.seed, opts.random_count})) {
      std::string id = t.name();
      offer(corpus, {std::move(id), std::move(t), Provenance::Random, nullptr}, opts.max_order);
    }

  if (opts.with_quotients) {
    const std::size_t base = corpus.size();
    for (std::size_t i = 0; i < base; ++i) {
      const HyperringTable ring = corpus.entries()[i].ring;
      const std::string id = corpus.entries()[i].id;
      for (ElementSubset n_set : enumerate_hyperideals(ring)) {
        if (n_set.size() == 1 || n_set == ring.carrier()) continue;
        try {
          auto q = quotient(IdealHandle::trusted(ring, n_set));
          offer(corpus, {id + "/" + format_subset(ring, n_set), q.ring, Provenance::Quotient, nullptr},
                opts.max_order);
        } catch (const IllFormedQuotient& e) {
          corpus.note_excluded(id + "/" + format_subset(ring, n_set) + ": " + e.what());
        }
      }
    }
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw std::runtime_error("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir, ec))
    if (e.is_regular_file() && e.path().extension() == ".khr") files.push_back(e.path());
  if (ec) throw std::runtime_error("cannot read " + dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());

  Corpus corpus;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string id = f.stem().string();
    try {
      offer(corpus, {id, parse_hyperring(buf.str()), Provenance::File, nullptr}, kMaxOrder);
    } catch (const ParseError& e) {
      corpus.note_excluded(id + ": " + e.what());
    }
  }
  return corpus;
}

}  // namespace khr
