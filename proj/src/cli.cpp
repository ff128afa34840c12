#include "khr/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "khr/dsl.hpp"
#include "khr/explorer.hpp"

namespace khr {

namespace {

// Raised for anything the user must fix in the invocation or the input.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

HyperringTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_hyperring(buf.str());
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

ElementSubset parse_element_set(const HyperringTable& ring, std::string text) {
  std::replace_if(text.begin(), text.end(), [](char ch) { return ch == '{' || ch == '}' || ch == ','; }, ' ');
  std::istringstream words(text);
  ElementSubset out;
  for (std::string w; words >> w;) {
    auto x = ring.find(w);
    if (!x) throw InputError("unknown element '" + w + "' (elements: " + format_subset(ring, ring.carrier()) + ")");
    out.insert(*x);
  }
  return out;
}

std::string verdict(const ClassificationResult& r) {
  if (r.verdict) return r.vacuous ? "YES (vacuous)" : "YES";
  return "NO, witness " + r.note;
}

std::string render_witness(const HyperringTable& ring, const std::vector<Element>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + ring.name_of(w[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------

int cmd_check(const std::string& path, std::ostream& out) {
  const auto ring = load_table(path);
  const auto rep = validate_krasner_hyperring(ring);
  const std::string counts = "(canonical hypergroup: " + std::to_string(rep.satisfied("C")) + "/" +
                             std::to_string(rep.total("C")) + " axioms; Krasner: " + std::to_string(rep.satisfied("K")) +
                             "/" + std::to_string(rep.total("K")) + ")";
  if (rep.passed()) {
    out << "PASS " << counts << "\n";
    return kExitOk;
  }
  out << "FAIL " << counts << "\n";
  for (const auto& v : rep.violations)
    out << "  " << v.axiom_id << ": witness " << render_witness(ring, v.witness) << ": " << v.message << " ("
        << v.count << (v.count == 1 ? " occurrence" : " occurrences") << ")\n";
  return kExitFailed;
}

void print_ideal(const HyperringTable& ring, ElementSubset n, const std::vector<PhiReducer>& phis,
                 const std::vector<ElementSubset>& all, std::ostream& out) {
  const auto h = IdealHandle::trusted(ring, n);
  out << "ideal " << format_subset(ring, n) << "\n";
  out << "  hyperideal: YES\n";
  if (!h.proper()) {
    out << "  proper: NO (the whole ring; the remaining classes require a proper hyperideal)\n";
    return;
  }
  out << "  proper: YES\n";
  const auto cl = classify_classical(h);
  out << "  prime: " << verdict(cl.prime) << "\n";
  out << "  maximal: " << verdict(cl.maximal) << "\n";
  out << "  primary: " << verdict(cl.primary) << "\n";
  out << "  r-hyperideal: " << verdict(is_r_hyperideal(h)) << "\n";
  out << "  pr-hyperideal: " << verdict(is_pr_hyperideal(h)) << "\n";
  const auto sp = classify_special(h);
  out << "  z0-hyperideal: " << verdict(sp.z0) << "\n";
  out << "  pure: " << verdict(sp.pure) << "\n";
  out << "  von Neumann regular: " << verdict(sp.vn_regular) << "\n";
  for (const auto& phi : phis) {
    const auto reduced = apply_phi(phi, h);
    out << "  " << phi.label() << "(N) = " << (reduced ? format_subset(ring, *reduced) : std::string("empty")) << "\n";
    for (auto c : all_phi_classes())
      out << "    " << phi.label() << "-" << to_string(c) << ": " << verdict(is_phi_class(h, phi, c, all)) << "\n";
  }
}

int cmd_classify(const std::string& path, const std::string& ideal_text, bool all_ideals,
                 const std::vector<std::string>& phi_texts, std::ostream& out, std::ostream& err) {
  const auto ring = load_table(path);
  if (auto rep = validate_krasner_hyperring(ring); !rep.passed())
    err << "warning: " << path << " is not a Krasner hyperring (" << rep.violations.front().axiom_id << ": "
        << rep.violations.front().message << "); classifying anyway\n";

  std::vector<PhiReducer> phis;
  for (const auto& t : phi_texts) {
    try {
      phis.push_back(PhiReducer::parse(t));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }

  const auto lattice = enumerate_hyperideals(ring);
  if (all_ideals) {
    out << "ring " << ring.name() << " (order " << ring.order() << ")\n";
    out << "hyperideals (" << lattice.size() << "):\n";
    for (auto n : lattice) out << "  " << format_subset(ring, n) << "\n";
    out << "covering relations:\n";
    for (auto a : lattice)
      for (auto b : lattice) {
        if (a == b || !a.subset_of(b)) continue;
        const bool covers = std::none_of(lattice.begin(), lattice.end(), [&](ElementSubset m) {
          return m != a && m != b && a.subset_of(m) && m.subset_of(b);
        });
        if (covers) out << "  " << format_subset(ring, a) << " < " << format_subset(ring, b) << "\n";
      }
    for (auto n : lattice) print_ideal(ring, n, phis, lattice, out);
    return kExitOk;
  }

  const auto n = parse_element_set(ring, ideal_text);
  if (auto test = is_hyperideal(ring, n); !test.verdict) {
    std::string w;
    for (const auto& item : test.witness) w += (w.empty() ? "" : ", ") + item.role + "=" + ring.name_of(item.element);
    throw InputError(format_subset(ring, n) + " is not a hyperideal: " + test.note + (w.empty() ? "" : " [" + w + "]"));
  }
  out << "ring " << ring.name() << " (order " << ring.order() << ")\n";
  print_ideal(ring, n, phis, lattice, out);
  return kExitOk;
}

std::string expectation_label(Expectation e) {
  switch (e) {
    case Expectation::Holds: return "holds";
    case Expectation::Falsified: return "falsified";
    case Expectation::ReportOnly: return "report";
  }
  return "?";
}

nlohmann::json witness_json(const TheoremViolation& v) {
  nlohmann::json w;
  w["ring_id"] = v.ring_id;
  w["elements"] = v.witness_text;
  nlohmann::json roles = nlohmann::json::array();
  for (const auto& item : v.witness) roles.push_back({{"role", item.role}, {"index", item.element}});
  w["roles"] = roles;
  nlohmann::json ideals = nlohmann::json::array();
  for (auto s : v.ideals) ideals.push_back(s.bits());
  w["ideal_masks"] = ideals;
  w["message"] = v.message;
  return w;
}

// Left-justified to `width` code points; theorem ids may contain UTF-8.
std::string pad(const std::string& s, std::size_t width) {
  const auto points = static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
  return points >= width ? s + " " : s + std::string(width - points, ' ');
}

void render_text(const std::string& corpus_label, const Corpus& corpus, const std::vector<TheoremReport>& reports,
                 std::size_t witness_limit, std::ostream& out) {
  out << "corpus: " << corpus_label << " (" << corpus.size() << " rings)\n\n";
  out << std::left << std::setw(20) << "theorem" << std::setw(11) << "expect" << std::right << std::setw(10)
      << "instances" << std::setw(9) << "skipped" << std::setw(12) << "violations" << "  status\n";
  for (const auto& r : reports)
    out << pad(r.theorem_id, 20) << std::left << std::setw(11) << expectation_label(r.expectation) << std::right
        << std::setw(10) << r.instances_checked << std::setw(9) << r.skipped_hypothesis_unmet << std::setw(12)
        << r.violation_count << "  " << r.status() << "\n";

  bool header = false;
  for (const auto& r : reports) {
    if (r.violations.empty()) continue;
    if (!header) out << "\nwitnesses:\n";
    header = true;
    const auto& first = r.violations.front();
    out << r.theorem_id << ": " << r.status() << "; witness " << first.ring_id
        << (first.witness_text.empty() ? "" : "," + first.witness_text) << "\n";
    for (std::size_t i = 0; i < std::min(witness_limit, r.violations.size()); ++i) {
      const auto& v = r.violations[i];
      out << "  " << v.ring_id << (v.witness_text.empty() ? "" : " " + v.witness_text) << ": " << v.message << "\n";
    }
    if (r.violation_count > witness_limit) out << "  ... " << r.violation_count - witness_limit << " more\n";
  }
  std::size_t unexpected = 0;
  for (const auto& r : reports)
    if (!r.ok()) ++unexpected;
  out << "\n" << reports.size() << " theorems, " << unexpected << " with unexpected outcomes\n";
}

void render_jsonlines(const std::vector<TheoremReport>& reports, std::ostream& out) {
  for (const auto& r : reports) {
    for (const auto& t : r.per_ring) {
      nlohmann::json rec;
      rec["theorem_id"] = r.theorem_id;
      rec["ring_id"] = t.ring_id;
      rec["verdict"] = t.violations ? "violated" : (t.checked ? "confirmed" : "skipped");
      rec["instances"] = t.checked;
      rec["skipped"] = t.skipped;
      rec["violations"] = t.violations;
      auto it = std::find_if(r.violations.begin(), r.violations.end(),
                             [&](const TheoremViolation& v) { return v.ring_id == t.ring_id; });
      rec["witness"] = it == r.violations.end() ? nlohmann::json(nullptr) : witness_json(*it);
      out << rec.dump() << "\n";
    }
    nlohmann::json sum;
    sum["theorem_id"] = r.theorem_id;
    sum["ring_id"] = "*";
    sum["verdict"] = r.status();
    sum["expectation"] = expectation_label(r.expectation);
    sum["instances"] = r.instances_checked;
    sum["skipped"] = r.skipped_hypothesis_unmet;
    sum["violations"] = r.violation_count;
    sum["witness"] = r.violations.empty() ? nlohmann::json(nullptr) : witness_json(r.violations.front());
    out << sum.dump() << "\n";
  }
}

struct VerifyArgs {
  std::string corpus = "default";
  std::string theorems = "all";
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  int max_order = 12;
  std::size_t witness_limit = 3;
  unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  Corpus corpus;
  if (a.corpus == "default") {
    CorpusOptions opts;
    opts.max_order = a.max_order;
    opts.seed = a.seed;
    corpus = default_corpus(opts);
  } else {
    try {
      corpus = load_corpus(a.corpus);
    } catch (const std::runtime_error& e) {
      throw InputError(e.what());
    }
    if (corpus.empty()) throw InputError("no valid .khr tables in " + a.corpus);
  }

  std::vector<std::string> ids;
  if (a.theorems != "all") {
    std::stringstream ss(a.theorems);
    for (std::string id; std::getline(ss, id, ',');)
      if (!id.empty()) ids.push_back(id);
  }
  std::vector<TheoremReport> reports;
  try {
    reports = run_theorem_suite(corpus, ids, {a.threads, 64});
  } catch (const UnknownTheoremId& e) {
    throw InputError(e.what());
  }

  if (a.format == "jsonlines")
    render_jsonlines(reports, out);
  else
    render_text(a.corpus, corpus, reports, a.witness_limit, out);
  const bool all_ok = std::all_of(reports.begin(), reports.end(), [](const TheoremReport& r) { return r.ok(); });
  return all_ok ? kExitOk : kExitFailed;
}

int cmd_enumerate(int order, const std::vector<std::uint64_t>& random, std::ostream& out) {
  std::vector<HyperringTable> found;
  try {
    if (random.empty())
      found = enumerate_hyperrings(order, Exhaustive{});
    else
      found = enumerate_hyperrings(order, RandomSample{random[0], static_cast<int>(random[1])});
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  out << "# " << found.size() << " hyperrings of order " << order << " up to isomorphism\n";
  for (const auto& t : found) out << "\n" << serialize_hyperring(t);
  return kExitOk;
}

int cmd_quotient(const std::string& path, const std::string& ideal_text, const std::string& emit, std::ostream& out) {
  const auto ring = load_table(path);
  if (auto rep = validate_krasner_hyperring(ring); !rep.passed())
    throw InputError(path + " is not a Krasner hyperring (" + rep.violations.front().axiom_id + ")");
  const auto n = parse_element_set(ring, ideal_text);
  QuotientPresentation q = [&] {
    try {
      return quotient(IdealHandle::checked(ring, n));
    } catch (const NotAHyperideal& e) {
      throw InputError(format_subset(ring, n) + " is not a hyperideal: " + e.detail().note);
    } catch (const IllFormedQuotient& e) {
      throw InputError(std::string("quotient is ill-formed: ") + e.what());
    }
  }();
  out << "classes:\n";
  for (std::size_t i = 0; i < q.coset_members.size(); ++i)
    out << "  " << q.ring.name_of(static_cast<Element>(i)) << " = " << format_subset(ring, q.coset_members[i]) << "\n";
  const std::string text = serialize_hyperring(q.ring);
  out << "\n" << text;
  if (!emit.empty()) {
    std::ofstream f(emit);
    if (!f) throw InputError("cannot write " + emit);
    f << text;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Krasner hyperring toolkit", "khr"};
  app.require_subcommand(1);

  std::string check_path;
  auto* check = app.add_subcommand("check", "validate a .khr table");
  check->add_option("file", check_path)->required();

  std::string cl_path, cl_ideal;
  bool cl_all = false;
  std::vector<std::string> cl_phi;
  auto* classify = app.add_subcommand("classify", "classify hyperideals of a .khr table");
  classify->add_option("file", cl_path)->required();
  auto* ideal_opt = classify->add_option("--ideal", cl_ideal, "element set such as {0,a}");
  auto* all_opt = classify->add_flag("--all", cl_all, "every hyperideal and the lattice");
  ideal_opt->excludes(all_opt);
  classify->add_option("--phi", cl_phi, "empty, 0, 1, omega or n:K (repeatable)");

  VerifyArgs va;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "run the theorem registry over a corpus");
  verify->add_option("--corpus", va.corpus, "default or a directory of .khr files");
  verify->add_option("--theorems", va.theorems, "all or comma-separated ids");
  verify->add_option("--format", va.format)->check(CLI::IsMember({"text", "jsonlines"}));
  auto* seed_opt = verify->add_option("--seed", seed, "add seeded random structures to the default corpus");
  verify->add_option("--max-order", va.max_order)->check(CLI::Range(2, 64));
  verify->add_option("--witness-limit", va.witness_limit);
  verify->add_option("--threads", va.threads);

  int en_order = 0;
  std::vector<std::uint64_t> en_random;
  auto* enumerate = app.add_subcommand("enumerate", "list hyperrings of a small order");
  enumerate->add_option("--order", en_order)->required();
  enumerate->add_option("--random", en_random, "SEED COUNT")->expected(2);

  std::string q_path, q_ideal, q_emit;
  auto* quot = app.add_subcommand("quotient", "quotient by a hyperideal");
  quot->add_option("file", q_path)->required();
  quot->add_option("--ideal", q_ideal)->required();
  quot->add_option("--emit", q_emit, "write the quotient table here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*check) return cmd_check(check_path, out);
    if (*classify) {
      if (!cl_all && ideal_opt->count() == 0) throw InputError("classify needs --ideal SET or --all");
      return cmd_classify(cl_path, cl_ideal, cl_all, cl_phi, out, err);
    }
    if (*verify) {
      if (seed_opt->count()) va.seed = seed;
      return cmd_verify(va, out);
    }
    if (*enumerate) return cmd_enumerate(en_order, en_random, out);
    if (*quot) return cmd_quotient(q_path, q_ideal, q_emit, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace khr
