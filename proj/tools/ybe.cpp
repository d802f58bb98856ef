// Command-line front end. Exit codes: 0 ok, 1 property violated or
// falsification, 2 usage or parse error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ybe/actions.hpp"
#include "ybe/enumerate.hpp"
#include "ybe/errors.hpp"
#include "ybe/group.hpp"
#include "ybe/io.hpp"
#include "ybe/istructure.hpp"
#include "ybe/linear.hpp"
#include "ybe/retract.hpp"
#include "ybe/rewrite.hpp"

using namespace ybe;
using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "ybe-report/1";

struct Options {
  bool json = false;
  std::uint64_t bound = 100'000;
  unsigned maxdeg = 0;
  std::uint64_t seed = 20240601;
  unsigned jobs = 1;
};

// Usage-level failure: exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void render(const Json& j, int indent, std::ostream& os) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      render(value, indent + 2, os);
    } else if (value.is_array()) {
      bool flat = std::none_of(value.begin(), value.end(),
                               [](const Json& e) { return e.is_structured(); });
      if (flat) {
        bool spaced = std::any_of(value.begin(), value.end(), [](const Json& e) {
          return e.is_string() && e.get<std::string>().find(' ') != std::string::npos;
        });
        os << pad << key << ":";
        const char* sep = " ";
        for (const auto& e : value) {
          os << sep << scalar(e);
          if (spaced) sep = "; ";
        }
        os << '\n';
      } else {
        os << pad << key << ":\n";
        for (const auto& e : value) {
          if (e.is_object()) {
            os << pad << "  -\n";
            render(e, indent + 4, os);
          } else {
            os << pad << "  - " << e.dump() << '\n';
          }
        }
      }
    } else {
      os << pad << key << ": " << scalar(value) << '\n';
    }
  }
}

void emit(const Options& o, Json report) {
  if (o.json) {
    Json out{{"schema", kSchema}};
    for (auto& [k, v] : report.items()) out[k] = v;
    std::cout << out.dump(2) << '\n';
  } else {
    render(report, 0, std::cout);
  }
}

SolutionDocument load(const std::string& path) {
  if (!std::filesystem::exists(path)) throw UsageError("no such file: " + path);
  try {
    return load_solution_file(path);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string names_of(const SolutionMap& s, const std::vector<Index>& pts) {
  std::string out;
  for (Index x : pts) out += (out.empty() ? "" : " ") + s.name(x);
  return out;
}

std::string set_text(const SolutionMap& s, const std::vector<Index>& pts) {
  std::string out;
  for (Index x : pts) out += (out.empty() ? "{" : ", ") + s.name(x);
  return out + "}";
}

std::string rule_text(const Presentation& p, const Rule& r) {
  const auto& nm = p.names();
  std::string out = nm[r.lhs.first] + " " + nm[r.lhs.second] + " -> ";
  if (r.coeff != 1) out += to_string(r.coeff) + " ";
  return out + nm[r.rhs.first] + " " + nm[r.rhs.second];
}

// Certified presentation under the first ordering find_skew_ordering
// accepts, with coefficients from the document's coef lines.
std::optional<Presentation> certified(const SolutionDocument& doc, std::string* strategy = nullptr) {
  auto search = find_skew_ordering(doc.solution);
  if (strategy) *strategy = search.strategy;
  if (!search.ordering) return std::nullopt;
  Presentation p = relations_of(doc.solution, *search.ordering);
  if (doc.coefficients.empty()) return p;
  BinomialLinearMap lift(doc.solution, doc.coefficients);
  std::vector<Rational> coeffs;
  for (const Rule& r : p.rules()) coeffs.push_back(lift.coeff(r.lhs));
  return p.with_coefficients(coeffs);
}

Json predicates(const SolutionMap& s, const PropertyReport& rep) {
  Json j;
  j["n"] = s.size();
  j["involutive"] = rep.involutive;
  j["left_nondegenerate"] = rep.left_nondegenerate;
  j["right_nondegenerate"] = rep.right_nondegenerate;
  j["square_free"] = rep.square_free;
  j["braided"] = rep.braided;
  j["solution"] = rep.is_solution();
  j["r_order"] = rep.r_order ? Json(*rep.r_order) : Json(nullptr);
  if (rep.involutive_witness) j["involutive_witness"] = format_word(s, {rep.involutive_witness->first, rep.involutive_witness->second});
  if (rep.square_free_witness) j["square_free_witness"] = s.name(*rep.square_free_witness);
  if (rep.braid_witness) j["braid_witness"] = format_word(s, *rep.braid_witness);
  return j;
}

int cmd_verify(const Options& o, const std::string& file) {
  auto doc = load(file);
  auto rep = classify(doc.solution);
  emit(o, predicates(doc.solution, rep));
  return rep.is_solution() ? 0 : 1;
}

int cmd_analyze(const Options& o, const std::string& file) {
  auto doc = load(file);
  const SolutionMap& s = doc.solution;
  auto rep = classify(s);
  Json j = predicates(s, rep);
  if (!rep.nondegenerate()) {
    emit(o, j);
    return 1;
  }
  auto actions = compute_actions(s);
  Json acts = Json::array();
  bool right_is_inverse = true;
  for (Index x = 0; x < s.size(); ++x) {
    bool inv = actions.right[x] == actions.left[x].inverse();
    right_is_inverse = right_is_inverse && inv;
    acts.push_back({{"x", s.name(x)},
                    {"L", actions.left[x].to_string(s.names())},
                    {"R", actions.right[x].to_string(s.names())},
                    {"order", actions.orders[x]},
                    {"R_is_L_inverse", inv}});
  }
  j["actions"] = acts;
  j["M"] = actions.cyclic_degree;
  j["R_is_L_inverse"] = right_is_inverse;
  auto cyc = check_cyclic_conditions(s);
  j["weak_cyclic"] = cyc.weak;
  j["strong_cyclic"] = cyc.strong;
  if (cyc.weak_witness) j["weak_cyclic_witness"] = *cyc.weak_witness;
  if (cyc.strong_witness) j["strong_cyclic_witness"] = *cyc.strong_witness;
  if (rep.is_square_free_solution()) {
    Json orbits = Json::array();
    for (const auto& orb : orbits_left(s)) orbits.push_back(set_text(s, orb));
    j["left_orbits"] = orbits;
    auto dec = decomposability_criteria(s);
    j["decomposable"] = orbits.size() >= 2;
    j["gcd_criterion"] = dec.gcd_criterion;
    j["cycle_criterion"] = dec.cycle_criterion;
    auto level = multipermutation_level(s);
    j["multipermutation_level"] = level.level ? Json(*level.level) : Json(nullptr);
  }
  emit(o, j);
  return 0;
}

int cmd_order(const Options& o, const std::string& file) {
  auto doc = load(file);
  auto search = find_skew_ordering(doc.solution);
  Json j;
  j["strategy"] = search.strategy;
  j["trace"] = search.trace;
  if (!search.ordering) {
    j["ordering"] = nullptr;
    emit(o, j);
    return 1;
  }
  j["ordering"] = names_of(doc.solution, *search.ordering);
  auto p = relations_of(doc.solution, *search.ordering);
  Json rules = Json::array();
  for (const Rule& r : p.rules()) rules.push_back(rule_text(p, r));
  j["rules"] = rules;
  j["skew"] = p.is_skew();
  j["groebner"] = p.is_groebner();
  j["overlaps_checked"] = p.groebner().overlaps_checked;
  emit(o, j);
  return 0;
}

int cmd_nf(const Options& o, const std::string& file, const std::string& word) {
  auto doc = load(file);
  auto p = certified(doc);
  if (!p) throw ContractViolation("no certified skew ordering for " + file);
  Word w;
  try {
    w = parse_word(doc.solution, word);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  auto nf = normal_form(*p, w);
  std::string text = format_word(doc.solution, ordered_word(*p, nf.exponents));
  if (nf.coeff != 1) text = to_string(nf.coeff) + " " + text;
  if (o.json) {
    emit(o, {{"input", format_word(doc.solution, w)},
             {"normal_form", format_word(doc.solution, ordered_word(*p, nf.exponents))},
             {"monomial", format_monomial(*p, nf.exponents)},
             {"coefficient", to_string(nf.coeff)}});
  } else {
    std::cout << text << '\n';
  }
  return 0;
}

int cmd_hilbert(const Options& o, const std::string& file) {
  auto doc = load(file);
  auto p = certified(doc);
  if (!p) throw ContractViolation("no certified skew ordering for " + file);
  const unsigned D = o.maxdeg ? o.maxdeg : 6;
  const std::size_t n = p->size();
  Json rows = Json::array();
  bool ok = true;
  for (unsigned d = 0; d <= D; ++d) {
    auto count = count_normal_monomials(*p, d);
    auto expected = binomial(n + d - 1, d);
    Json row{{"degree", d}, {"normal_monomials", count}, {"expected", expected}};
    double words = std::pow(static_cast<double>(n), d);
    if (words <= 2e5) {
      auto ex = count_normal_forms_exhaustive(*p, d);
      row["exhaustive"] = ex;
      ok = ok && ex == expected;
    }
    ok = ok && count == expected;
    rows.push_back(row);
  }
  emit(o, {{"n", n}, {"degrees", rows}, {"matches", ok}});
  return ok ? 0 : 1;
}

int cmd_istructure(const Options& o, const std::string& file, const std::vector<std::string>& monos) {
  auto doc = load(file);
  auto p = certified(doc);
  if (!p) throw ContractViolation("no certified skew ordering for " + file);
  const unsigned D = o.maxdeg ? o.maxdeg : 4;
  unsigned need = D;
  std::vector<ExponentVector> asked;
  for (const auto& m : monos) {
    try {
      asked.push_back(parse_u_monomial(m, p->size()));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    need = std::max(need, degree(asked.back()));
  }
  IStructure is(doc.solution, *p, need);
  auto audit = audit_istructure(is, D);
  Json j{{"ordering", names_of(doc.solution, p->ordering())}, {"audit_degree", D}};
  j["set_equality"] = audit.set_equality;
  j["exchange"] = audit.exchange;
  j["bijective"] = audit.bijective;
  j["peeling_independent"] = audit.peeling_independent;
  j["preimage_consistent"] = audit.preimage_consistent;
  if (audit.witness) j["witness"] = *audit.witness;
  Json vals = Json::array();
  for (std::size_t k = 0; k < asked.size(); ++k) {
    vals.push_back({{"u", monos[k]},
                    {"v", format_monomial(*p, is.left(asked[k]))},
                    {"v1", format_monomial(*p, is.right(asked[k]))}});
  }
  if (!vals.empty()) j["values"] = vals;
  emit(o, j);
  return audit.ok() ? 0 : 1;
}

int cmd_group(const Options& o, const std::string& file) {
  auto doc = load(file);
  const SolutionMap& s = doc.solution;
  if (!classify(s).is_square_free_solution()) throw ContractViolation("group needs a square-free solution");
  auto p = certified(doc);
  Json j;
  auto actions = compute_actions(s);
  j["M"] = actions.cyclic_degree;
  bool ok = true;
  try {
    auto gl = permutation_group_L(s, std::max<std::uint64_t>(o.bound, 1'000'000));
    j["G_L_order"] = gl.order();
    auto series = derived_series(gl);
    Json orders = Json::array();
    for (const auto& g : series) orders.push_back(g.order());
    j["derived_series"] = orders;
    j["solvable"] = is_solvable(gl);
  } catch (const BoundExceeded& e) {
    j["G_L_order"] = std::string("exceeds bound: ") + e.what();
  }
  if (p) {
    try {
      QuotientGroup q(s, *p, o.bound);
      auto ax = verify_group_axioms(q, o.seed);
      j["quotient"] = {{"order", q.order()},
                       {"closure", ax.closure},
                       {"identity", ax.identity},
                       {"inverses", ax.inverses},
                       {"associativity", ax.associativity},
                       {"exhaustive_associativity", ax.exhaustive_associativity},
                       {"triples_checked", ax.triples_checked},
                       {"powers_trivial", ax.powers_trivial}};
      if (ax.witness) j["quotient"]["witness"] = *ax.witness;
      ok = ok && ax.ok();
    } catch (const BoundExceeded& e) {
      j["quotient"] = std::string("skipped: ") + e.what();
    }
  }
  auto syl = sylow_decomposition(s, p ? &*p : nullptr, o.bound);
  Json pieces = Json::array();
  for (const auto& pc : syl.pieces) {
    Json row{{"prime", pc.prime}, {"alpha", pc.alpha}, {"q", pc.q}, {"order", pc.order},
             {"prime_power", pc.prime_power}, {"normal", pc.normal}};
    if (pc.expected_order) row["expected_order"] = *pc.expected_order;
    pieces.push_back(row);
  }
  j["sylow"] = {{"level", syl.level},
                {"group_order", syl.group_order},
                {"pieces", pieces},
                {"orders_ok", syl.orders_ok},
                {"coprime", syl.coprime},
                {"pairwise_commute", syl.pairwise_commute},
                {"covers", syl.covers}};
  if (!syl.notice.empty()) j["sylow"]["notice"] = syl.notice;
  ok = ok && syl.ok();
  auto dec = decomposability_criteria(s);
  j["decomposability"] = {{"orbits", dec.orbit_count},
                          {"gcd_criterion", dec.gcd_criterion},
                          {"cycle_criterion", dec.cycle_criterion},
                          {"consistent", dec.consistent}};
  ok = ok && dec.consistent;
  emit(o, j);
  return ok ? 0 : 1;
}

int cmd_retract(const Options& o, const std::string& file) {
  auto doc = load(file);
  SolutionMap cur = doc.solution;
  Json steps = Json::array();
  while (cur.size() > 1) {
    auto st = retract(cur);
    Json classes = Json::array();
    for (const auto& c : st.classes) classes.push_back(set_text(cur, c));
    steps.push_back({{"size", cur.size()}, {"classes", classes}});
    if (st.irretractable()) break;
    cur = st.induced;
  }
  auto level = multipermutation_level(doc.solution);
  Json j{{"steps", steps}, {"sizes", level.sizes}};
  j["level"] = level.level ? Json(*level.level) : Json(nullptr);
  if (level.irretractable_at) j["irretractable_at"] = *level.irretractable_at;
  emit(o, j);
  return 0;
}

int cmd_union(const Options& o, const std::string& fx, const std::string& fy, const std::string& fc) {
  auto x = load(fx), y = load(fy);
  if (!std::filesystem::exists(fc)) throw UsageError("no such file: " + fc);
  CrossMaps cross;
  try {
    cross = parse_cross_maps(read_file(fc), x.solution.size(), y.solution.size());
  } catch (const ParseError& e) {
    throw UsageError(fc + ": " + e.what());
  }
  auto u = assemble_union({x.solution, y.solution, cross});
  Json j = predicates(u.z, u.report);
  bool ok = u.report.is_solution();
  if (ok && u.report.square_free) {
    std::vector<Index> block(x.solution.size());
    std::iota(block.begin(), block.end(), 0);
    auto tw = is_generalized_twisted_union(u.z, block);
    j["twisted"] = tw.twisted;
    j["generalized_twisted"] = tw.generalized;
    j["equalities"] = tw.equalities;
    if (tw.witness) j["twisted_union_witness"] = *tw.witness;
    if (!tw.formulations_agree()) {
      throw Falsification("the two formulations of a generalized twisted union disagree",
                          {tw.witness.value_or("")});
    }
  }
  emit(o, j);
  return ok ? 0 : 1;
}

int cmd_linear(const Options& o, const std::string& file, unsigned trials) {
  auto doc = load(file);
  BinomialLinearMap R(doc.solution, doc.coefficients);
  const SolutionMap& s = doc.solution;
  auto ybe = check_linear_ybe(R);
  auto q = check_qybe_unitarity(R);
  Json j{{"linear_ybe", ybe.ok}, {"qybe", q.qybe}, {"unitarity", q.unitarity}};
  if (ybe.witness) j["ybe_witness"] = format_triple(s, *ybe.witness);
  if (q.qybe_witness) j["qybe_witness"] = format_triple(s, *q.qybe_witness);
  if (q.unitarity_witness) {
    j["unitarity_witness"] = format_word(s, {q.unitarity_witness->first, q.unitarity_witness->second});
    j["unitarity_image"] = to_string(q.unitarity_image.coeff) + " " +
                           format_word(s, {q.unitarity_image.basis.first, q.unitarity_image.basis.second});
  }
  bool agree = true;
  auto p = certified(doc);
  if (p) {
    auto lemma = skew_lemma_roundtrip(*p);
    j["coefficient_groebner"] = lemma.groebner.ok;
    j["lemma_agrees"] = lemma.agree;
    if (!lemma.agree) throw Falsification("linear YBE and coefficient Groebner disagree", lemma.trace);
    std::mt19937_64 rng(o.seed);
    std::size_t both_true = 0, both_false = 0;
    for (unsigned t = 0; t < trials; ++t) {
      auto pt = p->with_coefficients(random_coefficients(p->rules().size(), rng));
      auto r = skew_lemma_roundtrip(pt);
      if (!r.agree) throw Falsification("linear YBE and coefficient Groebner disagree", r.trace);
      (r.ybe.ok ? both_true : both_false)++;
    }
    j["random_trials"] = {{"seed", o.seed}, {"trials", trials}, {"both_true", both_true}, {"both_false", both_false}};
    agree = lemma.agree;
  }
  emit(o, j);
  return ybe.ok && q.qybe && q.unitarity && agree ? 0 : 1;
}

Json entry_json(const CatalogEntry& e) {
  const SolutionMap& s = e.solution;
  Json j{{"relations", e.relations}, {"M", e.M}, {"orbits", e.orbit_count}};
  j["level"] = e.level ? Json(*e.level) : Json(nullptr);
  j["ordering"] = e.ordering ? Json(names_of(s, *e.ordering)) : Json(nullptr);
  j["ordering_strategy"] = e.ordering_strategy;
  j["G_L_order"] = e.group_order;
  j["decomposable"] = e.decomposable();
  j["retractable"] = e.retractable();
  Json L = Json::array();
  auto actions = compute_actions(s);
  for (Index x = 0; x < s.size(); ++x) L.push_back(actions.left[x].to_string(s.names()));
  j["L"] = L;
  return j;
}

int cmd_enumerate(const Options& o, std::size_t n, const std::string& out_dir) {
  if (n < 1 || n > 5) throw UsageError("-n must be between 1 and 5");
  auto entries = survey(n, o.jobs);
  std::size_t nontrivial = 0;
  bool ok = true;
  Json rows = Json::array();
  for (const auto& e : entries) {
    nontrivial += !e.trivial();
    ok = ok && e.ordering && (n < 2 || e.decomposable());
    rows.push_back(entry_json(e));
  }
  Json j{{"n", n}, {"classes", entries.size()}, {"nontrivial", nontrivial}, {"entries", rows}};
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t k = 0; k < entries.size(); ++k) {
      std::ofstream(std::filesystem::path(out_dir) / ("n" + std::to_string(n) + "_" + std::to_string(k + 1) + ".ybe"))
          << serialize(entries[k].solution);
    }
    std::ofstream(std::filesystem::path(out_dir) / "survey.json") << j.dump(2) << '\n';
  }
  if (!o.json) std::cout << entries.size() << " classes (" << nontrivial << " nontrivial)\n";
  emit(o, j);
  return ok ? 0 : 1;
}

int cmd_conjecture(const Options& o, std::size_t max_n) {
  if (max_n < 2 || max_n > 5) throw UsageError("-n must be between 2 and 5");
  Json rows = Json::array();
  for (std::size_t n = 2; n <= max_n; ++n) {
    auto a = audit_retractability(n, o.jobs);
    Json row{{"n", n}, {"total", a.total}, {"retractable", a.retractable},
             {"counterexamples", a.counterexamples.size()}};
    if (!a.counterexamples.empty()) row["first_counterexample"] = serialize(a.counterexamples.front());
    rows.push_back(row);
  }
  emit(o, {{"conjecture", "every square-free solution with n >= 2 is retractable"}, {"audit", rows}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ybe: square-free set-theoretic solutions of the Yang-Baxter equation"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--bound", o.bound, "size bound for quotient groups and closures")->capture_default_str();
  app.add_option("--maxdeg", o.maxdeg, "maximal degree for hilbert and istructure");
  app.add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--jobs", o.jobs, "worker threads for enumeration")->capture_default_str();

  std::string file, file2, file3, word;
  std::vector<std::string> monos;
  std::size_t n = 0;
  unsigned trials = 100;
  std::string out_dir;
  std::function<int()> run;

  auto one_file = [&](const char* name, const char* help, int (*fn)(const Options&, const std::string&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "solution file")->required();
    sub->callback([&, fn] { run = [&, fn] { return fn(o, file); }; });
  };
  one_file("verify", "check the basic predicates", cmd_verify);
  one_file("analyze", "actions, cyclic conditions, orbits and level", cmd_analyze);
  one_file("order", "find a skew-polynomial ordering", cmd_order);
  one_file("hilbert", "count normal monomials per degree", cmd_hilbert);
  one_file("group", "G_L, the finite quotient group and its Sylow pieces", cmd_group);
  one_file("retract", "retraction tower and multipermutation level", cmd_retract);

  auto* nf = app.add_subcommand("nf", "normal form of a word");
  nf->add_option("file", file)->required();
  nf->add_option("word", word, "e.g. \"x3 x2 x1\"")->required();
  nf->callback([&] { run = [&] { return cmd_nf(o, file, word); }; });

  auto* ist = app.add_subcommand("istructure", "audit the I-structures and evaluate v, v1");
  ist->add_option("file", file)->required();
  ist->add_option("monomials", monos, "monomials in u, e.g. \"u2 u4\"");
  ist->callback([&] { run = [&] { return cmd_istructure(o, file, monos); }; });

  auto* uni = app.add_subcommand("union", "assemble a union from two solutions and cross maps");
  uni->add_option("xfile", file)->required();
  uni->add_option("yfile", file2)->required();
  uni->add_option("crossfile", file3)->required();
  uni->callback([&] { run = [&] { return cmd_union(o, file, file2, file3); }; });

  auto* lin = app.add_subcommand("linear", "binomial R-matrix checks");
  lin->add_option("file", file)->required();
  lin->add_option("--trials", trials, "random coefficient assignments")->capture_default_str();
  lin->callback([&] { run = [&] { return cmd_linear(o, file, trials); }; });

  auto* en = app.add_subcommand("enumerate", "square-free solutions up to isomorphism");
  en->add_option("-n", n, "size")->required();
  en->add_option("--out", out_dir, "write one file per class and survey.json");
  en->callback([&] { run = [&] { return cmd_enumerate(o, n, out_dir); }; });

  auto* conj = app.add_subcommand("conjecture", "retractability audit for 2 <= size <= n");
  conj->add_option("-n", n, "largest size")->required();
  conj->callback([&] { run = [&] { return cmd_conjecture(o, n); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Falsification& e) {
    Json j{{"schema", kSchema}, {"falsification", e.what()}, {"trace", e.trace()}};
    std::cout << j.dump(2) << '\n';
    return 1;
  } catch (const ContractViolation& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return 1;
  }
}
