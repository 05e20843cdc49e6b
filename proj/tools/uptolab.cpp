// Command-line front end: equivalence checking, flow analysis, lattice law
// checking and the example gallery.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "uptolab/uptolab.hpp"

namespace fs = std::filesystem;
using namespace uptolab;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

struct Globals {
  std::uint64_t seed = 0;
  bool json = false;
};

void emit(const Report& r, const Globals& g) {
  if (g.json)
    std::cout << r.json().dump(2) << "\n";
  else
    std::cout << r.text();
}

// ---------------------------------------------------------------------------

struct EquivArgs {
  std::string file, x, y, algo = "hk";
  bool check_invariant = false, trace = false;
};

int cmd_equiv(const EquivArgs& a, const Globals& g) {
  Dfa dfa = load_dfa(a.file);
  State x = dfa.state(a.x), y = dfa.state(a.y);
  EquivAlgo algo = a.algo == "naive"        ? EquivAlgo::naive
                   : a.algo == "naive-upto" ? EquivAlgo::naive_upto
                   : a.algo == "hk"         ? EquivAlgo::hk
                                            : EquivAlgo::oracle;
  auto tr = run_equiv(dfa, x, y, algo, a.check_invariant);
  bool oracle = lang_equiv_oracle(dfa, x, y);
  if (oracle != tr.verdict) throw std::logic_error("algorithm disagrees with the product-automaton oracle");

  Report r;
  r.add("algorithm", std::string(algo_name(algo)));
  r.add("pair", "(" + a.x + "," + a.y + ")");
  r.add("states", dfa.states());
  std::string counter = algo == EquivAlgo::hk ? "unions" : "visited";
  r.add("result", std::string(tr.verdict ? "equivalent" : "not equivalent") + ", " + counter + "=" +
                      std::to_string(tr.visited));
  r.add("equivalent", tr.verdict);
  if (algo != EquivAlgo::oracle) {
    r.add(counter, tr.visited);
    r.add("extracted", tr.extracted);
  }
  if (a.trace && algo != EquivAlgo::oracle) {
    if (tr.partition)
      r.add("partition", format_partition(dfa, *tr.partition));
    else
      r.add("relation", format_relation(dfa, tr.relation));
  }
  if (a.check_invariant && algo == EquivAlgo::hk) {
    r.add("invariant_checks", tr.invariant_checks);
    r.add("invariant_held", tr.invariant_held);
  }
  emit(r, g);
  if (a.check_invariant && algo == EquivAlgo::hk && !tr.invariant_held) return kFails;
  return tr.verdict ? kHolds : kFails;
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  std::string file, domain = "concrete", query;
  std::size_t cap = kDefaultFlowCap;
  bool trace = false;
};

template <class D>
int analyze_in(const FlowSystem& sys, const AnalyzeArgs& a, const Globals& g) {
  auto sol = solve_flow<D>(sys, a.cap);
  Report r;
  r.add("domain", std::string(D::name));
  r.add("iterations", sol.iterations);
  for (std::size_t v = 0; v < sys.size(); ++v) {
    r.add(sys.name(v), D::str(sol.values[v]));
    if (a.trace) {
      Report::Json steps = Report::Json::array();
      for (const auto& val : sol.traces[v]) steps.push_back(D::str(val));
      r.add(sys.name(v) + ".trace", steps);
    }
  }
  int rc = kHolds;
  if (!a.query.empty()) {
    auto q = parse_query(a.query);
    IntPred value = D::concretize(sol.values[sys.index(q.var)]);
    bool holds = value.subset_of(q.bound);
    r.add("query", q.var + " subset " + q.bound.str());
    r.add("holds", holds);
    rc = holds ? kHolds : kFails;
  }
  emit(r, g);
  return rc;
}

int cmd_analyze(const AnalyzeArgs& a, const Globals& g) {
  FlowSystem sys = load_flow(a.file);
  if (!a.query.empty()) sys.index(parse_query(a.query).var);
  return a.domain == "sign" ? analyze_in<SignDomain>(sys, a, g) : analyze_in<ConcreteDomain>(sys, a, g);
}

// ---------------------------------------------------------------------------

struct LatticeArgs {
  std::string file, closure, map, i, f;
};

int cmd_lattice_check(const LatticeArgs& a, const Globals& g) {
  LatticeFile lf = load_lattice(a.file);
  const auto& Lp = lf.lattice;
  const auto& L = *Lp;
  auto elem = [&](const std::string& n) {
    auto e = L.find(n);
    if (!e) throw Error(Errc::Parse, a.file + ": unknown element '" + n + "'");
    return *e;
  };
  ClosureOperator cl = closure_from_map(lf.map(a.closure));
  MonotoneMap base = lf.map(a.map);
  MonotoneMap b = a.i.empty() ? base : pointwise_join(constant_map(Lp, elem(a.i)), base);
  std::string bname = a.i.empty() ? a.map : a.i + " join " + a.map;

  Report r;
  r.add("lattice", a.file);
  r.add("elements", L.size());
  r.add("closure", a.closure);
  r.add("closure_fixed_points", format_set(L, cl.pre_fixed()));
  r.add("transformer", bname);
  auto lr = law_report(cl, b);
  r.add("compatible", lr.compatible);
  r.add("fully_complete", lr.fully_complete);
  r.add("sound", lr.sound);
  r.add("complete", lr.complete);
  r.add("em_lifting_exists", lr.em_lifting_exists);
  r.add("kl_extension_exists", lr.kl_extension_exists);
  Elem mu = lfp(b);
  r.add("lfp", L.name(mu));
  r.add("closure_of_lfp", L.name(cl(mu)));
  r.add("lfp_of_closure_after_transformer", L.name(lfp(compose(cl.map(), b))));
  auto comp = companion(b);
  r.add("companion_chain", format_set(L, comp.chain));
  r.add("companion_fixed_points", format_set(L, comp.closure.pre_fixed()));

  int rc = lr.complete ? kHolds : kFails;
  if (!a.f.empty()) {
    Elem f = elem(a.f);
    std::optional<AdjointPair> pair;
    try {
      pair = adjoint_of(base, AdjointSide::right_of);
    } catch (const Error& e) {
      if (e.code() != Errc::NoAdjoint) throw;
    }
    if (pair) {
      auto fc = f_companion(pair->right, f);
      r.add("right_adjoint", format_table(pair->right));
      r.add("f_companion_generators", format_set(L, fc.generators));
      r.add("f_companion_fixed_points", format_set(L, fc.sublattice));
      r.add("closure_below_f_companion", pointwise_leq(cl.map(), fc.closure.map()));
    } else {
      r.add("right_adjoint", "none");
    }
    bool local = local_completeness(cl, b, f);
    r.add("locally_complete", local);
    r.add("result", std::string(local ? "locally complete" : "locally incomplete") + " at f=" + a.f);
    rc = local ? kHolds : kFails;
  } else {
    r.add("result", lr.complete ? "complete" : "incomplete");
  }
  emit(r, g);
  return rc;
}

// ---------------------------------------------------------------------------

struct GalleryArgs {
  std::string filter, golden, write_golden;
};

std::string golden_name(const GalleryArgs& a, const Globals& g) {
  std::string stem = a.filter.empty() ? "gallery" : "gallery-" + a.filter;
  if (g.seed != 0) stem += "-seed" + std::to_string(g.seed);
  return stem + (g.json ? ".json" : ".txt");
}

int cmd_gallery(const GalleryArgs& a, const Globals& g) {
  std::optional<std::string> filter;
  if (!a.filter.empty()) filter = a.filter;
  auto results = run_gallery(filter, g.seed);
  std::string out = g.json ? gallery_json(results).dump(2) + "\n" : render_gallery(results);
  std::cout << out;
  bool ok = true;
  for (const auto& fr : results) ok = ok && fr.pass();

  if (!a.write_golden.empty()) {
    fs::create_directories(a.write_golden);
    std::ofstream(fs::path(a.write_golden) / golden_name(a, g), std::ios::binary) << out;
  }
  if (!a.golden.empty()) {
    fs::path path = fs::path(a.golden) / golden_name(a, g);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::Parse, "missing golden file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    if (ss.str() != out) {
      std::cerr << "golden mismatch: " << path.string() << "\n";
      return kFails;
    }
    std::cerr << "golden match: " << path.string() << "\n";
  }
  return ok ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uptolab: up-to techniques and abstract interpretation on finite structures"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed for randomized sampling")->capture_default_str();
  app.add_flag("--json", g.json, "structured output");

  EquivArgs ea;
  auto* equiv = app.add_subcommand("equiv", "language equivalence of two DFA states");
  equiv->add_option("dfa", ea.file, "DFA file")->required()->check(CLI::ExistingFile);
  equiv->add_option("x", ea.x, "first state")->required();
  equiv->add_option("y", ea.y, "second state")->required();
  equiv->add_option("--algo", ea.algo, "algorithm")
      ->check(CLI::IsMember({"naive", "naive-upto", "hk", "oracle"}))
      ->capture_default_str();
  equiv->add_flag("--check-invariant", ea.check_invariant, "check the loop invariant at every loop head (hk)");
  equiv->add_flag("--trace", ea.trace, "print the final relation or partition");

  AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "solve a flow-equation system");
  analyze->add_option("flow", aa.file, "flow file")->required()->check(CLI::ExistingFile);
  analyze->add_option("--domain", aa.domain, "value domain")
      ->check(CLI::IsMember({"concrete", "sign"}))
      ->capture_default_str();
  analyze->add_option("--query", aa.query, "\"<var> subset <pred>\"");
  analyze->add_option("--cap", aa.cap, "iteration cap for the concrete domain")->capture_default_str();
  analyze->add_flag("--trace", aa.trace, "print the distinct values of every variable");

  LatticeArgs la;
  auto* lattice = app.add_subcommand("lattice", "finite lattice tools");
  lattice->require_subcommand(1);
  auto* check = lattice->add_subcommand("check", "law report for a closure and a map");
  check->add_option("file", la.file, "lattice file")->required()->check(CLI::ExistingFile);
  check->add_option("--closure", la.closure, "map name of the closure")->required();
  check->add_option("--map", la.map, "map name of the transformer")->required();
  check->add_option("--i", la.i, "element i; the transformer becomes i join map");
  check->add_option("--f", la.f, "element f for local completeness and the f-companion");

  GalleryArgs gaa;
  auto* gallery = app.add_subcommand("gallery", "reproduce the worked examples");
  gallery->add_option("--filter", gaa.filter, "fixture id");
  gallery->add_option("--golden", gaa.golden, "compare against golden files in this directory");
  gallery->add_option("--write-golden", gaa.write_golden, "write golden files to this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  }

  try {
    if (*equiv) return cmd_equiv(ea, g);
    if (*analyze) return cmd_analyze(aa, g);
    if (*check) return cmd_lattice_check(la, g);
    if (*gallery) return cmd_gallery(gaa, g);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
