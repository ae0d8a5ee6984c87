// Command-line front end: compute invariants, run product experiments,
// reproduce the path/cycle tables and sweep the direct-product conjecture.
// Records are line-delimited JSON with sorted keys; identical invocations
// produce byte-identical output (timing is opt-in via --timing).

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "grundy/constructions.hpp"
#include "grundy/formulas.hpp"
#include "grundy/hypergraph.hpp"
#include "grundy/iso.hpp"
#include "grundy/products.hpp"
#include "grundy/solver.hpp"

using json = nlohmann::json;
using namespace grundy;

namespace {

constexpr const char* kSpecGrammar =
    "graph spec grammar: path:N | cycle:N | complete:N | star:N | cbip:A,B | t8 | "
    "g6:<line> | file:<path>";

struct ParsedGraph {
  Graph graph;
  std::string spec;
  std::optional<FactorSpec> family;  // set for path:/cycle: specs
};

ParsedGraph parse_graph_spec(const std::string& spec) {
  auto bad = [&](const std::string& why) {
    throw std::invalid_argument("bad graph spec \"" + spec + "\": " + why + "\n" +
                                kSpecGrammar);
  };
  ParsedGraph out;
  out.spec = spec;
  if (spec == "t8") {
    out.graph = tree_t8();
    return out;
  }
  auto colon = spec.find(':');
  if (colon == std::string::npos) bad("missing ':'");
  std::string head = spec.substr(0, colon), tail = spec.substr(colon + 1);
  auto parse_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) bad("trailing characters in number");
      return v;
    } catch (const std::invalid_argument&) {
      bad("expected a number, got \"" + s + "\"");
    } catch (const std::out_of_range&) {
      bad("number out of range");
    }
    return 0;
  };
  if (head == "path") {
    int n = parse_int(tail);
    out.graph = path(n);
    out.family = FactorSpec{Family::Path, n};
  } else if (head == "cycle") {
    int n = parse_int(tail);
    out.graph = cycle(n);
    out.family = FactorSpec{Family::Cycle, n};
  } else if (head == "complete") {
    out.graph = complete(parse_int(tail));
  } else if (head == "star") {
    out.graph = star(parse_int(tail));
  } else if (head == "cbip") {
    auto comma = tail.find(',');
    if (comma == std::string::npos) bad("cbip needs A,B");
    out.graph = complete_bipartite(parse_int(tail.substr(0, comma)),
                                   parse_int(tail.substr(comma + 1)));
  } else if (head == "g6") {
    out.graph = from_graph6(tail);
  } else if (head == "file") {
    std::ifstream in(tail);
    if (!in) bad("cannot open file " + tail);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line.rfind(">>", 0) == 0) continue;
      out.graph = from_graph6(line);
      return out;
    }
    bad("file contains no graph6 line");
  } else {
    bad("unknown family \"" + head + "\"");
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path_name) {
  std::ifstream in(path_name);
  if (!in) throw std::invalid_argument("cannot open file " + path_name);
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == ">>graph6<<") continue;
    graphs.push_back(from_graph6(line));
  }
  return graphs;
}

struct GlobalOpts {
  int cap = kDefaultSearchCap;
  std::string format = "jsonl";
  std::uint64_t seed = 0;
  bool timing = false;
  int jobs = 1;
};

int env_cap_default() {
  if (const char* env = std::getenv("GRUNDY_CAP")) {
    try {
      return std::stoi(env);
    } catch (...) {
      std::cerr << "warning: ignoring unparsable GRUNDY_CAP\n";
    }
  }
  return kDefaultSearchCap;
}

json graph_json(const ParsedGraph& pg) {
  return json{{"spec", pg.spec}, {"graph6", to_graph6(pg.graph)}, {"n", pg.graph.n}};
}

json bound_json(const BoundReport& r) {
  json j{{"lower", r.lower},
         {"upper", r.upper},
         {"lower_src", r.lower_src},
         {"upper_src", r.upper_src}};
  if (r.exact) j["exact"] = *r.exact;
  j["status"] = std::string(bound_status_name(r.status()));
  return j;
}

void emit(const json& rec) { std::cout << rec.dump() << "\n"; }

// ---------------------------------------------------------------------------

int cmd_invariant(const GlobalOpts& g, const std::string& spec_str,
                  const std::string& variant_str, bool with_witness) {
  ParsedGraph pg = parse_graph_spec(spec_str);
  Variant variant = variant_from_name(variant_str);
  SolveResult r = solve(pg.graph, variant, SolverOptions{g.cap});
  json rec;
  rec["cmd"] = "invariant";
  rec["input"] = graph_json(pg);
  rec["variant"] = std::string(variant_name(variant));
  rec["value"] = r.value;
  rec["flags"] = {{"isolated_vertices", r.isolated_vertices}};
  rec["search"] = {{"states_expanded", r.stats.states_expanded},
                   {"memo_entries", r.stats.memo_entries}};
  if (with_witness) rec["witness"] = r.witness.vertices;
  if (g.timing) rec["elapsed_ms"] = r.stats.wall_ms;
  emit(rec);
  return 0;
}

// ---------------------------------------------------------------------------

std::optional<WitnessBundle> certified_witness(ProductKind kind, const ParsedGraph& pg,
                                               const ParsedGraph& ph,
                                               const SolverOptions& opts,
                                               std::string* skip_reason) {
  try {
    switch (kind) {
      case ProductKind::Direct: {
        SolveResult rg = solve(pg.graph, Variant::Total, opts);
        SolveResult rh = solve(ph.graph, Variant::Total, opts);
        return direct_product_witness(pg.graph, ph.graph, rg.witness.vertices,
                                      rh.witness.vertices);
      }
      case ProductKind::Lexicographic:
        return best_lexicographic_witness(pg.graph, ph.graph, Variant::Total, opts);
      case ProductKind::Strong: {
        auto bundles = strong_witnesses(pg.graph, ph.graph, opts);
        std::size_t best = 0;
        for (std::size_t i = 1; i < bundles.size(); ++i)
          if (bundles[i].claimed_length > bundles[best].claimed_length) best = i;
        return std::move(bundles[best]);
      }
      case ProductKind::Cartesian: {
        if (!pg.family || !ph.family) {
          *skip_reason = "cartesian ordering witness needs path/cycle factors";
          return std::nullopt;
        }
        GridKind kind2;
        FactorSpec a = *pg.family, b = *ph.family;
        if (a.family == Family::Path && b.family == Family::Path)
          kind2 = GridKind::PathPath;
        else if (a.family == Family::Cycle && b.family == Family::Cycle)
          kind2 = GridKind::CycleCycle;
        else {
          kind2 = GridKind::PathCycle;
          if (a.family == Family::Cycle) std::swap(a, b);
        }
        return cartesian_witness(kind2, a.size, b.size);
      }
    }
  } catch (const std::exception& e) {
    *skip_reason = e.what();
  }
  return std::nullopt;
}

int cmd_product(const GlobalOpts& g, const std::string& kind_str,
                const std::string& gspec, const std::string& hspec, bool do_solve,
                bool do_predict, bool do_witness) {
  ProductKind kind = product_kind_from_name(kind_str);
  ParsedGraph pg = parse_graph_spec(gspec);
  ParsedGraph ph = parse_graph_spec(hspec);
  ProductGraph product = make_product(kind, pg.graph, ph.graph);
  SolverOptions opts{g.cap};

  json rec;
  rec["cmd"] = "product";
  rec["kind"] = std::string(product_kind_name(kind));
  rec["g"] = graph_json(pg);
  rec["h"] = graph_json(ph);
  rec["n"] = product.graph.n;

  std::optional<BoundReport> bounds;
  if (do_predict) {
    if (pg.family && ph.family) {
      try {
        bounds = predict(kind, *pg.family, *ph.family);
      } catch (const std::invalid_argument& e) {
        rec["predict"] = {{"unavailable", e.what()}};
      }
    } else {
      rec["predict"] = {{"unavailable", "prediction needs path/cycle factors"}};
    }
  }
  std::optional<int> exact;
  if (do_solve) {
    if (product.graph.n <= g.cap) {
      SolveResult r = solve(product.graph, Variant::Total, opts);
      exact = r.value;
      rec["solve"] = {{"value", r.value},
                      {"states_expanded", r.stats.states_expanded}};
      if (g.timing) rec["solve"]["elapsed_ms"] = r.stats.wall_ms;
    } else {
      rec["solve"] = {{"skipped", "cap-exceeded: product order " +
                                      std::to_string(product.graph.n) +
                                      " exceeds cap " + std::to_string(g.cap)}};
    }
  }
  if (bounds) {
    if (exact) bounds->attach_exact(*exact);
    rec["predict"] = bound_json(*bounds);
    rec["status"] = std::string(bound_status_name(bounds->status()));
  }
  if (do_witness) {
    std::string skip;
    auto bundle = certified_witness(kind, pg, ph, opts, &skip);
    if (bundle) {
      rec["witness"] = {{"length", bundle->claimed_length},
                        {"source", std::string(witness_source_name(bundle->source))},
                        {"vertices", bundle->sequence.vertices}};
    } else {
      rec["witness"] = {{"skipped", skip}};
    }
  }
  emit(rec);
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_sweep(const GlobalOpts& g, int enumerate_n, const std::string& file,
              int pair_cap) {
  std::vector<Graph> graphs;
  std::vector<std::string> names;
  if (!file.empty()) {
    graphs = read_graph6_file(file);
  } else {
    for (int n = 1; n <= enumerate_n; ++n)
      for (Graph& gg : enumerate_connected_bipartite(n)) graphs.push_back(std::move(gg));
  }
  for (const Graph& gg : graphs) names.push_back(to_graph6(gg));

  SolverOptions opts{std::max(g.cap, pair_cap)};
  std::vector<int> gamma_t(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i)
    gamma_t[i] = solve(graphs[i], Variant::Total, opts).value;

  struct Pair {
    std::size_t a, b;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i; j < graphs.size(); ++j) pairs.push_back({i, j});

  std::vector<std::string> lines(pairs.size());
  std::atomic<int> violations{0}, tested{0}, skipped{0};
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= pairs.size()) return;
      auto [a, b] = pairs[idx];
      json rec;
      rec["cmd"] = "sweep-pair";
      rec["index"] = idx;
      rec["g"] = {{"graph6", names[a]}, {"gamma_t", gamma_t[a]}};
      rec["h"] = {{"graph6", names[b]}, {"gamma_t", gamma_t[b]}};
      int product_n = graphs[a].n * graphs[b].n;
      rec["product_n"] = product_n;
      if (product_n > pair_cap) {
        rec["skipped"] = "product order exceeds pair cap " + std::to_string(pair_cap);
        ++skipped;
      } else {
        ProductGraph p = direct_product(graphs[a], graphs[b]);
        int got = solve(p.graph, Variant::Total, opts).value;
        int expected = gamma_t[a] * gamma_t[b];
        rec["gamma_t_product"] = got;
        rec["factor_product"] = expected;
        bool equal = got == expected;
        rec["equal"] = equal;
        rec["counterexample"] = !equal;
        ++tested;
        if (!equal) ++violations;
      }
      lines[idx] = rec.dump();
    }
  };
  int jobs = std::max(1, g.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const std::string& line : lines) std::cout << line << "\n";
  json summary;
  summary["cmd"] = "sweep-summary";
  summary["graphs"] = graphs.size();
  summary["pairs"] = pairs.size();
  summary["tested"] = tested.load();
  summary["equal"] = tested.load() - violations.load();
  summary["violations"] = violations.load();
  summary["skipped"] = skipped.load();
  summary["seed"] = g.seed;
  emit(summary);
  return 0;
}

// ---------------------------------------------------------------------------

struct TableCell {
  int k = 0, l = 0;
  std::optional<BoundReport> bounds;
  std::string bounds_err;
  std::optional<int> solved;
  std::optional<int> certified;
  std::string violation;  // exact value escaped the predicted bounds
};

int cmd_tables(const GlobalOpts& g, const std::string& kind_str,
               const std::string& gfam_str, const std::string& hfam_str,
               std::pair<int, int> krange, std::pair<int, int> lrange) {
  ProductKind kind = product_kind_from_name(kind_str);
  auto fam = [](const std::string& s) {
    if (s == "path") return Family::Path;
    if (s == "cycle") return Family::Cycle;
    throw std::invalid_argument("family must be path or cycle");
  };
  Family gfam = fam(gfam_str), hfam = fam(hfam_str);
  SolverOptions opts{g.cap};

  std::vector<TableCell> cells;
  for (int k = krange.first; k <= krange.second; ++k) {
    for (int l = lrange.first; l <= lrange.second; ++l) {
      TableCell cell;
      cell.k = k;
      cell.l = l;
      FactorSpec fg{gfam, k}, fh{hfam, l};
      try {
        cell.bounds = predict(kind, fg, fh);
      } catch (const std::invalid_argument& e) {
        cell.bounds_err = e.what();
      }
      try {
        Graph a = build_factor(fg), b = build_factor(fh);
        ProductGraph p = make_product(kind, a, b);
        if (p.graph.n <= g.cap)
          cell.solved = solve(p.graph, Variant::Total, opts).value;
        ParsedGraph pa{a, std::string(family_name(gfam)) + ":" + std::to_string(k), fg};
        ParsedGraph pb{b, std::string(family_name(hfam)) + ":" + std::to_string(l), fh};
        std::string skip;
        auto bundle = certified_witness(kind, pa, pb, opts, &skip);
        if (bundle) cell.certified = bundle->claimed_length;
      } catch (const std::invalid_argument&) {
        // out-of-range factor (e.g. path:2 for a cycle table-cell); leave empty
      }
      if (cell.bounds && cell.solved) {
        try {
          cell.bounds->attach_exact(*cell.solved);
        } catch (const std::logic_error& e) {
          cell.violation = e.what();  // a bound falsified by the solver is a finding
        }
      }
      cells.push_back(std::move(cell));
    }
  }

  if (g.format == "table") {
    std::cout << product_kind_name(kind) << " " << gfam_str << " x " << hfam_str
              << ": predicted [lo,up] / solved / certified\n";
    std::cout << "k\\l";
    for (int l = lrange.first; l <= lrange.second; ++l)
      std::cout << "\t" << l;
    std::cout << "\n";
    std::size_t i = 0;
    for (int k = krange.first; k <= krange.second; ++k) {
      std::cout << k;
      for (int l = lrange.first; l <= lrange.second; ++l, ++i) {
        const TableCell& c = cells[i];
        std::ostringstream cell;
        if (c.bounds) {
          if (c.bounds->formula_exact())
            cell << "=" << c.bounds->lower;
          else
            cell << "[" << c.bounds->lower << "," << c.bounds->upper << "]";
        } else {
          cell << "-";
        }
        cell << "/" << (c.solved ? std::to_string(*c.solved) : "-");
        cell << "/" << (c.certified ? std::to_string(*c.certified) : "-");
        if (!c.violation.empty())
          cell << " VIOLATION";
        else if (c.bounds && c.solved)
          cell << (c.bounds->status() == BoundStatus::Tight ? " tight" : " gap");
        std::cout << "\t" << cell.str();
      }
      std::cout << "\n";
    }
  } else {
    for (const TableCell& c : cells) {
      json rec;
      rec["cmd"] = "table-cell";
      rec["kind"] = std::string(product_kind_name(kind));
      rec["gfam"] = gfam_str;
      rec["hfam"] = hfam_str;
      rec["k"] = c.k;
      rec["l"] = c.l;
      if (c.bounds)
        rec["predict"] = bound_json(*c.bounds);
      else
        rec["predict"] = {{"unavailable", c.bounds_err}};
      if (c.solved) rec["solve"] = {{"value", *c.solved}};
      if (c.certified) rec["witness"] = {{"length", *c.certified}};
      if (!c.violation.empty())
        rec["violation"] = c.violation;
      else if (c.bounds && c.solved)
        rec["status"] = std::string(bound_status_name(c.bounds->status()));
      emit(rec);
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

Hypergraph load_hypergraph(const std::string& file) {
  if (file.empty() || file == "-") return parse_hypergraph(std::cin);
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open file " + file);
  return parse_hypergraph(in);
}

int cmd_hypergraph_rho(const GlobalOpts& g, const std::string& file, bool with_witness) {
  Hypergraph h = load_hypergraph(file);
  RhoResult r = rho_gr(h);
  json rec;
  rec["cmd"] = "hypergraph-rho";
  rec["ground"] = h.ground;
  rec["edges"] = h.edges.size();
  rec["value"] = r.value;
  if (with_witness) rec["witness_edges"] = r.witness_edges;
  if (g.timing) rec["elapsed_ms"] = r.stats.wall_ms;
  emit(rec);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Grundy domination invariants on small graphs and graph products"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOpts g;
  g.cap = env_cap_default();
  app.add_option("--cap", g.cap, "exact search cap (vertices); env GRUNDY_CAP");
  app.add_option("--format", g.format, "jsonl or table")
      ->default_val("jsonl")
      ->check(CLI::IsMember({"jsonl", "table"}));
  app.add_option("--seed", g.seed, "seed recorded for randomized checks");
  app.add_option("--jobs", g.jobs, "worker threads for sweeps")->default_val(1);
  app.add_flag("--timing", g.timing, "include wall-clock fields in records");

  std::string spec, variant = "total", kind, gspec, hspec;
  bool witness = false, do_solve = false, do_predict = false;

  CLI::App* inv = app.add_subcommand("invariant", "compute one invariant of one graph");
  inv->add_option("spec", spec, kSpecGrammar)->required();
  inv->add_option("--variant", variant, "total | closed | z | l");
  inv->add_flag("--witness", witness, "emit the witness sequence");

  CLI::App* prod = app.add_subcommand("product", "build a product and evaluate it");
  prod->add_option("kind", kind, "direct | lexicographic | strong | cartesian")
      ->required();
  prod->add_option("gspec", gspec, "first factor")->required();
  prod->add_option("hspec", hspec, "second factor")->required();
  prod->add_flag("--solve", do_solve, "run the exact solver on the product");
  prod->add_flag("--predict", do_predict, "closed-form value or bounds");
  prod->add_flag("--witness", witness, "build a constructive lower-bound witness");

  int enumerate_n = 0, pair_cap = 36;
  std::string file;
  CLI::App* sweep =
      app.add_subcommand("sweep-conjecture", "test gamma_t(GxH) = gamma_t(G)gamma_t(H)");
  sweep->add_option("--enumerate", enumerate_n,
                    "use all connected bipartite graphs on 1..N vertices (N <= 7)");
  sweep->add_option("--file", file, "graph6 file, one graph per line");
  sweep->add_option("--pair-cap", pair_cap, "skip pairs whose product order exceeds this");

  std::string gfam = "path", hfam = "path", krange_str = "3:5", lrange_str = "3:5";
  CLI::App* tables = app.add_subcommand("tables", "predicted vs solved vs certified");
  tables->add_option("kind", kind, "direct | lexicographic | strong | cartesian")
      ->required();
  tables->add_option("--gfam", gfam, "path | cycle");
  tables->add_option("--hfam", hfam, "path | cycle");
  tables->add_option("--k", krange_str, "k range lo:hi");
  tables->add_option("--l", lrange_str, "l range lo:hi");

  CLI::App* hyper = app.add_subcommand("hypergraph", "hypergraph text format tools");
  hyper->require_subcommand(1);
  std::string hfile, hfile_b;
  CLI::App* rho = hyper->add_subcommand("rho", "longest edge-cover sequence");
  rho->add_option("--file", hfile, "hypergraph text file, - for stdin");
  rho->add_flag("--witness", witness, "emit the witness edge indices");
  CLI::App* hprod = hyper->add_subcommand("product", "hypergraph product, printed back");
  hprod->add_option("--file-a", hfile, "first factor")->required();
  hprod->add_option("--file-b", hfile_b, "second factor")->required();
  CLI::App* hinc = hyper->add_subcommand("incidence", "incidence bipartite graph, graph6");
  hinc->add_option("--file", hfile, "hypergraph text file, - for stdin");

  CLI11_PARSE(app, argc, argv);

  auto parse_range = [](const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("range must be lo:hi, got " + s);
    return std::make_pair(std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1)));
  };

  try {
    if (inv->parsed()) return cmd_invariant(g, spec, variant, witness);
    if (prod->parsed())
      return cmd_product(g, kind, gspec, hspec, do_solve, do_predict, witness);
    if (sweep->parsed()) {
      if (file.empty() && enumerate_n == 0)
        throw std::invalid_argument("sweep-conjecture needs --enumerate=N or --file");
      return cmd_sweep(g, enumerate_n, file, pair_cap);
    }
    if (tables->parsed())
      return cmd_tables(g, kind, gfam, hfam, parse_range(krange_str),
                        parse_range(lrange_str));
    if (hyper->parsed()) {
      if (rho->parsed()) return cmd_hypergraph_rho(g, hfile, witness);
      if (hprod->parsed()) {
        Hypergraph a = load_hypergraph(hfile), b = load_hypergraph(hfile_b);
        std::cout << format_hypergraph(hypergraph_product(a, b));
        return 0;
      }
      if (hinc->parsed()) {
        std::cout << to_graph6(incidence_bipartite(load_hypergraph(hfile))) << "\n";
        return 0;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
