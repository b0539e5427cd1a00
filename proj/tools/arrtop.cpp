// arrtop: command-line front end for the arrangement topology library.

#include "arrtop/complexes.hpp"
#include "arrtop/document.hpp"
#include "arrtop/gm.hpp"
#include "arrtop/os.hpp"
#include "arrtop/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace arrtop;

namespace {

struct Options {
  std::string format = "text";
  bool reduced = false;
  bool complexify = false;
  bool imaginary = false;
  bool self = false;
  bool empty_rank_zero = false;
  std::size_t max_faces = kDefaultMaxFaces;
  std::string tau;
  std::string alpha;
  std::size_t n = 0;
  std::size_t k = 2;
  std::vector<std::string> files;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Arrangement load(const Options& o, std::size_t index = 0) {
  if (o.files.size() <= index) throw UsageError("missing arrangement file");
  Arrangement arr = load_document(o.files[index]);
  if (o.complexify) {
    if (arr.field() != Field::Q) throw UsageError("--complexify needs a document with field \"Q\"");
    return complexify(arr);
  }
  return arr;
}

std::string join(const auto& v, const char* sep = " ") {
  std::ostringstream s;
  bool first = true;
  for (const auto& x : v) {
    if (!first) s << sep;
    s << x;
    first = false;
  }
  return s.str();
}

std::string labels_of(const Arrangement& arr, std::uint64_t mask) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arr.size(); ++i)
    if (mask >> i & 1) out.push_back(arr.label(i));
  return "{" + join(out, ",") + "}";
}

std::string group_text(const GroupSummary& g) {
  std::vector<std::string> parts;
  if (g.rank == 1) parts.push_back("Z");
  if (g.rank > 1) parts.push_back("Z^" + std::to_string(g.rank));
  for (long t : g.torsion) parts.push_back("Z/" + std::to_string(t));
  return parts.empty() ? "0" : join(parts, " + ");
}

void print_degrees(std::ostream& out, const std::map<int, GroupSummary>& m, const char* name) {
  for (const auto& [d, g] : m) out << "  " << name << d << " = " << group_text(g) << "\n";
}

int emit(const Options& o, const json& j, const std::string& text) {
  if (o.format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << text;
  return 0;
}

int cmd_poset(const Options& o) {
  Arrangement arr = load(o);
  PosetReport r = make_poset_report(arr);
  std::ostringstream t;
  t << "ambient dimension " << r.ambient_dim << " over " << field_name(r.field) << ", " << r.nodes.size() << " nodes\n";
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    const auto& n = r.nodes[i];
    t << "  [" << i << "] " << labels_of(arr, n.generators) << " dim " << n.dim << " codim " << n.codim << " mu "
      << n.mobius << " rank " << n.rank << "\n";
  }
  return emit(o, r, t.str());
}

int cmd_betti(const Options& o) {
  GMReport r = gm_report(load(o), o.max_faces);
  std::ostringstream t;
  if (o.reduced) {
    std::vector<std::size_t> ranks;
    for (const auto& [d, g] : r.totals) ranks.push_back(g.rank);
    while (ranks.size() > 1 && ranks.back() == 0) ranks.pop_back();
    t << join(ranks) << "\n";
  } else {
    auto b = r.betti();
    while (b.size() > 1 && b.back() == 0) b.pop_back();
    t << join(b) << "\n";
  }
  json j = {{"betti", r.betti()}, {"reduced", o.reduced}, {"totals", json(r)["totals"]}};
  return emit(o, j, t.str());
}

int cmd_gm(const Options& o) {
  Arrangement arr = load(o);
  GMReport r = gm_report(arr, o.max_faces);
  std::ostringstream t;
  t << "complement of " << arr.size() << " planes in " << (arr.field() == Field::QI ? "C^" : "R^") << arr.ambient_dim()
    << " (real dimension " << r.ambient_dim << ")\n";
  for (const auto& c : r.contributions) {
    if (c.group.rank == 0 && c.group.torsion.empty()) continue;
    t << "  " << labels_of(arr, c.generators) << " dim " << c.node_dim << ": H_" << c.pair_degree << " = "
      << group_text(c.group) << " -> reduced H^" << c.degree << "\n";
  }
  t << "reduced cohomology:\n";
  print_degrees(t, r.totals, "H~^");
  t << "betti: " << join(r.betti()) << "\n";
  return emit(o, r, t.str());
}

int cmd_os(const Options& o) {
  OSReport r = make_os_report(load(o));
  std::ostringstream t;
  if (r.coned) t << "affine input: computed for the cone, dims " << join(r.dims) << "\n";
  t << "circuits: " << r.circuits.size() << "\n";
  t << "dims: " << join(r.deconed_dims) << "\n";
  return emit(o, r, t.str());
}

int cmd_regions(const Options& o) {
  RegionsReport r = make_regions_report(load(o));
  std::ostringstream t;
  for (const auto& reg : r.regions) {
    std::vector<std::string> w;
    for (const auto& x : reg.witness) w.push_back(rational_to_string(x));
    t << "  " << reg.signs << " (" << join(w, ", ") << ")" << (reg.bounded ? " bounded" : "") << "\n";
  }
  t << r.regions.size() << " regions, " << r.bounded << " bounded\n";
  return emit(o, r, t.str());
}

int cmd_salvetti(const Options& o) {
  SalvettiCensus c = salvetti_census(load(o));
  std::ostringstream t;
  for (const auto& [d, n] : c.cells_by_dim) t << "  dim " << d << ": " << n << "\n";
  t << "  added point: " << c.added_point << "\n";
  t << "total " << c.total() << ", euler characteristic " << c.euler_characteristic() << "\n";
  return emit(o, c, t.str());
}

int cmd_wedges(const Options& o) {
  Arrangement arr = load(o);
  std::ostringstream t;
  if (o.imaginary) {
    ImaginaryWedgeCensus w = imaginary_wedge_census(arr);
    for (const auto& c : w.cells) t << "  " << labels_of(arr, c.generators) << " dim " << c.dim << "\n";
    t << "Borel-Moore ranks:";
    for (const auto& [d, n] : w.bm_ranks()) t << " H_" << d << "=" << n;
    t << "\n";
    return emit(o, w, t.str());
  }
  WedgeSummary w = wedge_summary(arr, o.max_faces);
  for (const auto& s : w.summands) {
    bool any = false;
    for (const auto& [d, g] : s.pair.degrees) any = any || g.rank > 0 || !g.torsion.empty();
    if (!any) continue;
    t << "  " << labels_of(arr, s.generators) << " dim " << s.node_dim << ":";
    for (const auto& [d, g] : s.pair.degrees)
      if (g.rank > 0 || !g.torsion.empty()) t << " S^" << d + static_cast<int>(s.node_dim) << " x " << group_text(g);
    t << "\n";
  }
  t << "one-point compactification of the union:\n";
  print_degrees(t, w.totals, "H~");
  return emit(o, w, t.str());
}

int cmd_graph_complex(const Options& o) {
  if (o.n == 0) throw UsageError("graph-complex needs --n");
  SimplicialPair pair = k_hypergraph_pair(o.n, o.k);
  GraphComplexReport r{o.n, o.k, homology(pair, o.reduced, o.max_faces)};
  std::ostringstream t;
  t << "N = " << o.n << ", k = " << o.k << "\n";
  for (const auto& [d, g] : r.homology.degrees)
    if (g.rank > 0 || !g.torsion.empty()) t << "degree " << d << ": rank " << g.rank
                                              << (g.torsion.empty() ? "" : ", torsion " + join(g.torsion)) << "\n";
  if (r.homology.is_zero()) t << "acyclic\n";
  return emit(o, r, t.str());
}

int cmd_twisted(const Options& o) {
  if (o.tau.empty()) throw UsageError("twisted needs --tau");
  Arrangement arr = load(o);
  TwistedReport r = make_twisted_report(arr, MonodromyData::parse(o.tau));
  std::ostringstream t;
  auto show = [&](const char* name, const std::optional<TwistedPrediction>& p) {
    if (!p) return;
    t << name << ": ";
    if (!p->applicable) {
      t << "not applicable (" << p->reason << ")\n";
      return;
    }
    t << "dimension " << p->dimension << " in degree " << p->degree;
    if (p->canonical_map_bijective) t << ", canonical map " << (*p->canonical_map_bijective ? "bijective" : "not bijective");
    t << "\n";
  };
  show("generic", r.generic);
  show("normal crossing", r.normal_crossing);
  if (r.one_dim) t << "ray complex: H1 rank " << r.one_dim->rank(1) << ", H2 rank " << r.one_dim->rank(2) << "\n";
  if (!r.generic && !r.normal_crossing && !r.one_dim) t << "no criterion applies to this input\n";
  return emit(o, r, t.str());
}

int cmd_matroid(const Options& o) {
  MatroidReport r;
  r.rank = matroid_from_arrangement(load(o));
  r.violations = check_matroid_axioms(r.rank, o.empty_rank_zero);
  std::ostringstream t;
  for (std::uint32_t s = 1; s < r.rank.r.size(); ++s) t << "  r" << subset_name(s) << " = " << r.rank(s) << "\n";
  if (r.violations.empty()) t << "axioms hold\n";
  for (const auto& v : r.violations) t << "axiom " << v.axiom << " violated: " << v.message << "\n";
  return emit(o, r, t.str());
}

int cmd_mnev(const Options& o) {
  if (o.alpha.empty()) throw UsageError("mnev needs --alpha");
  MnevReport r = mnev_check(Scalar::parse(o.alpha, Field::QI));
  return emit(o, r, r.verdict() + "\n");
}

int cmd_compare(const Options& o) {
  CompareReport r;
  if (o.self || o.files.size() == 1) {
    r = compare_self(load(o), o.max_faces);
  } else {
    r = compare_pair(load(o, 0), load(o, 1));
  }
  std::ostringstream t;
  if (r.mode == "self") t << "gm: " << join(r.left) << "\nos: " << join(r.right) << "\n";
  t << (r.equal ? "match" : "mismatch") << "\n";
  emit(o, r, t.str());
  return r.equal ? 0 : 3;
}

void error_line(const char* code, const std::string& msg) { std::cerr << "error: " << code << ": " << msg << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topology and combinatorics of affine plane arrangements"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* c, bool with_file) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    c->add_option("--max-faces", o.max_faces, "Face budget for simplicial computations");
    c->add_flag("--reduced", o.reduced, "Report reduced groups");
    if (with_file) {
      c->add_option("files", o.files, "Arrangement document(s)");
      c->add_flag("--complexify", o.complexify, "Read a real document as its complexification");
    }
  };
  std::map<std::string, int (*)(const Options&)> commands = {
      {"poset", cmd_poset},       {"betti", cmd_betti},     {"gm", cmd_gm},
      {"os", cmd_os},             {"regions", cmd_regions}, {"salvetti", cmd_salvetti},
      {"wedges", cmd_wedges},     {"graph-complex", cmd_graph_complex},
      {"twisted", cmd_twisted},   {"matroid", cmd_matroid}, {"mnev", cmd_mnev},
      {"compare", cmd_compare},
  };
  std::map<std::string, std::string> help = {
      {"poset", "Intersection poset with Mobius values"},
      {"betti", "Betti numbers of the complement"},
      {"gm", "Goresky-MacPherson report"},
      {"os", "Orlik-Solomon algebra dimensions"},
      {"regions", "Regions of a real arrangement"},
      {"salvetti", "Sign-sequence cell census of the complexification"},
      {"wedges", "Wedge decomposition of the compactified union"},
      {"graph-complex", "Homology of the k-hypergraph complex"},
      {"twisted", "Twisted homology dimension predictions"},
      {"matroid", "Matroid rank function and axiom check"},
      {"mnev", "Ten-line incidence demonstration"},
      {"compare", "GM vs Orlik-Solomon, or dimensional data of two documents"},
  };
  for (const auto& [name, fn] : commands) {
    CLI::App* c = app.add_subcommand(name, help[name]);
    add_common(c, name != "graph-complex" && name != "mnev");
    if (name == "wedges") c->add_flag("--imaginary", o.imaginary, "Imaginary wedge cells (normal crossings)");
    if (name == "graph-complex") {
      c->add_option("--n", o.n, "Number of vertices")->required();
      c->add_option("--k", o.k, "Edge size");
    }
    if (name == "twisted") c->add_option("--tau", o.tau, "Comma-separated monodromy coefficients or 'generic'");
    if (name == "matroid") c->add_flag("--empty-rank-zero", o.empty_rank_zero, "Use r(empty set) = 0 in axiom 3");
    if (name == "mnev") {
      c->add_option("--alpha", o.alpha, "Gaussian rational parameter");
    }
    if (name == "compare") c->add_flag("--self", o.self, "Compare GM and Orlik-Solomon on one document");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    error_line("usage", e.what());
    return 1;
  }
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return commands.at(name)(o);
  } catch (const BudgetExceeded& e) {
    error_line("budget", e.what());
    return 2;
  } catch (const SizeLimitError& e) {
    error_line("budget", e.what());
    return 2;
  } catch (const UsageError& e) {
    error_line("usage", e.what());
    return 1;
  } catch (const ParseError& e) {
    error_line("parse", e.what());
    return 1;
  } catch (const InconsistentPlaneError& e) {
    error_line("inconsistent", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    error_line("input", e.what());
    return 1;
  }
}
