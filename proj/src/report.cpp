#include "arrtop/report.hpp"

#include "arrtop/os.hpp"

#include <bit>

namespace arrtop {

PosetReport make_poset_report(const Arrangement& arr) {
  IntersectionPoset poset(arr);
  PosetReport r;
  r.ambient_dim = arr.ambient_dim();
  r.field = arr.field();
  r.labels = arr.labels();
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto& n = poset.node(i);
    r.nodes.push_back({n.generators, n.dim, n.codim, poset.mobius(i), poset.rank(i)});
  }
  r.covers = poset.covers();
  return r;
}

OSReport make_os_report(const Arrangement& arr) {
  OSReport r;
  r.coned = !arr.is_central();
  OSAlgebra alg = os_algebra(r.coned ? cone(arr) : arr);
  r.dims.assign(alg.dims.begin(), alg.dims.end());
  r.deconed_dims = r.coned ? decone_polynomial(r.dims) : r.dims;
  r.circuits = alg.circuits;
  for (std::size_t d = 0; d < alg.dims.size(); ++d) r.basis.push_back(alg.basis(d));
  return r;
}

RegionsReport make_regions_report(const Arrangement& arr) {
  RegionsReport r;
  r.regions = enumerate_regions(arr);
  for (const auto& reg : r.regions) r.bounded += reg.bounded ? 1 : 0;
  return r;
}

TwistedReport make_twisted_report(const Arrangement& arr, const MonodromyData& md) {
  if (md.size() != arr.size())
    throw std::invalid_argument("expected " + std::to_string(arr.size()) + " monodromy coefficients, got " +
                                std::to_string(md.size()));
  TwistedReport r;
  r.tau = md.tau;
  if (arr.all_hyperplanes() && is_generic(arr)) r.generic = resonance_generic(md, arr.ambient_dim());
  if (arr.field() == Field::Q) r.normal_crossing = twisted_dim_normal_crossing(arr, md);
  if (arr.field() == Field::Q && arr.ambient_dim() == 1 && arr.all_hyperplanes()) {
    std::vector<Rational> points;
    for (const auto& p : arr.planes()) points.push_back(p.equations()(0, 1).re() / p.equations()(0, 0).re());
    r.one_dim = one_dim_twisted_complex(points, md);
  }
  return r;
}

CompareReport compare_self(const Arrangement& arr, std::size_t max_faces) {
  if (arr.field() != Field::QI) throw std::invalid_argument("compare --self needs a Q(i) arrangement (use --complexify)");
  CompareReport r;
  r.mode = "self";
  for (auto b : gm_report(arr, max_faces).betti()) r.left.push_back(static_cast<long>(b));
  r.right = make_os_report(arr).deconed_dims;
  auto trim = [](std::vector<long>& v) {
    while (v.size() > 1 && v.back() == 0) v.pop_back();
  };
  trim(r.left);
  trim(r.right);
  r.equal = r.left == r.right;
  return r;
}

CompareReport compare_pair(const Arrangement& a, const Arrangement& b) {
  CompareReport r;
  r.mode = "pair";
  r.equal = same_dimensional_data(a, b);
  return r;
}

namespace {

json mask_json(std::uint64_t mask) {
  json a = json::array();
  for (std::size_t i = 0; i < 64; ++i)
    if (mask >> i & 1) a.push_back(i + 1);
  return a;
}

std::uint64_t mask_from_json(const json& j) {
  std::uint64_t m = 0;
  for (const auto& x : j) m |= std::uint64_t{1} << (x.get<std::size_t>() - 1);
  return m;
}

json degree_map_json(const std::map<int, GroupSummary>& m) {
  json a = json::array();
  for (const auto& [d, g] : m) {
    json e = g;
    e["degree"] = d;
    a.push_back(std::move(e));
  }
  return a;
}

std::map<int, GroupSummary> degree_map_from_json(const json& j) {
  std::map<int, GroupSummary> m;
  for (const auto& e : j) m[e.at("degree").get<int>()] = e.get<GroupSummary>();
  return m;
}

json count_map_json(const std::map<int, long>& m) {
  json a = json::array();
  for (const auto& [d, c] : m) a.push_back({{"dim", d}, {"count", c}});
  return a;
}

std::map<int, long> count_map_from_json(const json& j) {
  std::map<int, long> m;
  for (const auto& e : j) m[e.at("dim").get<int>()] = e.at("count").get<long>();
  return m;
}

json rational_json(const Rational& q) { return rational_to_string(q); }
Rational rational_from_json(const json& j) { return parse_rational(j.get<std::string>()); }

}  // namespace

void to_json(json& j, const GroupSummary& g) { j = {{"rank", g.rank}, {"torsion", g.torsion}}; }
void from_json(const json& j, GroupSummary& g) {
  g.rank = j.at("rank").get<std::size_t>();
  g.torsion = j.at("torsion").get<std::vector<long>>();
}

void to_json(json& j, const HomologySummary& h) { j = {{"reduced", h.reduced}, {"degrees", degree_map_json(h.degrees)}}; }
void from_json(const json& j, HomologySummary& h) {
  h.reduced = j.at("reduced").get<bool>();
  h.degrees = degree_map_from_json(j.at("degrees"));
}

void to_json(json& j, const PosetReport& r) {
  json nodes = json::array();
  for (const auto& n : r.nodes)
    nodes.push_back({{"generators", mask_json(n.generators)},
                     {"dim", n.dim},
                     {"codim", n.codim},
                     {"mobius", n.mobius},
                     {"rank", n.rank}});
  json covers = json::array();
  for (const auto& [a, b] : r.covers) covers.push_back({a, b});
  j = {{"ambient_dim", r.ambient_dim},
       {"field", std::string(field_name(r.field))},
       {"labels", r.labels},
       {"nodes", nodes},
       {"covers", covers}};
}
void from_json(const json& j, PosetReport& r) {
  r.ambient_dim = j.at("ambient_dim").get<std::size_t>();
  r.field = parse_field_name(j.at("field").get<std::string>());
  r.labels = j.at("labels").get<std::vector<std::string>>();
  r.nodes.clear();
  for (const auto& n : j.at("nodes"))
    r.nodes.push_back({mask_from_json(n.at("generators")), n.at("dim").get<std::size_t>(),
                       n.at("codim").get<std::size_t>(), n.at("mobius").get<long>(), n.at("rank").get<std::size_t>()});
  r.covers.clear();
  for (const auto& c : j.at("covers")) r.covers.emplace_back(c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>());
}

void to_json(json& j, const GMReport& r) {
  json cs = json::array();
  for (const auto& c : r.contributions)
    cs.push_back({{"node", c.node},
                  {"generators", mask_json(c.generators)},
                  {"node_dim", c.node_dim},
                  {"degree", c.degree},
                  {"pair_degree", c.pair_degree},
                  {"group", c.group},
                  {"filtration", c.filtration}});
  j = {{"ambient_dim", r.ambient_dim},
       {"source_field", std::string(field_name(r.source_field))},
       {"contributions", cs},
       {"totals", degree_map_json(r.totals)},
       {"betti", r.betti()}};
}
void from_json(const json& j, GMReport& r) {
  r.ambient_dim = j.at("ambient_dim").get<std::size_t>();
  r.source_field = parse_field_name(j.at("source_field").get<std::string>());
  r.contributions.clear();
  for (const auto& c : j.at("contributions")) {
    GMContribution g;
    g.node = c.at("node").get<std::size_t>();
    g.generators = mask_from_json(c.at("generators"));
    g.node_dim = c.at("node_dim").get<std::size_t>();
    g.degree = c.at("degree").get<int>();
    g.pair_degree = c.at("pair_degree").get<int>();
    g.group = c.at("group").get<GroupSummary>();
    g.filtration = c.at("filtration").get<std::size_t>();
    r.contributions.push_back(std::move(g));
  }
  r.totals = degree_map_from_json(j.at("totals"));
}

void to_json(json& j, const WedgeSummary& w) {
  json ss = json::array();
  for (const auto& s : w.summands)
    ss.push_back({{"node", s.node}, {"generators", mask_json(s.generators)}, {"node_dim", s.node_dim}, {"pair", s.pair}});
  j = {{"ambient_dim", w.ambient_dim}, {"summands", ss}, {"totals", degree_map_json(w.totals)}};
}
void from_json(const json& j, WedgeSummary& w) {
  w.ambient_dim = j.at("ambient_dim").get<std::size_t>();
  w.summands.clear();
  for (const auto& s : j.at("summands"))
    w.summands.push_back({s.at("node").get<std::size_t>(), mask_from_json(s.at("generators")),
                          s.at("node_dim").get<std::size_t>(), s.at("pair").get<HomologySummary>()});
  w.totals = degree_map_from_json(j.at("totals"));
}

void to_json(json& j, const OSReport& r) {
  j = {{"coned", r.coned},
       {"dims", r.dims},
       {"deconed_dims", r.deconed_dims},
       {"circuits", r.circuits},
       {"basis", r.basis}};
}
void from_json(const json& j, OSReport& r) {
  r.coned = j.at("coned").get<bool>();
  r.dims = j.at("dims").get<std::vector<long>>();
  r.deconed_dims = j.at("deconed_dims").get<std::vector<long>>();
  r.circuits = j.at("circuits").get<std::vector<std::vector<std::size_t>>>();
  r.basis = j.at("basis").get<std::vector<std::vector<std::vector<std::size_t>>>>();
}

void to_json(json& j, const RegionsReport& r) {
  json rs = json::array();
  for (const auto& reg : r.regions) {
    json w = json::array();
    for (const auto& x : reg.witness) w.push_back(rational_json(x));
    rs.push_back({{"signs", reg.signs}, {"witness", w}, {"bounded", reg.bounded}});
  }
  j = {{"regions", rs}, {"count", r.regions.size()}, {"bounded", r.bounded}};
}
void from_json(const json& j, RegionsReport& r) {
  r.regions.clear();
  for (const auto& e : j.at("regions")) {
    Region reg;
    reg.signs = e.at("signs").get<std::string>();
    for (const auto& x : e.at("witness")) reg.witness.push_back(rational_from_json(x));
    reg.bounded = e.at("bounded").get<bool>();
    r.regions.push_back(std::move(reg));
  }
  r.bounded = j.at("bounded").get<std::size_t>();
}

void to_json(json& j, const SalvettiCensus& c) {
  j = {{"ambient_dim", c.ambient_dim},
       {"cells", count_map_json(c.cells_by_dim)},
       {"added_point", c.added_point},
       {"total", c.total()},
       {"euler_characteristic", c.euler_characteristic()}};
}
void from_json(const json& j, SalvettiCensus& c) {
  c.ambient_dim = j.at("ambient_dim").get<std::size_t>();
  c.cells_by_dim = count_map_from_json(j.at("cells"));
  c.added_point = j.at("added_point").get<long>();
}

void to_json(json& j, const ImaginaryWedgeCensus& c) {
  json cells = json::array();
  for (const auto& w : c.cells) cells.push_back({{"generators", mask_json(w.generators)}, {"dim", w.dim}});
  j = {{"ambient_dim", c.ambient_dim}, {"cells", cells}, {"bm_ranks", count_map_json(c.bm_ranks())}};
}
void from_json(const json& j, ImaginaryWedgeCensus& c) {
  c.ambient_dim = j.at("ambient_dim").get<std::size_t>();
  c.cells.clear();
  for (const auto& w : j.at("cells")) c.cells.push_back({mask_from_json(w.at("generators")), w.at("dim").get<int>()});
}

void to_json(json& j, const GraphComplexReport& r) { j = {{"n", r.n}, {"k", r.k}, {"homology", r.homology}}; }
void from_json(const json& j, GraphComplexReport& r) {
  r.n = j.at("n").get<std::size_t>();
  r.k = j.at("k").get<std::size_t>();
  r.homology = j.at("homology").get<HomologySummary>();
}

void to_json(json& j, const TwistedPrediction& p) {
  j = {{"applicable", p.applicable}, {"reason", p.reason}, {"degree", p.degree}, {"dimension", p.dimension}};
  j["canonical_map_bijective"] = p.canonical_map_bijective ? json(*p.canonical_map_bijective) : json(nullptr);
}
void from_json(const json& j, TwistedPrediction& p) {
  p.applicable = j.at("applicable").get<bool>();
  p.reason = j.at("reason").get<std::string>();
  p.degree = j.at("degree").get<int>();
  p.dimension = j.at("dimension").get<long>();
  const json& b = j.at("canonical_map_bijective");
  p.canonical_map_bijective = b.is_null() ? std::nullopt : std::optional<bool>(b.get<bool>());
}

void to_json(json& j, const TwistedReport& r) {
  json tau = json::array();
  for (const auto& t : r.tau) tau.push_back(t.to_string());
  j = {{"tau", tau}};
  j["generic"] = r.generic ? json(*r.generic) : json(nullptr);
  j["normal_crossing"] = r.normal_crossing ? json(*r.normal_crossing) : json(nullptr);
  j["one_dim"] = r.one_dim ? json(*r.one_dim) : json(nullptr);
}
void from_json(const json& j, TwistedReport& r) {
  r.tau.clear();
  for (const auto& t : j.at("tau")) r.tau.push_back(TauValue::parse(t.get<std::string>()));
  auto opt = [&](const char* key, auto& out) {
    const json& v = j.at(key);
    if (v.is_null()) out.reset();
    else out = v.get<typename std::decay_t<decltype(out)>::value_type>();
  };
  opt("generic", r.generic);
  opt("normal_crossing", r.normal_crossing);
  opt("one_dim", r.one_dim);
}

void to_json(json& j, const RankFunction& r) {
  json ranks = json::object();
  for (std::uint32_t s = 1; s < r.r.size(); ++s) ranks[std::to_string(s)] = r(s);
  j = {{"m", r.m}, {"ranks", ranks}};
}
void from_json(const json& j, RankFunction& r) {
  r = RankFunction(j.at("m").get<std::size_t>());
  for (const auto& [k, v] : j.at("ranks").items()) r[static_cast<std::uint32_t>(std::stoul(k))] = v.get<int>();
}

void to_json(json& j, const MatroidReport& r) {
  json vs = json::array();
  for (const auto& v : r.violations)
    vs.push_back({{"axiom", v.axiom}, {"i", v.i}, {"j", v.j}, {"message", v.message}});
  j = {{"rank", r.rank}, {"violations", vs}};
}
void from_json(const json& j, MatroidReport& r) {
  r.rank = j.at("rank").get<RankFunction>();
  r.violations.clear();
  for (const auto& v : j.at("violations"))
    r.violations.push_back({v.at("axiom").get<int>(), v.at("i").get<std::uint32_t>(), v.at("j").get<std::uint32_t>(),
                            v.at("message").get<std::string>()});
}

void to_json(json& j, const MnevReport& r) {
  json lines = json::array();
  for (const auto& l : r.lines) {
    json row = json::array();
    for (const auto& x : l) row.push_back(x.to_string());
    lines.push_back(std::move(row));
  }
  json cs = json::array();
  for (const auto& c : r.constraints)
    cs.push_back({{"name", c.name()},
                  {"lines", c.lines},
                  {"required", c.required},
                  {"actual", c.actual},
                  {"holds", c.holds()}});
  j = {{"alpha", r.alpha.to_string()}, {"lines", lines}, {"constraints", cs}, {"verdict", r.verdict()}};
  j["construction_failure"] = r.construction_failure ? json(*r.construction_failure) : json(nullptr);
}
void from_json(const json& j, MnevReport& r) {
  r.alpha = Scalar::parse(j.at("alpha").get<std::string>(), Field::QI);
  r.lines.clear();
  for (const auto& l : j.at("lines")) {
    Vector v;
    for (const auto& x : l) v.push_back(Scalar::parse(x.get<std::string>(), Field::QI));
    r.lines.push_back(std::move(v));
  }
  r.constraints.clear();
  for (const auto& c : j.at("constraints"))
    r.constraints.push_back(
        {c.at("lines").get<std::vector<int>>(), c.at("required").get<int>(), c.at("actual").get<int>()});
  const json& f = j.at("construction_failure");
  r.construction_failure = f.is_null() ? std::nullopt : std::optional<std::string>(f.get<std::string>());
}

void to_json(json& j, const CompareReport& r) {
  j = {{"mode", r.mode}, {"equal", r.equal}, {"left", r.left}, {"right", r.right}};
}
void from_json(const json& j, CompareReport& r) {
  r.mode = j.at("mode").get<std::string>();
  r.equal = j.at("equal").get<bool>();
  r.left = j.at("left").get<std::vector<long>>();
  r.right = j.at("right").get<std::vector<long>>();
}

}  // namespace arrtop
