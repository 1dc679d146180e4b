// Command-line front end. Exit codes: 0 success or true verdict, 1 false
// verdict, 2 input or usage error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "digest.hpp"
#include "fixture_suite.hpp"
#include "markedbases/markedbases.hpp"

#ifndef MARKEDBASES_FIXTURE_DIR
#define MARKEDBASES_FIXTURE_DIR "fixtures"
#endif

namespace {

using namespace mb;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  unsigned workers = 0;
  std::uint64_t fuel = 1'000'000;

  bool json() const { return format == "json"; }
  unsigned threads() const { return resolve_workers(workers ? std::optional<unsigned>(workers) : std::nullopt); }
  ReduceOptions reduce_options(bool steps = false) const { return {Strategy::StarLargest, fuel, steps}; }
};

/// Collects a JSON report or prints text lines, never both.
class Output {
 public:
  explicit Output(const Globals& g, std::string command) : json_(g.json()) {
    report_["command"] = std::move(command);
  }
  Json& report() { return report_; }
  void line(const std::string& s) {
    if (!json_) std::cout << s << "\n";
  }
  void timing(const char* what, double seconds) {
    if (json_) return;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s: %.2fs", what, seconds);
    std::cerr << buf << "\n";
  }
  void input(const std::string& path) {
    report_["inputs"].push_back({{"path", path}, {"sha256", sha256_file(path)}});
  }
  int finish(int code) {
    if (json_) {
      report_["exit"] = code;
      std::cout << report_.dump(2) << "\n";
    }
    return code;
  }

 private:
  bool json_;
  Json report_;
};

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Rational> parse_values(const std::vector<std::string>& vs) {
  std::vector<Rational> out;
  for (auto& v : vs) out.push_back(parse_rational(v));
  return out;
}

std::string join(const std::vector<Monomial>& ms) {
  std::string s;
  for (auto& m : ms) s += (s.empty() ? "" : " ") + to_string(m);
  return s;
}

Json monomial_list(const std::vector<Monomial>& ms) {
  Json a = Json::array();
  for (auto& m : ms) a.push_back(to_string(m));
  return a;
}

// Marked-set inputs are scalar unless they declare parameters and no values are given.
struct MarkedInput {
  std::string path;
  std::optional<int> m;
  std::vector<std::string> values;

  void add_options(CLI::App* sub) {
    sub->add_option("marked-set", path, "marked set file")->required();
    sub->add_option("--m", m, "level m (overrides the file)")->check(CLI::PositiveNumber);
    sub->add_option("--values", values, "values for the declared parameters");
  }
  MarkedSetFile load() const { return load_marked_set(path); }
  bool symbolic(const MarkedSetFile& f) const { return !f.parameters.empty() && values.empty(); }
};

std::string print(const ScalarPoly& f, const MarkedSetFile&) { return to_string(f); }
std::string print(const ParamPoly& f, const MarkedSetFile& file) { return to_string(f, &file.table); }

template <Coefficient C>
Polynomial<C> parse_input(const std::string& s, const MarkedSetFile& file) {
  if constexpr (std::is_same_v<C, Rational>) {
    return parse_poly(s, file.ideal.num_vars());
  } else {
    ParamTable t = file.table;
    auto f = parse_param_poly(s, file.ideal.num_vars(), t);
    if (t.size() != file.table.size()) throw InputError("polynomial uses an undeclared parameter");
    return f;
  }
}

// ------------------------------------------------------------------ ideal commands

int cmd_validate(const Globals& g, const std::string& path) {
  Output out(g, "validate");
  out.input(path);
  try {
    auto f = load_ideal(path);
    const auto& J = f.ideal;
    out.report()["strongly_stable"] = true;
    out.report()["ring"] = ring_name(J.ring());
    out.report()["n"] = J.num_vars();
    out.report()["basis"] = monomial_list(J.basis());
    out.report()["artinian"] = J.is_artinian();
    out.line("strongly stable: yes");
    out.line("ring " + std::string(ring_name(J.ring())) + ", n = " + std::to_string(J.num_vars()) + ", " +
             std::to_string(J.basis().size()) + " generators");
    out.line("basis: " + join(J.basis()));
    out.line(std::string("artinian: ") + (J.is_artinian() ? "yes" : "no"));
    return out.finish(0);
  } catch (const NotStronglyStable& e) {
    out.report()["strongly_stable"] = false;
    out.report()["witness"] = {{"generator", to_string(e.generator)},
                               {"from", e.from_var},
                               {"to", e.to_var},
                               {"image", to_string(e.image)}};
    out.line("strongly stable: no");
    out.line(std::string("witness: ") + e.what());
    return out.finish(1);
  }
}

int cmd_reg_sat(const Globals& g, const std::string& path, bool reg) {
  Output out(g, reg ? "reg" : "sat");
  out.input(path);
  auto J = load_ideal(path).ideal;
  int v = reg ? J.regularity() : J.satiety();
  out.report()[reg ? "regularity" : "satiety"] = v;
  out.line(std::to_string(v));
  return out.finish(0);
}

int cmd_sous_escalier(const Globals& g, const std::string& path, std::optional<int> max_deg) {
  Output out(g, "sous-escalier");
  out.input(path);
  auto J = load_ideal(path).ideal;
  if (!max_deg && !J.is_artinian()) throw InputError("the sous-escalier is infinite; give --max-deg");
  auto N = max_deg ? J.sous_escalier(*max_deg) : J.sous_escalier_all();
  out.report()["count"] = N.size();
  out.report()["monomials"] = monomial_list(N);
  for (auto& x : N) out.line(to_string(x));
  return out.finish(0);
}

int cmd_segment(const Globals& g, const std::string& path, int m, const std::vector<long>& weights_arg) {
  Output out(g, "segment");
  out.input(path);
  auto f = load_ideal(path);
  std::vector<long> w = weights_arg;
  if (w.empty()) {
    if (!f.weights) throw InputError("no weights: give --weights (x_n first) or store them in the ideal file");
    w = *f.weights;
  }
  std::vector<std::int64_t> w64(w.begin(), w.end());
  bool seg = f.ideal.is_affine_segment(m, WeightVector::descending(w64));
  out.report()["m"] = m;
  out.report()["weights"] = w;
  out.report()["segment"] = seg;
  out.line(std::string("affine ") + std::to_string(m) + "-segment: " + (seg ? "yes" : "no"));
  return out.finish(seg ? 0 : 1);
}

// ------------------------------------------------------------------ reduction commands

template <Coefficient C>
int run_reduce(Output& out, const Globals& g, const MarkedSet<C>& G, const MarkedSetFile& file, const std::string& poly,
               bool smallest, bool steps) {
  auto f = parse_input<C>(poly, file);
  auto opt = g.reduce_options(steps);
  if (smallest) opt.strategy = Strategy::StarSmallest;
  auto cert = reduce(f, G, opt);
  out.report()["input"] = print(f, file);
  out.report()["result"] = print(cert.result, file);
  out.report()["steps"] = cert.step_count;
  out.report()["certificate_verified"] = cert.verify(G);
  out.line(print(cert.result, file));
  out.line("steps: " + std::to_string(cert.step_count));
  if (steps) {
    Json st = Json::array();
    for (auto& s : cert.steps) {
      std::string c = print(Polynomial<C>::constant(G.num_vars(), s.coeff), file);
      st.push_back({{"monomial", to_string(s.gamma)},
                    {"coefficient", c},
                    {"cofactor", to_string(s.cofactor)},
                    {"generator", to_string(s.generator)}});
      out.line("  " + to_string(s.gamma) + " = " + to_string(s.generator) + " * " + to_string(s.cofactor) +
               ", coefficient " + c);
    }
    out.report()["certificate"] = std::move(st);
  }
  return out.finish(0);
}

int cmd_reduce(const Globals& g, const MarkedInput& in, const std::string& poly, const std::string& strategy,
               bool steps) {
  Output out(g, "reduce");
  out.input(in.path);
  auto file = in.load();
  bool smallest = strategy == "smallest";
  if (in.symbolic(file)) return run_reduce(out, g, file.symbolic(in.m), file, poly, smallest, steps);
  return run_reduce(out, g, file.scalar(in.m, parse_values(in.values)), file, poly, smallest, steps);
}

template <Coefficient C>
int run_nf(Output& out, const Globals& g, const MarkedSet<C>& G, const MarkedSetFile& file, const std::string& poly) {
  auto f = parse_input<C>(poly, file);
  CheckOptions co;
  co.workers = g.threads();
  co.reduce.fuel = g.fuel;
  if (!check_marked_basis(G, co).is_basis) {
    out.report()["basis"] = false;
    out.line("not a marked basis: normal forms are not defined");
    return out.finish(1);
  }
  auto nf = normal_form(f, G, false, g.reduce_options());
  out.report()["basis"] = true;
  out.report()["normal_form"] = print(nf, file);
  out.line(print(nf, file));
  return out.finish(0);
}

int cmd_nf(const Globals& g, const MarkedInput& in, const std::string& poly) {
  Output out(g, "nf");
  out.input(in.path);
  auto file = in.load();
  if (in.symbolic(file)) return run_nf(out, g, file.symbolic(in.m), file, poly);
  return run_nf(out, g, file.scalar(in.m, parse_values(in.values)), file, poly);
}

template <Coefficient C>
Json failures_json(const std::vector<ConditionFailure<C>>& fs, const MarkedSetFile& file, bool syzygy) {
  Json a = Json::array();
  for (auto& f : fs) {
    Json e{{"head", to_string(f.head)}};
    if (syzygy) e["var"] = "x" + std::to_string(f.var);
    e["residue"] = print(f.residue, file);
    a.push_back(std::move(e));
  }
  return a;
}

template <Coefficient C>
int run_check(Output& out, const Globals& g, const MarkedSet<C>& G, const MarkedSetFile& file, bool force) {
  CheckOptions co;
  co.workers = g.threads();
  co.reduce.fuel = g.fuel;
  co.force_completion = force;
  auto v = check_marked_basis(G, co);
  auto& r = out.report();
  r["m"] = G.level();
  r["basis"] = v.is_basis;
  r["artinian_shortcut"] = v.artinian_shortcut;
  r["syzygy"] = {{"checked", v.syzygy_checked}, {"ok", v.syzygy_ok},
                 {"failures", failures_json(v.syzygy_failures, file, true)}};
  if (v.completion_checked)
    r["completion"] = {{"checked", v.completion_checked_count}, {"ok", v.completion_ok},
                       {"failures", failures_json(v.completion_failures, file, false)}};
  out.line(std::string("marked basis: ") + (v.is_basis ? "yes" : "no") + " (m = " + std::to_string(G.level()) + ")");
  out.line("syzygy condition: " + std::string(v.syzygy_ok ? "holds" : "fails") + " (" +
           std::to_string(v.syzygy_checked) + " checked)");
  for (auto& f : v.syzygy_failures)
    out.line("  x" + std::to_string(f.var) + " * f[" + to_string(f.head) + "] -> " + print(f.residue, file));
  if (v.completion_checked) {
    out.line("completion condition: " + std::string(v.completion_ok ? "holds" : "fails") + " (" +
             std::to_string(v.completion_checked_count) + " checked)");
    for (auto& f : v.completion_failures) out.line("  " + to_string(f.head) + " -> " + print(f.residue, file));
  } else {
    out.line("completion condition: skipped (artinian shortcut)");
  }
  return out.finish(v.is_basis ? 0 : 1);
}

int cmd_check(const Globals& g, const MarkedInput& in, bool force) {
  Output out(g, "check-basis");
  out.input(in.path);
  auto file = in.load();
  if (in.symbolic(file)) return run_check(out, g, file.symbolic(in.m), file, force);
  return run_check(out, g, file.scalar(in.m, parse_values(in.values)), file, force);
}

template <Coefficient C>
int run_completion(Output& out, const Globals& g, const MarkedSet<C>& G, const MarkedSetFile& file) {
  try {
    auto comp = compute_completion(G, g.reduce_options());
    Json a = Json::array();
    for (auto& f : comp.polys) {
      a.push_back({{"head", to_string(f.head)}, {"poly", print(f.poly(), file)}});
      out.line(print(f.poly(), file));
    }
    out.report()["completion"] = std::move(a);
    return out.finish(0);
  } catch (const NoCompletion<C>& e) {
    out.report()["completion"] = nullptr;
    out.report()["obstruction"] = {{"head", to_string(e.beta)}, {"reduced", print(e.reduced, file)}};
    out.line("no completion: " + to_string(e.beta) + " reduces to " + print(e.reduced, file));
    return out.finish(1);
  }
}

int cmd_completion(const Globals& g, const MarkedInput& in) {
  Output out(g, "completion");
  out.input(in.path);
  auto file = in.load();
  if (in.symbolic(file)) return run_completion(out, g, file.symbolic(in.m), file);
  return run_completion(out, g, file.scalar(in.m, parse_values(in.values)), file);
}

int cmd_oracle(const Globals& g, const MarkedInput& in, std::optional<int> max_deg) {
  Output out(g, "oracle");
  out.input(in.path);
  auto file = in.load();
  if (in.symbolic(file)) throw InputError("the oracle needs scalar coefficients; give --values");
  auto G = file.scalar(in.m, parse_values(in.values));
  auto rep = linear_oracle(G, max_deg);
  Json ds = Json::array();
  out.line(std::string("oracle: ") + (rep.pass ? "pass" : "fail") +
           (rep.has_completion ? " (homogeneous lift)" : " (affine direct sum)"));
  for (auto& d : rep.degrees) {
    ds.push_back({{"degree", d.degree}, {"rank", d.rank}, {"expected", d.expected}, {"pass", d.pass}});
    out.line("  degree " + std::to_string(d.degree) + ": rank " + std::to_string(d.rank) + ", expected " +
             std::to_string(d.expected) + (d.pass ? "" : "  FAIL"));
  }
  out.report()["has_completion"] = rep.has_completion;
  out.report()["degrees"] = std::move(ds);
  out.report()["pass"] = rep.pass;
  return out.finish(rep.pass ? 0 : 1);
}

// ------------------------------------------------------------------ homogeneous side

void emit_json(Output& out, const Json& j, const std::optional<std::string>& path) {
  if (path) {
    std::ofstream f(*path, std::ios::binary);
    if (!f) throw InputError("cannot write " + *path);
    f << j.dump(2) << "\n";
    out.report()["out"] = *path;
    out.line("wrote " + *path);
  } else {
    out.report()["result"] = j;
    out.line(j.dump(2));
  }
}

int cmd_homogenize(const Globals& g, const MarkedInput& in, const std::optional<std::string>& dest) {
  Output out(g, "homogenize");
  out.input(in.path);
  auto file = in.load();
  if (in.symbolic(file)) throw InputError("homogenize needs scalar coefficients; give --values");
  auto G = file.scalar(in.m, parse_values(in.values));
  try {
    auto comp = compute_completion(G, g.reduce_options());
    emit_json(out, marked_set_to_json(lift_to_homogeneous(G, comp)), dest);
    return out.finish(0);
  } catch (const NoCompletion<Rational>& e) {
    out.report()["obstruction"] = {{"head", to_string(e.beta)}, {"reduced", to_string(e.reduced)}};
    out.line(std::string("cannot homogenize: ") + e.what());
    return out.finish(1);
  }
}

int cmd_dehomogenize(const Globals& g, const std::string& path, std::optional<int> m,
                     const std::optional<std::string>& dest) {
  Output out(g, "dehomogenize");
  out.input(path);
  auto file = load_marked_set(path);
  auto H = file.homogeneous(m);
  auto [G, comp] = drop_to_affine(H);
  Json j = marked_set_to_json(G);
  Json c = Json::array();
  for (auto& f : comp.polys) c.push_back({{"head", to_string(f.head)}, {"poly", to_string(f.poly())}});
  j["completion"] = std::move(c);
  emit_json(out, j, dest);
  return out.finish(0);
}

// ------------------------------------------------------------------ scheme commands

void scheme_report(Output& out, const SchemeIdeal& S) {
  auto [lo, hi] = S.degree_range();
  Json hist = Json::object();
  for (auto& [d, c] : S.degree_histogram()) hist[std::to_string(d)] = c;
  auto& r = out.report();
  r["level"] = S.level;
  r["optimized_level"] = S.optimized_level;
  r["reduction2"] = S.reduction2_skipped ? "skipped" : "run";
  r["parameters"] = S.catalogue.size();
  r["equations"] = {{"raw", S.raw_count}, {"dedup", S.generators.size()}};
  r["degrees"] = {{"min", lo}, {"max", hi}, {"histogram", hist}};
  out.line("level " + std::to_string(S.level) + ", optimized level " + std::to_string(S.optimized_level) +
           ", reduction2 " + (S.reduction2_skipped ? "skipped" : "run"));
  out.line("parameters: " + std::to_string(S.catalogue.size()));
  out.line("equations: " + std::to_string(S.raw_count) + " raw, " + std::to_string(S.generators.size()) +
           " after removing duplicates");
  out.line("degrees: [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  std::string h;
  for (auto& [d, c] : S.degree_histogram()) h += (h.empty() ? "" : ", ") + std::to_string(d) + ": " + std::to_string(c);
  out.line("degree histogram: " + h);
}

void write_scheme_file(Output& out, const SchemeIdeal& S, const std::optional<std::string>& dest) {
  if (!dest) return;
  std::ofstream f(*dest, std::ios::binary);
  if (!f) throw InputError("cannot write " + *dest);
  write_scheme(f, S);
  out.report()["out"] = *dest;
  out.line("wrote " + *dest);
}

int cmd_scheme(const Globals& g, const std::string& path, int m, const std::optional<std::string>& dest) {
  Output out(g, "scheme");
  out.input(path);
  auto J = load_ideal(path).ideal;
  SchemeOptions opt;
  opt.workers = g.threads();
  opt.fuel = g.fuel;
  auto t0 = std::chrono::steady_clock::now();
  auto S = marked_scheme(J, m, opt);
  out.timing("time", since(t0));
  scheme_report(out, S);
  write_scheme_file(out, S, dest);
  return out.finish(0);
}

int cmd_hilbert_open(const Globals& g, const std::string& path, const std::optional<std::string>& dest) {
  Output out(g, "hilbert-open");
  out.input(path);
  auto J = load_ideal(path).ideal;
  if (J.ring() != Ring::S) throw InputError("hilbert-open expects a saturated ideal of S");
  SchemeOptions opt;
  opt.workers = g.threads();
  opt.fuel = g.fuel;
  auto t0 = std::chrono::steady_clock::now();
  auto S = hilbert_open_subset(J, opt);
  out.timing("time", since(t0));
  scheme_report(out, S);
  write_scheme_file(out, S, dest);
  return out.finish(0);
}

int cmd_point(const Globals& g, const std::string& scheme_path, const MarkedInput& in,
              const std::optional<std::string>& dest) {
  Output out(g, "point");
  out.input(scheme_path);
  out.input(in.path);
  auto S = load_scheme(scheme_path);
  auto file = in.load();
  if (in.symbolic(file)) throw InputError("a point needs scalar coefficients; give --values");
  auto G = file.scalar(in.m, parse_values(in.values));
  try {
    auto p = point_from_basis(S, G, g.threads());
    out.report()["on_scheme"] = true;
    emit_json(out, point_to_json(p), dest);
    return out.finish(0);
  } catch (const NotOnScheme& e) {
    out.report()["on_scheme"] = false;
    out.report()["generator"] = e.generator;
    out.report()["provenance"] = S.generators[e.generator].provenance.describe();
    out.line(e.what());
    return out.finish(1);
  }
}

int cmd_tangent(const Globals& g, const std::string& scheme_path, const std::string& point_path,
                const std::vector<std::string>& values) {
  Output out(g, "tangent");
  out.input(scheme_path);
  out.input(point_path);
  auto S = load_scheme(scheme_path);
  auto j = read_json_file(point_path);
  FamilyPoint p;
  if (j.contains("polys")) {
    auto file = marked_set_from_json(j, std::filesystem::path(point_path).parent_path());
    p = point_coordinates(S.catalogue, file.scalar(std::nullopt, parse_values(values)));
  } else {
    p = point_from_json(j);
  }
  if (p.values.size() != S.catalogue.size())
    throw InputError("point has " + std::to_string(p.values.size()) + " coordinates, the scheme has " +
                     std::to_string(S.catalogue.size()) + " parameters");
  try {
    auto t0 = std::chrono::steady_clock::now();
    auto t = tangent_dimension(S, p, g.threads());
    out.timing("time", since(t0));
    out.report()["parameters"] = S.catalogue.size();
    out.report()["tangent_dimension"] = t;
    out.line(std::to_string(t));
    return out.finish(0);
  } catch (const NotOnScheme& e) {
    out.report()["on_scheme"] = false;
    out.report()["generator"] = e.generator;
    out.line(e.what());
    return out.finish(1);
  }
}

int cmd_hilbert(const Globals& g, const std::string& path, bool affine, std::optional<int> at) {
  Output out(g, "hilbert");
  out.input(path);
  auto J = load_ideal(path).ideal;
  auto P = hilbert_polynomial(J, affine);
  out.report()["affine"] = affine;
  out.report()["polynomial"] = to_string(P);
  out.line((affine ? "affine Hilbert polynomial: " : "Hilbert polynomial: ") + to_string(P));
  if (at) {
    auto v = hilbert_function(J, *at, affine);
    out.report()["at"] = *at;
    out.report()["value"] = v;
    out.line((affine ? "affine Hilbert function at " : "Hilbert function at ") + std::to_string(*at) + ": " +
             std::to_string(v));
  }
  return out.finish(0);
}

// ------------------------------------------------------------------ fixtures

int cmd_fixtures_list(const Globals& g) {
  Output out(g, "fixtures list");
  Json a = Json::array();
  for (auto& c : suite::fixture_checks()) {
    a.push_back({{"name", c.name}, {"summary", c.summary}});
    out.line(c.name + "  " + c.summary);
  }
  for (auto& c : suite::criteria()) {
    std::string name = "criterion" + std::to_string(c.number);
    a.push_back({{"name", name}, {"summary", c.title}});
    out.line(name + "  " + c.title);
  }
  a.push_back({{"name", "acceptance"}, {"summary", "all eight criteria"}});
  out.line("acceptance  all eight criteria");
  out.report()["fixtures"] = std::move(a);
  return out.finish(0);
}

int cmd_fixtures_run(const Globals& g, const std::string& name, const std::string& dir) {
  Output out(g, "fixtures run");
  suite::FixtureContext ctx;
  ctx.dir = dir;
  ctx.workers = g.threads();
  auto checks = suite::fixture_checks();
  auto result_json = [](const props::PropertyResult& r) {
    return Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
  };
  if (auto* c = suite::find_check(checks, name)) {
    auto r = c->run(ctx);
    out.report()["results"] = Json::array({result_json(r)});
    out.line(std::string(r.pass ? "PASS " : "FAIL ") + r.name + ": " + r.detail);
    return out.finish(r.pass ? 0 : 1);
  }
  bool all = true, found = false;
  Json rs = Json::array();
  for (auto& c : suite::criteria()) {
    if (name != "acceptance" && name != "criterion" + std::to_string(c.number)) continue;
    found = true;
    auto r = suite::run_criterion(c, ctx);
    all = all && r.pass;
    Json parts = Json::array();
    for (auto& p : r.parts) parts.push_back(result_json(p));
    rs.push_back({{"criterion", r.number}, {"title", r.title}, {"pass", r.pass}, {"parts", std::move(parts)}});
    out.line("criterion " + std::to_string(r.number) + ": " + (r.pass ? "PASS" : "FAIL") + "  " + r.title);
    for (auto& p : r.parts) out.line(std::string("    ") + (p.pass ? "ok   " : "FAIL ") + p.name + ": " + p.detail);
  }
  if (!found) throw InputError("unknown fixture '" + name + "'; see `fixtures list`");
  out.report()["results"] = std::move(rs);
  return out.finish(all ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Marked bases over strongly stable ideals"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--workers", g.workers, "worker threads (default: MARKEDBASES_WORKERS or all cores)");
  app.add_option("--fuel", g.fuel, "maximum reduction steps per reduce call")->check(CLI::PositiveNumber);
  app.fallthrough();

  std::string ideal_path, scheme_path, point_path, poly, strategy = "largest", fixture_name;
  std::string fixtures_dir = MARKEDBASES_FIXTURE_DIR;
  std::optional<int> max_deg, at, m_opt;
  std::optional<std::string> out_path;
  std::vector<long> weights;
  std::vector<std::string> tangent_values;
  int m = 0;
  bool affine = false, steps = false, force = false;
  MarkedInput in;
  std::function<int()> action;

  auto ideal_cmd = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("ideal", ideal_path, "ideal file")->required();
    return s;
  };

  ideal_cmd("validate", "check strong stability")->callback([&] { action = [&] { return cmd_validate(g, ideal_path); }; });
  ideal_cmd("reg", "regularity")->callback([&] { action = [&] { return cmd_reg_sat(g, ideal_path, true); }; });
  ideal_cmd("sat", "satiety")->callback([&] { action = [&] { return cmd_reg_sat(g, ideal_path, false); }; });
  auto* se = ideal_cmd("sous-escalier", "monomials outside the ideal");
  se->add_option("--max-deg", max_deg, "degree bound");
  se->callback([&] { action = [&] { return cmd_sous_escalier(g, ideal_path, max_deg); }; });
  auto* seg = ideal_cmd("segment", "affine m-segment test");
  seg->add_option("--m", m, "level")->required()->check(CLI::PositiveNumber);
  seg->add_option("--weights", weights, "weights for x_n..x_1 (default: from the file)");
  seg->callback([&] { action = [&] { return cmd_segment(g, ideal_path, m, weights); }; });

  auto* red = app.add_subcommand("reduce", "G*-reduction of a polynomial with its certificate");
  in.add_options(red);
  red->add_option("poly", poly, "polynomial")->required();
  red->add_option("--strategy", strategy, "largest or smallest")->check(CLI::IsMember({"largest", "smallest"}));
  red->add_flag("--steps", steps, "print the certificate");
  red->callback([&] { action = [&] { return cmd_reduce(g, in, poly, strategy, steps); }; });

  auto* nf = app.add_subcommand("nf", "normal form modulo a verified basis");
  in.add_options(nf);
  nf->add_option("poly", poly, "polynomial")->required();
  nf->callback([&] { action = [&] { return cmd_nf(g, in, poly); }; });

  auto* cb = app.add_subcommand("check-basis", "marked-basis criterion");
  in.add_options(cb);
  cb->add_flag("--force-completion", force, "evaluate the completion condition even under the artinian shortcut");
  cb->callback([&] { action = [&] { return cmd_check(g, in, force); }; });

  auto* cp = app.add_subcommand("completion", "completion of a marked set");
  in.add_options(cp);
  cp->callback([&] { action = [&] { return cmd_completion(g, in); }; });

  auto* orc = app.add_subcommand("oracle", "linear-algebra cross-check");
  in.add_options(orc);
  orc->add_option("--max-deg", max_deg, "highest degree tested");
  orc->callback([&] { action = [&] { return cmd_oracle(g, in, max_deg); }; });

  auto* hom = app.add_subcommand("homogenize", "lift a marked set and its completion to S");
  in.add_options(hom);
  hom->add_option("--out", out_path, "output file");
  hom->callback([&] { action = [&] { return cmd_homogenize(g, in, out_path); }; });

  auto* deh = app.add_subcommand("dehomogenize", "drop a J_{>=m}-marked set of S to R");
  deh->add_option("marked-set", ideal_path, "marked set over an ideal of S")->required();
  deh->add_option("--m", m_opt, "level m (overrides the file)")->check(CLI::PositiveNumber);
  deh->add_option("--out", out_path, "output file");
  deh->callback([&] { action = [&] { return cmd_dehomogenize(g, ideal_path, m_opt, out_path); }; });

  auto* sch = ideal_cmd("scheme", "equations of the marked family");
  sch->add_option("--m", m, "level")->required()->check(CLI::PositiveNumber);
  sch->add_option("--out", out_path, "scheme file");
  sch->callback([&] { action = [&] { return cmd_scheme(g, ideal_path, m, out_path); }; });

  auto* ho = ideal_cmd("hilbert-open", "open subset of the Hilbert scheme for a saturated ideal of S");
  ho->add_option("--out", out_path, "scheme file");
  ho->callback([&] { action = [&] { return cmd_hilbert_open(g, ideal_path, out_path); }; });

  auto* pt = app.add_subcommand("point", "coordinates of a marked basis on a scheme");
  pt->add_option("scheme", scheme_path, "scheme file")->required();
  in.add_options(pt);
  pt->add_option("--out", out_path, "point file");
  pt->callback([&] { action = [&] { return cmd_point(g, scheme_path, in, out_path); }; });

  auto* tg = app.add_subcommand("tangent", "Zariski tangent space dimension at a point");
  tg->add_option("scheme", scheme_path, "scheme file")->required();
  tg->add_option("point", point_path, "point file or marked set")->required();
  tg->add_option("--values", tangent_values, "parameter values when the point is a marked set");
  tg->callback([&] { action = [&] { return cmd_tangent(g, scheme_path, point_path, tangent_values); }; });

  auto* hb = ideal_cmd("hilbert", "Hilbert polynomial and function");
  hb->add_flag("--affine", affine, "affine variant (ideals of R)");
  hb->add_option("--at", at, "evaluate the Hilbert function at t")->check(CLI::NonNegativeNumber);
  hb->callback([&] { action = [&] { return cmd_hilbert(g, ideal_path, affine, at); }; });

  auto* fx = app.add_subcommand("fixtures", "the shipped fixture corpus");
  fx->require_subcommand(1);
  fx->add_option("--fixtures-dir", fixtures_dir, "fixture directory");
  fx->add_subcommand("list", "list fixture checks")->callback([&] { action = [&] { return cmd_fixtures_list(g); }; });
  auto* fr = fx->add_subcommand("run", "run a fixture check, a criterion, or `acceptance`");
  fr->add_option("name", fixture_name, "check name")->required();
  fr->callback([&] { action = [&] { return cmd_fixtures_run(g, fixture_name, fixtures_dir); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
