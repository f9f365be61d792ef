#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "gzbt/function_field/normalize.hpp"
#include "gzbt/quotient/quotient.hpp"

namespace gzbt::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Bad input that is the caller's fault rather than a mathematical failure.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string field, kind, rho, sigma, tau, curve_file;
  std::string coeffs, format = "text", output, group = "gl2", input;
  long depth = 10;
  std::size_t witnesses = 10;
  unsigned seed = 0;
};

struct CurveSpec {
  std::string field, kind, rho, sigma, tau;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

/// `key = value` lines with keys field, case, rho, sigma, tau; `#` starts a comment.
std::map<std::string, std::string> read_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read curve file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(no) + ": expected key = value");
    auto key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key != "field" && key != "case" && key != "rho" && key != "sigma" && key != "tau")
      throw UsageError(path + ":" + std::to_string(no) + ": unknown key '" + key + "'");
    if (out.count(key)) throw UsageError(path + ":" + std::to_string(no) + ": duplicate key '" + key + "'");
    out[key] = value;
  }
  return out;
}

CurveSpec curve_spec(const Options& o, std::ostream& err, bool need_conic) {
  std::map<std::string, std::string> file;
  if (!o.curve_file.empty()) file = read_curve_file(o.curve_file);
  auto pick = [&](const std::string& key, const std::string& inline_value) {
    auto it = file.find(key);
    if (it == file.end()) return inline_value;
    if (inline_value.empty()) return it->second;
    if (inline_value != it->second)
      err << "warning: --" << key << " " << inline_value << " overrides " << key << " = " << it->second << " from "
          << o.curve_file << "\n";
    return inline_value;
  };
  CurveSpec s{pick("field", o.field), pick("case", o.kind), pick("rho", o.rho), pick("sigma", o.sigma),
              pick("tau", o.tau)};
  if (s.field.empty()) throw UsageError("missing --field");
  if (need_conic) {
    if (s.kind.empty()) throw UsageError("missing --case");
    if (s.rho.empty()) throw UsageError("missing --rho");
    if (s.sigma.empty()) throw UsageError("missing --sigma");
  }
  return s;
}

/// Calls fn with the constant field named by the descriptor.
template <class Fn>
int with_field(const ConstantFieldDescriptor& d, Fn&& fn) {
  switch (d.kind) {
    case FieldKind::QExact:
    case FieldKind::RealClosedModel:
    case FieldKind::QpClassesOnly: return fn(make_rational_constants(d));
    case FieldKind::RealLaurentModel: return fn(make_laurent_constants());
    case FieldKind::FqRationalFunc:
    case FieldKind::F2rRationalFunc: return fn(make_finite_function_constants(d));
  }
  throw UsageError("unsupported field");
}

template <class F>
ConicData<typename F::Elem> conic_data(const ConstantField<F>& k, const CurveSpec& s) {
  const auto kind = parse_conic_case(s.kind);
  const auto& f = k.arith;
  auto tau = s.tau.empty() ? (kind == ConicCase::III ? f.one() : f.zero()) : parse_constant(k, s.tau);
  return {kind, parse_constant(k, s.rho), parse_constant(k, s.sigma), tau};
}

template <class F>
Json validation_json(const Curve<F>& c, const ValidationReport& rep) {
  Json j = Json::object();
  j["field"] = c.k.desc.name();
  j["case"] = to_string(c.kind());
  j["equation"] = c.equation();
  j["status"] = rep.status == ValidationStatus::Ok ? "ok" : rep.status == ValidationStatus::Violations ? "violations"
                                                                                                        : "inconclusive";
  j["violations"] = Json::array();
  for (const auto& v : rep.violations) j["violations"].push_back({{"code", to_string(v.code)}, {"message", v.message}});
  j["notes"] = rep.notes;
  return j;
}

void list_violations(const ValidationReport& rep, std::ostream& err) {
  for (const auto& v : rep.violations) err << "violation: " << to_string(v.code) << ": " << v.message << "\n";
  if (rep.status == ValidationStatus::Inconclusive)
    for (const auto& n : rep.notes) err << "inconclusive: " << n << "\n";
}

/// The validated curve, or nullopt after listing the violations.
template <class F>
std::optional<Curve<F>> checked_curve(const ConstantField<F>& k, const CurveSpec& s, std::ostream& err) {
  Curve<F> c{k, conic_data(k, s)};
  auto rep = validate_curve(c);
  if (rep.ok()) return c;
  list_violations(rep, err);
  return std::nullopt;
}

template <class F>
std::string affine_to_string(const F& f, const AffineForm<typename F::Elem>& a) {
  std::string out;
  auto term = [&](const typename F::Elem& c, const std::string& var) {
    if (f.is_zero(c)) return;
    std::string t = var.empty() ? f.to_string(c) : f.is_one(c) ? var : f.to_string_atomic(c) + "*" + var;
    if (!out.empty() && t[0] != '-') out += "+";
    out += t;
  };
  term(a.cx, "x");
  term(a.cy, "y");
  term(a.c0, "");
  return out.empty() ? "0" : out;
}

template <class F>
std::string det_form_text(const Curve<F>& c) {
  const auto& f = c.k.arith;
  auto r = f.to_string_atomic(c.rho()), s = f.to_string_atomic(c.sigma());
  if (c.kind() == ConicCase::IV)
    return "alpha^2 + alpha*beta + " + r + "*beta^2 + " + s + "*(gamma^2 + gamma*delta + " + r + "*delta^2)";
  std::string out = "alpha^2 + " + r + "*beta^2";
  if (!f.is_zero(c.tau())) out += " + " + f.to_string_atomic(c.tau()) + "*(alpha*delta - beta*gamma)";
  return out + " + " + s + "*(gamma^2 + " + r + "*delta^2)";
}

template <class F>
Json orbit_json(const FunctionField<F>& K, const OrbitVerificationReport<F>& rep) {
  (void)K;
  Json j = Json::object();
  j["depth"] = rep.depth;
  j["failures"] = rep.failures();
  j["checks"] = Json::array();
  for (const auto& c : rep.checks) {
    Json r = Json::object();
    for (const auto& [what, ok] : c.results) r[what] = ok;
    j["checks"].push_back({{"vertex", c.vertex}, {"neighbor", c.neighbor}, {"claimed", c.claimed}, {"results", r}});
  }
  return j;
}

template <class F>
void list_failures(const OrbitVerificationReport<F>& rep, std::ostream& err) {
  for (const auto& c : rep.checks)
    for (const auto& [what, ok] : c.results)
      if (!ok) err << "failed: " << c.neighbor << " -> " << c.claimed << ": " << what << "\n";
}

std::string quotient_text(const QuotientGraph& g) {
  std::ostringstream o;
  o << "lifts of v_*: " << g.vstar_lifts.size() << "\n";
  for (const auto& e : g.edges)
    if (is_vstar_id(e.from)) {
      o << "  " << e.from << " (coset " << g.vstar_lifts[std::stoul(e.from.substr(6))].coset_witness
        << "): " << e.multiplicity.to_string() << " edge(s) to v0";
      if (!e.witnesses.empty()) {
        o << "; witnesses";
        for (const auto& w : e.witnesses) o << " " << w;
      }
      o << "\n";
    }
  o << "ray: v0 .. v" << g.truncated_at << " (continues)\n";
  o << "free rank: " << free_rank(g).to_string() << "\n";
  return o.str();
}

// ---------------------------------------------------------------- commands

template <class F>
int cmd_validate(const ConstantField<F>& k, const CurveSpec& s, const Options& o, std::ostream& out,
                 std::ostream& err) {
  Curve<F> c{k, conic_data(k, s)};
  auto rep = validate_curve(c);
  if (o.format == "json") out << validation_json(c, rep).dump(2) << "\n";
  else out << (rep.ok() ? "valid" : rep.status == ValidationStatus::Inconclusive ? "inconclusive" : "invalid") << "\n";
  list_violations(rep, err);
  return rep.ok() ? Exit::Ok : Exit::Failed;
}

template <class F>
int cmd_normalize(const ConstantField<F>& k, const Options& o, std::ostream& out) {
  std::vector<typename F::Elem> cs;
  std::stringstream ss(o.coeffs);
  for (std::string part; std::getline(ss, part, ',');) cs.push_back(parse_constant(k, trim(part)));
  if (cs.size() != 6) throw UsageError("--coeffs needs six comma-separated elements (y^2, xy, x^2, x, y, 1)");
  auto n = normalize_conic(k, QuadraticCoeffs<typename F::Elem>{cs[0], cs[1], cs[2], cs[3], cs[4], cs[5]});
  const auto& f = k.arith;
  const auto& c = n.curve;
  Json j = Json::object();
  j["case"] = to_string(c.kind());
  j["rho"] = f.to_string(c.rho());
  j["sigma"] = f.to_string(c.sigma());
  j["tau"] = f.to_string(c.tau());
  j["equation"] = c.equation();
  j["x'"] = affine_to_string(f, n.substitution.x_new);
  j["y'"] = affine_to_string(f, n.substitution.y_new);
  j["scale"] = f.to_string(n.substitution.scale);
  if (o.format == "json") out << j.dump(2) << "\n";
  else
    for (auto it = j.begin(); it != j.end(); ++it) out << it.key() << ": " << it.value().get<std::string>() << "\n";
  return Exit::Ok;
}

template <class F>
int cmd_stab(const Curve<F>& curve, const Options& o, std::ostream& out, std::ostream& err) {
  FunctionField<F> K(element_model(curve));
  const auto B = quaternion_basis(K);
  Json j = Json::object();
  j["equation"] = curve.equation();
  j["ray"] = Json::array();
  for (long n = 0; n <= o.depth; ++n) {
    auto d = stab_ray_description(K, n);
    Json b = Json::array();
    for (const auto& e : d.b_space) b.push_back(K.to_string(e));
    j["ray"].push_back({{"vertex", ray_id(n)}, {"stabilizer", d.text}, {"b_space", b}});
  }
  j["vstar"] = {{"stabilizer", stab_vstar_description(K).text},
                {"U", mat_to_string(K, B.U)},
                {"V", mat_to_string(K, B.V)},
                {"W", mat_to_string(K, B.W)},
                {"det", det_form_text(curve)}};
  j["estar"] = edge_stabilizer_estar(K).text;
  auto sc = structure_check(K, o.seed);
  Json checks = Json::object();
  for (const auto& c : sc.checks)
    checks[c] = std::find(sc.failures.begin(), sc.failures.end(), c) == sc.failures.end();
  j["structure"] = checks;
  auto am = amalgam_report(K, 50, o.seed);
  std::size_t bad = 0;
  for (const auto& s : am.samples) bad += s.ok() ? 0 : 1;
  j["amalgam"] = {{"A", am.a_description},
                  {"B", am.b_description},
                  {"C", am.c_description},
                  {"C_isomorphism", am.c_isomorphism},
                  {"samples", am.samples.size()},
                  {"failures", bad}};
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << "curve: " << curve.equation() << "\n";
    for (const auto& r : j["ray"]) out << "S(" << r["vertex"].get<std::string>() << "): " << r["stabilizer"].get<std::string>() << "\n";
    out << "S(vstar): " << j["vstar"]["stabilizer"].get<std::string>() << "\n";
    for (const char* m : {"U", "V", "W"}) out << "  " << m << " = " << j["vstar"][m].get<std::string>() << "\n";
    out << "  det = " << j["vstar"]["det"].get<std::string>() << "\n";
    out << "S(e_*): " << j["estar"].get<std::string>() << "\n";
    out << "structure: " << sc.checks.size() << " checks, " << sc.failures.size() << " failed\n";
    for (const auto& c : sc.checks) out << "  " << (checks[c].template get<bool>() ? "ok   " : "FAIL ") << c << "\n";
    out << "amalgam: A = S(pi, t), B = GE_2(C), C = {alpha I + beta U}\n";
    out << "  " << am.c_isomorphism << "\n";
    out << "  " << am.samples.size() << " samples of C, " << bad << " failed double membership or factorization\n";
  }
  for (const auto& f : sc.failures) err << "failed: " << f << "\n";
  if (bad) err << "failed: " << bad << " amalgam samples\n";
  return sc.ok() && am.ok() ? Exit::Ok : Exit::Failed;
}

template <class F>
int cmd_orbit_verify(const Curve<F>& curve, const Options& o, std::ostream& out, std::ostream& err) {
  FunctionField<F> K(element_model(curve));
  auto ray = verify_ray_orbits(K, o.depth, default_residue_samples(K, 4, o.seed), o.seed);
  auto vs = verify_vstar_orbit(K, default_vstar_samples(K, 20, o.seed));
  const bool pass = ray.ok() && vs.ok();
  if (o.format == "json") {
    Json j = Json::object();
    j["ray"] = orbit_json(K, ray);
    j["vstar"] = orbit_json(K, vs);
    j["passed"] = pass;
    out << j.dump(2) << "\n";
  } else {
    out << "ray orbits up to v" << o.depth << ": " << ray.checks.size() << " checks, " << ray.failures() << " failed\n";
    out << "vstar orbit: " << vs.checks.size() << " checks, " << vs.failures() << " failed\n";
    out << "result: " << (pass ? "pass" : "FAIL") << "\n";
  }
  list_failures(ray, err);
  list_failures(vs, err);
  return pass ? Exit::Ok : Exit::Failed;
}

std::string render_graph(const QuotientGraph& g, const std::string& format) {
  if (format == "dot") return export_dot(g);
  if (format == "text") return quotient_text(g);
  return export_json(g);
}

template <class F>
int cmd_quotient(const Curve<F>& curve, const Options& o, std::ostream& out) {
  QuotientGraph g;
  if (o.group == "gl2") {
    FunctionField<F> K(element_model(curve));
    g = build_gl2_quotient(K, o.depth, o.seed);
  } else {
    g = build_sl2_quotient(curve, o.depth, o.witnesses);
  }
  out << render_graph(g, o.format);
  return Exit::Ok;
}

template <class F>
int cmd_witnesses(const Curve<F>& curve, const Options& o, std::ostream& out, std::ostream& err) {
  const auto& k = curve.k;
  auto rep = norm_coset_report(k, curve.conic, o.witnesses);
  const bool vdist = vertex_witnesses_distinct(k, curve.conic, rep.vertex_class_witnesses);
  const bool edist = witnesses_pairwise_distinct(k, curve.conic, rep.edge_class_witnesses);
  Json j = Json::object();
  j["vertex_class_count"] = detail::count_json(rep.vertex_class_count);
  j["vertex_class_witnesses"] = Json::array();
  for (const auto& w : rep.vertex_class_witnesses) j["vertex_class_witnesses"].push_back(k->to_string(w));
  j["edge_classes_per_vertex"] = detail::count_json(rep.edge_classes_per_vertex);
  j["edge_class_witnesses"] = Json::array();
  for (const auto& w : rep.edge_class_witnesses) j["edge_class_witnesses"].push_back(k->to_string(w));
  j["power_of_two"] = power_of_two_check(rep);
  j["witnesses_distinct"] = vdist && edist;
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << "lifts of v_* (k*/det S(v_*)): " << rep.vertex_class_count.to_string() << "\n";
    for (const auto& w : j["vertex_class_witnesses"]) out << "  " << w.get<std::string>() << "\n";
    out << "edges per lift (det S(v_*)/det S(e_*)): " << rep.edge_classes_per_vertex.to_string() << "\n";
    for (const auto& w : j["edge_class_witnesses"]) out << "  " << w.get<std::string>() << "\n";
    out << "power of two: " << (power_of_two_check(rep) ? "yes" : "no") << "\n";
    out << "witnesses pairwise distinct: " << (vdist && edist ? "yes" : "no") << "\n";
  }
  if (!vdist || !edist) err << "failed: witnesses are not in distinct classes\n";
  return vdist && edist ? Exit::Ok : Exit::Failed;
}

int cmd_export(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw UsageError("export needs --input");
  std::ifstream in(o.input);
  if (!in) throw UsageError("cannot read '" + o.input + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  out << render_graph(graph_from_json(buf.str()), o.format == "text" ? "json" : o.format);
  return Exit::Ok;
}

int dispatch(const std::string& cmd, const Options& o, std::ostream& out, std::ostream& err) {
  if (cmd == "export") return cmd_export(o, out);
  const auto spec = curve_spec(o, err, cmd != "normalize");
  const auto desc = ConstantFieldDescriptor::parse(spec.field);
  return with_field(desc, [&](const auto& k) -> int {
    using F = typename std::decay_t<decltype(k)>::Arith;
    if (cmd == "validate") return cmd_validate(k, spec, o, out, err);
    if (cmd == "normalize") return cmd_normalize(k, o, out);
    auto curve = checked_curve<F>(k, spec, err);
    if (!curve) return Exit::Failed;
    if (cmd == "stab") return cmd_stab(*curve, o, out, err);
    if (cmd == "orbit-verify") return cmd_orbit_verify(*curve, o, out, err);
    if (cmd == "quotient") return cmd_quotient(*curve, o, out);
    return cmd_witnesses(*curve, o, out, err);
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Quotients of GL_2 and SL_2 of genus zero curve rings acting on the Bruhat-Tits tree", "gzbt"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto add_curve = [&](CLI::App* s) {
    s->add_option("--field", o.field, "Constant field: Q, R, R((u)), Qp(p), GF(q)(u), GF(p^r)(u)");
    s->add_option("--case", o.kind, "Normal form: I, II, III or IV")->check(CLI::IsMember({"I", "II", "III", "IV"}));
    s->add_option("--rho", o.rho, "rho as a field element");
    s->add_option("--sigma", o.sigma, "sigma as a field element");
    s->add_option("--tau", o.tau, "tau (1 in case III, 0 otherwise)");
    s->add_option("--curve", o.curve_file, "Curve file of key = value lines; inline flags take precedence");
  };
  auto add_io = [&](CLI::App* s, std::vector<std::string> formats) {
    o.format = formats.front();
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    s->add_option("--output", o.output, "Write the report to this file");
  };
  auto depth_help = "Ray depth N (default 10)";

  auto* validate = app.add_subcommand("validate", "Check that the curve is a pointless conic in normal form");
  add_curve(validate);
  auto* normalize = app.add_subcommand("normalize", "Bring a conic to normal form");
  normalize->add_option("--field", o.field, "Constant field")->required();
  normalize->add_option("--coeffs", o.coeffs, "Coefficients of y^2, xy, x^2, x, y, 1, comma separated")->required();
  auto* stab = app.add_subcommand("stab", "Vertex and edge stabilizers, quaternion structure, amalgam report");
  add_curve(stab);
  stab->add_option("--depth", o.depth, depth_help)->check(CLI::NonNegativeNumber);
  stab->add_option("--seed", o.seed, "Sampling seed (default 0)");
  auto* orbit = app.add_subcommand("orbit-verify", "Verify the orbit structure at v_*, v_0 .. v_N");
  add_curve(orbit);
  orbit->add_option("--depth", o.depth, depth_help)->check(CLI::PositiveNumber);
  orbit->add_option("--seed", o.seed, "Sampling seed (default 0)");
  auto* quotient = app.add_subcommand("quotient", "Quotient graph of GL_2(C) or SL_2(C)");
  add_curve(quotient);
  quotient->add_option("--group", o.group, "gl2 or sl2")->check(CLI::IsMember({"gl2", "sl2"}));
  quotient->add_option("--depth", o.depth, depth_help)->check(CLI::PositiveNumber);
  quotient->add_option("--witnesses", o.witnesses, "Witness budget for infinite multiplicities (default 10)");
  quotient->add_option("--seed", o.seed, "Sampling seed (default 0)");
  auto* witnesses = app.add_subcommand("witnesses", "Norm classes above v_* and e_* with witnesses");
  add_curve(witnesses);
  witnesses->add_option("--witnesses", o.witnesses, "Witness budget (default 10)");
  auto* exp = app.add_subcommand("export", "Convert a graph JSON file to JSON or DOT");
  exp->add_option("--input", o.input, "Graph JSON file")->required();

  std::vector<std::string> text_json{"text", "json"};
  for (auto* s : {validate, normalize, stab, orbit, witnesses}) add_io(s, text_json);
  add_io(quotient, {"json", "dot", "text"});
  add_io(exp, {"json", "dot"});
  // add_io sets the default per subcommand; restore it once the subcommand is known
  std::vector<std::string> argv_store{"gzbt"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  o.format.clear();
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Exit::Ok : Exit::Usage;
  }
  auto* sub = app.get_subcommands().front();
  const std::string cmd = sub->get_name();
  if (o.format.empty()) o.format = (cmd == "quotient" || cmd == "export") ? "json" : "text";

  std::ostringstream report;
  int code = Exit::Ok;
  try {
    code = dispatch(cmd, o, report, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return Exit::Usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::Parse) return Exit::Usage;
    code = Exit::Failed;
  }
  if (o.output.empty()) {
    out << report.str();
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << o.output << "'\n";
      return Exit::Failed;
    }
    f << report.str();
  }
  return code;
}

}  // namespace gzbt::cli
