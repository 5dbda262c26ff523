#include "core/report.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "core/errors.hpp"
#include "core/polynomial.hpp"
#include "core/q8.hpp"
#include "core/rep_type.hpp"
#include "core/root_system.hpp"
#include "core/spectrum.hpp"
#include "core/sphere_sym.hpp"
#include "core/su2_lab.hpp"
#include "core/version.hpp"

namespace lsp {
namespace report {
namespace {

// Insertion order is preserved, so reports keep a fixed key layout and the
// determinism contract reduces to deterministic values.
using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// value rendering

json j_rat(const Rat& r) { return r.str(); }

json j_grat(const GRat& g) {
  return json{{"re", g.re.str()}, {"im", g.im.str()}};
}

json j_qvec(const QVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(x.str());
  return a;
}

json j_qmat(const QMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json j_cmat(const CMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(j_grat(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json j_poly(const Poly& p) {
  json coeffs = json::array();
  for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(j_grat(p.coeff(k)));
  return json{{"coefficients", std::move(coeffs)}, {"pretty", p.str("t")}};
}

json j_weight(const RootSystem& rs, const QVec& root_coords) {
  return json{{"root", j_qvec(root_coords)},
              {"fw", j_qvec(rs.fw_coords(root_coords))}};
}

json j_int(const Int& n) { return n.get_str(); }

std::string fw_key(const QVec& fw) {
  std::string s;
  for (size_t i = 0; i < fw.size(); ++i) {
    if (i) s += ' ';
    s += fw[i].str();
  }
  return s;
}

// ---------------------------------------------------------------------------
// config reading

[[noreturn]] void bad(const std::string& msg) { fail(errc::usage, msg); }

void check_keys(const json& cfg, std::initializer_list<const char*> allowed) {
  for (auto it = cfg.begin(); it != cfg.end(); ++it) {
    if (it.key() == "command") continue;
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) { ok = true; break; }
    if (!ok)
      bad("unknown config key '" + it.key() + "' for command '" +
          cfg.value("command", std::string()) + "'");
  }
}

Rat rat_from(const json& v, const std::string& what) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return Rat::parse(v.get<std::string>());
  if (v.is_number_float())
    bad(what + ": floating point is not accepted, pass a \"p/q\" string");
  bad(what + ": expected an integer or a \"p/q\" string");
}

long long_from(const json& v, const std::string& what) {
  if (!v.is_number_integer()) bad(what + ": expected an integer");
  return static_cast<long>(v.get<long long>());
}

QVec qvec_from(const json& v, const std::string& what) {
  if (!v.is_array()) bad(what + ": expected an array of rationals");
  QVec out;
  for (const json& x : v) out.push_back(rat_from(x, what));
  return out;
}

QMat qmat_from(const json& v, const std::string& what) {
  if (!v.is_array() || v.empty()) bad(what + ": expected an array of rows");
  const int rows = static_cast<int>(v.size());
  int cols = -1;
  QMat m;
  for (int i = 0; i < rows; ++i) {
    QVec row = qvec_from(v[i], what);
    if (cols < 0) {
      cols = static_cast<int>(row.size());
      if (cols == 0) bad(what + ": empty row");
      m = QMat(rows, cols);
    } else if (static_cast<int>(row.size()) != cols) {
      bad(what + ": ragged rows");
    }
    for (int j = 0; j < cols; ++j) m.at(i, j) = row[j];
  }
  return m;
}

// Root system selection: token, per-class multiplicities, half-sum mode.
struct SystemCfg {
  std::string token;
  std::map<std::string, long> mult;
  std::string delta_mode = "weighted";
};

SystemCfg system_cfg(const json& cfg) {
  SystemCfg out;
  if (!cfg.contains("system") || !cfg.at("system").is_string())
    bad("missing required \"system\" (for example \"A2\")");
  out.token = cfg.at("system").get<std::string>();
  if (cfg.contains("mult")) {
    const json& m = cfg.at("mult");
    if (!m.is_object()) bad("\"mult\" must map length classes to integers");
    for (auto it = m.begin(); it != m.end(); ++it)
      out.mult[it.key()] = long_from(it.value(), "mult." + it.key());
  }
  if (cfg.contains("delta_mode")) {
    if (!cfg.at("delta_mode").is_string()) bad("\"delta_mode\" must be a string");
    out.delta_mode = cfg.at("delta_mode").get<std::string>();
  }
  if (out.delta_mode != "weighted" && out.delta_mode != "plain")
    bad("\"delta_mode\" must be \"weighted\" or \"plain\"");
  return out;
}

RootSystem build_system(const SystemCfg& sc) {
  RootSystem::Options opt;
  opt.mult = sc.mult;
  opt.delta_mode =
      sc.delta_mode == "plain" ? DeltaMode::plain : DeltaMode::weighted;
  return RootSystem::parse(sc.token, opt);
}

json echo_system(const SystemCfg& sc) {
  json m = json::object();
  for (const auto& [k, v] : sc.mult) m[k] = v;
  return json{{"system", sc.token}, {"mult", std::move(m)},
              {"delta_mode", sc.delta_mode}};
}

Lattice lattice_from(const RootSystem& rs, const json& desc) {
  if (desc.is_string()) {
    const std::string s = desc.get<std::string>();
    if (s == "weight") return weight_lattice(rs);
    if (s == "root") return root_lattice(rs);
    if (s.rfind("weight*", 0) == 0) {
      const std::string tail = s.substr(7);
      if (tail.empty() ||
          tail.find_first_not_of("0123456789") != std::string::npos)
        bad("lattice \"weight*k\" needs a positive integer k");
      long k = std::stol(tail);
      if (k < 1) bad("lattice scale must be >= 1");
      return scaled_weight_lattice(rs, k);
    }
    bad("unknown lattice \"" + s +
        "\" (use \"weight\", \"root\", \"weight*k\" or a basis object)");
  }
  if (desc.is_object()) {
    check_keys(desc, {"basis_fw", "label"});
    if (!desc.contains("basis_fw"))
      bad("lattice object needs \"basis_fw\": rows of fundamental-weight "
          "coordinates");
    std::vector<QVec> rows;
    if (!desc.at("basis_fw").is_array()) bad("\"basis_fw\" must be an array");
    for (const json& r : desc.at("basis_fw"))
      rows.push_back(qvec_from(r, "basis_fw"));
    std::string label = "custom";
    if (desc.contains("label")) {
      if (!desc.at("label").is_string()) bad("lattice \"label\" must be a string");
      label = desc.at("label").get<std::string>();
    }
    return custom_lattice(rs, label, rows);
  }
  bad("\"lattice\" must be a string or a basis object");
}

// ---------------------------------------------------------------------------
// envelope

json conventions(const std::string& delta_mode) {
  return json{
      {"coordinates",
       "vectors in simple-root coordinates; weights also given in "
       "fundamental-weight coordinates under \"fw\""},
      {"root_normalization",
       "long roots have squared length 2; in the non-reduced family the "
       "middle length is 2"},
      {"delta_mode", delta_mode},
      {"rational_format", "reduced fraction string \"p/q\" or \"p\""},
      {"polynomial_format",
       "coefficient array, lowest degree first, entries {re, im}"},
      {"resultant_convention",
       "Sylvester determinant; res(p, c) = c^deg(p) for a nonzero constant "
       "c; a single zero argument gives 0"},
  };
}

json envelope(const std::string& command, json config, json payload,
              const std::vector<std::string>& warnings,
              const std::string& delta_mode) {
  json warn = json::array();
  for (const std::string& w : warnings) warn.push_back(w);
  return json{{"artifact", kArtifactName}, {"version", kVersion},
              {"command", command},        {"config", std::move(config)},
              {"conventions", conventions(delta_mode)},
              {"warnings", std::move(warn)},
              {"payload", std::move(payload)}};
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// roots

std::string family_token(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::BC: return "BC";
    case Family::G2: return "G2";
  }
  return "?";
}

std::string run_roots(const json& cfg) {
  check_keys(cfg, {"system", "mult", "delta_mode"});
  SystemCfg sc = system_cfg(cfg);
  RootSystem rs = build_system(sc);

  json mults = json::object();
  json classes = json::array();
  for (const std::string& name : rs.length_class_names()) classes.push_back(name);
  for (size_t c = 0; c < rs.length_class_names().size(); ++c) {
    long m = 1;
    for (const PositiveRoot& p : rs.positive_roots())
      if (p.length_class == static_cast<int>(c)) { m = p.mult; break; }
    mults[rs.length_class_names()[c]] = m;
  }

  json roots = json::array();
  for (const PositiveRoot& p : rs.positive_roots())
    roots.push_back(json{{"coords", j_qvec(p.coords)},
                         {"len2", j_rat(p.len2)},
                         {"class", rs.length_class_names()[p.length_class]},
                         {"mult", p.mult}});

  json fweights = json::array();
  for (const QVec& w : rs.fundamental_weights())
    fweights.push_back(j_weight(rs, w));

  json word = json::array();
  for (int i : rs.longest_element().word) word.push_back(i);

  json payload{{"family", family_token(rs.family())},
               {"rank", rs.rank()},
               {"label", rs.label()},
               {"reduced", rs.reduced()},
               {"length_classes", std::move(classes)},
               {"multiplicities", std::move(mults)},
               {"positive_root_count",
                static_cast<long>(rs.positive_roots().size())},
               {"positive_roots", std::move(roots)},
               {"simple_root_gram", j_qmat(rs.gram())},
               {"cartan_pairing", j_qmat(rs.cartan())},
               {"fundamental_weights", std::move(fweights)},
               {"delta", j_weight(rs, rs.delta())},
               {"delta_norm2", j_rat(rs.delta_norm2())},
               {"weyl_order", rs.weyl_order()},
               {"longest_word", std::move(word)}};

  json config = echo_system(sc);
  config["command"] = "roots";
  return render(envelope("roots", std::move(config), std::move(payload), {},
                         sc.delta_mode));
}

// ---------------------------------------------------------------------------
// spectrum / collisions

struct SpectrumRun {
  SystemCfg sc;
  json lattice_echo;
  Rat cutoff;
  std::vector<std::pair<QVec, long>> overrides;  // (mu_fw, multiplicity)
  RootSystem rs;
  Lattice lat;
  SpectrumResult result;
  std::vector<long> multiplicities;  // per record, default 1
  std::vector<std::string> warnings;
};

SpectrumRun spectrum_run(const json& cfg) {
  SystemCfg sc = system_cfg(cfg);
  RootSystem rs = build_system(sc);
  json lattice_echo =
      cfg.contains("lattice") ? cfg.at("lattice") : json("weight");
  Lattice lat = lattice_from(rs, lattice_echo);
  SpectrumRun run{std::move(sc), std::move(lattice_echo), Rat(0), {},
                  std::move(rs), std::move(lat),          {},     {},
                  {}};
  if (!cfg.contains("cutoff")) bad("missing required \"cutoff\"");
  run.cutoff = rat_from(cfg.at("cutoff"), "cutoff");
  if (cfg.contains("multiplicity_overrides")) {
    const json& ov = cfg.at("multiplicity_overrides");
    if (!ov.is_array()) bad("\"multiplicity_overrides\" must be an array");
    for (const json& o : ov) {
      if (!o.is_object() || !o.contains("mu") || !o.contains("m"))
        bad("each multiplicity override needs \"mu\" (fw coords) and \"m\"");
      check_keys(o, {"mu", "m"});
      long m = long_from(o.at("m"), "override multiplicity");
      if (m < 1) bad("override multiplicity must be >= 1");
      run.overrides.emplace_back(qvec_from(o.at("mu"), "override mu"), m);
    }
  }

  run.result = enumerate_spherical(run.rs, run.lat, run.cutoff);
  if (run.result.cutoff_below_delta)
    run.warnings.push_back(
        "cutoff lies below the squared half-sum norm; no weight qualifies");

  run.multiplicities.assign(run.result.records.size(), 1);
  for (const auto& [fw, m] : run.overrides) {
    bool found = false;
    for (size_t i = 0; i < run.result.records.size(); ++i)
      if (run.result.records[i].mu_fw == fw) {
        run.multiplicities[i] = m;
        found = true;
      }
    if (!found)
      run.warnings.push_back("multiplicity override for [" + fw_key(fw) +
                             "] matches no enumerated weight");
  }
  return run;
}

json j_scan(const BallScan& scan) {
  json box = json::array();
  for (const auto& [lo, hi] : scan.box)
    box.push_back(json::array({lo.get_str(), hi.get_str()}));
  return json{{"box", std::move(box)}, {"volume", scan.volume.get_str()}};
}

json j_records(const SpectrumRun& run) {
  json records = json::array();
  for (size_t i = 0; i < run.result.records.size(); ++i) {
    const WeightRecord& r = run.result.records[i];
    records.push_back(
        json{{"mu", json{{"root", j_qvec(r.mu)}, {"fw", j_qvec(r.mu_fw)}}},
             {"a2", j_rat(r.a2)},
             {"lambda", j_rat(r.lambda)},
             {"dim", r.dim ? json(j_int(*r.dim)) : json(nullptr)},
             {"type", r.type},
             {"self_dual", r.self_dual},
             {"dual_fw", j_qvec(r.dual_fw)},
             {"multiplicity", run.multiplicities[i]}});
  }
  return records;
}

json j_collisions(const SpectrumRun& run) {
  std::vector<CollisionClass> classes = collisions(run.result.records);
  json out = json::array();
  for (const CollisionClass& c : classes) {
    json members = json::array();
    for (size_t idx : c.members)
      members.push_back(j_qvec(run.result.records[idx].mu_fw));
    out.push_back(json{{"a2", j_rat(c.a2)},
                       {"lambda", j_rat(c.lambda)},
                       {"size", static_cast<long>(c.members.size())},
                       {"members_fw", std::move(members)},
                       {"nondual_pair_exists", c.has_nondual_pair}});
  }
  return out;
}

json spectrum_config_echo(const SpectrumRun& run, const char* command,
                          const json& cfg) {
  json config = echo_system(run.sc);
  config["command"] = command;
  config["lattice"] = run.lattice_echo;
  config["cutoff"] = j_rat(run.cutoff);
  if (cfg.contains("multiplicity_overrides"))
    config["multiplicity_overrides"] = cfg.at("multiplicity_overrides");
  return config;
}

std::string csv_view(const SpectrumRun& run) {
  std::ostringstream out;
  out << "mu,a2,lambda,dim,type\n";
  for (const WeightRecord& r : run.result.records) {
    out << fw_key(r.mu_fw) << ',' << r.a2.str() << ',' << r.lambda.str()
        << ',' << (r.dim ? r.dim->get_str() : std::string("unknown")) << ','
        << r.type << '\n';
  }
  return out.str();
}

std::string run_spectrum(const json& cfg) {
  check_keys(cfg, {"system", "mult", "delta_mode", "lattice", "cutoff",
                   "format", "multiplicity_overrides"});
  std::string format = "json";
  if (cfg.contains("format")) {
    if (!cfg.at("format").is_string()) bad("\"format\" must be a string");
    format = cfg.at("format").get<std::string>();
    if (format != "json" && format != "csv")
      bad("\"format\" must be \"json\" or \"csv\"");
  }
  SpectrumRun run = spectrum_run(cfg);
  if (format == "csv") return csv_view(run);

  json collision_classes = j_collisions(run);
  json payload{{"system", run.rs.label()},
               {"lattice", run.lat.label},
               {"cutoff", j_rat(run.cutoff)},
               {"delta_norm2", j_rat(run.rs.delta_norm2())},
               {"cutoff_below_delta", run.result.cutoff_below_delta},
               {"scan", j_scan(run.result.scan)},
               {"record_count",
                static_cast<long>(run.result.records.size())},
               {"records", j_records(run)},
               {"collision_class_count",
                static_cast<long>(collision_classes.size())},
               {"collision_classes", std::move(collision_classes)}};

  json config = spectrum_config_echo(run, "spectrum", cfg);
  config["format"] = format;
  return render(envelope("spectrum", std::move(config), std::move(payload),
                         run.warnings, run.sc.delta_mode));
}

std::string run_collisions(const json& cfg) {
  check_keys(cfg, {"system", "mult", "delta_mode", "lattice", "cutoff",
                   "multiplicity_overrides"});
  SpectrumRun run = spectrum_run(cfg);
  json classes = j_collisions(run);
  long nondual = 0;
  for (const json& c : classes)
    if (c.at("nondual_pair_exists").get<bool>()) ++nondual;

  json payload{{"system", run.rs.label()},
               {"lattice", run.lat.label},
               {"cutoff", j_rat(run.cutoff)},
               {"record_count",
                static_cast<long>(run.result.records.size())},
               {"collision_class_count", static_cast<long>(classes.size())},
               {"classes_with_nondual_pair", nondual},
               {"all_classes_trivial", classes.empty()},
               {"collision_classes", std::move(classes)}};

  return render(envelope("collisions",
                         spectrum_config_echo(run, "collisions", cfg),
                         std::move(payload), run.warnings,
                         run.sc.delta_mode));
}

// ---------------------------------------------------------------------------
// sphere-sym

std::string run_sphere_sym(const json& cfg) {
  check_keys(cfg, {"system", "mult", "delta_mode", "lattice", "a2"});
  SystemCfg sc = system_cfg(cfg);
  RootSystem rs = build_system(sc);
  json lattice_echo = cfg.contains("lattice") ? cfg.at("lattice")
                                              : json("weight");
  Lattice lat = lattice_from(rs, lattice_echo);
  if (!cfg.contains("a2")) bad("missing required \"a2\"");
  Rat a2 = rat_from(cfg.at("a2"), "a2");

  SphereSet set = sphere_points(rs, lat, a2);
  Containment containment = verify_weyl_containment(rs, set);
  SymmetryGroup group = symmetry_group(rs, lat, set);

  json points = json::array();
  for (const SpherePoint& p : set.points)
    points.push_back(json{{"raw", j_weight(rs, p.raw)},
                          {"shifted", j_qvec(p.shifted)}});

  json violations = json::array();
  for (const ContainmentViolation& v : containment.violations)
    violations.push_back(json{{"weyl_index", static_cast<long>(v.weyl_index)},
                              {"point_fw", j_qvec(rs.fw_coords(v.point_raw))},
                              {"image_fw", j_qvec(rs.fw_coords(v.image_raw))}});

  json orbits = json::array();
  for (const auto& orbit : group.orbits) {
    json o = json::array();
    for (size_t idx : orbit) o.push_back(static_cast<long>(idx));
    orbits.push_back(std::move(o));
  }

  json elements = json::array();
  for (const SymmetryElement& e : group.elements) {
    json perm = json::array();
    for (int idx : e.perm) perm.push_back(idx);
    elements.push_back(json{{"matrix", j_qmat(e.matrix)},
                            {"permutation", std::move(perm)},
                            {"preserves_lattice", e.preserves_lattice},
                            {"in_weyl_image", e.in_weyl_image}});
  }

  json base = json::array();
  for (size_t idx : group.basis) base.push_back(static_cast<long>(idx));

  json payload{{"system", rs.label()},
               {"lattice", lat.label},
               {"a2", j_rat(a2)},
               {"scan", j_scan(set.scan)},
               {"point_count", static_cast<long>(set.points.size())},
               {"singular_excluded", set.singular_excluded},
               {"points", std::move(points)},
               {"spans", set.spans},
               {"weyl_containment",
                json{{"contained", containment.contained},
                     {"violations", std::move(violations)}}},
               {"group_order", group.order},
               {"transitive", group.transitive},
               {"orbits", std::move(orbits)},
               {"base_points", std::move(base)},
               {"weyl_image_count", group.weyl_image_count},
               {"elements", std::move(elements)}};

  json config = echo_system(sc);
  config["command"] = "sphere-sym";
  config["lattice"] = lattice_echo;
  config["a2"] = j_rat(a2);
  return render(envelope("sphere-sym", std::move(config), std::move(payload),
                         {}, sc.delta_mode));
}

// ---------------------------------------------------------------------------
// types

std::string run_types(const json& cfg) {
  check_keys(cfg, {"system", "mult", "delta_mode", "mu"});
  SystemCfg sc = system_cfg(cfg);
  RootSystem rs = build_system(sc);
  if (!cfg.contains("mu") || !cfg.at("mu").is_array() || cfg.at("mu").empty())
    bad("\"mu\" must be a nonempty array of fundamental-weight coordinate "
        "vectors");

  json entries = json::array();
  for (const json& raw : cfg.at("mu")) {
    QVec fw = qvec_from(raw, "mu");
    if (static_cast<int>(fw.size()) != rs.rank())
      bad("weight has " + std::to_string(fw.size()) + " coordinates, rank is " +
          std::to_string(rs.rank()));
    QVec mu = rs.from_fw(fw);
    TypeInfo info = type_of(rs, mu);
    QVec dual = dual_weight(rs, mu);
    entries.push_back(json{{"mu", j_weight(rs, mu)},
                           {"self_dual", info.self_dual},
                           {"dual", j_weight(rs, dual)},
                           {"type", rep_type_name(info.type)},
                           {"parity_sum", j_int(info.parity_sum)},
                           {"dim", j_int(weyl_dim(rs, mu))}});
  }

  json payload{{"system", rs.label()},
               {"entry_count", static_cast<long>(entries.size())},
               {"entries", std::move(entries)}};
  json config = echo_system(sc);
  config["command"] = "types";
  config["mu"] = cfg.at("mu");
  return render(envelope("types", std::move(config), std::move(payload), {},
                         sc.delta_mode));
}

// ---------------------------------------------------------------------------
// assemble / verdict

json j_assembly(const q8::Assembly& a) {
  return json{{"type", rep_type_name(a.type)},
              {"m", a.m},
              {"complex",
               json{{"unit", a.complex_unit},
                    {"copies", a.complex_copies},
                    {"label", a.complex_label}}},
              {"real",
               json{{"unit", a.real_unit},
                    {"copies", a.real_copies},
                    {"label", a.real_label}}},
              {"units",
               json{{"complex_total", a.complex_units_total},
                    {"real_total", a.real_units_total}}}};
}

std::vector<q8::RepEntry> entries_from_json(const json& reps) {
  if (!reps.is_array() || reps.empty())
    bad("\"reps\" must be a nonempty array of representation entries");
  std::vector<q8::RepEntry> out;
  for (const json& r : reps) {
    if (!r.is_object()) bad("representation entries must be objects");
    check_keys(r, {"id", "type", "dual", "eigs"});
    q8::RepEntry e;
    if (!r.contains("id") || !r.at("id").is_string())
      bad("representation entry needs a string \"id\"");
    e.id = r.at("id").get<std::string>();
    if (!r.contains("type") || !r.at("type").is_string())
      bad("entry '" + e.id + "' needs a \"type\"");
    e.type = rep_type_from_name(r.at("type").get<std::string>());
    if (r.contains("dual") && !r.at("dual").is_null()) {
      if (!r.at("dual").is_string()) bad("\"dual\" must be a string id");
      e.dual_id = r.at("dual").get<std::string>();
    }
    if (!r.contains("eigs") || !r.at("eigs").is_array())
      bad("entry '" + e.id + "' needs an \"eigs\" array");
    for (const json& eg : r.at("eigs")) {
      if (eg.is_object()) {
        check_keys(eg, {"eig", "mult"});
        if (!eg.contains("eig") || !eg.contains("mult"))
          bad("eigenvalue rows need \"eig\" and \"mult\"");
        e.eigs.emplace_back(rat_from(eg.at("eig"), "eig"),
                            long_from(eg.at("mult"), "mult"));
      } else if (eg.is_array() && eg.size() == 2) {
        e.eigs.emplace_back(rat_from(eg[0], "eig"), long_from(eg[1], "mult"));
      } else {
        bad("eigenvalue rows are {\"eig\", \"mult\"} objects or [eig, mult] "
            "pairs");
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<q8::RepEntry> entries_from_records(const json& records) {
  if (!records.is_array() || records.empty())
    bad("the input report has no records to convert");
  std::vector<q8::RepEntry> out;
  for (const json& r : records) {
    q8::RepEntry e;
    if (!r.contains("mu") || !r.at("mu").is_object() ||
        !r.at("mu").contains("fw"))
      bad("weight records need mu.fw coordinates");
    e.id = fw_key(qvec_from(r.at("mu").at("fw"), "record mu"));
    if (!r.contains("type") || !r.at("type").is_string())
      bad("weight records need a \"type\"");
    const std::string type = r.at("type").get<std::string>();
    if (type == "unknown")
      fail(errc::domain,
           "records carry no type information; the dictionary needs "
           "real/complex/quaternionic labels");
    e.type = rep_type_from_name(type);
    if (r.contains("self_dual") && r.at("self_dual").is_boolean() &&
        !r.at("self_dual").get<bool>()) {
      if (!r.contains("dual_fw")) bad("non-self-dual record lacks dual_fw");
      e.dual_id = fw_key(qvec_from(r.at("dual_fw"), "record dual"));
    }
    long mult = 1;
    if (r.contains("multiplicity"))
      mult = long_from(r.at("multiplicity"), "record multiplicity");
    if (!r.contains("lambda")) bad("weight records need \"lambda\"");
    e.eigs.emplace_back(rat_from(r.at("lambda"), "record lambda"), mult);
    out.push_back(std::move(e));
  }
  return out;
}

// Accepts entries directly, or digs them out of a previously written
// report: a verdict/assemble input, a certification report's generic
// model, or a spectrum report's records.
std::vector<q8::RepEntry> extract_entries(const json& cfg) {
  if (cfg.contains("reps")) return entries_from_json(cfg.at("reps"));
  if (!cfg.contains("input"))
    bad("provide \"reps\" inline or an input report via --in");
  const json& in = cfg.at("input");
  if (!in.is_object()) bad("the input report must be a JSON object");
  if (in.contains("reps")) return entries_from_json(in.at("reps"));
  if (in.contains("payload")) {
    const json& p = in.at("payload");
    if (p.contains("reps")) return entries_from_json(p.at("reps"));
    if (p.contains("generic_model") &&
        p.at("generic_model").is_object() &&
        p.at("generic_model").contains("reps"))
      return entries_from_json(p.at("generic_model").at("reps"));
    if (p.contains("records")) return entries_from_records(p.at("records"));
  }
  bad("the input report holds no representation entries (expected \"reps\", "
      "a generic model, or spectrum records)");
}

json j_entries(const std::vector<q8::RepEntry>& entries) {
  json reps = json::array();
  for (const q8::RepEntry& e : entries) {
    json eigs = json::array();
    for (const auto& [eig, mult] : e.eigs)
      eigs.push_back(json{{"eig", j_rat(eig)}, {"mult", mult}});
    reps.push_back(json{{"id", e.id},
                        {"type", rep_type_name(e.type)},
                        {"dual", e.dual_id ? json(*e.dual_id) : json(nullptr)},
                        {"eigs", std::move(eigs)}});
  }
  return reps;
}

json verdict_payload(const std::vector<q8::RepEntry>& entries) {
  q8::SimplicityVerdict v = q8::simplicity_dictionary(entries);
  json failures = json::array();
  for (const q8::EigFailure& f : v.failures)
    failures.push_back(json{{"rep", f.rep_id},
                            {"eig", j_rat(f.eig)},
                            {"mult", f.mult},
                            {"complex_exponent", f.complex_exponent},
                            {"real_exponent", f.real_exponent}});
  json cross = json::array();
  for (const q8::CrossCollision& c : v.cross)
    cross.push_back(json{{"rep_a", c.rep_a},
                         {"rep_b", c.rep_b},
                         {"eig", j_rat(c.eig)}});
  return json{{"real_G_simple", v.real_simple},
              {"complex_Q8xG_simple", v.complex_simple},
              {"entry_count", static_cast<long>(entries.size())},
              {"per_rep", j_entries(entries)},
              {"failures", std::move(failures)},
              {"cross_collisions", std::move(cross)}};
}

std::string run_assemble(const json& cfg) {
  check_keys(cfg, {"type", "m", "reps", "input"});
  const bool direct = cfg.contains("type") || cfg.contains("m");
  const bool batch = cfg.contains("reps") || cfg.contains("input");
  if (direct == batch)
    bad("assemble takes either --type with --m, or an input with entries");

  json payload;
  json config{{"command", "assemble"}};
  if (direct) {
    if (!cfg.contains("type") || !cfg.at("type").is_string())
      bad("missing \"type\" (real, complex or quaternionic)");
    if (!cfg.contains("m")) bad("missing multiplicity \"m\"");
    RepType type = rep_type_from_name(cfg.at("type").get<std::string>());
    long m = long_from(cfg.at("m"), "m");
    payload = j_assembly(q8::assemble(type, m));
    config["type"] = cfg.at("type");
    config["m"] = m;
  } else {
    std::vector<q8::RepEntry> entries = extract_entries(cfg);
    json rows = json::array();
    for (const q8::RepEntry& e : entries)
      for (const auto& [eig, mult] : e.eigs) {
        json row = j_assembly(q8::assemble(e.type, mult));
        row["id"] = e.id;
        row["eig"] = j_rat(eig);
        rows.push_back(std::move(row));
      }
    payload = json{{"row_count", static_cast<long>(rows.size())},
                   {"assemblies", std::move(rows)}};
    if (cfg.contains("reps")) config["reps"] = cfg.at("reps");
    if (cfg.contains("input")) config["input"] = cfg.at("input");
  }
  return render(envelope("assemble", std::move(config), std::move(payload),
                         {}, "weighted"));
}

std::string run_verdict(const json& cfg) {
  check_keys(cfg, {"reps", "input"});
  std::vector<q8::RepEntry> entries = extract_entries(cfg);
  json config{{"command", "verdict"}};
  if (cfg.contains("reps")) config["reps"] = cfg.at("reps");
  if (cfg.contains("input")) config["input"] = cfg.at("input");
  return render(envelope("verdict", std::move(config),
                         verdict_payload(entries), {}, "weighted"));
}

// ---------------------------------------------------------------------------
// certify / operator

RunResult run_certify(const json& cfg) {
  check_keys(cfg, {"mmax", "schedule"});
  if (!cfg.contains("mmax")) bad("missing required \"mmax\"");
  long mmax = long_from(cfg.at("mmax"), "mmax");

  json schedule_echo = cfg.contains("schedule") ? cfg.at("schedule")
                                                : json("default");
  std::vector<QMat> schedule;
  if (schedule_echo.is_string()) {
    if (schedule_echo.get<std::string>() != "default")
      bad("\"schedule\" is \"default\" or an array of symmetric 3x3 matrices");
    schedule = su2::default_schedule();
  } else if (schedule_echo.is_array()) {
    for (const json& k : schedule_echo)
      schedule.push_back(qmat_from(k, "schedule entry"));
  } else {
    bad("\"schedule\" is \"default\" or an array of symmetric 3x3 matrices");
  }

  su2::Certificate cert = su2::certify(mmax, schedule);

  json sched = json::array();
  for (const QMat& k : cert.schedule) sched.push_back(j_qmat(k));

  json items = json::array();
  for (const su2::CertItem& it : cert.items) {
    bool decided = it.witness_index >= 0;
    items.push_back(json{
        {"kind", it.kind},
        {"m1", it.m1},
        {"m2", it.kind == "pair" ? json(it.m2) : json(nullptr)},
        {"decided", decided},
        {"witness_index", decided ? json(it.witness_index) : json(nullptr)},
        {"witness_kappa",
         decided ? j_qmat(cert.schedule[it.witness_index]) : json(nullptr)},
        {"value", decided ? json(j_rat(it.value)) : json(nullptr)}});
  }

  json odd_checks = json::array();
  for (const su2::OddVanishing& ov : cert.odd_checks)
    odd_checks.push_back(json{{"m", ov.m},
                              {"first_derivative_criterion_vanishes",
                               ov.all_zero}});

  json payload{{"m_max", cert.m_max},
               {"schedule", std::move(sched)},
               {"complete", cert.complete},
               {"item_count", static_cast<long>(cert.items.size())},
               {"items", std::move(items)},
               {"odd_weight_checks", std::move(odd_checks)}};

  if (cert.complete) {
    std::vector<q8::RepEntry> model = su2::generic_spectra(cert);
    payload["generic_model"] = json{{"reps", j_entries(model)}};
    payload["dictionary"] = verdict_payload(model);
  } else {
    payload["generic_model"] = nullptr;
    payload["dictionary"] = nullptr;
  }

  json config{{"command", "certify"},
              {"mmax", mmax},
              {"schedule", schedule_echo}};
  std::vector<std::string> warnings;
  if (!cert.complete)
    warnings.push_back(
        "some criterion instances stayed undecided; extend the schedule");
  RunResult out;
  out.text = render(envelope("certify", std::move(config), std::move(payload),
                             warnings, "weighted"));
  out.undecided = !cert.complete;
  return out;
}

std::string run_operator(const json& cfg) {
  check_keys(cfg, {"m", "kappa", "kdirs", "kappa_mm"});
  if (!cfg.contains("m")) bad("missing required \"m\"");
  long m = long_from(cfg.at("m"), "m");
  QMat kappa = cfg.contains("kappa")
                   ? qmat_from(cfg.at("kappa"), "kappa")
                   : QMat::identity(3);

  su2::OperatorBundle bundle = su2::d_operator(kappa, m);

  json payload{{"m", bundle.m},
               {"dim", m + 1},
               {"kappa", j_qmat(bundle.kappa)},
               {"kappa_positive", bundle.kappa_positive},
               {"type", rep_type_name(bundle.type)},
               {"matrix", j_cmat(bundle.matrix)},
               {"char_poly", j_poly(bundle.cp)},
               {"square",
                json{{"is_square", bundle.square.is_square},
                     {"root", bundle.square.is_square
                                  ? j_poly(*bundle.square.root)
                                  : json(nullptr)}}}};

  json config{{"command", "operator"},
              {"m", m},
              {"kappa", j_qmat(kappa)}};

  if (cfg.contains("kdirs")) {
    if (!cfg.at("kdirs").is_array()) bad("\"kdirs\" must be an array");
    std::vector<int> kdirs;
    for (const json& d : cfg.at("kdirs"))
      kdirs.push_back(static_cast<int>(long_from(d, "kdirs entry")));
    if (!cfg.contains("kappa_mm"))
      bad("restricting over \"kdirs\" needs \"kappa_mm\" on the moving "
          "directions");
    QMat kappa_mm = qmat_from(cfg.at("kappa_mm"), "kappa_mm");

    su2::InvariantSubspace sub = su2::invariant_subspace(kdirs, m);
    if (sub.basis.empty())
      fail(errc::domain,
           "the fixed directions leave no invariant vectors at this weight");
    su2::Restricted restricted = su2::restricted_operator(kappa_mm, m, sub);

    json basis = json::array();
    for (const auto& vec : sub.basis) {
      json v = json::array();
      for (const GRat& x : vec) v.push_back(j_grat(x));
      basis.push_back(std::move(v));
    }
    json kd = json::array(), md = json::array();
    for (int d : sub.k_dirs) kd.push_back(d);
    for (int d : sub.m_dirs) md.push_back(d);
    payload["restricted"] =
        json{{"k_dirs", std::move(kd)},
             {"m_dirs", std::move(md)},
             {"kappa_mm", j_qmat(kappa_mm)},
             {"subspace_dim", static_cast<long>(sub.basis.size())},
             {"basis", std::move(basis)},
             {"compressed", j_cmat(restricted.compressed)},
             {"char_poly", j_poly(restricted.cp)}};
    config["kdirs"] = cfg.at("kdirs");
    config["kappa_mm"] = cfg.at("kappa_mm");
  } else if (cfg.contains("kappa_mm")) {
    bad("\"kappa_mm\" only applies together with \"kdirs\"");
  }

  return render(envelope("operator", std::move(config), std::move(payload),
                         {}, "weighted"));
}

// ---------------------------------------------------------------------------
// selfcheck

void expect(bool ok, const std::string& name, const std::string& what) {
  if (!ok) fail(errc::invariant, "self-check '" + name + "' failed: " + what);
}

Poly poly_from_longs(std::initializer_list<long> coeffs) {
  std::vector<GRat> c;
  for (long x : coeffs) c.emplace_back(Rat(x));
  return Poly(std::move(c));
}

void check_exact_core(const std::string& n) {
  expect(floor_sqrt(Rat(2)) == Int(1), n, "floor sqrt of 2");
  expect(upper_int_bound(Rat(0), Rat(2)) == Int(1), n, "upper bound");
  expect(lower_int_bound(Rat(0), Rat(2)) == Int(-1), n, "lower bound");
  expect(Rat::parse("-5/10").str() == "-1/2", n, "canonical parse");

  Poly p1 = poly_from_longs({-2, 1});
  Poly p2 = poly_from_longs({-3, 1});
  expect(resultant(p1, p2) == GRat(Rat(-1)), n, "linear resultant");
  Poly sq = p2 * p2;
  expect(resultant(sq, Poly::constant(GRat(2))) == GRat(Rat(4)), n,
         "constant-argument convention");
  CMat d(2, 2);
  d.at(0, 0) = GRat(2);
  d.at(1, 1) = GRat(3);
  expect(char_poly(d) == poly_from_longs({6, -5, 1}), n, "char poly");
  SquareDecomposition dec = perfect_square(sq);
  expect(dec.is_square && dec.root == p2, n, "perfect square");
  expect(poly_from_longs({0, 0, 0, 1}).derivative(2) ==
             poly_from_longs({0, 6}),
         n, "second derivative");
}

void check_root_systems(const std::string& n) {
  RootSystem a1 = RootSystem::parse("A1");
  expect(a1.delta_norm2() == Rat(Int(1), Int(2)), n, "A1 half-sum norm");
  RootSystem a2 = RootSystem::parse("A2");
  expect(a2.positive_roots().size() == 3 && a2.weyl_order() == 6, n,
         "A2 counts");
  expect(a2.delta_norm2() == Rat(2), n, "A2 half-sum norm");
  QVec w1 = a2.fundamental_weights()[0];
  QVec dual = vneg(a2.act(a2.longest_element(), w1));
  expect(a2.fw_coords(dual) == QVec({Rat(0), Rat(1)}), n, "A2 duality swap");
  RootSystem b2 = RootSystem::parse("B2");
  expect(b2.positive_roots().size() == 4 && b2.weyl_order() == 8, n,
         "B2 counts");
  expect(b2.longest_element().matrix == -QMat::identity(2), n,
         "B2 longest element");
  RootSystem g2 = RootSystem::parse("G2");
  expect(g2.positive_roots().size() == 6 && g2.weyl_order() == 12, n,
         "G2 counts");
  expect(g2.delta_norm2() == Rat(Int(14), Int(3)), n, "G2 half-sum norm");
  RootSystem::Options opt;
  opt.mult = {{"short", 2}, {"long", 1}};
  RootSystem bc1 = RootSystem::parse("BC1", opt);
  expect(bc1.fw_coords(bc1.delta()) == QVec({Rat(4)}), n, "BC1 half-sum");
  expect(bc1.delta_norm2() == Rat(4), n, "BC1 half-sum norm");
}

void check_spectrum(const std::string& n) {
  RootSystem a1 = RootSystem::parse("A1");
  expect(casimir_a2(a1, {Rat(1)}) == Rat(Int(9), Int(2)), n, "A1 a2 at 2w1");
  expect(casimir_eigenvalue(a1, {Rat(1)}) == Rat(4), n, "A1 lambda at 2w1");
  expect(casimir_eigenvalue(a1, {Rat(0)}) == Rat(0), n, "trivial eigenvalue");
  RootSystem a2 = RootSystem::parse("A2");
  expect(casimir_a2(a2, {Rat(0), Rat(0)}) == Rat(2), n, "A2 a2 at zero");
  expect(weyl_dim(a2, a2.from_fw({Rat(1), Rat(0)})) == Int(3), n, "A2 dim w1");
  expect(weyl_dim(a2, a2.from_fw({Rat(1), Rat(1)})) == Int(8), n,
         "A2 dim adjoint");

  SpectrumResult r =
      enumerate_spherical(a1, weight_lattice(a1), Rat(Int(25), Int(2)));
  expect(r.records.size() == 5, n, "A1 enumeration count");
  for (size_t i = 0; i < r.records.size(); ++i)
    expect(r.records[i].mu_fw == QVec({Rat(static_cast<long>(i))}), n,
           "A1 enumeration order");
  SpectrumResult even = enumerate_spherical(a1, scaled_weight_lattice(a1, 2),
                                            Rat(Int(25), Int(2)));
  expect(even.records.size() == 3, n, "A1 even sublattice count");

  SpectrumResult tiny =
      enumerate_spherical(a2, weight_lattice(a2), Rat(2));
  expect(tiny.records.size() == 1 && tiny.records[0].mu_fw ==
             QVec({Rat(0), Rat(0)}),
         n, "A2 tiny ball");

  SpectrumResult big =
      enumerate_spherical(a2, weight_lattice(a2), Rat(Int(200), Int(3)));
  std::vector<CollisionClass> classes = collisions(big.records);
  bool found = false;
  for (const CollisionClass& c : classes)
    if (c.a2 == Rat(Int(182), Int(3)) && c.has_nondual_pair) found = true;
  expect(found, n, "A2 nondual collision at 182/3");

  SpectrumResult rank1 =
      enumerate_spherical(a1, weight_lattice(a1), Rat(200));
  expect(collisions(rank1.records).empty(), n, "A1 has no collisions");
}

void check_sphere_sym(const std::string& n) {
  RootSystem a1 = RootSystem::parse("A1");
  SphereSet s1 = sphere_points(a1, weight_lattice(a1), Rat(Int(1), Int(2)));
  expect(s1.points.size() == 2, n, "A1 shell size");
  expect(verify_weyl_containment(a1, s1).contained, n, "A1 containment");
  SymmetryGroup g1 = symmetry_group(a1, weight_lattice(a1), s1);
  expect(g1.order == 2 && g1.transitive, n, "A1 shell symmetry");

  RootSystem a2 = RootSystem::parse("A2");
  SphereSet s2 = sphere_points(a2, weight_lattice(a2), Rat(2));
  expect(s2.points.size() == 6, n, "A2 hexagon size");
  expect(verify_weyl_containment(a2, s2).contained, n, "A2 containment");
  SymmetryGroup g2 = symmetry_group(a2, weight_lattice(a2), s2);
  expect(g2.order == 12 && g2.transitive, n, "A2 hexagon symmetry");
  expect(g2.weyl_image_count == 6, n, "A2 proper Weyl subgroup");
}

void check_types(const std::string& n) {
  RootSystem a1 = RootSystem::parse("A1");
  for (long m = 0; m <= 8; ++m) {
    RepType got = type_of(a1, {Rat(Int(m), Int(2))}).type;
    expect(got == a1_type_oracle(m), n,
           "rank-one concordance at m=" + std::to_string(m));
  }
  RootSystem a2 = RootSystem::parse("A2");
  TypeInfo t = type_of(a2, a2.from_fw({Rat(1), Rat(0)}));
  expect(t.type == RepType::complex && !t.self_dual, n, "A2 w1 is complex");
  RootSystem b2 = RootSystem::parse("B2");
  expect(type_of(b2, b2.from_fw({Rat(0), Rat(1)})).type ==
             RepType::quaternionic,
         n, "B2 spin weight is quaternionic");
  RootSystem g2 = RootSystem::parse("G2");
  expect(type_of(g2, g2.from_fw({Rat(1), Rat(0)})).type == RepType::real, n,
         "G2 small weight is real");
}

void check_quaternion_group(const std::string& n) {
  const q8::Group& g = q8::group();  // construction self-verifies
  expect(g.degrees == std::vector<int>({1, 1, 1, 1, 2}), n, "degree vector");
  expect(g.fs_indicator ==
             std::vector<Rat>({Rat(1), Rat(1), Rat(1), Rat(1), Rat(-1)}),
         n, "indicator vector");

  struct Case { RepType t; long m; const char* cx; const char* re; };
  const Case cases[] = {
      {RepType::real, 1, "V^⊕1", "V_ℝ^⊕1"},
      {RepType::real, 3, "V^⊕3", "V_ℝ^⊕3"},
      {RepType::complex, 1, "(ℍ⊗V)^⊕1", "V_ℝ^⊕1"},
      {RepType::complex, 2, "(ℍ⊗V)^⊕2", "V_ℝ^⊕2"},
      {RepType::quaternionic, 2, "(ℍ⊗V)^⊕1", "V_ℝ^⊕1"},
      {RepType::quaternionic, 4, "(ℍ⊗V)^⊕2", "V_ℝ^⊕2"},
  };
  for (const Case& c : cases) {
    q8::Assembly a = q8::assemble(c.t, c.m);
    expect(a.complex_label == c.cx && a.real_label == c.re, n,
           "assembly labels");
  }
  for (long m : {1L, 3L}) {
    bool rejected = false;
    try {
      q8::assemble(RepType::quaternionic, m);
    } catch (const error& e) {
      rejected = (e.code() == errc::invariant);
    }
    expect(rejected, n, "odd quaternionic multiplicity must be rejected");
  }
}

void check_su2_lab(const std::string& n) {
  su2::Rep fund = su2::irrep(1);
  for (int a = 0; a < 3; ++a)
    expect(fund.rho[a] == su2::basis_u()[a], n, "weight 1 reproduces basis");
  for (long m = 0; m <= 4; ++m) {
    su2::OperatorBundle b = su2::d_operator(QMat::identity(3), m);
    expect(b.matrix == GRat(Rat(m * (m + 2))) *
                           CMat::identity(static_cast<int>(m) + 1),
           n, "round operator scalar");
  }
  QMat k = QMat(3, 3);
  k.at(0, 0) = Rat(1);
  k.at(1, 1) = Rat(2);
  k.at(2, 2) = Rat(3);
  su2::OperatorBundle b2 = su2::d_operator(k, 2);
  expect(b2.cp == poly_from_longs({-3840, 752, -48, 1}), n,
         "weight 2 polynomial");
  expect(su2::crit_even(1, QMat::identity(3)).is_zero(), n,
         "doubled weight 1 has vanishing first criterion");
  expect(su2::crit_odd(1, QMat::identity(3)) == Rat(4), n,
         "weight 1 second criterion");

  su2::InvariantSubspace sub = su2::invariant_subspace({2}, 2);
  expect(sub.basis.size() == 1, n, "torus invariants at weight 2");
  su2::Restricted r = su2::restricted_operator(QMat::identity(2), 2, sub);
  expect(r.compressed.at(0, 0) == GRat(Rat(8)), n, "restricted eigenvalue");

  su2::Certificate cert = su2::certify(4, su2::default_schedule());
  expect(cert.complete, n, "small certificate is complete");
  q8::SimplicityVerdict v =
      q8::simplicity_dictionary(su2::generic_spectra(cert));
  expect(v.real_simple && v.complex_simple, n, "generic model verdict");

  su2::Bridge br = su2::casimir_bridge(4);
  expect(br.factor == Rat(2), n, "normalization factor");
}

std::string run_selfcheck(const json& cfg) {
  check_keys(cfg, {});
  struct Entry { const char* name; void (*fn)(const std::string&); };
  const Entry checks[] = {
      {"exact-core", check_exact_core},
      {"root-systems", check_root_systems},
      {"spectrum", check_spectrum},
      {"sphere-symmetries", check_sphere_sym},
      {"type-classification", check_types},
      {"quaternion-group", check_quaternion_group},
      {"su2-operators", check_su2_lab},
  };
  json results = json::array();
  for (const Entry& c : checks) {
    c.fn(c.name);
    results.push_back(json{{"name", c.name}, {"pass", true}});
  }
  json payload{{"check_count",
                static_cast<long>(results.size())},
               {"checks", std::move(results)},
               {"all_pass", true}};
  return render(envelope("selfcheck", json{{"command", "selfcheck"}},
                         std::move(payload), {}, "weighted"));
}

}  // namespace

RunResult run_ex(const std::string& config_json) {
  json cfg;
  try {
    cfg = json::parse(config_json);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("config is not valid JSON: ") + e.what());
  }
  if (!cfg.is_object()) bad("config must be a JSON object");
  if (!cfg.contains("command") || !cfg.at("command").is_string())
    bad("config needs a \"command\"");
  const std::string command = cfg.at("command").get<std::string>();

  RunResult out;
  if (command == "roots") out.text = run_roots(cfg);
  else if (command == "spectrum") out.text = run_spectrum(cfg);
  else if (command == "collisions") out.text = run_collisions(cfg);
  else if (command == "sphere-sym") out.text = run_sphere_sym(cfg);
  else if (command == "types") out.text = run_types(cfg);
  else if (command == "assemble") out.text = run_assemble(cfg);
  else if (command == "verdict") out.text = run_verdict(cfg);
  else if (command == "certify") out = run_certify(cfg);
  else if (command == "operator") out.text = run_operator(cfg);
  else if (command == "selfcheck") out.text = run_selfcheck(cfg);
  else bad("unknown command '" + command + "'");
  return out;
}

std::string run(const std::string& config_json) {
  return run_ex(config_json).text;
}

}  // namespace report
}  // namespace lsp
