// Command-line front end.  Every command is turned into a JSON
// configuration object and handed to the shared library; the report comes
// back as a finished string, so this file contains no mathematics.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "laplace_spectra.h"

namespace {

using json = nlohmann::ordered_json;

int exit_code(ls_status st) {
  switch (st) {
    case LS_OK: return 0;
    case LS_ERR_USAGE: return 64;
    case LS_ERR_CAPACITY: return 3;
    case LS_ERR_UNDECIDED: return 3;
    default: return 2;
  }
}

void print_error(ls_status st) {
  json err{{"error", json{{"status", ls_status_name(st)},
                          {"message", ls_last_error()}}}};
  std::cerr << err.dump(2) << "\n";
}

[[noreturn]] void die_usage(const std::string& msg) {
  json err{{"error", json{{"status", "usage"}, {"message", msg}}}};
  std::cerr << err.dump(2) << "\n";
  std::exit(64);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) die_usage("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json json_file(const std::string& path) {
  json j = json::parse(slurp(path), nullptr, false);
  if (j.is_discarded()) die_usage("'" + path + "' does not hold valid JSON");
  return j;
}

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// "1,0,-5/2" -> ["1", "0", "-5/2"]
json vec_from_csv(const std::string& s) {
  json out = json::array();
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trimmed(item);
    if (item.empty()) die_usage("empty coordinate in '" + s + "'");
    out.push_back(item);
  }
  if (out.empty()) die_usage("empty coordinate list");
  return out;
}

// "1,0,0;0,2,0;0,0,3" -> [["1","0","0"], ...]
json mat_from_str(const std::string& s) {
  json rows = json::array();
  std::istringstream in(s);
  std::string row;
  while (std::getline(in, row, ';')) rows.push_back(vec_from_csv(row));
  if (rows.empty()) die_usage("empty matrix");
  return rows;
}

// "short=2,long=1" -> {"short": 2, "long": 1}
json mult_from_str(const std::string& s) {
  json out = json::object();
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      die_usage("multiplicity entries look like short=2");
    std::string key = trimmed(item.substr(0, eq));
    std::string val = trimmed(item.substr(eq + 1));
    char* end = nullptr;
    long m = std::strtol(val.c_str(), &end, 10);
    if (key.empty() || !end || *end != '\0')
      die_usage("bad multiplicity entry '" + item + "'");
    out[key] = m;
  }
  return out;
}

json kdirs_from_csv(const std::string& s) {
  json out = json::array();
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trimmed(item);
    char* end = nullptr;
    long d = std::strtol(item.c_str(), &end, 10);
    if (item.empty() || !end || *end != '\0')
      die_usage("direction indices are integers");
    out.push_back(d);
  }
  return out;
}

struct Output {
  std::string path;  // empty: stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) die_usage("cannot write file '" + path + "'");
    f << text;
  }
};

[[noreturn]] void run_and_exit(const json& config, const Output& out) {
  char* text = nullptr;
  ls_status st = ls_run_json(config.dump().c_str(), &text);
  if (st == LS_OK) {
    out.write(text);
    ls_string_free(text);
    std::exit(0);
  }
  if (st == LS_ERR_UNDECIDED && text) {
    // The report is complete and still worth reading; the exit code says
    // the certification did not settle.
    out.write(text);
    ls_string_free(text);
  }
  print_error(st);
  std::exit(exit_code(st));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra of invariant operators on compact "
               "homogeneous spaces"};
  app.set_version_flag("--version", std::string(ls_version()));
  app.require_subcommand(1);

  // Shared state; each subcommand registers only the options it accepts.
  std::string config_path, out_path;
  std::string system_str, mult_str, delta_mode, lattice_str, cutoff_str;
  std::string a2_str, type_str, in_path, reps_path, schedule_str;
  std::string kappa_str, kdirs_str, kappa_mm_str, format_str;
  std::vector<std::string> mu_list;
  long m_val = 0, mmax_val = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path,
                    "JSON file with the base configuration; flags override");
    sub->add_option("--out", out_path, "write the report here, not stdout");
  };
  auto add_system = [&](CLI::App* sub, bool required) {
    CLI::Option* o = sub->add_option("--system", system_str,
                                     "root system token, e.g. A2 or BC1");
    if (required) o->required();
    sub->add_option("--mult", mult_str,
                    "length-class multiplicities, e.g. short=2,long=1");
    sub->add_option("--delta-mode", delta_mode, "weighted (default) or plain")
        ->check(CLI::IsMember({"weighted", "plain"}));
  };
  auto add_lattice = [&](CLI::App* sub) {
    sub->add_option("--lattice", lattice_str,
                    "weight | root | weight*k | @basis.json");
  };

  CLI::App* roots = app.add_subcommand(
      "roots", "structure of a root system with multiplicities");
  add_common(roots);
  add_system(roots, false);

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "dominant weights and eigenvalues inside a cutoff");
  add_common(spectrum);
  add_system(spectrum, false);
  add_lattice(spectrum);
  spectrum->add_option("--cutoff", cutoff_str,
                       "largest admitted squared shifted norm, p/q");
  spectrum->add_option("--format", format_str, "json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  spectrum->add_flag_callback("--csv", [&] { format_str = "csv"; },
                              "shorthand for --format csv");

  CLI::App* collisions = app.add_subcommand(
      "collisions", "eigenvalue classes with two or more weights");
  add_common(collisions);
  add_system(collisions, false);
  add_lattice(collisions);
  collisions->add_option("--cutoff", cutoff_str,
                         "largest admitted squared shifted norm, p/q");

  CLI::App* sphere = app.add_subcommand(
      "sphere-sym", "symmetry group of one shifted shell");
  add_common(sphere);
  add_system(sphere, false);
  add_lattice(sphere);
  sphere->add_option("--a2", a2_str, "squared shell radius, p/q");

  CLI::App* types = app.add_subcommand(
      "types", "real/complex/quaternionic classification of weights");
  add_common(types);
  add_system(types, false);
  types->add_option("--mu", mu_list,
                    "fundamental-weight coordinates, e.g. 1,0 (repeatable)");

  CLI::App* assemble = app.add_subcommand(
      "assemble", "isotypic block shapes over the quaternion group");
  add_common(assemble);
  assemble->add_option("--type", type_str,
                       "real | complex | quaternionic");
  assemble->add_option("--m", m_val, "multiplicity of the block");
  assemble->add_option("--in", in_path,
                       "report or entry list to assemble row by row");

  CLI::App* verdict = app.add_subcommand(
      "verdict", "simplicity of all isotypic blocks of a spectrum");
  add_common(verdict);
  verdict->add_option("--in", in_path, "report holding the entries");
  verdict->add_option("--reps", reps_path, "JSON file with a bare entry list");

  CLI::App* certify = app.add_subcommand(
      "certify", "witness search for generically simple spectra");
  add_common(certify);
  certify->add_option("--mmax", mmax_val, "largest highest weight to cover")
      ->required();
  certify->add_option("--schedule", schedule_str,
                      "default, or a JSON file with trial matrices");

  CLI::App* op = app.add_subcommand(
      "operator", "one exact operator matrix and its polynomial");
  add_common(op);
  op->add_option("--m", m_val, "highest weight")->required();
  op->add_option("--kappa", kappa_str,
                 "symmetric 3x3 matrix, rows ; separated, e.g. 1,0,0;0,2,0;0,0,3");
  op->add_option("--kdirs", kdirs_str,
                 "fixed directions (0,1,2) cutting out an invariant subspace");
  op->add_option("--kappa-mm", kappa_mm_str,
                 "symmetric block on the moving directions");

  CLI::App* selfcheck = app.add_subcommand(
      "selfcheck", "run the built-in cross-checks");
  add_common(selfcheck);

  CLI11_PARSE(app, argc, argv);

  CLI::App* sub = app.get_subcommands().front();
  json config = config_path.empty() ? json::object() : json_file(config_path);
  if (!config.is_object()) die_usage("--config must hold a JSON object");
  config["command"] = sub->get_name();

  if (!system_str.empty()) config["system"] = system_str;
  if (!mult_str.empty()) config["mult"] = mult_from_str(mult_str);
  if (!delta_mode.empty()) config["delta_mode"] = delta_mode;
  if (!lattice_str.empty()) {
    if (lattice_str.front() == '@')
      config["lattice"] = json_file(lattice_str.substr(1));
    else
      config["lattice"] = lattice_str;
  }
  if (!cutoff_str.empty()) config["cutoff"] = cutoff_str;
  if (!a2_str.empty()) config["a2"] = a2_str;
  if (!format_str.empty()) config["format"] = format_str;
  if (!mu_list.empty()) {
    json mus = json::array();
    for (const std::string& s : mu_list) mus.push_back(vec_from_csv(s));
    config["mu"] = mus;
  }
  if (!type_str.empty()) config["type"] = type_str;
  if (sub == assemble && sub->count("--m") > 0) config["m"] = m_val;
  if (sub == op) config["m"] = m_val;
  if (!in_path.empty()) config["input"] = json_file(in_path);
  if (!reps_path.empty()) config["reps"] = json_file(reps_path);
  if (sub == certify) config["mmax"] = mmax_val;
  if (!schedule_str.empty()) {
    if (schedule_str == "default")
      config["schedule"] = "default";
    else
      config["schedule"] = json_file(schedule_str);
  }
  if (!kappa_str.empty()) config["kappa"] = mat_from_str(kappa_str);
  if (!kdirs_str.empty()) config["kdirs"] = kdirs_from_csv(kdirs_str);
  if (!kappa_mm_str.empty()) config["kappa_mm"] = mat_from_str(kappa_mm_str);

  run_and_exit(config, Output{out_path});
}
