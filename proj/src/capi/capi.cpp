#include "laplace_spectra.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "json.hpp"

#include "core/errors.hpp"
#include "core/report.hpp"
#include "core/root_system.hpp"
#include "core/spectrum.hpp"
#include "core/version.hpp"

namespace {

thread_local std::string g_last_error;

ls_status status_of(lsp::errc c) {
  switch (c) {
    case lsp::errc::usage: return LS_ERR_USAGE;
    case lsp::errc::domain: return LS_ERR_DOMAIN;
    case lsp::errc::capability: return LS_ERR_CAPABILITY;
    case lsp::errc::capacity: return LS_ERR_CAPACITY;
    case lsp::errc::invariant: return LS_ERR_INVARIANT;
    case lsp::errc::undecided: return LS_ERR_UNDECIDED;
    case lsp::errc::internal: return LS_ERR_INTERNAL;
  }
  return LS_ERR_INTERNAL;
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs fn, converting exceptions into status codes and recording the
// message for ls_last_error.
template <class Fn>
ls_status guarded(Fn&& fn) {
  try {
    fn();
    return LS_OK;
  } catch (const lsp::error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LS_ERR_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LS_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return LS_ERR_INTERNAL;
  }
}

lsp::RootSystem::Options options_from(const char* mult_json,
                                      int delta_weighted) {
  lsp::RootSystem::Options opt;
  opt.delta_mode =
      delta_weighted ? lsp::DeltaMode::weighted : lsp::DeltaMode::plain;
  if (mult_json && *mult_json) {
    nlohmann::json m = nlohmann::json::parse(mult_json, nullptr, false);
    if (m.is_discarded() || !m.is_object())
      lsp::fail(lsp::errc::usage,
                "multiplicities must be a JSON object like {\"short\": 2}");
    for (auto it = m.begin(); it != m.end(); ++it) {
      if (!it.value().is_number_integer())
        lsp::fail(lsp::errc::usage, "multiplicities must be integers");
      opt.mult[it.key()] = it.value().get<long>();
    }
  }
  return opt;
}

}  // namespace

struct ls_root_system {
  lsp::RootSystem rs;
  std::string token;
  std::string mult_json;
  bool weighted = true;
};

extern "C" {

const char* ls_version(void) { return lsp::kVersion; }

const char* ls_status_name(ls_status s) {
  switch (s) {
    case LS_OK: return "ok";
    case LS_ERR_USAGE: return "usage";
    case LS_ERR_DOMAIN: return "domain";
    case LS_ERR_CAPABILITY: return "capability";
    case LS_ERR_CAPACITY: return "capacity";
    case LS_ERR_INVARIANT: return "invariant";
    case LS_ERR_UNDECIDED: return "undecided";
    case LS_ERR_NOMEM: return "nomem";
    case LS_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* ls_last_error(void) { return g_last_error.c_str(); }

void ls_string_free(char* s) { std::free(s); }

ls_status ls_run_json(const char* config_json, char** out) {
  if (!config_json || !out) {
    g_last_error = "null argument";
    return LS_ERR_USAGE;
  }
  bool undecided = false;
  ls_status st = guarded([&] {
    lsp::report::RunResult r = lsp::report::run_ex(config_json);
    *out = copy_out(r.text);
    undecided = r.undecided;
  });
  if (st == LS_OK && undecided) {
    g_last_error = "certification stayed inconclusive; the report is "
                   "still returned";
    return LS_ERR_UNDECIDED;
  }
  return st;
}

ls_status ls_root_system_create(const char* token, const char* mult_json,
                                int delta_weighted, ls_root_system** out) {
  if (!token || !out) {
    g_last_error = "null argument";
    return LS_ERR_USAGE;
  }
  return guarded([&] {
    lsp::RootSystem rs =
        lsp::RootSystem::parse(token, options_from(mult_json, delta_weighted));
    *out = new ls_root_system{std::move(rs), token,
                              mult_json ? mult_json : "",
                              delta_weighted != 0};
  });
}

void ls_root_system_free(ls_root_system* rs) { delete rs; }

ls_status ls_root_system_rank(const ls_root_system* rs, int* out) {
  if (!rs || !out) {
    g_last_error = "null argument";
    return LS_ERR_USAGE;
  }
  *out = rs->rs.rank();
  return LS_OK;
}

ls_status ls_root_system_positive_count(const ls_root_system* rs, int* out) {
  if (!rs || !out) {
    g_last_error = "null argument";
    return LS_ERR_USAGE;
  }
  *out = static_cast<int>(rs->rs.positive_roots().size());
  return LS_OK;
}

ls_status ls_root_system_weyl_order(const ls_root_system* rs, long* out) {
  if (!rs || !out) {
    g_last_error = "null argument";
    return LS_ERR_USAGE;
  }
  *out = rs->rs.weyl_order();
  return LS_OK;
}

ls_status ls_root_system_delta_norm2(const ls_root_system* rs, char** out) {
  if (!rs || !out) {
    g_last_error = "null argument";
    return LS_ERR_USAGE;
  }
  return guarded([&] { *out = copy_out(rs->rs.delta_norm2().str()); });
}

ls_status ls_root_system_casimir(const ls_root_system* rs,
                                 const char* mu_fw_json, char** a2_out,
                                 char** lambda_out) {
  if (!rs || !mu_fw_json) {
    g_last_error = "null argument";
    return LS_ERR_USAGE;
  }
  return guarded([&] {
    nlohmann::json v = nlohmann::json::parse(mu_fw_json, nullptr, false);
    if (v.is_discarded() || !v.is_array() ||
        static_cast<int>(v.size()) != rs->rs.rank())
      lsp::fail(lsp::errc::usage,
                "weight coordinates must be a JSON array of rank length");
    lsp::QVec fw;
    for (const auto& x : v) {
      if (x.is_number_integer())
        fw.emplace_back(static_cast<long>(x.get<long long>()));
      else if (x.is_string())
        fw.push_back(lsp::Rat::parse(x.get<std::string>()));
      else
        lsp::fail(lsp::errc::usage,
                  "coordinates are integers or \"p/q\" strings");
    }
    lsp::QVec mu = rs->rs.from_fw(fw);
    if (a2_out) *a2_out = copy_out(lsp::casimir_a2(rs->rs, mu).str());
    if (lambda_out)
      *lambda_out = copy_out(lsp::casimir_eigenvalue(rs->rs, mu).str());
  });
}

ls_status ls_root_system_describe_json(const ls_root_system* rs, char** out) {
  if (!rs || !out) {
    g_last_error = "null argument";
    return LS_ERR_USAGE;
  }
  return guarded([&] {
    nlohmann::ordered_json cfg;
    cfg["command"] = "roots";
    cfg["system"] = rs->token;
    if (!rs->mult_json.empty())
      cfg["mult"] = nlohmann::ordered_json::parse(rs->mult_json);
    cfg["delta_mode"] = rs->weighted ? "weighted" : "plain";
    *out = copy_out(lsp::report::run(cfg.dump()));
  });
}

}  // extern "C"
