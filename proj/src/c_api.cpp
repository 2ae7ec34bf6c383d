#include "mabuchi/mabuchi.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "mabuchi/admissible.hpp"
#include "mabuchi/classify.hpp"
#include "mabuchi/error.hpp"
#include "mabuchi/io.hpp"
#include "mabuchi/pn_bundles.hpp"
#include "mabuchi/profile.hpp"

struct mabuchi_manifold {
  mabuchi::AdmissibleManifold value;
};

namespace {

thread_local std::string g_last_error;

mabuchi_status fail(mabuchi_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs f, translating exceptions into status codes.
template <class F>
mabuchi_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return MABUCHI_OK;
  } catch (const mabuchi::Error& e) {
    return fail(static_cast<mabuchi_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MABUCHI_INTERNAL, "Internal: out of memory");
  } catch (const std::exception& e) {
    return fail(MABUCHI_INTERNAL, std::string("Internal: ") + e.what());
  } catch (...) {
    return fail(MABUCHI_INTERNAL, "Internal: unknown exception");
  }
}

char* copy_out(const std::string& s) {
  char* buffer = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buffer) throw std::bad_alloc();
  std::memcpy(buffer, s.c_str(), s.size() + 1);
  return buffer;
}

mabuchi::Format to_format(mabuchi_format f) {
  switch (f) {
    case MABUCHI_FORMAT_TABLE: return mabuchi::Format::Table;
    case MABUCHI_FORMAT_CSV: return mabuchi::Format::Csv;
    case MABUCHI_FORMAT_JSON: return mabuchi::Format::Json;
  }
  throw mabuchi::Error(mabuchi::ErrorCode::InvalidArgument, "unknown output format " + std::to_string(f));
}

void require(const void* p, const char* name) {
  if (!p) throw mabuchi::Error(mabuchi::ErrorCode::InvalidArgument, std::string(name) + " must not be null");
}

}  // namespace

extern "C" {

const char* mabuchi_version(void) { return MABUCHI_VERSION; }

const char* mabuchi_status_name(mabuchi_status status) {
  if (status == MABUCHI_OK) return "OK";
  if (status == MABUCHI_INTERNAL) return "Internal";
  if (status >= MABUCHI_INVALID_ARGUMENT && status <= MABUCHI_IO_ERROR)
    return mabuchi::to_string(static_cast<mabuchi::ErrorCode>(status)).data();
  return "Unknown";
}

int mabuchi_status_is_input_error(mabuchi_status status) {
  if (status >= MABUCHI_INVALID_ARGUMENT && status <= MABUCHI_IO_ERROR)
    return mabuchi::is_input_error(static_cast<mabuchi::ErrorCode>(status)) ? 1 : 0;
  return 0;
}

const char* mabuchi_last_error(void) { return g_last_error.c_str(); }

void mabuchi_string_free(char* s) { std::free(s); }

mabuchi_status mabuchi_parse_format(const char* name, mabuchi_format* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    switch (mabuchi::parse_format(name)) {
      case mabuchi::Format::Table: *out = MABUCHI_FORMAT_TABLE; break;
      case mabuchi::Format::Csv: *out = MABUCHI_FORMAT_CSV; break;
      case mabuchi::Format::Json: *out = MABUCHI_FORMAT_JSON; break;
    }
  });
}

mabuchi_status mabuchi_manifold_from_pn(unsigned n, unsigned k, unsigned d0, unsigned d_inf, mabuchi_manifold** out) {
  return guarded([&] {
    require(out, "out");
    *out = new mabuchi_manifold{mabuchi::AdmissibleManifold::from_pn_bundle({n, k, d0, d_inf})};
  });
}

mabuchi_status mabuchi_manifold_parse_pn(const char* tuple, mabuchi_manifold** out) {
  return guarded([&] {
    require(tuple, "tuple");
    require(out, "out");
    *out = new mabuchi_manifold{mabuchi::AdmissibleManifold::from_pn_bundle(mabuchi::parse_pn_tuple(tuple))};
  });
}

mabuchi_status mabuchi_manifold_from_json(const char* json, mabuchi_manifold** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new mabuchi_manifold{mabuchi::parse_manifest(json)};
  });
}

void mabuchi_manifold_free(mabuchi_manifold* m) { delete m; }

mabuchi_status mabuchi_manifold_dimension(const mabuchi_manifold* m, unsigned* out) {
  return guarded([&] {
    require(m, "manifold");
    require(out, "out");
    *out = m->value.total_dim();
  });
}

mabuchi_status mabuchi_manifold_mabuchi_constant(const mabuchi_manifold* m, char** out) {
  return guarded([&] {
    require(m, "manifold");
    require(out, "out");
    *out = copy_out(mabuchi::mabuchi_constant(m->value).str());
  });
}

mabuchi_status mabuchi_classify(const mabuchi_manifold* m, mabuchi_format format, char** out) {
  return guarded([&] {
    require(m, "manifold");
    require(out, "out");
    const auto report = mabuchi::classify(m->value);
    *out = copy_out(mabuchi::render_classification(m->value, report, to_format(format)));
  });
}

mabuchi_status mabuchi_mconst(const mabuchi_manifold* m, mabuchi_format format, char** out) {
  return guarded([&] {
    require(m, "manifold");
    require(out, "out");
    *out = copy_out(mabuchi::render_mabuchi_constant(m->value, mabuchi::mabuchi_constant(m->value), to_format(format)));
  });
}

mabuchi_status mabuchi_scan(const mabuchi_scan_bounds* bounds, unsigned threads, int verbose, mabuchi_format format,
                            char** out) {
  return guarded([&] {
    require(bounds, "bounds");
    require(out, "out");
    if (bounds->n_max < 1 || bounds->k_max < 1)
      throw mabuchi::Error(mabuchi::ErrorCode::InvalidArgument, "scan bounds need n_max >= 1 and k_max >= 1");
    const mabuchi::ScanBounds b{bounds->n_max, bounds->k_max, bounds->d0_max, bounds->d_inf_max};
    const auto result = mabuchi::grid_scan(b, threads);
    *out = copy_out(mabuchi::render_scan(b, result, to_format(format), verbose != 0));
  });
}

mabuchi_status mabuchi_profile(const mabuchi_manifold* m, mabuchi_weight_kind weight, mabuchi_format format,
                               unsigned samples, char** out) {
  return guarded([&] {
    require(m, "manifold");
    require(out, "out");
    mabuchi::Weight u = mabuchi::Weight::one();
    if (weight == MABUCHI_WEIGHT_MABUCHI)
      u = mabuchi::mabuchi_weight(m->value);
    else if (weight != MABUCHI_WEIGHT_KE)
      throw mabuchi::Error(mabuchi::ErrorCode::InvalidArgument, "unknown weight kind " + std::to_string(weight));

    const mabuchi::Profile theta = mabuchi::build_profile(m->value, u);
    mabuchi::ProfileExport e;
    e.weight = &u;
    e.profile = &theta;
    e.verification = mabuchi::verify_profile(theta);
    e.ode_identity = mabuchi::satisfies_soliton_equation(m->value, u, theta);
    e.primitive_identity = mabuchi::matches_primitive(m->value, u, theta);
    if (!e.verification.all_passed() || !e.ode_identity || !e.primitive_identity)
      throw mabuchi::Error(mabuchi::ErrorCode::InvariantViolation,
                           "profile failed certification on " + m->value.describe());
    *out = copy_out(mabuchi::render_profile(m->value, e, to_format(format), samples));
  });
}

mabuchi_status mabuchi_krs(const mabuchi_manifold* m, unsigned digits, mabuchi_format format, unsigned samples,
                           char** out) {
  return guarded([&] {
    require(m, "manifold");
    require(out, "out");
    if (digits < 16) throw mabuchi::Error(mabuchi::ErrorCode::InvalidArgument, "precision must be at least 16 digits");
    mabuchi::KrConfig config;
    config.digits = digits;
    config.tolerance_exponent = digits * 15 / 32;
    const auto solution = mabuchi::solve_kr_soliton(m->value, config);
    *out = copy_out(mabuchi::render_kr(m->value, solution, config, to_format(format), samples));
  });
}

}  // extern "C"
