#include "pvopt/pvopt.h"

#include <new>
#include <string>

#include "errors.hpp"
#include "session.hpp"

struct pvopt_session {
  pvopt::Session impl;
  std::string last_error;
};

namespace {

pvopt_status record(pvopt_session* s, pvopt_status st, const char* msg) {
  if (s) s->last_error = msg ? msg : "";
  return st;
}

// Runs body() and converts any escaping exception to a status code.
template <typename Fn>
pvopt_status guarded(pvopt_session* s, Fn&& body) {
  if (!s) return PVOPT_ERR_ARGUMENT;
  try {
    body();
    s->last_error.clear();
    return PVOPT_OK;
  } catch (const pvopt::IoError& e) {
    return record(s, PVOPT_ERR_IO, e.what());
  } catch (const pvopt::ParseError& e) {
    return record(s, PVOPT_ERR_PARSE, e.what());
  } catch (const pvopt::ValidationError& e) {
    return record(s, PVOPT_ERR_VALIDATION, e.what());
  } catch (const pvopt::NoFeasibleError& e) {
    return record(s, PVOPT_ERR_NO_FEASIBLE, e.what());
  } catch (const std::invalid_argument& e) {
    return record(s, PVOPT_ERR_ARGUMENT, e.what());
  } catch (const std::logic_error& e) {
    return record(s, PVOPT_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return record(s, PVOPT_ERR_INTERNAL, e.what());
  } catch (...) {
    return record(s, PVOPT_ERR_INTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

const char* pvopt_version(void) { return "0.1.0"; }

const char* pvopt_status_name(pvopt_status status) {
  switch (status) {
    case PVOPT_OK:
      return "ok";
    case PVOPT_ERR_ARGUMENT:
      return "argument";
    case PVOPT_ERR_IO:
      return "io";
    case PVOPT_ERR_PARSE:
      return "parse";
    case PVOPT_ERR_VALIDATION:
      return "validation";
    case PVOPT_ERR_NO_FEASIBLE:
      return "no-feasible-solution";
    case PVOPT_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

pvopt_status pvopt_session_open(const char* config_path, pvopt_session** out) {
  if (!out) return PVOPT_ERR_ARGUMENT;
  *out = nullptr;
  if (!config_path) return PVOPT_ERR_ARGUMENT;
  pvopt_session* s = new (std::nothrow) pvopt_session;
  if (!s) return PVOPT_ERR_INTERNAL;
  pvopt_status st = guarded(s, [&] { s->impl.load(config_path); });
  if (st != PVOPT_OK) {
    // Hand the failed session back so the caller can read the error, as
    // long as it closes it afterwards.
    *out = s;
    return st;
  }
  *out = s;
  return PVOPT_OK;
}

void pvopt_session_close(pvopt_session* s) { delete s; }

const char* pvopt_last_error(const pvopt_session* s) {
  return s ? s->last_error.c_str() : "";
}

pvopt_status pvopt_set_seed(pvopt_session* s, uint64_t seed) {
  return guarded(s, [&] { s->impl.set_seed(seed); });
}

pvopt_status pvopt_run_optimize(pvopt_session* s) {
  return guarded(s, [&] { s->impl.run_optimize(); });
}

pvopt_status pvopt_run_evaluate(pvopt_session* s, const char* plan_id,
                                double tilt_deg, double azimuth_deg,
                                int panels) {
  if (s && !plan_id) return record(s, PVOPT_ERR_ARGUMENT, "plan_id is null");
  return guarded(
      s, [&] { s->impl.run_evaluate(plan_id, tilt_deg, azimuth_deg, panels); });
}

pvopt_status pvopt_run_sweep_size(pvopt_session* s, const char* plan_id,
                                  double tilt_deg, double azimuth_deg,
                                  int panels_min, int panels_max) {
  if (s && !plan_id) return record(s, PVOPT_ERR_ARGUMENT, "plan_id is null");
  return guarded(s, [&] {
    s->impl.run_sweep_size(plan_id, tilt_deg, azimuth_deg, panels_min,
                           panels_max);
  });
}

pvopt_status pvopt_run_sweep_orientation(pvopt_session* s, const char* plan_id,
                                         int panels, double tilt_min,
                                         double tilt_max, double tilt_step,
                                         double az_min, double az_max,
                                         double az_step) {
  if (s && !plan_id) return record(s, PVOPT_ERR_ARGUMENT, "plan_id is null");
  return guarded(s, [&] {
    s->impl.run_sweep_orientation(plan_id, panels, tilt_min, tilt_max,
                                  tilt_step, az_min, az_max, az_step);
  });
}

pvopt_status pvopt_run_validate(pvopt_session* s) {
  return guarded(s, [&] { s->impl.run_validate(); });
}

size_t pvopt_output_count(const pvopt_session* s) {
  return s ? s->impl.outputs().size() : 0;
}

const char* pvopt_output_name(const pvopt_session* s, size_t index) {
  if (!s || index >= s->impl.outputs().size()) return nullptr;
  return s->impl.outputs()[index].first.c_str();
}

const char* pvopt_output_text(const pvopt_session* s, size_t index) {
  if (!s || index >= s->impl.outputs().size()) return nullptr;
  return s->impl.outputs()[index].second.c_str();
}

pvopt_status pvopt_write_outputs(pvopt_session* s, const char* dir) {
  if (s && !dir) return record(s, PVOPT_ERR_ARGUMENT, "dir is null");
  return guarded(s, [&] { s->impl.write_outputs(dir); });
}

}  // extern "C"
