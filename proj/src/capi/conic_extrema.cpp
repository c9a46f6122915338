#include "conic_extrema/conic_extrema.h"

#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "app/jobs.hpp"
#include "core/error.hpp"
#include "core/exparabola.hpp"
#include "core/horocycle.hpp"
#include "core/max_parabola.hpp"
#include "core/min_horocycle.hpp"

struct cx_context {
  std::string error;
  std::string json;
  std::string svg;
};

struct cx_region {
  cx::ConvexRegion region;
};

struct cx_point_set {
  cx::PointSet points;
};

struct cx_job {
  cx::app::JobSpec spec;
};

namespace {

cx_status set_error(cx_context* ctx, cx_status status, std::string_view name, const std::string& message) {
  if (ctx) ctx->error = nlohmann::json{{"error", name}, {"message", message}, {"exit_code", status}}.dump();
  return status;
}

// Runs f and translates exceptions into status codes.
template <typename F>
cx_status guarded(cx_context* ctx, F&& f) {
  if (ctx) ctx->error.clear();
  try {
    return f();
  } catch (const cx::Error& e) {
    const cx_status s = e.code() == cx::ErrorCode::VerificationFailure ? CX_VERIFICATION_FAILED
                        : e.code() == cx::ErrorCode::InvalidArgument  ? CX_INVALID_ARGUMENT
                                                                      : CX_DOMAIN_ERROR;
    return set_error(ctx, s, cx::to_string(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(ctx, CX_INTERNAL_ERROR, "OutOfMemory", "allocation failed");
  } catch (const std::exception& e) {
    return set_error(ctx, CX_INTERNAL_ERROR, "InternalError", e.what());
  }
}

}  // namespace

extern "C" {

const char* cx_version(void) { return "1.0.0"; }

cx_context* cx_context_new(void) { return new (std::nothrow) cx_context(); }
void cx_context_free(cx_context* ctx) { delete ctx; }
const char* cx_last_error(const cx_context* ctx) { return ctx ? ctx->error.c_str() : ""; }
const char* cx_result_json(const cx_context* ctx) { return ctx ? ctx->json.c_str() : ""; }
const char* cx_result_svg(const cx_context* ctx) { return ctx ? ctx->svg.c_str() : ""; }

cx_status cx_exparabolas(cx_context* ctx, const double vertices[6], cx_exparabola out[3]) {
  if (!vertices || !out) return set_error(ctx, CX_INVALID_ARGUMENT, "InvalidArgument", "null pointer");
  return guarded(ctx, [&] {
    const cx::Triangle t({vertices[0], vertices[1]}, {vertices[2], vertices[3]}, {vertices[4], vertices[5]});
    const auto ex = cx::exparabolas(t);
    for (int i = 0; i < 3; ++i) {
      const cx::Parabola& p = ex[i].parabola;
      out[i] = cx_exparabola{cx::vertex_name(ex[i].opposite),
                             ex[i].lambda,
                             p.parameter(),
                             {p.apex().x(), p.apex().y()},
                             p.axis_angle(),
                             {ex[i].tangency.x(), ex[i].tangency.y()}};
    }
    return CX_OK;
  });
}

cx_region* cx_region_new(cx_context* ctx, const double* normals, const double* offsets, size_t count,
                         double scale) {
  if (!normals || !offsets) {
    set_error(ctx, CX_INVALID_ARGUMENT, "InvalidArgument", "null pointer");
    return nullptr;
  }
  cx_region* out = nullptr;
  guarded(ctx, [&] {
    std::vector<cx::HalfPlane> hs;
    for (size_t i = 0; i < count; ++i) {
      hs.push_back(cx::HalfPlane::normalized({normals[2 * i], normals[2 * i + 1]}, offsets[i]));
    }
    out = new cx_region{cx::ConvexRegion(std::move(hs), scale > 0.0 ? scale : 1e3)};
    return CX_OK;
  });
  return out;
}

void cx_region_free(cx_region* region) { delete region; }

cx_status cx_max_parabola(cx_context* ctx, const cx_region* region, int starts, uint64_t seed,
                          cx_max_parabola_result* out) {
  if (!region || !out) return set_error(ctx, CX_INVALID_ARGUMENT, "InvalidArgument", "null pointer");
  return guarded(ctx, [&] {
    cx::MaxParabolaOptions o;
    if (starts > 0) o.starts = starts;
    o.seed = seed;
    const cx::MaxParabolaSolution s = cx::solve_max_parabola(region->region, o);
    *out = cx_max_parabola_result{s.parabola.parameter(),
                           {s.apex.x(), s.apex.y()},
                           s.axis_angle,
                           s.convergence.starts,
                           s.convergence.agreeing_starts,
                           s.convergence.spread,
                           s.convergence.certified ? 1 : 0};
    return CX_OK;
  });
}

cx_point_set* cx_point_set_new(cx_context* ctx, const double* xy, size_t count) {
  if (!xy) {
    set_error(ctx, CX_INVALID_ARGUMENT, "InvalidArgument", "null pointer");
    return nullptr;
  }
  cx_point_set* out = nullptr;
  guarded(ctx, [&] {
    std::vector<cx::HoroPoint> pts;
    for (size_t i = 0; i < count; ++i) pts.emplace_back(xy[2 * i], xy[2 * i + 1]);
    out = new cx_point_set{cx::PointSet(std::move(pts))};
    return CX_OK;
  });
  return out;
}

void cx_point_set_free(cx_point_set* points) { delete points; }

cx_status cx_min_horocycle(cx_context* ctx, const cx_point_set* points, int grid, cx_horocycle* out,
                           int* unique) {
  if (!points || !out) return set_error(ctx, CX_INVALID_ARGUMENT, "InvalidArgument", "null pointer");
  return guarded(ctx, [&] {
    cx::MinHorocycleOptions o;
    if (grid > 0) o.grid = grid;
    const cx::MinHorocycleSolution s = cx::solve_min_horocycle(points->points, o);
    *out = cx_horocycle{s.horocycle.theta(), s.horocycle.a()};
    if (unique) *unique = s.unique ? 1 : 0;
    return CX_OK;
  });
}

cx_status cx_min_size_for_point(cx_context* ctx, double theta, double x, double y, double* out) {
  if (!out) return set_error(ctx, CX_INVALID_ARGUMENT, "InvalidArgument", "null pointer");
  return guarded(ctx, [&] {
    *out = cx::min_size_for_point(theta, cx::HoroPoint(x, y));
    return CX_OK;
  });
}

cx_status cx_lemma_shrink(cx_context* ctx, double a, double omega, cx_horocycle* out) {
  if (!out) return set_error(ctx, CX_INVALID_ARGUMENT, "InvalidArgument", "null pointer");
  return guarded(ctx, [&] {
    const cx::Horocycle h = cx::lemma_shrink(a, omega);
    *out = cx_horocycle{h.theta(), h.a()};
    return CX_OK;
  });
}

cx_job* cx_job_new(cx_context* ctx, const char* command) {
  const auto c = command ? cx::app::parse_command(command) : std::nullopt;
  if (!c) {
    set_error(ctx, CX_INVALID_ARGUMENT, "InvalidArgument", std::string("unknown command ") + (command ? command : "(null)"));
    return nullptr;
  }
  auto* job = new (std::nothrow) cx_job();
  if (job) job->spec.command = *c;
  return job;
}

void cx_job_free(cx_job* job) { delete job; }

cx_status cx_job_set_input(cx_job* job, const char* path) {
  if (!job || !path) return CX_INVALID_ARGUMENT;
  job->spec.input_path = path;
  return CX_OK;
}

cx_status cx_job_set_output(cx_job* job, const char* path) {
  if (!job || !path) return CX_INVALID_ARGUMENT;
  job->spec.output_path = path;
  return CX_OK;
}

cx_status cx_job_set_svg(cx_job* job, const char* path) {
  if (!job) return CX_INVALID_ARGUMENT;
  if (path) {
    job->spec.svg_path = path;
  } else {
    job->spec.svg_path.reset();
  }
  return CX_OK;
}

cx_status cx_job_set_seed(cx_job* job, uint64_t seed) {
  if (!job) return CX_INVALID_ARGUMENT;
  job->spec.options.seed = seed;
  return CX_OK;
}

cx_status cx_job_set_grid(cx_job* job, int grid) {
  if (!job || grid <= 0) return CX_INVALID_ARGUMENT;
  job->spec.options.grid = grid;
  return CX_OK;
}

cx_status cx_job_set_starts(cx_job* job, int starts) {
  if (!job || starts <= 0) return CX_INVALID_ARGUMENT;
  job->spec.options.starts = starts;
  return CX_OK;
}

cx_status cx_job_set_tolerance(cx_job* job, const char* key, double value) {
  if (!job || !key) return CX_INVALID_ARGUMENT;
  job->spec.options.tolerances[key] = value;
  return CX_OK;
}

cx_status cx_job_run(cx_context* ctx, const cx_job* job) {
  if (!job) return set_error(ctx, CX_INVALID_ARGUMENT, "InvalidArgument", "null job");
  if (job->spec.input_path.empty() || job->spec.output_path.empty()) {
    return set_error(ctx, CX_IO_ERROR, "IoError", "input and output paths are required");
  }
  if (ctx) ctx->error.clear();
  try {
    const cx::app::RunOutcome r = cx::app::run(job->spec);
    if (ctx) ctx->error = r.diagnostic;
    return static_cast<cx_status>(r.exit_code);
  } catch (const std::exception& e) {
    return set_error(ctx, CX_INTERNAL_ERROR, "InternalError", e.what());
  }
}

cx_status cx_job_execute(cx_context* ctx, const cx_job* job, const char* input_json, int want_svg) {
  if (!ctx || !job || !input_json) return set_error(ctx, CX_INVALID_ARGUMENT, "InvalidArgument", "null pointer");
  ctx->error.clear();
  ctx->json.clear();
  ctx->svg.clear();
  try {
    cx::app::JobOptions options = job->spec.options;
    options.want_svg = want_svg != 0;
    cx::app::JobOutput out;
    const cx::app::RunOutcome r = cx::app::execute_to(job->spec.command, input_json, options, out);
    ctx->error = r.diagnostic;
    ctx->json = out.json;
    if (out.svg) ctx->svg = *out.svg;
    return static_cast<cx_status>(r.exit_code);
  } catch (const std::exception& e) {
    return set_error(ctx, CX_INTERNAL_ERROR, "InternalError", e.what());
  }
}

}  // extern "C"
