#ifndef CONIC_EXTREMA_H
#define CONIC_EXTREMA_H

#include <stddef.h>
#include <stdint.h>

#if defined(CX_BUILDING_LIBRARY)
#define CX_API __attribute__((visibility("default")))
#else
#define CX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. The first four match the command-line exit codes. */
typedef enum cx_status {
  CX_OK = 0,
  CX_DOMAIN_ERROR = 1,
  CX_VERIFICATION_FAILED = 2,
  CX_IO_ERROR = 3,
  CX_INVALID_ARGUMENT = 4,
  CX_INTERNAL_ERROR = 5
} cx_status;

typedef struct cx_context cx_context;
typedef struct cx_region cx_region;
typedef struct cx_point_set cx_point_set;
typedef struct cx_job cx_job;

typedef enum cx_command {
  CX_CMD_EXPARABOLA = 0,
  CX_CMD_MAX_PARABOLA = 1,
  CX_CMD_LEMMA_SHRINK = 2,
  CX_CMD_MIN_HOROCYCLE = 3,
  CX_CMD_VERIFY = 4
} cx_command;

typedef struct cx_exparabola {
  char opposite; /* 'A', 'B' or 'C' */
  double lambda;
  double parameter;
  double apex[2];
  double axis_angle;
  double tangency[2];
} cx_exparabola;

typedef struct cx_max_parabola_result {
  double parameter;
  double apex[2];
  double axis_angle;
  int starts;
  int agreeing_starts;
  double spread;
  int certified;
} cx_max_parabola_result;

typedef struct cx_horocycle {
  double theta;
  double a;
} cx_horocycle;

CX_API const char* cx_version(void);

/* Context: owns the last error and the last textual result. */
CX_API cx_context* cx_context_new(void);
CX_API void cx_context_free(cx_context* ctx);
/* Single-line JSON describing the last failure, or "" */
CX_API const char* cx_last_error(const cx_context* ctx);
CX_API const char* cx_result_json(const cx_context* ctx);
CX_API const char* cx_result_svg(const cx_context* ctx);

/* Triangle as six numbers xA, yA, xB, yB, xC, yC; out receives AB, BC, CA. */
CX_API cx_status cx_exparabolas(cx_context* ctx, const double vertices[6], cx_exparabola out[3]);

/* Half-planes normal . x <= offset; normals need not be unit length. */
CX_API cx_region* cx_region_new(cx_context* ctx, const double* normals, const double* offsets, size_t count,
                                double scale);
CX_API void cx_region_free(cx_region* region);
CX_API cx_status cx_max_parabola(cx_context* ctx, const cx_region* region, int starts, uint64_t seed,
                                 cx_max_parabola_result* out);

CX_API cx_point_set* cx_point_set_new(cx_context* ctx, const double* xy, size_t count);
CX_API void cx_point_set_free(cx_point_set* points);
CX_API cx_status cx_min_horocycle(cx_context* ctx, const cx_point_set* points, int grid, cx_horocycle* out,
                                  int* unique);

CX_API cx_status cx_min_size_for_point(cx_context* ctx, double theta, double x, double y, double* out);
CX_API cx_status cx_lemma_shrink(cx_context* ctx, double a, double omega, cx_horocycle* out);

/* Jobs mirror the command line: JSON in, JSON (and optional SVG) out. */
CX_API cx_job* cx_job_new(cx_context* ctx, const char* command);
CX_API void cx_job_free(cx_job* job);
CX_API cx_status cx_job_set_input(cx_job* job, const char* path);
CX_API cx_status cx_job_set_output(cx_job* job, const char* path);
CX_API cx_status cx_job_set_svg(cx_job* job, const char* path);
CX_API cx_status cx_job_set_seed(cx_job* job, uint64_t seed);
CX_API cx_status cx_job_set_grid(cx_job* job, int grid);
CX_API cx_status cx_job_set_starts(cx_job* job, int starts);
CX_API cx_status cx_job_set_tolerance(cx_job* job, const char* key, double value);
/* Reads and writes files. */
CX_API cx_status cx_job_run(cx_context* ctx, const cx_job* job);
/* In memory; results via cx_result_json / cx_result_svg. */
CX_API cx_status cx_job_execute(cx_context* ctx, const cx_job* job, const char* input_json, int want_svg);

#ifdef __cplusplus
}
#endif

#endif
