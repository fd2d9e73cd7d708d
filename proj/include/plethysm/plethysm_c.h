#ifndef PLETHYSM_C_H_
#define PLETHYSM_C_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(PLETHYSM_BUILDING)
#define PLETHYSM_API __attribute__((visibility("default")))
#else
#define PLETHYSM_API
#endif

/* Status codes; the same numbering as the C++ ErrorCode. */
enum {
  PLETHYSM_OK               = 0,
  PLETHYSM_INVALID_ARGUMENT = 1,
  PLETHYSM_SIZE_CAP         = 2,
  PLETHYSM_MISMATCH         = 3,
  PLETHYSM_PARSE            = 4,
  PLETHYSM_CAP_TOO_SMALL    = 5,
  PLETHYSM_NOT_FACTORIZABLE = 6,
  PLETHYSM_FLAVOR           = 7,
  PLETHYSM_LAW_FAILURE      = 8,
  PLETHYSM_INTERNAL         = 9
};

typedef struct plethysm_fixture plethysm_fixture;

typedef struct plethysm_options {
  int      cap;
  int      nmax;
  int      isolated_cap;
  int      target_vect; /* 0: FinSet, 1: FinVect */
  int      variant_nd;  /* 0: full cospans, 1: nd */
  unsigned seed;
  int      summary;
} plethysm_options;

PLETHYSM_API void        plethysm_options_default(plethysm_options* o);
PLETHYSM_API const char* plethysm_version(void);
/* Message of the last failing call on this thread, or "". */
PLETHYSM_API const char* plethysm_last_error(void);
PLETHYSM_API void        plethysm_string_free(char* s);

PLETHYSM_API int  plethysm_fixture_parse(const char* text, plethysm_fixture** out);
PLETHYSM_API int  plethysm_fixture_load(const char* path, plethysm_fixture** out);
PLETHYSM_API int  plethysm_fixture_zoo(const char*             name,
                                       const plethysm_options* o,
                                       plethysm_fixture**      out);
PLETHYSM_API void plethysm_fixture_free(plethysm_fixture* f);
PLETHYSM_API int  plethysm_fixture_emit(const plethysm_fixture* f, char** out);
PLETHYSM_API int  plethysm_fixture_shape(const plethysm_fixture* f,
                                         size_t*                 objects,
                                         size_t*                 morphisms);
/* |ρ(A, B)| by object index; 0 when the fixture has no bimodule. */
PLETHYSM_API int  plethysm_fixture_value_size(const plethysm_fixture* f,
                                              int                     a,
                                              int                     b,
                                              size_t*                 out);
/* Law suite on a loaded fixture: suite names as for `check`. *lawful is
 * 1 when every law held. */
PLETHYSM_API int  plethysm_fixture_check(const plethysm_fixture* f,
                                         const char*             suite,
                                         const plethysm_options* o,
                                         int*                    lawful);

/* One CLI command. args are the positional arguments after the command;
 * stdin_text is read for a fixture argument of "-" (or none). *status is
 * 0 lawful, 1 a law failed. The report is owned by the caller. */
PLETHYSM_API int plethysm_run(const char*             command,
                              const char* const*      args,
                              int                     nargs,
                              const char*             stdin_text,
                              const plethysm_options* o,
                              char**                  report,
                              int*                    status);

#ifdef __cplusplus
}
#endif

#endif /* PLETHYSM_C_H_ */
