#ifndef QUADREP_QUADREP_H
#define QUADREP_QUADREP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QR_API __declspec(dllexport)
#else
#define QR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Polynomial maps between complex quadrics: catalog, documents, certification
 * and numeric invariants. Every function returning qr_status records a message
 * for qr_last_error() on failure. Strings returned through char** are owned by
 * the caller and released with qr_string_free. */

typedef struct qr_map qr_map;

typedef enum qr_status {
  QR_OK = 0,
  QR_ERR_INVALID_ARGUMENT = 1,
  QR_ERR_DIMENSION = 2,
  QR_ERR_FORMAT = 3,
  QR_ERR_CERTIFICATION = 4,
  QR_ERR_NUMERIC = 5,
  QR_ERR_TOO_LARGE = 6,
  QR_ERR_INTERNAL = 7
} qr_status;

typedef enum qr_verify_mode { QR_VERIFY_EXACT = 0, QR_VERIFY_GRID = 1, QR_VERIFY_SAMPLED = 2 } qr_verify_mode;

typedef enum qr_check {
  QR_CHECK_DEGREE = 0,
  QR_CHECK_HOPF = 1,
  QR_CHECK_HEMISPHERE = 2,
  QR_CHECK_HOMOTOPIES = 3
} qr_check;

typedef struct qr_map_info {
  size_t domain_dim;
  size_t codomain_dim;
  int has_order;
  unsigned order;
  int expanded;
  size_t terms; /* total over components; 0 when not expanded */
} qr_map_info;

typedef struct qr_verify_options {
  qr_verify_mode mode;
  size_t samples; /* sampled mode; 0 means 10000 */
  uint64_t seed;
} qr_verify_options;

typedef struct qr_invariant_options {
  size_t samples; /* 0 means the check's default */
  uint64_t seed;
} qr_invariant_options;

/* Message of the last failed call on this thread; never NULL. */
QR_API const char* qr_last_error(void);
QR_API const char* qr_version(void);

/* Worker threads for scans and evaluation grids; 0 means all cores. */
QR_API void qr_set_threads(unsigned n);
QR_API unsigned qr_threads(void);

/* Certified representative of "pi_n:n,d", "pi_np1:n", "pi_np2:n", "pi3_s2:d" or
 * "pi_np3:n". Maps whose expansion would exceed expansion_budget coefficient
 * products keep only their construction; 0 selects the default budget. */
QR_API qr_status qr_catalog(const char* target, size_t expansion_budget, qr_map** out);
QR_API qr_status qr_read_document(const char* text, size_t length, qr_map** out);
/* Expands structured maps within budget (0: default) before writing. */
QR_API qr_status qr_write_document(const qr_map* map, size_t expansion_budget, char** out);
QR_API void qr_map_free(qr_map* map);
QR_API void qr_string_free(char* s);

QR_API qr_status qr_map_info_get(const qr_map* map, qr_map_info* out);
QR_API qr_status qr_map_label(const qr_map* map, char** out);

/* Reports are single JSON objects. *pass is 1 when every check in the report
 * passed. A failed check is not an error: the call still returns QR_OK. */
QR_API qr_status qr_verify(const qr_map* map, const qr_verify_options* options, int* pass, char** report);
QR_API qr_status qr_invariant(const qr_map* map, qr_check check, const qr_invariant_options* options, int* pass,
                              char** report);

#ifdef __cplusplus
}
#endif

#endif
