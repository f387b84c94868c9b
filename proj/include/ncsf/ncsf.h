#ifndef NCSF_NCSF_H
#define NCSF_NCSF_H

#include <stddef.h>

#if defined(_WIN32)
#define NCSF_API __declspec(dllexport)
#else
#define NCSF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call that can fail returns a status; on failure a message is kept in
   thread-local storage and read with ncsf_last_error(). Strings returned
   through char** are owned by the caller and released with ncsf_string_free. */
typedef enum ncsf_status {
  NCSF_OK = 0,
  NCSF_E_INVALID_ARGUMENT = 1,
  NCSF_E_PARSE = 2,
  NCSF_E_DOMAIN = 3,
  NCSF_E_UNSUPPORTED = 4,
  NCSF_E_INTERNAL = 5
} ncsf_status;

typedef enum ncsf_format { NCSF_TEXT = 0, NCSF_JSON = 1 } ncsf_format;

/* Linear combination over Z[q] in one basis: H R S Qp (NSym), M F Sd P
   (QSym) or h s (symmetric functions). */
typedef struct ncsf_expr ncsf_expr;
typedef struct ncsf_report ncsf_report;

NCSF_API const char* ncsf_version(void);
NCSF_API const char* ncsf_status_string(ncsf_status status);
NCSF_API const char* ncsf_last_error(void);
NCSF_API void ncsf_string_free(char* s);

/* "5*S[4,2,3] - (q^2-2*q+1)*S[3,4,2]" */
NCSF_API ncsf_status ncsf_expr_parse(const char* text, ncsf_expr** out);
NCSF_API ncsf_status ncsf_expr_from_json(const char* json, ncsf_expr** out);
/* index is a composition such as "3,1,2" or "[3,1,2]"; "" or "-" is empty. */
NCSF_API ncsf_status ncsf_expr_basis_element(const char* basis, const char* index, ncsf_expr** out);
NCSF_API void ncsf_expr_free(ncsf_expr* e);

NCSF_API ncsf_status ncsf_expr_basis(const ncsf_expr* e, char** out);
NCSF_API ncsf_status ncsf_expr_render(const ncsf_expr* e, ncsf_format format, char** out);
NCSF_API ncsf_status ncsf_expr_equal(const ncsf_expr* a, const ncsf_expr* b, int* out);
/* Coefficient of the basis element with the given index, as a polynomial. */
NCSF_API ncsf_status ncsf_expr_coefficient(const ncsf_expr* e, const char* index, char** out);

/* Conversion within one family (NSym, QSym or symmetric functions). */
NCSF_API ncsf_status ncsf_expr_convert(const ncsf_expr* e, const char* target, ncsf_expr** out);
/* Result is in the basis of a. Supported for NSym and symmetric functions. */
NCSF_API ncsf_status ncsf_expr_product(const ncsf_expr* a, const ncsf_expr* b, ncsf_expr** out);
NCSF_API ncsf_status ncsf_expr_add(const ncsf_expr* a, const ncsf_expr* b, ncsf_expr** out);
NCSF_API ncsf_status ncsf_expr_specialize_q(const ncsf_expr* e, long value, ncsf_expr** out);
/* <f, g> for f in NSym and g in QSym. */
NCSF_API ncsf_status ncsf_expr_pairing(const ncsf_expr* f, const ncsf_expr* g, char** out);
/* Forgetful map NSym -> Sym, result in the given symmetric basis ("h" or "s"). */
NCSF_API ncsf_status ncsf_chi(const ncsf_expr* f, const char* target, ncsf_expr** out);

/* kind: "S" (S_alpha H_s), "E" (S_alpha S_{1^s}), "Qp" (Qp_alpha H_s),
   "left" (H_s S_alpha), "Sd" (F_s Sd_alpha). */
NCSF_API ncsf_status ncsf_pieri(const char* kind, const char* alpha, int s, ncsf_expr** out);
/* kind "e" gives F_{1^r}^perp S_alpha, kind "h" gives F_r^perp S_alpha. */
NCSF_API ncsf_status ncsf_perp(const char* kind, int r, const char* alpha, ncsf_expr** out);

NCSF_API ncsf_status ncsf_transition_matrix(int n, const char* from, const char* to, ncsf_format format, char** out);
/* Writes the n=4 reference matrices into dir, one file per matrix. */
NCSF_API ncsf_status ncsf_emit_golden(const char* dir);

/* Immaculate tableaux of a shape; content NULL lists standard tableaux. */
NCSF_API ncsf_status ncsf_tableaux(const char* shape, const char* content, ncsf_format format, char** out);
/* Skew dual immaculate function alpha/beta in M, F, Sd or P. */
NCSF_API ncsf_status ncsf_skew(const char* alpha, const char* beta, const char* basis, ncsf_expr** out);
NCSF_API ncsf_status ncsf_skew_paths(const char* alpha, const char* beta, ncsf_format format, char** out);

NCSF_API ncsf_status ncsf_check_names(char** out);
NCSF_API ncsf_status ncsf_check_run(const char* name, int max_n, ncsf_report** out);
NCSF_API int ncsf_report_passed(const ncsf_report* r);
NCSF_API ncsf_status ncsf_report_render(const ncsf_report* r, ncsf_format format, char** out);
NCSF_API void ncsf_report_free(ncsf_report* r);

#ifdef __cplusplus
}
#endif

#endif
