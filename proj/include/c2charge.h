/* C API for the c2charge library.
 *
 * Opaque handles and integer error codes; every function returning a status
 * leaves outputs untouched on failure.  Strings returned through char**
 * outputs are heap-allocated and must be released with c2c_free_string.
 * All functions are thread-safe; a crystal handle is immutable after
 * creation and may be shared across threads.
 */

#ifndef C2CHARGE_H
#define C2CHARGE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum c2c_status {
  C2C_OK = 0,
  C2C_EINVAL = 1,   /* bad argument (e.g. non-dominant lambda) */
  C2C_EDOMAIN = 2,  /* operation undefined there (e.g. charge of a
                       non-dominant weight) */
  C2C_ERANGE = 3,   /* index out of range */
  C2C_EFORMAT = 4,  /* unknown output format */
  C2C_EINTERNAL = 5
} c2c_status;

const char *c2c_status_name(c2c_status s);

/* A built crystal B(lambda) together with its atomic decomposition. */
typedef struct c2c_crystal c2c_crystal;

c2c_status c2c_crystal_create(long long l1, long long l2, c2c_crystal **out);
void c2c_crystal_free(c2c_crystal *cr);

long long c2c_crystal_size(const c2c_crystal *cr);

/* str2 = (a,b,c,d) and the weight of element idx (0-based, ordered
 * lexicographically on str2). */
c2c_status c2c_crystal_element(const c2c_crystal *cr, long long idx,
                               long long str2_out[4], long long weight_out[2]);

/* eps_out = (eps1, eps2, eps12), phi_out = (phi1, phi2, phi12). */
c2c_status c2c_element_stats(const c2c_crystal *cr, long long idx,
                             long long eps_out[3], long long phi_out[3]);

/* Preatomic number, atomic number and atom top of element idx. */
c2c_status c2c_element_decomp(const c2c_crystal *cr, long long idx,
                              long long *pat_out, long long *at_out,
                              long long zeta_out[2]);

/* Charge of element idx; C2C_EDOMAIN unless its weight is dominant. */
c2c_status c2c_element_charge(const c2c_crystal *cr, long long idx,
                              long long *charge_out);

long long c2c_weyl_dim(long long l1, long long l2);

/* Kostka-Foulkes polynomial as a "1*q^2 + 1*q^4" term list, from the
 * Lusztig oracle and from the charge statistic respectively. */
c2c_status c2c_kostka_oracle(long long l1, long long l2, long long m1,
                             long long m2, char **poly_out);
c2c_status c2c_kostka_charge(long long l1, long long l2, long long m1,
                             long long m2, char **poly_out);

/* Formatted command output.  format is "json", "csv" or "text". */
c2c_status c2c_render_crystal(long long l1, long long l2, const char *format,
                              char **out);
c2c_status c2c_render_decompose(long long l1, long long l2, const char *format,
                                char **out);

/* have_mu == 0 tabulates every dominant mu <= lambda.  *all_match_out is 1
 * when the charge generating function agrees with the oracle on every row. */
c2c_status c2c_render_kostka(long long l1, long long l2, const char *format,
                             int have_mu, long long m1, long long m2,
                             char **out, int *all_match_out);

/* DOT text of the Bruhat graph; m < 0 renders the untwisted orientation. */
c2c_status c2c_render_graph(long long l1, long long l2, long long m,
                            char **out);

/* The acceptance property suite up to the given bound. */
c2c_status c2c_render_verify(long long bound, long long jobs,
                             const char *format, char **out,
                             int *all_passed_out);

void c2c_free_string(char *s);

#ifdef __cplusplus
}
#endif

#endif /* C2CHARGE_H */
