/* Exercises the C interface from C. */
#include "lgmirror.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

int main(void) {
  lgm_poly* f = NULL;
  lgm_poly* ft = NULL;
  lgm_group* g = NULL;
  lgm_group* gt = NULL;
  char* s = NULL;
  int verdict = -1;
  int64_t w[3], d = 0, cf = 0, x = 0;
  lgm_mirror_values mv;
  lgm_format fmt;

  EXPECT(lgm_poly_parse("x^2+x*y^3+y*z^5", 0, &f) == LGM_OK);
  EXPECT(lgm_poly_nvars(f) == 3);
  EXPECT(lgm_poly_unit_coefficients(f) == 1);
  EXPECT(lgm_poly_exponent(f, 1, 0, &x) == LGM_OK && x == 1);
  EXPECT(lgm_poly_exponent(f, 3, 0, &x) == LGM_ERR_INVALID_ARGUMENT);
  EXPECT(lgm_poly_weights(f, 0, w, &d, &cf) == LGM_OK);
  EXPECT(w[0] == 15 && w[1] == 5 && w[2] == 5 && d == 30 && cf == 5);
  EXPECT(lgm_poly_weights(f, 1, w, &d, NULL) == LGM_OK && d == 6);

  EXPECT(lgm_poly_transpose(f, &ft) == LGM_OK);
  EXPECT(lgm_poly_to_string(ft, &s) == LGM_OK);
  EXPECT(strcmp(s, "x^2*y+y^3*z+z^5") == 0);
  lgm_string_free(s);

  EXPECT(lgm_group_parse(f, "G0", &g) == LGM_OK);
  EXPECT(lgm_group_order(g) == 6);
  EXPECT(lgm_group_dual(f, g, &gt) == LGM_OK);
  EXPECT(lgm_group_order(gt) == 5);
  EXPECT(lgm_group_junior(gt, &x) == LGM_OK && x == 2);
  EXPECT(lgm_group_to_string(gt, &s) == LGM_OK);
  EXPECT(strcmp(s, "1/5(1,3,1)") == 0);
  lgm_string_free(s);

  EXPECT(lgm_mirror(f, g, &mv) == LGM_OK);
  EXPECT(mv.genus == 2 && mv.junior == 2 && mv.stringy_euler == -2 && mv.milnor == -2);
  EXPECT(mv.n_dolgachev == 0 && mv.n_gabrielov == 0);
  EXPECT(mv.gamma_prime[0] == 5 && mv.gamma_prime[1] == 5 && mv.gamma_prime[2] == 5);
  EXPECT(mv.a_eq_gamma && mv.g_eq_j && mv.e_eq_mu);

  EXPECT(lgm_report_analyze(f, g, LGM_FORMAT_JSON, &s, &verdict) == LGM_OK);
  EXPECT(verdict == 0);
  EXPECT(strstr(s, "\"genus\": 2") != NULL);
  lgm_string_free(s);

  /* errors carry a status and a message */
  lgm_poly* bad = NULL;
  EXPECT(lgm_poly_parse("x^2+y^", 0, &bad) == LGM_ERR_SYNTAX);
  EXPECT(bad == NULL);
  EXPECT(strlen(lgm_last_error()) > 0);
  EXPECT(lgm_poly_parse("x^2+y^2", 3, &bad) == LGM_ERR_NOT_SQUARE);
  EXPECT(strcmp(lgm_status_name(LGM_ERR_NOT_SQUARE), "NotSquare") == 0);
  EXPECT(lgm_poly_parse(NULL, 0, &bad) == LGM_ERR_NULL_ARGUMENT);
  lgm_group* bg = NULL;
  EXPECT(lgm_group_parse(f, "1/7(1,1,1)", &bg) != LGM_OK);
  EXPECT(lgm_parse_format("csv", &fmt) == LGM_OK && fmt == LGM_FORMAT_CSV);
  EXPECT(lgm_parse_format("yaml", &fmt) != LGM_OK);

  EXPECT(lgm_catalog_check("seidel", LGM_FORMAT_TEXT, &s, &verdict) == LGM_OK);
  EXPECT(verdict == 0);
  lgm_string_free(s);
  EXPECT(lgm_catalog_check("missing", LGM_FORMAT_TEXT, &s, &verdict) == LGM_ERR_INVALID_ARGUMENT);

  EXPECT(lgm_enumerate(30, 300, "I", 0, LGM_FORMAT_CSV, &s) == LGM_OK);
  EXPECT(strncmp(s, "polynomial,type,det,cf,intermediate_groups\n", 43) == 0);
  lgm_string_free(s);

  lgm_group_free(gt);
  lgm_group_free(g);
  lgm_poly_free(ft);
  lgm_poly_free(f);
  lgm_poly_free(NULL);
  if (failures) fprintf(stderr, "%d failures\n", failures);
  else printf("C API: all checks passed\n");
  return failures != 0;
}
