/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "vbpb/vbpb.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond);  \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static const char* canonical =
    "{\"construct\": {\"kind\": \"canonical\", \"l\": 1, \"k\": 1, \"sample\": [[[\"0\"]], [[\"1\"]]]}}";

int main(void) {
  vbpb_vbg* v = NULL;
  vbpb_vbg* d = NULL;
  vbpb_vbg* w = NULL;
  vbpb_report* r = NULL;
  char* s = NULL;
  size_t l = 0, k = 0, no = 0, na = 0, np = 99;
  long total = 0, failed = -1;

  EXPECT(strlen(vbpb_version()) > 0);
  EXPECT(strcmp(vbpb_status_name(VBPB_E_PARSE), "parse error") == 0);
  EXPECT(strcmp(vbpb_status_name(42), "unknown status") == 0);

  EXPECT(vbpb_parse(canonical, strlen(canonical), &v) == VBPB_OK);
  EXPECT(vbpb_dims(v, &l, &k, &no, &na) == VBPB_OK);
  EXPECT(l == 1 && k == 1 && no == 2 && na == 2);
  EXPECT(vbpb_validate(v, &np, NULL) == VBPB_OK && np == 0);

  EXPECT(vbpb_to_string(v, &s) == VBPB_OK);
  EXPECT(vbpb_parse(s, strlen(s), &w) == VBPB_OK);
  vbpb_string_free(s);
  s = NULL;
  vbpb_free(w);
  w = NULL;

  EXPECT(vbpb_dual(v, &d) == VBPB_OK);
  EXPECT(vbpb_validate(d, &np, NULL) == VBPB_OK && np == 0);

  EXPECT(vbpb_describe_core(v, &s) == VBPB_OK && s && strlen(s) > 0);
  vbpb_string_free(s);
  EXPECT(vbpb_describe_frames(v, 3, 2, &s) == VBPB_OK && strncmp(s, "#vbpb-frames\t1\n", 15) == 0);
  vbpb_string_free(s);

  EXPECT(vbpb_check(v, "all", "capi", 7, 5, &r) == VBPB_OK);
  EXPECT(vbpb_report_counts(r, &total, &failed) == VBPB_OK);
  EXPECT(total > 0 && failed == 0);
  EXPECT(vbpb_report_emit(r, VBPB_FORMAT_MACHINE, &s) == VBPB_OK && strncmp(s, "#vbpb-report\t1\n", 15) == 0);
  vbpb_string_free(s);
  vbpb_report_free(r);
  r = NULL;

  /* error paths */
  EXPECT(vbpb_check(v, "bogus", "capi", 7, 5, &r) == VBPB_E_ARGUMENT && r == NULL);
  EXPECT(strlen(vbpb_last_error()) > 0);
  EXPECT(vbpb_parse("{", 1, &w) == VBPB_E_PARSE && w == NULL);
  EXPECT(vbpb_load("/nonexistent/file.vbg", &w) == VBPB_E_IO);
  EXPECT(vbpb_load(VBPB_DATA_DIR "/corrupt/corrupted.vbg", &w) == VBPB_E_VALIDATION);
  EXPECT(strstr(vbpb_last_error(), "(1,2)") != NULL);
  EXPECT(vbpb_dims(NULL, &l, &k, &no, &na) == VBPB_E_ARGUMENT);

  vbpb_free(v);
  vbpb_free(d);
  vbpb_free(NULL);
  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  else printf("capi: ok\n");
  return failures ? 1 : 0;
}
