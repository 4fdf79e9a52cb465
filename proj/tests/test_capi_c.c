/* Compiles the public header as C and drives one command through it. */
#include <stdio.h>
#include <string.h>

#include "mcsl/mcsl.h"

int main(void) {
    mcsl_document* doc = NULL;
    mcsl_result* r = NULL;
    mcsl_guard g = mcsl_guard_defaults();
    int ok = 1;
    if (mcsl_document_load("catalog:B2-overlap", &doc) != MCSL_OK) return 1;
    if (mcsl_check(doc, 2, 2, &g, &r) != MCSL_OK) ok = 0;
    if (r && strstr(mcsl_result_json(r), "\"verdict\": \"pass\"") == NULL) ok = 0;
    mcsl_result_free(r);
    mcsl_document_free(doc);
    if (mcsl_document_parse("semilattice S\n  elements 0 a\n  order 0<q\n", &doc) != MCSL_ERR_INPUT) ok = 0;
    if (strlen(mcsl_last_error()) == 0) ok = 0;
    printf("%s\n", ok ? "ok" : "failed");
    return ok ? 0 : 1;
}
