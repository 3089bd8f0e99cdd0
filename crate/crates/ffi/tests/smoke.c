#include <stdio.h>
#include <string.h>
#include "rhl.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s (line %d): %s\n", #cond, __LINE__, rhl_last_error() ? rhl_last_error() : ""); return 1; } } while (0)

int main(void) {
    RhlColoring *c = NULL;
    RhlPattern *t = NULL;
    CHECK(rhl_coloring_build("tight-lb", 9, 0, &c) == RHL_STATUS_OK);
    CHECK(rhl_coloring_palette_size(c) == 4);
    CHECK(rhl_pattern_from_name("T", &t) == RHL_STATUS_OK);

    bool found = true;
    size_t len = 99;
    uint32_t verts[8];
    CHECK(rhl_find_rainbow_copy(c, t, &found, verts, 8, &len) == RHL_STATUS_OK);
    CHECK(!found && len == 0);

    char *json = NULL;
    CHECK(rhl_certify(c, RHL_THEOREM_TIGHT, &json) == RHL_STATUS_OK);
    CHECK(strstr(json, "TIGHT_PARTITION") != NULL);
    CHECK(rhl_verify_certificate(c, json) == RHL_STATUS_OK);
    rhl_string_free(json);

    uint32_t ar = 0;
    CHECK(rhl_anti_ramsey(RHL_HOST_KIND_COMPLETE, 5, t, 0, 60, 1, &ar) == RHL_STATUS_OK);
    CHECK(ar == 3);

    CHECK(rhl_coloring_parse("host complete 3\n", &c) == RHL_STATUS_PARSE_ERROR);
    CHECK(rhl_last_error() != NULL);

    rhl_pattern_free(t);
    rhl_coloring_free(c);
    printf("ok\n");
    return 0;
}
