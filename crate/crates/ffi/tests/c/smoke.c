#include <stdio.h>
#include <string.h>

#include "qsymkit.h"

static int fail(const char *what) {
    const char *e = qsymkit_last_error();
    fprintf(stderr, "%s: %s\n", what, e ? e : "(no message)");
    return 1;
}

int main(void) {
    QsymkitPoset *p = NULL;
    if (qsymkit_poset_from_json("{\"n\":3,\"covers\":[[1,2],[1,3]]}", &p) != QSYMKIT_STATUS_OK)
        return fail("poset");
    uint64_t ext = 0;
    qsymkit_poset_linear_extensions(p, &ext);

    QsymkitElement *k = NULL;
    if (qsymkit_kp_psi(p, "all", &k) != QSYMKIT_STATUS_OK)
        return fail("kp");
    char *text = NULL;
    qsymkit_element_to_text(k, true, &text);
    printf("%llu %s\n", (unsigned long long)ext, text);
    qsymkit_string_free(text);

    QsymkitElement *h = NULL;
    if (qsymkit_element_convert(k, "h", &h) != QSYMKIT_STATUS_NOT_SYMMETRIC)
        return fail("expected NOT_SYMMETRIC");
    if (qsymkit_last_error() == NULL)
        return 1;

    qsymkit_element_free(k);
    qsymkit_poset_free(p);
    return 0;
}
