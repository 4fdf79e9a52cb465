#include "mcsl/mcsl.h"

#include <exception>
#include <new>
#include <string>

#include "io/report.hpp"

struct mcsl_document {
    mcsl::dsl::Document doc;
    std::string text;
};

struct mcsl_result {
    int verdict;
    std::string json;
    std::string text;
};

namespace {

thread_local std::string last_error;

mcsl_status fail(mcsl_status s, std::string message) {
    last_error = std::move(message);
    return s;
}

template <class F>
mcsl_status guarded(F&& f) {
    last_error.clear();
    try {
        return f();
    } catch (const mcsl::Error& e) {
        switch (e.kind()) {
            case mcsl::ErrorKind::input: return fail(MCSL_ERR_INPUT, e.what());
            case mcsl::ErrorKind::guard: return fail(MCSL_ERR_GUARD, e.what());
            case mcsl::ErrorKind::precondition: return fail(MCSL_ERR_PRECONDITION, e.what());
        }
        return fail(MCSL_ERR_INTERNAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(MCSL_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(MCSL_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(MCSL_ERR_INTERNAL, "unknown error");
    }
}

mcsl::Guard to_guard(const mcsl_guard* g) {
    if (!g) return {};
    return {g->carrier, g->enum_semilattice, g->enum_nonzero, g->powerset_points, g->enum_expansion};
}

mcsl_status deliver(const mcsl::report::Output& o, mcsl_result** out) {
    *out = new mcsl_result{o.verdict, mcsl::report::render_json(o), o.text};
    return o.verdict == 0 ? MCSL_OK : MCSL_FALSE;
}

mcsl_status document(mcsl::dsl::Document d, mcsl_document** out) {
    auto* h = new mcsl_document{std::move(d), {}};
    h->text = mcsl::dsl::serialize(h->doc);
    *out = h;
    return MCSL_OK;
}

}  // namespace

extern "C" {

mcsl_guard mcsl_guard_defaults(void) {
    const mcsl::Guard g;
    return {g.carrier, g.enum_semilattice, g.enum_nonzero, g.powerset_points, g.enum_expansion};
}

const char* mcsl_version(void) { return mcsl::report::kVersion; }

const char* mcsl_last_error(void) { return last_error.c_str(); }

mcsl_status mcsl_document_parse(const char* text, mcsl_document** out) {
    if (!text || !out) return fail(MCSL_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto d = mcsl::dsl::parse(text);
        return document(std::move(d), out);
    });
}

mcsl_status mcsl_document_load(const char* source, mcsl_document** out) {
    if (!source || !out) return fail(MCSL_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        auto d = mcsl::report::load_document(source);
        return document(std::move(d), out);
    });
}

const char* mcsl_document_text(const mcsl_document* doc) { return doc ? doc->text.c_str() : ""; }

void mcsl_document_free(mcsl_document* doc) { delete doc; }

mcsl_status mcsl_check(const mcsl_document* doc, int m1_plus_rows, int m2_rows, const mcsl_guard* guard,
                       mcsl_result** out) {
    if (!doc || !out) return fail(MCSL_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    if (m1_plus_rows < 1) return fail(MCSL_ERR_ARGUMENT, "m1_plus_rows must be at least 1");
    if (m2_rows < 2) return fail(MCSL_ERR_ARGUMENT, "m2_rows must be at least 2");
    return guarded([&] { return deliver(mcsl::report::check(doc->doc, {m1_plus_rows, m2_rows, to_guard(guard)}), out); });
}

mcsl_status mcsl_embed(const mcsl_document* doc, mcsl_embedding_mode mode, int bounded, const mcsl_guard* guard,
                       mcsl_result** out) {
    if (!doc || !out) return fail(MCSL_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    if (mode != MCSL_MODE_OVERLAP && mode != MCSL_MODE_SMALLEST) return fail(MCSL_ERR_ARGUMENT, "unknown mode");
    const auto m = mode == MCSL_MODE_OVERLAP ? mcsl::EmbeddingMode::overlap : mcsl::EmbeddingMode::smallest;
    return guarded([&] { return deliver(mcsl::report::embed(doc->doc, {m, bounded != 0, to_guard(guard)}), out); });
}

mcsl_status mcsl_enumerate(const char* kind, int size, const mcsl_document* base, int up_to_iso,
                           const mcsl_guard* guard, mcsl_result** out) {
    if (!kind || !out) return fail(MCSL_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        mcsl::report::EnumerateOptions o{kind, size, base ? &base->doc : nullptr, up_to_iso != 0, to_guard(guard)};
        return deliver(mcsl::report::enumerate(o), out);
    });
}

mcsl_status mcsl_catalog(const char* name, int emit, mcsl_result** out) {
    if (!out) return fail(MCSL_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { return deliver(mcsl::report::catalog(name ? name : "", emit != 0), out); });
}

mcsl_status mcsl_verify_theorems(const char* theorem, int max_n, int up_to_iso, int threads, const mcsl_guard* guard,
                                 mcsl_result** out) {
    if (!out) return fail(MCSL_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    if (max_n < 1) return fail(MCSL_ERR_ARGUMENT, "max_n must be at least 1");
    if (threads < 0) return fail(MCSL_ERR_ARGUMENT, "threads must be non-negative");
    return guarded([&] {
        mcsl::report::TheoremOptions o;
        o.harness = {max_n, up_to_iso != 0, threads, to_guard(guard)};
        o.theorem = theorem ? theorem : "";
        return deliver(mcsl::report::verify_theorems(o), out);
    });
}

mcsl_status mcsl_convert(const mcsl_document* doc, const char* to, mcsl_result** out) {
    if (!doc || !to || !out) return fail(MCSL_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { return deliver(mcsl::report::convert(doc->doc, to), out); });
}

const char* mcsl_result_json(const mcsl_result* r) { return r ? r->json.c_str() : ""; }
const char* mcsl_result_text(const mcsl_result* r) { return r ? r->text.c_str() : ""; }
int mcsl_result_verdict(const mcsl_result* r) { return r ? r->verdict : 1; }
void mcsl_result_free(mcsl_result* r) { delete r; }

}  // extern "C"
