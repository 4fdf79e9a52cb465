#include <doctest.h>

#include <string>

#include "mcsl/mcsl.h"

namespace {

bool contains(const char* s, const char* part) { return std::string(s).find(part) != std::string::npos; }

}  // namespace

TEST_CASE("load, check and free") {
    mcsl_document* doc = nullptr;
    REQUIRE(mcsl_document_load("catalog:M3-overlap", &doc) == MCSL_OK);
    CHECK(contains(mcsl_document_text(doc), "multicontact D on M3 kind=overlap"));
    mcsl_result* r = nullptr;
    CHECK(mcsl_check(doc, 2, 2, nullptr, &r) == MCSL_FALSE);
    REQUIRE(r != nullptr);
    CHECK(mcsl_result_verdict(r) == 1);
    CHECK(contains(mcsl_result_json(r), "\"verdict\": \"fail\""));
    CHECK(contains(mcsl_result_text(r), "Add"));
    mcsl_result_free(r);
    mcsl_document_free(doc);
}

TEST_CASE("error codes and last error") {
    mcsl_document* doc = nullptr;
    CHECK(mcsl_document_parse("poset P\n  elements 0 a b\n  order a<b b<a\n", &doc) == MCSL_ERR_INPUT);
    CHECK(doc == nullptr);
    CHECK(contains(mcsl_last_error(), "line 3"));
    CHECK(mcsl_document_parse(nullptr, &doc) == MCSL_ERR_ARGUMENT);

    REQUIRE(mcsl_document_load("catalog:B8-overlap", &doc) == MCSL_OK);
    mcsl_guard g = mcsl_guard_defaults();
    g.carrier = 4;
    mcsl_result* r = nullptr;
    CHECK(mcsl_check(doc, 2, 2, &g, &r) == MCSL_ERR_GUARD);
    CHECK(r == nullptr);
    CHECK(mcsl_check(doc, 2, 1, nullptr, &r) == MCSL_ERR_ARGUMENT);
    mcsl_document_free(doc);

    CHECK(mcsl_verify_theorems("nope", 4, 0, 1, nullptr, &r) == MCSL_ERR_INPUT);
    CHECK(mcsl_document_load("/nonexistent", &doc) == MCSL_ERR_INPUT);
}

TEST_CASE("embed, enumerate, catalog, convert, verify") {
    mcsl_document* doc = nullptr;
    REQUIRE(mcsl_document_load("catalog:B2-full", &doc) == MCSL_OK);
    mcsl_result* r = nullptr;
    CHECK(mcsl_embed(doc, MCSL_MODE_OVERLAP, 0, nullptr, &r) == MCSL_OK);
    CHECK(contains(mcsl_result_text(r), "kappa(a) = {0,b}"));
    mcsl_result_free(r);
    CHECK(mcsl_convert(doc, "event-structure", &r) == MCSL_OK);
    CHECK(contains(mcsl_result_text(r), "eventstructure D"));
    mcsl_result_free(r);
    CHECK(mcsl_enumerate("multicontacts", 0, doc, 0, nullptr, &r) == MCSL_OK);
    CHECK(contains(mcsl_result_json(r), "\"count\": 2"));
    mcsl_result_free(r);
    mcsl_document_free(doc);

    CHECK(mcsl_catalog(nullptr, 0, &r) == MCSL_OK);
    CHECK(contains(mcsl_result_text(r), "B8-Dl"));
    mcsl_result_free(r);
    CHECK(mcsl_verify_theorems("axioms", 3, 0, 1, nullptr, &r) == MCSL_OK);
    mcsl_result_free(r);
    CHECK(std::string(mcsl_version()) == "0.1.0");
}
