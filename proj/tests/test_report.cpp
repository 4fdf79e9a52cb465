#include <doctest.h>

#include <string>

#include "io/report.hpp"
#include "io/structures.hpp"

using namespace mcsl;

namespace {

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("check reports the additivity failure on M3 with labels") {
    const auto out = report::check(report::load_document("catalog:M3-overlap"), {});
    CHECK(out.verdict == 1);
    CHECK(out.json["verdict"] == "fail");
    const auto& structs = out.json["structures"];
    const auto& d = structs[1];
    CHECK(d["name"] == "D");
    bool found = false;
    for (const auto& c : d["checks"]) {
        if (c["condition"] != "Add") continue;
        found = true;
        CHECK(c["holds"] == false);
        CHECK(c["witness"][0]["role"] == "p");
        CHECK(c["witness"][0]["element"]["label"].is_string());
        CHECK(c["witness"][0]["element"]["index"].is_number());
    }
    CHECK(found);
    CHECK(contains(out.text, "Add"));
    CHECK(contains(out.text, "fails"));
}

TEST_CASE("text and JSON carry the same verdicts on every catalog entry") {
    for (const auto& entry : structures::entries()) {
        CAPTURE(entry.name);
        const auto out = report::check(dsl::parse(entry.text), {});
        for (const auto& s : out.json["structures"]) {
            if (!s.contains("checks")) continue;
            for (const auto& c : s["checks"]) {
                const std::string name = c["condition"];
                const std::string verdict = c["holds"] ? "holds" : "fails";
                bool seen = false;
                std::size_t pos = 0;
                while ((pos = out.text.find("  " + name, pos)) != std::string::npos) {
                    const auto eol = out.text.find('\n', pos);
                    if (contains(out.text.substr(pos, eol - pos), verdict)) seen = true;
                    pos = eol;
                }
                CHECK(seen);
            }
        }
    }
}

TEST_CASE("embed prints T and kappa") {
    const auto out = report::embed(report::load_document("catalog:B2-full"), {});
    CHECK(out.verdict == 0);
    const auto& e = out.json["structures"][0]["embedding"];
    CHECK(e["T"] == nlohmann::ordered_json::array({"0", "a", "b", "1"}));
    CHECK(e["kappa"]["a"] == nlohmann::ordered_json::array({"0", "b"}));
    CHECK(e["is_embedding"] == true);
    CHECK(contains(out.text, "kappa(a) = {0,b}"));

    const auto m3 = report::embed(report::load_document("catalog:M3-overlap"), {});
    CHECK(m3.verdict == 1);
    report::EmbedOptions smallest;
    smallest.mode = EmbeddingMode::smallest;
    CHECK(report::embed(report::load_document("catalog:B8-partial"), smallest).verdict == 0);
    CHECK(report::embed(report::load_document("catalog:M3-delta"), smallest).verdict == 1);
}

TEST_CASE("enumerate") {
    report::EnumerateOptions o;
    o.kind = "semilattices";
    o.size = 4;
    o.up_to_iso = true;
    const auto out = report::enumerate(o);
    CHECK(out.json["enumeration"]["count"] == 2);
    // Every item parses.
    for (const auto& item : out.json["enumeration"]["items"]) CHECK_NOTHROW(dsl::resolve(dsl::parse(item.get<std::string>())));

    const dsl::Document b2 = report::load_document("catalog:B2-overlap");
    o.kind = "multicontacts";
    o.base = &b2;
    CHECK(report::enumerate(o).json["enumeration"]["count"] == 2);
    o.kind = "weak-contacts";
    CHECK(report::enumerate(o).json["enumeration"]["count"] == 2);

    const dsl::Document m3 = report::load_document("catalog:M3-delta");
    o.kind = "expansions";
    o.base = &m3;
    CHECK(report::enumerate(o).json["enumeration"]["count"].get<int>() >= 1);

    o.kind = "bogus";
    CHECK_THROWS_AS(report::enumerate(o), Error);
}

TEST_CASE("catalog listing and emission") {
    const auto list = report::catalog("", false);
    CHECK(list.json["catalog"].size() == structures::entries().size());
    const auto emitted = report::catalog("N5-overlap", true);
    CHECK(dsl::parse(emitted.text) == dsl::parse(structures::find("N5-overlap")->text));
    CHECK_THROWS_AS(report::catalog("nope", false), Error);
}

TEST_CASE("convert round trip") {
    const auto es = report::convert(report::load_document("catalog:chain3-overlap"), "event-structure");
    CHECK(contains(es.text, "eventstructure D"));
    const auto back = report::convert(dsl::parse(es.text), "multicontact");
    CHECK(contains(back.text, "multicontact D on D_base kind=explicit"));
    CHECK_THROWS_AS(report::convert(report::load_document("catalog:chain3-overlap"), "graph"), Error);
}

TEST_CASE("verify-theorems output is reproducible") {
    report::TheoremOptions o;
    o.theorem = "overlap-m1-additive";
    const auto a = report::verify_theorems(o);
    o.harness.threads = 2;
    const auto b = report::verify_theorems(o);
    CHECK(a.verdict == 0);
    CHECK(report::render_json(a) == report::render_json(b));
    CHECK_FALSE(contains(report::render_json(a), "elapsed"));
}

TEST_CASE("missing files are input errors") {
    CHECK_THROWS_AS(report::load_document("/nonexistent/file.mcsl"), Error);
    CHECK_THROWS_AS(report::load_document("catalog:unknown"), Error);
}
