#include "io/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "core/conditions.hpp"
#include "io/structures.hpp"

namespace mcsl::report {

using Json = nlohmann::ordered_json;

dsl::Document load_document(const std::string& source) {
    if (source.rfind("catalog:", 0) == 0) {
        const auto entry = structures::find(source.substr(8));
        if (!entry) throw Error(ErrorKind::input, "unknown catalog entry '" + source.substr(8) + "'");
        return dsl::parse(entry->text);
    }
    std::ifstream in(source);
    if (!in) throw Error(ErrorKind::input, "cannot read '" + source + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return dsl::parse(buf.str());
}

namespace {

Json header(const char* command) {
    Json j;
    j["tool"] = "mcsl";
    j["version"] = kVersion;
    j["command"] = command;
    j["verdict"] = "pass";
    return j;
}

void finish(Output& out) {
    out.json["verdict"] = out.verdict == 0 ? "pass" : "fail";
    out.text += std::string("verdict: ") + (out.verdict == 0 ? "pass" : "fail") + "\n";
}

Json set_json(ElementSet s, const std::vector<std::string>& labels) {
    return Json{{"labels", labels_of(s, labels)}, {"indices", elements_of(s)}};
}

Json witness_json(const Witness& w, const std::vector<std::string>& labels) {
    Json items = Json::array();
    for (const auto& item : w) {
        Json j{{"role", item.role}};
        if (const int* e = std::get_if<int>(&item.value)) {
            j["element"] = Json{{"label", labels.at(*e)}, {"index", *e}};
        } else if (const ElementSet* s = std::get_if<ElementSet>(&item.value)) {
            j["set"] = set_json(*s, labels);
        } else {
            Json rows = Json::array();
            for (ElementSet r : std::get<std::vector<ElementSet>>(item.value)) rows.push_back(set_json(r, labels));
            j["rows"] = rows;
        }
        items.push_back(j);
    }
    return items;
}

std::string display_name(const ConditionReport& r) {
    if (r.condition == "M1" && r.bound) return "M1 (|F| <= " + std::to_string(r.bound) + ")";
    if ((r.condition == "M1+" || r.condition == "M2") && r.bound)
        return r.condition + " (<= " + std::to_string(r.bound) + " rows)";
    return r.condition;
}

// Appends one check to both renderings; returns whether it holds.
bool add_check(Json& checks, std::string& text, const ConditionReport& r, const std::vector<std::string>& labels) {
    Json j{{"condition", r.condition},
           {"holds", r.holds},
           {"bound", r.bound},
           {"completeness", r.completeness == Completeness::complete ? "complete" : "bounded"}};
    if (r.witness) j["witness"] = witness_json(*r.witness, labels);
    checks.push_back(j);
    char line[64];
    std::snprintf(line, sizeof line, "  %-24s %s", display_name(r).c_str(), r.holds ? "holds" : "fails");
    text += line;
    if (r.witness) text += "  " + format_witness(*r.witness, labels);
    text += "\n";
    return r.holds;
}

std::vector<std::string> set_list(const std::vector<ElementSet>& sets, const std::vector<std::string>& labels) {
    std::vector<std::string> out;
    for (ElementSet s : sets) {
        std::string t = "{";
        for (const auto& l : labels_of(s, labels)) t += (t.size() > 1 ? "," : "") + l;
        out.push_back(t + "}");
    }
    return out;
}

std::string join(const std::vector<std::string>& xs, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

}  // namespace

Output check(const dsl::Document& doc, const CheckOptions& o) {
    const dsl::Model m = dsl::resolve(doc, o.guard);
    Output out{0, header("check"), ""};
    Json structs = Json::array();
    for (const auto& name : m.order) {
        const auto* blk = doc.find(name);
        Json s{{"name", name}, {"type", dsl::to_string(blk->type)}};
        Json checks = Json::array();
        bool ok = true;
        if (auto it = m.multicontacts.find(name); it != m.multicontacts.end()) {
            const auto& base = m.bases.at(it->second.base);
            const Multicontact& d = it->second.delta;
            const auto& labels = base.poset.labels();
            s["base"] = it->second.base;
            s["kind"] = blk->kind;
            s["elements"] = labels;
            s["members"] = set_list(d.members(), labels);
            out.text += "multicontact " + name + " on " + it->second.base + " (" + blk->kind + ")\n";
            for (const auto& r : validate_multicontact(d).checks) ok = add_check(checks, out.text, r, labels) && ok;
            if (base.semilattice) {
                const JoinSemilattice& sl = *base.semilattice;
                ok = add_check(checks, out.text, check_additivity(sl, d, o.guard), labels) && ok;
                ok = add_check(checks, out.text, check_m1(sl, d, o.guard), labels) && ok;
                ok = add_check(checks, out.text, check_m1_plus(sl, d, o.m1_plus_rows, o.guard), labels) && ok;
                ok = add_check(checks, out.text, check_m2(sl, d, o.m2_rows, o.guard), labels) && ok;
                ok = add_check(checks, out.text, check_modular_condition(sl, d, o.guard), labels) && ok;
            } else {
                out.text += "  (poset base: semilattice conditions not applicable)\n";
            }
        } else if (auto wt = m.weak_contacts.find(name); wt != m.weak_contacts.end()) {
            const auto& base = m.bases.at(wt->second.base);
            const WeakContact& w = wt->second.delta;
            const auto& labels = base.poset.labels();
            s["base"] = wt->second.base;
            s["elements"] = labels;
            out.text += "weakcontact " + name + " on " + wt->second.base + "\n";
            for (const auto& r : validate_weak_contact(w).checks) ok = add_check(checks, out.text, r, labels) && ok;
            if (base.semilattice) {
                ok = add_check(checks, out.text, weak_contact_additive(w, *base.semilattice), labels) && ok;
                ok = add_check(checks, out.text, check_modular_condition(*base.semilattice, w), labels) && ok;
            }
        } else if (auto pt = m.preclosures.find(name); pt != m.preclosures.end()) {
            const PreClosure& k = pt->second.k;
            s["base"] = pt->second.base;
            s["extensive"] = k.is_extensive();
            s["weakly_extensive"] = k.is_weakly_extensive();
            s["idempotent"] = k.is_idempotent();
            s["additive"] = to_string(k.is_additive());
            out.text += "preclosure " + name + " on " + pt->second.base + ": extensive " +
                        (k.is_extensive() ? "yes" : "no") + ", weakly extensive " +
                        (k.is_weakly_extensive() ? "yes" : "no") + ", idempotent " +
                        (k.is_idempotent() ? "yes" : "no") + ", additive " + to_string(k.is_additive()) + "\n";
        } else if (m.event_structures.count(name)) {
            out.text += "eventstructure " + name + ": valid\n";
        } else {
            const auto& base = m.bases.at(name);
            s["elements"] = base.poset.labels();
            if (base.semilattice) {
                const StructureFlags f = structural_predicates(*base.semilattice, o.guard);
                s["lattice"] = to_string(f.is_lattice);
                s["distributive_lattice"] = to_string(f.is_distributive_lattice);
                s["modular_lattice"] = to_string(f.is_modular_lattice);
                s["semidistributive_at_zero"] = to_string(f.is_semidistributive_at_zero);
                out.text += std::string(dsl::to_string(blk->type)) + " " + name + ": lattice " +
                            to_string(f.is_lattice) + ", distributive " + to_string(f.is_distributive_lattice) +
                            ", modular " + to_string(f.is_modular_lattice) + ", semidistributive at 0 " +
                            to_string(f.is_semidistributive_at_zero) + "\n";
            } else {
                out.text += "poset " + name + ": " + std::to_string(base.poset.size()) + " elements\n";
            }
        }
        if (!checks.empty()) s["checks"] = checks;
        if (!ok) out.verdict = 1;
        structs.push_back(s);
    }
    out.json["structures"] = structs;
    finish(out);
    return out;
}

Output embed(const dsl::Document& doc, const EmbedOptions& o) {
    const dsl::Model m = dsl::resolve(doc, o.guard);
    Output out{0, header("embed"), ""};
    Json structs = Json::array();
    for (const auto& name : m.order) {
        auto it = m.multicontacts.find(name);
        if (it == m.multicontacts.end()) continue;
        const auto& base = m.bases.at(it->second.base);
        if (!base.semilattice) continue;
        const auto& labels = base.poset.labels();
        const CanonicalEmbedding e =
            canonical_embedding(*base.semilattice, it->second.delta, o.mode, o.bounded, o.guard);
        const EmbeddingVerdict v = verify_embedding(e, o.guard);
        Json s{{"name", name}, {"type", "multicontact"}, {"base", it->second.base}};
        Json emb{{"mode", to_string(o.mode)},
                 {"bounded", o.bounded},
                 {"base_set", labels_of(e.base_set, labels)},
                 {"ideal_generator", labels_of(e.g, labels)},
                 {"T", labels_of(e.t, labels)},
                 {"minimal_non_members", set_list(e.minimal_non_members, labels)}};
        Json kappa = Json::object();
        out.text += "multicontact " + name + " on " + it->second.base + ", " + to_string(o.mode) + " mode" +
                    (o.bounded ? ", bounded" : "") + "\n";
        out.text += "  T = {" + join(labels_of(e.t, labels), ",") + "}\n";
        for (int a = 0; a < base.poset.size(); ++a) {
            kappa[labels[a]] = labels_of(e.kappa[a], labels);
            out.text += "  kappa(" + labels[a] + ") = {" + join(labels_of(e.kappa[a], labels), ",") + "}\n";
        }
        emb["kappa"] = kappa;
        Json checks = Json::array();
        for (const ConditionReport* r : v.flags()) add_check(checks, out.text, *r, labels);
        emb["checks"] = checks;
        emb["is_embedding"] = v.is_embedding();
        if (v.is_embedding() && o.mode == EmbeddingMode::overlap) {
            const TopologicalModel tm = as_topological_model(e, o.guard);
            emb["topological_model"] = Json{{"points", tm.space.points}, {"discrete", true}, {"agrees", tm.agrees}};
            out.text += "  discrete space on {" + join(tm.space.points, ",") + "}, agrees " +
                        (tm.agrees ? "yes" : "no") + "\n";
        }
        out.text += std::string("  embedding: ") + (v.is_embedding() ? "yes" : "no") + "\n";
        if (!v.is_embedding()) out.verdict = 1;
        s["embedding"] = emb;
        structs.push_back(s);
    }
    if (structs.empty()) throw Error(ErrorKind::input, "no multicontact on a semilattice to embed");
    out.json["structures"] = structs;
    finish(out);
    return out;
}

namespace {

const dsl::Block* first_block(const dsl::Document* doc, std::initializer_list<dsl::BlockType> types) {
    if (!doc) return nullptr;
    for (const auto& b : doc->blocks)
        for (auto t : types)
            if (b.type == t) return &b;
    return nullptr;
}

}  // namespace

Output enumerate(const EnumerateOptions& o) {
    Output out{0, header("enumerate"), ""};
    std::vector<std::string> items;
    const auto bases = [&]() -> std::vector<std::pair<std::string, Poset>> {
        if (o.base) {
            const auto* b = first_block(o.base, {dsl::BlockType::semilattice, dsl::BlockType::poset});
            if (!b) throw Error(ErrorKind::input, "base file declares no semilattice or poset");
            const dsl::Model m = dsl::resolve(*o.base, o.guard);
            return {{b->name, m.bases.at(b->name).poset}};
        }
        if (o.size < 1) throw Error(ErrorKind::input, "enumerate needs --base or --size");
        std::vector<std::pair<std::string, Poset>> out;
        for (const auto& s : enumerate_semilattices(o.size, o.up_to_iso, o.guard)) out.emplace_back("S", s.poset());
        return out;
    };
    if (o.kind == "semilattices") {
        if (o.size < 1) throw Error(ErrorKind::input, "enumerate semilattices needs --size");
        for (const auto& s : enumerate_semilattices(o.size, o.up_to_iso, o.guard))
            items.push_back(dsl::serialize({{dsl::order_block("S", s.poset(), true)}}));
    } else if (o.kind == "multicontacts" || o.kind == "weak-contacts" || o.kind == "preclosures") {
        for (const auto& [name, p] : bases()) {
            const dsl::Block base_block = dsl::order_block(name, p, o.base ? first_block(o.base, {dsl::BlockType::semilattice, dsl::BlockType::poset})->type == dsl::BlockType::semilattice : true);
            if (o.kind == "multicontacts") {
                for (const auto& d : enumerate_multicontacts(p, o.guard))
                    items.push_back(dsl::serialize({{base_block, dsl::generators_block("D", name, d)}}));
            } else if (o.kind == "weak-contacts") {
                for (const auto& w : enumerate_weak_contacts(p, o.guard))
                    items.push_back(dsl::serialize({{base_block, dsl::weak_contact_block("w", name, w)}}));
            } else {
                for (const auto& k : enumerate_preclosures(p, o.guard))
                    items.push_back(dsl::serialize({{base_block, dsl::preclosure_block("K", name, k)}}));
            }
        }
    } else if (o.kind == "event-structures") {
        if (o.size < 0) throw Error(ErrorKind::input, "enumerate event-structures needs --size");
        for (const auto& e : enumerate_event_structures(o.size, o.guard))
            items.push_back(dsl::serialize({{dsl::event_structure_block("E", e)}}));
    } else if (o.kind == "expansions") {
        const auto* wb = first_block(o.base, {dsl::BlockType::weakcontact});
        if (!wb) throw Error(ErrorKind::input, "enumerate expansions needs a base file with a weakcontact block");
        const dsl::Model m = dsl::resolve(*o.base, o.guard);
        const auto& w = m.weak_contacts.at(wb->name);
        const dsl::Block base_block = *o.base->find(w.base);
        for (const auto& d : enumerate_expansions(w.delta, o.guard))
            items.push_back(dsl::serialize({{base_block, dsl::generators_block("D", w.base, d)}}));
    } else {
        throw Error(ErrorKind::input, "unknown enumeration kind '" + o.kind + "'");
    }
    out.json["enumeration"] = Json{{"kind", o.kind}, {"up_to_iso", o.up_to_iso}, {"count", items.size()}, {"items", items}};
    out.text += o.kind + ": " + std::to_string(items.size()) + "\n";
    for (std::size_t i = 0; i < items.size(); ++i) out.text += "\n# " + std::to_string(i + 1) + "\n" + items[i];
    if (!items.empty()) out.text += "\n";
    finish(out);
    return out;
}

Output catalog(const std::string& name, bool emit) {
    Output out{0, header("catalog"), ""};
    if (name.empty()) {
        Json list = Json::array();
        for (const auto& e : structures::entries()) {
            list.push_back(Json{{"name", e.name}, {"description", e.description}});
            char line[160];
            std::snprintf(line, sizeof line, "%-16s %s\n", e.name.c_str(), e.description.c_str());
            out.text += line;
        }
        out.text += "M<r>-D<h>        modular lattice with r atoms and the size-h generated multicontact (r >= h + 2)\n";
        out.json["catalog"] = list;
        return out;
    }
    const auto entry = structures::find(name);
    if (!entry) throw Error(ErrorKind::input, "unknown catalog entry '" + name + "'");
    const std::string canonical = dsl::serialize(dsl::parse(entry->text));
    Json expected = Json::array();
    for (const auto& e : entry->expected) expected.push_back(Json{{"check", e.check}, {"value", e.value}});
    out.json["entry"] = Json{{"name", entry->name}, {"description", entry->description}, {"source", canonical},
                             {"expected", expected}};
    if (emit) {
        out.text = canonical;
        return out;
    }
    out.text += entry->name + ": " + entry->description + "\n\n" + canonical + "\nrecorded verdicts:\n";
    for (const auto& e : entry->expected) out.text += "  " + e.check + " = " + (e.value ? "true" : "false") + "\n";
    return out;
}

Output verify_theorems(const TheoremOptions& o) {
    Output out{0, header("verify-theorems"), ""};
    std::vector<HarnessReport> reports;
    if (o.theorem.empty() || o.theorem == "all") {
        for (const auto& id : theorem_ids()) reports.push_back(verify_theorem(id, o.harness));
        reports.push_back(run_catalog_regressions(o.harness.guard));
    } else if (o.theorem == "catalog-regressions") {
        reports.push_back(run_catalog_regressions(o.harness.guard));
    } else {
        reports.push_back(verify_theorem(o.theorem, o.harness));
    }
    Json list = Json::array();
    for (const auto& r : reports) {
        Json disc = Json::array();
        for (const auto& d : r.discrepancies)
            disc.push_back(Json{{"structure", d.structure}, {"expected", d.expected}, {"got", d.got}});
        list.push_back(Json{{"id", r.id},
                            {"description", r.description},
                            {"examined", r.examined},
                            {"discrepancies", disc}});
        char line[200];
        std::snprintf(line, sizeof line, "%-26s examined %7ld  discrepancies %zu  (%.1f ms)\n", r.id.c_str(),
                      r.examined, r.discrepancies.size(), r.elapsed_ms);
        out.text += line;
        for (const auto& d : r.discrepancies)
            out.text += "  expected " + d.expected + ", got " + d.got + "\n" + d.structure + "\n";
        if (!r.ok()) out.verdict = 1;
    }
    out.json["max_n"] = o.harness.max_n;
    out.json["up_to_iso"] = o.harness.up_to_iso;
    out.json["harness"] = list;
    finish(out);
    return out;
}

Output convert(const dsl::Document& doc, const std::string& to) {
    const dsl::Model m = dsl::resolve(doc);
    dsl::Document result;
    if (to == "event-structure") {
        for (const auto& name : m.order)
            if (auto it = m.multicontacts.find(name); it != m.multicontacts.end())
                result.blocks.push_back(dsl::event_structure_block(name, to_event_structure(it->second.delta)));
    } else if (to == "multicontact") {
        for (const auto& name : m.order)
            if (auto it = m.event_structures.find(name); it != m.event_structures.end()) {
                const auto [p, d] = to_multicontact(it->second);
                result.blocks.push_back(dsl::order_block(name + "_base", p, false));
                result.blocks.push_back(dsl::explicit_block(name, name + "_base", d));
            }
    } else {
        throw Error(ErrorKind::input, "convert target must be event-structure or multicontact");
    }
    if (result.blocks.empty()) throw Error(ErrorKind::input, "nothing to convert");
    Output out{0, header("convert"), dsl::serialize(result)};
    out.json["document"] = out.text;
    return out;
}

std::string render_json(const Output& out) { return out.json.dump(2) + "\n"; }

}  // namespace mcsl::report
