#include "io/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace mcsl::dsl {

const char* to_string(BlockType t) {
    switch (t) {
        case BlockType::semilattice: return "semilattice";
        case BlockType::poset: return "poset";
        case BlockType::multicontact: return "multicontact";
        case BlockType::weakcontact: return "weakcontact";
        case BlockType::preclosure: return "preclosure";
        case BlockType::eventstructure: return "eventstructure";
    }
    return "?";
}

bool Block::operator==(const Block& o) const {
    return type == o.type && name == o.name && elements == o.elements && zero == o.zero && order == o.order &&
           base == o.base && kind == o.kind && sets == o.sets && pairs == o.pairs &&
           explicit_pairs == o.explicit_pairs && map == o.map;
}

const Block* Document::find(std::string_view name) const {
    for (const auto& b : blocks)
        if (b.name == name) return &b;
    return nullptr;
}

bool valid_label(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '+' || c == '\'';
    });
}

namespace {

bool valid_name(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '+' || c == '-';
    });
}

struct Token {
    bool punct = false;
    std::string text;
};

[[noreturn]] void fail_at(int line, const std::string& msg) {
    throw Error(ErrorKind::input, "line " + std::to_string(line) + ": " + msg);
}

std::vector<Token> lex(std::string_view line, int lineno) {
    std::vector<Token> out;
    std::size_t i = 0;
    const auto is_punct = [](char c) { return c == '{' || c == '}' || c == '(' || c == ')' || c == ',' || c == '<' || c == '='; };
    while (i < line.size()) {
        const char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (line.substr(i, 2) == "->") {
            out.push_back({true, "->"});
            i += 2;
        } else if (is_punct(c)) {
            out.push_back({true, std::string(1, c)});
            ++i;
        } else {
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && !is_punct(line[j]) &&
                   line[j] != '#' && line.substr(j, 2) != "->")
                ++j;
            out.push_back({false, std::string(line.substr(i, j - i))});
            i = j;
        }
        if (!out.empty() && !out.back().punct && !std::isprint(static_cast<unsigned char>(out.back().text[0])))
            fail_at(lineno, "unexpected character");
    }
    return out;
}

class Cursor {
public:
    Cursor(std::vector<Token> toks, int line) : toks_(std::move(toks)), line_(line) {}
    bool done() const { return pos_ >= toks_.size(); }
    bool peek_punct(const char* p) const { return !done() && toks_[pos_].punct && toks_[pos_].text == p; }
    bool peek_word() const { return !done() && !toks_[pos_].punct; }
    const std::string& peek_text() const { return toks_[pos_].text; }
    std::string word(const char* what) {
        if (!peek_word()) fail_at(line_, std::string("expected ") + what);
        return toks_[pos_++].text;
    }
    void punct(const char* p) {
        if (!peek_punct(p)) fail_at(line_, std::string("expected '") + p + "'");
        ++pos_;
    }
    int line() const { return line_; }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int line_;
};

// Reflexive-transitive closure of index pairs; reports a cycle by labels.
std::vector<ElementSet> closure(int n, const std::vector<std::pair<int, int>>& pairs,
                                const std::vector<std::string>& labels, int line) {
    std::vector<ElementSet> up(n);
    for (int i = 0; i < n; ++i) up[i] = bit(i);
    for (auto [lo, hi] : pairs) up[lo] |= bit(hi);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (has(up[i], k)) up[i] |= up[k];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (has(up[i], j) && has(up[j], i))
                fail_at(line, "order has a cycle through '" + labels[i] + "' and '" + labels[j] + "'");
    return up;
}

std::vector<LabelPair> covers_of(const std::vector<ElementSet>& up, const std::vector<std::string>& labels) {
    std::vector<LabelPair> out;
    const int n = static_cast<int>(up.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !has(up[i], j)) continue;
            bool cover = true;
            for (int k = 0; k < n && cover; ++k)
                if (k != i && k != j && has(up[i], k) && has(up[k], j)) cover = false;
            if (cover) out.emplace_back(labels[i], labels[j]);
        }
    return out;
}

std::vector<LabelSet> sorted_sets(std::vector<ElementSet> masks, const std::vector<std::string>& labels) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<LabelSet> out;
    for (ElementSet m : masks)
        if (m != 0) out.push_back(labels_of(m, labels));
    return out;
}

// What later blocks need to know about an earlier one.
struct Declared {
    BlockType type;
    std::string base;  // for contact blocks
    std::vector<std::string> labels;
};

struct RawBlock {
    Block block;
    std::vector<std::pair<LabelPair, int>> order;  // with line numbers
    std::vector<std::pair<LabelSet, int>> sets;
    std::vector<std::pair<LabelPair, int>> pairs;
    std::vector<std::pair<LabelPair, int>> map;
    bool has_pairs_line = false;
    bool has_elements = false;
};

class Parser {
public:
    Document run(std::string_view text) {
        std::istringstream in{std::string(text)};
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            Cursor c(lex(line, lineno), lineno);
            if (c.done()) continue;
            if (c.peek_word() && is_block_keyword(c.peek_text())) {
                finish();
                header(c);
            } else if (!cur_) {
                fail_at(lineno, "attribute outside a block");
            }
            if (!c.done()) attribute(c);
        }
        finish();
        return std::move(doc_);
    }

private:
    static bool is_block_keyword(const std::string& w) {
        return w == "semilattice" || w == "poset" || w == "multicontact" || w == "weakcontact" ||
               w == "preclosure" || w == "eventstructure";
    }

    void header(Cursor& c) {
        const std::string kw = c.word("block keyword");
        cur_.emplace();
        Block& b = cur_->block;
        b.line = c.line();
        b.type = kw == "semilattice"      ? BlockType::semilattice
                 : kw == "poset"          ? BlockType::poset
                 : kw == "multicontact"   ? BlockType::multicontact
                 : kw == "weakcontact"    ? BlockType::weakcontact
                 : kw == "preclosure"     ? BlockType::preclosure
                                          : BlockType::eventstructure;
        b.name = c.word("block name");
        if (!valid_name(b.name)) fail_at(c.line(), "invalid block name '" + b.name + "'");
        if (declared_.count(b.name)) fail_at(c.line(), "duplicate block name '" + b.name + "'");
        if (b.type == BlockType::multicontact || b.type == BlockType::weakcontact || b.type == BlockType::preclosure) {
            if (c.word("'on'") != "on") fail_at(c.line(), "expected 'on <base>'");
            b.base = c.word("base name");
            auto it = declared_.find(b.base);
            if (it == declared_.end() ||
                (it->second.type != BlockType::semilattice && it->second.type != BlockType::poset))
                fail_at(c.line(), "unknown base '" + b.base + "'");
        }
        if (b.type == BlockType::multicontact) {
            if (c.word("kind=") != "kind") fail_at(c.line(), "expected kind=<kind>");
            c.punct("=");
            b.kind = c.word("kind");
            check_kind(b, c.line());
        }
    }

    void check_kind(const Block& b, int line) {
        static const std::set<std::string> plain{"overlap", "generators", "explicit", "atoms"};
        if (plain.count(b.kind)) return;
        const auto colon = b.kind.find(':');
        const std::string head = b.kind.substr(0, colon);
        const std::string arg = colon == std::string::npos ? "" : b.kind.substr(colon + 1);
        if (head == "cardinality") {
            if (arg.empty() || !std::all_of(arg.begin(), arg.end(), ::isdigit) || std::stoi(arg) < 1)
                fail_at(line, "cardinality needs a positive integer");
            return;
        }
        if (head == "largest-of" || head == "smallest-of" || head == "preclosure") {
            const BlockType want = head == "preclosure" ? BlockType::preclosure : BlockType::weakcontact;
            auto it = declared_.find(arg);
            if (it == declared_.end() || it->second.type != want)
                fail_at(line, "kind " + head + " names unknown " + to_string(want) + " '" + arg + "'");
            if (it->second.base != b.base) fail_at(line, "'" + arg + "' is declared on a different base");
            return;
        }
        fail_at(line, "unknown multicontact kind '" + b.kind + "'");
    }

    const std::vector<std::string>& base_labels() { return declared_.at(cur_->block.base).labels; }

    std::string label(Cursor& c, const std::vector<std::string>& labels) {
        std::string l = c.word("element label");
        if (std::find(labels.begin(), labels.end(), l) == labels.end())
            fail_at(c.line(), "unknown label '" + l + "' in block " + cur_->block.name);
        return l;
    }

    void attribute(Cursor& c) {
        RawBlock& r = *cur_;
        Block& b = r.block;
        const std::string kw = c.word("attribute");
        const bool order_like = b.type == BlockType::semilattice || b.type == BlockType::poset;
        const bool events = b.type == BlockType::eventstructure;
        const auto bad = [&] { fail_at(c.line(), "'" + kw + "' is not valid in a " + to_string(b.type) + " block"); };
        if (kw == "elements" || kw == "events") {
            if (!(order_like && kw == "elements") && !(events && kw == "events")) bad();
            if (r.has_elements) fail_at(c.line(), "'" + kw + "' given twice");
            r.has_elements = true;
            std::set<std::string> seen;
            while (!c.done()) {
                std::string l = c.word("label");
                if (!valid_label(l)) fail_at(c.line(), "invalid label '" + l + "'");
                if (!seen.insert(l).second) fail_at(c.line(), "duplicate label '" + l + "'");
                b.elements.push_back(l);
            }
        } else if (kw == "zero") {
            if (!order_like) bad();
            b.zero = label(c, b.elements);
        } else if (kw == "order") {
            if (!order_like && !events) bad();
            while (!c.done()) {
                std::string lo = label(c, b.elements);
                if (!c.peek_punct("<")) fail_at(c.line(), "expected '<' after '" + lo + "'");
                while (c.peek_punct("<")) {
                    c.punct("<");
                    std::string hi = label(c, b.elements);
                    r.order.push_back({{lo, hi}, c.line()});
                    lo = hi;
                }
            }
            check_cycles(c.line());
        } else if (kw == "sets" || kw == "con") {
            if (!(b.type == BlockType::multicontact && kw == "sets") && !(events && kw == "con")) bad();
            const auto& labels = events ? b.elements : base_labels();
            while (!c.done()) {
                c.punct("{");
                LabelSet s;
                if (!c.peek_punct("}")) {
                    s.push_back(label(c, labels));
                    while (c.peek_punct(",")) {
                        c.punct(",");
                        s.push_back(label(c, labels));
                    }
                }
                c.punct("}");
                r.sets.push_back({std::move(s), c.line()});
            }
        } else if (kw == "pairs" || kw == "explicit-pairs") {
            if (b.type != BlockType::weakcontact) bad();
            if (r.has_pairs_line && b.explicit_pairs != (kw == "explicit-pairs"))
                fail_at(c.line(), "cannot mix pairs and explicit-pairs");
            r.has_pairs_line = true;
            b.explicit_pairs = kw == "explicit-pairs";
            while (!c.done()) {
                c.punct("(");
                std::string x = label(c, base_labels());
                c.punct(",");
                std::string y = label(c, base_labels());
                c.punct(")");
                r.pairs.push_back({{x, y}, c.line()});
            }
        } else if (kw == "map") {
            if (b.type != BlockType::preclosure) bad();
            while (!c.done()) {
                std::string x = label(c, base_labels());
                c.punct("->");
                std::string y = label(c, base_labels());
                r.map.push_back({{x, y}, c.line()});
            }
        } else {
            fail_at(c.line(), "unknown attribute '" + kw + "'");
        }
    }

    static int index_of(const std::vector<std::string>& labels, const std::string& l) {
        return static_cast<int>(std::find(labels.begin(), labels.end(), l) - labels.begin());
    }

    std::vector<std::pair<int, int>> order_indices() const {
        std::vector<std::pair<int, int>> out;
        for (const auto& [p, line] : cur_->order)
            out.emplace_back(index_of(cur_->block.elements, p.first), index_of(cur_->block.elements, p.second));
        return out;
    }

    void check_cycles(int line) {
        const auto& labels = cur_->block.elements;
        closure(static_cast<int>(labels.size()), order_indices(), labels, line);
    }

    ElementSet mask(const LabelSet& s, const std::vector<std::string>& labels) const {
        ElementSet m = 0;
        for (const auto& l : s) m |= bit(index_of(labels, l));
        return m;
    }

    void finish() {
        if (!cur_) return;
        RawBlock& r = *cur_;
        Block& b = r.block;
        Declared decl{b.type, b.base, {}};
        switch (b.type) {
            case BlockType::semilattice:
            case BlockType::poset: {
                if (b.elements.empty()) fail_at(b.line, "block " + b.name + " declares no elements");
                if (b.elements.size() > static_cast<std::size_t>(kMaxCarrier))
                    fail_at(b.line, "block " + b.name + " has more than " + std::to_string(kMaxCarrier) + " elements");
                const auto up = closure(static_cast<int>(b.elements.size()), order_indices(), b.elements, b.line);
                std::optional<int> least;
                for (std::size_t i = 0; i < up.size(); ++i)
                    if (up[i] == full_set(static_cast<int>(up.size()))) least = static_cast<int>(i);
                if (!least) fail_at(b.line, "block " + b.name + " has no minimum element");
                if (!b.zero.empty() && b.zero != b.elements[*least])
                    fail_at(b.line, "'" + b.zero + "' is not the minimum of " + b.name);
                b.zero = b.elements[*least];
                b.order = covers_of(up, b.elements);
                decl.labels = b.elements;
                break;
            }
            case BlockType::eventstructure: {
                const auto up = closure(static_cast<int>(b.elements.size()), order_indices(), b.elements, b.line);
                b.order = covers_of(up, b.elements);
                std::vector<ElementSet> con;
                for (const auto& [s, line] : r.sets) con.push_back(mask(s, b.elements));
                b.sets = sorted_sets(con, b.elements);
                break;
            }
            case BlockType::multicontact: {
                const auto& labels = base_labels();
                const bool takes_sets = b.kind == "generators" || b.kind == "explicit" || b.kind == "atoms";
                if (!takes_sets && !r.sets.empty()) fail_at(r.sets.front().second, "kind " + b.kind + " takes no sets");
                std::vector<ElementSet> masks;
                for (const auto& [s, line] : r.sets) masks.push_back(mask(s, labels));
                b.sets = sorted_sets(masks, labels);
                break;
            }
            case BlockType::weakcontact: {
                const auto& labels = base_labels();
                std::vector<std::pair<int, int>> idx;
                for (const auto& [p, line] : r.pairs) {
                    int x = index_of(labels, p.first), y = index_of(labels, p.second);
                    if (p.first == declared_zero(b.base) || p.second == declared_zero(b.base))
                        fail_at(line, "weak contact pair involves the zero element");
                    idx.emplace_back(std::min(x, y), std::max(x, y));
                }
                std::sort(idx.begin(), idx.end());
                idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
                for (auto [x, y] : idx) b.pairs.emplace_back(labels[x], labels[y]);
                break;
            }
            case BlockType::preclosure: {
                const auto& labels = base_labels();
                std::vector<int> target(labels.size(), -1);
                for (const auto& [p, line] : r.map) {
                    const int x = index_of(labels, p.first);
                    if (target[x] >= 0) fail_at(line, "'" + p.first + "' is mapped twice");
                    target[x] = index_of(labels, p.second);
                }
                for (std::size_t x = 0; x < labels.size(); ++x) {
                    if (target[x] < 0) fail_at(b.line, "pre-closure " + b.name + " does not map '" + labels[x] + "'");
                    b.map.emplace_back(labels[x], labels[target[x]]);
                }
                break;
            }
        }
        declared_.emplace(b.name, std::move(decl));
        doc_.blocks.push_back(std::move(b));
        cur_.reset();
    }

    std::string declared_zero(const std::string& base) const {
        for (const auto& blk : doc_.blocks)
            if (blk.name == base) return blk.zero;
        return {};
    }

    Document doc_;
    std::optional<RawBlock> cur_;
    std::map<std::string, Declared> declared_;
};

std::string join_words(const std::vector<std::string>& w, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? sep : "") + w[i];
    return out;
}

std::string braces(const LabelSet& s) { return "{" + join_words(s, ",") + "}"; }

}  // namespace

Document parse(std::string_view text) { return Parser().run(text); }

std::string serialize(const Document& doc) {
    std::string out;
    for (const Block& b : doc.blocks) {
        if (!out.empty()) out += "\n";
        out += std::string(to_string(b.type)) + " " + b.name;
        if (!b.base.empty()) out += " on " + b.base;
        if (b.type == BlockType::multicontact) out += " kind=" + b.kind;
        out += "\n";
        const auto line = [&out](const std::string& kw, const std::vector<std::string>& items) {
            out += "  " + kw;
            for (const auto& i : items) out += " " + i;
            out += "\n";
        };
        std::vector<std::string> order;
        for (const auto& [lo, hi] : b.order) order.push_back(lo + "<" + hi);
        std::vector<std::string> sets;
        for (const auto& s : b.sets) sets.push_back(braces(s));
        switch (b.type) {
            case BlockType::semilattice:
            case BlockType::poset:
                line("elements", b.elements);
                line("zero", {b.zero});
                if (!order.empty()) line("order", order);
                break;
            case BlockType::eventstructure:
                line("events", b.elements);
                if (!order.empty()) line("order", order);
                if (!sets.empty()) line("con", sets);
                break;
            case BlockType::multicontact:
                if (!sets.empty()) line("sets", sets);
                break;
            case BlockType::weakcontact: {
                std::vector<std::string> pairs;
                for (const auto& [x, y] : b.pairs) pairs.push_back("(" + x + "," + y + ")");
                line(b.explicit_pairs ? "explicit-pairs" : "pairs", pairs);
                break;
            }
            case BlockType::preclosure: {
                std::vector<std::string> map;
                for (const auto& [x, y] : b.map) map.push_back(x + "->" + y);
                line("map", map);
                break;
            }
        }
    }
    return out;
}

namespace {

int index_in(const Poset& p, const std::string& l) { return *p.find(l); }

ElementSet set_mask(const Poset& p, const LabelSet& s) {
    ElementSet m = 0;
    for (const auto& l : s) m |= bit(index_in(p, l));
    return m;
}

std::vector<ElementSet> set_masks(const Poset& p, const std::vector<LabelSet>& sets) {
    std::vector<ElementSet> out;
    for (const auto& s : sets) out.push_back(set_mask(p, s));
    return out;
}

std::string first_failure(const ValidationReport& v, const std::vector<std::string>& labels) {
    for (const auto& c : v.checks)
        if (!c.holds) return "violates (" + c.condition + "): " + format_witness(*c.witness, labels);
    return {};
}

Multicontact build_multicontact(const Block& b, const Model& m) {
    const Poset& p = m.bases.at(b.base).poset;
    const auto colon = b.kind.find(':');
    const std::string head = b.kind.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : b.kind.substr(colon + 1);
    const auto sets = set_masks(p, b.sets);
    if (head == "overlap") return overlap_multicontact(p);
    if (head == "generators") return generate_multicontact(p, sets);
    if (head == "explicit") {
        Multicontact d = Multicontact::from_family(p, sets, "explicit");
        const auto v = validate_multicontact(d);
        if (!v.valid()) throw Error(ErrorKind::input, first_failure(v, p.labels()));
        return d;
    }
    if (head == "cardinality") return delta_n(p, std::stoi(arg));
    if (head == "largest-of") return from_weak_contact_largest(m.weak_contacts.at(arg).delta);
    if (head == "smallest-of") return from_weak_contact_smallest(m.weak_contacts.at(arg).delta);
    if (head == "preclosure") return preclosure_multicontact(m.preclosures.at(arg).k);
    // atoms: close the given sets under subsets and add every atom singleton
    const AtomInfo info = atoms(p);
    std::set<ElementSet> closed;
    for (int a : elements_of(info.atoms)) closed.insert(bit(a));
    for (ElementSet s : sets)
        for_each_subset(s, [&](ElementSet sub) {
            if (sub) closed.insert(sub);
        });
    std::vector<ElementSet> family(closed.begin(), closed.end());
    return atom_generated(p, family);
}

}  // namespace

Model resolve(const Document& doc, const Guard& guard) {
    Model m;
    for (const Block& b : doc.blocks) {
        try {
            switch (b.type) {
                case BlockType::semilattice:
                case BlockType::poset: {
                    std::vector<std::pair<int, int>> pairs;
                    for (const auto& [lo, hi] : b.order)
                        pairs.emplace_back(
                            static_cast<int>(std::find(b.elements.begin(), b.elements.end(), lo) - b.elements.begin()),
                            static_cast<int>(std::find(b.elements.begin(), b.elements.end(), hi) - b.elements.begin()));
                    Poset p = Poset::from_relation(static_cast<int>(b.elements.size()), pairs, std::nullopt, b.elements);
                    Base base{p, std::nullopt};
                    if (b.type == BlockType::semilattice) base.semilattice = JoinSemilattice::from_poset(p);
                    m.bases.emplace(b.name, std::move(base));
                    break;
                }
                case BlockType::multicontact: {
                    Multicontact d = build_multicontact(b, m);
                    require_guard(popcount(d.base().nonzero()) <= kMaxMaterialized,
                                  "multicontact needs at most " + std::to_string(kMaxMaterialized) +
                                      " nonzero elements");
                    m.multicontacts.emplace(b.name, ResolvedMulticontact{b.base, std::move(d)});
                    break;
                }
                case BlockType::weakcontact: {
                    const Poset& p = m.bases.at(b.base).poset;
                    std::vector<std::pair<int, int>> pairs;
                    for (const auto& [x, y] : b.pairs) pairs.emplace_back(index_in(p, x), index_in(p, y));
                    WeakContact w = WeakContact::from_pairs(p, pairs, !b.explicit_pairs);
                    if (b.explicit_pairs) {
                        const auto v = validate_weak_contact(w);
                        if (!v.valid()) throw Error(ErrorKind::input, first_failure(v, p.labels()));
                    }
                    m.weak_contacts.emplace(b.name, ResolvedWeakContact{b.base, std::move(w)});
                    break;
                }
                case BlockType::preclosure: {
                    const Poset& p = m.bases.at(b.base).poset;
                    std::vector<int> table;
                    for (const auto& [x, y] : b.map) table.push_back(index_in(p, y));
                    m.preclosures.emplace(b.name, ResolvedPreClosure{b.base, PreClosure::make(p, table)});
                    break;
                }
                case BlockType::eventstructure: {
                    std::vector<std::pair<int, int>> order;
                    const auto pos = [&](const std::string& l) {
                        return static_cast<int>(std::find(b.elements.begin(), b.elements.end(), l) - b.elements.begin());
                    };
                    for (const auto& [lo, hi] : b.order) order.emplace_back(pos(lo), pos(hi));
                    std::vector<ElementSet> con;
                    for (const auto& s : b.sets) {
                        ElementSet mask = 0;
                        for (const auto& l : s) mask |= bit(pos(l));
                        con.push_back(mask);
                    }
                    m.event_structures.emplace(b.name, EventStructure::make(b.elements, order, con));
                    break;
                }
            }
        } catch (const Error& e) {
            throw Error(e.kind(), "line " + std::to_string(b.line) + ": " + to_string(b.type) + " " + b.name + ": " +
                                      e.what());
        }
        m.order.push_back(b.name);
    }
    (void)guard;
    return m;
}

Block order_block(const std::string& name, const Poset& p, bool semilattice) {
    Block b;
    b.type = semilattice ? BlockType::semilattice : BlockType::poset;
    b.name = name;
    b.elements = p.labels();
    b.zero = p.label(p.zero());
    for (auto [lo, hi] : p.covers()) b.order.emplace_back(p.label(lo), p.label(hi));
    return b;
}

namespace {

Block multicontact_block(const std::string& name, const std::string& base, const char* kind,
                         std::vector<ElementSet> sets, const Poset& p) {
    Block b;
    b.type = BlockType::multicontact;
    b.name = name;
    b.base = base;
    b.kind = kind;
    b.sets = sorted_sets(std::move(sets), p.labels());
    return b;
}

}  // namespace

Block generators_block(const std::string& name, const std::string& base, const Multicontact& d) {
    const Poset& p = d.base();
    std::vector<ElementSet> sets;
    for (ElementSet g : maximal_generators(d))
        if (!(p.lower_bounds(g) & p.nonzero())) sets.push_back(g);  // overlap members are implied
    return multicontact_block(name, base, "generators", std::move(sets), p);
}

Block explicit_block(const std::string& name, const std::string& base, const Multicontact& d) {
    return multicontact_block(name, base, "explicit", d.members(), d.base());
}

Block weak_contact_block(const std::string& name, const std::string& base, const WeakContact& d) {
    Block b;
    b.type = BlockType::weakcontact;
    b.name = name;
    b.base = base;
    b.explicit_pairs = true;
    for (auto [x, y] : d.pairs()) b.pairs.emplace_back(d.base().label(x), d.base().label(y));
    return b;
}

Block preclosure_block(const std::string& name, const std::string& base, const PreClosure& k) {
    Block b;
    b.type = BlockType::preclosure;
    b.name = name;
    b.base = base;
    for (int x = 0; x < k.base().size(); ++x) b.map.emplace_back(k.base().label(x), k.base().label(k(x)));
    return b;
}

Block event_structure_block(const std::string& name, const EventStructure& e) {
    Block b;
    b.type = BlockType::eventstructure;
    b.name = name;
    b.elements = e.events;
    b.order = covers_of(e.up, e.events);
    b.sets = sorted_sets(e.con, e.events);
    return b;
}

}  // namespace mcsl::dsl
