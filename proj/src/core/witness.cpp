#include "core/witness.hpp"

namespace mcsl {

const WitnessItem* find_item(const Witness& w, const std::string& role) {
    for (const auto& item : w)
        if (item.role == role) return &item;
    return nullptr;
}

namespace {

const WitnessItem& require_item(const Witness& w, const std::string& role) {
    const WitnessItem* item = find_item(w, role);
    if (!item) throw Error(ErrorKind::input, "witness has no component '" + role + "'");
    return *item;
}

}  // namespace

int witness_element(const Witness& w, const std::string& role) {
    return std::get<int>(require_item(w, role).value);
}

ElementSet witness_set(const Witness& w, const std::string& role) {
    return std::get<ElementSet>(require_item(w, role).value);
}

const std::vector<ElementSet>& witness_rows(const Witness& w, const std::string& role) {
    return std::get<std::vector<ElementSet>>(require_item(w, role).value);
}

std::vector<std::string> labels_of(ElementSet s, const std::vector<std::string>& labels) {
    std::vector<std::string> out;
    for (int x : elements_of(s)) out.push_back(labels.at(x));
    return out;
}

namespace {

std::string braced(ElementSet s, const std::vector<std::string>& labels) {
    std::string out = "{";
    for (const auto& l : labels_of(s, labels)) out += (out.size() > 1 ? "," : "") + l;
    return out + "}";
}

}  // namespace

std::string format_witness(const Witness& w, const std::vector<std::string>& labels) {
    std::string out;
    for (const auto& item : w) {
        if (!out.empty()) out += ", ";
        out += item.role + "=";
        if (const int* e = std::get_if<int>(&item.value)) {
            out += labels.at(*e);
        } else if (const ElementSet* s = std::get_if<ElementSet>(&item.value)) {
            out += braced(*s, labels);
        } else {
            out += "[";
            const auto& rows = std::get<std::vector<ElementSet>>(item.value);
            for (std::size_t i = 0; i < rows.size(); ++i) out += (i ? " " : "") + braced(rows[i], labels);
            out += "]";
        }
    }
    return out;
}

}  // namespace mcsl
