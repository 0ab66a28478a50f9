#include "softrough/universe.hpp"

#include <utility>

namespace softrough {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) fail(Errc::EmptyUniverse, "universe needs at least one element");
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!index_.emplace(labels_[i], i).second)
            fail(Errc::DuplicateLabel, "label '" + labels_[i] + "' appears twice");
    }
}

std::size_t Universe::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) fail(Errc::UnknownLabel, "no element '" + label + "'");
    return it->second;
}

ElementSet Universe::set_of(const std::vector<std::string>& labels) const {
    ElementSet s(size());
    for (const auto& l : labels) s.set(index_of(l));
    return s;
}

std::string Universe::format_set(const ElementSet& s) const {
    std::string out = "{";
    bool first = true;
    for (auto i : s.indices()) {
        if (!first) out += ",";
        out += labels_[i];
        first = false;
    }
    out += "}";
    return out;
}

UniversePtr build_universe(std::vector<std::string> labels) {
    return std::make_shared<const Universe>(std::move(labels));
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->labels() == b->labels();
}

} // namespace softrough
