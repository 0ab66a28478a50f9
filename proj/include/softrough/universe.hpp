#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "softrough/element_set.hpp"

namespace softrough {

/// An ordered finite set of distinct labels. The label <-> index bijection is
/// fixed at construction and shared (via shared_ptr) by every value built
/// over it.
class Universe {
public:
    explicit Universe(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }

    bool contains(const std::string& label) const { return index_.count(label) != 0; }
    std::size_t index_of(const std::string& label) const;

    ElementSet empty_set() const { return ElementSet(size()); }
    ElementSet full_set() const { return ElementSet::full(size()); }
    ElementSet set_of(const std::vector<std::string>& labels) const;

    /// "{a,b,c}" in universe index order.
    std::string format_set(const ElementSet& s) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr build_universe(std::vector<std::string> labels);

/// Same object or same label sequence.
bool same_universe(const UniversePtr& a, const UniversePtr& b);

} // namespace softrough
