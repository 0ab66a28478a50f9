#include "softrough/soft_set.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

namespace softrough {

const char* special_class_name(SpecialClass c) {
    switch (c) {
        case SpecialClass::EmptySoftSet: return "EmptySoftSet";
        case SpecialClass::NullSoftSet: return "NullSoftSet";
        case SpecialClass::WholeSoftSet: return "WholeSoftSet";
        case SpecialClass::Ordinary: return "Ordinary";
    }
    return "?";
}

namespace {

void check_attributes(const Universe& u, const std::vector<Attribute>& attrs, bool ban_pipe) {
    std::unordered_set<std::string> names;
    for (const auto& a : attrs) {
        if (!names.insert(a.name).second)
            fail(Errc::DuplicateAttribute, "attribute '" + a.name + "' appears twice");
        if (ban_pipe && a.name.find('|') != std::string::npos)
            fail(Errc::BadAttributeName, "'|' is reserved for derived pair names: '" + a.name + "'");
        if (a.value.width() != u.size())
            fail(Errc::UniverseMismatch, "value of '" + a.name + "' has wrong width");
    }
}

} // namespace

SoftSet::SoftSet(UniversePtr universe, std::vector<Attribute> attributes)
    : universe_(std::move(universe)), attributes_(std::move(attributes)) {
    check_attributes(*universe_, attributes_, /*ban_pipe=*/true);
}

SoftSet::SoftSet(DerivedNames, UniversePtr universe, std::vector<Attribute> attributes)
    : universe_(std::move(universe)), attributes_(std::move(attributes)) {
    check_attributes(*universe_, attributes_, /*ban_pipe=*/false);
}

std::string SoftSet::format() const {
    std::string out = "[";
    for (std::size_t i = 0; i < attributes_.size(); ++i) {
        if (i) out += ";";
        out += attributes_[i].name + "=" + universe_->format_set(attributes_[i].value);
    }
    out += "]";
    return out;
}

SoftSet map_values(const SoftSet& s, const std::vector<ElementSet>& values) {
    std::vector<Attribute> attrs;
    attrs.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) attrs.push_back({s.name(i), values[i]});
    return SoftSet(SoftSet::DerivedNames{}, s.universe(), std::move(attrs));
}

SpecialClass classify(const SoftSet& s) {
    if (s.empty()) return SpecialClass::EmptySoftSet;
    bool all_empty = true, all_full = true;
    for (const auto& a : s.attributes()) {
        if (a.value.any()) all_empty = false;
        if (!a.value.is_full()) all_full = false;
    }
    if (all_empty) return SpecialClass::NullSoftSet;
    if (all_full) return SpecialClass::WholeSoftSet;
    return SpecialClass::Ordinary;
}

std::vector<ElementSet> tau(const SoftSet& s) {
    std::vector<ElementSet> family;
    family.reserve(s.size());
    for (const auto& a : s.attributes()) family.push_back(a.value);
    std::sort(family.begin(), family.end(), ElementSet::family_less);
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return family;
}

std::vector<ElementSet> tau_prime(const SoftSet& s) {
    auto family = tau(s);
    std::erase_if(family, [](const ElementSet& v) { return v.none(); });
    return family;
}

namespace {

void require_same_universe(const SoftSet& s, const SoftSet& f) {
    if (!same_universe(s.universe(), f.universe()))
        fail(Errc::UniverseMismatch, "soft sets live over different universes");
}

void require_nonempty_attrs(const SoftSet& s, const SoftSet& f) {
    if (s.empty() || f.empty())
        fail(Errc::EmptyAttributeSet, "binary soft operations need nonempty attribute sets");
}

} // namespace

bool soft_equal(const SoftSet& s, const SoftSet& f) {
    require_same_universe(s, f);
    return s.attributes() == f.attributes();
}

bool soft_equivalent(const SoftSet& s, const SoftSet& f) {
    require_same_universe(s, f);
    return tau(s) == tau(f);
}

SoftSet complement(const SoftSet& s) {
    std::vector<ElementSet> values;
    values.reserve(s.size());
    for (const auto& a : s.attributes()) values.push_back(a.value.complement());
    return map_values(s, values);
}

namespace {

template <typename Combine>
std::vector<Attribute> pairwise_values(const SoftSet& s, const SoftSet& f, Combine&& combine) {
    require_same_universe(s, f);
    require_nonempty_attrs(s, f);
    std::vector<Attribute> attrs;
    attrs.reserve(s.size() * f.size());
    for (const auto& a : s.attributes())
        for (const auto& d : f.attributes())
            attrs.push_back({"(" + a.name + "|" + d.name + ")", combine(a.value, d.value)});
    return attrs;
}

} // namespace

SoftSet soft_union(const SoftSet& s, const SoftSet& f) {
    auto attrs = pairwise_values(s, f, [](const ElementSet& a, const ElementSet& b) { return a | b; });
    return SoftSet(SoftSet::DerivedNames{}, s.universe(), std::move(attrs));
}

SoftSet soft_intersection(const SoftSet& s, const SoftSet& f) {
    auto attrs = pairwise_values(s, f, [](const ElementSet& a, const ElementSet& b) { return a & b; });
    return SoftSet(SoftSet::DerivedNames{}, s.universe(), std::move(attrs));
}

UniversePtr product_universe(const UniversePtr& u) {
    const auto& labels = u->labels();
    std::vector<std::string> pair_labels;
    pair_labels.reserve(labels.size() * labels.size());
    for (const auto& x : labels)
        for (const auto& y : labels) pair_labels.push_back("(" + x + "," + y + ")");
    return build_universe(std::move(pair_labels));
}

SoftSet soft_product(const SoftSet& s, const SoftSet& f) {
    require_same_universe(s, f);
    require_nonempty_attrs(s, f);
    const std::size_t n = s.universe()->size();
    auto pu = product_universe(s.universe());
    std::vector<Attribute> attrs;
    attrs.reserve(s.size() * f.size());
    for (const auto& a : s.attributes()) {
        for (const auto& d : f.attributes()) {
            ElementSet v(n * n);
            for (auto i : a.value.indices())
                for (auto j : d.value.indices()) v.set(i * n + j);
            attrs.push_back({"(" + a.name + "|" + d.name + ")", std::move(v)});
        }
    }
    return SoftSet(SoftSet::DerivedNames{}, pu, std::move(attrs));
}

} // namespace softrough
