#include "softrough/approx.hpp"

namespace softrough {

namespace {

void require_over(const Partition& p, const ElementSet& k) {
    if (k.width() != p.universe()->size())
        fail(Errc::UniverseMismatch, "subset width differs from partition universe");
}

void require_over(const Partition& p, const SoftSet& s) {
    if (!same_universe(p.universe(), s.universe()))
        fail(Errc::UniverseMismatch, "soft set and partition live over different universes");
}

} // namespace

ElementSet classical_lower(const Partition& p, const ElementSet& k) {
    require_over(p, k);
    ElementSet out(k.width());
    for (const auto& b : p.blocks())
        if (b.is_subset_of(k)) out = out | b;
    return out;
}

ElementSet classical_upper(const Partition& p, const ElementSet& k) {
    require_over(p, k);
    ElementSet out(k.width());
    for (const auto& b : p.blocks())
        if (b.intersects(k)) out = out | b;
    return out;
}

ElementSet classical_boundary(const Partition& p, const ElementSet& k) {
    return classical_upper(p, k).minus(classical_lower(p, k));
}

Ratio classical_accuracy(const Partition& p, const ElementSet& k) {
    require_over(p, k);
    if (k.none()) fail(Errc::EmptySubject, "accuracy of the empty set is undefined");
    return Ratio(static_cast<long long>(classical_lower(p, k).count()),
                 static_cast<long long>(classical_upper(p, k).count()));
}

Ratio classical_roughness(const Partition& p, const ElementSet& k) {
    return one_minus(classical_accuracy(p, k));
}

namespace {

template <typename Approx>
SoftSet attribute_wise(const Partition& p, const SoftSet& s, Approx&& approx) {
    require_over(p, s);
    std::vector<ElementSet> values;
    values.reserve(s.size());
    for (const auto& a : s.attributes()) values.push_back(approx(p, a.value));
    return map_values(s, values);
}

} // namespace

SoftSet lower_soft(const Partition& p, const SoftSet& s) {
    return attribute_wise(p, s, [](const Partition& q, const ElementSet& v) {
        return classical_lower(q, v);
    });
}

SoftSet upper_soft(const Partition& p, const SoftSet& s) {
    return attribute_wise(p, s, [](const Partition& q, const ElementSet& v) {
        return classical_upper(q, v);
    });
}

SoftRoughSet soft_rough(const Partition& p, const SoftSet& s) {
    return {lower_soft(p, s), upper_soft(p, s)};
}

BoundaryReport boundary(const Partition& p, const SoftSet& s) {
    require_over(p, s);
    BoundaryReport report;
    report.total = ElementSet(s.universe()->size());
    report.per_attribute.reserve(s.size());
    for (const auto& a : s.attributes()) {
        ElementSet bd = classical_boundary(p, a.value);
        report.total = report.total | bd;
        report.per_attribute.push_back({a.name, std::move(bd)});
    }
    return report;
}

bool is_exact(const Partition& p, const SoftSet& s) {
    return soft_equal(lower_soft(p, s), upper_soft(p, s));
}

bool roughly_soft_equal(const Partition& p, const SoftSet& s, const SoftSet& f) {
    require_over(p, s);
    require_over(p, f);
    return tau(lower_soft(p, s)) == tau(lower_soft(p, f)) &&
           tau(upper_soft(p, s)) == tau(upper_soft(p, f));
}

bool internally_approximates(const SoftSet& s, const SoftSet& f) {
    if (!same_universe(s.universe(), f.universe()))
        fail(Errc::UniverseMismatch, "soft sets live over different universes");
    for (const auto& d : f.attributes()) {
        if (d.value.none()) continue;
        bool witness = false;
        for (const auto& a : s.attributes()) {
            if (a.value.any() && a.value.is_subset_of(d.value)) {
                witness = true;
                break;
            }
        }
        if (!witness) return false;
    }
    return true;
}

bool externally_approximates(const SoftSet& s, const SoftSet& f) {
    if (!same_universe(s.universe(), f.universe()))
        fail(Errc::UniverseMismatch, "soft sets live over different universes");
    for (const auto& d : f.attributes()) {
        if (d.value.is_full()) continue;
        bool witness = false;
        for (const auto& a : s.attributes()) {
            if (!a.value.is_full() && d.value.is_subset_of(a.value)) {
                witness = true;
                break;
            }
        }
        if (!witness) return false;
    }
    return true;
}

bool internally_strict(const SoftSet& s, const SoftSet& f) {
    return internally_approximates(s, f) && !internally_approximates(f, s);
}

bool externally_strict(const SoftSet& s, const SoftSet& f) {
    return externally_approximates(s, f) && !externally_approximates(f, s);
}

bool internally_equivalent(const SoftSet& s, const SoftSet& f) {
    return internally_approximates(s, f) && internally_approximates(f, s);
}

bool externally_equivalent(const SoftSet& s, const SoftSet& f) {
    return externally_approximates(s, f) && externally_approximates(f, s);
}

} // namespace softrough
