#pragma once

#include "softrough/partition.hpp"
#include "softrough/ratio.hpp"
#include "softrough/soft_set.hpp"

namespace softrough {

/// Greatest composed set contained in k: the union of blocks inside k.
ElementSet classical_lower(const Partition& p, const ElementSet& k);
/// Least composed set containing k: the union of blocks meeting k.
ElementSet classical_upper(const Partition& p, const ElementSet& k);
/// upper \ lower.
ElementSet classical_boundary(const Partition& p, const ElementSet& k);
/// |lower| / |upper|; requires k nonempty.
Ratio classical_accuracy(const Partition& p, const ElementSet& k);
/// 1 - accuracy.
Ratio classical_roughness(const Partition& p, const ElementSet& k);

/// Attribute-wise classical lower approximation; names and order preserved.
SoftSet lower_soft(const Partition& p, const SoftSet& s);
/// Attribute-wise classical upper approximation.
SoftSet upper_soft(const Partition& p, const SoftSet& s);

/// The pair (L(S,A), U(S,A)). Attribute-wise lower <= source <= upper, and
/// both sides are unions of blocks of the generating partition.
struct SoftRoughSet {
    SoftSet lower;
    SoftSet upper;
};

SoftRoughSet soft_rough(const Partition& p, const SoftSet& s);

struct BoundaryReport {
    std::vector<Attribute> per_attribute; // upper \ lower, per attribute
    ElementSet total;                     // union over attributes
};

BoundaryReport boundary(const Partition& p, const SoftSet& s);

/// Lower and upper soft approximations coincide.
bool is_exact(const Partition& p, const SoftSet& s);

/// tau-families of both the lower and the upper approximations agree.
bool roughly_soft_equal(const Partition& p, const SoftSet& s, const SoftSet& f);

/// For every d with F(d) nonempty there is an a with {} != S(a) <= F(d).
bool internally_approximates(const SoftSet& s, const SoftSet& f);
/// For every d with F(d) != X there is an a with X != S(a) >= F(d).
bool externally_approximates(const SoftSet& s, const SoftSet& f);

bool internally_strict(const SoftSet& s, const SoftSet& f);
bool externally_strict(const SoftSet& s, const SoftSet& f);
bool internally_equivalent(const SoftSet& s, const SoftSet& f);
bool externally_equivalent(const SoftSet& s, const SoftSet& f);

} // namespace softrough
