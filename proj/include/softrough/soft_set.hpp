#pragma once

#include <string>
#include <vector>

#include "softrough/universe.hpp"

namespace softrough {

struct Attribute {
    std::string name;
    ElementSet value;

    bool operator==(const Attribute& o) const { return name == o.name && value == o.value; }
};

enum class SpecialClass { EmptySoftSet, NullSoftSet, WholeSoftSet, Ordinary };

const char* special_class_name(SpecialClass c);

/// A parametrized family of subsets of one universe: an ordered attribute
/// list with one subset per attribute. Attribute names are pairwise distinct;
/// duplicate *values* are allowed. Immutable after construction.
///
/// User-supplied names may not contain '|': binary operations name their
/// A x D attributes "(left|right)", and the ban keeps those names unique.
class SoftSet {
public:
    SoftSet(UniversePtr universe, std::vector<Attribute> attributes);

    const UniversePtr& universe() const { return universe_; }
    const std::vector<Attribute>& attributes() const { return attributes_; }
    std::size_t size() const { return attributes_.size(); }
    bool empty() const { return attributes_.empty(); }

    const std::string& name(std::size_t i) const { return attributes_[i].name; }
    const ElementSet& value(std::size_t i) const { return attributes_[i].value; }

    std::string format() const;

private:
    struct DerivedNames {};
    SoftSet(DerivedNames, UniversePtr universe, std::vector<Attribute> attributes);

    friend SoftSet soft_union(const SoftSet&, const SoftSet&);
    friend SoftSet soft_intersection(const SoftSet&, const SoftSet&);
    friend SoftSet soft_product(const SoftSet&, const SoftSet&);
    friend SoftSet map_values(const SoftSet&, const std::vector<ElementSet>&);

    UniversePtr universe_;
    std::vector<Attribute> attributes_;
};

/// Same attribute list with new values (names and order preserved).
SoftSet map_values(const SoftSet& s, const std::vector<ElementSet>& values);

SpecialClass classify(const SoftSet& s);

/// Distinct attribute values in canonical family order.
std::vector<ElementSet> tau(const SoftSet& s);
/// tau with the empty set removed.
std::vector<ElementSet> tau_prime(const SoftSet& s);

/// S = S' and A = A' (name sequences and values equal attribute-wise).
bool soft_equal(const SoftSet& s, const SoftSet& f);
/// tau(s) = tau(f).
bool soft_equivalent(const SoftSet& s, const SoftSet& f);

SoftSet complement(const SoftSet& s);

/// Attribute set A x D in A-major order, names "(a|d)", value S(a) u F(d).
SoftSet soft_union(const SoftSet& s, const SoftSet& f);
/// As soft_union with intersection.
SoftSet soft_intersection(const SoftSet& s, const SoftSet& f);

/// The ordered universe X x X in row-major (lexicographic) index order, with
/// labels "(x,y)".
UniversePtr product_universe(const UniversePtr& u);

/// Attribute set A x D; value at (a,d) is the Cartesian product
/// S(a) x F(d) as a subset of product_universe(X).
SoftSet soft_product(const SoftSet& s, const SoftSet& f);

} // namespace softrough
