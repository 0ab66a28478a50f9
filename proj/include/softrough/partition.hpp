#pragma once

#include <string>
#include <utility>
#include <vector>

#include "softrough/universe.hpp"

namespace softrough {

/// The quotient X/R of an equivalence relation: disjoint nonempty blocks
/// covering the universe, in canonical order (ascending smallest member
/// index). Two descriptions of the same quotient construct equal values.
class Partition {
public:
    Partition(UniversePtr universe, std::vector<ElementSet> blocks);

    const UniversePtr& universe() const { return universe_; }
    const std::vector<ElementSet>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }

    const ElementSet& block_of(std::size_t element) const { return blocks_[block_index_[element]]; }

    bool operator==(const Partition& o) const { return blocks_ == o.blocks_; }

    /// "{a,b|c,d}"
    std::string format() const;

private:
    UniversePtr universe_;
    std::vector<ElementSet> blocks_;
    std::vector<std::size_t> block_index_;
};

Partition partition_from_blocks(const UniversePtr& u,
                                const std::vector<std::vector<std::string>>& blocks);

Partition partition_from_pairs(const UniversePtr& u,
                               const std::vector<std::pair<std::string, std::string>>& pairs);

/// The block containing the labelled element.
ElementSet equivalence_class(const Partition& p, const std::string& label);

} // namespace softrough
