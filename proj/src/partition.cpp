#include "softrough/partition.hpp"

#include <algorithm>

namespace softrough {

Partition::Partition(UniversePtr universe, std::vector<ElementSet> blocks)
    : universe_(std::move(universe)), blocks_(std::move(blocks)) {
    const std::size_t n = universe_->size();
    ElementSet seen(n);
    for (const auto& b : blocks_) {
        if (b.width() != n) fail(Errc::UniverseMismatch, "block width differs from universe size");
        if (b.none()) fail(Errc::NotAPartition, "empty block");
        if (seen.intersects(b))
            fail(Errc::NotAPartition, "blocks overlap at " + universe_->format_set(seen & b));
        seen = seen | b;
    }
    if (!seen.is_full())
        fail(Errc::NotAPartition, "blocks do not cover " + universe_->format_set(seen.complement()));

    // canonical order: ascending smallest member index
    std::sort(blocks_.begin(), blocks_.end(), [](const ElementSet& a, const ElementSet& b) {
        return a.indices().front() < b.indices().front();
    });

    block_index_.assign(n, 0);
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi)
        for (auto e : blocks_[bi].indices()) block_index_[e] = bi;
}

std::string Partition::format() const {
    std::string out = "{";
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
        if (bi) out += "|";
        bool first = true;
        for (auto e : blocks_[bi].indices()) {
            if (!first) out += ",";
            out += universe_->label(e);
            first = false;
        }
    }
    out += "}";
    return out;
}

Partition partition_from_blocks(const UniversePtr& u,
                                const std::vector<std::vector<std::string>>& blocks) {
    std::vector<ElementSet> sets;
    sets.reserve(blocks.size());
    for (const auto& b : blocks) sets.push_back(u->set_of(b));
    return Partition(u, std::move(sets));
}

Partition partition_from_pairs(const UniversePtr& u,
                               const std::vector<std::pair<std::string, std::string>>& pairs) {
    const std::size_t n = u->size();
    std::vector<ElementSet> row(n, ElementSet(n));
    for (const auto& [a, b] : pairs) row[u->index_of(a)].set(u->index_of(b));

    // validated, not closed: report the first missing witness
    for (std::size_t x = 0; x < n; ++x)
        if (!row[x].test(x))
            fail(Errc::NotEquivalence, "missing reflexive pair (" + u->label(x) + "," + u->label(x) + ")");
    for (std::size_t x = 0; x < n; ++x)
        for (auto y : row[x].indices())
            if (!row[y].test(x))
                fail(Errc::NotEquivalence,
                     "missing symmetric pair (" + u->label(y) + "," + u->label(x) + ")");
    for (std::size_t x = 0; x < n; ++x)
        for (auto y : row[x].indices())
            if (!row[y].is_subset_of(row[x])) {
                auto z = row[y].minus(row[x]).indices().front();
                fail(Errc::NotEquivalence,
                     "missing transitive pair (" + u->label(x) + "," + u->label(z) + ")");
            }

    std::vector<ElementSet> blocks;
    ElementSet placed(n);
    for (std::size_t x = 0; x < n; ++x) {
        if (placed.test(x)) continue;
        blocks.push_back(row[x]);
        placed = placed | row[x];
    }
    return Partition(u, std::move(blocks));
}

ElementSet equivalence_class(const Partition& p, const std::string& label) {
    return p.block_of(p.universe()->index_of(label));
}

} // namespace softrough
