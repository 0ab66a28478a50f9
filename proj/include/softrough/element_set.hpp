#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "softrough/errors.hpp"

namespace softrough {

/// A subset of a fixed finite universe, stored as a bit vector indexed by
/// element position. Width is fixed at construction; binary operations
/// require equal widths.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

    static ElementSet full(std::size_t width) {
        ElementSet s(width);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    std::size_t width() const { return width_; }

    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

    void set(std::size_t i, bool value = true) {
        if (value)
            words_[i / 64] |= std::uint64_t{1} << (i % 64);
        else
            words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }

    std::size_t count() const;
    bool any() const;
    bool none() const { return !any(); }
    bool is_full() const { return count() == width_; }

    ElementSet operator|(const ElementSet& o) const;
    ElementSet operator&(const ElementSet& o) const;
    /// Set difference (elements of *this not in o).
    ElementSet minus(const ElementSet& o) const;
    /// Complement within the universe.
    ElementSet complement() const;

    bool is_subset_of(const ElementSet& o) const;
    bool intersects(const ElementSet& o) const;

    bool operator==(const ElementSet& o) const { return width_ == o.width_ && words_ == o.words_; }
    bool operator!=(const ElementSet& o) const { return !(*this == o); }

    /// Ascending element indices.
    std::vector<std::size_t> indices() const;

    /// Lexicographic order on the ascending index sequences; used to give
    /// set families a canonical order.
    static bool family_less(const ElementSet& a, const ElementSet& b);

private:
    void trim() {
        if (width_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (width_ % 64)) - 1;
    }

    void check_width(const ElementSet& o) const {
        if (width_ != o.width_)
            fail(Errc::UniverseMismatch, "element sets have different widths");
    }

    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace softrough
