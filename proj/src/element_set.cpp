#include "softrough/element_set.hpp"

#include <bit>

namespace softrough {

std::size_t ElementSet::count() const {
    std::size_t n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

bool ElementSet::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

ElementSet ElementSet::operator|(const ElementSet& o) const {
    check_width(o);
    ElementSet r(width_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
}

ElementSet ElementSet::operator&(const ElementSet& o) const {
    check_width(o);
    ElementSet r(width_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
}

ElementSet ElementSet::minus(const ElementSet& o) const {
    check_width(o);
    ElementSet r(width_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
    return r;
}

ElementSet ElementSet::complement() const {
    ElementSet r(width_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
}

bool ElementSet::is_subset_of(const ElementSet& o) const {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

bool ElementSet::intersects(const ElementSet& o) const {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

std::vector<std::size_t> ElementSet::indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            out.push_back(wi * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

bool ElementSet::family_less(const ElementSet& a, const ElementSet& b) {
    auto ia = a.indices();
    auto ib = b.indices();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

} // namespace softrough
