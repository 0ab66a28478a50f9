#include "softrough/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <deque>
#include <numbers>

namespace softrough {

namespace {

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

std::vector<std::string> letter_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    return labels;
}

void rgs_recurse(int i, int n, int max_used, std::vector<int>& rgs,
                 const std::function<void(const std::vector<int>&)>& emit) {
    if (i == n) {
        emit(rgs);
        return;
    }
    for (int v = 0; v <= max_used + 1; ++v) {
        rgs[i] = v;
        rgs_recurse(i + 1, n, std::max(max_used, v), rgs, emit);
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1 || n > 10) fail(Errc::SizeOutOfRange, "partition enumeration supports 1..10");
    auto u = build_universe(letter_labels(n));
    std::vector<Partition> out;
    std::vector<int> rgs(n, 0);
    rgs_recurse(0, n, -1, rgs, [&](const std::vector<int>& a) {
        int block_count = *std::max_element(a.begin(), a.end()) + 1;
        std::vector<ElementSet> blocks(block_count, ElementSet(n));
        for (int i = 0; i < n; ++i) blocks[a[i]].set(i);
        out.emplace_back(u, std::move(blocks));
    });
    return out;
}

std::vector<unsigned long long> bell_numbers(int n) {
    if (n < 0) fail(Errc::SizeOutOfRange, "negative index");
    std::vector<unsigned long long> bell{1};
    for (int m = 0; m < n; ++m) {
        unsigned long long next = 0, binom = 1;
        for (int k = 0; k <= m; ++k) {
            next += binom * bell[k];
            binom = binom * (m - k) / (k + 1);
        }
        bell.push_back(next);
    }
    return bell;
}

SoftSet random_soft_set(const UniversePtr& u, int k, std::uint64_t seed) {
    if (k < 1) fail(Errc::SizeOutOfRange, "need at least one attribute");
    SplitMix64 gen(seed);
    const std::size_t n = u->size();
    std::vector<Attribute> attrs;
    attrs.reserve(k);
    for (int j = 1; j <= k; ++j) {
        ElementSet v(n);
        for (std::size_t base = 0; base < n; base += 64) {
            std::uint64_t w = gen.next();
            for (std::size_t b = 0; b < 64 && base + b < n; ++b)
                if ((w >> b) & 1u) v.set(base + b);
        }
        attrs.push_back({"e" + std::to_string(j), std::move(v)});
    }
    return SoftSet(u, std::move(attrs));
}

bool VerificationReport::passed() const { return assert_violations() == 0; }

long long VerificationReport::assert_violations() const {
    long long total = 0;
    for (const auto& c : claims)
        if (c.kind == ClaimKind::Assert) total += c.violations;
    return total;
}

const ClaimResult* VerificationReport::find(const std::string& id) const {
    for (const auto& c : claims)
        if (c.id == id) return &c;
    return nullptr;
}

std::string VerificationReport::to_text() const {
    std::string out;
    for (const auto& c : claims) {
        const char* status = c.kind == ClaimKind::Info ? "INFO" : (c.violations ? "FAIL" : "PASS");
        out += "CLAIM " + c.id + " " + status + " checked=" + std::to_string(c.checked) +
               " skipped=" + std::to_string(c.skipped) +
               " violations=" + std::to_string(c.violations) + "\n";
        for (const auto& e : c.examples) out += "  " + e + "\n";
    }
    return out;
}

namespace {

constexpr std::size_t kMaxExamples = 4;

class ClaimSet {
public:
    ClaimResult& add(const std::string& id, ClaimKind kind = ClaimKind::Assert) {
        ClaimResult c;
        c.id = id;
        c.kind = kind;
        claims_.push_back(std::move(c));
        return claims_.back();
    }

    VerificationReport report() && {
        return {std::vector<ClaimResult>(std::make_move_iterator(claims_.begin()),
                                         std::make_move_iterator(claims_.end()))};
    }

private:
    std::deque<ClaimResult> claims_; // stable references across add()
};

using Describe = std::function<std::string()>;

void check(ClaimResult& c, bool ok, const Describe& describe) {
    ++c.checked;
    if (!ok) {
        ++c.violations;
        if (c.examples.size() < kMaxExamples) c.examples.push_back(describe());
    }
}

void skip(ClaimResult& c) { ++c.skipped; }

void require_n(int n) {
    if (n < 2 || n > 5) fail(Errc::SizeOutOfRange, "verification supports universes of size 2..5");
}

// ---- shared instance machinery -------------------------------------------

struct Instance {
    SoftSet s;
    SoftSet lower;
    SoftSet upper;
    bool lower_witnesses_survive; // every nonempty value keeps a nonempty lower
};

Instance make_instance(const Partition& p, const SoftSet& s) {
    Instance inst{s, lower_soft(p, s), upper_soft(p, s), true};
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.value(i).any() && inst.lower.value(i).none()) {
            inst.lower_witnesses_survive = false;
            break;
        }
    return inst;
}

std::vector<SoftSet> instance_pool(const UniversePtr& u, int samples, std::uint64_t seed) {
    std::vector<SoftSet> pool;
    pool.reserve(samples + 4);
    SplitMix64 gen(seed);
    for (int i = 0; i < samples; ++i) pool.push_back(random_soft_set(u, 1 + (i % 4), gen.next()));

    const std::size_t n = u->size();
    pool.emplace_back(u, std::vector<Attribute>{{"e1", ElementSet(n)}, {"e2", ElementSet(n)}});
    pool.emplace_back(
        u, std::vector<Attribute>{{"e1", ElementSet::full(n)}, {"e2", ElementSet::full(n)}});
    return pool;
}

// ---- pinned desk examples -------------------------------------------------

struct PinnedFour {
    UniversePtr u;
    Partition p6;
    SoftSet s;  // a1 {a,b,d}, a2 {b,c,d}, a3 {c}
    SoftSet f;  // k1 {a,b,c}, k2 {b,d}, k3 {c,d}, k4 {a,d}
};

PinnedFour pinned_four() {
    auto u = build_universe({"a", "b", "c", "d"});
    Partition p6 = partition_from_blocks(u, {{"a", "b"}, {"c", "d"}});
    SoftSet s(u, {{"a1", u->set_of({"a", "b", "d"})},
                  {"a2", u->set_of({"b", "c", "d"})},
                  {"a3", u->set_of({"c"})}});
    SoftSet f(u, {{"k1", u->set_of({"a", "b", "c"})},
                  {"k2", u->set_of({"b", "d"})},
                  {"k3", u->set_of({"c", "d"})},
                  {"k4", u->set_of({"a", "d"})}});
    return {u, std::move(p6), std::move(s), std::move(f)};
}

struct PinnedFive {
    UniversePtr u;
    Partition p;
    SoftSet s;  // a1 {a,b,c,d}, a2 {b,c,e}, a3 {b}
    SoftSet f;  // d1 {a,b,d}, d2 {c,e}
};

PinnedFive pinned_five() {
    auto u = build_universe({"a", "b", "c", "d", "e"});
    Partition p = partition_from_blocks(u, {{"a", "b"}, {"c"}, {"d", "e"}});
    SoftSet s(u, {{"a1", u->set_of({"a", "b", "c", "d"})},
                  {"a2", u->set_of({"b", "c", "e"})},
                  {"a3", u->set_of({"b"})}});
    SoftSet f(u, {{"d1", u->set_of({"a", "b", "d"})}, {"d2", u->set_of({"c", "e"})}});
    return {u, std::move(p), std::move(s), std::move(f)};
}

} // namespace

// ---- section 3 -------------------------------------------------------------

namespace {

struct ApproxClaims {
    ClaimResult& ex31;
    ClaimResult& ex32;
    ClaimResult& ex33;
    ClaimResult& t31iL;
    ClaimResult& t31iU;
    ClaimResult& t31iL_unrestricted;
    ClaimResult& t31ii;
    ClaimResult& t32i;
    ClaimResult& t32ii;
    ClaimResult& t33L;
    ClaimResult& t33U;
    ClaimResult& t33L_unrestricted;
    ClaimResult& t34i;
    ClaimResult& t34ii;
    ClaimResult& t34iii;
    ClaimResult& t34iv;
    std::array<ClaimResult*, 4> t35;
    std::array<ClaimResult*, 4> t36;
    ClaimResult& t37;
    std::array<ClaimResult*, 8> t38;
    ClaimResult& rem31;
    long long rem31_found = 0;
};

void check_singles(ApproxClaims& cl, const Partition& p, const Instance& inst) {
    const SoftSet& s = inst.s;
    auto describe = [&] { return "p=" + p.format() + " s=" + s.format(); };

    switch (classify(s)) {
        case SpecialClass::NullSoftSet:
            check(cl.t34i, soft_equal(inst.lower, s) && soft_equal(inst.upper, s), describe);
            skip(cl.t34ii);
            break;
        case SpecialClass::WholeSoftSet:
            check(cl.t34ii, soft_equal(inst.lower, s) && soft_equal(inst.upper, s), describe);
            skip(cl.t34i);
            break;
        default:
            skip(cl.t34i);
            skip(cl.t34ii);
            break;
    }

    check(cl.t34iii,
          soft_equal(lower_soft(p, inst.lower), inst.lower) &&
              soft_equal(upper_soft(p, inst.upper), inst.upper),
          describe);
    check(cl.t34iv,
          soft_equal(lower_soft(p, inst.upper), inst.upper) &&
              soft_equal(upper_soft(p, inst.lower), inst.lower),
          describe);

    SoftSet cs = complement(s);
    check(cl.t37,
          soft_equal(inst.lower, complement(upper_soft(p, cs))) &&
              soft_equal(inst.upper, complement(lower_soft(p, cs))),
          describe);
}

void check_pairs(ApproxClaims& cl, const Partition& p, const Instance& a, const Instance& b) {
    const SoftSet &s = a.s, &f = b.s;
    auto describe = [&] { return "p=" + p.format() + " s=" + s.format() + " f=" + f.format(); };

    // internal approximation monotonicity
    if (internally_approximates(s, f)) {
        check(cl.t31iU, internally_approximates(a.upper, b.upper), describe);
        const bool lower_ok = internally_approximates(a.lower, b.lower);
        if (a.lower_witnesses_survive)
            check(cl.t31iL, lower_ok, describe);
        else
            skip(cl.t31iL);
        check(cl.t31iL_unrestricted, lower_ok, describe);
    } else {
        skip(cl.t31iU);
        skip(cl.t31iL);
        skip(cl.t31iL_unrestricted);
    }

    if (internally_strict(s, f))
        check(cl.t31ii,
              internally_strict(a.lower, b.lower) && internally_strict(a.upper, b.upper),
              describe);
    else
        skip(cl.t31ii);

    // external approximation: lower preservation only (upper fails; Rem 3.1)
    if (classify(f) == SpecialClass::WholeSoftSet) {
        skip(cl.t32i); // vacuous: no value of f needs a witness
        skip(cl.rem31);
    } else if (externally_approximates(s, f)) {
        check(cl.t32i, externally_approximates(a.lower, b.lower), describe);
        ++cl.rem31.checked;
        if (!externally_approximates(a.upper, b.upper)) {
            ++cl.rem31_found;
            if (cl.rem31.examples.size() < kMaxExamples)
                cl.rem31.examples.push_back("counterexample: " + describe());
        }
    } else {
        skip(cl.t32i);
        skip(cl.rem31);
    }

    if (externally_strict(s, f))
        check(cl.t32ii, externally_strict(a.lower, b.lower), describe);
    else
        skip(cl.t32ii);

    // internal equivalence preservation
    if (internally_equivalent(s, f)) {
        check(cl.t33U, internally_equivalent(a.upper, b.upper), describe);
        const bool lower_ok = internally_equivalent(a.lower, b.lower);
        if (a.lower_witnesses_survive && b.lower_witnesses_survive)
            check(cl.t33L, lower_ok, describe);
        else
            skip(cl.t33L);
        check(cl.t33L_unrestricted, lower_ok, describe);
    } else {
        skip(cl.t33U);
        skip(cl.t33L);
        skip(cl.t33L_unrestricted);
    }

    // union/intersection inclusions under their hypotheses
    bool hyp35 = true;
    for (std::size_t i = 0; i < a.lower.size() && hyp35; ++i)
        for (std::size_t j = 0; j < b.lower.size() && hyp35; ++j)
            if (!a.lower.value(i).intersects(b.lower.value(j))) hyp35 = false;
    if (hyp35) {
        SoftSet union_sf = soft_union(s, f);
        SoftSet inter_sf = soft_intersection(s, f);
        check(*cl.t35[0],
              internally_approximates(soft_union(a.lower, b.lower), lower_soft(p, union_sf)),
              describe);
        check(*cl.t35[1],
              internally_approximates(lower_soft(p, inter_sf),
                                      soft_intersection(a.lower, b.lower)),
              describe);
        check(*cl.t35[2],
              internally_approximates(soft_union(a.upper, b.upper), upper_soft(p, union_sf)),
              describe);
        check(*cl.t35[3],
              internally_approximates(upper_soft(p, inter_sf),
                                      soft_intersection(a.upper, b.upper)),
              describe);
    } else {
        for (auto* c : cl.t35) skip(*c);
    }

    bool hyp36 = true;
    for (std::size_t i = 0; i < a.upper.size() && hyp36; ++i)
        for (std::size_t j = 0; j < b.upper.size() && hyp36; ++j)
            if ((a.upper.value(i) | b.upper.value(j)).is_full()) hyp36 = false;
    if (hyp36) {
        SoftSet union_sf = soft_union(s, f);
        SoftSet inter_sf = soft_intersection(s, f);
        check(*cl.t36[0],
              externally_approximates(lower_soft(p, union_sf), soft_union(a.lower, b.lower)),
              describe);
        check(*cl.t36[1],
              externally_approximates(soft_intersection(a.lower, b.lower),
                                      lower_soft(p, inter_sf)),
              describe);
        check(*cl.t36[2],
              externally_approximates(upper_soft(p, union_sf), soft_union(a.upper, b.upper)),
              describe);
        check(*cl.t36[3],
              externally_approximates(soft_intersection(a.upper, b.upper),
                                      upper_soft(p, inter_sf)),
              describe);
    } else {
        for (auto* c : cl.t36) skip(*c);
    }

    // the eight duality identities
    SoftSet cs = complement(s), cf = complement(f);
    SoftSet lcs = lower_soft(p, cs), ucs = upper_soft(p, cs);
    SoftSet lcf = lower_soft(p, cf), ucf = upper_soft(p, cf);
    const SoftSet &ls = a.lower, &us = a.upper, &lf = b.lower, &uf = b.upper;
    check(*cl.t38[0], soft_equal(complement(soft_union(ls, lf)), soft_intersection(ucs, ucf)),
          describe);
    check(*cl.t38[1], soft_equal(complement(soft_union(us, uf)), soft_intersection(lcs, lcf)),
          describe);
    check(*cl.t38[2], soft_equal(complement(soft_union(ls, uf)), soft_intersection(ucs, lcf)),
          describe);
    check(*cl.t38[3], soft_equal(complement(soft_union(us, lf)), soft_intersection(lcs, ucf)),
          describe);
    check(*cl.t38[4], soft_equal(complement(soft_intersection(ls, lf)), soft_union(ucs, ucf)),
          describe);
    check(*cl.t38[5], soft_equal(complement(soft_intersection(us, uf)), soft_union(lcs, lcf)),
          describe);
    check(*cl.t38[6], soft_equal(complement(soft_intersection(ls, uf)), soft_union(ucs, lcf)),
          describe);
    check(*cl.t38[7], soft_equal(complement(soft_intersection(us, lf)), soft_union(lcs, ucf)),
          describe);
}

} // namespace

VerificationReport verify_approx_theorems(int n, int samples, std::uint64_t seed) {
    require_n(n);
    auto partitions = enumerate_partitions(n);
    const auto& u = partitions.front().universe();

    auto pool = instance_pool(u, samples, seed);
    if (n == 4) {
        auto pin = pinned_four();
        pool.push_back(pin.s);
        pool.push_back(pin.f);
    }

    ClaimSet set;
    ApproxClaims cl{
        set.add("Ex3.1"),
        set.add("Ex3.2"),
        set.add("Ex3.3"),
        set.add("Thm3.1.i.L"),
        set.add("Thm3.1.i.U"),
        set.add("Thm3.1.i.L.unrestricted", ClaimKind::Info),
        set.add("Thm3.1.ii", ClaimKind::Info),
        set.add("Thm3.2.i"),
        set.add("Thm3.2.ii", ClaimKind::Info),
        set.add("Thm3.3.L"),
        set.add("Thm3.3.U"),
        set.add("Thm3.3.L.unrestricted", ClaimKind::Info),
        set.add("Thm3.4.i"),
        set.add("Thm3.4.ii"),
        set.add("Thm3.4.iii"),
        set.add("Thm3.4.iv"),
        {&set.add("Thm3.5.i"), &set.add("Thm3.5.ii"), &set.add("Thm3.5.iii"),
         &set.add("Thm3.5.iv")},
        {&set.add("Thm3.6.i"), &set.add("Thm3.6.ii"), &set.add("Thm3.6.iii"),
         &set.add("Thm3.6.iv")},
        set.add("Thm3.7"),
        {&set.add("Thm3.8.i"), &set.add("Thm3.8.ii"), &set.add("Thm3.8.iii"),
         &set.add("Thm3.8.iv"), &set.add("Thm3.8.v"), &set.add("Thm3.8.vi"),
         &set.add("Thm3.8.vii"), &set.add("Thm3.8.viii")},
        set.add("Rem3.1"),
    };

    for (const auto& p : partitions) {
        std::vector<Instance> instances;
        instances.reserve(pool.size());
        for (const auto& s : pool) instances.push_back(make_instance(p, s));

        for (const auto& inst : instances) check_singles(cl, p, inst);
        for (std::size_t i = 0; i + 1 < instances.size(); i += 2) {
            check_pairs(cl, p, instances[i], instances[i + 1]);
            check_pairs(cl, p, instances[i + 1], instances[i]);
        }
    }

    // pinned examples on their own spaces
    {
        auto pin = pinned_four();
        SoftSet lower = lower_soft(pin.p6, pin.s);
        SoftSet upper = upper_soft(pin.p6, pin.s);
        BoundaryReport bd = boundary(pin.p6, pin.s);
        const auto& uu = pin.u;
        bool ok = lower.value(0) == uu->set_of({"a", "b"}) &&
                  lower.value(1) == uu->set_of({"c", "d"}) && lower.value(2).none() &&
                  upper.value(0).is_full() && upper.value(1).is_full() &&
                  upper.value(2) == uu->set_of({"c", "d"}) &&
                  bd.per_attribute[0].value == uu->set_of({"c", "d"}) &&
                  bd.per_attribute[1].value == uu->set_of({"a", "b"}) &&
                  bd.per_attribute[2].value == uu->set_of({"c", "d"}) && bd.total.is_full();
        check(cl.ex31, ok, [&] { return "p=" + pin.p6.format() + " s=" + pin.s.format(); });
        check(cl.ex32, roughly_soft_equal(pin.p6, pin.s, pin.f),
              [&] { return "p=" + pin.p6.format() + " f=" + pin.f.format(); });
    }
    {
        auto pin = pinned_five();
        bool ok = externally_approximates(pin.s, pin.f) &&
                  !externally_approximates(upper_soft(pin.p, pin.s), upper_soft(pin.p, pin.f));
        check(cl.ex33, ok, [&] { return "p=" + pin.p.format() + " s=" + pin.s.format() +
                                        " f=" + pin.f.format(); });
        Instance ia = make_instance(pin.p, pin.s);
        Instance ib = make_instance(pin.p, pin.f);
        check_pairs(cl, pin.p, ia, ib);
        check_pairs(cl, pin.p, ib, ia);
    }

    if (cl.rem31_found == 0) {
        ++cl.rem31.violations;
        cl.rem31.examples.push_back("expected at least one upper-external counterexample");
    } else {
        cl.rem31.examples.insert(cl.rem31.examples.begin(),
                                 "counterexamples=" + std::to_string(cl.rem31_found));
    }

    return std::move(set).report();
}

// ---- section 4 -------------------------------------------------------------

namespace {

struct MeasureCell {
    bool defined = false;
    bool tau_all_full = false; // tau(S,A) = {X}
    SpecialClass cls = SpecialClass::Ordinary;
    ApproxSums sums;
    Ratio rho_p, rho_y, rho_y_c;
};

MeasureCell measure_cell(const Partition& p, const SoftSet& s) {
    MeasureCell cell;
    cell.cls = classify(s);
    if (cell.cls == SpecialClass::EmptySoftSet || cell.cls == SpecialClass::NullSoftSet)
        return cell;
    cell.defined = true;
    cell.tau_all_full = cell.cls == SpecialClass::WholeSoftSet;
    cell.sums = approx_sums(p, s);
    cell.rho_p = accuracy_pawlak(p, s);
    cell.rho_y = accuracy_yao(p, s);
    SoftSet cs = complement(s);
    if (classify(cs) != SpecialClass::NullSoftSet) cell.rho_y_c = accuracy_yao(p, cs);
    return cell;
}

} // namespace

VerificationReport verify_measure_claims(int n, int samples, std::uint64_t seed) {
    require_n(n);
    auto partitions = enumerate_partitions(n);
    const auto& u = partitions.front().universe();

    auto pool = instance_pool(u, samples, seed);
    if (n == 4) pool.push_back(pinned_four().s);

    ClaimSet set;
    ClaimResult& t41 = set.add("Thm4.1");
    ClaimResult& t42 = set.add("Thm4.2");
    ClaimResult& c41 = set.add("Cor4.1");
    ClaimResult& t43 = set.add("Thm4.3");
    ClaimResult& c42 = set.add("Cor4.2");
    ClaimResult& c43 = set.add("Cor4.3");
    ClaimResult& p41 = set.add("Prop4.1");
    ClaimResult& p42 = set.add("Prop4.2");
    ClaimResult& p43 = set.add("Prop4.3");
    ClaimResult& p44 = set.add("Prop4.4");
    ClaimResult& p45 = set.add("Prop4.5");
    ClaimResult& r42 = set.add("Rem4.2");
    ClaimResult& tab = set.add("Table1");

    // cells[pi][si]
    std::vector<std::vector<MeasureCell>> cells(partitions.size());
    for (std::size_t pi = 0; pi < partitions.size(); ++pi) {
        cells[pi].reserve(pool.size());
        for (const auto& s : pool) cells[pi].push_back(measure_cell(partitions[pi], s));
    }

    const Ratio zero = Ratio::whole(0), one = Ratio::whole(1);
    for (std::size_t pi = 0; pi < partitions.size(); ++pi) {
        const Partition& p = partitions[pi];
        for (std::size_t si = 0; si < pool.size(); ++si) {
            const MeasureCell& cell = cells[pi][si];
            const SoftSet& s = pool[si];
            auto describe = [&] { return "p=" + p.format() + " s=" + s.format(); };
            if (!cell.defined) {
                skip(t41);
                skip(t43);
                skip(c42);
                skip(c43);
                skip(p41);
                skip(p42);
                skip(r42);
                continue;
            }

            auto in_unit = [&](const Ratio& r) { return zero <= r && r <= one; };
            check(t41,
                  in_unit(cell.rho_p) && in_unit(one_minus(cell.rho_p)) && in_unit(cell.rho_y) &&
                      in_unit(one_minus(cell.rho_y)),
                  describe);

            SoftSet lo = lower_soft(p, s), up = upper_soft(p, s);
            if (cell.rho_p == one)
                check(t43, soft_equal(lo, up), describe);
            else
                skip(t43);
            if (one_minus(cell.rho_p) == zero)
                check(c42, soft_equal(lo, up), describe);
            else
                skip(c42);
            if (cell.rho_p == zero) {
                auto tl = tau(lo);
                auto tu = tau(up);
                bool lower_null = tl.size() == 1 && tl[0].none();
                bool upper_not_null = !(tu.size() == 1 && tu[0].none());
                check(c43, lower_null && upper_not_null, describe);
            } else {
                skip(c43);
            }

            if (!cell.tau_all_full) {
                check(p41, (cell.rho_y == one) == soft_equal(lo, up), describe);
                bool all_lower_empty = true, all_upper_full = true;
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (lo.value(i).any()) all_lower_empty = false;
                    if (!up.value(i).is_full()) all_upper_full = false;
                }
                check(p42, (cell.rho_y == zero) == (all_lower_empty && all_upper_full), describe);
            } else {
                skip(p41);
                skip(p42);
            }

            if (cell.cls == SpecialClass::Ordinary)
                check(r42, cell.rho_y == cell.rho_y_c, describe);
            else
                skip(r42);
        }
    }

    // refinement monotonicity over comparable partition pairs
    for (std::size_t i = 0; i < partitions.size(); ++i) {
        for (std::size_t j = 0; j < partitions.size(); ++j) {
            if (i == j || !refines(partitions[i], partitions[j])) continue;
            for (std::size_t si = 0; si < pool.size(); ++si) {
                const MeasureCell &fine = cells[i][si], &coarse = cells[j][si];
                auto describe = [&] {
                    return "p1=" + partitions[i].format() + " p2=" + partitions[j].format() +
                           " s=" + pool[si].format();
                };
                if (!fine.defined) {
                    skip(t42);
                    skip(c41);
                    skip(p45);
                    continue;
                }
                check(t42, coarse.rho_p <= fine.rho_p, describe);
                check(c41, one_minus(fine.rho_p) <= one_minus(coarse.rho_p), describe);
                check(p45, coarse.rho_y <= fine.rho_y, describe);
            }
        }
    }

    // constructed pairs sharing M and one of L/U (same soft set, two relations)
    for (std::size_t si = 0; si < pool.size(); ++si) {
        if (!cells[0][si].defined || cells[0][si].tau_all_full) {
            skip(p43);
            skip(p44);
            continue;
        }
        for (std::size_t i = 0; i < partitions.size(); ++i) {
            for (std::size_t j = i + 1; j < partitions.size(); ++j) {
                const MeasureCell &a = cells[i][si], &b = cells[j][si];
                auto describe = [&] {
                    return "p1=" + partitions[i].format() + " p2=" + partitions[j].format() +
                           " s=" + pool[si].format();
                };
                if (a.sums.upper == b.sums.upper && a.sums.lower != b.sums.lower) {
                    bool a_smaller = a.sums.lower < b.sums.lower;
                    check(p43, a_smaller ? a.rho_y < b.rho_y : b.rho_y < a.rho_y, describe);
                }
                if (a.sums.lower == b.sums.lower && a.sums.lower != 0 &&
                    a.sums.upper != b.sums.upper) {
                    bool a_smaller = a.sums.upper < b.sums.upper;
                    check(p44, a_smaller ? b.rho_y < a.rho_y : a.rho_y < b.rho_y, describe);
                }
            }
        }
    }

    // built-in table cross-check: 58 matching cells, the two known misprints
    {
        auto discrepancies = table1_discrepancies();
        bool flags_ok = discrepancies.size() == 2 && discrepancies[0].row == 9 &&
                        discrepancies[0].column == 0 && discrepancies[1].row == 9 &&
                        discrepancies[1].column == 1 &&
                        discrepancies[0].computed == Ratio(3, 4) &&
                        discrepancies[1].computed == Ratio(29, 35);
        bool symmetry_ok = true;
        for (const auto& row : table1_report())
            if (row.rho_Y_S != row.rho_Y_CS) symmetry_ok = false;
        tab.checked += 60;
        if (!flags_ok || !symmetry_ok) {
            ++tab.violations;
            tab.examples.push_back("unexpected table discrepancy pattern");
            for (const auto& d : discrepancies)
                tab.examples.push_back("R" + std::to_string(d.row) + " col" +
                                       std::to_string(d.column) + " computed=" +
                                       d.computed.to_string());
        } else {
            tab.examples.push_back(
                "58/60 cells match published values; R9 rho_P_S=3/4, rho_Y_S=29/35 flagged");
        }
    }

    return std::move(set).report();
}

// ---- section 5 -------------------------------------------------------------

namespace {

constexpr double kInvE = 1.0 / std::numbers::e;

struct SweepSpec {
    std::function<double(double)> term; // single-theta contribution
    double arg_max;                     // attainment point
    double value_max;                   // full-entropy maximum
    int arity;                          // 1 or 2 theta arguments
};

void run_sweep(ClaimResult& c, const SweepSpec& spec) {
    const double scale = spec.arity == 2 ? 2.0 : 1.0;
    double grid_best = -1.0, grid_arg = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        double x = i / 1000.0;
        double v = scale * spec.term(x);
        ++c.checked;
        if (v > spec.value_max + 1e-9) {
            ++c.violations;
            if (c.examples.size() < kMaxExamples)
                c.examples.push_back("theta=" + format_number(x) + " value=" + format_number(v) +
                                     " exceeds closed form " + format_number(spec.value_max));
        }
        if (v > grid_best) {
            grid_best = v;
            grid_arg = x;
        }
    }
    double at_star = scale * spec.term(spec.arg_max);
    ++c.checked;
    if (std::abs(at_star - spec.value_max) > 1e-9 ||
        std::abs(grid_arg - spec.arg_max) > 1e-3 + 1e-12) {
        ++c.violations;
        if (c.examples.size() < kMaxExamples)
            c.examples.push_back("attainment mismatch: f(" + format_number(spec.arg_max) + ")=" +
                                 format_number(at_star) + " expected " +
                                 format_number(spec.value_max) + ", grid argmax " +
                                 format_number(grid_arg));
    }
}

void run_concavity(ClaimResult& c, const std::function<double(double)>& term) {
    // midpoint concavity of the single-theta contribution certifies the
    // full (separable) entropy
    for (int i = 0; i <= 100; ++i) {
        for (int j = i; j <= 100; ++j) {
            double x = i / 100.0, y = j / 100.0;
            ++c.checked;
            if (term((x + y) / 2.0) < (term(x) + term(y)) / 2.0 - 1e-9) {
                ++c.violations;
                if (c.examples.size() < kMaxExamples)
                    c.examples.push_back("midpoint concavity fails at (" + format_number(x) +
                                         "," + format_number(y) + ")");
            }
        }
    }
}

struct EntropyCell {
    bool ordinary = false;
    bool measurable = false;
    double theta_p = 0, theta_p_c = 0, theta_y = 0;
};

EntropyCell entropy_cell(const Partition& p, const SoftSet& s) {
    EntropyCell cell;
    SpecialClass cls = classify(s);
    if (cls == SpecialClass::EmptySoftSet || cls == SpecialClass::NullSoftSet) return cell;
    cell.measurable = true;
    cell.theta_p = roughness_pawlak(p, s).to_double();
    cell.theta_y = roughness_yao(p, s).to_double();
    if (cls == SpecialClass::Ordinary) {
        cell.ordinary = true;
        cell.theta_p_c = roughness_pawlak(p, complement(s)).to_double();
    }
    return cell;
}

bool interior(double x) { return x > 0.0 && x < 1.0; }

} // namespace

VerificationReport verify_entropy_claims(int n, int samples, const std::vector<double>& betas,
                                         std::uint64_t seed) {
    require_n(n);
    std::vector<Beta> bs;
    bs.reserve(betas.size());
    for (double b : betas) bs.emplace_back(b); // validates > 1
    std::vector<double> sorted_betas = betas;
    std::sort(sorted_betas.begin(), sorted_betas.end());

    auto partitions = enumerate_partitions(n);
    const auto& u = partitions.front().universe();
    auto pool = instance_pool(u, samples, seed);
    if (n == 4) pool.push_back(pinned_four().s);

    ClaimSet set;
    ClaimResult& t51i = set.add("Thm5.1.i");
    ClaimResult& t51iii = set.add("Thm5.1.iii");
    ClaimResult& t51iv = set.add("Thm5.1.iv");
    ClaimResult& t52r = set.add("Thm5.2.restricted");
    ClaimResult& t52s = set.add("Thm5.2.search", ClaimKind::Info);
    ClaimResult& t53i = set.add("Thm5.3.i");
    ClaimResult& t53iii = set.add("Thm5.3.iii");
    ClaimResult& t53iv = set.add("Thm5.3.iv");
    ClaimResult& t54s = set.add("Thm5.4.search", ClaimKind::Info);
    ClaimResult& t55 = set.add("Thm5.5");
    ClaimResult& t56i = set.add("Thm5.6.i");
    ClaimResult& t56iii = set.add("Thm5.6.iii");
    ClaimResult& t56iv = set.add("Thm5.6.iv");
    ClaimResult& t57 = set.add("Thm5.7");
    ClaimResult& t58i = set.add("Thm5.8.i");
    ClaimResult& t58iii = set.add("Thm5.8.iii");
    ClaimResult& t58iv = set.add("Thm5.8.iv");
    ClaimResult& t59r = set.add("Thm5.9.restricted");
    ClaimResult& t59s = set.add("Thm5.9.search", ClaimKind::Info);
    ClaimResult& t510i = set.add("Thm5.10.i");
    ClaimResult& t510iii = set.add("Thm5.10.iii");
    ClaimResult& t510iv = set.add("Thm5.10.iv");
    ClaimResult& t511 = set.add("Thm5.11");
    ClaimResult& t512i = set.add("Thm5.12.i");
    ClaimResult& t512iii = set.add("Thm5.12.iii");
    ClaimResult& t512iv = set.add("Thm5.12.iv");
    ClaimResult& t513 = set.add("Thm5.13");

    // sweep maxima against the closed forms (crossover at beta = e)
    run_sweep(t51i, {[](double x) { return -(std::numbers::e / 2.0) * xlog(x); }, kInvE, 1.0, 2});
    run_sweep(t58i, {[](double x) { return -xlog(x); }, kInvE, kInvE, 1});
    run_concavity(t51iv, [](double x) { return -(std::numbers::e / 2.0) * xlog(x); });
    run_concavity(t58iv, [](double x) { return -xlog(x); });
    for (const Beta& beta : bs) {
        const double b = beta.value();
        const double lnb = std::log(b);
        const bool log_peak_inside = b <= std::numbers::e;  // beta/e <= 1
        const double log_arg = log_peak_inside ? b / std::numbers::e : 1.0;
        const double log_max = log_peak_inside ? b / (std::numbers::e * lnb) : 1.0;
        const bool exp_peak_inside = b >= std::numbers::e;  // 1/ln(beta) <= 1
        const double exp_arg = exp_peak_inside ? 1.0 / lnb : 1.0;
        const double exp_max = exp_peak_inside ? b / (std::numbers::e * lnb) : 1.0;

        auto log_term1 = [b, lnb](double x) { return x - xlog(x) / lnb; };
        auto log_term2 = [log_term1](double x) { return 0.5 * log_term1(x); };
        auto exp_term1 = [b](double x) { return x * std::pow(b, 1.0 - x); };
        auto exp_term2 = [exp_term1](double x) { return 0.5 * exp_term1(x); };

        run_sweep(t53i, {log_term2, log_arg, log_max, 2});
        run_sweep(t510i, {log_term1, log_arg, log_max, 1});
        run_sweep(t56i, {exp_term2, exp_arg, exp_max, 2});
        run_sweep(t512i, {exp_term1, exp_arg, exp_max, 1});
        run_concavity(t53iv, log_term2);
        run_concavity(t510iv, log_term1);
        run_concavity(t56iv, exp_term2);
        run_concavity(t512iv, exp_term1);
    }

    // per-instance cells
    std::vector<std::vector<EntropyCell>> cells(partitions.size());
    for (std::size_t pi = 0; pi < partitions.size(); ++pi) {
        cells[pi].reserve(pool.size());
        for (const auto& s : pool) cells[pi].push_back(entropy_cell(partitions[pi], s));
    }

    const Beta beta_e(std::numbers::e);
    for (std::size_t pi = 0; pi < partitions.size(); ++pi) {
        const Partition& p = partitions[pi];
        for (std::size_t si = 0; si < pool.size(); ++si) {
            const EntropyCell& cell = cells[pi][si];
            const SoftSet& s = pool[si];
            auto describe = [&] { return "p=" + p.format() + " s=" + s.format(); };

            // symmetry under complement
            if (cell.ordinary) {
                SoftSet cs = complement(s);
                check(t51iii, std::abs(ent_1p(p, s) - ent_1p(p, cs)) <= 1e-12, describe);
                check(t53iii, std::abs(ent_2p(p, s, beta_e) - ent_2p(p, cs, beta_e)) <= 1e-12,
                      describe);
                check(t56iii, std::abs(ent_exp(p, s, beta_e) - ent_exp(p, cs, beta_e)) <= 1e-12,
                      describe);
                check(t58iii, std::abs(ent_3p(p, s) - ent_3p(p, cs)) <= 1e-12, describe);
                check(t510iii, std::abs(ent_4p(p, s, beta_e) - ent_4p(p, cs, beta_e)) <= 1e-12,
                      describe);
                check(t512iii,
                      std::abs(ent_exp_prime(p, s, beta_e) - ent_exp_prime(p, cs, beta_e)) <=
                          1e-12,
                      describe);
            } else {
                for (auto* c : {&t51iii, &t53iii, &t56iii, &t58iii, &t510iii, &t512iii}) skip(*c);
            }

            // beta monotonicity across the supplied bases
            if (!sorted_betas.empty()) {
                for (std::size_t bi = 0; bi + 1 < sorted_betas.size(); ++bi) {
                    double b1 = sorted_betas[bi], b2 = sorted_betas[bi + 1];
                    if (cell.ordinary) {
                        bool strict = interior(cell.theta_p) || interior(cell.theta_p_c);
                        double v1 = ent2p_value(cell.theta_p, cell.theta_p_c, b1);
                        double v2 = ent2p_value(cell.theta_p, cell.theta_p_c, b2);
                        check(t55, strict ? v2 < v1 : std::abs(v2 - v1) <= 1e-12, describe);
                        double w1 = ent_exp_value(cell.theta_p, cell.theta_p_c, b1);
                        double w2 = ent_exp_value(cell.theta_p, cell.theta_p_c, b2);
                        check(t57, strict ? w1 < w2 : std::abs(w2 - w1) <= 1e-12, describe);
                    } else {
                        skip(t55);
                        skip(t57);
                    }
                    if (cell.measurable) {
                        bool strict = interior(cell.theta_y);
                        double v1 = ent4p_value(cell.theta_y, b1);
                        double v2 = ent4p_value(cell.theta_y, b2);
                        check(t511, strict ? v2 < v1 : std::abs(v2 - v1) <= 1e-12, describe);
                        double w1 = ent_exp_prime_value(cell.theta_y, b1);
                        double w2 = ent_exp_prime_value(cell.theta_y, b2);
                        check(t513, strict ? w1 < w2 : std::abs(w2 - w1) <= 1e-12, describe);
                    } else {
                        skip(t511);
                        skip(t513);
                    }
                }
            }
        }
    }

    // refinement monotonicity: asserted on the region where x ln x is
    // monotone, searched unrestricted (the unconditional claims fail below
    // 1/e; findings are informational)
    for (std::size_t i = 0; i < partitions.size(); ++i) {
        for (std::size_t j = 0; j < partitions.size(); ++j) {
            if (i == j || !refines(partitions[i], partitions[j])) continue;
            for (std::size_t si = 0; si < pool.size(); ++si) {
                const EntropyCell &fine = cells[i][si], &coarse = cells[j][si];
                auto describe = [&] {
                    return "p1=" + partitions[i].format() + " p2=" + partitions[j].format() +
                           " s=" + pool[si].format();
                };
                if (fine.ordinary) {
                    double e1 = ent1p_value(fine.theta_p, fine.theta_p_c);
                    double e2 = ent1p_value(coarse.theta_p, coarse.theta_p_c);
                    if (fine.theta_p >= kInvE && fine.theta_p_c >= kInvE &&
                        coarse.theta_p >= kInvE && coarse.theta_p_c >= kInvE)
                        check(t52r, e2 <= e1 + 1e-12, describe);
                    else
                        skip(t52r);
                    ++t52s.checked;
                    if (e2 > e1 + 1e-12) {
                        ++t52s.violations;
                        if (t52s.examples.size() < kMaxExamples)
                            t52s.examples.push_back(describe());
                    }
                    for (double b : sorted_betas) {
                        ++t54s.checked;
                        if (ent2p_value(coarse.theta_p, coarse.theta_p_c, b) >
                            ent2p_value(fine.theta_p, fine.theta_p_c, b) + 1e-12) {
                            ++t54s.violations;
                            if (t54s.examples.size() < kMaxExamples)
                                t54s.examples.push_back("beta=" + format_number(b) + " " +
                                                        describe());
                        }
                    }
                } else {
                    skip(t52r);
                }
                if (fine.measurable) {
                    double e1 = ent3p_value(fine.theta_y);
                    double e2 = ent3p_value(coarse.theta_y);
                    if (fine.theta_y >= kInvE && coarse.theta_y >= kInvE)
                        check(t59r, e2 <= e1 + 1e-12, describe);
                    else
                        skip(t59r);
                    ++t59s.checked;
                    if (e2 > e1 + 1e-12) {
                        ++t59s.violations;
                        if (t59s.examples.size() < kMaxExamples)
                            t59s.examples.push_back(describe());
                    }
                } else {
                    skip(t59r);
                }
            }
        }
    }

    return std::move(set).report();
}

} // namespace softrough
