#include "softrough/measures.hpp"

#include <cmath>
#include <cstdio>

namespace softrough {

namespace {

void require_measurable(const SoftSet& s) {
    switch (classify(s)) {
        case SpecialClass::EmptySoftSet:
            fail(Errc::UndefinedMeasure, "empty soft set has no measure");
        case SpecialClass::NullSoftSet:
            fail(Errc::UndefinedMeasure, "null soft set has no measure (upper family is {{}})");
        default:
            break;
    }
}

bool all_values_full(const SoftSet& s) {
    for (const auto& a : s.attributes())
        if (!a.value.is_full()) return false;
    return true;
}

} // namespace

ApproxSums approx_sums(const Partition& p, const SoftSet& s) {
    ApproxSums sums;
    sums.capacity =
        static_cast<long long>(s.universe()->size()) * static_cast<long long>(s.size());
    for (const auto& a : s.attributes()) {
        sums.lower += static_cast<long long>(classical_lower(p, a.value).count());
        sums.upper += static_cast<long long>(classical_upper(p, a.value).count());
        sums.middle += static_cast<long long>(a.value.count());
    }
    return sums;
}

Ratio accuracy_pawlak(const Partition& p, const SoftSet& s) {
    require_measurable(s);
    auto sums = approx_sums(p, s);
    return Ratio(sums.lower, sums.upper);
}

Ratio roughness_pawlak(const Partition& p, const SoftSet& s) {
    return one_minus(accuracy_pawlak(p, s));
}

Ratio accuracy_yao(const Partition& p, const SoftSet& s) {
    require_measurable(s);
    auto sums = approx_sums(p, s);
    Ratio left(sums.lower, sums.middle);
    if (all_values_full(s)) // tau(S,A) = {X}
        return (left + Ratio::whole(1)) * Ratio(1, 2);
    return (left + Ratio(sums.capacity - sums.upper, sums.capacity - sums.middle)) * Ratio(1, 2);
}

Ratio roughness_yao(const Partition& p, const SoftSet& s) {
    return one_minus(accuracy_yao(p, s));
}

bool refines(const Partition& p1, const Partition& p2) {
    if (!same_universe(p1.universe(), p2.universe()))
        fail(Errc::UniverseMismatch, "partitions live over different universes");
    for (const auto& b : p1.blocks()) {
        // the candidate container is the p2 block of b's first element
        if (!b.is_subset_of(p2.block_of(b.indices().front()))) return false;
    }
    return true;
}

MeasureReport measure_report(const Partition& p, const SoftSet& s) {
    require_measurable(s);
    auto sums = approx_sums(p, s);
    MeasureReport r;
    r.L_sum = sums.lower;
    r.U_sum = sums.upper;
    r.M_sum = sums.middle;
    r.capacity = sums.capacity;
    r.rho_P = accuracy_pawlak(p, s);
    r.theta_P = one_minus(*r.rho_P);
    r.rho_Y = accuracy_yao(p, s);
    r.theta_Y = one_minus(r.rho_Y);
    return r;
}

namespace {

struct Table1Data {
    UniversePtr u;
    SoftSet s;
    std::vector<std::vector<std::vector<std::string>>> relations;
};

const Table1Data& table1_data() {
    static const Table1Data data = [] {
        auto u = build_universe({"a", "b", "c", "d"});
        SoftSet s(u, {{"a1", u->set_of({"a", "b", "d"})},
                      {"a2", u->set_of({"b", "c", "d"})},
                      {"a3", u->set_of({"c"})}});
        std::vector<std::vector<std::vector<std::string>>> rel = {
            {{"a", "b", "c", "d"}},
            {{"a"}, {"b", "c", "d"}},
            {{"b"}, {"a", "c", "d"}},
            {{"c"}, {"a", "b", "d"}},
            {{"d"}, {"a", "b", "c"}},
            {{"a", "b"}, {"c", "d"}},
            {{"a", "c"}, {"b", "d"}},
            {{"a", "d"}, {"b", "c"}},
            {{"a", "b"}, {"c"}, {"d"}},
            {{"a", "c"}, {"b"}, {"d"}},
            {{"a", "d"}, {"b"}, {"c"}},
            {{"b", "c"}, {"a"}, {"d"}},
            {{"b", "d"}, {"a"}, {"c"}},
            {{"c", "d"}, {"a"}, {"b"}},
            {{"a"}, {"b"}, {"c"}, {"d"}},
        };
        return Table1Data{u, std::move(s), std::move(rel)};
    }();
    return data;
}

std::string describe_blocks(const std::vector<std::vector<std::string>>& blocks) {
    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += ",";
        out += "{";
        for (std::size_t j = 0; j < blocks[i].size(); ++j) {
            if (j) out += ",";
            out += blocks[i][j];
        }
        out += "}";
    }
    return out;
}

} // namespace

std::vector<Table1Row> table1_report() {
    const auto& data = table1_data();
    SoftSet cs = complement(data.s);
    std::vector<Table1Row> rows;
    rows.reserve(data.relations.size());
    for (std::size_t i = 0; i < data.relations.size(); ++i) {
        Partition p = partition_from_blocks(data.u, data.relations[i]);
        rows.push_back({"R" + std::to_string(i + 1), describe_blocks(data.relations[i]),
                        accuracy_pawlak(p, data.s), accuracy_yao(p, data.s),
                        accuracy_pawlak(p, cs), accuracy_yao(p, cs)});
    }
    return rows;
}

const std::array<std::array<double, 4>, 15>& table1_published_values() {
    static const std::array<std::array<double, 4>, 15> values = {{
        {0, 0, 0, 0},
        {0.4, 0.48571, 0.25, 0.48571},
        {0.18181, 0.24285, 0.1, 0.24285},
        {0.625, 0.75714, 0.57142, 0.75714},
        {0.18181, 0.24285, 0.1, 0.24285},
        {0.4, 0.48571, 0.25, 0.48571},
        {0.4, 0.48571, 0.25, 0.48571},
        {0.4, 0.48571, 0.25, 0.48571},
        {0.66666, 0.72857, 0.66666, 0.82857},
        {0.4, 0.48571, 0.25, 0.48571},
        {0.75, 0.82857, 0.66666, 0.82857},
        {0.55555, 0.65714, 0.42857, 0.65714},
        {1, 1, 1, 1},
        {0.555555, 0.65714, 0.42857, 0.65714},
        {1, 1, 1, 1},
    }};
    return values;
}

std::vector<Table1Discrepancy> table1_discrepancies() {
    auto rows = table1_report();
    const auto& published = table1_published_values();
    std::vector<Table1Discrepancy> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Ratio cells[4] = {rows[i].rho_P_S, rows[i].rho_Y_S, rows[i].rho_P_CS,
                                rows[i].rho_Y_CS};
        for (int c = 0; c < 4; ++c) {
            if (std::abs(cells[c].to_double() - published[i][c]) > 1e-4)
                out.push_back({static_cast<int>(i + 1), c, published[i][c], cells[c]});
        }
    }
    return out;
}

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string table1_csv() {
    static const char* column_names[4] = {"rho_P_S", "rho_Y_S", "rho_P_CS", "rho_Y_CS"};
    std::string out = "relation,rho_P_S,rho_Y_S,rho_P_CS,rho_Y_CS\n";
    for (const auto& row : table1_report()) {
        out += row.relation;
        for (const Ratio& r :
             {row.rho_P_S, row.rho_Y_S, row.rho_P_CS, row.rho_Y_CS})
            out += "," + format_number(r.to_double());
        out += "\n";
    }
    for (const auto& d : table1_discrepancies()) {
        out += "# discrepancy: R" + std::to_string(d.row) + " " + column_names[d.column] +
               " computed=" + format_number(d.computed.to_double()) + " (" +
               d.computed.to_string() + ") published=" + format_number(d.published) + "\n";
    }
    return out;
}

} // namespace softrough
