#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "softrough/approx.hpp"

namespace softrough {

/// Sum over attributes of |L|, |U|, |S(a)|, plus capacity |X||A|.
struct ApproxSums {
    long long lower = 0;
    long long upper = 0;
    long long middle = 0;
    long long capacity = 0;
};

ApproxSums approx_sums(const Partition& p, const SoftSet& s);

/// Pawlak-style accuracy: sum|L(a)| / sum|U(a)|. Undefined for empty and
/// null soft sets (the upper sum would be zero).
Ratio accuracy_pawlak(const Partition& p, const SoftSet& s);
Ratio roughness_pawlak(const Partition& p, const SoftSet& s);

/// Axiom-style accuracy: (L/M + (C-U)/(C-M)) / 2, with the all-X branch
/// collapsing to (L/M + 1) / 2. Undefined for empty and null soft sets.
Ratio accuracy_yao(const Partition& p, const SoftSet& s);
Ratio roughness_yao(const Partition& p, const SoftSet& s);

/// Every block of p1 lies inside some block of p2 (p1 is at least as fine).
bool refines(const Partition& p1, const Partition& p2);

struct MeasureReport {
    long long L_sum = 0;
    long long U_sum = 0;
    long long M_sum = 0;
    long long capacity = 0;
    std::optional<Ratio> rho_P;
    std::optional<Ratio> theta_P;
    Ratio rho_Y;
    Ratio theta_Y;
};

MeasureReport measure_report(const Partition& p, const SoftSet& s);

/// One row of the built-in 15-relation accuracy table: the four measures of
/// the fixed soft set and of its complement under one equivalence relation.
struct Table1Row {
    std::string relation;  // "R1" .. "R15"
    std::string classes;   // "{a,b},{c,d}" style description
    Ratio rho_P_S;
    Ratio rho_Y_S;
    Ratio rho_P_CS;
    Ratio rho_Y_CS;
};

/// The pinned X={a,b,c,d}, S(a1)={a,b,d}, S(a2)={b,c,d}, S(a3)={c} instance
/// evaluated over the fifteen equivalence relations, in the published row
/// order.
std::vector<Table1Row> table1_report();

/// Published reference values for the same table (row-major; columns
/// rho_P_S, rho_Y_S, rho_P_CS, rho_Y_CS). Two cells of row R9 are known
/// misprints; see table1_known_discrepancies().
const std::array<std::array<double, 4>, 15>& table1_published_values();

struct Table1Discrepancy {
    int row;          // 1-based row index
    int column;       // 0-based column into the four measure columns
    double published;
    Ratio computed;
};

/// Cells where the computed value differs from the published one by more
/// than 1e-4.
std::vector<Table1Discrepancy> table1_discrepancies();

/// CSV with header `relation,rho_P_S,rho_Y_S,rho_P_CS,rho_Y_CS`, 6
/// significant digits, followed by `# discrepancy ...` comment lines for
/// flagged cells.
std::string table1_csv();

/// %.6g formatting used by every numeric surface.
std::string format_number(double x);

} // namespace softrough
