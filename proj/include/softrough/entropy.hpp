#pragma once

#include <optional>

#include "softrough/measures.hpp"

namespace softrough {

/// Entropy base parameter, required to exceed 1.
class Beta {
public:
    explicit Beta(double value);
    double value() const { return value_; }

private:
    double value_;
};

/// x * ln x with xlog(0) = 0. The zero case is an exact test, never an
/// underflow artifact.
double xlog(double x);

// Entropies as functions of roughness arguments in [0,1]. The soft-set
// operations below feed these with exact-ratio conversions; sweeps and
// property checks drive them directly.
double ent1p_value(double theta, double theta_c);
double ent2p_value(double theta, double theta_c, double beta);
double ent_exp_value(double theta, double theta_c, double beta);
double ent3p_value(double theta_y);
double ent4p_value(double theta_y, double beta);
double ent_exp_prime_value(double theta_y, double beta);

/// -(e/2) [t ln t + t' ln t'] over the Pawlak roughness of s and of its
/// complement. Requires an Ordinary soft set (otherwise one of the two
/// roughness inputs is undefined).
double ent_1p(const Partition& p, const SoftSet& s);
/// -(1/2) [t log_b(t/b) + t' log_b(t'/b)] over the same inputs.
double ent_2p(const Partition& p, const SoftSet& s, const Beta& beta);
/// (1/2) [t b^(1-t) + t' b^(1-t')] over the same inputs.
double ent_exp(const Partition& p, const SoftSet& s, const Beta& beta);
/// -t ln t over the axiom-style roughness of s. Requires a non-empty,
/// non-null soft set.
double ent_3p(const Partition& p, const SoftSet& s);
/// -t log_b(t/b) over the same input.
double ent_4p(const Partition& p, const SoftSet& s, const Beta& beta);
/// t b^(1-t) over the same input.
double ent_exp_prime(const Partition& p, const SoftSet& s, const Beta& beta);

struct EntropyReport {
    Ratio theta_P;
    std::optional<Ratio> theta_P_complement; // undefined when complement(s) is null
    Ratio theta_Y;
    std::optional<double> ent_1p;
    std::optional<double> ent_2p;
    std::optional<double> ent_exp;
    std::optional<double> ent_3p;
    std::optional<double> ent_4p;
    std::optional<double> ent_exp_prime;
    std::optional<double> beta;
};

enum : unsigned {
    kEnt1P = 1u << 0,
    kEnt2P = 1u << 1,
    kEntExp = 1u << 2,
    kEnt3P = 1u << 3,
    kEnt4P = 1u << 4,
    kEntExpPrime = 1u << 5,
    kEntAll = 0x3f,
};

/// Computes the requested entropies; the two-variable ones require an
/// Ordinary soft set, and any beta-parameterized selection requires beta.
EntropyReport entropy_report(const Partition& p, const SoftSet& s,
                             std::optional<Beta> beta, unsigned which = kEntAll);

} // namespace softrough
