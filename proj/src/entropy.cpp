#include "softrough/entropy.hpp"

#include <cmath>
#include <numbers>

namespace softrough {

Beta::Beta(double value) : value_(value) {
    if (!(value > 1.0 + 1e-12) || !std::isfinite(value))
        fail(Errc::InvalidBeta, "beta must exceed 1");
}

double xlog(double x) {
    if (x == 0.0) return 0.0;
    return x * std::log(x);
}

double ent1p_value(double t, double tc) {
    return -(std::numbers::e / 2.0) * (xlog(t) + xlog(tc));
}

double ent2p_value(double t, double tc, double beta) {
    return 0.5 * (t + tc) - (xlog(t) + xlog(tc)) / (2.0 * std::log(beta));
}

double ent_exp_value(double t, double tc, double beta) {
    return 0.5 * (t * std::pow(beta, 1.0 - t) + tc * std::pow(beta, 1.0 - tc));
}

double ent3p_value(double ty) { return -xlog(ty); }

double ent4p_value(double ty, double beta) { return ty - xlog(ty) / std::log(beta); }

double ent_exp_prime_value(double ty, double beta) { return ty * std::pow(beta, 1.0 - ty); }

namespace {

// Exact-ratio boundary handling: a zero ratio contributes exactly 0.
double ratio_xlog(const Ratio& r) {
    if (r.is_zero()) return 0.0;
    return xlog(r.to_double());
}

struct PawlakThetas {
    Ratio t;  // roughness of s
    Ratio tc; // roughness of complement(s)
};

PawlakThetas pawlak_thetas(const Partition& p, const SoftSet& s) {
    if (classify(s) != SpecialClass::Ordinary)
        fail(Errc::UndefinedMeasure,
             "two-variable entropies need an ordinary soft set (complement roughness undefined "
             "otherwise)");
    return {roughness_pawlak(p, s), roughness_pawlak(p, complement(s))};
}

Ratio yao_theta(const Partition& p, const SoftSet& s) { return roughness_yao(p, s); }

} // namespace

double ent_1p(const Partition& p, const SoftSet& s) {
    auto th = pawlak_thetas(p, s);
    return -(std::numbers::e / 2.0) * (ratio_xlog(th.t) + ratio_xlog(th.tc));
}

double ent_2p(const Partition& p, const SoftSet& s, const Beta& beta) {
    auto th = pawlak_thetas(p, s);
    return 0.5 * (th.t.to_double() + th.tc.to_double()) -
           (ratio_xlog(th.t) + ratio_xlog(th.tc)) / (2.0 * std::log(beta.value()));
}

double ent_exp(const Partition& p, const SoftSet& s, const Beta& beta) {
    auto th = pawlak_thetas(p, s);
    return ent_exp_value(th.t.to_double(), th.tc.to_double(), beta.value());
}

double ent_3p(const Partition& p, const SoftSet& s) { return -ratio_xlog(yao_theta(p, s)); }

double ent_4p(const Partition& p, const SoftSet& s, const Beta& beta) {
    Ratio ty = yao_theta(p, s);
    return ty.to_double() - ratio_xlog(ty) / std::log(beta.value());
}

double ent_exp_prime(const Partition& p, const SoftSet& s, const Beta& beta) {
    return ent_exp_prime_value(yao_theta(p, s).to_double(), beta.value());
}

EntropyReport entropy_report(const Partition& p, const SoftSet& s, std::optional<Beta> beta,
                             unsigned which) {
    const bool wants_two_var = which & (kEnt1P | kEnt2P | kEntExp);
    const bool wants_beta = which & (kEnt2P | kEntExp | kEnt4P | kEntExpPrime);
    if (wants_beta && !beta) fail(Errc::InvalidBeta, "selected entropies need a beta");

    EntropyReport r;
    r.theta_Y = roughness_yao(p, s);
    if (wants_two_var) {
        auto th = pawlak_thetas(p, s);
        r.theta_P = th.t;
        r.theta_P_complement = th.tc;
    } else {
        r.theta_P = roughness_pawlak(p, s);
        SoftSet cs = complement(s);
        if (classify(cs) != SpecialClass::NullSoftSet)
            r.theta_P_complement = roughness_pawlak(p, cs);
    }
    if (which & kEnt1P) r.ent_1p = ent_1p(p, s);
    if (which & kEnt2P) r.ent_2p = ent_2p(p, s, *beta);
    if (which & kEntExp) r.ent_exp = ent_exp(p, s, *beta);
    if (which & kEnt3P) r.ent_3p = ent_3p(p, s);
    if (which & kEnt4P) r.ent_4p = ent_4p(p, s, *beta);
    if (which & kEntExpPrime) r.ent_exp_prime = ent_exp_prime(p, s, *beta);
    if (beta) r.beta = beta->value();
    return r;
}

} // namespace softrough
