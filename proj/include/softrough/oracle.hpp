#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "softrough/entropy.hpp"

namespace softrough {

/// All set partitions of an n-element universe (labels "a", "b", ...), in
/// restricted-growth-string order. Count equals the n-th Bell number.
/// Accepts 1 <= n <= 10.
std::vector<Partition> enumerate_partitions(int n);

/// Bell numbers B(0..n) by the binomial recurrence; the enumeration's
/// independent count oracle.
std::vector<unsigned long long> bell_numbers(int n);

/// Deterministic soft set with attributes e1..ek whose values are drawn
/// uniformly from 2^X.
///
/// Generator contract (stable across releases): a SplitMix64 stream seeded
/// with `seed` (state += 0x9e3779b97f4a7c15; z = state; z = (z ^ z>>30) *
/// 0xbf58476d1ce4e5b9; z = (z ^ z>>27) * 0x94d049bb133111eb; z ^= z>>31).
/// Attribute j (0-based) takes the next ceil(|X|/64) outputs as 64-bit
/// little-endian membership words, masked to |X| bits.
SoftSet random_soft_set(const UniversePtr& u, int k, std::uint64_t seed);

enum class ClaimKind {
    Assert, // pass iff no violations
    Info,   // counterexample search for a claim known/suspected false; never fails
};

struct ClaimResult {
    std::string id;
    ClaimKind kind = ClaimKind::Assert;
    long long checked = 0;
    long long skipped = 0;
    long long violations = 0;
    std::vector<std::string> examples; // first few serialized instances

    bool passed() const { return kind == ClaimKind::Info || violations == 0; }
};

struct VerificationReport {
    std::vector<ClaimResult> claims;

    bool passed() const;
    long long assert_violations() const;
    const ClaimResult* find(const std::string& id) const;
    /// `CLAIM <id> PASS|FAIL|INFO checked=<n> skipped=<n> violations=<n>`
    /// lines followed by indented serialized counterexamples.
    std::string to_text() const;
};

/// Machine verification of the lower/upper soft approximation laws over
/// every partition of an n-element universe, `samples` deterministic soft
/// sets per run, and the pinned desk examples. 2 <= n <= 5.
VerificationReport verify_approx_theorems(int n, int samples, std::uint64_t seed);

/// Accuracy/roughness measure laws: bounds, refinement monotonicity, the
/// exact iff-characterizations, constructed-pair strict monotonicity,
/// complement symmetry, and the built-in table cross-check. 2 <= n <= 5.
VerificationReport verify_measure_claims(int n, int samples, std::uint64_t seed);

/// Entropy laws: sweep maxima, concavity, complement symmetry,
/// beta-monotonicity across `betas`, the restricted refinement
/// monotonicity, and informational searches for the unrestricted
/// refinement claims. 2 <= n <= 5; every beta > 1.
VerificationReport verify_entropy_claims(int n, int samples, const std::vector<double>& betas,
                                         std::uint64_t seed);

} // namespace softrough
