#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "umbral/oscillator.hpp"

namespace umbral {

/// Deterministic PRNG behind all verification suites. mt19937_64 output is
/// fully specified by the standard; bounds use plain modulo reduction so the
/// stream is reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

/// Shared random polynomial contract: up to 8 terms; per term the coefficient
/// has numerator uniform in [-9,9] without 0 and denominator uniform in
/// {1,2,3}, the blade is uniform over all 2^n blades, and the multi-index
/// spreads a uniform total degree in 0..max_degree over the coordinates.
CliffPoly random_poly(Rng& rng, int n, int max_degree);

enum class Suite { heisenberg, dirac_euler, sl2, osp };
enum class Model { direct, gauge };

const char* suite_name(Suite s);
const char* model_name(Model m);

struct IdentityCheck {
    std::string name;
    bool passed = true;
    bool informational = false; // documentation entries, ignored by all_passed
    long trials = 0;
    std::string witness;  // input polynomial of the first failure
    std::string residual; // lhs - rhs of the first failure
};

struct VerifyReport {
    std::vector<IdentityCheck> checks;
    bool all_passed() const;
};

/// Checks the suite's operator identities exactly on `trials` seeded random
/// polynomials of degree <= max_degree. Failures are recorded, not thrown.
/// `model` matters for sl2/osp only.
VerifyReport verify_relations(const UmbralContext& ctx, Suite suite, Model model, int max_degree,
                              int trials, std::uint64_t seed);

} // namespace umbral
