#pragma once

#include "pgca/derivation.hpp"
#include "pgca/element.hpp"
#include "pgca/report.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace pgca {

/// Seeded generator of random scalars and sparse elements. Draws use only
/// the raw 64-bit engine output so a seed reproduces on every platform.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin() { return uniform(0, 1) == 1; }

    /// Small Gaussian rational (numerators in [-5, 5], denominators in [1, 3]).
    GaussianRational scalar(bool allow_zero = false);
    /// 1..max_terms random terms with degrees in [-radius, radius].
    Element element(Basis basis, std::int64_t radius, int max_terms = 4);
    /// Like element(), but never zero.
    Element nonzero_element(Basis basis, std::int64_t radius, int max_terms = 4);
    Derivation derivation(std::int64_t radius, int max_terms = 4);

  private:
    std::mt19937_64 engine_;
};

/// One fuzz case: elements plus a scalar slot (used as the D coefficient).
struct FuzzSample {
    std::vector<Element> elements;
    GaussianRational scalar;
};

using FuzzProperty = std::function<bool(const FuzzSample &)>;
using FuzzGenerator = std::function<FuzzSample(Sampler &)>;

/// Greedy shrink: drops single terms, then zeroes/unit-izes the scalar and
/// coefficients, as long as the property keeps failing.
FuzzSample shrink_counterexample(const FuzzProperty &property, FuzzSample failing);

struct FuzzOutcome {
    std::int64_t samples_run = 0;
    std::optional<FuzzSample> counterexample;
    std::int64_t failing_sample = -1;
};

/// Runs `samples` cases; stops and shrinks at the first failure.
FuzzOutcome fuzz(const FuzzProperty &property, const FuzzGenerator &generate, std::int64_t samples,
                 std::uint64_t seed);

enum class FuzzTarget { Jacobi, Isomorphism, Leibniz };

/// Parses "jacobi" | "isomorphism" | "leibniz"; nullopt otherwise.
std::optional<FuzzTarget> parse_fuzz_target(const std::string &name);

/// Built-in campaigns: Jacobi + antisymmetry (both bases), basis-change
/// isomorphism + round trip, Leibniz for random ad(w) + lambda D.
Report run_fuzz(FuzzTarget target, std::int64_t radius, std::int64_t samples, std::uint64_t seed);

} // namespace pgca
