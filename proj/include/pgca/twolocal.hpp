#pragma once

#include "pgca/derivation.hpp"
#include "pgca/element.hpp"
#include "pgca/report.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pgca {

/// Finite restriction of a 2-local derivation: point -> claimed value.
class TwoLocalInstance {
  public:
    struct Entry {
        Element point;
        Element value;

        friend bool operator==(const Entry &, const Entry &) = default;
    };

    /// Points must be distinct, nonzero, plain-basis and inside the interior;
    /// violations throw SchemaError naming the offending /table entry.
    TwoLocalInstance(Window window, std::vector<Entry> table);

    const Window &window() const noexcept { return window_; }
    const std::vector<Entry> &table() const noexcept { return table_; }
    /// Value claimed at `point`, if tabulated.
    std::optional<Element> value_at(const Element &point) const;

    /// The table of a genuine derivation on the given points.
    static TwoLocalInstance induced_by(const Derivation &d, const std::vector<Element> &points, Window window);

    /// Every value multiplied by k (points unchanged).
    TwoLocalInstance scaled_values(const GaussianRational &k) const;

    friend bool operator==(const TwoLocalInstance &, const TwoLocalInstance &) = default;

  private:
    Window window_;
    std::vector<Entry> table_;
};

/// The three points that pin down a derivation: L_0, L_1, I_0 + J_0.
std::vector<Element> anchor_points();

/// Affine space of derivations agreeing with a 2-local map at two points.
struct WitnessSpace {
    Derivation particular;
    std::vector<Derivation> homogeneous_basis;
};

/// {ad(w) + lambda D, w window-supported : d(x) = vx, d(y) = vy}.
/// x and y must lie in the interior (WindowTooSmall); InfeasibleWitness when empty.
WitnessSpace witness_solve(const Element &x, const Element &vx, const Element &y, const Element &vy,
                           const Window &w);

/// False iff two proportional points y = k x carry values with value(y) != k value(x).
bool validate_homogeneity(const TwoLocalInstance &inst);

/// Builds the derivation delta_1 + mu ad(H_0) + nu D from the table, where
/// delta_1 is the canonical witness on {L_0, L_1}, and checks it against
/// every table point.
///
/// Throws MissingAnchor, InfeasibleWitness, NotInSpan (the I_0 + J_0
/// residual leaves span{I_0, J_0}) or TableMismatch (subject = failing point).
Derivation extract_derivation(const TwoLocalInstance &inst);

/// Same procedure with a caller-chosen first witness, which must agree with
/// the table at L_0 and L_1 (InfeasibleWitness otherwise).
Derivation extract_derivation(const TwoLocalInstance &inst, const Derivation &first_witness);

// Replays of the vanishing argument. Each returns a passing report or throws ReplayFailed /
// ProbeSetTooSmall carrying the offending vector; WindowTooSmall when the
// inputs do not fit the window.

/// Annihilator of L_i is span{ad L_i, ad H_0, ad I_i, ad J_i, D}.
Report replay_annihilator_of_l(std::int64_t i, const Window &w);
/// Annihilator of I_0 + J_0 is span{ad L_0, ad I_k, ad J_k}; no D component.
Report replay_annihilator_of_i0j0(const Window &w);
/// Values at L_i admissible from both annihilators of L_0 and L_1 meet only in 0.
Report replay_vanishing_on_l(std::int64_t i, const Window &w);
/// Values at x admissible from every annihilator of L_i (i in probes) form
/// exactly span{sum(gamma I - delta J), sum(gamma I + delta J)}.
Report replay_value_family(const Element &x, std::optional<std::vector<std::int64_t>> probes, const Window &w);
/// L_p + I_2p + J_2p has forced value 0 and a three-dimensional annihilator.
Report replay_probe_annihilator(std::int64_t p, const Window &w);
/// With L_i and I_0 + J_0 killed, the only admissible value at x is 0.
Report replay_vanishing_everywhere(const Element &x, std::optional<std::vector<std::int64_t>> probes,
                                   const Window &w);

/// Probe indices standing in for "enough different, large enough i": three
/// indices of absolute value > 2 (1 + R), R the largest |degree| in x, spaced
/// so that shifted supports never overlap.
std::vector<std::int64_t> default_probes(const Element &x);

/// span{sum(gamma_t I_t - delta_t J_t), sum(gamma_t I_t + delta_t J_t)}, as a canonical basis.
std::vector<Element> value_family(const Element &x);

/// Case label of x in the vanishing argument: "alpha-nonzero",
/// "beta-off-zero", "beta-at-zero" or "alpha-beta-zero".
std::string vanishing_case(const Element &x);

} // namespace pgca
