#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "iwa/fitting.hpp"
#include "iwa/ideal.hpp"
#include "iwa/layer.hpp"

namespace iwa {

struct LevelCheck {
    unsigned level;
    bool ok;
};

struct TowerReport {
    bool strict = false;
    bool base_checked = false;
    bool base_ok = true;
    std::vector<LevelCheck> three_term;

    bool all_ok() const;
};

/**
 * Norm-coherent family of theta elements theta_0, ..., theta_N with
 * theta_n living at layer n.  The defining relation ties three consecutive
 * levels through the Hecke eigenvalue a_p:
 *
 *     project(theta_{n+1}) = a_p * theta_n - norm_map(theta_{n-1})
 *
 * for 1 <= n <= N-1, with the strict variant additionally pinning the
 * bottom step project(theta_1) = (a_p - 1) * theta_0, the unique choice
 * that makes the stabilised family norm-compatible all the way down.
 */
class ThetaTower {
public:
    ThetaTower(PadicScalar ap, std::vector<LayerElement> levels);

    const PadicContext& context() const { return ap_.context(); }
    const PadicScalar& ap() const { return ap_; }
    unsigned top_level() const { return static_cast<unsigned>(levels_.size()) - 1; }
    const LayerElement& level(unsigned n) const;

    // Same tower with one level swapped out, for tamper experiments.
    ThetaTower with_level(unsigned n, LayerElement replacement) const;

private:
    PadicScalar ap_;
    std::vector<LayerElement> levels_;
};

// Per-level verdicts on the defining relations; failures are reported, not
// thrown.  With strict = true the bottom relation is checked as well.
TowerReport validate_tower(const ThetaTower& tower, bool strict);

// Deterministic pseudorandom tower satisfying the strict relations: each
// level is the coefficient-wise lift of the value the relations force,
// plus an omega_n multiple drawn from the seeded engine (omega_n generates
// the kernel of project, so this sweeps the whole fibre).
ThetaTower generate_tower(std::uint64_t seed, PadicContext ctx, unsigned top, PadicScalar ap);

/**
 * The p-stabilised family theta_n^* built from the unit root alpha of
 * X^2 - a_p X + p:
 *
 *     theta_0^* = (1 - 1/alpha) * theta_0
 *     theta_n^* = alpha^{-n} (theta_n - alpha^{-1} norm_map(theta_{n-1}))
 *
 * On a strict tower the family is norm-compatible:
 * project(theta_{n+1}^*) = theta_n^*.
 */
class StabilizedTower {
public:
    StabilizedTower(PadicScalar alpha, std::vector<LayerElement> levels);

    const PadicContext& context() const { return alpha_.context(); }
    const PadicScalar& alpha() const { return alpha_; }
    unsigned top_level() const { return static_cast<unsigned>(levels_.size()) - 1; }
    const LayerElement& level(unsigned n) const;

private:
    PadicScalar alpha_;
    std::vector<LayerElement> levels_;
};

// Throws NonOrdinary when a_p is not a unit (no unit root exists).
StabilizedTower stabilize(const ThetaTower& tower);

struct NormCompatReport {
    std::vector<LevelCheck> checks;
    bool all_ok() const;
};

// Verifies project(level n+1) == level n for every consecutive pair.
NormCompatReport check_norm_compat(const StabilizedTower& s);

// (theta_n, norm_map(theta_{n-1})), the two-generator ideal at level n >= 1.
IdealHandle two_generator_ideal(const ThetaTower& tower, unsigned n);

// (norm_to(theta_m, n) : 0 <= m <= n), the ideal of all normed levels.
IdealHandle full_norm_ideal(const ThetaTower& tower, unsigned n);

// Certifies that the full norm ideal collapses onto the two top generators.
// Requires a tower that passes the non-strict relations; throws InvalidTower
// otherwise.  Holds for every such tower, so a false return means a defect
// in the ideal machinery rather than in the input.
bool check_norm_reduction(const ThetaTower& tower, unsigned n);

struct StabilizedComparison {
    bool inclusion_fwd = false;   // (theta_n^*) inside the two-generator ideal
    bool inclusion_bwd = false;   // two-generator ideal inside (theta_n^*)
    bool equal = false;
    bool na_holds = false;        // a_p != 1 mod p
};

// Compares the two-generator ideal against the principal ideal of the
// stabilised element.  The forward inclusion holds unconditionally; the
// equality is only guaranteed when a_p != 1 mod p, and the report says
// which side failed.  Requires a strictly valid tower.
StabilizedComparison check_stabilized_generator(const ThetaTower& tower, unsigned n);

// theta_n^* times its involution image: the level-n approximation to the
// anticyclotomic p-adic L-function.  Fixed by iota.
LayerElement lp_approx(const StabilizedTower& s, unsigned n);

// Ideal-level functional equation (theta_n^*) == (iota(theta_n^*)).  This
// is a checker, not a guarantee: synthetic towers may fail it.
bool check_functional_eq(const StabilizedTower& s, unsigned n);

// Minimal coefficient valuation; returns M for the zero element, meaning
// "at least M" at this precision.
unsigned mu_invariant(const LayerElement& a);

struct MainIdentityReport {
    bool squared_equals_fitting = false;
    bool squared_principal = false;
    std::optional<LayerElement> principal_generator;
    HowellBasis two_generator_basis;
    HowellBasis squared_basis;
    HowellBasis fitting_basis;

    bool ok() const { return squared_equals_fitting && squared_principal; }
};

// The level-n identity between the square of the two-generator ideal and
// the Fitting ideal of the given presentation, plus principality of the
// square.  Requires a strictly valid tower and a_p != 1 mod p; throws
// InvalidTower / HypothesisViolation otherwise.
MainIdentityReport verify_main_identity(const ThetaTower& tower, unsigned n, const PresentationMatrix& pres);

} // namespace iwa
