#include "iwa/theta.hpp"

#include <random>

namespace iwa {

bool TowerReport::all_ok() const {
    if (base_checked && !base_ok) return false;
    for (const auto& c : three_term)
        if (!c.ok) return false;
    return true;
}

bool NormCompatReport::all_ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

ThetaTower::ThetaTower(PadicScalar ap, std::vector<LayerElement> levels)
    : ap_(ap), levels_(std::move(levels)) {
    if (!ap_.is_unit()) throw NonOrdinary();
    if (levels_.empty()) throw LevelOutOfRange();
    for (unsigned n = 0; n < levels_.size(); ++n)
        if (levels_[n].context() != ap_.context() || levels_[n].layer() != n) throw LayerMismatch();
}

const LayerElement& ThetaTower::level(unsigned n) const {
    if (n >= levels_.size()) throw LevelOutOfRange();
    return levels_[n];
}

ThetaTower ThetaTower::with_level(unsigned n, LayerElement replacement) const {
    if (n >= levels_.size()) throw LevelOutOfRange();
    std::vector<LayerElement> levels = levels_;
    levels[n] = std::move(replacement);
    return ThetaTower(ap_, std::move(levels));
}

TowerReport validate_tower(const ThetaTower& tower, bool strict) {
    TowerReport report;
    report.strict = strict;
    if (strict && tower.top_level() >= 1) {
        report.base_checked = true;
        report.base_ok =
            project(tower.level(1)) == (tower.ap() - PadicScalar(tower.context(), 1)) * tower.level(0);
    }
    for (unsigned lvl = 2; lvl <= tower.top_level(); ++lvl) {
        bool ok = project(tower.level(lvl)) ==
                  tower.ap() * tower.level(lvl - 1) - norm_map(tower.level(lvl - 2));
        report.three_term.push_back({lvl, ok});
    }
    return report;
}

ThetaTower generate_tower(std::uint64_t seed, PadicContext ctx, unsigned top, PadicScalar ap) {
    if (!ap.is_unit()) throw NonOrdinary();
    if (ap.context() != ctx) throw ContextMismatch();

    std::mt19937_64 rng(seed);
    std::vector<LayerElement> levels;
    levels.push_back(sample_element(rng, ctx, 0));

    if (top >= 1) {
        LayerElement forced = (ap - PadicScalar(ctx, 1)) * levels[0];
        levels.push_back(lift_to(forced, 1) + omega_element(ctx, 0, 1) * sample_element(rng, ctx, 1));
    }
    for (unsigned lvl = 2; lvl <= top; ++lvl) {
        LayerElement forced = ap * levels[lvl - 1] - norm_map(levels[lvl - 2]);
        levels.push_back(lift_to(forced, lvl) +
                         omega_element(ctx, lvl - 1, lvl) * sample_element(rng, ctx, lvl));
    }
    return ThetaTower(ap, std::move(levels));
}

StabilizedTower::StabilizedTower(PadicScalar alpha, std::vector<LayerElement> levels)
    : alpha_(alpha), levels_(std::move(levels)) {
    if (!alpha_.is_unit()) throw NonOrdinary();
    if (levels_.empty()) throw LevelOutOfRange();
    for (unsigned n = 0; n < levels_.size(); ++n)
        if (levels_[n].context() != alpha_.context() || levels_[n].layer() != n) throw LayerMismatch();
}

const LayerElement& StabilizedTower::level(unsigned n) const {
    if (n >= levels_.size()) throw LevelOutOfRange();
    return levels_[n];
}

StabilizedTower stabilize(const ThetaTower& tower) {
    const PadicContext& ctx = tower.context();
    PadicScalar alpha = unit_root(tower.ap());
    PadicScalar alpha_inv = inv_unit(alpha);

    std::vector<LayerElement> levels;
    levels.push_back((PadicScalar(ctx, 1) - alpha_inv) * tower.level(0));

    PadicScalar alpha_inv_n = alpha_inv;
    for (unsigned n = 1; n <= tower.top_level(); ++n) {
        LayerElement inner = tower.level(n) - alpha_inv * norm_map(tower.level(n - 1));
        levels.push_back(alpha_inv_n * inner);
        alpha_inv_n = alpha_inv_n * alpha_inv;
    }
    return StabilizedTower(alpha, std::move(levels));
}

NormCompatReport check_norm_compat(const StabilizedTower& s) {
    NormCompatReport report;
    for (unsigned n = 0; n < s.top_level(); ++n)
        report.checks.push_back({n + 1, project(s.level(n + 1)) == s.level(n)});
    return report;
}

IdealHandle two_generator_ideal(const ThetaTower& tower, unsigned n) {
    if (n < 1 || n > tower.top_level()) throw LevelOutOfRange();
    return IdealHandle(tower.context(), n, {tower.level(n), norm_map(tower.level(n - 1))});
}

IdealHandle full_norm_ideal(const ThetaTower& tower, unsigned n) {
    if (n < 1 || n > tower.top_level()) throw LevelOutOfRange();
    std::vector<LayerElement> gens;
    gens.reserve(n + 1);
    for (unsigned m = 0; m <= n; ++m) gens.push_back(norm_to(tower.level(m), n));
    return IdealHandle(tower.context(), n, std::move(gens));
}

bool check_norm_reduction(const ThetaTower& tower, unsigned n) {
    if (n < 1 || n > tower.top_level()) throw LevelOutOfRange();
    if (!validate_tower(tower, false).all_ok()) throw InvalidTower();
    return equals(two_generator_ideal(tower, n), full_norm_ideal(tower, n));
}

StabilizedComparison check_stabilized_generator(const ThetaTower& tower, unsigned n) {
    if (n < 1 || n > tower.top_level()) throw LevelOutOfRange();
    if (!validate_tower(tower, true).all_ok()) throw InvalidTower();

    StabilizedTower s = stabilize(tower);
    IdealHandle two_gen = two_generator_ideal(tower, n);
    IdealHandle stab = IdealHandle::principal(s.level(n));

    StabilizedComparison cmp;
    cmp.inclusion_fwd = contains(two_gen, s.level(n));
    cmp.inclusion_bwd = true;
    for (const auto& g : two_gen.generators())
        cmp.inclusion_bwd = cmp.inclusion_bwd && contains(stab, g);
    cmp.equal = cmp.inclusion_fwd && cmp.inclusion_bwd;
    cmp.na_holds = tower.ap().value() % tower.context().prime() != 1;
    return cmp;
}

LayerElement lp_approx(const StabilizedTower& s, unsigned n) {
    if (n > s.top_level()) throw LevelOutOfRange();
    return s.level(n) * iota(s.level(n));
}

bool check_functional_eq(const StabilizedTower& s, unsigned n) {
    if (n > s.top_level()) throw LevelOutOfRange();
    return equals(IdealHandle::principal(s.level(n)), IdealHandle::principal(iota(s.level(n))));
}

unsigned mu_invariant(const LayerElement& a) {
    unsigned best = a.context().precision();
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        unsigned v = a.coeff(i).valuation();
        if (v < best) best = v;
    }
    return best;
}

MainIdentityReport verify_main_identity(const ThetaTower& tower, unsigned n, const PresentationMatrix& pres) {
    if (n < 1 || n > tower.top_level()) throw LevelOutOfRange();
    if (!validate_tower(tower, true).all_ok()) throw InvalidTower();
    if (tower.ap().value() % tower.context().prime() == 1)
        throw HypothesisViolation("a_p is 1 mod p, the stabilised generator may not span");
    if (pres.context() != tower.context() || pres.layer() != n) throw LayerMismatch();

    IdealHandle two_gen = two_generator_ideal(tower, n);
    IdealHandle squared = square(two_gen);
    IdealHandle fitting = fitting_ideal(pres);

    MainIdentityReport report{false,
                              false,
                              std::nullopt,
                              two_gen.canonical(),
                              squared.canonical(),
                              fitting.canonical()};
    report.squared_equals_fitting = equals(squared, fitting);
    report.principal_generator = is_principal(squared);
    report.squared_principal = report.principal_generator.has_value();
    return report;
}

} // namespace iwa
