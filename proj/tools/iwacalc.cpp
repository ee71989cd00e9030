#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iwa/json_io.hpp"

using namespace iwa;
using nlohmann::json;

namespace {

// Exit contract: 0 all verdicts true, 1 some verdict false, 2 usage error,
// 3 unreadable or inconsistent data.
constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitData = 3;

constexpr const char* kCaveat = "verified in Λ_n mod p^M";

std::string yesno(bool b) { return b ? "yes" : "no"; }

bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// Flag errors surface as CLI11 validation failures so they share the usage
// exit code with unknown options.
void require_usable_parameters(std::uint64_t p, unsigned m) {
    if (!is_odd_prime(p)) throw CLI::ValidationError("--p must be an odd prime");
    if (m < 1) throw CLI::ValidationError("--M must be at least 1");
}

/**
 * Dual-channel report: the same facts accumulate as indented text lines and
 * as a JSON object, and exactly one of the two is printed.  All values are
 * integers or fixed strings, so output is byte-identical across runs with
 * equal inputs.
 */
class Report {
public:
    Report(std::string command, bool as_json) : as_json_(as_json) {
        obj_["command"] = command;
        text_ += command;
        text_ += '\n';
    }

    void context(const PadicContext& ctx, std::optional<unsigned> n,
                 std::optional<std::uint64_t> seed) {
        obj_["p"] = ctx.prime();
        obj_["M"] = ctx.precision();
        std::string line = "  context: p=" + std::to_string(ctx.prime()) +
                           " M=" + std::to_string(ctx.precision());
        if (n) {
            obj_["n"] = *n;
            line += " n=" + std::to_string(*n);
        }
        if (seed) {
            obj_["seed"] = *seed;
            line += " seed=" + std::to_string(*seed);
        } else {
            obj_["seed"] = nullptr;
            line += " seed=none";
        }
        text_ += line;
        text_ += '\n';
        obj_["caveat"] = kCaveat;
        caveat_ = std::string("  note: results are ") + kCaveat +
                  ", exact in the finite quotient and silent beyond it";
    }

    // For commands with no ambient ring; the caveat still points at the
    // precision semantics of everything downstream.
    void no_context() {
        obj_["caveat"] = kCaveat;
        caveat_ = std::string("  note: downstream ideal statements are ") + kCaveat +
                  " and carry no meaning beyond that quotient";
    }

    void line(const std::string& s) {
        text_ += "  ";
        text_ += s;
        text_ += '\n';
    }

    void field(const std::string& key, const json& value) { obj_[key] = value; }

    void verdict(const std::string& key, bool value, const std::string& label) {
        obj_[key] = value;
        line(label + ": " + yesno(value));
    }

    int finish(int code) {
        obj_["exit_code"] = code;
        if (!caveat_.empty()) {
            text_ += caveat_;
            text_ += '\n';
        }
        if (as_json_)
            std::cout << obj_.dump(2) << "\n";
        else
            std::cout << text_;
        return code;
    }

private:
    bool as_json_;
    json obj_;
    std::string text_;
    std::string caveat_;
};

json element_coeffs(const LayerElement& a) {
    json arr = json::array();
    for (std::uint64_t c : a.raw()) arr.push_back(c);
    return arr;
}

struct TowerArgs {
    std::string path;
    int level = -1;   // -1 means the top of the tower
    bool as_json = false;
};

TowerFile load_tower(const std::string& path) { return tower_from_json(load_json_file(path)); }

unsigned resolve_level(const TowerArgs& args, const ThetaTower& tower, unsigned minimum) {
    if (args.level < 0) return tower.top_level();
    unsigned n = static_cast<unsigned>(args.level);
    if (n < minimum || n > tower.top_level())
        throw CLI::ValidationError("--n must lie between " + std::to_string(minimum) +
                                   " and the top level " + std::to_string(tower.top_level()));
    return n;
}

// ---------------------------------------------------------------- commands

int run_check_hypotheses(const std::string& curve_path, const std::string& field_path,
                         std::uint64_t p, bool as_json) {
    CurveSpec curve = curve_from_json(load_json_file(curve_path));
    FieldSpec field = field_from_json(load_json_file(field_path));
    ContextReport r = check_hypotheses(curve, field, static_cast<long long>(p));

    Report rep("check-hypotheses", as_json);
    rep.no_context();
    rep.field("p", r.p);
    rep.field("label", curve.label);
    rep.field("conductor", curve.conductor);
    rep.field("D_K", field.d_k);
    rep.field("ap", r.ap);
    rep.line("curve: label=" + (curve.label.empty() ? std::string("(none)") : curve.label) +
             " N=" + std::to_string(curve.conductor) + " D_K=" + std::to_string(field.d_k) +
             " p=" + std::to_string(r.p));
    rep.line("a_p = " + std::to_string(r.ap));
    rep.verdict("ordinary", r.ordinary, "(ord) a_p is a p-adic unit");
    rep.verdict("na", r.na, "(Na) a_p is not 1 mod p");
    rep.verdict("spl", r.spl, "(spl) p splits in the field");
    rep.verdict("coprime", r.coprime, "gcd(D_K, N p) = 1");
    rep.verdict("def_ok", r.def_ok, "(def) inert part squarefree with an odd prime count");
    rep.field("n_plus", r.n_plus);
    rep.field("n_minus", r.n_minus);
    rep.line("split conductor: N+ = " + std::to_string(r.n_plus) +
             ", N- = " + std::to_string(r.n_minus));
    rep.field("im", r.im);
    rep.field("ram", r.ram);
    rep.line("(im) residual image: " + r.im);
    rep.line("(ram) ramification shape: " + r.ram);
    bool pass = r.all_checked_pass();
    rep.verdict("all_checked_pass", pass, "all decidable hypotheses hold");
    return rep.finish(pass ? kExitTrue : kExitFalse);
}

int run_gen_tower(std::uint64_t p, unsigned m, unsigned top, long long ap, std::uint64_t seed,
                  const std::string& out, bool as_json) {
    require_usable_parameters(p, m);
    std::uint64_t dimension = 1;
    for (unsigned i = 0; i < top; ++i) {
        dimension *= p;
        if (dimension > (1u << 20)) throw CLI::ValidationError("--N makes the top layer too large");
    }
    if (ap % static_cast<long long>(p) == 0)
        throw CLI::ValidationError("--ap must be a p-adic unit (ordinarity)");

    PadicContext ctx(p, m);
    ThetaTower tower = generate_tower(seed, ctx, top, PadicScalar::from_int(ctx, ap));
    save_json_file(out, tower_to_json(tower, seed));

    Report rep("gen-tower", as_json);
    rep.context(ctx, tower.top_level(), seed);
    rep.field("ap", ap);
    rep.field("out", out);
    rep.line("a_p = " + std::to_string(ap));
    rep.line("levels: 0.." + std::to_string(tower.top_level()) + ", top dimension " +
             std::to_string(dimension));
    bool ok = validate_tower(tower, true).all_ok();
    rep.verdict("valid", ok, "generated tower satisfies the strict relations");
    rep.line("wrote " + out);
    return rep.finish(ok ? kExitTrue : kExitFalse);
}

int run_validate(const TowerArgs& args, bool strict) {
    TowerFile tf = load_tower(args.path);
    TowerReport r = validate_tower(tf.tower, strict);

    Report rep("theta validate", args.as_json);
    rep.context(tf.tower.context(), tf.tower.top_level(), tf.seed);
    rep.field("strict", strict);
    rep.line(std::string("mode: ") + (strict ? "strict" : "relaxed"));
    if (r.base_checked)
        rep.verdict("base_ok", r.base_ok, "bottom relation at level 1");
    else
        rep.line("bottom relation at level 1: skipped");
    json levels = json::array();
    for (const LevelCheck& c : r.three_term) {
        levels.push_back(json{{"level", c.level}, {"ok", c.ok}});
        rep.line("three-term relation at level " + std::to_string(c.level) + ": " +
                 (c.ok ? "ok" : "violated"));
    }
    rep.field("three_term", levels);
    bool ok = r.all_ok();
    rep.verdict("valid", ok, "tower valid");
    return rep.finish(ok ? kExitTrue : kExitFalse);
}

int run_stabilize(const TowerArgs& args, const std::string& out) {
    TowerFile tf = load_tower(args.path);
    StabilizedTower s = stabilize(tf.tower);
    NormCompatReport r = check_norm_compat(s);
    if (!out.empty()) save_json_file(out, stabilized_to_json(s));

    Report rep("theta stabilize", args.as_json);
    rep.context(s.context(), s.top_level(), tf.seed);
    rep.field("alpha", s.alpha().value());
    rep.line("unit root alpha = " + std::to_string(s.alpha().value()));
    json checks = json::array();
    for (const LevelCheck& c : r.checks) {
        checks.push_back(json{{"level", c.level}, {"ok", c.ok}});
        rep.line("projection of level " + std::to_string(c.level) + " matches level " +
                 std::to_string(c.level - 1) + ": " + yesno(c.ok));
    }
    rep.field("norm_compat", checks);
    if (!out.empty()) {
        rep.field("out", out);
        rep.line("wrote " + out);
    }
    bool ok = r.all_ok();
    rep.verdict("norm_compatible", ok, "stabilised family is norm compatible");
    return rep.finish(ok ? kExitTrue : kExitFalse);
}

int run_lemma21(const TowerArgs& args) {
    TowerFile tf = load_tower(args.path);
    unsigned n = resolve_level(args, tf.tower, 1);
    bool ok = check_norm_reduction(tf.tower, n);

    Report rep("theta lemma21", args.as_json);
    rep.context(tf.tower.context(), n, tf.seed);
    rep.verdict("norm_reduction", ok,
                "ideal of all normed levels equals (theta_n, nu(theta_{n-1}))");
    return rep.finish(ok ? kExitTrue : kExitFalse);
}

int run_lemma22(const TowerArgs& args) {
    TowerFile tf = load_tower(args.path);
    unsigned n = resolve_level(args, tf.tower, 1);
    StabilizedComparison cmp = check_stabilized_generator(tf.tower, n);

    Report rep("theta lemma22", args.as_json);
    rep.context(tf.tower.context(), n, tf.seed);
    rep.field("na_holds", cmp.na_holds);
    if (cmp.na_holds)
        rep.line("(Na) a_p is not 1 mod p: holds");
    else
        rep.line("hypothesis (Na) violated: a_p = 1 mod p, equality is not promised");
    rep.verdict("inclusion_fwd", cmp.inclusion_fwd,
                "(theta_n^*) inside (theta_n, nu(theta_{n-1}))");
    rep.verdict("inclusion_bwd", cmp.inclusion_bwd,
                "(theta_n, nu(theta_{n-1})) inside (theta_n^*)");
    rep.verdict("equal", cmp.equal, "ideals equal");
    return rep.finish(cmp.equal ? kExitTrue : kExitFalse);
}

int run_fe(const TowerArgs& args) {
    TowerFile tf = load_tower(args.path);
    unsigned n = resolve_level(args, tf.tower, 0);
    StabilizedTower s = stabilize(tf.tower);
    bool ok = check_functional_eq(s, n);

    Report rep("theta fe", args.as_json);
    rep.context(s.context(), n, tf.seed);
    rep.verdict("functional_eq", ok, "(theta_n^*) equals its involution image");
    return rep.finish(ok ? kExitTrue : kExitFalse);
}

int run_lp(const TowerArgs& args, const std::string& out) {
    TowerFile tf = load_tower(args.path);
    unsigned n = resolve_level(args, tf.tower, 0);
    StabilizedTower s = stabilize(tf.tower);
    LayerElement lp = lp_approx(s, n);

    Report rep("theta lp", args.as_json);
    rep.context(s.context(), n, tf.seed);
    rep.field("coeffs", element_coeffs(lp));
    rep.line("L-approximation = " + to_string(lp));
    rep.field("mu", mu_invariant(lp));
    rep.line("mu = " + std::to_string(mu_invariant(lp)));
    bool fixed = iota(lp) == lp;
    rep.verdict("iota_fixed", fixed, "fixed by the involution");
    if (!out.empty()) {
        json j{{"p", s.context().prime()},
               {"M", s.context().precision()},
               {"n", n},
               {"coeffs", element_coeffs(lp)}};
        save_json_file(out, j);
        rep.field("out", out);
        rep.line("wrote " + out);
    }
    return rep.finish(fixed ? kExitTrue : kExitFalse);
}

int run_mu(const TowerArgs& args) {
    TowerFile tf = load_tower(args.path);
    unsigned n = resolve_level(args, tf.tower, 0);

    Report rep("theta mu", args.as_json);
    rep.context(tf.tower.context(), n, tf.seed);
    json table = json::array();
    for (unsigned k = 0; k <= tf.tower.top_level(); ++k) {
        unsigned mu = mu_invariant(tf.tower.level(k));
        table.push_back(json{{"level", k}, {"mu", mu}});
        std::string note = mu >= tf.tower.context().precision() ? " (means at least M)" : "";
        rep.line("mu(theta_" + std::to_string(k) + ") = " + std::to_string(mu) + note);
    }
    rep.field("mu_by_level", table);
    rep.field("mu", mu_invariant(tf.tower.level(n)));
    return rep.finish(kExitTrue);
}

IdealHandle load_ideal(const std::string& path) { return ideal_from_json(load_json_file(path)); }

void require_same_ring(const IdealHandle& a, const IdealHandle& b) {
    if (a.context().prime() != b.context().prime() ||
        a.context().precision() != b.context().precision() || a.layer() != b.layer())
        throw DataError("ideal files disagree on (p, M, n)");
}

int run_ideal_eq(const std::string& a_path, const std::string& b_path, bool as_json) {
    IdealHandle a = load_ideal(a_path), b = load_ideal(b_path);
    require_same_ring(a, b);
    bool ok = equals(a, b);

    Report rep("ideal eq", as_json);
    rep.context(a.context(), a.layer(), std::nullopt);
    rep.field("generators_a", a.generators().size());
    rep.field("generators_b", b.generators().size());
    rep.verdict("equal", ok, "ideals equal");
    return rep.finish(ok ? kExitTrue : kExitFalse);
}

int run_ideal_contains(const std::string& a_path, const std::string& b_path, bool as_json) {
    IdealHandle a = load_ideal(a_path), b = load_ideal(b_path);
    require_same_ring(a, b);
    bool ok = true;
    for (const LayerElement& g : b.generators()) ok = ok && contains(a, g);

    Report rep("ideal contains", as_json);
    rep.context(a.context(), a.layer(), std::nullopt);
    rep.verdict("contains", ok, "first ideal contains the second");
    return rep.finish(ok ? kExitTrue : kExitFalse);
}

int run_ideal_principal(const std::string& path, bool as_json) {
    IdealHandle ideal = load_ideal(path);
    std::optional<LayerElement> gen = is_principal(ideal);

    Report rep("ideal principal", as_json);
    rep.context(ideal.context(), ideal.layer(), std::nullopt);
    rep.field("minimal_generators",
              gen ? (gen->is_zero() ? 0 : 1) : 2);   // 2 means "at least two"
    if (gen) {
        rep.field("generator", element_coeffs(*gen));
        rep.line("generator: " + to_string(*gen));
    } else {
        rep.line("no single generator exists (needs at least two)");
    }
    rep.verdict("principal", gen.has_value(), "ideal principal");
    return rep.finish(gen ? kExitTrue : kExitFalse);
}

int run_fitting(const std::string& in, const std::string& out, bool as_json) {
    PresentationMatrix pres = presentation_from_json(load_json_file(in));
    IdealHandle fit = fitting_ideal(pres);
    if (!out.empty()) save_json_file(out, ideal_to_json(fit));

    Report rep("fitting", as_json);
    rep.context(pres.context(), pres.layer(), std::nullopt);
    rep.field("rows", pres.rows());
    rep.field("cols", pres.cols());
    rep.line("presentation: " + std::to_string(pres.rows()) + " x " + std::to_string(pres.cols()));
    rep.field("generators", fit.generators().size());
    rep.line("fitting ideal generators: " + std::to_string(fit.generators().size()));
    rep.field("log_size", fit.canonical().log_size());
    rep.line("log_p of the ideal size: " + std::to_string(fit.canonical().log_size()));
    if (!out.empty()) {
        rep.field("out", out);
        rep.line("wrote " + out);
    }
    return rep.finish(kExitTrue);
}

int run_base_change(const std::string& in, int target, const std::string& out, bool as_json) {
    PresentationMatrix pres = presentation_from_json(load_json_file(in));
    if (target < 0 || static_cast<unsigned>(target) > pres.layer())
        throw CLI::ValidationError("--to must name a layer at or below the presentation's");
    unsigned to = static_cast<unsigned>(target);
    PresentationMatrix lowered = base_change(pres, to);
    if (!out.empty()) save_json_file(out, presentation_to_json(lowered));

    bool ok = equals(fitting_ideal(lowered), project_ideal(fitting_ideal(pres), to));

    Report rep("base-change", as_json);
    rep.context(pres.context(), pres.layer(), std::nullopt);
    rep.field("to", to);
    rep.line("target layer: " + std::to_string(to));
    if (!out.empty()) {
        rep.field("out", out);
        rep.line("wrote " + out);
    }
    rep.verdict("fitting_commutes", ok,
                "fitting ideal of the lowered presentation matches the projected fitting ideal");
    return rep.finish(ok ? kExitTrue : kExitFalse);
}

int run_main_identity(const TowerArgs& args, const std::string& pres_path,
                      const std::string& emit_path) {
    TowerFile tf = load_tower(args.path);
    unsigned n = resolve_level(args, tf.tower, 1);
    PadicContext ctx = tf.tower.context();

    bool default_pres = pres_path.empty();
    std::optional<PresentationMatrix> pres;
    if (default_pres) {
        StabilizedTower s = stabilize(tf.tower);
        LayerElement g = s.level(n);
        LayerElement z = LayerElement::zero(ctx, n);
        pres.emplace(ctx, n, 2, 2, std::vector<LayerElement>{g, z, z, g});
    } else {
        pres.emplace(presentation_from_json(load_json_file(pres_path)));
    }
    if (!emit_path.empty()) save_json_file(emit_path, presentation_to_json(*pres));

    MainIdentityReport r = verify_main_identity(tf.tower, n, *pres);

    Report rep("main-identity", args.as_json);
    rep.context(ctx, n, tf.seed);
    rep.field("presentation", default_pres ? "diag(theta_n^*, theta_n^*)" : pres_path);
    rep.line(std::string("presentation: ") +
             (default_pres ? "default diag(theta_n^*, theta_n^*)" : pres_path));
    if (!emit_path.empty()) {
        rep.field("emitted", emit_path);
        rep.line("wrote " + emit_path);
    }
    rep.field("two_generator_log_size", r.two_generator_basis.log_size());
    rep.field("squared_log_size", r.squared_basis.log_size());
    rep.field("fitting_log_size", r.fitting_basis.log_size());
    rep.line("log_p sizes: two-generator " + std::to_string(r.two_generator_basis.log_size()) +
             ", squared " + std::to_string(r.squared_basis.log_size()) + ", fitting " +
             std::to_string(r.fitting_basis.log_size()));
    rep.verdict("equal", r.squared_equals_fitting,
                "squared two-generator ideal equals the fitting ideal");
    rep.verdict("principal", r.squared_principal, "squared ideal principal");
    if (r.principal_generator) {
        rep.field("generator", element_coeffs(*r.principal_generator));
        rep.line("generator: " + to_string(*r.principal_generator));
    }
    bool ok = r.ok();
    rep.field("ok", ok);
    rep.line(ok ? "verdict: equal, principal" : "verdict: mismatch");
    return rep.finish(ok ? kExitTrue : kExitFalse);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"calculator for finite-layer Iwasawa algebras and theta towers"};
    app.require_subcommand(1);
    int code = 0;

    // ---- check-hypotheses
    {
        auto opts = std::make_shared<std::tuple<std::string, std::string, std::uint64_t, bool>>();
        auto* cmd = app.add_subcommand("check-hypotheses",
                                       "evaluate the running hypotheses for (curve, field, p)");
        cmd->add_option("--curve", std::get<0>(*opts), "curve JSON file")->required();
        cmd->add_option("--field", std::get<1>(*opts), "field JSON file")->required();
        cmd->add_option("--p", std::get<2>(*opts), "odd prime")->required();
        cmd->add_flag("--json", std::get<3>(*opts), "JSON report");
        cmd->callback([opts, &code] {
            if (!is_odd_prime(std::get<2>(*opts)))
                throw CLI::ValidationError("--p must be an odd prime");
            code = run_check_hypotheses(std::get<0>(*opts), std::get<1>(*opts), std::get<2>(*opts),
                                        std::get<3>(*opts));
        });
    }

    // ---- gen-tower
    {
        struct Opts {
            std::uint64_t p = 0;
            unsigned m = 0;
            unsigned top = 0;
            long long ap = 0;
            std::uint64_t seed = 0;
            std::string out = "tower.json";
            bool as_json = false;
        };
        auto opts = std::make_shared<Opts>();
        auto* cmd = app.add_subcommand("gen-tower", "write a seeded tower satisfying the relations");
        cmd->add_option("--p", opts->p, "odd prime")->required();
        cmd->add_option("--M", opts->m, "precision exponent")->required();
        cmd->add_option("--N", opts->top, "top level")->required();
        cmd->add_option("--ap", opts->ap, "Hecke eigenvalue at p")->required();
        cmd->add_option("--seed", opts->seed, "deterministic seed");
        cmd->add_option("--out", opts->out, "output path (default tower.json)");
        cmd->add_flag("--json", opts->as_json, "JSON report");
        cmd->callback([opts, &code] {
            code = run_gen_tower(opts->p, opts->m, opts->top, opts->ap, opts->seed, opts->out,
                                 opts->as_json);
        });
    }

    // ---- theta family
    {
        auto* theta = app.add_subcommand("theta", "operations on theta towers");
        theta->require_subcommand(1);

        auto add_tower_args = [](CLI::App* cmd, std::shared_ptr<TowerArgs> args, bool with_level) {
            cmd->add_option("--in", args->path, "tower JSON file")->required();
            if (with_level) cmd->add_option("--n", args->level, "level (default: top)");
            cmd->add_flag("--json", args->as_json, "JSON report");
        };

        {
            auto args = std::make_shared<TowerArgs>();
            auto strict = std::make_shared<bool>(false);
            auto* cmd = theta->add_subcommand("validate", "check the three-term relations");
            add_tower_args(cmd, args, false);
            cmd->add_flag("--strict", *strict, "also require the bottom relation");
            cmd->callback([args, strict, &code] { code = run_validate(*args, *strict); });
        }
        {
            auto args = std::make_shared<TowerArgs>();
            auto out = std::make_shared<std::string>();
            auto* cmd = theta->add_subcommand("stabilize", "p-stabilise and check norm compatibility");
            add_tower_args(cmd, args, false);
            cmd->add_option("--out", *out, "write the stabilised tower here");
            cmd->callback([args, out, &code] { code = run_stabilize(*args, *out); });
        }
        {
            auto args = std::make_shared<TowerArgs>();
            auto* cmd = theta->add_subcommand(
                "lemma21", "norm ideal collapses to the two top generators");
            add_tower_args(cmd, args, true);
            cmd->callback([args, &code] { code = run_lemma21(*args); });
        }
        {
            auto args = std::make_shared<TowerArgs>();
            auto* cmd = theta->add_subcommand(
                "lemma22", "two-generator ideal against the stabilised principal ideal");
            add_tower_args(cmd, args, true);
            cmd->callback([args, &code] { code = run_lemma22(*args); });
        }
        {
            auto args = std::make_shared<TowerArgs>();
            auto* cmd = theta->add_subcommand("fe", "ideal functional equation under the involution");
            add_tower_args(cmd, args, true);
            cmd->callback([args, &code] { code = run_fe(*args); });
        }
        {
            auto args = std::make_shared<TowerArgs>();
            auto out = std::make_shared<std::string>();
            auto* cmd = theta->add_subcommand("lp", "L-function approximation at a level");
            add_tower_args(cmd, args, true);
            cmd->add_option("--out", *out, "write the element here");
            cmd->callback([args, out, &code] { code = run_lp(*args, *out); });
        }
        {
            auto args = std::make_shared<TowerArgs>();
            auto* cmd = theta->add_subcommand("mu", "mu-invariants of the tower levels");
            add_tower_args(cmd, args, true);
            cmd->callback([args, &code] { code = run_mu(*args); });
        }
    }

    // ---- ideal family
    {
        auto* ideal = app.add_subcommand("ideal", "ideal comparisons");
        ideal->require_subcommand(1);

        {
            auto a = std::make_shared<std::string>();
            auto b = std::make_shared<std::string>();
            auto as_json = std::make_shared<bool>(false);
            auto* cmd = ideal->add_subcommand("eq", "decide equality of two ideals");
            cmd->add_option("--a", *a, "first ideal JSON file")->required();
            cmd->add_option("--b", *b, "second ideal JSON file")->required();
            cmd->add_flag("--json", *as_json, "JSON report");
            cmd->callback([a, b, as_json, &code] { code = run_ideal_eq(*a, *b, *as_json); });
        }
        {
            auto a = std::make_shared<std::string>();
            auto b = std::make_shared<std::string>();
            auto as_json = std::make_shared<bool>(false);
            auto* cmd = ideal->add_subcommand("contains", "decide containment of the second in the first");
            cmd->add_option("--a", *a, "containing ideal JSON file")->required();
            cmd->add_option("--b", *b, "contained ideal JSON file")->required();
            cmd->add_flag("--json", *as_json, "JSON report");
            cmd->callback([a, b, as_json, &code] { code = run_ideal_contains(*a, *b, *as_json); });
        }
        {
            auto in = std::make_shared<std::string>();
            auto as_json = std::make_shared<bool>(false);
            auto* cmd = ideal->add_subcommand("principal", "decide principality, print a generator");
            cmd->add_option("--in", *in, "ideal JSON file")->required();
            cmd->add_flag("--json", *as_json, "JSON report");
            cmd->callback([in, as_json, &code] { code = run_ideal_principal(*in, *as_json); });
        }
    }

    // ---- fitting
    {
        auto in = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        auto* cmd = app.add_subcommand("fitting", "initial fitting ideal of a presentation");
        cmd->add_option("--in", *in, "presentation JSON file")->required();
        cmd->add_option("--out", *out, "write the ideal here");
        cmd->add_flag("--json", *as_json, "JSON report");
        cmd->callback([in, out, as_json, &code] { code = run_fitting(*in, *out, *as_json); });
    }

    // ---- base-change
    {
        auto in = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto to = std::make_shared<int>(-1);
        auto as_json = std::make_shared<bool>(false);
        auto* cmd = app.add_subcommand("base-change",
                                       "project a presentation down and check fitting compatibility");
        cmd->add_option("--in", *in, "presentation JSON file")->required();
        cmd->add_option("--to", *to, "target layer")->required();
        cmd->add_option("--out", *out, "write the lowered presentation here");
        cmd->add_flag("--json", *as_json, "JSON report");
        cmd->callback([in, to, out, as_json, &code] {
            code = run_base_change(*in, *to, *out, *as_json);
        });
    }

    // ---- main-identity
    {
        auto args = std::make_shared<TowerArgs>();
        auto pres = std::make_shared<std::string>();
        auto emit = std::make_shared<std::string>();
        auto* cmd = app.add_subcommand(
            "main-identity", "squared two-generator ideal against a presentation's fitting ideal");
        cmd->add_option("--tower", args->path, "tower JSON file")->required();
        cmd->add_option("--n", args->level, "level (default: top)");
        cmd->add_option("--presentation", *pres, "presentation JSON file (default: diagonal)");
        cmd->add_option("--emit-presentation", *emit, "write the presentation used");
        cmd->add_flag("--json", args->as_json, "JSON report");
        cmd->callback([args, pres, emit, &code] { code = run_main_identity(*args, *pres, *emit); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return code;
}
