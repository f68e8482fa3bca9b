#include "conelab/chern.hpp"
#include "conelab/scenario.hpp"
#include "conelab/svg.hpp"
#include "conelab/tiling.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace conelab;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

struct ActionContext {
    ActionScenario scenario;
    Cone2 cone;
    GroupProfile profile;
};

ActionContext make_context(const std::string& file, const std::string& action) {
    ActionScenario s = load_scenario(file);
    require_valid(s);
    Cone2 cone = action == "aut" ? s.nef : s.mov;
    auto gens = action == "aut" ? s.aut_gens() : s.bir_gens();
    GroupProfile profile = classify(gens, cone, s.d);
    return {std::move(s), cone, std::move(profile)};
}

Vec2 default_seed(const ActionContext& ctx, const std::string& seed_text) {
    if (!seed_text.empty()) return parse_vec2(seed_text, ctx.scenario.d);
    Vec2 ones(QF(1), QF(1));
    if (!ctx.cone.contains(Ray(ones), true))
        throw data_error("default seed (1,1) is not interior to " + ctx.cone.str() +
                         "; pass --seed");
    return ones;
}

int cmd_validate(const std::string& file) {
    ActionScenario s = load_scenario(file);
    auto findings = validate_scenario(s);
    std::cout << findings_report(findings);
    return has_errors(findings) ? kExitValidation : kExitOk;
}

int cmd_classify(const std::string& file, const std::string& action) {
    auto ctx = make_context(file, action);
    std::cout << "action = " << action << "\n" << profile_report(ctx.profile);
    return kExitOk;
}

int cmd_domain(const std::string& file, const std::string& action, const std::string& seed) {
    auto ctx = make_context(file, action);
    auto dr = build_domain(ctx.profile, ctx.cone, default_seed(ctx, seed));
    std::cout << domain_report(dr);
    return kExitOk;
}

int cmd_tile(const std::string& file, const std::string& action, const std::string& seed,
             int depth) {
    auto ctx = make_context(file, action);
    auto dr = build_domain(ctx.profile, ctx.cone, default_seed(ctx, seed));
    auto report = verify_tiling(dr, ctx.profile, ctx.cone, depth);
    std::cout << tiling_report_text(report);
    return report.pass ? kExitOk : kExitValidation;
}

int cmd_locate(const std::string& file, const std::string& action, const std::string& seed,
               const std::string& point) {
    auto ctx = make_context(file, action);
    auto dr = build_domain(ctx.profile, ctx.cone, default_seed(ctx, seed));
    Word w = locate(dr, ctx.profile, Ray(parse_vec2(point, ctx.scenario.d)));
    std::cout << "word " << w.str() << "\n";
    return kExitOk;
}

int cmd_render(const std::string& file, const std::string& action, const std::string& seed,
               int depth, const std::string& out_path) {
    auto ctx = make_context(file, action);
    auto dr = build_domain(ctx.profile, ctx.cone, default_seed(ctx, seed));
    auto report = verify_tiling(dr, ctx.profile, ctx.cone, std::max(depth, 1));
    if (depth == 0) {
        // just the fundamental domain and its mirror tile
        report.tiles = enumerate_tiles(dr, ctx.profile, 0);
    }
    std::string svg = render_tiling_svg(report, ctx.cone);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw data_error("cannot open output file: " + out_path);
    out << svg;
    std::cout << "wrote " << out_path << " (" << report.tiles.size() << " wedges)\n";
    return kExitOk;
}

int cmd_constraints(const std::string& file) {
    ActionScenario s = load_scenario(file);
    require_valid(s);
    GroupProfile aut = classify(s.aut_gens(), s.nef, s.d);
    GroupProfile bir = classify(s.bir_gens(), s.mov, s.d);

    const GroupProfile* active = nullptr;
    const Cone2* cone = nullptr;
    std::string which;
    if (aut.is_infinite()) {
        active = &aut;
        cone = &s.nef;
        which = "automorphism";
    } else if (bir.is_infinite()) {
        active = &bir;
        cone = &s.mov;
        which = "birational";
    }

    if (!active) {
        std::cout << "no infinite action; intersection-theoretic constraints are vacuous\n";
        return kExitOk;
    }
    const QF& alpha = *active->alpha;
    std::cout << "action = " << which << "\n";
    std::cout << "alpha = " << alpha.str() << "\n";

    if (s.dimension) {
        auto forced = forced_vanishing(*s.dimension, alpha);
        std::cout << "forced_vanishing n=" << *s.dimension << " = {";
        bool first = true;
        for (int m : forced) {
            if (!first) std::cout << ",";
            std::cout << m;
            first = false;
        }
        std::cout << "}\n";
    }

    if (s.form) {
        QMat t = s.form->basis == "eigen"
                     ? QMat::diagonal(alpha, alpha.inv())
                     : in_ray_basis(*active->plus_generator, cone->r1(), cone->r2());
        SymForm f{s.form->n, std::vector<QF>(s.form->n + 1, QF(0))};
        for (const auto& [m, v] : s.form->coeffs) f.coeffs[m] = v;
        auto rep = check_form_invariance(f, t, s.form->basis == "eigen");
        std::cout << "form_invariant = " << (rep.invariant ? "true" : "false") << "\n";
        for (int m : rep.vanishing_violations)
            std::cout << "form_violation m=" << m << " (nonzero off-middle coefficient)\n";
    }

    if (s.cn1) {
        auto res = cn1_must_vanish(s.cn1->phi1, s.cn1->phi2, alpha);
        std::cout << "cn1_consistent = " << (res.consistent ? "true" : "false") << "\n";
        if (!res.consistent) std::cout << "cn1_witness = " << res.witness << "\n";
    }

    if (s.c2_positive) {
        if (!s.dimension) {
            std::cout << "c2_check = skipped (no dimension given)\n";
        } else if (*s.dimension % 2 != 0) {
            std::cout << "c2_check = skipped (odd dimension is covered by the rationality "
                         "criterion)\n";
        } else {
            auto res = c2_obstruction(*s.dimension, s.c2_positive, alpha);
            std::cout << "c2_verdict = "
                      << (res.verdict == C2Verdict::CONTRADICTION
                              ? "CONTRADICTION - infinite Aut impossible"
                              : "NO OBSTRUCTION")
                      << "\n";
            if (!res.branch.empty()) std::cout << "c2_branch = " << res.branch << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cone-action toolkit for rank-2 lattice geometries"};
    app.require_subcommand(1);

    std::string file, action = "bir", seed, point, out_path = "tiling.svg";
    int depth = 8;

    auto add_common = [&](CLI::App* cmd, bool with_action = true) {
        cmd->add_option("file", file, "scenario file")->required();
        if (with_action)
            cmd->add_option("--action", action, "which action: aut (nef cone) or bir (movable cone)")
                ->check(CLI::IsMember({"aut", "bir"}));
    };

    auto* validate = app.add_subcommand("validate", "check scenario consistency rules");
    add_common(validate, false);

    auto* classify_cmd = app.add_subcommand("classify", "classify the acting group");
    add_common(classify_cmd);

    auto* domain = app.add_subcommand("domain", "construct the fundamental domain");
    add_common(domain);
    domain->add_option("--seed", seed, "interior seed class '(a,b)'");

    auto* tile = app.add_subcommand("tile", "verify the tiling to a finite depth");
    add_common(tile);
    tile->add_option("--seed", seed, "interior seed class '(a,b)'");
    tile->add_option("--depth", depth, "word-length bound");

    auto* locate_cmd = app.add_subcommand("locate", "find the tile containing a point");
    add_common(locate_cmd);
    locate_cmd->add_option("--seed", seed, "interior seed class '(a,b)'");
    locate_cmd->add_option("--point", point, "point '(a,b)' to locate")->required();

    auto* constraints = app.add_subcommand("constraints", "intersection-theoretic checks");
    add_common(constraints, false);

    auto* render = app.add_subcommand("render", "draw the tiling as an SVG");
    add_common(render);
    render->add_option("--seed", seed, "interior seed class '(a,b)'");
    render->add_option("--depth", depth, "word-length bound");
    render->add_option("--out", out_path, "output SVG path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(file);
        if (classify_cmd->parsed()) return cmd_classify(file, action);
        if (domain->parsed()) return cmd_domain(file, action, seed);
        if (tile->parsed()) return cmd_tile(file, action, seed, depth);
        if (locate_cmd->parsed()) return cmd_locate(file, action, seed, point);
        if (constraints->parsed()) return cmd_constraints(file);
        if (render->parsed()) return cmd_render(file, action, seed, depth, out_path);
    } catch (const conelab::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
