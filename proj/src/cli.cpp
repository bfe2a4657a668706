#include "obsroute/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "obsroute/constructions.hpp"
#include "obsroute/ewrp.hpp"
#include "obsroute/io.hpp"
#include "obsroute/orp.hpp"
#include "obsroute/svg.hpp"

namespace obsroute {

namespace {

constexpr int kOk = 0, kBadInput = 1, kAbsent = 2, kInvariant = 3;

std::uint64_t pick_seed(std::uint64_t flag_seed, bool flag_given) {
    if (flag_given) return flag_seed;
    if (const char* env = std::getenv("OBS_SEED")) return std::strtoull(env, nullptr, 10);
    return 42;
}

std::vector<std::vector<int>> parse_sets(const std::string& text) {
    std::vector<std::vector<int>> sets;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<int> set;
        std::stringstream items(group);
        std::string item;
        while (std::getline(items, item, ',')) {
            if (!item.empty()) set.push_back(std::stoi(item));
        }
        if (!set.empty()) sets.push_back(std::move(set));
    }
    return sets;
}

std::vector<std::pair<int, int>> parse_points(const std::string& text) {
    std::vector<std::pair<int, int>> pts;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        auto comma = group.find(',');
        if (comma == std::string::npos) throw InvalidParameters("points must be x,y;x,y");
        pts.emplace_back(std::stoi(group.substr(0, comma)), std::stoi(group.substr(comma + 1)));
    }
    return pts;
}

std::string tour_brief(const Tour& t) {
    std::ostringstream out;
    out << "length " << t.length << " vertices " << t.vertices.size();
    return out.str();
}

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

int run_solve_orp(const std::string& in, const std::string& out_path, bool validate_only,
                  const std::string& route_path) {
    InstanceFile f = instance_from_json(read_text_file(in));
    if (validate_only) {
        if (route_path.empty()) {
            std::cerr << "solve-orp --validate-only needs --route\n";
            return kBadInput;
        }
        Tour t = tour_from_json(read_text_file(route_path));
        ObservationRoute route;
        route.tour = t;
        route.observed_from = t.witness;
        if (route.observed_from.empty()) {
            auto assigned = assign_observers(t, f.instance);
            if (!assigned) {
                std::cout << "valid false (coverage)\n";
                return kAbsent;
            }
            route.observed_from = *assigned;
        }
        auto rep = validate_observation_route(route, f.instance);
        std::cout << "valid " << (rep.valid() ? "true" : "false") << " interior "
                  << rep.interior_avoidance << " coverage " << rep.coverage << " length "
                  << rep.length << "\n";
        return rep.valid() ? kOk : kAbsent;
    }
    ObservationRoute route = solve_orp(f.instance);
    auto rep = validate_observation_route(route, f.instance);
    if (!rep.valid()) return kInvariant;
    std::cout << "observation route " << tour_brief(route.tour) << " detours "
              << route.detour_log.size() << "\n";
    if (!out_path.empty()) {
        Tour with_witnesses = route.tour;
        with_witnesses.witness = route.observed_from;
        write_text_file(out_path, tour_to_json(with_witnesses, "orp-route"));
    }
    return kOk;
}

int run_compare(const std::string& in, bool with_oracle) {
    InstanceFile f = instance_from_json(read_text_file(in));
    const Instance& inst = f.instance;
    nlohmann::json report;
    report["digest"] = digest_hex(instance_digest(f));
    report["n"] = inst.n();

    double t0 = now_ms();
    Tour orp_tour;
    std::string method;
    if (inst.n() <= 8) {
        ObservationRoute route = solve_orp(inst);
        orp_tour = route.tour;
        orp_tour.witness = route.observed_from;
        method = "solve-orp";
    } else {
        orp_tour = strip_traversal_route(inst, StripMode::Tspn);
        method = "strip-observation";
    }
    ObservationRoute orp_route;
    orp_route.tour = orp_tour;
    orp_route.observed_from = orp_tour.witness;
    auto rep = validate_observation_route(orp_route, inst);
    report["orp"] = {{"length", orp_tour.length}, {"valid", rep.valid()}, {"method", method}};
    report["timing_ms"]["orp"] = now_ms() - t0;

    t0 = now_ms();
    std::vector<PolygonWithHoles> obstacle_regions;
    for (const auto& c : inst.obstacles()) {
        PolygonWithHoles r;
        r.outer = c.vertices();
        r.anchor = c.centroid();
        obstacle_regions.push_back(std::move(r));
    }
    Tour tspn = tspn_tour(RegionSet{std::move(obstacle_regions), inst.box()});
    report["tspn"] = {{"length", tspn.length}, {"zero", tspn.length == 0.0}};
    report["timing_ms"]["tspn"] = now_ms() - t0;

    t0 = now_ms();
    Tour ewrp = strip_traversal_route(inst, StripMode::Ewrp);
    report["ewrp_strip"] = {{"length", ewrp.length}};
    report["timing_ms"]["ewrp_strip"] = now_ms() - t0;

    if (with_oracle && inst.n() <= 6) {
        t0 = now_ms();
        Tour oracle = discretized_opt_orp(inst);
        report["oracle"] = {{"orp_discretized", oracle.length}};
        report["timing_ms"]["oracle"] = now_ms() - t0;
    }
    std::cout << report.dump(2) << "\n";
    return kOk;
}

int dispatch_inner(int argc, const char* const* argv) {
    CLI::App app{"observation and watchman route toolkit"};
    app.require_subcommand(1);

    // solve-orp
    std::string in_path, out_path, route_path;
    bool validate_only = false;
    auto* solve = app.add_subcommand("solve-orp", "compute an observation route");
    solve->add_option("input", in_path)->required();
    solve->add_option("--out", out_path);
    solve->add_flag("--validate-only", validate_only);
    solve->add_option("--route", route_path);

    auto* single = app.add_subcommand("single-point", "single observation point, if any");
    std::string sp_in;
    single->add_option("input", sp_in)->required();

    auto* vis = app.add_subcommand("visibility", "visibility region of one obstacle");
    std::string vis_in, vis_out;
    int vis_target = 0;
    vis->add_option("input", vis_in)->required();
    vis->add_option("--target", vis_target)->required();
    vis->add_option("--out", vis_out);

    auto* ewrp_cmd = app.add_subcommand("ewrp-convex", "best external watchman route");
    std::string ewrp_in;
    ewrp_cmd->add_option("input", ewrp_in)->required();

    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->require_subcommand(1);
    std::string gen_out = "instance.json";
    double gen_delta = 1.0, gen_eps = 0.001, gen_side = 10.0;
    int gen_kgon = 8, gen_sides = 5, gen_n = 9;
    std::string gen_points = "0,0", gen_sets = "1;2";
    int gen_sc_n = 2;
    bool gen_reduced = false;
    std::uint64_t gen_seed = 42;
    bool seed_given = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", gen_out);
        sub->add_option("--seed", gen_seed)->each([&](const std::string&) { seed_given = true; });
    };
    auto* g_six = gen->add_subcommand("six-squares");
    g_six->add_option("--delta", gen_delta);
    add_common(g_six);
    auto* g_grid = gen->add_subcommand("grid-cluster");
    g_grid->add_option("--points", gen_points);
    g_grid->add_flag("--reduced", gen_reduced);
    add_common(g_grid);
    auto* g_sc = gen->add_subcommand("set-cover");
    g_sc->add_option("--n", gen_sc_n);
    g_sc->add_option("--sets", gen_sets);
    add_common(g_sc);
    auto* g_pack = gen->add_subcommand("packing");
    g_pack->add_option("--side", gen_side);
    g_pack->add_option("--kgon", gen_kgon);
    add_common(g_pack);
    auto* g_t5 = gen->add_subcommand("obtuse-gon");
    g_t5->add_option("--sides", gen_sides);
    g_t5->add_option("--eps", gen_eps);
    add_common(g_t5);
    auto* g_sparse = gen->add_subcommand("sparse");
    g_sparse->add_option("--n", gen_n);
    add_common(g_sparse);

    auto* oracle = app.add_subcommand("oracle", "exact desk-scale optima");
    std::string oracle_kind, oracle_in;
    int oracle_grid = 12, oracle_cands = 16;
    oracle->add_option("kind", oracle_kind)->required()->check(CLI::IsMember({"orp", "tspn"}));
    oracle->add_option("input", oracle_in)->required();
    oracle->add_option("--grid", oracle_grid);
    oracle->add_option("--cands", oracle_cands);

    auto* render = app.add_subcommand("render", "render an instance to SVG");
    std::string render_in, render_route, render_out = "out.svg";
    int render_region = -1;
    render->add_option("input", render_in)->required();
    render->add_option("--route", render_route);
    render->add_option("--region", render_region);
    render->add_option("-o,--out", render_out);

    auto* compare = app.add_subcommand("compare", "route-length comparison report");
    std::string cmp_in;
    bool cmp_oracle = false;
    compare->add_option("input", cmp_in)->required();
    compare->add_flag("--with-oracle", cmp_oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    if (solve->parsed()) return run_solve_orp(in_path, out_path, validate_only, route_path);

    if (single->parsed()) {
        InstanceFile f = instance_from_json(read_text_file(sp_in));
        auto w = common_observation_point(f.instance);
        if (!w) {
            std::cout << "no single observation point\n";
            return kAbsent;
        }
        std::cout << "witness " << rat_to_string(w->x) << " " << rat_to_string(w->y) << "\n";
        return kOk;
    }

    if (vis->parsed()) {
        InstanceFile f = instance_from_json(read_text_file(vis_in));
        if (vis_target < 0 || vis_target >= f.instance.n()) {
            std::cerr << "target out of range\n";
            return kBadInput;
        }
        PolygonWithHoles region = visibility_region(vis_target, f.instance);
        std::cout << "vertices " << region.vertex_count() << " holes " << region.holes.size()
                  << "\n";
        if (!vis_out.empty()) write_text_file(vis_out, render_svg(f.instance, &region));
        return kOk;
    }

    if (ewrp_cmd->parsed()) {
        InstanceFile f = instance_from_json(read_text_file(ewrp_in));
        if (f.instance.n() != 1) {
            std::cerr << "ewrp-convex expects a single-obstacle instance\n";
            return kBadInput;
        }
        const ConvexPolygon& p = f.instance.obstacle(0);
        WatchmanRoute best = best_external_watchman(p);
        if (!coverage_check(best, p)) return kInvariant;
        std::cout << (best.kind == RouteKind::Perimeter ? "perimeter" : "doubled-chain")
                  << " length " << best.length << " perimeter " << p.perimeter() << " ratio "
                  << best.length / p.perimeter() << "\n";
        return kOk;
    }

    if (gen->parsed()) {
        std::uint64_t seed = pick_seed(gen_seed, seed_given);
        InstanceFile f{1, Instance(Box(Rat(0), Rat(0), Rat(1), Rat(1)), {}), "", {}, seed};
        if (g_six->parsed()) {
            Rat eps;
            f.instance = six_squares(gen_delta, &eps);
            f.generator = "six-squares";
            f.params["delta"] = std::to_string(gen_delta);
            f.params["eps"] = rat_to_string(eps);
        } else if (g_grid->parsed()) {
            auto art = grid_cluster_instance(parse_points(gen_points), gen_reduced);
            f.instance = art.instance;
            f.generator = "grid-cluster";
            f.params["points"] = gen_points;
            f.params["reduced"] = gen_reduced ? "true" : "false";
            f.params["w"] = rat_to_string(art.parameters.at("w"));
        } else if (g_sc->parsed()) {
            SetSystem ss{gen_sc_n, parse_sets(gen_sets)};
            auto art = setcover_instance(ss);
            f.instance = art.instance;
            f.generator = "set-cover";
            f.params["n"] = std::to_string(gen_sc_n);
            f.params["sets"] = gen_sets;
            f.params["M"] = rat_to_string(art.parameters.at("M"));
        } else if (g_pack->parsed()) {
            auto packing = maximal_disk_packing(gen_side, gen_kgon, seed);
            f.instance = packing.instance;
            f.generator = "packing";
            f.params["side"] = std::to_string(gen_side);
            f.params["kgon"] = std::to_string(gen_kgon);
        } else if (g_t5->parsed()) {
            ConvexPolygon p = make_obtuse_counterexample(gen_sides, gen_eps);
            double pad = 2.0;
            Box box(Rat(-1 - pad), Rat(-pad), Rat(1 + pad), Rat(2 + pad));
            f.instance = Instance(box, {p});
            f.generator = "obtuse-gon";
            f.params["sides"] = std::to_string(gen_sides);
            f.params["eps"] = std::to_string(gen_eps);
        } else if (g_sparse->parsed()) {
            f.instance = sparse_grid_instance(gen_n);
            f.generator = "sparse";
            f.params["n"] = std::to_string(gen_n);
        }
        write_text_file(gen_out, instance_to_json(f));
        std::cout << "wrote " << gen_out << " (n=" << f.instance.n() << ")\n";
        return kOk;
    }

    if (oracle->parsed()) {
        InstanceFile f = instance_from_json(read_text_file(oracle_in));
        if (oracle_kind == "orp") {
            Tour t = discretized_opt_orp(f.instance, oracle_grid);
            std::cout << "discretized orp optimum " << t.length << "\n";
        } else {
            std::vector<PolygonWithHoles> regions;
            for (const auto& c : f.instance.obstacles()) {
                PolygonWithHoles r;
                r.outer = c.vertices();
                r.anchor = c.centroid();
                regions.push_back(std::move(r));
            }
            Tour t = exact_small_tspn(RegionSet{std::move(regions), f.instance.box()},
                                      oracle_cands);
            std::cout << "tspn oracle " << t.length << "\n";
        }
        return kOk;
    }

    if (render->parsed()) {
        InstanceFile f = instance_from_json(read_text_file(render_in));
        std::optional<PolygonWithHoles> region;
        if (render_region >= 0) {
            if (render_region >= f.instance.n()) {
                std::cerr << "region target out of range\n";
                return kBadInput;
            }
            region = visibility_region(render_region, f.instance);
        }
        std::optional<Tour> tour;
        if (!render_route.empty()) tour = tour_from_json(read_text_file(render_route));
        write_text_file(render_out, render_svg(f.instance, region ? &*region : nullptr,
                                               tour ? &*tour : nullptr));
        std::cout << "wrote " << render_out << "\n";
        return kOk;
    }

    if (compare->parsed()) return run_compare(cmp_in, cmp_oracle);

    return kBadInput;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv) {
    try {
        return dispatch_inner(argc, argv);
    } catch (const InternalInvariantViolation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kInvariant;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
}

}  // namespace obsroute
