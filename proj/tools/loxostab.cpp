// loxostab: analysis and simulation front end for loxodromic Moebius maps.
// Verbs: classify | regions | simulate | escape-time | verify.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loxo/avoided.hpp"
#include "loxo/config.hpp"
#include "loxo/report.hpp"
#include "loxo/stability.hpp"
#include "loxo/svg.hpp"
#include "loxo/verify.hpp"

namespace {

using namespace loxo;

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotLoxodromic:
        case ErrorCode::LinearMap: return 2;
        case ErrorCode::StartInAvoidedRegion: return 3;
        default: return 1;
    }
}

void write_output(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) fail(ErrorCode::InvalidConfig, "cannot write " + out);
    file << text;
}

struct MapStrings {
    std::vector<std::string> map;
    std::string z0;
    std::string config_path;
    std::string rvals;
};

void add_shared_flags(CLI::App* cmd, RunConfig& config, MapStrings& raw) {
    cmd->add_option("--map", raw.map, "map coefficients a b c d ('re,im' or 'a+bi')")
        ->expected(4);
    cmd->add_option("--epsilon", config.epsilon, "perturbation bound (default: 1e-3 * eps_max)");
    cmd->add_option("--delta0", config.delta0, "dilation-side noise bound");
    cmd->add_option("--t", config.t, "avoided-region slack factor (> 1)");
    cmd->add_option("--R", config.R, "Apollonius ratio of B_R (default: 1.01 * minimum)");
    cmd->add_option("--steps", config.steps, "orbit length");
    cmd->add_option("--trials", config.trials, "Monte Carlo trial count");
    cmd->add_option("--seed", config.seed, "master seed (fixed default)");
    cmd->add_option("--out", config.out, "output path (default: stdout)");
    cmd->add_flag("--force", config.force, "skip the avoided-region start check");
    cmd->add_option("--z0", raw.z0, "simulation start point");
    cmd->add_option("--rvals", raw.rvals, "comma-separated Apollonius radii for plots");
    cmd->add_option("--config", raw.config_path, "JSON config file mirroring the flags");
}

void finish_config(RunConfig& config, const MapStrings& raw) {
    if (!raw.map.empty()) {
        config.a = parse_complex(raw.map[0]);
        config.b = parse_complex(raw.map[1]);
        config.c = parse_complex(raw.map[2]);
        config.d = parse_complex(raw.map[3]);
    }
    if (!raw.z0.empty()) config.z0 = parse_complex(raw.z0);
    if (!raw.rvals.empty()) {
        config.rvals.clear();
        std::string token;
        std::istringstream in(raw.rvals);
        while (std::getline(in, token, ',')) {
            config.rvals.push_back(parse_complex(token).real());
        }
    }
    validate_config(config);
}

void map_echo_json(JsonWriter& w, const RunConfig& config, const MoebiusMap& g) {
    w.key("map").begin_object();
    w.field("a", config.a);
    w.field("b", config.b);
    w.field("c", config.c);
    w.field("d", config.d);
    w.key("normalized").begin_object();
    w.field("a", g.a);
    w.field("b", g.b);
    w.field("c", g.c);
    w.field("d", g.d);
    w.end_object();
    w.end_object();
}

bool is_demo_map(const RunConfig& config) {
    const RunConfig demo;
    return std::abs(config.a - demo.a) <= 1e-9 && std::abs(config.b - demo.b) <= 1e-9 &&
           std::abs(config.c - demo.c) <= 1e-9 && std::abs(config.d - demo.d) <= 1e-9;
}

double trace_identity_residual(Cx k, Cx trace) {
    const Cx rt = std::sqrt(k);
    return std::abs(rt + 1.0 / rt - trace);
}

int cmd_classify(const RunConfig& config) {
    const MoebiusMap g = config.map();
    const MapClass cls = classify(g);
    std::ostringstream os;
    os << "class: " << to_string(cls) << "\n";
    os << "trace: " << format_complex(g.trace()) << "\n";
    if (!is_loxodromic(cls)) {
        write_output(config.out, os.str());
        return 2;
    }
    const LoxodromicData data = fixed_points(g);
    os << "alpha: " << format_complex(data.alpha) << "\n";
    os << "beta: " << format_complex(data.beta) << "\n";
    os << "k: " << format_complex(multiplier(data)) << "\n";
    os << "abs_k: " << fmt17(data.abs_k()) << "\n";
    write_output(config.out, os.str());
    return 0;
}

int cmd_regions(const RunConfig& config) {
    const MoebiusMap g = config.map();
    const LoxodromicData data = fixed_points(g);
    const AvoidedRegionG region = build_avoided_g(data, config.delta0, config.t);
    const RegionScene scene =
        build_region_scene(g, data, region, resolved_rvals(config, data.abs_k()));

    const std::string prefix = config.out.empty() ? "regions" : config.out;
    std::ofstream svg(prefix + ".svg", std::ios::binary);
    std::ofstream json(prefix + ".json", std::ios::binary);
    if (!svg || !json) fail(ErrorCode::InvalidConfig, "cannot write " + prefix + ".{svg,json}");
    svg << render_svg(scene);
    json << scene_json(scene);
    std::cout << prefix << ".svg\n" << prefix << ".json\n";
    return 0;
}

int cmd_simulate(const RunConfig& config) {
    const MoebiusMap g = config.map();
    const LoxodromicData data = fixed_points(g);
    const AvoidedRegionG region = build_avoided_g(data, config.delta0, config.t);
    const ExtendedComplex z0 = ExtendedComplex::finite(config.z0);
    if (!config.force && contains_g_safe(region, z0)) {
        fail(ErrorCode::StartInAvoidedRegion,
             "start " + format_complex(config.z0) + " lies in the avoided region (--force to run)");
    }
    const double R = resolved_R(config, data.abs_k());
    const double eps = resolved_epsilon(config, data, g);
    const StabilityConstants cst =
        make_constants(g, data, config.delta0, config.t, R, eps);
    const ConjugatorH h(data);
    const ExtendedComplex w0 = h.map(z0);
    const bool start_in_br = w0.is_inf() || std::abs(w0.value()) >= R;

    PerturbationSpec spec;
    spec.epsilon = eps;
    spec.seed = config.seed;
    const OrbitTrace trace = perturbed_orbit(g, z0, config.steps, spec, &region);

    std::ostringstream os;
    os << "n,a_re,a_im,b_re,b_im,deviation,bound,in_BR,in_avoided\n";
    for (int n = 0; n <= config.steps; ++n) {
        const auto& a = trace.a[static_cast<std::size_t>(n)];
        const auto& b = trace.b[static_cast<std::size_t>(n)];
        const ExtendedComplex wa = h.map(a);
        const bool in_br = wa.is_inf() || std::abs(wa.value()) >= R;
        os << n << ',' << fmt17(a.value().real()) << ',' << fmt17(a.value().imag()) << ','
           << fmt17(b.value().real()) << ',' << fmt17(b.value().imag()) << ','
           << fmt17(trace.deviations[static_cast<std::size_t>(n)]) << ','
           << fmt17(combined_bound(cst, n, start_in_br)) << ',' << (in_br ? 1 : 0) << ','
           << (contains_g_safe(region, a) ? 1 : 0) << "\n";
    }
    write_output(config.out, os.str());
    return 0;
}

int cmd_escape_time(const RunConfig& config) {
    const MoebiusMap g = config.map();
    const LoxodromicData data = fixed_points(g);
    const AvoidedRegionG region = build_avoided_g(data, config.delta0, config.t);
    const double R = resolved_R(config, data.abs_k());
    const TransitRegion transit = make_transit_region(R, region);
    const EscapeTimeBound bound = escape_time_bound(data.abs_k(), config.delta0);
    const double eps_mx = epsilon_max(data, g, region.base.delta);

    const double sup_h_prime = (data.abs_k() * R + 1.0) * (data.abs_k() * R + 1.0) /
                               std::abs(data.alpha - data.beta);
    const double eps = std::min(0.9 * eps_mx, 0.9 * config.delta0 / sup_h_prime);
    Rng rng(Rng::derive(config.seed, 3).next_u64());
    std::vector<Cx> starts;
    starts.reserve(static_cast<std::size_t>(config.trials));
    for (int i = 0; i < config.trials; ++i) starts.push_back(sample_transit_point(rng, transit));
    PerturbationSpec spec;
    spec.epsilon = eps;
    spec.seed = config.seed;
    const EscapeObservation obs =
        empirical_escape_time(g, data, transit, starts, spec, 10 * bound.n);

    JsonWriter w;
    w.begin_object();
    w.field("abs_k", data.abs_k());
    w.field("delta0", config.delta0);
    w.field("R", R);
    w.field("bound_raw", bound.raw);
    w.field("N", bound.n);
    w.field("N_sufficient", bound.n_sufficient);
    w.field("epsilon", eps);
    w.field("trials", config.trials);
    w.field("empirical_escape_step", obs.max_escape_step);
    w.field("max_w_noise", obs.max_w_noise);
    w.field("within_bound", obs.max_escape_step <= bound.n);
    w.end_object();
    write_output(config.out, w.str() + "\n");
    return obs.max_escape_step <= bound.n ? 0 : 4;
}

int cmd_verify(const RunConfig& config) {
    const MoebiusMap g = config.map();
    const VerifyOutcome outcome = run_verify(g, config);

    JsonWriter w;
    w.begin_object();
    w.field("version", kVersion);
    w.field("seed", config.seed);
    map_echo_json(w, config, g);
    w.field("class", to_string(classify(g)));
    w.field("trace", g.trace());
    w.field("alpha", outcome.data.alpha);
    w.field("beta", outcome.data.beta);
    w.field("k", outcome.data.k);
    w.field("abs_k", outcome.data.abs_k());
    w.key("constants").begin_object();
    w.field("K", outcome.constants.K);
    w.field("M", outcome.constants.M);
    w.field("N", outcome.constants.N);
    w.field("R", outcome.constants.R);
    w.field("delta", outcome.constants.delta);
    w.field("delta0", outcome.constants.delta0);
    w.field("epsilon", outcome.constants.epsilon);
    w.field("epsilon_max", outcome.eps_max);
    w.field("H_of_epsilon", outcome.constants.h_of_eps);
    w.end_object();
    w.key("suites").begin_array();
    for (const SuiteResult& s : outcome.suites) {
        w.begin_object();
        w.field("name", s.name);
        w.field("pass", s.pass);
        w.field("margin", s.margin);
        w.field("detail", s.detail);
        w.end_object();
    }
    w.end_array();
    if (is_demo_map(config)) {
        const Cx k = outcome.data.k;
        const Cx variant{std::abs(k), k.imag()};
        w.key("errata").begin_array();
        w.begin_object();
        w.field("id", "demo-multiplier-modulus-misprint");
        w.field("note",
                "demo map multiplier is k = 0.4375+1.5i with |k| = 1.5625; the variant "
                "1.5625+1.5i (modulus written as the real part) fails the trace identity "
                "sqrt(k) + 1/sqrt(k) = tr(g)");
        w.field("residual_k", trace_identity_residual(k, g.trace()));
        w.field("residual_variant", trace_identity_residual(variant, g.trace()));
        w.end_object();
        w.end_array();
    }
    w.field("all_pass", outcome.all_pass);
    w.end_object();
    write_output(config.out, w.str() + "\n");
    return outcome.all_pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"loxodromic Moebius map stability toolkit"};
    app.require_subcommand(1);

    RunConfig config;
    MapStrings raw;
    CLI::App* classify_cmd = app.add_subcommand("classify", "map class, fixed points, multiplier");
    CLI::App* regions_cmd = app.add_subcommand("regions", "SVG + JSON of the region geometry");
    CLI::App* simulate_cmd = app.add_subcommand("simulate", "CSV trace of a perturbed orbit");
    CLI::App* escape_cmd = app.add_subcommand("escape-time", "escape-time bound and empirics");
    CLI::App* verify_cmd = app.add_subcommand("verify", "run every invariance and bound suite");
    for (CLI::App* cmd : {classify_cmd, regions_cmd, simulate_cmd, escape_cmd, verify_cmd}) {
        add_shared_flags(cmd, config, raw);
    }

    // The config file seeds the defaults; explicit flags then win.
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                apply_config_file(config, argv[i + 1]);
            } catch (const Error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return exit_code_for(e.code());
            }
        }
    }

    CLI11_PARSE(app, argc, argv);

    try {
        finish_config(config, raw);
        if (classify_cmd->parsed()) return cmd_classify(config);
        if (regions_cmd->parsed()) return cmd_regions(config);
        if (simulate_cmd->parsed()) return cmd_simulate(config);
        if (escape_cmd->parsed()) return cmd_escape_time(config);
        if (verify_cmd->parsed()) return cmd_verify(config);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
