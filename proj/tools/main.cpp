// Command-line front end: construct designs, profile resolutions, build
// caching schemes, verify delivery plans, and export scheme comparisons.
//
// Exit codes: 0 success (verify: plan decodable), 1 verification failure,
// 2 invalid input, 3 unsupported parameters (no cross intersection number
// at the requested access degree).

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crdcache/construct.hpp"
#include "crdcache/design.hpp"
#include "crdcache/errors.hpp"
#include "crdcache/json_io.hpp"
#include "crdcache/metrics.hpp"
#include "crdcache/random.hpp"
#include "crdcache/scheme.hpp"
#include "crdcache/verify.hpp"

namespace {

using namespace crdcache;

int exit_code_for(Errc code) {
    switch (code) {
    case Errc::access_degree_unsupported:
    case Errc::z_out_of_range:
        return 3;
    default:
        return 2;
    }
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_text_file(out_path, content);
    }
}

struct DesignInput {
    std::string file;
    int q = 0, m = 0, t = 1;

    bool from_file() const { return !file.empty(); }

    // Loads or constructs the resolution. When the input is a file without
    // classes, searches for the canonical resolution.
    struct Loaded {
        Resolution res;
        std::optional<ConstructionParams> qary;
        std::string origin; // "given" | "derived" | "constructed"
    };

    Loaded load() const {
        if (from_file()) {
            const DesignDoc doc = design_from_json(read_json_file(file));
            if (doc.classes) {
                return {validate_resolution(doc.design, *doc.classes), doc.qary, "given"};
            }
            auto res = find_resolution(doc.design);
            if (!res) {
                fail(Errc::invalid_params, file + ": design has no resolution");
            }
            return {std::move(*res), doc.qary, "derived"};
        }
        const ConstructionParams params{q, m, t};
        return {construct(params), params, "constructed"};
    }
};

int cmd_construct(int q, int m, int t, const std::string& out_path) {
    const ConstructionParams params{q, m, t};
    const Resolution res = construct(params);
    emit(dump_json(resolution_to_json(res, params)), out_path);
    return 0;
}

int cmd_profile(const std::string& design_file, const std::string& out_path) {
    const DesignDoc doc = design_from_json(read_json_file(design_file));
    Json j;
    std::string origin;
    std::optional<Resolution> res;
    if (doc.classes) {
        res = validate_resolution(doc.design, *doc.classes);
        origin = "given";
    } else if (auto found = find_resolution(doc.design)) {
        res = std::move(*found);
        origin = "derived";
    }
    if (!res) {
        j["v"] = doc.design.v;
        j["b"] = doc.design.b();
        j["k"] = doc.design.k;
        j["resolvable"] = false;
        j["mu"] = Json::object();
        j["is_crd"] = false;
        j["is_maximal"] = false;
        j["maximal_point_count"] = {{"applicable", false}, {"holds", false}};
        j["resolution"] = "none";
    } else {
        j = profile_to_json(*res, crd_profile(*res), check_maximal_point_count(*res), origin);
    }
    emit(dump_json(j), out_path);
    return 0;
}

int cmd_scheme(const DesignInput& input, int z, int files, std::uint64_t seed,
               const std::string& out_path) {
    const DesignInput::Loaded loaded = input.load();
    const Topology topo = build_topology(loaded.res, z);
    const int N = files > 0 ? files : topo.K();
    const DemandVector demands = make_demands(topo, sample_demands(topo.K(), N, seed), N);
    const TransmissionPlan plan = generate_plan(topo, demands);

    Json j = plan_to_json(topo, demands, plan, loaded.qary);
    j["seed"] = seed;
    emit(dump_json(j), out_path);

    const Rational rate = plan.rate();
    std::cerr << "K=" << topo.K() << " F=" << topo.v() << " N=" << N << " z=" << z
              << " mu_z=" << topo.mu_z << " transmissions=" << plan.transmissions.size()
              << " rate=" << to_fraction_string(rate) << " (" << to_decimal_string(rate) << ")"
              << " gain=" << ipow(2, static_cast<unsigned>(z))
              << (demands.distinct ? "" : " [rate is an upper bound: demands not distinct]")
              << "\n";
    return 0;
}

int cmd_verify(const std::string& plan_file, bool payload, std::uint64_t seed,
               const std::string& out_path) {
    const PlanDoc doc = plan_from_json(read_json_file(plan_file));
    const Topology topo = build_topology(doc.res, doc.z);
    const DemandVector demands = make_demands(topo, doc.demands.demand, doc.demands.N);
    const Placement placement = place(topo, demands.N);
    const DecodeReport report = verify_plan(doc.plan, placement, topo, demands);

    Json j = report_to_json(report, demands.distinct);
    bool verdict = report.all_decodable;
    if (payload) {
        const bool ok = payload_trial(doc.plan, placement, topo, demands, seed);
        j["payload"] = {{"seed", seed},
                        {"ok", ok},
                        {"agrees_with_symbolic", ok == report.all_decodable}};
        verdict = verdict && ok;
    }
    emit(dump_json(j), out_path);
    return verdict ? 0 : 1;
}

int cmd_compare(const std::string& schemes, const std::string& q_sweep, const std::string& m_sweep,
                const std::string& z_sweep, const std::string& mprime_sweep,
                const std::string& n_sweep, const std::string& format,
                const std::string& out_path) {
    SweepSpec spec;
    std::size_t start = 0;
    while (start <= schemes.size()) {
        const std::size_t comma = schemes.find(',', start);
        const std::size_t stop = comma == std::string::npos ? schemes.size() : comma;
        if (stop > start) spec.schemes.push_back(schemes.substr(start, stop - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (!q_sweep.empty()) spec.q = parse_sweep(q_sweep);
    if (!m_sweep.empty()) spec.m = parse_sweep(m_sweep);
    if (!z_sweep.empty()) spec.z = parse_sweep(z_sweep);
    if (!mprime_sweep.empty()) spec.mprime = parse_sweep(mprime_sweep);
    if (!n_sweep.empty()) spec.n = parse_sweep(n_sweep);

    const std::vector<ComparisonRow> rows = comparison_table(spec);
    if (format == "json") {
        Json arr = Json::array();
        for (const ComparisonRow& row : rows) {
            Json j;
            j["scheme"] = row.scheme;
            j["caches"] = row.caches.str();
            j["M_over_N"] = row.M_over_N ? Json(to_fraction_string(*row.M_over_N)) : Json();
            j["z"] = row.z;
            j["K"] = row.K ? Json(row.K->str()) : Json();
            j["F"] = row.F ? Json(row.F->str()) : Json();
            j["R"] = row.R ? Json(to_fraction_string(*row.R)) : Json();
            j["R_per_K"] = row.R_per_K ? Json(to_fraction_string(*row.R_per_K)) : Json();
            j["gain"] = row.gain ? Json(to_fraction_string(*row.gain)) : Json();
            j["applicable"] = row.applicable;
            j["reason"] = row.reason;
            arr.push_back(std::move(j));
        }
        emit(dump_json(arr), out_path);
    } else {
        emit(to_csv(rows), out_path);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cross resolvable designs and multi-access coded caching"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "csv";
    std::uint64_t seed = 0;
    app.add_option("--out", out_path, "write output to this path instead of stdout");
    app.add_option("--format", format, "output format for compare (json|csv)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", seed, "seed for demand sampling and payload trials");
    app.fallthrough();

    int q = 0, m = 0, t = 1, z = 0, files = 0;
    std::string design_file, plan_file;
    bool payload = false;

    CLI::App* construct_cmd = app.add_subcommand("construct", "build a digit-pattern design");
    construct_cmd->add_option("--q", q, "alphabet size (>= 2)")->required();
    construct_cmd->add_option("--m", m, "expansion length (>= 2)")->required();
    construct_cmd->add_option("--t", t, "fixed digit positions per block (0 < t < m)");

    CLI::App* profile_cmd = app.add_subcommand("profile", "profile a design file");
    profile_cmd->add_option("file", design_file, "design JSON file")->required();

    CLI::App* scheme_cmd = app.add_subcommand("scheme", "build a caching scheme and delivery plan");
    scheme_cmd->add_option("--design", design_file, "design JSON file (alternative to --q/--m)");
    scheme_cmd->add_option("--q", q, "alphabet size (>= 2)");
    scheme_cmd->add_option("--m", m, "expansion length (>= 2)");
    scheme_cmd->add_option("--t", t, "fixed digit positions per block");
    scheme_cmd->add_option("--z", z, "access degree (>= 2)")->required();
    scheme_cmd->add_option("--files", files, "file count N (default: number of users)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "verify a delivery plan file");
    verify_cmd->add_option("file", plan_file, "plan JSON file")->required();
    verify_cmd->add_flag("--payload", payload, "also run the bit-level payload trial");

    std::string schemes, q_sweep, m_sweep, z_sweep, mprime_sweep, n_sweep;
    CLI::App* compare_cmd = app.add_subcommand("compare", "export scheme comparison data");
    compare_cmd->add_option("--schemes", schemes, "comma list: proposed,man,hkd,rk,spe,clwzc,kmr_affine,kmr_hadamard")
        ->required();
    compare_cmd->add_option("--q", q_sweep, "q sweep (a..b or comma list)");
    compare_cmd->add_option("--m", m_sweep, "m sweep");
    compare_cmd->add_option("--z", z_sweep, "z sweep");
    compare_cmd->add_option("--mprime", mprime_sweep, "m' sweep (affine-family comparison)");
    compare_cmd->add_option("--n", n_sweep, "n sweep (hadamard-family comparison)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct_cmd->parsed()) return cmd_construct(q, m, t, out_path);
        if (profile_cmd->parsed()) return cmd_profile(design_file, out_path);
        if (scheme_cmd->parsed()) {
            DesignInput input;
            input.file = design_file;
            input.q = q;
            input.m = m;
            input.t = t;
            if (!input.from_file() && (q == 0 || m == 0)) {
                fail(Errc::invalid_params, "scheme needs either --design or --q and --m");
            }
            return cmd_scheme(input, z, files, seed, out_path);
        }
        if (verify_cmd->parsed()) return cmd_verify(plan_file, payload, seed, out_path);
        if (compare_cmd->parsed()) {
            return cmd_compare(schemes, q_sweep, m_sweep, z_sweep, mprime_sweep, n_sweep, format,
                               out_path);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
