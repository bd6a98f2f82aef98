// afkit: anti-forcing numbers and spectra of perfect matchings.
// Subcommands: exact (solver on a graph file), chain (linear-time chain
// algorithms), verify (chain vs exact cross-validation), gen (instance
// generator), ztg (Z-transformation graph).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "afkit/chain.hpp"
#include "afkit/io.hpp"
#include "afkit/resonance.hpp"
#include "afkit/solver.hpp"
#include "afkit/verify.hpp"

using nlohmann::json;

namespace {

struct CommonOpts {
    afkit::Caps caps;
    std::string format = "text";
    int jobs = 1;
};

long long env_cap(const char* name, long long fallback) {
    const char* value = std::getenv(name);
    if (!value) return fallback;
    try {
        return std::stoll(value);
    } catch (const std::exception&) {
        return fallback;
    }
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
    opts.caps.pm_cap = env_cap("AFKIT_PM_CAP", 1'000'000);
    opts.caps.cycle_cap = env_cap("AFKIT_CYCLE_CAP", 100'000);
    cmd->add_option("--pm-cap", opts.caps.pm_cap, "perfect matching enumeration cap");
    cmd->add_option("--cycle-cap", opts.caps.cycle_cap, "alternating cycle enumeration cap");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
}

std::string render_scalar(const json& v) {
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string render_flat(const json& v) {
    if (!v.is_array()) return render_scalar(v);
    std::string out;
    for (const auto& item : v) {
        if (!out.empty()) out += ' ';
        out += render_scalar(item);
    }
    return out;
}

void print_text_values(const json& values) {
    for (const auto& [key, v] : values.items()) {
        if (v.is_array() && !v.empty() && (v[0].is_array() || v[0].is_object())) {
            std::cout << key << ":\n";
            for (const auto& item : v) {
                if (item.is_object()) {
                    std::cout << " ";
                    for (const auto& [k2, v2] : item.items()) std::cout << " " << k2 << "=" << render_flat(v2);
                    std::cout << "\n";
                } else {
                    std::cout << "  " << render_flat(item) << "\n";
                }
            }
        } else {
            std::cout << key << ": " << render_flat(v) << "\n";
        }
    }
}

class Timer {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit_report(const CommonOpts& opts, const std::string& input, const std::string& task,
                 const json& values, double timing_ms) {
    if (opts.format == "json") {
        json report{{"input", input},
                    {"task", task},
                    {"values", values},
                    {"caps", {{"pm_cap", opts.caps.pm_cap}, {"cycle_cap", opts.caps.cycle_cap}}},
                    {"timing_ms", timing_ms}};
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "task: " << task << "\n";
        std::cout << "input: " << input << "\n";
        print_text_values(values);
    }
}

json matching_json(const afkit::Matching& m) { return json(m.edge_ids); }

int cmd_exact(const std::string& input, const std::string& task, const CommonOpts& opts) {
    Timer timer;
    afkit::GraphFile file = afkit::read_graph_file(input);
    const afkit::Graph& g = file.graph;
    json values;
    if (task == "af") {
        auto [value, matching] = afkit::min_anti_forcing(g, opts.caps, opts.jobs);
        values["af"] = value;
        values["matching"] = matching_json(matching);
        values["witness"] = afkit::af_of_matching(g, matching, opts.caps).witness;
    } else if (task == "max-af") {
        auto [value, argmax] = afkit::max_anti_forcing(g, opts.caps, opts.jobs);
        values["max_af"] = value;
        json list = json::array();
        for (const auto& m : argmax) list.push_back(matching_json(m));
        values["argmax_matchings"] = list;
        if (afkit::is_connected(g)) {
            int r = afkit::cyclomatic_number(g);
            values["cyclomatic"] = r;
            if (!afkit::bipartition(g) && value < r)
                values["note"] = "below the cyclomatic number (nonbipartite bound is strict)";
        }
    } else if (task == "spectrum") {
        values["spectrum"] = afkit::spectrum_exact(g, opts.caps, false, opts.jobs).values;
    } else if (task == "per-matching") {
        auto spectrum = afkit::spectrum_exact(g, opts.caps, true, opts.jobs);
        values["spectrum"] = spectrum.values;
        json list = json::array();
        for (const auto& [m, af] : *spectrum.per_matching)
            list.push_back(json{{"matching", matching_json(m)}, {"af", af}});
        values["per_matching"] = list;
    } else if (task == "edges-anti-forcing") {
        values["edges"] = afkit::anti_forcing_edges(g);
    } else if (task == "edges-forcing") {
        values["edges"] = afkit::forcing_edges(g);
    } else if (task == "components") {
        auto report = afkit::normal_components(g);
        values["fixed_single"] = report.fixed_single;
        values["fixed_double"] = report.fixed_double;
        values["components"] = report.elementary_components;
    }
    emit_report(opts, input, task, values, timer.ms());
    return 0;
}

int cmd_chain(const std::string& spec_text, const std::string& task, const std::string& output,
              const CommonOpts& opts) {
    Timer timer;
    afkit::ChainSpec spec = afkit::parse_chain(spec_text);
    json values;
    if (task == "af") {
        values["af"] = afkit::af_chain(spec);
    } else if (task == "max-af") {
        values["max_af"] = afkit::max_af_chain(spec);
    } else if (task == "spectrum") {
        values["spectrum"] = afkit::spectrum_chain(spec).values;
    } else if (task == "segments") {
        auto segs = afkit::segment_decomposition(spec);
        json list = json::array();
        for (auto [a, b] : segs.segments) list.push_back(json::array({a, b}));
        values["segments"] = list;
        values["af"] = segs.count();
    } else if (task == "blocks") {
        auto blocks = afkit::all_kink_decomposition(spec);
        json list = json::array();
        for (auto [a, b] : blocks.blocks) list.push_back(json::array({a, b}));
        values["blocks"] = list;
        values["skipped"] = blocks.skipped;
        values["max_af"] = blocks.total_faces();
    } else if (task == "kinks") {
        json flags = json::array();
        for (char f : afkit::kink_flags(spec).flags) flags.push_back(static_cast<bool>(f));
        values["kinks"] = flags;
    } else if (task == "k-count") {
        values["k_count"] = afkit::maximal_linear_chain_count(spec);
    } else if (task == "realize") {
        afkit::Realization real = afkit::realize(spec);
        auto faces = real.faces.interior_vertices;
        faces.push_back(*real.faces.exterior_vertices);
        int exterior_index = static_cast<int>(faces.size()) - 1;
        if (output.empty()) {
            afkit::write_graph_text(std::cout, real.graph, faces, exterior_index);
            return 0;
        }
        afkit::write_graph_file(output, real.graph, faces, exterior_index);
        values["output"] = output;
        values["vertices"] = real.graph.vertex_count();
        values["edges"] = real.graph.edge_count();
        values["faces"] = real.faces.interior_count();
    }
    emit_report(opts, spec_text, task, values, timer.ms());
    return 0;
}

int cmd_verify(const afkit::ChainSpec& spec, const CommonOpts& opts, const std::string& fault) {
    Timer timer;
    std::optional<afkit::ChainAnswers> injected;
    if (!fault.empty()) {
        injected = afkit::chain_answers(spec);
        if (fault == "af")
            injected->af += 1;
        else if (fault == "max-af")
            injected->max_af += 1;
        else if (fault == "spectrum")
            injected->spectrum.push_back(injected->max_af + 1);
    }
    afkit::VerifyOutcome outcome =
        afkit::verify_chain(spec, opts.caps, opts.jobs, injected ? &*injected : nullptr);

    json mismatches = json::array();
    for (const auto& mm : outcome.mismatches)
        mismatches.push_back(
            json{{"field", mm.field}, {"chain", mm.chain_value}, {"oracle", mm.oracle_value}});
    json values{{"chain", {{"af", outcome.chain.af},
                           {"max_af", outcome.chain.max_af},
                           {"spectrum", outcome.chain.spectrum}}},
                {"oracle", {{"af", outcome.oracle.af},
                            {"max_af", outcome.oracle.max_af},
                            {"spectrum", outcome.oracle.spectrum}}},
                {"agree", outcome.ok()},
                {"mismatches", mismatches}};
    if (opts.format == "json") {
        emit_report(opts, afkit::chain_to_string(spec), "verify", values, timer.ms());
    } else {
        std::cout << "spec: " << afkit::chain_to_string(spec) << "\n";
        std::cout << "chain: af=" << outcome.chain.af << " max_af=" << outcome.chain.max_af
                  << " spectrum=" << render_flat(json(outcome.chain.spectrum)) << "\n";
        std::cout << "oracle: af=" << outcome.oracle.af << " max_af=" << outcome.oracle.max_af
                  << " spectrum=" << render_flat(json(outcome.oracle.spectrum)) << "\n";
        for (const auto& mm : outcome.mismatches)
            std::cout << "mismatch " << mm.field << ": chain=" << mm.chain_value
                      << " oracle=" << mm.oracle_value << "\n";
        std::cout << (outcome.ok() ? "agree" : "DISAGREE") << "\n";
    }
    return outcome.ok() ? 0 : 2;
}

int cmd_ztg(const std::string& input, const std::string& export_path, std::string sidecar_path,
            const CommonOpts& opts) {
    Timer timer;
    afkit::GraphFile file = afkit::read_graph_file(input);
    if (file.faces.empty()) afkit::fail(afkit::ErrorCode::BadFaceSet, input + " carries no face lines");
    afkit::FaceSet faces = afkit::make_face_set(file.graph, file.faces, file.exterior_index);
    afkit::ZGraph z = afkit::z_graph(file.graph, faces, opts.caps);

    json values{{"nodes", z.nodes.size()}, {"links", z.links.size()}, {"connected", afkit::z_connected(z)}};
    if (!export_path.empty()) {
        std::vector<std::pair<int, int>> pairs(z.links.begin(), z.links.end());
        afkit::Graph zg = afkit::build_graph(static_cast<int>(z.nodes.size()), pairs);
        afkit::write_graph_file(export_path, zg);
        if (sidecar_path.empty()) sidecar_path = export_path + ".nodes";
        std::ofstream sidecar(sidecar_path);
        if (!sidecar) afkit::fail(afkit::ErrorCode::SyntaxError, "cannot open " + sidecar_path);
        for (size_t i = 0; i < z.nodes.size(); ++i) {
            sidecar << i << ":";
            for (int e : z.nodes[i].edge_ids) sidecar << " " << e;
            sidecar << "\n";
        }
        values["export"] = export_path;
        values["sidecar"] = sidecar_path;
    }
    emit_report(opts, input, "ztg", values, timer.ms());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"anti-forcing numbers and spectra of perfect matchings"};
    app.require_subcommand(1);

    // exact
    auto* exact = app.add_subcommand("exact", "exact solver on a graph file");
    std::string exact_input, exact_task;
    CommonOpts exact_opts;
    exact->add_option("--input", exact_input, "graph file")->required();
    exact->add_option("--task", exact_task, "what to compute")
        ->required()
        ->check(CLI::IsMember({"af", "max-af", "spectrum", "per-matching", "edges-anti-forcing",
                               "edges-forcing", "components"}));
    exact->add_option("--jobs", exact_opts.jobs, "parallel per-matching evaluation");
    add_common(exact, exact_opts);

    // chain
    auto* chain = app.add_subcommand("chain", "linear-time chain algorithms");
    std::string chain_spec, chain_task, chain_output;
    CommonOpts chain_opts;
    chain->add_option("--spec", chain_spec, "chain spec, e.g. '6 6@2 6'")->required();
    chain->add_option("--task", chain_task, "what to compute")
        ->required()
        ->check(CLI::IsMember(
            {"af", "max-af", "spectrum", "segments", "blocks", "kinks", "k-count", "realize"}));
    chain->add_option("--output", chain_output, "graph file to write for realize");
    add_common(chain, chain_opts);

    // verify
    auto* verify = app.add_subcommand("verify", "cross-validate chain algorithms against the solver");
    std::string verify_spec, verify_family, verify_modes, verify_fault;
    int verify_n = 0;
    std::uint64_t verify_seed = 0;
    bool verify_seed_given = false;
    CommonOpts verify_opts;
    verify->add_option("--spec", verify_spec, "chain spec");
    verify->add_option("--family", verify_family, "generator family");
    verify->add_option("--n", verify_n, "face count for the generator");
    verify->add_option("--modes", verify_modes, "generator modes");
    verify->add_option("--seed", verify_seed, "generator seed")->each([&](const std::string&) {
        verify_seed_given = true;
    });
    verify->add_option("--jobs", verify_opts.jobs, "parallel per-matching evaluation");
    verify->add_option("--self-test-fault", verify_fault, "inject a wrong chain answer (harness self-test)")
        ->check(CLI::IsMember({"af", "max-af", "spectrum"}))
        ->group("");
    add_common(verify, verify_opts);

    // gen
    auto* gen = app.add_subcommand("gen", "generate chain instances");
    std::string gen_family, gen_modes;
    int gen_n = 0;
    std::uint64_t gen_seed = 0;
    bool gen_seed_given = false;
    CommonOpts gen_opts;
    gen->add_option("--family", gen_family, "hexchain|polyomino|straight-polyomino|allkink-catahex|phenylene|random")
        ->required();
    gen->add_option("--n", gen_n, "face count")->required();
    gen->add_option("--modes", gen_modes, "per-internal-face modes");
    gen->add_option("--seed", gen_seed, "seed (required for random)")->each([&](const std::string&) {
        gen_seed_given = true;
    });
    add_common(gen, gen_opts);

    // ztg
    auto* ztg = app.add_subcommand("ztg", "Z-transformation graph of a graph file with faces");
    std::string ztg_input, ztg_export, ztg_sidecar;
    CommonOpts ztg_opts;
    ztg->add_option("--input", ztg_input, "graph file with f lines")->required();
    ztg->add_option("--export", ztg_export, "write the Z graph in graph format");
    ztg->add_option("--sidecar", ztg_sidecar, "node-to-matching listing (default: export + .nodes)");
    add_common(ztg, ztg_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (exact->parsed()) return cmd_exact(exact_input, exact_task, exact_opts);
        if (chain->parsed()) return cmd_chain(chain_spec, chain_task, chain_output, chain_opts);
        if (verify->parsed()) {
            afkit::ChainSpec spec;
            if (!verify_spec.empty()) {
                spec = afkit::parse_chain(verify_spec);
            } else if (!verify_family.empty()) {
                auto family = afkit::chain_family_from_string(verify_family);
                if (family == afkit::ChainFamily::Random && !verify_seed_given)
                    afkit::fail(afkit::ErrorCode::BadModes, "random generation requires --seed");
                spec = afkit::generate(family, verify_n, verify_modes, verify_seed);
            } else {
                afkit::fail(afkit::ErrorCode::SyntaxError, "verify needs --spec or --family/--n");
            }
            return cmd_verify(spec, verify_opts, verify_fault);
        }
        if (gen->parsed()) {
            auto family = afkit::chain_family_from_string(gen_family);
            if (family == afkit::ChainFamily::Random && !gen_seed_given)
                afkit::fail(afkit::ErrorCode::BadModes, "random generation requires --seed");
            afkit::ChainSpec spec = afkit::generate(family, gen_n, gen_modes, gen_seed);
            if (gen_opts.format == "json")
                emit_report(gen_opts, gen_family, "gen", json{{"spec", afkit::chain_to_string(spec)}}, 0.0);
            else
                std::cout << afkit::chain_to_string(spec) << "\n";
            return 0;
        }
        if (ztg->parsed()) return cmd_ztg(ztg_input, ztg_export, ztg_sidecar, ztg_opts);
    } catch (const afkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == afkit::ErrorCode::CapExceeded ? 3 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
