// netdiv: structural-diversity toolchain for large undirected networks.
// Subcommands compose through files (CSV + JSON sidecars); every run writes a
// .meta.json echoing the resolved configuration.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "netdiv/catalog.hpp"
#include "netdiv/census.hpp"
#include "netdiv/cluster.hpp"
#include "netdiv/error.hpp"
#include "netdiv/graph.hpp"
#include "netdiv/inference.hpp"
#include "netdiv/profiles.hpp"
#include "netdiv/randgraph.hpp"
#include "netdiv/signature.hpp"
#include "netdiv/stats.hpp"
#include "netdiv/svg.hpp"
#include "netdiv/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void write_metadata(const std::string& out_path, const std::string& subcommand,
                    json params) {
    json meta;
    meta["tool"] = netdiv::kToolName;
    meta["version"] = netdiv::kVersion;
    meta["subcommand"] = subcommand;
    meta["parameters"] = std::move(params);
    std::ofstream out(out_path);
    if (!out) throw netdiv::Error("cannot write metadata: " + out_path);
    out << meta.dump(2) << '\n';
}

std::string sidecar_path(const std::string& csv_path) {
    fs::path p(csv_path);
    p.replace_extension(".json");
    return p.string();
}

netdiv::Graph load_graph(const std::string& input, const std::string& directed_mode,
                         bool keep_lcc) {
    netdiv::CleaningPolicy policy;
    policy.directed_mode = netdiv::parse_directed_mode(directed_mode);
    policy.keep_lcc = keep_lcc;
    return netdiv::load_edge_list(input, policy);
}

std::string stars(double p) {
    if (p < 0.001) return "***";
    if (p < 0.01) return "**";
    if (p < 0.05) return "*";
    return "";
}

struct CleanArgs {
    std::string input, out;
    std::string directed_mode = "already_undirected";
    bool keep_lcc = false;
};

struct StatsArgs {
    std::string input, out, json_out;
    std::string directed_mode = "already_undirected";
    bool keep_lcc = false;
    std::string diameter = "double_sweep_lower_bound";
    unsigned diameter_threshold = 20000;
    unsigned threads = 0;
};

struct CensusArgs {
    std::string input, out;
    std::string directed_mode = "already_undirected";
    bool keep_lcc = false;
    unsigned max_k = 6, cap = 0;
    std::string mode = "exact";
    double rate = 1.0;
    std::uint64_t seed = 0;
    unsigned threads = 0;
};

struct SignatureArgs {
    std::string census, sidecar, out, json_out;
    unsigned max_k = 6, k_min = 2, k_max = 4;
};

struct BaselinesArgs {
    std::string input, census, sidecar, out;
    std::string kind;
    std::string directed_mode = "already_undirected";
    bool keep_lcc = false;
    unsigned max_k = 6;
    unsigned exact_threshold = 50000;
    double sample_prob = 0.3;
    std::uint64_t seed = 0;
    unsigned hist_cap = 1024;
    unsigned threads = 0;
};

struct CompareArgs {
    std::string dir, out_prefix;
    std::string kind = "signature";
    unsigned clusters = 4;
    std::string distance = "one_minus_r";
    bool svg = false;
};

struct InferArgs {
    std::string census, sidecar, out_prefix;
    unsigned max_k = 6, k_min = 2, k_max = 6;
    std::string response = "relative_rate";
    bool weighted = false;
};

struct GenerateArgs {
    std::string family, out, manifest, out_dir;
    std::uint64_t n = 0, m = 0, k = 0;
    double p = 0.0, beta = 0.0;
    std::uint64_t seed = 0;
};

struct CatalogArgs {
    unsigned max_k = 6;
    std::string out = "catalog.csv";
};

int run_clean(const CleanArgs& a) {
    netdiv::Graph g = load_graph(a.input, a.directed_mode, a.keep_lcc);
    netdiv::write_edge_list(g, a.out);
    netdiv::write_id_map(g, a.out + ".ids.csv");
    write_metadata(a.out + ".meta.json", "clean",
                   {{"input", a.input},
                    {"directed_mode", a.directed_mode},
                    {"keep_lcc", a.keep_lcc},
                    {"out", a.out},
                    {"node_count", g.node_count()},
                    {"edge_count", g.edge_count()}});
    return 0;
}

int run_stats(const StatsArgs& a) {
    netdiv::Graph g = load_graph(a.input, a.directed_mode, a.keep_lcc);
    netdiv::StatsOptions opts;
    opts.diameter_mode = netdiv::parse_diameter_mode(a.diameter);
    opts.exact_diameter_threshold = a.diameter_threshold;
    opts.threads = a.threads;
    netdiv::NetworkStats s = netdiv::network_stats(g, opts);
    netdiv::write_stats_csv(s, a.out);
    std::string json_path = a.json_out.empty() ? sidecar_path(a.out) : a.json_out;
    {
        std::ofstream jout(json_path);
        if (!jout) throw netdiv::Error("cannot write stats json: " + json_path);
        jout << netdiv::stats_to_json(s) << '\n';
    }
    write_metadata(a.out + ".meta.json", "stats",
                   {{"input", a.input},
                    {"directed_mode", a.directed_mode},
                    {"keep_lcc", a.keep_lcc},
                    {"diameter_mode", a.diameter},
                    {"diameter_threshold", a.diameter_threshold},
                    {"threads", a.threads},
                    {"out", a.out}});
    return 0;
}

int run_census(const CensusArgs& a) {
    netdiv::Graph g = load_graph(a.input, a.directed_mode, a.keep_lcc);
    auto catalog = netdiv::GraphClassCatalog::build(a.max_k);
    netdiv::CensusMode mode = a.mode == "node_sampled"
                                  ? netdiv::CensusMode::node_sampled(a.rate, a.seed)
                                  : netdiv::CensusMode::exact();
    if (a.mode != "exact" && a.mode != "node_sampled")
        throw netdiv::Error("unknown census mode: " + a.mode);
    netdiv::CensusTable t = netdiv::run_census(g, catalog, mode, a.cap, a.threads);
    netdiv::write_census_csv(t, catalog, a.out);
    netdiv::write_census_sidecar(t, sidecar_path(a.out));
    write_metadata(a.out + ".meta.json", "census",
                   {{"input", a.input},
                    {"directed_mode", a.directed_mode},
                    {"keep_lcc", a.keep_lcc},
                    {"max_k", a.max_k},
                    {"cap", t.cap},
                    {"mode", a.mode},
                    {"rate", a.rate},
                    {"seed", a.seed},
                    {"threads", a.threads},
                    {"catalog_version", catalog.version()},
                    {"out", a.out}});
    return 0;
}

int run_signature(const SignatureArgs& a) {
    auto catalog = netdiv::GraphClassCatalog::build(a.max_k);
    std::string side = a.sidecar.empty() ? sidecar_path(a.census) : a.sidecar;
    netdiv::CensusTable t = netdiv::load_census(a.census, side, catalog);
    netdiv::SignatureVector sig = netdiv::build_signature(t, catalog, a.k_min, a.k_max);
    netdiv::write_signature_csv(sig, a.out);
    std::string json_path = a.json_out.empty() ? sidecar_path(a.out) : a.json_out;
    {
        std::ofstream jout(json_path);
        if (!jout) throw netdiv::Error("cannot write signature json: " + json_path);
        jout << netdiv::signature_to_json(sig) << '\n';
    }
    write_metadata(a.out + ".meta.json", "signature",
                   {{"census", a.census},
                    {"sidecar", side},
                    {"max_k", a.max_k},
                    {"k_min", a.k_min},
                    {"k_max", a.k_max},
                    {"out", a.out}});
    return 0;
}

int run_baselines(const BaselinesArgs& a) {
    auto catalog = netdiv::GraphClassCatalog::build(a.max_k);
    netdiv::ProfileKind kind = netdiv::parse_profile_kind(a.kind);
    netdiv::BaselineOptions opts;
    opts.exact_threshold = a.exact_threshold;
    opts.sample_prob = a.sample_prob;
    opts.seed = a.seed;
    opts.threads = a.threads;
    opts.hist_cap = a.hist_cap;

    std::vector<double> profile;
    if (kind == netdiv::ProfileKind::bag_of_cns) {
        if (a.census.empty())
            throw netdiv::Error("bag_of_cns requires --census");
        std::string side = a.sidecar.empty() ? sidecar_path(a.census) : a.sidecar;
        netdiv::CensusTable t = netdiv::load_census(a.census, side, catalog);
        profile = netdiv::baseline_profile(netdiv::Graph(), &t, kind, catalog, opts);
    } else {
        if (a.input.empty()) throw netdiv::Error(a.kind + " requires --input");
        netdiv::Graph g = load_graph(a.input, a.directed_mode, a.keep_lcc);
        profile = netdiv::baseline_profile(g, nullptr, kind, catalog, opts);
    }
    netdiv::write_profile_csv(profile, a.out);
    write_metadata(a.out + ".meta.json", "baselines",
                   {{"input", a.input},
                    {"census", a.census},
                    {"kind", a.kind},
                    {"directed_mode", a.directed_mode},
                    {"keep_lcc", a.keep_lcc},
                    {"exact_threshold", a.exact_threshold},
                    {"sample_prob", a.sample_prob},
                    {"seed", a.seed},
                    {"hist_cap", a.hist_cap},
                    {"threads", a.threads},
                    {"out", a.out}});
    return 0;
}

int run_compare(const CompareArgs& a) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(a.dir)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() != ".csv") continue;
        std::string stem = entry.path().stem().string();
        if (stem.ends_with(".meta") || stem.ends_with(".ids")) continue;
        files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.size() < 2)
        throw netdiv::Error("compare: need at least 2 csv files in " + a.dir);

    netdiv::ProfileMatrix profiles;
    profiles.kind = a.kind == "signature" ? netdiv::ProfileKind::diversity_signature
                                          : netdiv::ProfileKind::subgraph_frequency;
    for (const auto& f : files) {
        profiles.network_names.push_back(f.stem().string());
        if (a.kind == "signature")
            profiles.vectors.push_back(netdiv::load_signature_csv(f.string()).relative_rates);
        else
            profiles.vectors.push_back(netdiv::load_profile_csv(f.string()));
    }
    std::size_t len = profiles.vectors.front().size();
    for (std::size_t i = 1; i < profiles.vectors.size(); ++i)
        if (profiles.vectors[i].size() != len)
            throw netdiv::Error("compare: vector length mismatch in " +
                                profiles.network_names[i]);

    auto corr = netdiv::correlation_matrix(profiles);
    netdiv::WardOptions wopts;
    wopts.transform = a.distance == "half_one_minus_r"
                          ? netdiv::DistanceTransform::half_one_minus_r
                          : netdiv::DistanceTransform::one_minus_r;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> imputed;
    wopts.imputed = &imputed;
    netdiv::Dendrogram dend = netdiv::ward_cluster(corr, wopts);
    unsigned k = std::min<unsigned>(a.clusters, dend.leaf_count);
    auto labels = netdiv::flat_clusters(dend, k);

    const std::size_t n = corr.size();
    {
        std::ofstream out(a.out_prefix + ".matrix.csv");
        if (!out) throw netdiv::Error("cannot write matrix csv");
        out.precision(17);
        out << "network";
        for (const auto& name : profiles.network_names) out << ',' << name;
        out << '\n';
        for (std::size_t i = 0; i < n; ++i) {
            out << profiles.network_names[i];
            for (std::size_t j = 0; j < n; ++j) {
                out << ',';
                if (std::isnan(corr[i][j]))
                    out << "nan";
                else
                    out << corr[i][j];
            }
            out << '\n';
        }
    }
    {
        std::ofstream out(a.out_prefix + ".merges.csv");
        out.precision(17);
        out << "step,cluster_a,cluster_b,height,merged_size\n";
        for (std::size_t s = 0; s < dend.merges.size(); ++s) {
            const auto& m = dend.merges[s];
            out << s << ',' << m.cluster_a << ',' << m.cluster_b << ',' << m.height
                << ',' << m.merged_size << '\n';
        }
    }
    {
        std::ofstream out(a.out_prefix + ".clusters.csv");
        out << "network,cluster\n";
        for (std::size_t i = 0; i < n; ++i)
            out << profiles.network_names[i] << ',' << labels[i] << '\n';
    }
    {
        std::ofstream out(a.out_prefix + ".leaf_order.csv");
        out << "position,network\n";
        for (std::size_t pos = 0; pos < dend.leaf_order.size(); ++pos)
            out << pos << ',' << profiles.network_names[dend.leaf_order[pos]] << '\n';
    }
    if (a.svg)
        netdiv::write_heatmap_svg(corr, profiles.network_names, dend.leaf_order,
                                  a.out_prefix + ".heatmap.svg");

    json imputed_json = json::array();
    for (auto [i, j] : imputed)
        imputed_json.push_back({profiles.network_names[i], profiles.network_names[j]});
    write_metadata(a.out_prefix + ".meta.json", "compare",
                   {{"dir", a.dir},
                    {"kind", a.kind},
                    {"clusters", k},
                    {"distance", a.distance},
                    {"networks", profiles.network_names},
                    {"imputed_cells", imputed_json},
                    {"out_prefix", a.out_prefix}});
    return 0;
}

int run_infer(const InferArgs& a) {
    auto catalog = netdiv::GraphClassCatalog::build(a.max_k);
    std::string side = a.sidecar.empty() ? sidecar_path(a.census) : a.sidecar;
    netdiv::CensusTable t = netdiv::load_census(a.census, side, catalog);
    netdiv::ResponseKind response = a.response == "rate" ? netdiv::ResponseKind::rate
                                                         : netdiv::ResponseKind::relative_rate;

    auto rows = netdiv::regression_rows(t, catalog, a.k_min, a.k_max, response);
    auto fit = netdiv::ols_fit(rows, a.weighted);
    auto fit_h = netdiv::ols_fit_homophily(rows, a.weighted);

    {
        std::ofstream out(a.out_prefix + ".regression.csv");
        if (!out) throw netdiv::Error("cannot write regression csv");
        out.precision(17);
        out << "term,coefficient,std_error,t_value,p_value,significance\n";
        for (const char* term : {"intercept", "cn", "density", "components"}) {
            out << term << ',' << fit.coefficients.at(term) << ','
                << fit.std_errors.at(term) << ',' << fit.t_values.at(term) << ','
                << fit.p_values.at(term) << ',' << stars(fit.p_values.at(term)) << '\n';
        }
        out << "adj_r2_diversity," << fit.adj_r2 << ",,,,\n";
        out << "adj_r2_homophily," << fit_h.adj_r2 << ",,,,\n";
        out << "n_obs," << fit.n_obs << ",,,,\n";
    }
    {
        std::ofstream out(a.out_prefix + ".correlation.csv");
        out.precision(17);
        out << "feature,k,r,defined,n_classes\n";
        for (auto feature : {netdiv::ClassFeature::density, netdiv::ClassFeature::components}) {
            auto table = netdiv::correlation_table(t, catalog, feature, a.k_min, a.k_max,
                                                   response);
            for (const auto& fc : table) {
                out << (feature == netdiv::ClassFeature::density ? "density" : "components")
                    << ',' << fc.k << ',';
                if (fc.defined)
                    out << fc.r;
                else
                    out << "nan";
                out << ',' << (fc.defined ? 1 : 0) << ',' << fc.n_classes << '\n';
            }
        }
    }

    auto dataset = netdiv::make_inference_dataset(t, catalog, a.k_min, a.k_max);
    auto [homophily, diversity] = netdiv::evaluate_predictors(dataset, fit);
    {
        std::ofstream out(a.out_prefix + ".evaluation.csv");
        out.precision(17);
        out << "field,value\n";
        out << "pairs," << dataset.instances << '\n';
        out << "positive_fraction,"
            << (dataset.instances > 0
                    ? static_cast<double>(dataset.positives) /
                          static_cast<double>(dataset.instances)
                    : 0.0)
            << '\n';
        out << "aupr_homophily," << homophily.aupr << '\n';
        out << "aupr_diversity," << diversity.aupr << '\n';
        out << "auroc_homophily," << homophily.auroc << '\n';
        out << "auroc_diversity," << diversity.auroc << '\n';
    }
    for (const auto* rep : {&homophily, &diversity}) {
        std::ofstream out(a.out_prefix + ".pr_" + rep->predictor + ".csv");
        out.precision(17);
        out << "recall,precision\n";
        for (auto [recall, precision] : rep->pr_curve)
            out << recall << ',' << precision << '\n';
    }
    write_metadata(a.out_prefix + ".meta.json", "infer",
                   {{"census", a.census},
                    {"sidecar", side},
                    {"max_k", a.max_k},
                    {"k_min", a.k_min},
                    {"k_max", a.k_max},
                    {"response", a.response},
                    {"weighted", a.weighted},
                    {"out_prefix", a.out_prefix}});
    return 0;
}

int run_generate(const GenerateArgs& a) {
    std::vector<netdiv::GeneratorSpec> specs;
    std::vector<std::string> outputs;
    if (!a.manifest.empty()) {
        specs = netdiv::load_manifest(a.manifest);
        fs::path dir = a.out_dir.empty() ? fs::path(".") : fs::path(a.out_dir);
        fs::create_directories(dir);
        for (const auto& s : specs) outputs.push_back((dir / netdiv::spec_filename(s)).string());
    } else {
        netdiv::GeneratorSpec s;
        s.seed = a.seed;
        if (a.family == "er")
            s.family = netdiv::ErSpec{a.n, a.p};
        else if (a.family == "ba")
            s.family = netdiv::BaSpec{a.n, a.m};
        else if (a.family == "ws")
            s.family = netdiv::WsSpec{a.n, a.k, a.beta};
        else
            throw netdiv::Error("generate: unknown family '" + a.family +
                                "' (expected er, ba, or ws)");
        specs.push_back(s);
        outputs.push_back(a.out.empty() ? netdiv::spec_filename(s) : a.out);
    }

    json produced = json::array();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        netdiv::Graph g = netdiv::generate(specs[i]);
        netdiv::write_edge_list(g, outputs[i]);
        produced.push_back({{"spec", json::parse(netdiv::spec_to_json(specs[i]))},
                            {"file", outputs[i]},
                            {"node_count", g.node_count()},
                            {"edge_count", g.edge_count()}});
    }
    std::string meta_path = !a.manifest.empty()
                                ? (fs::path(a.out_dir.empty() ? "." : a.out_dir) /
                                   "generate.meta.json")
                                      .string()
                                : outputs.front() + ".meta.json";
    write_metadata(meta_path, "generate",
                   {{"manifest", a.manifest}, {"produced", produced}});
    return 0;
}

int run_catalog(const CatalogArgs& a) {
    auto catalog = netdiv::GraphClassCatalog::build(a.max_k);
    catalog.write_csv(a.out);
    write_metadata(a.out + ".meta.json", "catalog",
                   {{"max_k", a.max_k},
                    {"classes", catalog.size()},
                    {"catalog_version", catalog.version()},
                    {"out", a.out}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structural diversity of common neighborhoods: census, signatures, "
                 "superfamilies, link inference"};
    app.set_version_flag("--version", std::string(netdiv::kVersion));
    app.require_subcommand(1);

    CleanArgs clean_args;
    auto* clean = app.add_subcommand("clean", "clean an edge list and write it back");
    clean->add_option("--input", clean_args.input, "raw edge list")->required();
    clean->add_option("--directed-mode", clean_args.directed_mode,
                      "already_undirected|reciprocal_only|symmetrize");
    clean->add_flag("--keep-lcc", clean_args.keep_lcc, "retain only the largest component");
    clean->add_option("--out", clean_args.out, "cleaned edge list path")->required();

    StatsArgs stats_args;
    auto* stats = app.add_subcommand("stats", "summary statistics for a network");
    stats->add_option("--input", stats_args.input)->required();
    stats->add_option("--directed-mode", stats_args.directed_mode);
    stats->add_flag("--keep-lcc", stats_args.keep_lcc);
    stats->add_option("--diameter", stats_args.diameter, "exact|double_sweep|skip");
    stats->add_option("--diameter-threshold", stats_args.diameter_threshold);
    stats->add_option("--threads", stats_args.threads);
    stats->add_option("--out", stats_args.out, "stats csv")->required();
    stats->add_option("--json", stats_args.json_out, "stats json");

    CensusArgs census_args;
    auto* census = app.add_subcommand("census", "common-neighborhood census");
    census->add_option("--input", census_args.input)->required();
    census->add_option("--directed-mode", census_args.directed_mode);
    census->add_flag("--keep-lcc", census_args.keep_lcc);
    census->add_option("--max-k", census_args.max_k, "catalog size limit (1..6)");
    census->add_option("--cap", census_args.cap, "classify neighborhoods up to this size");
    census->add_option("--mode", census_args.mode, "exact|node_sampled");
    census->add_option("--rate", census_args.rate, "node sampling rate");
    census->add_option("--seed", census_args.seed, "sampling seed");
    census->add_option("--threads", census_args.threads);
    census->add_option("--out", census_args.out, "census csv")->required();

    SignatureArgs signature_args;
    auto* signature = app.add_subcommand("signature", "diversity signature from a census");
    signature->add_option("--census", signature_args.census)->required();
    signature->add_option("--sidecar", signature_args.sidecar, "census sidecar json");
    signature->add_option("--max-k", signature_args.max_k);
    signature->add_option("--k-min", signature_args.k_min);
    signature->add_option("--k-max", signature_args.k_max);
    signature->add_option("--out", signature_args.out)->required();
    signature->add_option("--json", signature_args.json_out);

    BaselinesArgs baselines_args;
    auto* baselines = app.add_subcommand("baselines", "comparison profile vectors");
    baselines->add_option("--input", baselines_args.input, "edge list (graph-based kinds)");
    baselines->add_option("--census", baselines_args.census, "census csv (bag_of_cns)");
    baselines->add_option("--sidecar", baselines_args.sidecar);
    baselines
        ->add_option("--kind", baselines_args.kind,
                     "subgraph_frequency|percentile_degrees|bag_of_degrees|bag_of_cns")
        ->required();
    baselines->add_option("--directed-mode", baselines_args.directed_mode);
    baselines->add_flag("--keep-lcc", baselines_args.keep_lcc);
    baselines->add_option("--max-k", baselines_args.max_k);
    baselines->add_option("--exact-threshold", baselines_args.exact_threshold);
    baselines->add_option("--sample-prob", baselines_args.sample_prob);
    baselines->add_option("--seed", baselines_args.seed);
    baselines->add_option("--hist-cap", baselines_args.hist_cap);
    baselines->add_option("--threads", baselines_args.threads);
    baselines->add_option("--out", baselines_args.out)->required();

    CompareArgs compare_args;
    auto* compare = app.add_subcommand("compare", "correlate and cluster many networks");
    compare->add_option("--dir", compare_args.dir, "directory of signature/profile csvs")
        ->required();
    compare->add_option("--kind", compare_args.kind, "signature|profile");
    compare->add_option("--clusters", compare_args.clusters, "flat cluster count");
    compare->add_option("--distance", compare_args.distance,
                        "one_minus_r|half_one_minus_r");
    compare->add_flag("--svg", compare_args.svg, "write heatmap svg");
    compare->add_option("--out-prefix", compare_args.out_prefix)->required();

    InferArgs infer_args;
    auto* infer = app.add_subcommand("infer", "regression and link-inference evaluation");
    infer->add_option("--census", infer_args.census)->required();
    infer->add_option("--sidecar", infer_args.sidecar);
    infer->add_option("--max-k", infer_args.max_k);
    infer->add_option("--k-min", infer_args.k_min);
    infer->add_option("--k-max", infer_args.k_max);
    infer->add_option("--response", infer_args.response, "relative_rate|rate");
    infer->add_flag("--weighted", infer_args.weighted, "weight classes by pair count");
    infer->add_option("--out-prefix", infer_args.out_prefix)->required();

    GenerateArgs generate_args;
    auto* generate = app.add_subcommand("generate", "seeded random graphs (er|ba|ws)");
    generate->add_option("--family", generate_args.family, "er|ba|ws");
    generate->add_option("--n", generate_args.n, "node count");
    generate->add_option("--p", generate_args.p, "er edge probability");
    generate->add_option("--m", generate_args.m, "ba attachment count");
    generate->add_option("--k", generate_args.k, "ws mean degree (even)");
    generate->add_option("--beta", generate_args.beta, "ws rewiring probability");
    generate->add_option("--seed", generate_args.seed);
    generate->add_option("--out", generate_args.out, "edge list path");
    generate->add_option("--manifest", generate_args.manifest, "json list of specs");
    generate->add_option("--out-dir", generate_args.out_dir, "directory for manifest output");

    CatalogArgs catalog_args;
    auto* catalog = app.add_subcommand("catalog", "dump the isomorphism-class catalog");
    catalog->add_option("--max-k", catalog_args.max_k, "1..6");
    catalog->add_option("--out", catalog_args.out, "catalog csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n' << app.help() << '\n';
        return 2;
    }

    try {
        if (*clean) return run_clean(clean_args);
        if (*stats) return run_stats(stats_args);
        if (*census) return run_census(census_args);
        if (*signature) return run_signature(signature_args);
        if (*baselines) return run_baselines(baselines_args);
        if (*compare) return run_compare(compare_args);
        if (*infer) return run_infer(infer_args);
        if (*generate) return run_generate(generate_args);
        if (*catalog) return run_catalog(catalog_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
