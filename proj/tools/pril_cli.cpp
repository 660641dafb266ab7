#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "pril/bounds.hpp"
#include "pril/datagen.hpp"
#include "pril/harness.hpp"

namespace {

using pril::Algorithm;
using pril::Kernel;
using pril::RunConfig;

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

Kernel parse_kernel(const std::string& s) {
    if (s == "dot") return Kernel{Kernel::Kind::Dot, 2};
    if (s.rfind("poly", 0) == 0 && s.size() > 4) {
        int degree = 0;
        try {
            std::size_t used = 0;
            degree = std::stoi(s.substr(4), &used);
            if (used != s.size() - 4) degree = 0;
        } catch (const std::exception&) {
            degree = 0;
        }
        if (degree >= 1) return Kernel{Kernel::Kind::Poly, degree};
    }
    throw std::invalid_argument("kernel must be 'dot' or 'polyN' with N >= 1, got '" + s + "'");
}

// Shared flags of the run / sweep / compare subcommands.
struct RunOpts {
    std::string algorithm = "pril";
    std::string dataset;
    std::string kernel;
    int rounds = 2000;
    int repeats = 10;
    std::uint64_t seed = 0;
    std::string eval = "interval";
    double fraction = 1.0;
    int label_type = 1;
    double eta = 0.1;
    double lr = 0.1;
    int workers = 1;
    std::size_t n = 0;
    int k = 0;
    std::string target_column;
    std::vector<double> bins;
    int equal_bins = 0;
    bool normalize = false;
    bool one_hot = false;
    std::string out;
    bool manifest = false;
};

// Registers the options every experiment subcommand understands. The
// returned pointer is the --fraction option, whose presence decides
// whether a file dataset's stored intervals get replaced.
CLI::Option* add_run_options(CLI::App* cmd, RunOpts& o) {
    cmd->add_option("--dataset", o.dataset, "'synth' or a CSV path")->required();
    cmd->add_option("--kernel", o.kernel, "dot or polyN (kernel-pril only)");
    cmd->add_option("--rounds", o.rounds, "Trials per repeat");
    cmd->add_option("--repeats", o.repeats, "Independent repeats to average");
    cmd->add_option("--seed", o.seed, "Base seed; repeat r uses seed XOR r");
    cmd->add_option("--eval", o.eval, "Loss protocol for interval learners")
        ->check(CLI::IsMember({"interval", "exact"}));
    CLI::Option* frac = cmd->add_option(
        "--fraction", o.fraction,
        "Fraction of rows given interval labels (forces relabeling of file datasets)");
    cmd->add_option("--label-type", o.label_type, "Interval style: 1 coin-flip side, 2 both sides")
        ->check(CLI::IsMember({1, 2}));
    cmd->add_option("--eta", o.eta, "mpril learning rate");
    cmd->add_option("--lr", o.lr, "widrow-hoff learning rate");
    cmd->add_option("--workers", o.workers, "Threads across repeats (output is identical for any value)");
    cmd->add_option("--n", o.n, "Synthetic dataset size (default: rounds)");
    cmd->add_option("--k", o.k, "Override the rank count of a file dataset");
    cmd->add_option("--target-column", o.target_column, "Label column of a plain CSV (default: last)");
    cmd->add_option("--bins", o.bins, "Ascending cut points binning a plain CSV target")->expected(-1);
    cmd->add_option("--equal-bins", o.equal_bins, "Equal-width bin count for a plain CSV target");
    cmd->add_flag("--normalize", o.normalize, "Standardize features of a plain CSV");
    cmd->add_flag("--one-hot", o.one_hot, "One-hot encode non-numeric CSV columns instead of dropping");
    cmd->add_option("--out", o.out, "Output CSV path")->required();
    cmd->add_flag("--manifest", o.manifest, "Write <out>.manifest sidecar");
    return frac;
}

RunConfig make_config(const RunOpts& o, bool fraction_given) {
    RunConfig cfg;
    cfg.algorithm = pril::algorithm_from_name(o.algorithm);
    if (!o.kernel.empty()) {
        cfg.kernel = parse_kernel(o.kernel);
    } else if (cfg.algorithm == Algorithm::KernelPril) {
        cfg.kernel = Kernel{};  // dot product unless told otherwise
    }
    if (o.dataset == "synth") {
        cfg.dataset = pril::DatasetKind::Synth;
        const bool csv_opts = !o.target_column.empty() || !o.bins.empty() || o.equal_bins != 0 ||
                              o.normalize || o.one_hot;
        if (csv_opts) throw std::invalid_argument("CSV shaping options require a file dataset");
        cfg.remix_labels = true;
    } else {
        cfg.dataset = pril::DatasetKind::File;
        cfg.dataset_path = o.dataset;
        cfg.remix_labels = fraction_given;
        cfg.csv.target_column = o.target_column;
        cfg.csv.bin_edges = o.bins;
        cfg.csv.equal_width_bins = o.equal_bins;
        cfg.csv.normalize = o.normalize;
        cfg.csv.one_hot = o.one_hot;
    }
    cfg.k_override = o.k;
    cfg.synth_n = o.n;
    cfg.fraction_partial = o.fraction;
    cfg.label_type = o.label_type;
    cfg.rounds = o.rounds;
    cfg.repeats = o.repeats;
    cfg.seed = o.seed;
    cfg.eta = o.eta;
    cfg.lr = o.lr;
    cfg.eval = o.eval == "exact" ? pril::EvalMode::Exact : pril::EvalMode::Interval;
    cfg.workers = o.workers;
    return cfg;
}

std::vector<std::pair<std::string, std::string>> manifest_common(const std::string& command,
                                                                 const RunOpts& o) {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("command", command);
    kv.emplace_back("algorithm", o.algorithm);
    kv.emplace_back("dataset", o.dataset);
    if (!o.kernel.empty()) kv.emplace_back("kernel", o.kernel);
    kv.emplace_back("rounds", std::to_string(o.rounds));
    kv.emplace_back("repeats", std::to_string(o.repeats));
    kv.emplace_back("seed", std::to_string(o.seed));
    kv.emplace_back("eval", o.eval);
    kv.emplace_back("fraction", fmt_g(o.fraction));
    kv.emplace_back("label_type", std::to_string(o.label_type));
    kv.emplace_back("eta", fmt_g(o.eta));
    kv.emplace_back("lr", fmt_g(o.lr));
    kv.emplace_back("workers", std::to_string(o.workers));
    if (o.n) kv.emplace_back("n", std::to_string(o.n));
    if (o.k) kv.emplace_back("k", std::to_string(o.k));
    if (!o.target_column.empty()) kv.emplace_back("target_column", o.target_column);
    for (double b : o.bins) kv.emplace_back("bin_edge", fmt_g(b));
    if (o.equal_bins) kv.emplace_back("equal_bins", std::to_string(o.equal_bins));
    kv.emplace_back("normalize", o.normalize ? "1" : "0");
    kv.emplace_back("one_hot", o.one_hot ? "1" : "0");
    kv.emplace_back("out", o.out);
    return kv;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Online ordinal classification from interval-labeled data"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen-synth", "Generate the synthetic 5-rank dataset");
    std::size_t gen_n = 1000;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    bool gen_manifest = false;
    gen->add_option("--n", gen_n, "Rows to generate")->required();
    gen->add_option("--seed", gen_seed, "Generator seed");
    gen->add_option("--out", gen_out, "Output CSV path")->required();
    gen->add_flag("--manifest", gen_manifest, "Write <out>.manifest sidecar");

    auto* mk = app.add_subcommand("make-intervals",
                                  "Replace a dataset's labels with interval labels");
    std::string mk_in, mk_out;
    int mk_type = 1;
    double mk_fraction = 1.0;
    std::uint64_t mk_seed = 0;
    int mk_k = 0;
    bool mk_manifest = false;
    mk->add_option("--in", mk_in, "Input dataset CSV")->required();
    mk->add_option("--type", mk_type, "Interval style: 1 coin-flip side, 2 both sides")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    mk->add_option("--fraction", mk_fraction, "Fraction of rows widened");
    mk->add_option("--seed", mk_seed, "Labeling seed");
    mk->add_option("--k", mk_k, "Override the rank count");
    mk->add_option("--out", mk_out, "Output dataset CSV")->required();
    mk->add_flag("--manifest", mk_manifest, "Write <out>.manifest sidecar");

    RunOpts o;
    auto* run = app.add_subcommand("run", "Run one algorithm and write its learning curve");
    run->add_option("--algorithm", o.algorithm,
                    "pril, kernel-pril, mpril, prank, widrow-hoff, or mc-perceptron")
        ->required();
    CLI::Option* run_fraction = add_run_options(run, o);

    auto* sweep = app.add_subcommand("sweep", "Learning curves across partial-label fractions");
    sweep->add_option("--algorithm", o.algorithm,
                      "pril, kernel-pril, mpril, prank, widrow-hoff, or mc-perceptron");
    std::vector<double> sweep_fracs;
    sweep->add_option("--fractions", sweep_fracs, "Partial-label fractions to sweep")
        ->required()
        ->expected(-1);
    add_run_options(sweep, o);

    auto* cmp = app.add_subcommand("compare", "Algorithms side by side on exact rank error");
    std::vector<std::string> cmp_algs;
    cmp->add_option("--algorithms", cmp_algs, "Algorithms to compare")->required()->expected(-1);
    add_run_options(cmp, o);

    auto* bnd = app.add_subcommand("bounds", "Print the loss guarantees for given parameters");
    pril::BoundInputs bi;
    std::string bnd_out;
    bool bnd_manifest = false;
    bnd->add_option("--r2", bi.r_sq, "Max squared instance norm R^2")->required();
    bnd->add_option("--k", bi.k, "Rank count")->required();
    bnd->add_option("--c", bi.c, "Min interval width across the stream");
    bnd->add_option("--gamma", bi.gamma, "Comparator margin")->required();
    bnd->add_option("--d-hinge", bi.d_hinge, "Comparator hinge deficit D");
    bnd->add_option("--lambda", bi.lambda, "Comparator norm cap (regret)");
    bnd->add_option("--t", bi.t, "Horizon T (regret)");
    bnd->add_option("--dim", bi.dim, "Feature dimension (multiplicative)");
    bnd->add_option("--out", bnd_out, "Output CSV path (default: stdout)");
    bnd->add_flag("--manifest", bnd_manifest, "Write <out>.manifest sidecar");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (gen->parsed()) {
            pril::LabeledDataset ds = pril::synth_generate(gen_n, gen_seed);
            pril::write_dataset_csv(ds, gen_out);
            if (gen_manifest) {
                pril::write_manifest(gen_out + ".manifest",
                                     {{"command", "gen-synth"},
                                      {"n", std::to_string(gen_n)},
                                      {"seed", std::to_string(gen_seed)},
                                      {"out", gen_out}});
            }
            std::printf("wrote %zu rows to %s\n", ds.size(), gen_out.c_str());
        } else if (mk->parsed()) {
            pril::LabeledDataset ds = pril::load_dataset(mk_in, mk_k, {});
            pril::Rng rng(mk_seed);
            pril::LabeledDataset out_ds = pril::mix_partial(ds, mk_fraction, mk_type, rng);
            pril::write_dataset_csv(out_ds, mk_out);
            if (mk_manifest) {
                pril::write_manifest(mk_out + ".manifest",
                                     {{"command", "make-intervals"},
                                      {"in", mk_in},
                                      {"type", std::to_string(mk_type)},
                                      {"fraction", fmt_g(mk_fraction)},
                                      {"seed", std::to_string(mk_seed)},
                                      {"out", mk_out}});
            }
            std::printf("wrote %zu rows to %s\n", out_ds.size(), mk_out.c_str());
        } else if (run->parsed()) {
            RunConfig cfg = make_config(o, run_fraction->count() > 0);
            pril::MetricSeries series = pril::run_experiment(cfg);
            pril::write_series_csv(series, o.out);
            if (o.manifest) pril::write_manifest(o.out + ".manifest", manifest_common("run", o));
            std::printf("%s: final avg_mae %.6g +/- %.6g over %d repeats\n", o.algorithm.c_str(),
                        series.final_mean, series.final_std, o.repeats);
        } else if (sweep->parsed()) {
            RunConfig cfg = make_config(o, true);
            pril::SweepResult res = pril::sweep_fractions(cfg, sweep_fracs);
            pril::write_sweep_csv(res, o.out);
            if (o.manifest) {
                auto kv = manifest_common("sweep", o);
                for (double f : sweep_fracs) kv.emplace_back("sweep_fraction", fmt_g(f));
                pril::write_manifest(o.out + ".manifest", kv);
            }
            for (std::size_t i = 0; i < res.fractions.size(); ++i) {
                std::printf("fraction %g: final avg_mae %.6g +/- %.6g\n", res.fractions[i],
                            res.series[i].final_mean, res.series[i].final_std);
            }
        } else if (cmp->parsed()) {
            RunConfig cfg = make_config(o, true);
            std::vector<Algorithm> algs;
            for (const std::string& name : cmp_algs) algs.push_back(pril::algorithm_from_name(name));
            pril::CompareResult res = pril::compare_algorithms(cfg, algs);
            pril::write_compare_csv(res, o.out);
            if (o.manifest) {
                auto kv = manifest_common("compare", o);
                for (const std::string& name : cmp_algs) kv.emplace_back("compare_algorithm", name);
                pril::write_manifest(o.out + ".manifest", kv);
            }
            for (std::size_t i = 0; i < res.algorithms.size(); ++i) {
                std::printf("%s: final rank error %.6g +/- %.6g\n",
                            pril::algorithm_name(res.algorithms[i]).c_str(),
                            res.series[i].final_mean, res.series[i].final_std);
            }
        } else if (bnd->parsed()) {
            if (bnd_manifest && bnd_out.empty()) {
                throw std::invalid_argument("--manifest needs --out");
            }
            std::FILE* f = stdout;
            if (!bnd_out.empty()) {
                f = std::fopen(bnd_out.c_str(), "w");
                if (!f) throw std::runtime_error("cannot write " + bnd_out);
            }
            std::fprintf(f, "bound,value\n");
            std::fprintf(f, "ideal_mistake,%.17g\n", pril::ideal_mistake_bound(bi));
            std::fprintf(f, "general_mistake,%.17g\n", pril::general_mistake_bound(bi));
            std::fprintf(f, "regret,%.17g\n", pril::regret_bound(bi));
            if (bi.gamma <= 1.0) {
                std::fprintf(f, "mpril_mistake,%.17g\n", pril::mpril_mistake_bound(bi));
            } else {
                std::fprintf(stderr, "note: multiplicative bound skipped, needs gamma <= 1\n");
            }
            if (f != stdout) std::fclose(f);
            if (bnd_manifest) {
                pril::write_manifest(bnd_out + ".manifest",
                                     {{"command", "bounds"},
                                      {"r2", fmt_g(bi.r_sq)},
                                      {"k", std::to_string(bi.k)},
                                      {"c", std::to_string(bi.c)},
                                      {"gamma", fmt_g(bi.gamma)},
                                      {"d_hinge", fmt_g(bi.d_hinge)},
                                      {"lambda", fmt_g(bi.lambda)},
                                      {"t", fmt_g(bi.t)},
                                      {"dim", std::to_string(bi.dim)},
                                      {"out", bnd_out}});
            }
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
