// Times the serial reference path against the OpenMP path on the two
// data-parallel surfaces: batch dual scoring and harness repeats. Also
// verifies that both paths produce identical bytes, which is the contract
// the unit tests pin down.
//
// Usage: pril_bench [threads]   (default: the OpenMP thread limit)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

#include "pril/datagen.hpp"
#include "pril/harness.hpp"
#include "pril/kernel_pril.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double run_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    if (argc > 1) threads = std::atoi(argv[1]);
    if (threads < 1) threads = 1;
    std::printf("comparing workers=1 against workers=%d\n\n", threads);

    {
        pril::LabeledDataset train = pril::synth_generate(1500, 7);
        pril::Rng label_rng(11);
        train = pril::mix_partial(train, 1.0, 1, label_rng);
        pril::DualRankModel model =
            pril::kpril_init(train.dim(), train.k, pril::Kernel{pril::Kernel::Kind::Poly, 2});
        for (std::size_t i = 0; i < train.size(); ++i) {
            pril::kpril_update(model, train.instances[i], train.intervals[i]);
        }
        pril::LabeledDataset queries = pril::synth_generate(20000, 8);

        std::vector<double> serial, parallel;
        double t_serial = run_ms([&] { serial = pril::dual_scores(model, queries.instances, 1); });
        double t_parallel =
            run_ms([&] { parallel = pril::dual_scores(model, queries.instances, threads); });
        double max_diff = 0.0;
        for (std::size_t i = 0; i < serial.size(); ++i) {
            max_diff = std::max(max_diff, std::fabs(serial[i] - parallel[i]));
        }
        std::printf("batch dual scoring   %zu queries x %zu support\n", queries.size(),
                    model.support.size());
        std::printf("  serial   %8.1f ms\n", t_serial);
        std::printf("  parallel %8.1f ms   speedup %.2fx   max |diff| %g\n\n", t_parallel,
                    t_serial / t_parallel, max_diff);
    }

    {
        pril::RunConfig cfg;
        cfg.algorithm = pril::Algorithm::Pril;
        cfg.rounds = 2000;
        cfg.repeats = 16;
        cfg.seed = 42;

        pril::MetricSeries serial, parallel;
        double t_serial = run_ms([&] {
            cfg.workers = 1;
            serial = pril::run_experiment(cfg);
        });
        double t_parallel = run_ms([&] {
            cfg.workers = threads;
            parallel = pril::run_experiment(cfg);
        });
        double max_diff = 0.0;
        for (std::size_t t = 0; t < serial.values.size(); ++t) {
            max_diff = std::max(max_diff, std::fabs(serial.values[t] - parallel.values[t]));
        }
        std::printf("harness repeats      %d repeats x %d rounds\n", cfg.repeats, cfg.rounds);
        std::printf("  serial   %8.1f ms\n", t_serial);
        std::printf("  parallel %8.1f ms   speedup %.2fx   max |diff| %g\n", t_parallel,
                    t_serial / t_parallel, max_diff);
    }
    return 0;
}
