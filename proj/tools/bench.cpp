// Serial vs OpenMP throughput of the batch kernels: centroid type-reduction
// over many FOUs, pairwise similarity matrices, and repeated scenario solves.

#include "molop/batch.hpp"
#include "molop/pr_engine.hpp"
#include "molop/report.hpp"
#include "molop/rng.hpp"
#include "molop/scheduler.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#ifdef MOLOP_HAVE_OPENMP
#include <omp.h>
#endif

using namespace molop;
using clock_type = std::chrono::steady_clock;

namespace {

IT2TrapezoidFOU random_fou(Rng& rng, const DomainScale& scale) {
    double c[4];
    for (double& v : c)
        v = rng.uniform(scale.min, scale.max);
    std::sort(c, c + 4);
    c[0] = std::max(scale.min, c[0] - 0.5);
    c[3] = std::min(scale.max, c[3] + 0.5);
    TrapezoidMF umf{c[0], c[1], c[2], c[3], 1.0};
    const double bl = rng.uniform(umf.b, 0.5 * (umf.b + umf.c));
    const double cl = rng.uniform(0.5 * (umf.b + umf.c), umf.c);
    TrapezoidMF lmf{rng.uniform(umf.a, bl), bl, cl, rng.uniform(cl, umf.d), rng.uniform(0.3, 1.0)};
    return {umf, lmf};
}

template <typename F> double time_ms(F&& fn) {
    const auto t0 = clock_type::now();
    fn();
    const auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-32s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

} // namespace

int main(int argc, char** argv) {
    int n_fous = 20000;
    int n_words = 160;
    if (argc > 1)
        n_fous = std::stoi(argv[1]);
    if (argc > 2)
        n_words = std::stoi(argv[2]);

#ifdef MOLOP_HAVE_OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serial code\n");
#endif

    Rng rng(1234);
    const DomainScale scale;
    const DomainGrid grid;
    std::vector<IT2TrapezoidFOU> fous;
    fous.reserve(n_fous);
    for (int i = 0; i < n_fous; ++i)
        fous.push_back(random_fou(rng, scale));
    const std::vector<IT2TrapezoidFOU> words(fous.begin(), fous.begin() + std::min<std::size_t>(n_words, fous.size()));

    std::printf("%-32s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    std::vector<CentroidInterval> c1, c2;
    const double t_cs = time_ms([&] { c1 = batch::centroids(fous, grid, Exec::Serial); });
    const double t_cp = time_ms([&] { c2 = batch::centroids(fous, grid, Exec::Parallel); });
    row("centroid type-reduction", t_cs, t_cp);
    if (!std::equal(c1.begin(), c1.end(), c2.begin(),
                    [](const CentroidInterval& a, const CentroidInterval& b) {
                        return a.left == b.left && a.right == b.right;
                    })) {
        std::fprintf(stderr, "mismatch between serial and parallel centroids\n");
        return 1;
    }

    std::vector<double> m1, m2;
    const double t_ms = time_ms([&] { m1 = batch::similarity_matrix(words, words, grid, Exec::Serial); });
    const double t_mp = time_ms([&] { m2 = batch::similarity_matrix(words, words, grid, Exec::Parallel); });
    row("similarity matrix", t_ms, t_mp);
    if (m1 != m2) {
        std::fprintf(stderr, "mismatch between serial and parallel similarity matrices\n");
        return 1;
    }

    const auto fixtures = std::filesystem::path(MOLOP_FIXTURES_DIR);
    const auto cb = Codebook::load(fixtures / "codebook_hma.json");
    const auto rb = RuleBase::load(fixtures / "rulebase_hma_results.json");
    auto sc = SchedulingScenario::load(fixtures / "welding_scenario.json");
    // replicate the welder list to give the per-welder loop real width
    std::vector<WelderEntry> welders;
    std::vector<int> pairing;
    for (int k = 0; k < 100; ++k)
        for (std::size_t i = 0; i < 5; ++i) {
            WelderEntry w = sc.welders[i];
            w.id = k * 5 + static_cast<int>(i) + 1;
            welders.push_back(w);
            pairing.push_back(static_cast<int>(i) + 1);
        }
    sc.welders = welders;
    sc.two_tuple_pairing = pairing;

    EngineConfig serial_cfg;
    serial_cfg.exec = Exec::Serial;
    EngineConfig parallel_cfg;
    parallel_cfg.exec = Exec::Parallel;
    RecommendationReport r1, r2;
    const double t_ss = time_ms([&] { r1 = solve_scenario(sc, rb, cb, serial_cfg); });
    const double t_sp = time_ms([&] { r2 = solve_scenario(sc, rb, cb, parallel_cfg); });
    row("scenario solve (500 welders)", t_ss, t_sp);
    if (render_report(r1, ReportFormat::Structured) != render_report(r2, ReportFormat::Structured)) {
        std::fprintf(stderr, "mismatch between serial and parallel scenario reports\n");
        return 1;
    }
    return 0;
}
