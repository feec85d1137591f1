// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "wassbound/ar1.hpp"
#include "wassbound/bound.hpp"
#include "wassbound/partitions.hpp"
#include "wassbound/qbound.hpp"
#include "wassbound/wasserstein.hpp"

using namespace wassbound;

namespace {

const CompiledPartitions& t9_parts() {
    static const CompiledPartitions p = [] {
        PartitionFilter f;
        f.min_block_size = 2;
        f.even_blocks_only = true;
        return compile_partitions(cached_partitions(IndexedTable(4, 2), f), InnovationModel::student_t(9));
    }();
    return p;
}

void d_table(benchmark::State& st, ExecPolicy policy) {
    const int m = static_cast<int>(st.range(0));
    const MDepApprox approx(AR1Model(0.5, InnovationModel::student_t(9)), m);
    const CumYEvaluator cy(approx);
    for (auto _ : st) benchmark::DoNotOptimize(d_tilde_table(cy, t9_parts(), 1, m + 1, policy));
}

void w1(benchmark::State& st, ExecPolicy policy) {
    const AR1Model model(0.5, InnovationModel::student_t(9));
    for (auto _ : st) benchmark::DoNotOptimize(estimate_w1(model, 0, 50, 20000, 2, 7, policy).mean);
}

void grid(benchmark::State& st, ExecPolicy policy) {
    const AR1Model model(0.5, InnovationModel::student_t(9));
    const std::vector<int> ns{25, 100, 500, 2000};
    for (auto _ : st) benchmark::DoNotOptimize(optimize_m_many(model, 1, ns, 30, QMethod::method2, policy));
}

}  // namespace

BENCHMARK_CAPTURE(d_table, serial, ExecPolicy::serial)->Arg(4)->Arg(12)->Arg(30);
BENCHMARK_CAPTURE(d_table, parallel, ExecPolicy::parallel)->Arg(4)->Arg(12)->Arg(30);
BENCHMARK_CAPTURE(w1, serial, ExecPolicy::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(w1, parallel, ExecPolicy::parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(grid, serial, ExecPolicy::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(grid, parallel, ExecPolicy::parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
