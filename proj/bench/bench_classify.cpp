// Timing comparison of the replication-histogram kernels: the serial
// reference rescan against the bitset kernel on 1 thread and on all threads.
// Not a correctness test (the test suite covers agreement); this reports
// what the parallel kernels buy on realistic inputs.
//
// Usage: bench_classify [n]   (modulus for the largest case, default 101)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "adesign/builders.hpp"
#include "adesign/graphs.hpp"
#include "adesign/incidence.hpp"

using namespace adesign;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void run_case(const std::string& label, const IncidenceStructure& S, int t) {
    std::printf("%-34s v=%-5lld b=%-7lld t=%d\n", label.c_str(), S.points(), S.block_count(), t);

    auto t0 = Clock::now();
    ReplicationHistogram ref = replication_histogram_reference(S, t);
    double ref_ms = ms_since(t0);
    std::printf("  %-28s %10.2f ms\n", "serial reference", ref_ms);

#ifdef _OPENMP
    int max_threads = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    t0 = Clock::now();
    ReplicationHistogram one = replication_histogram(S, t);
    double one_ms = ms_since(t0);
    std::printf("  %-28s %10.2f ms   (x%.1f vs reference)\n", "bitset kernel, 1 thread", one_ms,
                ref_ms / one_ms);

#ifdef _OPENMP
    omp_set_num_threads(max_threads);
    t0 = Clock::now();
    ReplicationHistogram par = replication_histogram(S, t);
    double par_ms = ms_since(t0);
    std::printf("  %-28s %10.2f ms   (x%.1f vs 1 thread, %d threads)\n", "bitset kernel, parallel",
                par_ms, one_ms / par_ms, max_threads);
    if (!(par == one)) std::printf("  MISMATCH between thread counts\n");
#endif
    if (!(one == ref)) std::printf("  MISMATCH against the reference\n");
}

}  // namespace

int main(int argc, char** argv) {
    long long n = (argc > 1) ? std::atoll(argv[1]) : 101;
    if (n < 9 || n % 2 == 0) {
        std::fprintf(stderr, "need an odd n >= 9\n");
        return 2;
    }

    run_case("bose-mod n=15", bose_modified(15).structure, 2);
    run_case("paley-union q=25", paley_union(paley_graph(25)).structure, 3);
    run_case("contraction-cover q=7 (full)", contraction_minimal_covering(7).full.structure, 3);
    run_case("pair-union-example n=" + std::to_string(n),
             pair_union_counterexample(n).structure, 2);
    return 0;
}
