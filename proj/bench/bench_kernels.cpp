// Kernel benchmark: serial full-enumeration references against the
// orbit-reduced OpenMP kernels, plus a parallel-vs-serial search run.
// Results double as a consistency check; mismatching values abort.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <omp.h>

#include "divlab/constructions.hpp"
#include "divlab/family.hpp"
#include "divlab/search.hpp"
#include "divlab/serial_ref.hpp"

using namespace divlab;

namespace {

double time_of(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void require_equal(std::uint64_t a, std::uint64_t b, const char* what) {
    if (a != b) {
        std::fprintf(stderr, "mismatch in %s: %llu vs %llu\n", what, static_cast<unsigned long long>(a),
                     static_cast<unsigned long long>(b));
        std::exit(1);
    }
}

void bench_diversity(const char* name, const Family& f, int ell) {
    std::uint64_t v_full = 0, v_orbit1 = 0, v_orbitN = 0;
    const double t_full = time_of([&] { v_full = ref::diversity_full(f, ell); });
    omp_set_num_threads(1);
    const double t_orbit1 = time_of([&] { v_orbit1 = diversity(f, ell); });
    omp_set_num_threads(omp_get_num_procs());
    const double t_orbitN = time_of([&] { v_orbitN = diversity(f, ell); });
    require_equal(v_full, v_orbit1, name);
    require_equal(v_full, v_orbitN, name);
    std::printf("%-34s ell=%d  full-enum %8.3fs   orbit x1 %8.3fs   orbit x%d %8.3fs   value %llu\n", name, ell,
                t_full, t_orbit1, omp_get_num_procs(), t_orbitN, static_cast<unsigned long long>(v_full));
}

void bench_saturation(const char* name, const Family& f) {
    bool s_ref = false, s_par = false;
    const double t_ref = time_of([&] { s_ref = ref::is_saturated_serial(f); });
    omp_set_num_threads(omp_get_num_procs());
    const double t_par = time_of([&] { s_par = is_saturated(f, 500'000'000); });
    require_equal(s_ref, s_par, name);
    std::printf("%-34s        serial    %8.3fs   parallel x%d %6.3fs   saturated %s\n", name, t_ref,
                omp_get_num_procs(), t_par, s_ref ? "yes" : "no");
}

void bench_search() {
    SearchTask task;
    task.k = 3;
    task.ell = 2;
    task.tau_min = 3;
    task.n_max = 8;
    task.seed_gamma = 2;
    task.jobs = 1;
    SearchReport r1, rn;
    const double t1 = time_of([&] { r1 = run_search(task); });
    task.jobs = omp_get_num_procs();
    const double tn = time_of([&] { rn = run_search(task); });
    require_equal(r1.optimum, rn.optimum, "search optimum");
    require_equal(r1.nodes_explored, rn.nodes_explored, "search nodes");
    std::printf("%-34s        jobs=1    %8.3fs   jobs=%d   %8.3fs   nodes %llu\n", "search k=3 ell=2 scope 8", t1,
                omp_get_num_procs(), tn, static_cast<unsigned long long>(r1.nodes_explored));
}

} // namespace

int main() {
    std::printf("hardware threads: %d\n\n", omp_get_num_procs());

    // wide ground set with a 19-vertex support: the orbit reduction skips
    // most of the C(40,ell) candidate sets
    Family wide = Family::make(40, 10, complete_kgraph(19, 10).edges);
    bench_diversity("C([19],10) embedded in [40]", wide, 2);
    bench_diversity("C([19],10) embedded in [40]", wide, 3);
    bench_diversity("10-triple wreath triangle", t0_triangle(), 5);
    bench_diversity("pentagon cycle product", pentagon_cycle_product(), 4);

    bench_saturation("7-line generated family (24,6)", enumerate_generated(generated(fano(), 24, 6), 200'000'000));

    bench_search();
    return 0;
}
