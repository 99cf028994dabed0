// Compares the serial reference restart loop with the OpenMP one on a
// workload where every restart runs to completion (W5 has no planar
// realization, so no restart can stop the search early).

#include <udg/constructors.hh>
#include <udg/degenerate.hh>
#include <udg/embed.hh>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace
{
    template <typename F>
    auto time_ms(F && f) -> double
    {
        auto start = std::chrono::steady_clock::now();
        f();
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
}

auto main(int argc, char * argv[]) -> int
{
    int threads = 4;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    if (argc > 1)
        threads = std::max(1, std::atoi(argv[1]));

    udg::EmbedOptions options;
    options.restarts = 500;
    auto w5 = udg::wheel(5);

    udg::EmbedReport serial, parallel;
    double serial_ms = time_ms([&] { serial = udg::embed_search_serial(w5, 2, options); });
    options.threads = threads;
    double parallel_ms = time_ms([&] { parallel = udg::embed_search(w5, 2, options); });

    std::printf("W5 in R^2, %d restarts\n", options.restarts);
    std::printf("  serial     %9.1f ms  best residual %.6g\n", serial_ms, serial.best_residual);
    std::printf("  %2d threads %9.1f ms  best residual %.6g  speedup %.2fx\n", threads, parallel_ms,
            parallel.best_residual, serial_ms / parallel_ms);

    udg::DegenerateSearchOptions degenerate;
    degenerate.budget = 200;
    degenerate.embed.restarts = 50;
    double degenerate_serial_ms = time_ms([&] { (void) udg::degenerate_representation_search(udg::wheel(6), 2, degenerate); });
    degenerate.threads = threads;
    double degenerate_parallel_ms = time_ms([&] { (void) udg::degenerate_representation_search(udg::wheel(6), 2, degenerate); });
    std::printf("degenerate search on W6 in R^2\n");
    std::printf("  serial     %9.1f ms\n", degenerate_serial_ms);
    std::printf("  %2d threads %9.1f ms  speedup %.2fx\n", threads, degenerate_parallel_ms,
            degenerate_serial_ms / degenerate_parallel_ms);

    return serial.best_residual == parallel.best_residual ? 0 : 1;
}
