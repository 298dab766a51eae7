// Times the serial reference kernels against their OpenMP counterparts and
// checks that both produce identical results.
//
//   mjack_bench [--n 6] [--m 5] [--r 7] [--repeat 3]

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mjack/connection.hpp"
#include "mjack/exec.hpp"
#include "mjack/fh_algebra.hpp"
#include "mjack/matchings.hpp"
#include "mjack/symfunc.hpp"

namespace {

template <class Result>
double best_of(int repeat, const std::function<Result()>& run, std::optional<Result>& out) {
    double best = 1e300;
    for (int i = 0; i < repeat; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        out = run();
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        best = std::min(best, dt.count());
    }
    return best;
}

template <class Result>
bool compare(const std::string& label, int repeat, const std::function<Result(mjack::Exec)>& kernel) {
    std::optional<Result> serial, parallel;
    // One untimed pass fills the shared memo tables that both kernels read.
    kernel(mjack::Exec::Serial);
    const double ts = best_of<Result>(repeat, [&] { return kernel(mjack::Exec::Serial); }, serial);
    const double tp = best_of<Result>(repeat, [&] { return kernel(mjack::Exec::Parallel); }, parallel);
    const bool same = *serial == *parallel;
    std::printf("%-28s serial %9.4fs  parallel %9.4fs  speedup %5.2fx  %s\n", label.c_str(), ts, tp,
                tp > 0 ? ts / tp : 0.0, same ? "identical" : "MISMATCH");
    return same;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serial vs parallel kernel timings"};
    int n = 6, m = 5, r = 7, repeat = 3;
    app.add_option("--n", n, "Size for the coefficient table");
    app.add_option("--m", m, "Size for the matching counts");
    app.add_option("--r", r, "Rank for the top-degree structure constants");
    app.add_option("--repeat", repeat, "Runs per kernel; the best time is reported");
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d\n", mjack::worker_count());
    // Jack polynomials are shared by both kernels, so build them outside the timing.
    mjack::JackStore::instance().degree(n);

    bool ok = true;
    ok &= compare<mjack::CoeffTable>("coeff table n=" + std::to_string(n), repeat,
                                     [n](mjack::Exec e) { return mjack::compute_coeff_table(n, e); });
    ok &= compare<mjack::CountTable>("matching counts n=" + std::to_string(m), repeat,
                                     [m](mjack::Exec e) { return mjack::count_table(m, false, e); });
    ok &= compare<mjack::CountTable>("bipartite counts n=" + std::to_string(m), repeat,
                                     [m](mjack::Exec e) { return mjack::count_table(m, true, e); });
    ok &= compare<std::vector<mjack::RhoTopRow>>("top structure consts r=" + std::to_string(r), repeat,
                                                 [r](mjack::Exec e) { return mjack::rho_top_table(r, e); });
    return ok ? 0 : 1;
}
