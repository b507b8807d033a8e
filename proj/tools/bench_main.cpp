#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>

#include "semigor/harness.hpp"
#include "semigor/json_io.hpp"
#include "semigor/parallel.hpp"

using namespace semigor;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// The inverse-window scan is the data-parallel kernel inside every trace
// computation. Rings are pre-warmed first so both timings measure the same
// filter work, not the shared (sequential) slice construction.
struct ScanWorkload {
    std::vector<RingPtr> rings;
    std::vector<MonomialModule> modules;
};

ScanWorkload build_scan_workload(int repeat) {
    ScanWorkload w;
    SplitMix64 rng(7);
    Limits limits;
    limits.inverse_slack = 160;
    limits.degree_cap = 4096;
    for (int i = 0; i < 3; ++i) {
        RingPtr ring = random_normal_2d(rng, 12, 3, limits);
        ring->count_of_degree(1200);  // pre-warm the slice memo
        w.rings.push_back(ring);
        CanonicalModule omega = canonical_module(ring);
        for (int m = 0; m < 4 * repeat; ++m) {
            Coord shift = rng.range(0, 3);
            std::vector<Vec> gens;
            for (const Vec& g : omega.module.generators())
                gens.push_back(vec_sub(g, vec_scale(shift, ring->minimal_generators().front())));
            gens.push_back(ring->minimal_generators()[rng.below(
                ring->minimal_generators().size())]);
            w.modules.push_back(minimize_generators(ring, gens));
        }
    }
    return w;
}

std::string scan_workload_run(const ScanWorkload& w, bool parallel) {
    par::set_enabled(parallel);
    std::string fingerprint;
    for (const MonomialModule& m : w.modules) fingerprint += trace_module(m).describe() + ";";
    return fingerprint;
}

}  // namespace

int main(int argc, char** argv) {
    int count = 200;
    int repeat = 2;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--count" && i + 1 < argc) count = std::stoi(argv[++i]);
        else if (arg == "--repeat" && i + 1 < argc) repeat = std::stoi(argv[++i]);
        else {
            std::cerr << "usage: semigor-bench [--count N] [--repeat N]\n";
            return 2;
        }
    }

    std::cout << "openmp: " << (par::available() ? "yes" : "no")
              << ", max threads: " << par::max_threads() << "\n\n";

    CampaignConfig config;
    config.count = count;

    config.parallel = false;
    auto t0 = std::chrono::steady_clock::now();
    CampaignReport serial_report = run_campaign(config);
    double campaign_serial = seconds_since(t0);

    config.parallel = true;
    t0 = std::chrono::steady_clock::now();
    CampaignReport parallel_report = run_campaign(config);
    double campaign_parallel = seconds_since(t0);

    bool campaign_match = serial_report.digest == parallel_report.digest;

    ScanWorkload workload = build_scan_workload(repeat);

    t0 = std::chrono::steady_clock::now();
    std::string scan_serial_result = scan_workload_run(workload, false);
    double scan_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    std::string scan_parallel_result = scan_workload_run(workload, true);
    double scan_parallel = seconds_since(t0);
    par::set_enabled(true);

    bool scan_match = scan_serial_result == scan_parallel_result;

    std::cout << std::fixed << std::setprecision(3);
    std::cout << "campaign (" << count << " instances, T1/T2/T3/T5/T6)\n";
    std::cout << "  serial reference: " << campaign_serial << " s\n";
    std::cout << "  openmp:           " << campaign_parallel << " s  (speedup "
              << std::setprecision(2) << campaign_serial / std::max(campaign_parallel, 1e-9)
              << "x)\n";
    std::cout << "  digests match:    " << (campaign_match ? "yes" : "NO") << "\n\n";

    std::cout << std::setprecision(3);
    std::cout << "inverse-window scans (" << workload.modules.size()
              << " traces over pre-warmed rings)\n";
    std::cout << "  serial reference: " << scan_serial << " s\n";
    std::cout << "  openmp:           " << scan_parallel << " s  (speedup "
              << std::setprecision(2) << scan_serial / std::max(scan_parallel, 1e-9) << "x)\n";
    std::cout << "  results match:    " << (scan_match ? "yes" : "NO") << "\n";

    if (!campaign_match || !scan_match) {
        std::cerr << "parallel and serial outputs diverge\n";
        return 1;
    }
    return 0;
}
