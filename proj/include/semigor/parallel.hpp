#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace semigor::par {

inline bool available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline std::atomic<bool>& enabled_flag() {
    static std::atomic<bool> flag{available()};
    return flag;
}

inline bool enabled() { return enabled_flag().load(); }
inline void set_enabled(bool on) { enabled_flag().store(on && available()); }

// Evaluates f(0..n-1) into a flag array. The serial branch is the reference
// implementation; the OpenMP branch must agree with it bit for bit, which the
// test suite and the benchmark both assert. f must be safe to call
// concurrently (all callers pass pure membership predicates over pre-warmed
// rings). `grain` is the dynamic chunk size: keep it large for cheap
// per-element predicates so flag writes do not share cache lines, and 1 for
// heavyweight items like campaign instances.
template <class F>
std::vector<char> map_flags(std::size_t n, F&& f, bool use_parallel = enabled(),
                            [[maybe_unused]] int grain = 256) {
    std::vector<char> flags(n, 0);
    if (use_parallel && available() && n > 1) {
#ifdef _OPENMP
        std::exception_ptr error;
        std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic, grain)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                flags[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i)) ? 1 : 0;
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
#endif
    } else {
        for (std::size_t i = 0; i < n; ++i) flags[i] = f(i) ? 1 : 0;
    }
    return flags;
}

}  // namespace semigor::par
