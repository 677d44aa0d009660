#ifndef MAGNON_RUNTIME_HPP
#define MAGNON_RUNTIME_HPP

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#if defined(__linux__)
#include <unistd.h>
#endif

// Present only when the BLAS is OpenBLAS; weak so other BLAS builds still link.
extern "C" char* openblas_get_corename(void) __attribute__((weak));
extern "C" void openblas_set_num_threads(int) __attribute__((weak));

namespace magnon {

namespace detail {
inline std::atomic<int>& jobs_slot() {
    static std::atomic<int> jobs{0};  // 0 = not yet resolved
    return jobs;
}
inline thread_local bool inside_worker = false;
}  // namespace detail

inline void set_max_jobs(int n) {
    detail::jobs_slot().store(n > 0 ? n : 1);
}

inline int max_jobs() {
    int j = detail::jobs_slot().load();
    if (j > 0) return j;
    if (const char* env = std::getenv("MAGNON_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) {
            detail::jobs_slot().store(v);
            return v;
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    int v = hw > 0 ? static_cast<int>(hw) : 1;
    detail::jobs_slot().store(v);
    return v;
}

// Pin the BLAS to one thread (our pool owns all parallelism) and, when the
// CPU model is masked so OpenBLAS falls back to its generic kernel, select a
// SIMD kernel matching the actual ISA. OPENBLAS_CORETYPE is only read at
// library load, hence the one-shot re-exec.
inline void configure_runtime(char** argv) {
    if (openblas_set_num_threads) openblas_set_num_threads(1);
#if defined(__linux__)
    if (std::getenv("MAGNON_RUNTIME_CONFIGURED")) return;
    setenv("MAGNON_RUNTIME_CONFIGURED", "1", 1);
    setenv("OPENBLAS_NUM_THREADS", "1", 0);
    bool need_reexec = false;
    if (!std::getenv("OPENBLAS_CORETYPE") && openblas_get_corename) {
        const char* core = openblas_get_corename();
        bool generic = core && (std::strcmp(core, "Prescott") == 0 ||
                                std::strcmp(core, "generic") == 0 ||
                                std::strcmp(core, "NORTHWOOD") == 0);
        if (generic && __builtin_cpu_supports("avx2")) {
            setenv("OPENBLAS_CORETYPE",
                   __builtin_cpu_supports("avx512f") ? "SKYLAKEX" : "HASWELL", 1);
            need_reexec = true;
        }
    }
    if (need_reexec && argv) {
        execv("/proc/self/exe", argv);
        // fall through on failure: correct but slower
    }
#else
    (void)argv;
#endif
}

// Runs body(i) for i in [0, n). Work items must only write state owned by
// their own index; scheduling order is unspecified. Nested calls from inside
// a worker run inline so ensemble-level and bin-level parallelism compose.
template <class F>
void parallel_for(int n, F&& body) {
    if (n <= 0) return;
    int jobs = max_jobs();
    if (n == 1 || jobs <= 1 || detail::inside_worker) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    int workers = jobs < n ? jobs : n;
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            detail::inside_worker = true;
            try {
                for (int i = next.fetch_add(1); i < n && !failed.load(); i = next.fetch_add(1))
                    body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace magnon

#endif
