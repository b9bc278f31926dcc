#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bergstab::reduction {

/// Worker count from the BERGSTAB_WORKERS environment variable.  The
/// reduction below is bit-identical for any worker count, so this only
/// affects wall time.
inline int env_worker_count() {
    const char* v = std::getenv("BERGSTAB_WORKERS");
    if (!v) return 1;
    int n = std::atoi(v);
    return std::clamp(n, 1, 64);
}

struct NeumaierAccumulator {
    double sum = 0.0, comp = 0.0;

    void add(double x) {
        double t = sum + x;
        comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

/// Compensated sum of term(i) for i in [0, n): fixed 4096-element chunks,
/// each summed serially, combined by a fixed pairwise tree.  Chunks are
/// distributed over workers; the combine order never depends on scheduling.
template <class F>
std::complex<double> deterministic_sum(std::size_t n, int workers, F&& term) {
    constexpr std::size_t kChunk = 4096;
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    if (chunks == 0) return {0.0, 0.0};
    std::vector<std::complex<double>> partial(chunks);

    auto sum_chunk = [&](std::size_t ci) {
        std::size_t lo = ci * kChunk, hi = std::min(n, lo + kChunk);
        NeumaierAccumulator re, im;
        for (std::size_t i = lo; i < hi; ++i) {
            std::complex<double> t = term(i);
            re.add(t.real());
            im.add(t.imag());
        }
        partial[ci] = {re.value(), im.value()};
    };

    int w = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), chunks));
    if (w <= 1) {
        for (std::size_t ci = 0; ci < chunks; ++ci) sum_chunk(ci);
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto run = [&] {
            try {
                for (std::size_t ci = next.fetch_add(1); ci < chunks;
                     ci = next.fetch_add(1)) {
                    if (failed.load(std::memory_order_relaxed)) return;
                    sum_chunk(ci);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(w));
        for (int i = 0; i < w; ++i) pool.emplace_back(run);
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }

    std::vector<std::complex<double>> level = std::move(partial);
    while (level.size() > 1) {
        std::vector<std::complex<double>> up((level.size() + 1) / 2);
        for (std::size_t i = 0; i < up.size(); ++i) {
            up[i] = level[2 * i];
            if (2 * i + 1 < level.size()) up[i] += level[2 * i + 1];
        }
        level = std::move(up);
    }
    return level[0];
}

template <class F>
double deterministic_sum_real(std::size_t n, int workers, F&& term) {
    return deterministic_sum(n, workers, [&](std::size_t i) {
               return std::complex<double>(term(i), 0.0);
           })
        .real();
}

} // namespace bergstab::reduction
