#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

#include "ss/error.hpp"
#include "ss/geometry/geometry.hpp"

namespace ss {

namespace {

constexpr int kChunk = 8192;

int thread_count() {
    if (const char* env = std::getenv("SUBST_SPECTRA_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(std::min(hc, 8u)) : 1;
}

void run_chunks(int n_chunks, int threads, const std::function<void(int)>& work) {
    if (threads <= 1 || n_chunks <= 1) {
        for (int c = 0; c < n_chunks; ++c) work(c);
        return;
    }
    std::atomic<int> next(0);
    auto worker = [&]() {
        for (;;) {
            int c = next.fetch_add(1);
            if (c >= n_chunks) return;
            work(c);
        }
    };
    std::vector<std::thread> pool;
    int t = std::min(threads, n_chunks);
    pool.reserve(t);
    for (int i = 0; i < t; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
}

}  // namespace

PointCloud rauzy_cloud(const Substitution& s, const Projection& proj, int n_points) {
    if (n_points < 0) throw InputError("point count must be non-negative");
    if (n_points > kOrbitBudget)
        throw InternalError("orbit generation budget exceeded: " + std::to_string(n_points) +
                            " points requested, limit " + std::to_string(kOrbitBudget));
    if (proj.cols != s.alphabet_size())
        throw InputError("projection width does not match the alphabet");
    int a = s.alphabet_size();
    int d = proj.rows;

    PointCloud cloud;
    cloud.dim = d;
    if (n_points == 0) return cloud;

    FixedPointSeed seed = fixed_point_seed(s);
    std::vector<int> u = fixed_point_prefix(s, seed, static_cast<size_t>(n_points));
    cloud.tags = u;
    cloud.coords.assign(static_cast<size_t>(n_points) * d, 0.0);

    int n_chunks = (n_points + kChunk - 1) / kChunk;
    int threads = thread_count();

    // Exact letter counts per chunk, then a serial integer prefix sum, so
    // every chunk starts from the exact abelianization of its prefix and
    // the output does not depend on the thread count.
    std::vector<std::vector<long>> counts(n_chunks, std::vector<long>(a, 0));
    run_chunks(n_chunks, threads, [&](int c) {
        int lo = c * kChunk;
        int hi = std::min(n_points, lo + kChunk);
        std::vector<long>& cnt = counts[c];
        for (int k = lo; k < hi; ++k) cnt[u[k]] += 1;
    });
    std::vector<std::vector<long>> prefix(n_chunks, std::vector<long>(a, 0));
    for (int c = 1; c < n_chunks; ++c)
        for (int j = 0; j < a; ++j) prefix[c][j] = prefix[c - 1][j] + counts[c - 1][j];

    run_chunks(n_chunks, threads, [&](int c) {
        int lo = c * kChunk;
        int hi = std::min(n_points, lo + kChunk);
        std::vector<long double> cur(d, 0.0L);
        for (int i = 0; i < d; ++i) {
            long double base = 0.0L;
            for (int j = 0; j < a; ++j)
                base += static_cast<long double>(proj.at(i, j)) * prefix[c][j];
            cur[i] = base;
        }
        for (int k = lo; k < hi; ++k) {
            double* p = cloud.coords.data() + static_cast<size_t>(k) * d;
            for (int i = 0; i < d; ++i) p[i] = static_cast<double>(cur[i]);
            for (int i = 0; i < d; ++i) cur[i] += proj.at(i, u[k]);
        }
    });
    return cloud;
}

}  // namespace ss
