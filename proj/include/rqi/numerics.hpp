#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include <Eigen/Dense>

namespace rqi {

using complexd = std::complex<double>;

inline double ln_factorial(int n) {
    static const std::array<double, 61> table = [] {
        std::array<double, 61> t{};
        for (int i = 0; i <= 60; ++i) t[i] = std::lgamma(double(i) + 1.0);
        return t;
    }();
    if (n < 0) throw std::invalid_argument("ln_factorial: negative argument");
    if (n <= 60) return table[n];
    return std::lgamma(double(n) + 1.0);
}

// Integer-exact up to n = 50 (largest intermediate fits in the 53-bit mantissa).
inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (n <= 50) {
        const int kk = std::min(k, n - k);
        double r = 1.0;
        for (int i = 1; i <= kk; ++i) r = r * double(n - kk + i) / double(i);
        return std::round(r);
    }
    return std::exp(ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k));
}

// Tree summation: deterministic for a fixed element order.
template <typename T>
T pairwise_sum(std::span<const T> xs) {
    const std::size_t n = xs.size();
    if (n == 0) throw std::invalid_argument("pairwise_sum: empty range");
    if (n <= 8) {
        T acc = xs[0];
        for (std::size_t i = 1; i < n; ++i) acc = acc + xs[i];
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& xs) {
    return pairwise_sum(std::span<const T>(xs.data(), xs.size()));
}

struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights come
// from the first components of its eigenvectors.
inline GaussLegendre gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order < 1");
    if (order == 1) return {{0.0}, {2.0}};
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(order, order);
    for (int i = 1; i < order; ++i) {
        const double b = double(i) / std::sqrt(4.0 * i * i - 1.0);
        J(i, i - 1) = b;
        J(i - 1, i) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    GaussLegendre gl;
    gl.nodes.resize(order);
    gl.weights.resize(order);
    for (int i = 0; i < order; ++i) {
        gl.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        gl.weights[i] = 2.0 * v0 * v0;
    }
    return gl;
}

inline GaussLegendre gauss_legendre(int order, double a, double b) {
    GaussLegendre gl = gauss_legendre(order);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (auto& x : gl.nodes) x = mid + half * x;
    for (auto& w : gl.weights) w *= half;
    return gl;
}

inline unsigned thread_budget() {
    if (const char* s = std::getenv("RQI_THREADS")) {
        const long v = std::strtol(s, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

// Runs fn(i) for i in [0,n) and sums the results. Work is cut into
// fixed-width chunks so the reduction tree, and therefore the rounding,
// is identical for every thread count.
template <typename T, typename Fn>
T parallel_transform_sum(std::size_t n, const T& zero, Fn&& fn,
                         std::size_t chunk_width = 1024) {
    if (n == 0) return zero;
    const std::size_t nchunks = (n + chunk_width - 1) / chunk_width;
    std::vector<T> partial(nchunks, zero);
    auto run_chunk = [&](std::size_t c) {
        const std::size_t lo = c * chunk_width;
        const std::size_t hi = std::min(n, lo + chunk_width);
        std::vector<T> vals;
        vals.reserve(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) vals.push_back(fn(i));
        partial[c] = pairwise_sum(vals);
    };
    const unsigned nthreads =
        std::min<std::size_t>(thread_budget(), nchunks);
    if (nthreads <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c) run_chunk(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (std::size_t c = next.fetch_add(1); c < nchunks;
                     c = next.fetch_add(1))
                    run_chunk(c);
            });
        for (auto& th : pool) th.join();
    }
    return pairwise_sum(partial);
}

// Plain parallel loop, used where results land in pre-sized storage.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn, std::size_t chunk_width = 256) {
    if (n == 0) return;
    const std::size_t nchunks = (n + chunk_width - 1) / chunk_width;
    const unsigned nthreads =
        std::min<std::size_t>(thread_budget(), nchunks);
    auto run_chunk = [&](std::size_t c) {
        const std::size_t lo = c * chunk_width;
        const std::size_t hi = std::min(n, lo + chunk_width);
        for (std::size_t i = lo; i < hi; ++i) fn(i);
    };
    if (nthreads <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c) run_chunk(c);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t)
        pool.emplace_back([&] {
            for (std::size_t c = next.fetch_add(1); c < nchunks;
                 c = next.fetch_add(1))
                run_chunk(c);
        });
    for (auto& th : pool) th.join();
}

}  // namespace rqi
