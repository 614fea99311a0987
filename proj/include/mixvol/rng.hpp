// Deterministic seeding utilities.  All randomness in the library flows from
// a single 64-bit root seed expanded by a counter-based splitter, so streams
// are reproducible regardless of how work is chunked.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

namespace mixvol {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derive an independent child seed from a root seed and a stream index.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    return splitmix64(root ^ splitmix64(index));
}

/// Standard-normal vector of dimension n.
inline Eigen::VectorXd gaussian_vector(int n, std::mt19937_64& gen) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = normal(gen);
    return v;
}

/// Uniform direction on S^{n-1}.
inline Eigen::VectorXd random_direction(int n, std::mt19937_64& gen) {
    Eigen::VectorXd v;
    do {
        v = gaussian_vector(n, gen);
    } while (v.norm() < 1e-12);
    return v / v.norm();
}

/// `count` uniform directions, generated in fixed-size chunks with per-chunk
/// derived seeds: the stream does not depend on how callers parallelize.
inline std::vector<Eigen::VectorXd> sample_sphere(int n, std::size_t count,
                                                  std::uint64_t seed) {
    constexpr std::size_t kChunk = 1024;
    std::vector<Eigen::VectorXd> out;
    out.reserve(count);
    for (std::size_t chunk = 0; chunk * kChunk < count; ++chunk) {
        std::mt19937_64 gen(derive_seed(seed, chunk));
        std::size_t todo = std::min(kChunk, count - chunk * kChunk);
        for (std::size_t i = 0; i < todo; ++i) out.push_back(random_direction(n, gen));
    }
    return out;
}

}  // namespace mixvol
