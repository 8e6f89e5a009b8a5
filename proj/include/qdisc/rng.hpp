#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include <Eigen/Core>

namespace qdisc {

/// Deterministic splitmix64 stream with a Box-Muller Gaussian on top.
/// The sequence depends only on the seed, never on platform or scheduling,
/// which is what makes seeded searches bit-reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * uniform();
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    /// Standard complex Gaussian: E|z|^2 = 1.
    std::complex<double> complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re * M_SQRT1_2, im * M_SQRT1_2};
    }

    Eigen::MatrixXcd gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
        Eigen::MatrixXcd m(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = complex_gaussian();
        return m;
    }

    /// Decorrelated substream seed (one per restart / per instance).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        Rng mix(seed ^ (0xa0761d6478bd642fULL * (stream + 1)));
        return mix.next_u64();
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace qdisc
