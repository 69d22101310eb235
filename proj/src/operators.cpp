#include "qps/operators.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

namespace qps {

Complex omega(Dimension dim) {
    return std::polar(1.0, 2.0 * std::numbers::pi / dim.n());
}

Complex omega_pow(long long e, Dimension dim) {
    const int r = mod_n(e, dim);
    return std::polar(1.0, 2.0 * std::numbers::pi * r / dim.n());
}

Matrix schwinger_z(Dimension dim) {
    const int n = dim.n();
    Matrix z = Matrix::Zero(n, n);
    for (int q = 0; q < n; ++q) z(q, q) = omega_pow(q, dim);
    return z;
}

Matrix schwinger_x(Dimension dim) {
    const int n = dim.n();
    Matrix x = Matrix::Zero(n, n);
    for (int q = 0; q < n; ++q) x((q + 1) % n, q) = 1.0;
    return x;
}

Matrix xz_power(int b, int k, Dimension dim) {
    const int n = dim.n();
    const Matrix z = schwinger_z(dim);
    Matrix zb = Matrix::Identity(n, n);
    for (int i = 0; i < mod_n(b, dim); ++i) zb = zb * z;
    const Matrix xzb = schwinger_x(dim) * zb;
    Matrix out = Matrix::Identity(n, n);
    for (int i = 0; i < mod_n(k, dim); ++i) out = out * xzb;
    return out;
}

DensityMatrix DensityMatrix::validate(const Matrix& m, Dimension dim,
                                      double tol) {
    const int n = dim.n();
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("density matrix must be " +
                                    std::to_string(n) + "x" + std::to_string(n));
    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol)
        throw NotHermitianError(
            "not Hermitian, max |m - m^dag| = " + std::to_string(herm), herm);
    const double tr = std::abs(m.trace() - Complex(1.0));
    if (tr > tol)
        throw TraceNotOneError("trace deviates from 1 by " + std::to_string(tr),
                               tr);
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    const double min_ev = es.eigenvalues().minCoeff();
    if (min_ev < -tol)
        throw NotPositiveError(
            "smallest eigenvalue " + std::to_string(min_ev), -min_ev);
    return DensityMatrix(m, dim);
}

namespace {

// Box-Muller on raw mt19937_64 output: identical across standard libraries,
// unlike std::normal_distribution.
class GaussianSource {
  public:
    explicit GaussianSource(std::uint64_t seed) : gen_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = unit();
        const double u2 = unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

  private:
    double unit() {
        // in (0, 1], so log() above is finite
        return ((gen_() >> 11) + 1.0) * 0x1p-53;
    }

    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace

DensityMatrix random_density(Dimension dim, std::uint64_t seed) {
    const int n = dim.n();
    GaussianSource gauss(seed);
    Matrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g(i, j) = Complex(gauss.next(), gauss.next());
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix::validate(rho, dim);
}

Matrix random_hermitian(Dimension dim, std::uint64_t seed) {
    const int n = dim.n();
    GaussianSource gauss(seed);
    Matrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g(i, j) = Complex(gauss.next(), gauss.next());
    return 0.5 * (g + g.adjoint()).eval();
}

}  // namespace qps
