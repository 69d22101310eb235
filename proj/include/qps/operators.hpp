#ifndef QPS_OPERATORS_HPP
#define QPS_OPERATORS_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "qps/field.hpp"

namespace qps {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct NotHermitianError : std::invalid_argument {
    double violation;
    NotHermitianError(const std::string& msg, double v)
        : std::invalid_argument(msg), violation(v) {}
};

struct TraceNotOneError : std::invalid_argument {
    double violation;
    TraceNotOneError(const std::string& msg, double v)
        : std::invalid_argument(msg), violation(v) {}
};

struct NotPositiveError : std::invalid_argument {
    double violation;
    NotPositiveError(const std::string& msg, double v)
        : std::invalid_argument(msg), violation(v) {}
};

/// omega = exp(2*pi*i/N), the primitive N-th root of unity.
Complex omega(Dimension dim);

/// omega^e with the exponent reduced mod N first.
Complex omega_pow(long long e, Dimension dim);

/// Clock operator: Z|q> = omega^q |q>.
Matrix schwinger_z(Dimension dim);

/// Shift operator: X|q> = |q+1 mod N>.
Matrix schwinger_x(Dimension dim);

/// (X Z^b)^k by repeated multiplication, k in [0, N-1].
Matrix xz_power(int b, int k, Dimension dim);

/// A density matrix validated to be Hermitian, unit-trace and PSD at an
/// absolute tolerance. Immutable once constructed.
class DensityMatrix {
  public:
    static constexpr double kDefaultTol = 1e-10;

    static DensityMatrix validate(const Matrix& m, Dimension dim,
                                  double tol = kDefaultTol);

    const Matrix& matrix() const { return rho_; }
    Dimension dim() const { return dim_; }

  private:
    DensityMatrix(Matrix m, Dimension dim) : rho_(std::move(m)), dim_(dim) {}
    Matrix rho_;
    Dimension dim_;
};

/// Ginibre state: G G^dag / Tr(G G^dag) with G drawn from a seeded complex
/// Gaussian ensemble. Deterministic for a fixed seed.
DensityMatrix random_density(Dimension dim, std::uint64_t seed);

/// (G + G^dag)/2 for a seeded complex Gaussian G; generic Hermitian test
/// operator, not normalized or positive.
Matrix random_hermitian(Dimension dim, std::uint64_t seed);

}  // namespace qps

#endif
