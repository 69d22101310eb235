#include "qps/mub.hpp"

#include <cmath>
#include <string>

namespace qps {

Vector mub_state(int m, BasisIndex b, Dimension dim) {
    const int n = dim.n();
    Vector v = Vector::Zero(n);
    if (b.is_reference()) {
        v(mod_n(m, dim)) = 1.0;
        return v;
    }
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    const long long shift = b.shift();
    for (int k = 0; k < n; ++k) {
        // n(n-1)/2 is an integer, so b/2 never needs field division
        const long long tri = static_cast<long long>(k) * (k - 1) / 2;
        v(k) = norm * omega_pow(shift * tri - static_cast<long long>(k) * m, dim);
    }
    return v;
}

Vector momentum_state(int p, Dimension dim) {
    const int n = dim.n();
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    Vector v(n);
    for (int q = 0; q < n; ++q)
        v(q) = norm * omega_pow(static_cast<long long>(p) * q, dim);
    return v;
}

MubFamily::MubFamily(Dimension dim) : dim_(dim) {
    const int n = dim.n();
    bases_.reserve(n + 1);
    for (const auto b : basis_indices()) {
        std::vector<Vector> basis;
        basis.reserve(n);
        for (int m = 0; m < n; ++m) basis.push_back(mub_state(m, b, dim));
        bases_.push_back(std::move(basis));
    }

    constexpr double tol = 1e-10;
    const auto labels = basis_indices();

    for (std::size_t i = 0; i < bases_.size(); ++i) {
        for (int m = 0; m < n; ++m)
            for (int m2 = 0; m2 < n; ++m2) {
                const Complex ov = bases_[i][m].adjoint() * bases_[i][m2];
                const double want = m == m2 ? 1.0 : 0.0;
                if (std::abs(ov - want) > tol)
                    throw ConstructionInvariantViolated(
                        "basis " + std::to_string(i) + " not orthonormal");
            }
        for (std::size_t j = i + 1; j < bases_.size(); ++j)
            for (int m = 0; m < n; ++m)
                for (int m2 = 0; m2 < n; ++m2) {
                    const Complex ov = bases_[i][m].adjoint() * bases_[j][m2];
                    if (std::abs(std::norm(ov) - 1.0 / n) > tol)
                        throw ConstructionInvariantViolated(
                            "bases " + std::to_string(i) + "," +
                            std::to_string(j) + " not unbiased");
                }
    }

    for (const auto b : labels) {
        if (b.is_reference()) continue;
        const Matrix xzb = xz_power(b.shift(), 1, dim);
        for (int m = 0; m < n; ++m) {
            const Vector& s = state(b, m);
            const double res = (xzb * s - omega_pow(m, dim) * s).norm();
            if (res > tol)
                throw ConstructionInvariantViolated(
                    "X Z^" + std::to_string(b.shift()) +
                    " eigen-relation fails for m=" + std::to_string(m));
        }
    }
}

std::vector<BasisIndex> MubFamily::basis_indices() const {
    std::vector<BasisIndex> out;
    out.reserve(dim_.n() + 1);
    out.push_back(BasisIndex::reference());
    for (int b = 0; b < dim_.n(); ++b) out.push_back(BasisIndex::shifted(b));
    return out;
}

}  // namespace qps
