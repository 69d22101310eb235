#include "qps/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qps/kirkwood.hpp"
#include "qps/mub.hpp"
#include "qps/operators.hpp"
#include "qps/probe.hpp"
#include "qps/wigner.hpp"

namespace qps {

bool VerifyReport::all_passed() const {
    return std::all_of(results.begin(), results.end(),
                       [](const PropertyResult& r) { return r.passed; });
}

std::string VerifyReport::table() const {
    std::string out;
    for (const auto& r : results) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%-4s  %-58s  max dev %.3e\n",
                      r.passed ? "PASS" : "FAIL", r.name.c_str(),
                      r.max_deviation);
        out += buf;
    }
    return out;
}

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

VerifyReport run_verification(Dimension dim, int trials, std::uint64_t seed,
                              double tol) {
    const int n = dim.n();
    const MubFamily mubs(dim);
    const LineOperatorTable table(dim);
    VerifyReport report;
    auto add = [&](const std::string& name, double dev, double bound) {
        report.results.push_back({name, dev <= bound, dev});
    };

    // Schwinger algebra
    {
        const Matrix z = schwinger_z(dim);
        const Matrix x = schwinger_x(dim);
        const Matrix id = Matrix::Identity(n, n);
        const Complex w = omega(dim);
        double dev = max_abs(z * x - w * x * z);
        dev = std::max(dev, max_abs(xz_power(0, 0, dim) - id));
        for (int b = 0; b < n; ++b)
            for (int k = 1; k < n; ++k) {
                Matrix rhs = Matrix::Identity(n, n);
                for (int i = 0; i < k; ++i) rhs = rhs * x;
                for (int i = 0; i < mod_n(static_cast<long long>(k) * b, dim);
                     ++i)
                    rhs = rhs * z;
                const long long tri = static_cast<long long>(k) * (k - 1) / 2;
                rhs *= omega_pow(tri * b, dim);
                dev = std::max(dev, max_abs(xz_power(b, k, dim) - rhs));
            }
        add("Schwinger identities: ZX = wXZ, (XZ^b)^k = w^{k(k-1)b/2} X^k Z^{kb}",
            dev, tol);
    }

    // MUB invariants
    {
        double dev = 0.0;
        const auto labels = mubs.basis_indices();
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = i; j < labels.size(); ++j)
                for (int m = 0; m < n; ++m)
                    for (int m2 = 0; m2 < n; ++m2) {
                        const Complex ov = mubs.state(labels[i], m).adjoint() *
                                           mubs.state(labels[j], m2);
                        if (i == j)
                            dev = std::max(
                                dev, std::abs(ov - (m == m2 ? 1.0 : 0.0)));
                        else
                            dev = std::max(dev,
                                           std::abs(std::norm(ov) - 1.0 / n));
                    }
        for (int b = 0; b < n; ++b) {
            const Matrix xzb = xz_power(b, 1, dim);
            for (int m = 0; m < n; ++m) {
                const Vector& s = mubs.state(BasisIndex::shifted(b), m);
                dev = std::max(dev,
                               (xzb * s - omega_pow(m, dim) * s).norm());
            }
        }
        add("MUB family: orthonormality, unbiasedness 1/N, eigen-relations",
            dev, tol);
    }

    // line-operator orthogonality over all N^4 pairs
    {
        double dev = 0.0;
        for (int q = 0; q < n; ++q)
            for (int p = 0; p < n; ++p)
                for (int q2 = 0; q2 < n; ++q2)
                    for (int p2 = 0; p2 < n; ++p2) {
                        const Complex tr =
                            (table.at(q, p) * table.at(q2, p2)).trace() /
                            static_cast<double>(n);
                        const double want = (q == q2 && p == p2) ? 1.0 : 0.0;
                        dev = std::max(dev, std::abs(tr - want));
                    }
        add("orthogonality: (1/N) Tr(P_qp P_q'p') = delta delta", dev, tol);
    }

    // closure
    {
        Matrix sum = Matrix::Zero(n, n);
        for (int q = 0; q < n; ++q)
            for (int p = 0; p < n; ++p) sum += table.at(q, p);
        add("closure: (1/N) sum_qp P_qp = I",
            max_abs(sum / static_cast<double>(n) - Matrix::Identity(n, n)),
            tol);
    }

    // three construction routes for the line operator
    {
        double dev = 0.0;
        for (int q = 0; q < n; ++q)
            for (int p = 0; p < n; ++p) {
                const Matrix& closed = table.at(q, p);
                dev = std::max(
                    dev, max_abs(closed - line_operator_mub_sum(q, p, dim, mubs)));
                dev = std::max(
                    dev,
                    max_abs(closed - line_operator_explicit(q, p, dim, mubs)));
            }
        add("line operator: closed form = MUB sum = explicit phase sum", dev,
            tol);
    }

    double reality_dev = 0.0, normal_dev = 0.0, product_dev = 0.0;
    double marginal_dev = 0.0, charfun_dev = 0.0, roundtrip_dev = 0.0;
    double kirk_dev = 0.0, probe_limit_dev = 0.0, error_model_dev = 0.0;
    double reconstruct_dev = 0.0;

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = seed + 1000003ULL * t;
        const DensityMatrix rho = random_density(dim, s);

        const Matrix wc = wigner_transform_complex(rho.matrix(), table);
        reality_dev = std::max(reality_dev, wc.imag().cwiseAbs().maxCoeff());
        const RealGrid w = wc.real();
        normal_dev =
            std::max(normal_dev, std::abs(w.sum() / static_cast<double>(n) - 1.0));

        const Matrix a = random_hermitian(dim, s + 1);
        const Matrix b = random_hermitian(dim, s + 2);
        product_dev = std::max(
            product_dev,
            std::abs(overlap(wigner_transform(a, table),
                             wigner_transform(b, table)) -
                     (a * b).trace().real()));

        for (const auto bb : mubs.basis_indices())
            for (int m = 0; m < n; ++m) {
                const Vector& st = mubs.state(bb, m);
                const double direct =
                    (st.adjoint() * rho.matrix() * st)(0, 0).real();
                marginal_dev = std::max(
                    marginal_dev,
                    std::abs(radon_marginal(w, m, bb, dim) - direct));
            }

        charfun_dev = std::max(
            charfun_dev,
            (wigner_from_characteristic(
                 characteristic_function(rho.matrix(), dim), dim) -
             w)
                .cwiseAbs()
                .maxCoeff());

        const ComplexGrid k = kirkwood(rho);
        kirk_dev = std::max(
            kirk_dev,
            (kirkwood_from_wigner(w, dim) - k).cwiseAbs().maxCoeff());
        roundtrip_dev = std::max(
            roundtrip_dev,
            (wigner_from_kirkwood(k, dim) - w).cwiseAbs().maxCoeff());

        const double sigma2 = 1.0, eps1 = 1e-3;
        const double g = std::exp(-0.5 * sigma2 * eps1 * eps1);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                probe_limit_dev = std::max(
                    probe_limit_dev,
                    std::abs(w11(rho, p, q, 0.0, sigma2) - k(p, q)));
                const Complex diag_term =
                    rho.matrix()(q, q) / static_cast<double>(n);
                const Complex predicted =
                    k(p, q) + (g - 1.0) * (k(p, q) - diag_term);
                error_model_dev = std::max(
                    error_model_dev,
                    std::abs(w11(rho, p, q, eps1, sigma2) - predicted));
            }

        const SimulatedProbe probe(rho, ProbeConfig{0.0, 1.0, 1.0});
        reconstruct_dev = std::max(
            reconstruct_dev,
            (reconstruct_wigner(probe) - w).cwiseAbs().maxCoeff());
    }

    add("reality: Im W_rho(q,p) = 0 for Hermitian input", reality_dev, tol);
    add("normalization: (1/N) sum_qp W_rho = 1", normal_dev, tol);
    add("product formula: (1/N) sum W_A W_B = Tr(AB)", product_dev, tol);
    add("marginality (Radon): grid marginal = <m;b|rho|m;b>", marginal_dev,
        tol);
    add("characteristic function reassembles the Wigner grid", charfun_dev,
        tol);
    add("Kirkwood from Wigner matches the direct trace", kirk_dev, tol);
    add("Wigner <-> Kirkwood round trip", roundtrip_dev, tol);
    add("probe limit: W11(eps1 = 0) = Kirkwood", probe_limit_dev, tol);
    add("probe error model: W11 - K = (e^{-s e^2/2} - 1)(K - <q|rho|q>/N)",
        error_model_dev, tol);
    add("probe-only reconstruction at eps1 = 0 equals the Wigner grid",
        reconstruct_dev, tol);

    return report;
}

}  // namespace qps
