#include "qps/probe.hpp"

#include <cmath>

#include "qps/mub.hpp"

namespace qps {

void ProbeConfig::validate() const {
    if (eps1 < 0.0) throw std::invalid_argument("eps1 must be >= 0");
    if (eps2 <= 0.0) throw std::invalid_argument("eps2 must be > 0");
    if (sigma_p1_sq <= 0.0) throw std::invalid_argument("sigma_p1_sq must be > 0");
}

Complex w11(const DensityMatrix& rho, int p, int q, double eps1,
            double sigma_p1_sq) {
    const Dimension dim = rho.dim();
    const int n = dim.n();
    const double g = std::exp(-0.5 * sigma_p1_sq * eps1 * eps1);
    const Vector mp = momentum_state(p, dim);
    Complex sum = 0.0;
    for (int qp = 0; qp < n; ++qp) {
        const double weight = qp == q ? 1.0 : g;
        // Tr(rho P_{q'} P_p P_q) = <q|rho|q'><q'|p><p|q>
        sum += weight * rho.matrix()(q, qp) * mp(qp) * std::conj(mp(q));
    }
    return sum;
}

CorrelationRecord probe_correlations(const DensityMatrix& rho, int p, int q,
                                     const ProbeConfig& config) {
    config.validate();
    const Complex w = w11(rho, p, q, config.eps1, config.sigma_p1_sq);
    CorrelationRecord rec;
    rec.p = p;
    rec.q = q;
    rec.qq_over_eps = w.real();
    rec.pq_over_eps = 2.0 * config.sigma_p1_sq * w.imag();
    rec.config = config;
    return rec;
}

double single_probe_position(const DensityMatrix& rho, int q0, double eps) {
    if (eps <= 0.0) throw std::invalid_argument("eps must be > 0");
    return eps * rho.matrix()(q0, q0).real();
}

std::vector<CorrelationRecord> measure_correlations(
    const MeasurementProvider& provider) {
    const int n = provider.dim().n();
    std::vector<CorrelationRecord> records;
    records.reserve(static_cast<std::size_t>(n) * n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) records.push_back(provider.correlations(p, q));
    return records;
}

namespace {

ComplexGrid assemble(const std::vector<CorrelationRecord>& records,
                     Dimension dim) {
    const int n = dim.n();
    if (records.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("expected N^2 correlation records");
    const ProbeConfig& cfg = records.front().config;
    ComplexGrid k = ComplexGrid::Zero(n, n);
    for (const auto& rec : records) {
        if (!(rec.config == cfg))
            throw MixedConfigsError("correlation records mix probe configs");
        k(rec.p, rec.q) = Complex(
            rec.qq_over_eps, rec.pq_over_eps / (2.0 * cfg.sigma_p1_sq));
    }
    return k;
}

}  // namespace

ComplexGrid kirkwood_from_correlations(
    const std::vector<CorrelationRecord>& records, Dimension dim) {
    return assemble(records, dim);
}

ComplexGrid kirkwood_from_correlations(
    const std::vector<CorrelationRecord>& records,
    const std::vector<CorrelationRecord>& records_half, Dimension dim) {
    const ComplexGrid full = assemble(records, dim);
    const ComplexGrid half = assemble(records_half, dim);
    const double e_full = records.front().config.eps1;
    const double e_half = records_half.front().config.eps1;
    if (std::abs(e_half - 0.5 * e_full) > 1e-15 * std::abs(e_full))
        throw MixedConfigsError(
            "extrapolation needs the second record set at eps1/2");
    // leading error is O(eps1^2)
    return (4.0 * half - full) / 3.0;
}

namespace {

RealGrid reconstruct_from_kirkwood_estimate(const ComplexGrid& k,
                                            const MeasurementProvider& provider) {
    const Dimension dim = provider.dim();
    const int n = dim.n();
    const int h = dim.half();
    constexpr double eps_single = 1.0;
    Eigen::VectorXd diag(n);
    for (int q = 0; q < n; ++q)
        diag(q) = provider.probe_position(q, eps_single) / eps_single;
    Matrix w(n, n);
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < n; ++p) {
            Complex sum = 0.0;
            for (int qg = 0; qg < n; ++qg)
                for (int pg = 0; pg < n; ++pg)
                    sum += k(pg, qg) *
                           omega_pow(2LL * (q - qg + h) * (p - pg), dim);
            w(q, p) = sum + diag(q) - diag(mod_n(q + h, dim));
        }
    return w.real();
}

}  // namespace

RealGrid reconstruct_wigner(const MeasurementProvider& provider) {
    const auto records = measure_correlations(provider);
    const ComplexGrid k = kirkwood_from_correlations(records, provider.dim());
    return reconstruct_from_kirkwood_estimate(k, provider);
}

RealGrid reconstruct_wigner(const MeasurementProvider& provider,
                            const MeasurementProvider& provider_half) {
    const auto records = measure_correlations(provider);
    const auto records_half = measure_correlations(provider_half);
    const ComplexGrid k = kirkwood_from_correlations(records, records_half,
                                                     provider.dim());
    return reconstruct_from_kirkwood_estimate(k, provider);
}

}  // namespace qps
