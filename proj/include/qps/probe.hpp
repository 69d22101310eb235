#ifndef QPS_PROBE_HPP
#define QPS_PROBE_HPP

#include <vector>

#include "qps/kirkwood.hpp"
#include "qps/operators.hpp"

namespace qps {

struct MixedConfigsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Couplings of the two impulsive probe interactions and the momentum
/// variance of probe 1's Gaussian initial state. eps1 = 0 is allowed and
/// gives the exact weak-coupling limit.
struct ProbeConfig {
    double eps1 = 1e-3;
    double eps2 = 1.0;
    double sigma_p1_sq = 1.0;

    void validate() const;

    friend bool operator==(const ProbeConfig& a, const ProbeConfig& b) {
        return a.eps1 == b.eps1 && a.eps2 == b.eps2 &&
               a.sigma_p1_sq == b.sigma_p1_sq;
    }
};

/// Normalized two-probe correlations at one phase-space point:
/// qq_over_eps = <Q1 Q2>/(eps1 eps2) = Re W11(eps1),
/// pq_over_eps = <P1 Q2>/(eps1 eps2) = 2 sigma^2 Im W11(eps1).
struct CorrelationRecord {
    int p = 0;
    int q = 0;
    double qq_over_eps = 0.0;
    double pq_over_eps = 0.0;
    ProbeConfig config;
};

/// W11 = sum_{q'} G_{q'q}(eps1) Tr(rho P_{q'} P_p P_q) with the Gaussian
/// decoherence factor G_{q'q} = d_{qq'} + exp(-sigma^2 eps1^2/2)(1 - d_{qq'}).
/// At eps1 = 0 this is exactly the Kirkwood value K(p,q).
Complex w11(const DensityMatrix& rho, int p, int q, double eps1,
            double sigma_p1_sq);

CorrelationRecord probe_correlations(const DensityMatrix& rho, int p, int q,
                                     const ProbeConfig& config);

/// Single-probe von Neumann pointer displacement for the projector |q0><q0|:
/// <Q> = eps <q0|rho|q0>.
double single_probe_position(const DensityMatrix& rho, int q0, double eps);

/// The only channel through which reconstruction may see the state: the
/// simulated measurement outputs, never the density-matrix entries.
class MeasurementProvider {
  public:
    virtual ~MeasurementProvider() = default;
    virtual CorrelationRecord correlations(int p, int q) const = 0;
    virtual double probe_position(int q0, double eps) const = 0;
    virtual ProbeConfig config() const = 0;
    virtual Dimension dim() const = 0;
};

class SimulatedProbe : public MeasurementProvider {
  public:
    SimulatedProbe(const DensityMatrix& rho, const ProbeConfig& config)
        : rho_(rho), config_(config) {
        config.validate();
    }

    CorrelationRecord correlations(int p, int q) const override {
        return probe_correlations(rho_, p, q, config_);
    }
    double probe_position(int q0, double eps) const override {
        return single_probe_position(rho_, q0, eps);
    }
    ProbeConfig config() const override { return config_; }
    Dimension dim() const override { return rho_.dim(); }

  private:
    DensityMatrix rho_;
    ProbeConfig config_;
};

/// All N^2 correlation records of one provider, row-major in (p, q).
std::vector<CorrelationRecord> measure_correlations(
    const MeasurementProvider& provider);

/// Kirkwood estimate K = qq_over_eps + (i/(2 sigma^2)) pq_over_eps per point.
ComplexGrid kirkwood_from_correlations(
    const std::vector<CorrelationRecord>& records, Dimension dim);

/// Two-coupling variant: records_half taken at eps1/2. Richardson
/// extrapolation in eps1^2 cancels the leading finite-coupling error.
ComplexGrid kirkwood_from_correlations(
    const std::vector<CorrelationRecord>& records,
    const std::vector<CorrelationRecord>& records_half, Dimension dim);

/// End-to-end Wigner reconstruction from probe outputs only: correlation
/// grid -> Kirkwood estimate -> phase sum with offset (N+1)/2, plus the two
/// single-probe diagonal terms.
RealGrid reconstruct_wigner(const MeasurementProvider& provider);

/// Same pipeline with Richardson extrapolation from a second provider
/// running at half the first's coupling.
RealGrid reconstruct_wigner(const MeasurementProvider& provider,
                            const MeasurementProvider& provider_half);

}  // namespace qps

#endif
