#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qps/probe.hpp"
#include "qps/wigner.hpp"

using namespace qps;

namespace {

// provider that counts interface calls; reconstruction can only see these
class CountingProbe : public MeasurementProvider {
  public:
    CountingProbe(const DensityMatrix& rho, const ProbeConfig& config)
        : inner_(rho, config) {}

    CorrelationRecord correlations(int p, int q) const override {
        ++correlation_calls;
        return inner_.correlations(p, q);
    }
    double probe_position(int q0, double eps) const override {
        ++position_calls;
        return inner_.probe_position(q0, eps);
    }
    ProbeConfig config() const override { return inner_.config(); }
    Dimension dim() const override { return inner_.dim(); }

    mutable int correlation_calls = 0;
    mutable int position_calls = 0;

  private:
    SimulatedProbe inner_;
};

double max_error_at(const DensityMatrix& rho, double eps1,
                    const RealGrid& direct) {
    const SimulatedProbe probe(rho, ProbeConfig{eps1, 1.0, 1.0});
    return (reconstruct_wigner(probe) - direct).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("probe config validation") {
    CHECK_NOTHROW(ProbeConfig{0.0, 1.0, 1.0}.validate());
    CHECK_THROWS(ProbeConfig{-1e-3, 1.0, 1.0}.validate());
    CHECK_THROWS(ProbeConfig{1e-3, 0.0, 1.0}.validate());
    CHECK_THROWS(ProbeConfig{1e-3, 1.0, -1.0}.validate());
}

TEST_CASE("w11 at zero coupling is exactly Kirkwood") {
    for (int n : {3, 5, 7}) {
        const auto dim = Dimension::validate(n);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto rho = random_density(dim, seed);
            const ComplexGrid k = kirkwood(rho);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    CHECK(std::abs(w11(rho, p, q, 0.0, 1.0) - k(p, q)) < 1e-12);
        }
    }
}

TEST_CASE("w11 finite-coupling error follows the closed form exactly") {
    for (int n : {3, 5, 7}) {
        const auto dim = Dimension::validate(n);
        const auto rho = random_density(dim, 4);
        const ComplexGrid k = kirkwood(rho);
        for (double eps1 : {1e-3, 1e-2, 0.5}) {
            const double g = std::exp(-0.5 * eps1 * eps1);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    const Complex diag =
                        rho.matrix()(q, q) / static_cast<double>(n);
                    const Complex predicted =
                        k(p, q) + (g - 1.0) * (k(p, q) - diag);
                    CHECK(std::abs(w11(rho, p, q, eps1, 1.0) - predicted) <
                          1e-12);
                }
        }
    }
}

TEST_CASE("w11 of the maximally mixed state is coupling-independent") {
    const auto dim = Dimension::validate(5);
    const auto rho =
        DensityMatrix::validate(Matrix::Identity(5, 5) / 5.0, dim);
    for (double eps1 : {0.0, 1e-3, 0.3, 2.0})
        for (int p = 0; p < 5; ++p)
            for (int q = 0; q < 5; ++q)
                CHECK(std::abs(w11(rho, p, q, eps1, 1.0) - Complex(0.04)) <
                      1e-14);
}

TEST_CASE("correlation records encode and recover w11") {
    const auto dim = Dimension::validate(5);
    const auto rho = random_density(dim, 8);
    const ProbeConfig config{1e-3, 1.0, 1.0};
    for (int p = 0; p < 5; ++p)
        for (int q = 0; q < 5; ++q) {
            const auto rec = probe_correlations(rho, p, q, config);
            const Complex w = w11(rho, p, q, config.eps1, config.sigma_p1_sq);
            CHECK(std::abs(rec.qq_over_eps - w.real()) < 1e-14);
            CHECK(std::abs(rec.pq_over_eps - 2.0 * w.imag()) < 1e-14);
            const Complex recovered(
                rec.qq_over_eps,
                rec.pq_over_eps / (2.0 * config.sigma_p1_sq));
            CHECK(std::abs(recovered - w) < 1e-14);
        }
}

TEST_CASE("normalized records are invariant under eps2 scaling") {
    const auto dim = Dimension::validate(3);
    const auto rho = random_density(dim, 2);
    const auto a = probe_correlations(rho, 1, 2, ProbeConfig{1e-3, 1.0, 1.0});
    const auto b = probe_correlations(rho, 1, 2, ProbeConfig{1e-3, 2.0, 1.0});
    CHECK(a.qq_over_eps == b.qq_over_eps);
    CHECK(a.pq_over_eps == b.pq_over_eps);
}

TEST_CASE("kirkwood_from_correlations") {
    const auto dim = Dimension::validate(5);
    const auto rho = random_density(dim, 21);
    const ComplexGrid exact = kirkwood(rho);

    SUBCASE("zero coupling is exact") {
        const SimulatedProbe probe(rho, ProbeConfig{0.0, 1.0, 1.0});
        const ComplexGrid k =
            kirkwood_from_correlations(measure_correlations(probe), dim);
        CHECK((k - exact).cwiseAbs().maxCoeff() < 1e-12);
    }

    SUBCASE("finite coupling error is small and second order") {
        const SimulatedProbe p1(rho, ProbeConfig{1e-3, 1.0, 1.0});
        const ComplexGrid k1 =
            kirkwood_from_correlations(measure_correlations(p1), dim);
        CHECK((k1 - exact).cwiseAbs().maxCoeff() < 1e-5);

        const SimulatedProbe p2(rho, ProbeConfig{5e-4, 1.0, 1.0});
        const ComplexGrid k2 =
            kirkwood_from_correlations(measure_correlations(p2), dim);
        const double ratio = (k1 - exact).cwiseAbs().maxCoeff() /
                             (k2 - exact).cwiseAbs().maxCoeff();
        CHECK(ratio == doctest::Approx(4.0).epsilon(0.1));
    }

    SUBCASE("Richardson extrapolation beats the single-coupling estimate") {
        const SimulatedProbe full(rho, ProbeConfig{1e-2, 1.0, 1.0});
        const SimulatedProbe half(rho, ProbeConfig{5e-3, 1.0, 1.0});
        const ComplexGrid single =
            kirkwood_from_correlations(measure_correlations(full), dim);
        const ComplexGrid extrap = kirkwood_from_correlations(
            measure_correlations(full), measure_correlations(half), dim);
        CHECK((extrap - exact).cwiseAbs().maxCoeff() <
              1e-3 * (single - exact).cwiseAbs().maxCoeff());
    }

    SUBCASE("mixed configs are rejected") {
        const SimulatedProbe a(rho, ProbeConfig{1e-3, 1.0, 1.0});
        const SimulatedProbe b(rho, ProbeConfig{1e-2, 1.0, 1.0});
        auto records = measure_correlations(a);
        records.back() = b.correlations(4, 4);
        CHECK_THROWS_AS(kirkwood_from_correlations(records, dim),
                        MixedConfigsError);

        // wrong second coupling for extrapolation
        CHECK_THROWS_AS(
            kirkwood_from_correlations(measure_correlations(a),
                                       measure_correlations(b), dim),
            MixedConfigsError);
    }
}

TEST_CASE("single_probe_position") {
    const auto dim = Dimension::validate(5);
    const auto mixed =
        DensityMatrix::validate(Matrix::Identity(5, 5) / 5.0, dim);
    for (int q0 = 0; q0 < 5; ++q0)
        CHECK(single_probe_position(mixed, q0, 0.25) ==
              doctest::Approx(0.05));

    Matrix m = Matrix::Zero(5, 5);
    m(3, 3) = 1.0;
    const auto pos = DensityMatrix::validate(m, dim);
    CHECK(single_probe_position(pos, 3, 0.7) == doctest::Approx(0.7));
    CHECK(single_probe_position(pos, 1, 0.7) == doctest::Approx(0.0));

    const auto rho = random_density(dim, 13);
    for (int q0 = 0; q0 < 5; ++q0)
        CHECK(std::abs(single_probe_position(rho, q0, 0.5) / 0.5 -
                       rho.matrix()(q0, q0).real()) < 1e-12);
}

TEST_CASE("reconstruction of the maximally mixed state is exact at any eps1") {
    const auto dim = Dimension::validate(5);
    const auto rho =
        DensityMatrix::validate(Matrix::Identity(5, 5) / 5.0, dim);
    for (double eps1 : {0.0, 1e-3, 0.5}) {
        const SimulatedProbe probe(rho, ProbeConfig{eps1, 1.0, 1.0});
        const RealGrid w = reconstruct_wigner(probe);
        for (int q = 0; q < 5; ++q)
            for (int p = 0; p < 5; ++p)
                CHECK(w(q, p) == doctest::Approx(0.2).epsilon(1e-12));
    }
}

TEST_CASE("reconstruction error budget and convergence order") {
    const auto dim = Dimension::validate(5);
    const LineOperatorTable table(dim);
    const auto rho = random_density(dim, 6);
    const RealGrid direct = wigner_transform(rho.matrix(), table);

    CHECK(max_error_at(rho, 1e-3, direct) < 1e-4);
    const double e1 = max_error_at(rho, 1e-3, direct);
    const double e2 = max_error_at(rho, 5e-4, direct);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.1));

    // log-log slope over eps1 in {1e-2, 5e-3, 2.5e-3}
    const double err_a = max_error_at(rho, 1e-2, direct);
    const double err_c = max_error_at(rho, 2.5e-3, direct);
    const double slope = std::log(err_a / err_c) / std::log(4.0);
    CHECK(slope == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("extrapolated reconstruction improves on the single run") {
    const auto dim = Dimension::validate(5);
    const LineOperatorTable table(dim);
    const auto rho = random_density(dim, 6);
    const RealGrid direct = wigner_transform(rho.matrix(), table);
    const SimulatedProbe full(rho, ProbeConfig{1e-2, 1.0, 1.0});
    const SimulatedProbe half(rho, ProbeConfig{5e-3, 1.0, 1.0});
    const double single =
        (reconstruct_wigner(full) - direct).cwiseAbs().maxCoeff();
    const double extrap =
        (reconstruct_wigner(full, half) - direct).cwiseAbs().maxCoeff();
    CHECK(extrap < single);
}

TEST_CASE("reconstruction touches the state only through the provider") {
    const auto dim = Dimension::validate(5);
    const LineOperatorTable table(dim);
    const auto rho = random_density(dim, 31);
    const CountingProbe probe(rho, ProbeConfig{0.0, 1.0, 1.0});
    const RealGrid w = reconstruct_wigner(probe);
    CHECK(probe.correlation_calls == 25);
    CHECK(probe.position_calls == 5);
    CHECK((w - wigner_transform(rho.matrix(), table)).cwiseAbs().maxCoeff() <
          1e-10);
}
