#include "qps/kirkwood.hpp"

#include "qps/mub.hpp"

namespace qps {

ComplexGrid kirkwood(const DensityMatrix& rho) {
    const Dimension dim = rho.dim();
    const int n = dim.n();
    ComplexGrid k(n, n);
    for (int p = 0; p < n; ++p) {
        const Vector mp = momentum_state(p, dim);
        const Vector rho_p = rho.matrix() * mp;  // rho|p>
        for (int q = 0; q < n; ++q)
            k(p, q) = rho_p(q) * std::conj(mp(q));  // <q|rho|p><p|q>
    }
    return k;
}

Complex cross_wt_projectors(int qg, int pg, int p, int q, Dimension dim) {
    Complex v = 0.0;
    if (mod_n(q, dim) == mod_n(qg, dim)) v += 1.0;
    if (mod_n(2LL * q, dim) == mod_n(2LL * qg + 1, dim)) v -= 1.0;
    v += omega_pow(-static_cast<long long>(p - pg) * (2LL * (q - qg) - 1), dim);
    return v / static_cast<double>(dim.n());
}

ComplexGrid kirkwood_from_wigner(const RealGrid& w, Dimension dim) {
    const int n = dim.n();
    ComplexGrid k(n, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            Complex sum = 0.0;
            for (int qg = 0; qg < n; ++qg)
                for (int pg = 0; pg < n; ++pg)
                    sum += w(qg, pg) * cross_wt_projectors(qg, pg, p, q, dim);
            k(p, q) = sum / static_cast<double>(n);
        }
    return k;
}

RealGrid wigner_from_kirkwood(const ComplexGrid& k, Dimension dim) {
    const int n = dim.n();
    const int h = dim.half();
    // position diagonal <q|rho|q> = sum_p K(p,q)
    const Eigen::RowVectorXcd diag = k.colwise().sum();
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
    const double residue = w.imag().cwiseAbs().maxCoeff();
    if (residue > 1e-8)
        throw NonRealResult("imaginary residue " + std::to_string(residue) +
                            " in Wigner grid recovered from Kirkwood");
    return w.real();
}

}  // namespace qps
