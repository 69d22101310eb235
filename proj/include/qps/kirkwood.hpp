#ifndef QPS_KIRKWOOD_HPP
#define QPS_KIRKWOOD_HPP

#include "qps/operators.hpp"
#include "qps/wigner.hpp"

namespace qps {

struct NonRealResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Complex N x N Kirkwood grid, indexed (p, q) = (row, col) to match K_{p,q}.
/// Note the transposition against RealGrid's (q, p) layout.
using ComplexGrid = Eigen::MatrixXcd;

/// K(p,q) = Tr(rho |p><p| |q><q|) = <q|rho|p><p|q>.
ComplexGrid kirkwood(const DensityMatrix& rho);

/// Wigner transform of the non-Hermitian product |p><p| |q><q|, evaluated at
/// the phase-space point (qg, pg):
/// (1/N) { d_{q,qg} - d_{2q, 2qg+1} + exp(-2 pi i (p-pg)[2(q-qg)-1]/N) }.
Complex cross_wt_projectors(int qg, int pg, int p, int q, Dimension dim);

/// K(p,q) = (1/N) sum_{q',p'} W(q',p') W_{PpPq}(q',p').
ComplexGrid kirkwood_from_wigner(const RealGrid& w, Dimension dim);

/// Inverts the Kirkwood grid back to the Wigner grid via the double phase
/// sum with offset (N+1)/2 plus diagonal corrections; the position diagonal
/// <q|rho|q> is recovered from the K row sums, so the grid alone suffices.
RealGrid wigner_from_kirkwood(const ComplexGrid& k, Dimension dim);

}  // namespace qps

#endif
