#ifndef QPS_WIGNER_HPP
#define QPS_WIGNER_HPP

#include <stdexcept>
#include <vector>

#include "qps/field.hpp"
#include "qps/mub.hpp"
#include "qps/operators.hpp"

namespace qps {

struct NonRealWignerValue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Real N x N phase-space grid, indexed (q, p) = (row, col).
using RealGrid = Eigen::MatrixXd;

/// The N^2 line operators P_{q,p} of one dimension, built once from the
/// closed-form matrix elements and reused by every transform.
class LineOperatorTable {
  public:
    explicit LineOperatorTable(Dimension dim);

    Dimension dim() const { return dim_; }
    const Matrix& at(int q, int p) const { return ops_[q * dim_.n() + p]; }

  private:
    Dimension dim_;
    std::vector<Matrix> ops_;
};

/// Closed-form matrix elements of the line operator in the reference basis:
/// <q|P_{q',p'}|qbar> = d_{qq'} d_{qbar q'} - d_{q qbar} d_{2q, 2q'+1}
///                      + d_{q+qbar, 2q'+1} exp(2 pi i p'(q - qbar)/N),
/// all Kronecker arguments reduced mod N.
Matrix line_operator_closed_form(int q, int p, Dimension dim);

/// Line operator as the MUB sum: sum_b |M_{q,p}(b); b><M_{q,p}(b); b| - I.
Matrix line_operator_mub_sum(int q, int p, Dimension dim, const MubFamily& mubs);

/// Line operator from the literal double/triple phase sums over MUB
/// projectors; an independent route used to cross-check the other two.
Matrix line_operator_explicit(int q, int p, Dimension dim, const MubFamily& mubs);

/// W_A(q,p) = Tr(A P_{q,p}) over the whole grid; the Wigner values of a
/// Hermitian operator must come out real up to roundoff, which is asserted.
RealGrid wigner_transform(const Matrix& a, const LineOperatorTable& table);

/// Complex-valued transform of an arbitrary (not necessarily Hermitian)
/// operator; used internally by conversion oracles.
Matrix wigner_transform_complex(const Matrix& a, const LineOperatorTable& table);

/// Characteristic function: traces of A against the adjoints of the N^2
/// operator-basis elements (X Z^b)^k (k >= 1) and Z^l.
struct CharacteristicTable {
    // kb(k-1, b) = Tr(A [(X Z^b)^k]^dag) for k in [1, N-1]
    Matrix kb;
    // l(l) = Tr(A (Z^l)^dag)
    Vector l;
};

CharacteristicTable characteristic_function(const Matrix& a, Dimension dim);

/// Reassembles the Wigner grid from the characteristic function by the
/// double phase sum; serves as an oracle for wigner_transform.
RealGrid wigner_from_characteristic(const CharacteristicTable& table,
                                    Dimension dim);

/// A = (1/N) sum_{q,p} W(q,p) P_{q,p}.
Matrix inverse_wigner(const RealGrid& w, const LineOperatorTable& table);

/// Product formula: (1/N) sum W_A W_B = Tr(A B).
double overlap(const RealGrid& wa, const RealGrid& wb);

/// Discrete Radon transform: (1/N) of the grid summed over the line
/// M_{q,p}(b) = m, equal to <m;b|rho|m;b> for a state's Wigner grid.
double radon_marginal(const RealGrid& w, int m, BasisIndex b, Dimension dim);

}  // namespace qps

#endif
