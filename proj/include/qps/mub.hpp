#ifndef QPS_MUB_HPP
#define QPS_MUB_HPP

#include <stdexcept>
#include <vector>

#include "qps/field.hpp"
#include "qps/operators.hpp"

namespace qps {

struct ConstructionInvariantViolated : std::logic_error {
    using std::logic_error::logic_error;
};

/// State m of basis b. Reference basis states are the standard unit vectors;
/// the shifted-b states are the X Z^b eigenvectors with amplitudes
/// omega^{(b/2) n(n-1) - n m}/sqrt(N), the b/2 taken as b * n(n-1)/2 with
/// integer n(n-1)/2.
Vector mub_state(int m, BasisIndex b, Dimension dim);

/// Momentum eigenstate |p>, amplitudes exp(2*pi*i*p*q/N)/sqrt(N).
Vector momentum_state(int p, Dimension dim);

/// The N+1 mutually unbiased bases. Orthonormality, cross-basis
/// unbiasedness and the X Z^b eigen-relation are all checked at
/// construction; a violation means an implementation bug.
class MubFamily {
  public:
    explicit MubFamily(Dimension dim);

    Dimension dim() const { return dim_; }

    const Vector& state(BasisIndex b, int m) const {
        return bases_[b.is_reference() ? 0 : 1 + b.shift()][m];
    }

    /// Basis labels in line_points order: reference, 0, ..., N-1.
    std::vector<BasisIndex> basis_indices() const;

  private:
    Dimension dim_;
    std::vector<std::vector<Vector>> bases_;
};

inline MubFamily mub_family(Dimension dim) { return MubFamily(dim); }

}  // namespace qps

#endif
