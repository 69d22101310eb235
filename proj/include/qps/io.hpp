#ifndef QPS_IO_HPP
#define QPS_IO_HPP

#include <string>

#include "qps/kirkwood.hpp"
#include "qps/operators.hpp"
#include "qps/wigner.hpp"

namespace qps {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GridKind { wigner, kirkwood };
enum class FileFormat { csv, json };

/// Parsed grid file. values(q, p) holds the row entry for phase-space point
/// (q, p); for a Kirkwood file that entry is K(p, q).
struct GridData {
    GridKind kind = GridKind::wigner;
    int dim = 0;
    Eigen::MatrixXcd values;
};

/// State file schema: {"dim": N, "rho": [[[re, im], ...], ...]}.
DensityMatrix load_state(const std::string& path,
                         double tol = DensityMatrix::kDefaultTol);

void save_state(const std::string& path, const DensityMatrix& rho);

/// CSV header is `q,p,value` (wigner) or `q,p,re,im` (kirkwood); floats are
/// printed with 17 significant digits so doubles round-trip exactly.
void write_wigner_grid(const std::string& path, const RealGrid& w,
                       Dimension dim, FileFormat format);

void write_kirkwood_grid(const std::string& path, const ComplexGrid& k,
                         Dimension dim, FileFormat format);

GridData read_grid(const std::string& path);

/// 17-significant-digit decimal form of a double.
std::string format_double(double v);

}  // namespace qps

#endif
