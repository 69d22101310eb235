#include "qps/wigner.hpp"

#include <cmath>

namespace qps {

namespace {

bool delta(long long a, long long b, Dimension dim) {
    return mod_n(a, dim) == mod_n(b, dim);
}

}  // namespace

Matrix line_operator_closed_form(int qp, int pp, Dimension dim) {
    const int n = dim.n();
    Matrix out = Matrix::Zero(n, n);
    for (int q = 0; q < n; ++q)
        for (int qbar = 0; qbar < n; ++qbar) {
            Complex v = 0.0;
            if (q == qp && qbar == qp) v += 1.0;
            if (q == qbar && delta(2 * q, 2 * qp + 1, dim)) v -= 1.0;
            if (delta(q + qbar, 2 * qp + 1, dim))
                v += omega_pow(static_cast<long long>(pp) * (q - qbar), dim);
            out(q, qbar) = v;
        }
    return out;
}

Matrix line_operator_mub_sum(int q, int p, Dimension dim,
                             const MubFamily& mubs) {
    const int n = dim.n();
    Matrix out = -Matrix::Identity(n, n);
    for (const auto b : mubs.basis_indices()) {
        const Vector& s = mubs.state(b, line_point(q, p, b, dim));
        out += s * s.adjoint();
    }
    return out;
}

Matrix line_operator_explicit(int q, int p, Dimension dim,
                              const MubFamily& mubs) {
    const int n = dim.n();
    Matrix out = Matrix::Zero(n, n);
    for (int b = 0; b < n; ++b)
        for (int m = 0; m < n; ++m) {
            Complex phase = 0.0;
            for (int k = 1; k < n; ++k)
                phase += omega_pow(
                    static_cast<long long>(k) *
                        (-p + static_cast<long long>(b) * q - m),
                    dim);
            const Vector& s = mubs.state(BasisIndex::shifted(b), m);
            out += (phase / static_cast<double>(n)) * (s * s.adjoint());
        }
    for (int nn = 0; nn < n; ++nn) {
        Complex phase = 0.0;
        for (int k = 0; k < n; ++k)
            phase += omega_pow(static_cast<long long>(k) * (q - nn), dim);
        out(nn, nn) += phase / static_cast<double>(n);
    }
    return out;
}

LineOperatorTable::LineOperatorTable(Dimension dim) : dim_(dim) {
    const int n = dim.n();
    ops_.reserve(static_cast<std::size_t>(n) * n);
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < n; ++p)
            ops_.push_back(line_operator_closed_form(q, p, dim));
}

Matrix wigner_transform_complex(const Matrix& a, const LineOperatorTable& table) {
    const int n = table.dim().n();
    Matrix grid(n, n);
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < n; ++p)
            grid(q, p) = (a * table.at(q, p)).trace();
    return grid;
}

RealGrid wigner_transform(const Matrix& a, const LineOperatorTable& table) {
    const Matrix grid = wigner_transform_complex(a, table);
    const double residue = grid.imag().cwiseAbs().maxCoeff();
    if (residue > 1e-8)
        throw NonRealWignerValue("imaginary residue " + std::to_string(residue) +
                                 " in Wigner values of a Hermitian operator");
    return grid.real();
}

CharacteristicTable characteristic_function(const Matrix& a, Dimension dim) {
    const int n = dim.n();
    CharacteristicTable table;
    table.kb = Matrix(n - 1, n);
    for (int b = 0; b < n; ++b)
        for (int k = 1; k < n; ++k)
            table.kb(k - 1, b) = (a * xz_power(b, k, dim).adjoint()).trace();
    table.l = Vector(n);
    const Matrix z = schwinger_z(dim);
    Matrix zl = Matrix::Identity(n, n);
    for (int l = 0; l < n; ++l) {
        table.l(l) = (a * zl.adjoint()).trace();
        zl = zl * z;
    }
    return table;
}

RealGrid wigner_from_characteristic(const CharacteristicTable& table,
                                    Dimension dim) {
    const int n = dim.n();
    Matrix grid = Matrix::Zero(n, n);
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < n; ++p) {
            Complex sum = 0.0;
            for (int b = 0; b < n; ++b)
                for (int k = 1; k < n; ++k)
                    sum += table.kb(k - 1, b) *
                           omega_pow(static_cast<long long>(k) *
                                         (-p + static_cast<long long>(b) * q),
                                     dim);
            for (int l = 0; l < n; ++l)
                sum += table.l(l) * omega_pow(static_cast<long long>(l) * q, dim);
            grid(q, p) = sum / static_cast<double>(n);
        }
    return grid.real();
}

Matrix inverse_wigner(const RealGrid& w, const LineOperatorTable& table) {
    const int n = table.dim().n();
    Matrix out = Matrix::Zero(n, n);
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < n; ++p) out += w(q, p) * table.at(q, p);
    return out / static_cast<double>(n);
}

double overlap(const RealGrid& wa, const RealGrid& wb) {
    if (wa.rows() != wb.rows() || wa.cols() != wb.cols())
        throw DimensionMismatchError("grid dimensions differ");
    return wa.cwiseProduct(wb).sum() / static_cast<double>(wa.rows());
}

double radon_marginal(const RealGrid& w, int m, BasisIndex b, Dimension dim) {
    const int n = dim.n();
    double sum = 0.0;
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < n; ++p)
            if (line_point(q, p, b, dim) == mod_n(m, dim)) sum += w(q, p);
    return sum / n;
}

}  // namespace qps
