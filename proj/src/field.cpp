#include "qps/field.hpp"

namespace qps {

Dimension Dimension::validate(int n) {
    if (n <= 2 || n % 2 == 0)
        throw EvenOrTooSmallError("dimension must be an odd prime > 2, got " +
                                  std::to_string(n));
    for (int d = 3; static_cast<long long>(d) * d <= n; d += 2)
        if (n % d == 0)
            throw NotPrimeError("dimension must be prime, got " +
                                std::to_string(n) + " = " + std::to_string(d) +
                                " * " + std::to_string(n / d));
    return Dimension(n);
}

BasisIndex BasisIndex::shifted(int b) {
    if (b < 0) throw std::invalid_argument("basis shift must be non-negative");
    return BasisIndex(b);
}

int BasisIndex::shift() const {
    if (is_reference())
        throw std::logic_error("reference basis has no shift label");
    return b_;
}

int mod_inverse(int a, Dimension dim) {
    const int n = dim.n();
    a = mod_n(a, dim);
    if (a == 0) throw ZeroDivisorError("no inverse of 0 mod " + std::to_string(n));
    // extended Euclid on (a, n); n prime so gcd is 1
    int t = 0, new_t = 1;
    int r = n, new_r = a;
    while (new_r != 0) {
        const int quot = r / new_r;
        int tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    return mod_n(t, dim);
}

int line_point(int q, int p, BasisIndex b, Dimension dim) {
    if (b.is_reference()) return mod_n(q, dim);
    return mod_n(-static_cast<long long>(p) +
                     static_cast<long long>(b.shift()) * q,
                 dim);
}

std::vector<std::pair<BasisIndex, int>> line_points(int q, int p, Dimension dim) {
    std::vector<std::pair<BasisIndex, int>> pts;
    pts.reserve(dim.n() + 1);
    pts.emplace_back(BasisIndex::reference(),
                     line_point(q, p, BasisIndex::reference(), dim));
    for (int b = 0; b < dim.n(); ++b) {
        const auto idx = BasisIndex::shifted(b);
        pts.emplace_back(idx, line_point(q, p, idx, dim));
    }
    return pts;
}

}  // namespace qps
