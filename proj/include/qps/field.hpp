#ifndef QPS_FIELD_HPP
#define QPS_FIELD_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qps {

struct NotPrimeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EvenOrTooSmallError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroDivisorError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Hilbert-space size: an odd prime N > 2, so that {0,...,N-1} is a field
/// mod N and (N+1)/2 is the multiplicative inverse of 2.
class Dimension {
  public:
    static Dimension validate(int n);

    int n() const { return n_; }

    /// (N+1)/2, the field element with 2*half() == 1 mod N.
    int half() const { return (n_ + 1) / 2; }

    friend bool operator==(Dimension a, Dimension b) { return a.n_ == b.n_; }

  private:
    explicit Dimension(int n) : n_(n) {}
    int n_;
};

/// Canonical representative of x mod N in [0, N-1].
inline int mod_n(long long x, Dimension dim) {
    const long long n = dim.n();
    long long r = x % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

/// Label of one of the N+1 bases: the reference (position) basis, written
/// b-double-dot-0, or the eigenbasis of X Z^b for b in [0, N-1]. Kept as a
/// tagged value because the reference label and b = 0 are distinct bases.
class BasisIndex {
  public:
    static BasisIndex reference() { return BasisIndex(-1); }
    static BasisIndex shifted(int b);

    bool is_reference() const { return b_ < 0; }
    int shift() const;

    friend bool operator==(BasisIndex a, BasisIndex b) { return a.b_ == b.b_; }

  private:
    explicit BasisIndex(int b) : b_(b) {}
    int b_;
};

int mod_inverse(int a, Dimension dim);

/// The line M_{q,p}(b): q for the reference basis, (-p + b*q) mod N otherwise.
int line_point(int q, int p, BasisIndex b, Dimension dim);

/// All N+1 points of the line through (q,p), ordered reference, b=0,...,N-1.
std::vector<std::pair<BasisIndex, int>> line_points(int q, int p, Dimension dim);

}  // namespace qps

#endif
