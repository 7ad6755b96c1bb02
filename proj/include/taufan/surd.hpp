#pragma once

#include "taufan/field.hpp"

#include <string>

namespace taufan {

// Elements a + b*sqrt(m) + c*sqrt(n) + d*sqrt(m*n) of Q(sqrt m, sqrt n) for
// square-free positive integers m, n; degenerate radicands are folded so the
// representation stays unique.
class Surd {
public:
    Surd() = default;
    Surd(long m, long n);
    Surd(long m, long n, Scalar a, Scalar b = 0, Scalar c = 0, Scalar d = 0);

    static Surd sqrt_of(long m, long n, const Scalar& square);

    long m() const { return m_; }
    long n() const { return n_; }
    bool is_zero() const;
    bool operator==(const Surd& o) const;
    bool operator!=(const Surd& o) const { return !(*this == o); }

    Surd operator+(const Surd& o) const;
    Surd operator-(const Surd& o) const;
    Surd operator*(const Surd& o) const;
    Surd operator/(const Surd& o) const;
    Surd operator-() const;
    Surd inverse() const;

    long double value() const;

private:
    long m_ = 1;
    long n_ = 1;
    Scalar c_[4];

    void fold();
    Surd conj_m() const;
    Surd conj_n() const;
    Surd like(Scalar a, Scalar b = 0, Scalar c = 0, Scalar d = 0) const;
};

long square_free_part(long v, long* root = nullptr);

}  // namespace taufan
