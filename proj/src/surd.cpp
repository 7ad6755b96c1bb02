#include "taufan/surd.hpp"

#include "taufan/error.hpp"

#include <cmath>

namespace taufan {

long square_free_part(long v, long* root)
{
    if (v <= 0)
        throw usage_error("render", "radicand must be positive");
    long r = 1;
    long rest = v;
    for (long f = 2; f * f <= rest; ++f)
        while (rest % (f * f) == 0) {
            rest /= f * f;
            r *= f;
        }
    if (root)
        *root = r;
    return rest;
}

Surd::Surd(long m, long n) : m_(m), n_(n)
{
    for (auto& c : c_)
        c = 0;
    fold();
}

Surd::Surd(long m, long n, Scalar a, Scalar b, Scalar c, Scalar d) : m_(m), n_(n)
{
    c_[0] = a;
    c_[1] = b;
    c_[2] = c;
    c_[3] = d;
    fold();
}

Surd Surd::sqrt_of(long m, long n, const Scalar& square)
{
    // square must be a rational multiple of m, n or m*n by a rational square.
    if (square.get_den() != 1)
        throw usage_error("render", "square root of a non-integer is not supported");
    long root = 1;
    long sf = square_free_part(square.get_num().get_si(), &root);
    Surd base(m, n);
    if (sf == 1)
        return base.like(root);
    if (sf == base.m_)
        return base.like(0, root);
    if (sf == base.n_)
        return base.like(0, 0, root);
    if (square_free_part(base.m_ * base.n_) == sf) {
        long k = 1;
        square_free_part(base.m_ * base.n_, &k);
        return base.like(0, 0, 0, Scalar(root, k));
    }
    throw usage_error("render", "square root outside Q(sqrt " + std::to_string(m) + ", sqrt " + std::to_string(n) + ")");
}

Surd Surd::like(Scalar a, Scalar b, Scalar c, Scalar d) const
{
    Surd s;
    s.m_ = m_;
    s.n_ = n_;
    s.c_[0] = a;
    s.c_[1] = b;
    s.c_[2] = c;
    s.c_[3] = d;
    s.fold();
    return s;
}

void Surd::fold()
{
    for (auto& c : c_)
        c.canonicalize();
    if (m_ == 1) {
        c_[0] += c_[1];
        c_[2] += c_[3];
        c_[1] = 0;
        c_[3] = 0;
    }
    if (n_ == 1) {
        c_[0] += c_[2];
        c_[1] += c_[3];
        c_[2] = 0;
        c_[3] = 0;
    }
    if (m_ == n_ && m_ != 1) {
        // sqrt(n) = sqrt(m) and sqrt(mn) = m
        c_[0] += c_[3] * m_;
        c_[1] += c_[2];
        c_[2] = 0;
        c_[3] = 0;
    }
}

bool Surd::is_zero() const
{
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool Surd::operator==(const Surd& o) const
{
    return (*this - o).is_zero();
}

Surd Surd::operator+(const Surd& o) const
{
    return like(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]);
}

Surd Surd::operator-(const Surd& o) const
{
    return like(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]);
}

Surd Surd::operator-() const
{
    return like(-c_[0], -c_[1], -c_[2], -c_[3]);
}

Surd Surd::operator*(const Surd& o) const
{
    if (m_ != o.m_ || n_ != o.n_)
        throw usage_error("render", "mixing surds from different fields");
    const Scalar m(m_), n(n_);
    const Scalar* x = c_;
    const Scalar* y = o.c_;
    Scalar a = x[0] * y[0] + m * x[1] * y[1] + n * x[2] * y[2] + m * n * x[3] * y[3];
    Scalar b = x[0] * y[1] + x[1] * y[0] + n * (x[2] * y[3] + x[3] * y[2]);
    Scalar c = x[0] * y[2] + x[2] * y[0] + m * (x[1] * y[3] + x[3] * y[1]);
    Scalar d = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
    return like(a, b, c, d);
}

Surd Surd::conj_m() const
{
    return like(c_[0], -c_[1], c_[2], -c_[3]);
}

Surd Surd::conj_n() const
{
    return like(c_[0], c_[1], -c_[2], -c_[3]);
}

Surd Surd::inverse() const
{
    if (is_zero())
        throw inconsistency("render", "division by zero surd");
    Surd n1 = *this * conj_m();
    Surd norm = n1 * n1.conj_n();
    Surd num = conj_m() * n1.conj_n();
    const Scalar& q = norm.c_[0];
    return like(num.c_[0] / q, num.c_[1] / q, num.c_[2] / q, num.c_[3] / q);
}

Surd Surd::operator/(const Surd& o) const
{
    return *this * o.inverse();
}

long double Surd::value() const
{
    long double sm = std::sqrt(static_cast<long double>(m_));
    long double sn = std::sqrt(static_cast<long double>(n_));
    auto ld = [](const Scalar& s) { return static_cast<long double>(s.get_d()); };
    return ld(c_[0]) + ld(c_[1]) * sm + ld(c_[2]) * sn + ld(c_[3]) * sm * sn;
}

}  // namespace taufan
