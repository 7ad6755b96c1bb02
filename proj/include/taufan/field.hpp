#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace taufan {

using Scalar = mpq_class;
using IntVec = std::vector<int>;
using QVec = std::vector<Scalar>;

// Scalars are stored as mpq_class in both cases.  Over F_p every stored
// value is an integer representative in [0, p).
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(long p);

    bool is_prime() const { return p_ != 0; }
    long characteristic() const { return p_; }
    std::string name() const;

    Scalar normalize(const Scalar& x) const;
    Scalar inverse(const Scalar& x) const;
    bool representable(const Scalar& x) const;

    Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
    Scalar neg(const Scalar& a) const { return normalize(-a); }
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inverse(b)); }

    std::vector<Scalar> elements() const;

    bool operator==(const Field& other) const { return p_ == other.p_; }
    bool operator!=(const Field& other) const { return p_ != other.p_; }

private:
    explicit Field(long p) : p_(p) {}
    long p_;
};

bool is_prime_number(long p);
std::string scalar_string(const Scalar& x);
std::string vector_string(const IntVec& v);
std::string vector_string(const QVec& v);

}  // namespace taufan
