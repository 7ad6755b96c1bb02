#include "taufan/field.hpp"

#include "taufan/error.hpp"

namespace taufan {

bool is_prime_number(long p)
{
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

Field Field::prime(long p)
{
    if (!is_prime_number(p))
        throw Error(ErrorKind::Usage, "algebra_core", "field order " + std::to_string(p) + " is not prime");
    return Field(p);
}

std::string Field::name() const
{
    return p_ == 0 ? "q" : "f" + std::to_string(p_);
}

static mpz_class mod_positive(const mpz_class& a, long p)
{
    mpz_class r = a % p;
    if (r < 0)
        r += p;
    return r;
}

bool Field::representable(const Scalar& x) const
{
    if (p_ == 0)
        return true;
    return mod_positive(x.get_den(), p_) != 0;
}

Scalar Field::normalize(const Scalar& x) const
{
    if (p_ == 0)
        return x;
    if (x.get_den() == 1)
        return Scalar(mod_positive(x.get_num(), p_));
    mpz_class den = mod_positive(x.get_den(), p_);
    if (den == 0)
        throw Error(ErrorKind::Inconsistency, "algebra_core",
                    "scalar " + x.get_str() + " is not representable over " + name());
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t());
    return Scalar(mod_positive(x.get_num() * inv, p_));
}

Scalar Field::inverse(const Scalar& x) const
{
    if (x == 0)
        throw Error(ErrorKind::Inconsistency, "algebra_core", "division by zero");
    if (p_ == 0)
        return 1 / x;
    mpz_class inv;
    mpz_class v = normalize(x).get_num();
    mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), mpz_class(p_).get_mpz_t());
    return Scalar(inv);
}

std::vector<Scalar> Field::elements() const
{
    std::vector<Scalar> out;
    if (p_ == 0)
        return out;
    for (long k = 0; k < p_; ++k)
        out.emplace_back(k);
    return out;
}

std::string scalar_string(const Scalar& x)
{
    return x.get_str();
}

std::string vector_string(const IntVec& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string vector_string(const QVec& v)
{
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

}  // namespace taufan
