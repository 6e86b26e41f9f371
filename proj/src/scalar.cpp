#include "coadj/scalar.hpp"

#include <utility>

namespace coadj {

long Rational::numerator_mod(long p) const
{
    mpz_class r = q_.get_num() % p;
    if (r < 0) r += p;
    return r.get_si();
}

long Rational::denominator_mod(long p) const
{
    mpz_class r = q_.get_den() % p;
    return r.get_si();
}

std::uint32_t Fp::unify(Fp& a, Fp b)
{
    if (a.p_ == b.p_) return a.p_;
    if (a.p_ == 0) {
        a = a.bound_to(b.p_);
        return b.p_;
    }
    if (b.p_ == 0) return a.p_;
    throw FieldMismatch("F_" + std::to_string(a.p_) + " vs F_" + std::to_string(b.p_));
}

Fp Fp::bound_to(std::uint32_t p) const
{
    if (p_ == p) return *this;
    if (p_ != 0) throw FieldMismatch("F_" + std::to_string(p_) + " vs F_" + std::to_string(p));
    return Fp(raw_, p);
}

Fp& Fp::operator+=(const Fp& o)
{
    std::uint32_t p = unify(*this, o);
    raw_ = p ? reduce(raw_ + reduce(o.raw_, p), p) : raw_ + o.raw_;
    return *this;
}

Fp& Fp::operator-=(const Fp& o)
{
    std::uint32_t p = unify(*this, o);
    raw_ = p ? reduce(raw_ - reduce(o.raw_, p), p) : raw_ - o.raw_;
    return *this;
}

Fp& Fp::operator*=(const Fp& o)
{
    std::uint32_t p = unify(*this, o);
    raw_ = p ? reduce(raw_ * reduce(o.raw_, p), p) : raw_ * o.raw_;
    return *this;
}

bool operator==(const Fp& a, const Fp& b)
{
    Fp x = a;
    std::uint32_t p = Fp::unify(x, b);
    if (!p) return x.raw_ == b.raw_;
    return x.raw_ == Fp::reduce(b.raw_, p);
}

Fp Fp::inverse() const
{
    if (!p_) {
        if (raw_ == 1 || raw_ == -1) return *this;
        throw FieldMismatch("inverse of an unbound integer");
    }
    if (raw_ == 0) throw InvalidC("inverse of zero in F_" + std::to_string(p_));
    long long t = 0, new_t = 1, r = p_, new_r = raw_;
    while (new_r) {
        long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return Fp(t, p_);
}

Fp to_fp(const Rational& q, std::uint32_t p)
{
    long den = q.denominator_mod(p);
    if (den == 0) throw FieldMismatch(q.str() + " has a denominator divisible by " + std::to_string(p));
    return Fp(q.numerator_mod(p), p) / Fp(den, p);
}

} // namespace coadj
