#pragma once

#include "coadj/error.hpp"

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

namespace coadj {

// Exact rational backed by GMP.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(v) {}
    Rational(long num, long den) : q_(num, den)
    {
        if (den == 0) throw InvalidC("zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) {}

    const mpq_class& value() const { return q_; }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    Rational inverse() const
    {
        if (is_zero()) throw InvalidC("inverse of zero");
        return Rational(mpq_class(1) / q_);
    }
    long numerator_mod(long p) const;
    long denominator_mod(long p) const;
    std::string str() const { return q_.get_str(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero()) throw InvalidC("division by zero");
        q_ /= o.q_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

// Element of F_p. The modulus travels with the value; modulus 0 marks an integer literal
// (from Eigen's Scalar(0), Scalar(1)) that binds to the modulus of the other operand.
class Fp {
public:
    Fp() = default;
    Fp(int v) : raw_(v) {}
    Fp(long v) : raw_(v) {}
    Fp(long long v, std::uint32_t p) : raw_(reduce(v, p)), p_(p) {}

    std::uint32_t modulus() const { return p_; }
    // Residue in [0, p) once bound; the raw integer otherwise.
    long long value() const { return raw_; }
    bool bound() const { return p_ != 0; }
    bool is_zero() const { return raw_ == 0; }
    bool is_one() const { return raw_ == 1; }
    Fp bound_to(std::uint32_t p) const;
    Fp inverse() const;
    std::string str() const { return std::to_string(raw_); }

    Fp& operator+=(const Fp& o);
    Fp& operator-=(const Fp& o);
    Fp& operator*=(const Fp& o);
    Fp& operator/=(const Fp& o) { return *this *= (p_ && !o.p_ ? o.bound_to(p_) : o).inverse(); }
    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend Fp operator-(const Fp& a) { return Fp(0) - a; }
    friend bool operator==(const Fp& a, const Fp& b);
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.str(); }

    static long long reduce(long long v, std::uint32_t p)
    {
        long long r = v % static_cast<long long>(p);
        return r < 0 ? r + p : r;
    }

private:
    // Brings a and b to a common modulus; throws FieldMismatch if both are bound and differ.
    static std::uint32_t unify(Fp& a, Fp b);

    long long raw_ = 0;
    std::uint32_t p_ = 0;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

// Maps a rational into F_p; throws FieldMismatch if p divides the denominator.
Fp to_fp(const Rational& q, std::uint32_t p);

} // namespace coadj

namespace Eigen {

template <>
struct NumTraits<coadj::Rational> : GenericNumTraits<coadj::Rational> {
    typedef coadj::Rational Real;
    typedef coadj::Rational NonInteger;
    typedef coadj::Rational Nested;
    typedef coadj::Rational Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 10,
        MulCost = 20
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<coadj::Fp> : GenericNumTraits<coadj::Fp> {
    typedef coadj::Fp Real;
    typedef coadj::Fp NonInteger;
    typedef coadj::Fp Nested;
    typedef coadj::Fp Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 3
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen
