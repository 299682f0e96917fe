#pragma once

/// Exact field arithmetic: prime fields F_p (p < 2^31) and arbitrary
/// precision rationals backed by GMP. Elements are always kept in
/// canonical form (residues in [0,p), fractions reduced with positive
/// denominator). No floating point anywhere.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <ostream>

#include <gmpxx.h>

namespace jcl::exactnum {

struct FieldMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

/// Element of F_p. Carries its modulus so values from different fields
/// cannot be mixed silently; every operation checks compatibility.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::int64_t value, std::uint32_t p) : p_(p) {
        if (p < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
        std::int64_t r = value % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        v_ = static_cast<std::uint32_t>(r);
    }

    static Fp zero(std::uint32_t p) { return Fp(0, p); }
    static Fp one(std::uint32_t p) { return Fp(1, p); }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return v_ == 0 ? *this : raw(p_ - v_, p_); }

    Fp operator+(const Fp& o) const {
        check(o);
        std::uint64_t s = std::uint64_t(v_) + o.v_;
        if (s >= p_) s -= p_;
        return raw(static_cast<std::uint32_t>(s), p_);
    }
    Fp operator-(const Fp& o) const {
        check(o);
        std::uint64_t s = std::uint64_t(v_) + p_ - o.v_;
        if (s >= p_) s -= p_;
        return raw(static_cast<std::uint32_t>(s), p_);
    }
    Fp operator*(const Fp& o) const {
        check(o);
        return raw(static_cast<std::uint32_t>((std::uint64_t(v_) * o.v_) % p_), p_);
    }
    Fp inv() const {
        if (v_ == 0) throw std::domain_error("Fp: division by zero");
        // extended Euclid
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        if (a != 1) throw std::domain_error("Fp: modulus not prime?");
        return Fp(x0, p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp pow(std::uint64_t e) const {
        Fp r = one(p_), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const Fp& o) const { check(o); return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

private:
    static Fp raw(std::uint32_t v, std::uint32_t p) {
        Fp r; r.v_ = v; r.p_ = p; return r;
    }
    void check(const Fp& o) const {
        if (p_ == 0 || o.p_ == 0 || p_ != o.p_)
            throw FieldMismatch("Fp: mixed or unset moduli");
    }
    std::uint32_t v_;
    std::uint32_t p_;
};

inline std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.str(); }

/// Rational number, always reduced. Thin wrapper over mpq_class that
/// guarantees canonicalization on every construction path.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "a" or "a/b".
    static Rat parse(const std::string& s) {
        mpq_class q(s);
        q.canonicalize();
        return Rat(q);
    }

    const mpq_class& get() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat operator-() const { return wrap(-v_); }
    Rat operator+(const Rat& o) const { return wrap(v_ + o.v_); }
    Rat operator-(const Rat& o) const { return wrap(v_ - o.v_); }
    Rat operator*(const Rat& o) const { return wrap(v_ * o.v_); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        return wrap(v_ / o.v_);
    }
    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: division by zero");
        return wrap(1 / v_);
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    std::string str() const { return v_.get_str(); }

private:
    static Rat wrap(mpq_class q) { Rat r; r.v_ = std::move(q); return r; }
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

// Helpers that let templated code manufacture constants in the right field.
inline Fp zero_like(const Fp& x) { return Fp::zero(x.modulus()); }
inline Fp one_like(const Fp& x) { return Fp::one(x.modulus()); }
inline Fp from_int_like(const Fp& x, std::int64_t k) { return Fp(k, x.modulus()); }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat from_int_like(const Rat&, std::int64_t k) { return Rat(static_cast<long>(k)); }

/// Characteristic of the field an element lives in (0 for Rat).
inline long characteristic(const Fp& x) { return static_cast<long>(x.modulus()); }
inline long characteristic(const Rat&) { return 0; }

} // namespace jcl::exactnum
