#pragma once

/// Exact scalar arithmetic over the two supported coefficient fields:
/// arbitrary-precision rationals (GMP) and prime fields F_p with p < 2^31.
/// A Scalar knows its field; arithmetic between scalars of different fields
/// throws FieldMismatchError instead of silently coercing.

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "phk/error.hpp"

namespace phk {

enum class FieldKind : std::uint8_t { rationals, prime };

namespace detail {

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Modular inverse by extended Euclid. Requires gcd(a, p) = 1.
inline std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (r != 1) throw Error("element has no inverse mod " + std::to_string(p));
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

} // namespace detail

class Scalar;

/// Field descriptor. Either the rationals or F_p for a prime p.
class Field {
public:
    static Field rationals() { return Field(FieldKind::rationals, 0); }

    static Field prime(std::uint32_t p) {
        if (p >= (1u << 31))
            throw ParseError("prime modulus too large (need p < 2^31): " + std::to_string(p));
        if (!detail::is_prime_u32(p))
            throw ParseError("modulus is not prime: " + std::to_string(p));
        return Field(FieldKind::prime, p);
    }

    FieldKind kind() const { return kind_; }
    std::uint32_t modulus() const { return p_; }
    bool is_rational() const { return kind_ == FieldKind::rationals; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string to_string() const {
        return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
    }

    /// Accepts "Q" or "Fp:<p>". Returns nullopt on shape mismatch and throws
    /// ParseError when the shape is right but the modulus is invalid.
    static std::optional<Field> parse(const std::string& s) {
        if (s == "Q") return rationals();
        if (s.rfind("Fp:", 0) == 0) {
            const std::string digits = s.substr(3);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("bad field descriptor: " + s);
            unsigned long v = 0;
            try {
                v = std::stoul(digits);
            } catch (const std::exception&) {
                throw ParseError("bad field descriptor: " + s);
            }
            if (v >= (1ul << 31)) throw ParseError("prime modulus too large: " + s);
            return prime(static_cast<std::uint32_t>(v));
        }
        return std::nullopt;
    }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_long(long v) const;

    /// Parse one scalar literal. Rationals accept "n" and "n/d"; prime fields
    /// accept integers only (reduced mod p, negatives allowed).
    Scalar parse_scalar(const std::string& s) const;

private:
    Field(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {}

    FieldKind kind_;
    std::uint32_t p_;
};

class Scalar {
public:
    /// Default is the rational zero; exists for container resizing only.
    Scalar() : field_(Field::rationals()), q_(0), r_(0) {}

    static Scalar rational(const mpq_class& v) {
        Scalar s(Field::rationals());
        s.q_ = v;
        s.q_.canonicalize();
        return s;
    }

    static Scalar residue(std::uint32_t r, const Field& f) {
        if (f.is_rational()) throw FieldMismatchError("residue scalar needs a prime field");
        Scalar s(f);
        s.r_ = r % f.modulus();
        return s;
    }

    const Field& field() const { return field_; }

    bool is_zero() const {
        return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
    }

    bool is_one() const {
        return field_.is_rational() ? q_ == 1 : r_ == 1;
    }

    Scalar operator+(const Scalar& o) const {
        check_same(o);
        if (field_.is_rational()) return rational(q_ + o.q_);
        return residue_unchecked((static_cast<std::uint64_t>(r_) + o.r_) % field_.modulus());
    }

    Scalar operator-(const Scalar& o) const {
        check_same(o);
        if (field_.is_rational()) return rational(q_ - o.q_);
        const std::uint64_t p = field_.modulus();
        return residue_unchecked((static_cast<std::uint64_t>(r_) + p - o.r_) % p);
    }

    Scalar operator*(const Scalar& o) const {
        check_same(o);
        if (field_.is_rational()) return rational(q_ * o.q_);
        return residue_unchecked(static_cast<std::uint64_t>(r_) * o.r_ % field_.modulus());
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar operator-() const {
        if (field_.is_rational()) return rational(-q_);
        return residue_unchecked(r_ == 0 ? 0 : field_.modulus() - r_);
    }

    Scalar inverse() const {
        if (is_zero()) throw Error("division by zero");
        if (field_.is_rational()) return rational(1 / q_);
        return residue_unchecked(detail::mod_inverse(r_, field_.modulus()));
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const {
        check_same(o);
        return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical literal: "a/b" with positive b and gcd(a,b)=1, plain "a"
    /// when b = 1; prime-field residues print as their representative.
    std::string to_string() const {
        return field_.is_rational() ? q_.get_str() : std::to_string(r_);
    }

    const mpq_class& rational_value() const {
        if (!field_.is_rational()) throw FieldMismatchError("not a rational scalar");
        return q_;
    }

    std::uint32_t residue_value() const {
        if (field_.is_rational()) throw FieldMismatchError("not a prime-field scalar");
        return r_;
    }

private:
    explicit Scalar(const Field& f) : field_(f), q_(0), r_(0) {}

    Scalar residue_unchecked(std::uint64_t r) const {
        Scalar s(field_);
        s.r_ = static_cast<std::uint32_t>(r);
        return s;
    }

    void check_same(const Scalar& o) const {
        if (field_ != o.field_)
            throw FieldMismatchError("scalar field mismatch: " + field_.to_string() +
                                     " vs " + o.field_.to_string());
    }

    Field field_;
    mpq_class q_;
    std::uint32_t r_ = 0;
};

inline Scalar Field::zero() const { return from_long(0); }
inline Scalar Field::one() const { return from_long(1); }

inline Scalar Field::from_long(long v) const {
    if (is_rational()) return Scalar::rational(mpq_class(v));
    const std::int64_t p = modulus();
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return Scalar::residue(static_cast<std::uint32_t>(r), *this);
}

inline Scalar Field::parse_scalar(const std::string& s) const {
    if (s.empty()) throw ParseError("empty scalar literal");
    if (is_rational()) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw ParseError("bad rational literal: '" + s + "'");
        if (sgn(q.get_den()) == 0)
            throw ParseError("zero denominator in: '" + s + "'");
        q.canonicalize();
        return Scalar::rational(q);
    }
    if (s.find('/') != std::string::npos)
        throw ParseError("prime-field entries must be integers, got: '" + s + "'");
    mpz_class z;
    if (z.set_str(s, 10) != 0)
        throw ParseError("bad integer literal: '" + s + "'");
    mpz_class p(modulus());
    mpz_class r = z % p;
    if (sgn(r) < 0) r += p;
    return Scalar::residue(static_cast<std::uint32_t>(r.get_ui()), *this);
}

} // namespace phk
