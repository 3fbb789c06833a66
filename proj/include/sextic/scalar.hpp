#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace sextic {

// The base field of a computation: either Q or F_p for an odd prime p.
class Field {
public:
    static Field rational() { return Field(0); }
    static Field prime(std::uint32_t p);

    bool is_rational() const { return p_ == 0; }
    bool is_prime() const { return p_ != 0; }
    // 0 for Q.
    std::uint32_t characteristic() const { return p_; }

    bool operator==(const Field&) const = default;
    std::string name() const;

private:
    friend class Scalar;
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);

// Thrown whenever two scalars from different fields meet.
class FieldMismatch : public std::logic_error {
public:
    FieldMismatch(const Field& a, const Field& b);
};

struct Residue {
    std::uint32_t value;
    std::uint32_t prime;
};

// An exact scalar. Rationals are kept reduced by GMP; residues live in [0, p).
class Scalar {
public:
    Scalar() : rep_(mpq_class(0)) {}
    Scalar(const Field& f, long value);
    explicit Scalar(mpq_class q);
    Scalar(const Field& f, const mpq_class& q);

    static Scalar zero(const Field& f) { return Scalar(f, 0L); }
    static Scalar one(const Field& f) { return Scalar(f, 1L); }

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    // Only valid on the matching representation.
    const mpq_class& rational() const { return std::get<mpq_class>(rep_); }
    std::uint32_t residue() const { return std::get<Residue>(rep_).value; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;
    Scalar pow(unsigned e) const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void check_same(const Scalar& o) const;
    std::variant<Residue, mpq_class> rep_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint32_t p);

} // namespace sextic
