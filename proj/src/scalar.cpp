#include "sextic/scalar.hpp"

namespace sextic {

bool is_prime_number(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field Field::prime(std::uint32_t p)
{
    if (p < 3 || !is_prime_number(p))
        throw std::invalid_argument("field characteristic must be an odd prime, got " + std::to_string(p));
    return Field(p);
}

std::string Field::name() const
{
    return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

FieldMismatch::FieldMismatch(const Field& a, const Field& b)
    : std::logic_error("mixed-field operation: " + a.name() + " vs " + b.name())
{
}

std::uint32_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint32_t p)
{
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1)
            r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p)
{
    if (a % p == 0)
        throw std::domain_error("division by zero in F_" + std::to_string(p));
    return pow_mod(a, p - 2, p);
}

namespace {

std::uint32_t reduce_long(long v, std::uint32_t p)
{
    long r = v % static_cast<long>(p);
    if (r < 0)
        r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce_rational(const mpq_class& q, std::uint32_t p)
{
    mpz_class num = q.get_num() % p;
    if (num < 0)
        num += p;
    mpz_class den = q.get_den() % p;
    if (den == 0)
        throw std::domain_error("rational with denominator divisible by " + std::to_string(p));
    auto n = static_cast<std::uint32_t>(num.get_ui());
    auto d = static_cast<std::uint32_t>(den.get_ui());
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(n) * inverse_mod(d, p) % p);
}

} // namespace

Scalar::Scalar(const Field& f, long value)
{
    if (f.is_rational())
        rep_ = mpq_class(value);
    else
        rep_ = Residue{reduce_long(value, f.characteristic()), f.characteristic()};
}

Scalar::Scalar(mpq_class q) : rep_(std::move(q))
{
    std::get<mpq_class>(rep_).canonicalize();
}

Scalar::Scalar(const Field& f, const mpq_class& q)
{
    if (f.is_rational()) {
        mpq_class c(q);
        c.canonicalize();
        rep_ = std::move(c);
    } else {
        rep_ = Residue{reduce_rational(q, f.characteristic()), f.characteristic()};
    }
}

Field Scalar::field() const
{
    if (auto r = std::get_if<Residue>(&rep_))
        return Field(r->prime);
    return Field::rational();
}

bool Scalar::is_zero() const
{
    if (auto r = std::get_if<Residue>(&rep_))
        return r->value == 0;
    return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool Scalar::is_one() const
{
    if (auto r = std::get_if<Residue>(&rep_))
        return r->value == 1;
    return std::get<mpq_class>(rep_) == 1;
}

void Scalar::check_same(const Scalar& o) const
{
    const auto* a = std::get_if<Residue>(&rep_);
    const auto* b = std::get_if<Residue>(&o.rep_);
    if ((a == nullptr) != (b == nullptr) || (a && a->prime != b->prime))
        throw FieldMismatch(field(), o.field());
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    if (auto* x = std::get_if<Residue>(&r.rep_))
        x->value = x->value == 0 ? 0 : x->prime - x->value;
    else
        std::get<mpq_class>(r.rep_) = -std::get<mpq_class>(r.rep_);
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    check_same(o);
    if (auto* x = std::get_if<Residue>(&rep_)) {
        std::uint64_t s = std::uint64_t(x->value) + std::get<Residue>(o.rep_).value;
        x->value = static_cast<std::uint32_t>(s % x->prime);
    } else {
        std::get<mpq_class>(rep_) += std::get<mpq_class>(o.rep_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    check_same(o);
    if (auto* x = std::get_if<Residue>(&rep_)) {
        std::uint64_t s = std::uint64_t(x->value) + x->prime - std::get<Residue>(o.rep_).value;
        x->value = static_cast<std::uint32_t>(s % x->prime);
    } else {
        std::get<mpq_class>(rep_) -= std::get<mpq_class>(o.rep_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    check_same(o);
    if (auto* x = std::get_if<Residue>(&rep_)) {
        std::uint64_t s = std::uint64_t(x->value) * std::get<Residue>(o.rep_).value;
        x->value = static_cast<std::uint32_t>(s % x->prime);
    } else {
        std::get<mpq_class>(rep_) *= std::get<mpq_class>(o.rep_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    check_same(o);
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    Scalar r = *this;
    if (auto* x = std::get_if<Residue>(&r.rep_))
        x->value = inverse_mod(x->value, x->prime);
    else
        std::get<mpq_class>(r.rep_) = 1 / std::get<mpq_class>(r.rep_);
    return r;
}

Scalar Scalar::pow(unsigned e) const
{
    Scalar r = Scalar::one(field());
    Scalar b = *this;
    while (e) {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const
{
    check_same(o);
    if (auto* x = std::get_if<Residue>(&rep_))
        return x->value == std::get<Residue>(o.rep_).value;
    return std::get<mpq_class>(rep_) == std::get<mpq_class>(o.rep_);
}

std::string Scalar::to_string() const
{
    if (auto* x = std::get_if<Residue>(&rep_))
        return std::to_string(x->value);
    return std::get<mpq_class>(rep_).get_str();
}

} // namespace sextic
