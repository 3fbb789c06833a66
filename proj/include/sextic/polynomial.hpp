#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sextic/matrix.hpp"

namespace sextic {

// Univariate coefficients, lowest degree first, trailing zeros trimmed.
using UniPoly = std::vector<Scalar>;

class InterpolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unique polynomial of degree <= degree_bound through the samples. Samples past
// the first degree_bound + 1 must agree with it, otherwise InterpolationError.
UniPoly interpolate_univariate(const std::vector<std::pair<Scalar, Scalar>>& samples, std::size_t degree_bound);

int degree(const UniPoly& p); // -1 for the zero polynomial
Scalar evaluate(const UniPoly& p, const Scalar& t);
void trim(UniPoly& p);

// Sparse polynomial in a fixed number of variables.
class Polynomial {
public:
    using Exponents = std::vector<std::uint16_t>;

    Polynomial(const Field& f, std::size_t nvars) : field_(f), nvars_(nvars) {}
    static Polynomial constant(const Field& f, std::size_t nvars, const Scalar& c);
    static Polynomial variable(const Field& f, std::size_t nvars, std::size_t i);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Scalar>& terms() const { return terms_; }

    void add_term(const Exponents& e, const Scalar& c);
    Scalar coefficient(const Exponents& e) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Scalar& c) const;

    Polynomial derivative(std::size_t var) const;
    Scalar evaluate(const Vector& point) const;

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    bool is_homogeneous() const;
    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void check(const Polynomial& o) const;

    Field field_;
    std::size_t nvars_;
    std::map<Exponents, Scalar> terms_;
};

} // namespace sextic
