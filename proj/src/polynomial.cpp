#include "sextic/polynomial.hpp"

#include <sstream>

namespace sextic {

void trim(UniPoly& p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

int degree(const UniPoly& p)
{
    for (std::size_t i = p.size(); i-- > 0;)
        if (!p[i].is_zero())
            return static_cast<int>(i);
    return -1;
}

Scalar evaluate(const UniPoly& p, const Scalar& t)
{
    Scalar r = Scalar::zero(t.field());
    for (std::size_t i = p.size(); i-- > 0;)
        r = r * t + p[i];
    return r;
}

UniPoly interpolate_univariate(const std::vector<std::pair<Scalar, Scalar>>& samples, std::size_t degree_bound)
{
    const std::size_t n = degree_bound + 1;
    if (samples.size() < n)
        throw InterpolationError("interpolation needs at least degree_bound + 1 samples");
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].first == samples[j].first)
                throw InterpolationError("duplicate abscissa " + samples[i].first.to_string());

    const Field f = samples[0].first.field();
    // Newton divided differences on the first n samples.
    std::vector<Scalar> coef;
    for (std::size_t i = 0; i < n; ++i)
        coef.push_back(samples[i].second);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (samples[i].first - samples[i - level].first);

    // Expand Newton form into monomial coefficients.
    UniPoly p(n, Scalar::zero(f));
    for (std::size_t k = n; k-- > 0;) {
        // p = p * (x - x_k) + coef[k]
        UniPoly next(n, Scalar::zero(f));
        for (std::size_t i = 0; i + 1 < n; ++i) {
            next[i + 1] += p[i];
            next[i] -= p[i] * samples[k].first;
        }
        next[0] += coef[k];
        p = std::move(next);
    }
    trim(p);

    for (std::size_t i = n; i < samples.size(); ++i)
        if (evaluate(p, samples[i].first) != samples[i].second)
            throw InterpolationError("samples inconsistent with degree bound " + std::to_string(degree_bound));
    return p;
}

Polynomial Polynomial::constant(const Field& f, std::size_t nvars, const Scalar& c)
{
    Polynomial p(f, nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(const Field& f, std::size_t nvars, std::size_t i)
{
    Polynomial p(f, nvars);
    Exponents e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, Scalar::one(f));
    return p;
}

void Polynomial::add_term(const Exponents& e, const Scalar& c)
{
    if (e.size() != nvars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (c.is_zero())
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

Scalar Polynomial::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Polynomial::check(const Polynomial& o) const
{
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("polynomial variable count mismatch");
    if (field_ != o.field_)
        throw FieldMismatch(field_, o.field_);
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    check(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    check(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    check(o);
    Polynomial r(field_, nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i)
                e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            r.add_term(e, ca * cb);
        }
    return r;
}

Polynomial Polynomial::operator*(const Scalar& c) const
{
    Polynomial r(field_, nvars_);
    for (const auto& [e, x] : terms_)
        r.add_term(e, x * c);
    return r;
}

Polynomial Polynomial::derivative(std::size_t var) const
{
    Polynomial r(field_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e.at(var) == 0)
            continue;
        Exponents d = e;
        --d[var];
        r.add_term(d, c * Scalar(field_, static_cast<long>(e[var])));
    }
    return r;
}

Scalar Polynomial::evaluate(const Vector& point) const
{
    if (point.size() != nvars_)
        throw std::invalid_argument("evaluation point has wrong length");
    Scalar s = Scalar::zero(field_);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i])
                t *= point[i].pow(e[i]);
        s += t;
    }
    return s;
}

int Polynomial::total_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (auto x : e)
            s += x;
        d = std::max(d, s);
    }
    return d;
}

bool Polynomial::is_homogeneous() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (auto x : e)
            s += x;
        if (d >= 0 && s != d)
            return false;
        d = s;
    }
    return true;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first)
            os << " + ";
        first = false;
        os << it->second.to_string();
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!it->first[i])
                continue;
            os << '*' << (i < names.size() ? names[i] : "x" + std::to_string(i));
            if (it->first[i] > 1)
                os << '^' << it->first[i];
        }
    }
    return os.str();
}

} // namespace sextic
