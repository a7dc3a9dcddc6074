// Multivariate gcd over Q: recursion on the highest variable present, content and
// primitive part over Q[remaining variables], subresultant remainder sequence.

#include "mldeg/error.hpp"
#include "mldeg/polynomial.hpp"

#include <algorithm>

namespace mldeg {

namespace {

int main_variable(const Polynomial& f)
{
    int v = -1;
    for (const auto& t : f.terms())
        for (unsigned i = 0; i < f.nvars(); ++i)
            if (t.mono[i] && static_cast<int>(i) > v)
                v = static_cast<int>(i);
    return v;
}

// Coefficients of f viewed in Q[others][x_var], indexed by degree.
std::vector<Polynomial> coefficients_in(const Polynomial& f, unsigned var)
{
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(f.degree_in(var), 0)) + 1);
    for (const auto& t : f.terms()) {
        auto exps = t.mono.exponents();
        auto e = exps[var];
        exps[var] = 0;
        buckets[e].push_back({Monomial(std::move(exps)), t.coeff});
    }
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& b : buckets)
        out.push_back(Polynomial::from_terms(f.nvars(), std::move(b)));
    return out;
}

Polynomial leading_coefficient_in(const Polynomial& f, unsigned var)
{
    const int d = f.degree_in(var);
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        if (static_cast<int>(t.mono[var]) != d)
            continue;
        auto exps = t.mono.exponents();
        exps[var] = 0;
        out.push_back({Monomial(std::move(exps)), t.coeff});
    }
    return Polynomial::from_terms(f.nvars(), std::move(out));
}

Polynomial exact(const Polynomial& a, const Polynomial& b)
{
    auto q = divide_exact(a, b);
    if (!q)
        throw Error(ErrorCode::Internal, "expected exact division of " + to_string(a) + " by " + to_string(b));
    return std::move(*q);
}

// Scales by a rational so the coefficients are coprime integers with positive leading one.
Polynomial integer_primitive(const Polynomial& f)
{
    if (f.is_zero())
        return f;
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& t : f.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (f.leading_coefficient() < 0)
        scale = -scale;
    return f * scale;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

Polynomial content_in(const Polynomial& f, unsigned var)
{
    auto coeffs = coefficients_in(f, var);
    Polynomial g(f.nvars());
    for (const auto& c : coeffs) {
        if (c.is_zero())
            continue;
        g = g.is_zero() ? normalize(c) : gcd_rec(g, c);
        if (g.is_constant())
            break;
    }
    return g;
}

Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, unsigned var)
{
    const int db = b.degree_in(var);
    const Polynomial lb = leading_coefficient_in(b, var);
    int e = a.degree_in(var) - db + 1;
    while (!a.is_zero() && a.degree_in(var) >= db) {
        const int da = a.degree_in(var);
        Polynomial la = leading_coefficient_in(a, var);
        Polynomial shift = la * Polynomial::monomial(Monomial::variable(a.nvars(), var, da - db));
        a = lb * a - shift * b;
        --e;
    }
    if (e > 0)
        a *= lb.pow(static_cast<unsigned>(e));
    return a;
}

// gcd of two polynomials primitive in var, both of positive degree in var.
Polynomial subresultant_gcd(Polynomial a, Polynomial b, unsigned var)
{
    if (a.degree_in(var) < b.degree_in(var))
        std::swap(a, b);
    const unsigned nv = a.nvars();
    Polynomial g = Polynomial::constant(nv, 1);
    Polynomial h = Polynomial::constant(nv, 1);
    for (;;) {
        const int delta = a.degree_in(var) - b.degree_in(var);
        Polynomial r = pseudo_remainder(a, b, var);
        if (r.is_zero())
            break;
        if (r.degree_in(var) == 0)
            return Polynomial::constant(nv, 1);
        a = std::move(b);
        b = exact(r, g * h.pow(static_cast<unsigned>(delta)));
        b = integer_primitive(b);
        g = leading_coefficient_in(a, var);
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        }
    }
    // b is only determined up to a content factor; strip it.
    return exact(b, content_in(b, var));
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero())
        return normalize(b);
    if (b.is_zero())
        return normalize(a);
    if (a.is_constant() || b.is_constant())
        return Polynomial::constant(a.nvars(), 1);
    if (a.size() == 1 || b.size() == 1) {
        // Divisors of a monomial are monomials.
        const Polynomial& m = a.size() == 1 ? a : b;
        const Polynomial& other = a.size() == 1 ? b : a;
        Monomial g = m.leading_monomial();
        for (const auto& t : other.terms())
            g = gcd(g, t.mono);
        return Polynomial::monomial(g);
    }

    const int v = std::max(main_variable(a), main_variable(b));
    const auto var = static_cast<unsigned>(v);
    if (!a.involves(var))
        return gcd_rec(a, content_in(b, var));
    if (!b.involves(var))
        return gcd_rec(content_in(a, var), b);

    Polynomial ca = content_in(a, var);
    Polynomial cb = content_in(b, var);
    Polynomial pa = integer_primitive(exact(a, ca));
    Polynomial pb = integer_primitive(exact(b, cb));
    Polynomial c = gcd_rec(ca, cb);
    Polynomial g = subresultant_gcd(std::move(pa), std::move(pb), var);
    return normalize(c * g);
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b)
{
    if (a.nvars() != b.nvars())
        throw Error(ErrorCode::DimensionMismatch, "gcd of polynomials in different variable counts");
    if (a.is_zero() && b.is_zero())
        throw Error(ErrorCode::UndefinedGcd, "gcd(0, 0) is undefined");
    return gcd_rec(integer_primitive(a), integer_primitive(b));
}

Polynomial poly_gcd(std::span<const Polynomial> fs)
{
    if (fs.empty())
        throw Error(ErrorCode::UndefinedGcd, "gcd of an empty list");
    Polynomial g(fs[0].nvars());
    bool any = false;
    for (const auto& f : fs) {
        if (f.is_zero())
            continue;
        g = any ? poly_gcd(g, f) : normalize(f);
        any = true;
        if (g.is_constant())
            break;
    }
    if (!any)
        throw Error(ErrorCode::UndefinedGcd, "gcd of zero polynomials is undefined");
    return g;
}

Polynomial squarefree_part(const Polynomial& f)
{
    if (f.is_zero())
        throw Error(ErrorCode::InvalidInput, "squarefree part of the zero polynomial");
    if (f.is_constant())
        return Polynomial::constant(f.nvars(), 1);
    Polynomial g = normalize(f);
    for (unsigned j = 0; j < f.nvars() && !g.is_constant(); ++j) {
        Polynomial d = poly_partial(f, j);
        if (!d.is_zero())
            g = poly_gcd(g, d);
    }
    return normalize(exact(f, g));
}

} // namespace mldeg
