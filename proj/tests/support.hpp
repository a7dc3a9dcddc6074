#pragma once

// Random fixtures shared by the test binaries.

#include "mldeg/polynomial.hpp"
#include "mldeg/random.hpp"

#include <string>
#include <vector>

namespace mldeg::testing {

inline Polynomial P(const std::string& text, unsigned nvars)
{
    auto names = default_variable_names(nvars);
    return parse_polynomial(text, names);
}

inline Polynomial random_poly(Rng& rng, unsigned nvars, unsigned max_degree, unsigned max_terms,
                              std::int64_t coeff_bound = 5)
{
    std::vector<Term> terms;
    const auto count = rng.uniform(1, max_terms);
    for (std::int64_t t = 0; t < count; ++t) {
        std::vector<std::uint32_t> e(nvars, 0);
        auto deg = static_cast<unsigned>(rng.uniform(0, max_degree));
        for (unsigned k = 0; k < deg; ++k)
            e[static_cast<std::size_t>(rng.uniform(0, nvars - 1))]++;
        terms.push_back({Monomial(std::move(e)), Rational(rng.nonzero(-coeff_bound, coeff_bound))});
    }
    return Polynomial::from_terms(nvars, std::move(terms));
}

// Homogeneous form with every monomial of the degree drawn independently.
inline Polynomial random_form(Rng& rng, unsigned nvars, unsigned degree, std::int64_t coeff_bound = 5,
                              bool dense = true)
{
    std::vector<Term> terms;
    std::vector<std::uint32_t> e(nvars, 0);
    // Enumerate all exponent vectors of the given degree.
    auto rec = [&](auto&& self, unsigned var, unsigned left) -> void {
        if (var + 1 == nvars) {
            e[var] = left;
            std::int64_t c = dense ? rng.uniform(-coeff_bound, coeff_bound)
                                   : (rng.uniform(0, 2) == 0 ? rng.uniform(-coeff_bound, coeff_bound) : 0);
            if (c != 0)
                terms.push_back({Monomial(e), Rational(c)});
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[var] = k;
            self(self, var + 1, left - k);
        }
    };
    rec(rec, 0, degree);
    Polynomial f = Polynomial::from_terms(nvars, std::move(terms));
    if (f.is_zero())
        return Polynomial::monomial(Monomial::variable(nvars, 0, degree));
    return f;
}

inline Polynomial random_linear_form(Rng& rng, unsigned nvars, std::int64_t bound = 9)
{
    Polynomial f(nvars);
    while (f.is_zero()) {
        f = Polynomial(nvars);
        for (unsigned j = 0; j < nvars; ++j)
            f += Polynomial::monomial(Monomial::variable(nvars, j), Rational(rng.uniform(-bound, bound)));
    }
    return f;
}

} // namespace mldeg::testing
