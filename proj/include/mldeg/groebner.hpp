#pragma once

// Buchberger's algorithm over Q under graded reverse lexicographic order, and
// zero-dimensional solution counting via standard monomials.

#include "mldeg/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace mldeg {

class Ideal {
public:
    // Drops zero generators; throws InvalidInput when none remain or
    // variable counts disagree.
    Ideal(unsigned nvars, std::vector<Polynomial> generators);

    unsigned nvars() const noexcept { return nvars_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }

private:
    unsigned nvars_;
    std::vector<Polynomial> generators_;
};

struct GroebnerBudget {
    std::size_t max_basis = 500;
    unsigned max_degree = 60; // hard ceiling 63 (packed exponents)
};

// Reads MLDEG_BUDGET_BASIS when set.
GroebnerBudget budget_from_environment(GroebnerBudget base = {});

struct GroebnerBasis {
    static constexpr std::string_view order = "grevlex";
    unsigned nvars = 0;
    // Reduced basis, monic, sorted by increasing leading monomial.
    std::vector<Polynomial> basis;
    // Standard monomials, present exactly when the ideal is zero-dimensional.
    std::optional<std::vector<Monomial>> staircase;
};

// At most 7 variables. Throws BudgetExceeded when the basis outgrows the budget.
GroebnerBasis buchberger(const Ideal& ideal, const GroebnerBudget& budget = {});

bool is_zero_dimensional(const GroebnerBasis& gb);

// Dimension of the quotient ring; throws NotZeroDimensional.
std::size_t count_standard_monomials(const GroebnerBasis& gb);

// Dimension of the quotient localized at g, i.e. the quotient of the
// Rabinowitsch saturation, read off as the stable rank of multiplication by g.
// Throws NotZeroDimensional and InvalidInput on g == 0.
std::size_t count_localized(const GroebnerBasis& gb, const Polynomial& g);

// Adjoins t*g - 1 in a fresh last variable t. Throws InvalidInput on g == 0.
Ideal saturate_rabinowitsch(const Ideal& ideal, const Polynomial& g);

// Remainder of full division by the given polynomials (rational, exact).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

} // namespace mldeg
