#pragma once

// Sparse multivariate polynomials over Q in canonical form: terms strictly
// decreasing under graded reverse lexicographic order (x0 > x1 > ...), no
// zero coefficients.

#include "mldeg/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mldeg {

class Monomial {
public:
    explicit Monomial(unsigned nvars = 0);
    explicit Monomial(std::vector<std::uint32_t> exponents);

    static Monomial variable(unsigned nvars, unsigned index, std::uint32_t power = 1);

    unsigned nvars() const noexcept { return static_cast<unsigned>(exps_.size()); }
    unsigned degree() const noexcept { return degree_; }
    std::uint32_t operator[](unsigned i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
    bool is_one() const noexcept { return degree_ == 0; }

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    // Requires other.divides(*this).
    Monomial operator/(const Monomial& other) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
    std::vector<std::uint32_t> exps_;
    unsigned degree_ = 0;
};

// Negative, zero or positive as a is smaller, equal or larger in grevlex.
int grevlex_compare(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
public:
    explicit Polynomial(unsigned nvars = 0) : nvars_(nvars) {}

    // Sorts, merges equal monomials and drops zeros.
    static Polynomial from_terms(unsigned nvars, std::vector<Term> terms);
    static Polynomial constant(unsigned nvars, const Rational& c);
    static Polynomial variable(unsigned nvars, unsigned index);
    static Polynomial monomial(const Monomial& m, const Rational& c = 1);

    unsigned nvars() const noexcept { return nvars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || terms_.front().mono.is_one(); }

    // Undefined for the zero polynomial.
    const Term& leading_term() const { return terms_.front(); }
    const Rational& leading_coefficient() const { return terms_.front().coeff; }
    const Monomial& leading_monomial() const { return terms_.front().mono; }

    // -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(unsigned var) const;
    bool involves(unsigned var) const { return degree_in(var) > 0; }

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // this - c * m * other, used by division loops.
    Polynomial sub_scaled(const Rational& c, const Monomial& m, const Polynomial& other) const;

    Polynomial pow(unsigned e) const;

private:
    unsigned nvars_;
    std::vector<Term> terms_;
};

enum class PolyOp { Add, Sub, Mul };

// Throws DimensionMismatch when variable counts differ.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

// Throws InvalidInput when var_index is out of range.
Polynomial poly_partial(const Polynomial& f, unsigned var_index);

// Divides by the leading coefficient; zero stays zero.
Polynomial normalize(const Polynomial& f);

// Quotient when b divides a exactly in Q[x]; nullopt otherwise. b must be nonzero.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

// Monic gcd; throws UndefinedGcd when both are zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
Polynomial poly_gcd(std::span<const Polynomial> fs);

// Product of the distinct irreducible factors, monic. Throws InvalidInput on zero.
Polynomial squarefree_part(const Polynomial& f);

// Common total degree, or nullopt when terms disagree. Throws InvalidInput on zero.
std::optional<unsigned> homogeneity_degree(const Polynomial& f);

// Sets chart_var := 1 and drops it. Throws NotHomogeneous.
Polynomial dehomogenize(const Polynomial& f, unsigned chart_var);

// det(d f_i / d x_j) for k polynomials in k variables. Throws DimensionMismatch.
Polynomial jacobian_det(std::span<const Polynomial> fs);

// Throws DimensionMismatch on length mismatch.
Rational eval_at(const Polynomial& f, std::span<const Rational> point);

// f(subs[0], ..., subs[nvars-1]); all subs share one variable count.
Polynomial compose(const Polynomial& f, std::span<const Polynomial> subs);

// Same polynomial in nvars + extra variables; the new ones come last.
Polynomial add_variables(const Polynomial& f, unsigned extra);

std::vector<std::string> default_variable_names(unsigned nvars);

// Canonical text, terms in decreasing grevlex order, e.g. "x0^2 - 3/2*x0*x1 + 1".
std::string to_string(const Polynomial& f, std::span<const std::string> names);
std::string to_string(const Polynomial& f);

// Parses +, -, *, ^, parentheses, rational literals and division by constants.
// Throws InvalidInput with a position on malformed text.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names);

} // namespace mldeg
