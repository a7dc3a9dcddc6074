#pragma once

// Truncated Chow ring Q[h]/(h^{n+1}) of projective n-space and the total Chern
// classes of the bundles that enter the log-cotangent ML degree formula.

#include "mldeg/rational.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace mldeg {

class ChowClass {
public:
    // The zero class of P^n.
    explicit ChowClass(unsigned n);
    // coeffs[k] multiplies h^k; must hold exactly n+1 entries.
    ChowClass(unsigned n, std::vector<Rational> coeffs);

    static ChowClass one(unsigned n);
    static ChowClass hyperplane(unsigned n); // h
    // 1 + d*h
    static ChowClass linear(unsigned n, const Rational& constant, const Rational& slope);

    unsigned dimension() const noexcept { return n_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](unsigned k) const { return coeffs_.at(k); }

    ChowClass& operator+=(const ChowClass& other);
    ChowClass& operator-=(const ChowClass& other);
    ChowClass& operator*=(const ChowClass& other);

    friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
    friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
    friend ChowClass operator*(ChowClass a, const ChowClass& b) { return a *= b; }
    friend bool operator==(const ChowClass&, const ChowClass&) = default;

    ChowClass pow(unsigned e) const;
    std::string str() const;

private:
    unsigned n_;
    std::vector<Rational> coeffs_;
};

// Cauchy product truncated at degree n; throws DimensionMismatch.
ChowClass chow_mul(const ChowClass& a, const ChowClass& b);

// Multiplicative inverse of a class with nonzero constant term; throws NonUnit.
ChowClass chow_invert_unit(const ChowClass& a);

namespace chern {

struct Line {
    std::int64_t degree;
};
struct Cotangent {};
struct Tangent {};
// Omega^1(log D) for D with reduced components of the listed degrees.
struct LogDivisor {
    std::vector<std::int64_t> degrees;
};

} // namespace chern

struct ChernSpec {
    std::variant<chern::Line, chern::Cotangent, chern::Tangent, chern::LogDivisor> kind;
    unsigned n;
};

ChowClass chern_total(const ChernSpec& spec);

// c(E (x) O(d)) for E of the given rank; throws InvalidInput unless c[0] == 1.
ChowClass chern_twist(const ChowClass& c, unsigned rank, std::int64_t d);

// Pullback along a map of degree d_f: h^k scales by d_f^k.
ChowClass chern_pullback(const ChowClass& c, std::int64_t d_f);

// Whitney product of 0 -> Omega^1 -> Omega^1(log D) -> O(D_red) -> 0, i.e.
// (1-h)^{n+1} (1 + sum(d'_i) h). Differs from the product formula once n >= 2.
ChowClass chern_extension_sequence(unsigned n, const std::vector<std::int64_t>& reduced_degrees);

// Coefficient of h^n in (1-h)^{n+1} / prod(1 - d'_i h) with n+1 reduced degrees.
// Returned unclamped; may be negative.
Integer ml_degree_theorem(unsigned n, const std::vector<std::int64_t>& reduced_degrees);

} // namespace mldeg
