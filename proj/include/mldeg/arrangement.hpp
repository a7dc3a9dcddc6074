#pragma once

// Euler characteristic of complements of projective hyperplane arrangements
// through the intersection poset of the deconed affine arrangement.

#include "mldeg/linalg.hpp"
#include "mldeg/polynomial.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace mldeg {

class ProjectiveArrangement {
public:
    // Nonzero linear forms in n+1 variables, pairwise non-proportional.
    // Throws NotLinear or InvalidInput.
    ProjectiveArrangement(unsigned n, std::vector<Polynomial> forms);

    unsigned n() const noexcept { return n_; }
    const std::vector<Polynomial>& forms() const noexcept { return forms_; }

private:
    unsigned n_;
    std::vector<Polynomial> forms_;
};

// Row [a_1 .. a_n | b] for the hyperplane a.y = b.
using AffineHyperplane = std::vector<Rational>;

struct AffineArrangement {
    unsigned dim = 0;
    std::vector<AffineHyperplane> hyperplanes;
};

// Chart where the pivot form equals 1; the pivot becomes the hyperplane at infinity.
AffineArrangement decone(const ProjectiveArrangement& arr, unsigned pivot);

struct Flat {
    RationalMatrix equations; // canonical RREF of the augmented system
    unsigned rank = 0;        // codimension
    Integer mobius;           // mu(bottom, X)
    std::uint64_t containing = 0; // bit i set when the flat lies in hyperplane i
};

struct IntersectionPoset {
    std::vector<Flat> flats; // flats[0] is the whole space; sorted by rank
    std::vector<std::pair<std::size_t, std::size_t>> covers; // (lower, upper)
};

inline constexpr std::size_t kMaxHyperplanes = 14;

// Throws BudgetExceeded above max_hyperplanes.
IntersectionPoset build_intersection_poset(const AffineArrangement& arr,
                                           std::size_t max_hyperplanes = kMaxHyperplanes);

// Flats of the poset with the given rank.
std::size_t count_flats_of_rank(const IntersectionPoset& poset, unsigned rank);

Integer euler_complement_projective(const ProjectiveArrangement& arr, unsigned pivot = 0);

// (-1)^n times the Euler characteristic of the complement.
Integer ml_degree_signed_euler(const ProjectiveArrangement& arr);

// Deconed poset has binomial(m, k) flats of rank k for every k <= n, where m+1
// is the number of hyperplanes.
bool is_generic(const ProjectiveArrangement& arr);

} // namespace mldeg
