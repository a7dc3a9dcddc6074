#pragma once

// Validation of n+1 forms as a dominant rational self-map of P^n and
// extraction of the reduced component degrees used by the ML degree formula.

#include "mldeg/polynomial.hpp"

#include <string>
#include <vector>

namespace mldeg {

struct MapInput {
    unsigned n = 0;
    std::vector<Polynomial> forms; // n+1 forms in n+1 variables
};

struct MapProfile {
    unsigned n = 0;
    unsigned d_f = 0;
    std::vector<std::int64_t> reduced_degrees;
    std::vector<Polynomial> reduced_parts;
    bool homogeneous_same_degree = false;
    bool dominant = false;
    bool base_locus_codim_ok = false;
    bool pairwise_reduced_coprime = false;

    // Every check passed; the theorem applies.
    bool conforming() const
    {
        return homogeneous_same_degree && dominant && base_locus_codim_ok && pairwise_reduced_coprime;
    }
    // Some reduced part has degree >= 2 in dimension >= 2, so it may split into
    // several components that the product formula would index separately.
    bool reduced_part_possibly_reducible() const;
};

// Runs every check and records the outcome without throwing on failed checks.
// Throws InvalidInput on structural problems (form count, variable count, zero form)
// and DegreeMismatch when forms are not homogeneous of one degree (later checks
// need a common degree).
MapProfile analyze_map(const MapInput& input);

// analyze_map, then throws the first failed check in order: DegreeMismatch,
// CommonFactor, NotDominant, SharedReducedComponent.
MapProfile validate_map(const MapInput& input);

struct MapDegree {
    Integer ml_degree;
    MapProfile profile;
};

MapDegree ml_degree_of_map(const MapInput& input);

} // namespace mldeg
