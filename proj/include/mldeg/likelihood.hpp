#pragma once

// Critical points of the weighted log-likelihood sum_i s_i log f_i on the
// complement of the divisor collection, counted through a saturated Groebner
// basis or, on P^1, by a direct root count.

#include "mldeg/groebner.hpp"
#include "mldeg/linalg.hpp"
#include "mldeg/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mldeg {

class DivisorCollection {
public:
    // At least two nonzero homogeneous forms of positive degree in n+1 variables.
    // Throws InvalidInput / NotHomogeneous.
    DivisorCollection(unsigned n, std::vector<Polynomial> forms);

    unsigned n() const noexcept { return n_; }
    const std::vector<Polynomial>& forms() const noexcept { return forms_; }
    const std::vector<unsigned>& degrees() const noexcept { return degrees_; }

private:
    unsigned n_;
    std::vector<Polynomial> forms_;
    std::vector<unsigned> degrees_;
};

struct WeightVector {
    std::vector<std::int64_t> s;
};

inline constexpr std::int64_t kWeightBound = 10000;
// Entry bound for the per-trial coordinate change. Small bounds put rational
// critical points on the chart hyperplane too often; large ones slow Buchberger.
inline constexpr std::int64_t kChartEntryBound = 50;

// Nonzero weights in [-kWeightBound, kWeightBound] with sum s_i d_i = 0.
WeightVector sample_weights(std::span<const unsigned> degrees, std::uint64_t seed);

// Random invertible integer matrix with entries in [-bound, bound].
RationalMatrix random_coordinate_change(unsigned size, std::uint64_t seed, std::int64_t bound = 5);

std::string matrix_hash(const RationalMatrix& m);

struct LikelihoodSystem {
    std::vector<Polynomial> charts;    // g_i: transformed forms at x0 = 1
    std::vector<Polynomial> equations; // h_j, j = 1..n
    Polynomial saturation;             // product of the g_i
};

// Applies x -> A x, dehomogenizes at x0 and clears denominators of the gradient
// of sum s_i log g_i. The polynomial identity is certified at random points.
LikelihoodSystem likelihood_system(const DivisorCollection& coll, const WeightVector& w,
                                   const RationalMatrix& coord_change);

struct OracleTrial {
    std::uint64_t seed = 0;
    std::string matrix_hash;
    std::vector<std::int64_t> weights;
    std::size_t count = 0;
    bool retried = false;
};

struct OracleReport {
    std::optional<std::size_t> count; // set exactly when agreed
    std::vector<OracleTrial> trials;
    bool agreed = false;
};

struct OracleOptions {
    unsigned trials = 2;
    std::uint64_t seed = 0;
    unsigned max_dimension = 2;
    GroebnerBudget budget{};
};

// Throws BudgetExceeded (dimension above the bound, or from Buchberger) and
// NotZeroDimensional when a retried trial still has a positive-dimensional
// critical locus. Disagreement is reported through agreed == false.
OracleReport count_critical_points(const DivisorCollection& coll, const OracleOptions& options = {});

// Exact root count (with multiplicity) of the numerator off the divisor; n must be 1.
// Throws NonGenericWeights when the numerator vanishes identically.
std::size_t count_critical_points_p1(const DivisorCollection& coll, const WeightVector& w);

} // namespace mldeg
