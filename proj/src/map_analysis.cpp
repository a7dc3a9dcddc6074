#include "mldeg/map_analysis.hpp"

#include "mldeg/chow.hpp"
#include "mldeg/error.hpp"
#include "mldeg/linalg.hpp"
#include "mldeg/random.hpp"

namespace mldeg {

namespace {

void check_structure(const MapInput& input)
{
    const std::size_t expected = input.n + 1;
    if (input.n == 0)
        throw Error(ErrorCode::InvalidInput, "ambient dimension must be at least 1");
    if (input.forms.size() != expected)
        throw Error(ErrorCode::InvalidInput, "a self-map of P^" + std::to_string(input.n) + " needs "
                                                 + std::to_string(expected) + " forms, got "
                                                 + std::to_string(input.forms.size()));
    for (std::size_t i = 0; i < input.forms.size(); ++i) {
        if (input.forms[i].nvars() != expected)
            throw Error(ErrorCode::InvalidInput, "form " + std::to_string(i) + " is not in "
                                                     + std::to_string(expected) + " variables");
        if (input.forms[i].is_zero())
            throw Error(ErrorCode::InvalidInput, "form " + std::to_string(i) + " is zero");
    }
}

// A nonzero value of the Jacobian at some point certifies dominance; otherwise the
// symbolic determinant decides.
bool jacobian_nonvanishing(const std::vector<Polynomial>& forms)
{
    const unsigned k = static_cast<unsigned>(forms.size());
    std::vector<std::vector<Polynomial>> partials(k);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j)
            partials[i].push_back(poly_partial(forms[i], j));

    Rng rng(0x6a61636f626961ULL);
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<Rational> point;
        for (unsigned j = 0; j < k; ++j)
            point.emplace_back(rng.uniform(-1000000, 1000000));
        RationalMatrix m(k, std::vector<Rational>(k));
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < k; ++j)
                m[i][j] = eval_at(partials[i][j], point);
        if (determinant(std::move(m)) != 0)
            return true;
    }
    return !jacobian_det(forms).is_zero();
}

} // namespace

bool MapProfile::reduced_part_possibly_reducible() const
{
    if (n < 2)
        return false;
    for (auto d : reduced_degrees)
        if (d >= 2)
            return true;
    return false;
}

MapProfile analyze_map(const MapInput& input)
{
    check_structure(input);
    MapProfile profile;
    profile.n = input.n;

    std::optional<unsigned> common;
    for (std::size_t i = 0; i < input.forms.size(); ++i) {
        auto d = homogeneity_degree(input.forms[i]);
        if (!d)
            throw Error(ErrorCode::DegreeMismatch, "form " + std::to_string(i) + " is not homogeneous");
        if (common && *common != *d)
            throw Error(ErrorCode::DegreeMismatch, "form " + std::to_string(i) + " has degree "
                                                       + std::to_string(*d) + ", expected "
                                                       + std::to_string(*common));
        common = d;
    }
    if (*common == 0)
        throw Error(ErrorCode::DegreeMismatch, "forms must have positive degree");
    profile.d_f = *common;
    profile.homogeneous_same_degree = true;

    profile.base_locus_codim_ok = poly_gcd(input.forms).is_constant();
    profile.dominant = jacobian_nonvanishing(input.forms);

    for (const auto& f : input.forms) {
        profile.reduced_parts.push_back(squarefree_part(f));
        profile.reduced_degrees.push_back(profile.reduced_parts.back().total_degree());
    }

    profile.pairwise_reduced_coprime = true;
    for (std::size_t i = 0; i < profile.reduced_parts.size() && profile.pairwise_reduced_coprime; ++i)
        for (std::size_t j = i + 1; j < profile.reduced_parts.size(); ++j)
            if (!poly_gcd(profile.reduced_parts[i], profile.reduced_parts[j]).is_constant()) {
                profile.pairwise_reduced_coprime = false;
                break;
            }
    return profile;
}

MapProfile validate_map(const MapInput& input)
{
    MapProfile profile = analyze_map(input);
    if (!profile.base_locus_codim_ok)
        throw Error(ErrorCode::CommonFactor, "forms share the factor " + to_string(poly_gcd(input.forms)));
    if (!profile.dominant)
        throw Error(ErrorCode::NotDominant, "Jacobian determinant vanishes identically");
    if (!profile.pairwise_reduced_coprime)
        throw Error(ErrorCode::SharedReducedComponent, "two forms share a reduced component");
    return profile;
}

MapDegree ml_degree_of_map(const MapInput& input)
{
    MapProfile profile = validate_map(input);
    Integer degree = ml_degree_theorem(profile.n, profile.reduced_degrees);
    return {std::move(degree), std::move(profile)};
}

} // namespace mldeg
