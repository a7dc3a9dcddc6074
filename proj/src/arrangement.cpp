#include "mldeg/arrangement.hpp"

#include "mldeg/error.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace mldeg {

namespace {

std::vector<Rational> linear_coefficients(const Polynomial& f)
{
    std::vector<Rational> a(f.nvars());
    for (const auto& t : f.terms())
        for (unsigned j = 0; j < f.nvars(); ++j)
            if (t.mono[j] == 1)
                a[j] = t.coeff;
    return a;
}

bool consistent(const RationalMatrix& reduced)
{
    for (const auto& row : reduced) {
        bool lhs_zero = std::all_of(row.begin(), row.end() - 1, [](const Rational& x) { return x == 0; });
        if (lhs_zero && row.back() != 0)
            return false;
    }
    return true;
}

} // namespace

ProjectiveArrangement::ProjectiveArrangement(unsigned n, std::vector<Polynomial> forms)
    : n_(n), forms_(std::move(forms))
{
    if (n_ == 0)
        throw Error(ErrorCode::InvalidInput, "ambient dimension must be at least 1");
    if (forms_.empty())
        throw Error(ErrorCode::InvalidInput, "arrangement needs at least one hyperplane");
    std::vector<std::vector<Rational>> coeffs;
    for (std::size_t i = 0; i < forms_.size(); ++i) {
        const auto& f = forms_[i];
        if (f.nvars() != n_ + 1)
            throw Error(ErrorCode::InvalidInput, "form " + std::to_string(i) + " is not in "
                                                     + std::to_string(n_ + 1) + " variables");
        if (f.is_zero() || homogeneity_degree(f) != 1u)
            throw Error(ErrorCode::NotLinear, "form " + std::to_string(i) + " is not a nonzero linear form");
        coeffs.push_back(linear_coefficients(f));
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = i + 1; j < coeffs.size(); ++j) {
            bool proportional = true;
            for (unsigned a = 0; a <= n_ && proportional; ++a)
                for (unsigned b = a + 1; b <= n_; ++b)
                    if (coeffs[i][a] * coeffs[j][b] != coeffs[i][b] * coeffs[j][a]) {
                        proportional = false;
                        break;
                    }
            if (proportional)
                throw Error(ErrorCode::InvalidInput, "forms " + std::to_string(i) + " and " + std::to_string(j)
                                                         + " define the same hyperplane");
        }
}

AffineArrangement decone(const ProjectiveArrangement& arr, unsigned pivot)
{
    if (pivot >= arr.forms().size())
        throw Error(ErrorCode::InvalidInput, "decone pivot " + std::to_string(pivot) + " out of range");
    const unsigned k = arr.n() + 1;
    const auto a = linear_coefficients(arr.forms()[pivot]);
    unsigned solve = 0;
    while (a[solve] == 0)
        ++solve;

    // On the chart a.x = 1, x_solve = (1 - sum_{j != solve} a_j x_j) / a_solve.
    AffineArrangement out;
    out.dim = arr.n();
    for (std::size_t i = 0; i < arr.forms().size(); ++i) {
        if (i == pivot)
            continue;
        const auto b = linear_coefficients(arr.forms()[i]);
        const Rational ratio = b[solve] / a[solve];
        AffineHyperplane row;
        for (unsigned j = 0; j < k; ++j)
            if (j != solve)
                row.push_back(b[j] - ratio * a[j]);
        row.push_back(-ratio);
        out.hyperplanes.push_back(std::move(row));
    }
    return out;
}

IntersectionPoset build_intersection_poset(const AffineArrangement& arr, std::size_t max_hyperplanes)
{
    const std::size_t m = arr.hyperplanes.size();
    if (m > max_hyperplanes || m > 63)
        throw Error(ErrorCode::BudgetExceeded, "intersection poset limited to " + std::to_string(max_hyperplanes)
                                                   + " hyperplanes, got " + std::to_string(m));
    for (const auto& h : arr.hyperplanes)
        if (h.size() != arr.dim + 1)
            throw Error(ErrorCode::DimensionMismatch, "affine hyperplane row has the wrong length");

    IntersectionPoset poset;
    std::map<RationalMatrix, std::size_t> index;
    poset.flats.push_back(Flat{{}, 0, 1, 0});
    index.emplace(RationalMatrix{}, 0);

    auto contained_in = [&](const Flat& x, std::size_t h) {
        RationalMatrix stacked = x.equations;
        stacked.push_back(arr.hyperplanes[h]);
        return rref(std::move(stacked)).size() == x.equations.size();
    };

    // Flats of rank r+1 arise as intersections of a rank-r flat with one hyperplane.
    std::size_t level_begin = 0;
    while (level_begin < poset.flats.size()) {
        const std::size_t level_end = poset.flats.size();
        for (std::size_t f = level_begin; f < level_end; ++f) {
            for (std::size_t h = 0; h < m; ++h) {
                if (poset.flats[f].containing >> h & 1)
                    continue;
                RationalMatrix stacked = poset.flats[f].equations;
                stacked.push_back(arr.hyperplanes[h]);
                RationalMatrix reduced = rref(std::move(stacked));
                if (!consistent(reduced))
                    continue;
                if (index.count(reduced))
                    continue;
                Flat flat{reduced, static_cast<unsigned>(reduced.size()), 0, 0};
                for (std::size_t j = 0; j < m; ++j)
                    if (contained_in(flat, j))
                        flat.containing |= std::uint64_t{1} << j;
                index.emplace(std::move(reduced), poset.flats.size());
                poset.flats.push_back(std::move(flat));
            }
        }
        level_begin = level_end;
    }

    auto below = [](const Flat& y, const Flat& x) {
        return y.containing != x.containing && (y.containing & ~x.containing) == 0;
    };
    for (std::size_t x = 1; x < poset.flats.size(); ++x) {
        Integer mu = 0;
        for (std::size_t y = 0; y < x; ++y)
            if (below(poset.flats[y], poset.flats[x])) {
                mu -= poset.flats[y].mobius;
                if (poset.flats[y].rank + 1 == poset.flats[x].rank)
                    poset.covers.emplace_back(y, x);
            }
        poset.flats[x].mobius = mu;
    }
    return poset;
}

std::size_t count_flats_of_rank(const IntersectionPoset& poset, unsigned rank)
{
    return static_cast<std::size_t>(std::count_if(poset.flats.begin(), poset.flats.end(),
                                                  [rank](const Flat& f) { return f.rank == rank; }));
}

Integer euler_complement_projective(const ProjectiveArrangement& arr, unsigned pivot)
{
    IntersectionPoset poset = build_intersection_poset(decone(arr, pivot));
    Integer chi = 0;
    for (const auto& f : poset.flats)
        chi += f.mobius;
    return chi;
}

Integer ml_degree_signed_euler(const ProjectiveArrangement& arr)
{
    Integer chi = euler_complement_projective(arr, 0);
    return arr.n() % 2 ? Integer(-chi) : chi;
}

bool is_generic(const ProjectiveArrangement& arr)
{
    IntersectionPoset poset = build_intersection_poset(decone(arr, 0));
    const std::size_t m = arr.forms().size() - 1;
    Integer binom;
    for (unsigned k = 0; k <= arr.n(); ++k) {
        mpz_bin_uiui(binom.get_mpz_t(), m, k);
        if (count_flats_of_rank(poset, k) != binom.get_ui())
            return false;
    }
    return true;
}

} // namespace mldeg
