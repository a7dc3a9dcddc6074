#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mldeg/arrangement.hpp"
#include "mldeg/chow.hpp"
#include "mldeg/error.hpp"
#include "mldeg/map_analysis.hpp"
#include "support.hpp"

#include <set>

using namespace mldeg;
using mldeg::testing::P;

namespace {

ProjectiveArrangement arr(unsigned n, std::vector<std::string> texts)
{
    std::vector<Polynomial> forms;
    for (const auto& t : texts)
        forms.push_back(P(t, n + 1));
    return ProjectiveArrangement(n, std::move(forms));
}

AffineHyperplane row(std::vector<long> v)
{
    AffineHyperplane r;
    for (long x : v)
        r.push_back(Rational(x));
    return r;
}

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

// Every nonempty intersection of a subset of hyperplanes, found by solving
// each subset separately.
std::set<RationalMatrix> brute_force_flats(const AffineArrangement& a)
{
    std::set<RationalMatrix> out{RationalMatrix{}};
    const std::size_t m = a.hyperplanes.size();
    for (std::uint64_t mask = 1; mask < (1ULL << m); ++mask) {
        RationalMatrix rows;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1)
                rows.push_back(a.hyperplanes[i]);
        RationalMatrix r = rref(rows);
        bool inconsistent = false;
        for (const auto& v : r) {
            bool zero_lhs = true;
            for (unsigned j = 0; j < a.dim; ++j)
                zero_lhs = zero_lhs && v[j] == 0;
            inconsistent = inconsistent || (zero_lhs && v[a.dim] != 0);
        }
        if (!inconsistent)
            out.insert(r);
    }
    return out;
}

// Random arrangement with small coefficients, so that coincidences occur.
ProjectiveArrangement random_arrangement(Rng& rng, unsigned n, std::size_t count, std::int64_t bound)
{
    for (;;) {
        std::vector<Polynomial> forms;
        while (forms.size() < count) {
            Polynomial f = testing::random_linear_form(rng, n + 1, bound);
            if (f.is_zero())
                continue;
            forms.push_back(f);
        }
        try {
            return ProjectiveArrangement(n, std::move(forms));
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::InvalidInput);
        }
    }
}

// Certified generic: resampled until the poset has the maximal flat counts.
ProjectiveArrangement generic_arrangement(Rng& rng, unsigned n, std::size_t count)
{
    for (;;) {
        ProjectiveArrangement a = random_arrangement(rng, n, count, 20);
        if (is_generic(a))
            return a;
    }
}

// For lines in P^2: chi(complement) = 3 - chi(union), with
// chi(union) = 2L - sum over points p of (multiplicity(p) - 1).
Integer euler_lines_by_incidence(const ProjectiveArrangement& a)
{
    std::vector<std::vector<Rational>> c;
    for (const auto& f : a.forms()) {
        std::vector<Rational> v(3, Rational(0));
        for (const auto& t : f.terms())
            for (unsigned j = 0; j < 3; ++j)
                if (t.mono[j] == 1)
                    v[j] = t.coeff;
        c.push_back(v);
    }
    auto cross = [](const std::vector<Rational>& u, const std::vector<Rational>& v) {
        return std::vector<Rational>{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
    };
    auto normalize_point = [](std::vector<Rational> p) {
        for (const auto& x : p)
            if (x != 0) {
                Rational s = x;
                for (auto& y : p)
                    y /= s;
                break;
            }
        return p;
    };
    std::set<std::vector<Rational>> points;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            points.insert(normalize_point(cross(c[i], c[j])));
    Integer excess = 0;
    for (const auto& p : points) {
        long mult = 0;
        for (const auto& l : c)
            mult += (l[0] * p[0] + l[1] * p[1] + l[2] * p[2] == 0);
        excess += mult - 1;
    }
    return 3 - (2 * static_cast<long>(c.size()) - excess);
}

void check_mobius_recursion(const IntersectionPoset& poset)
{
    REQUIRE(!poset.flats.empty());
    CHECK(poset.flats[0].rank == 0);
    CHECK(poset.flats[0].mobius == 1);
    for (std::size_t x = 1; x < poset.flats.size(); ++x) {
        Integer sum = 0;
        for (const auto& y : poset.flats)
            if ((y.containing & poset.flats[x].containing) == y.containing)
                sum += y.mobius;
        CHECK(sum == 0);
    }
}

} // namespace

TEST_CASE("arrangement construction")
{
    CHECK(code_of([] { (void)arr(2, {"x0", "x1^2"}); }) == ErrorCode::NotLinear);
    CHECK(code_of([] { (void)arr(2, {"x0", "x0 + 1"}); }) == ErrorCode::NotLinear);
    CHECK(code_of([] { (void)arr(2, {"x0 + x1", "2*x0 + 2*x1"}); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { (void)arr(2, {"x0", "0"}); }) != ErrorCode::Internal);
    CHECK(code_of([] { (void)decone(arr(1, {"x0", "x1"}), 2); }) == ErrorCode::InvalidInput);
}

TEST_CASE("decone examples")
{
    AffineArrangement torus = decone(arr(2, {"x0", "x1", "x2"}), 0);
    CHECK(torus.dim == 2);
    CHECK(torus.hyperplanes == std::vector<AffineHyperplane>{row({1, 0, 0}), row({0, 1, 0})});

    AffineArrangement conc = decone(arr(2, {"x0", "x1", "x0 + x1"}), 0);
    REQUIRE(conc.hyperplanes.size() == 2);
    // Same normal direction, different offsets: parallel.
    RationalMatrix normals{{conc.hyperplanes[0][0], conc.hyperplanes[0][1]},
                           {conc.hyperplanes[1][0], conc.hyperplanes[1][1]}};
    CHECK(rank(normals) == 1);
    CHECK(rank(conc.hyperplanes) == 2);
    CHECK(build_intersection_poset(conc).flats.size() == 3);

    AffineArrangement one = decone(arr(3, {"x0 + x3", "x1 - x2"}), 1);
    CHECK(one.hyperplanes.size() == 1);
    CHECK(one.dim == 3);
}

TEST_CASE("intersection poset examples")
{
    AffineArrangement three{2, {row({1, 0, 0}), row({0, 1, 0}), row({1, 1, 1})}};
    IntersectionPoset p = build_intersection_poset(three);
    CHECK(p.flats.size() == 7);
    CHECK(count_flats_of_rank(p, 0) == 1);
    CHECK(count_flats_of_rank(p, 1) == 3);
    CHECK(count_flats_of_rank(p, 2) == 3);
    for (const auto& f : p.flats)
        CHECK(f.mobius == (f.rank == 1 ? -1 : 1));
    check_mobius_recursion(p);
    CHECK(brute_force_flats(three).size() == 7);

    AffineArrangement parallel{2, {row({1, 0, 0}), row({1, 0, 1})}};
    CHECK(build_intersection_poset(parallel).flats.size() == 3);
    AffineArrangement single{3, {row({1, 2, 3, 4})}};
    IntersectionPoset s = build_intersection_poset(single);
    CHECK(s.flats.size() == 2);
    CHECK(s.flats[1].mobius == -1);

    AffineArrangement many{1, {}};
    for (long i = 0; i < 15; ++i)
        many.hyperplanes.push_back(row({1, i}));
    CHECK(code_of([&] { (void)build_intersection_poset(many); }) == ErrorCode::BudgetExceeded);
    many.hyperplanes.pop_back();
    CHECK(build_intersection_poset(many).flats.size() == 15);
}

TEST_CASE("euler characteristic examples")
{
    for (unsigned n = 1; n <= 4; ++n) {
        std::vector<std::string> coords;
        for (unsigned i = 0; i <= n; ++i)
            coords.push_back("x" + std::to_string(i));
        ProjectiveArrangement a = arr(n, coords);
        CHECK(euler_complement_projective(a) == 0);
        CHECK(ml_degree_signed_euler(a) == 0);
    }
    ProjectiveArrangement four = arr(2, {"x0", "x1", "x2", "x0 + x1 + x2"});
    CHECK(euler_complement_projective(four) == 1);
    CHECK(ml_degree_signed_euler(four) == 1);
    CHECK(is_generic(four));
    ProjectiveArrangement conc = arr(2, {"x0", "x1", "x0 + x1"});
    CHECK(euler_complement_projective(conc) == -1);
    CHECK(!is_generic(conc));
    ProjectiveArrangement five = arr(2, {"x0", "x1", "x2", "x0 + x1 + x2", "x0 + 2*x1 + 3*x2"});
    CHECK(ml_degree_signed_euler(five) == 3);
    CHECK(euler_lines_by_incidence(five) == 3);
    // P^1 minus k points.
    CHECK(euler_complement_projective(arr(1, {"x0", "x1", "x0 - x1", "x0 + 2*x1"})) == -2);
}

TEST_CASE("pivot independence and Moebius recursion on random arrangements")
{
    Rng rng(8);
    for (int iter = 0; iter < 120; ++iter) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 3));
        std::size_t count = static_cast<std::size_t>(rng.uniform(2, n == 3 ? 6 : 7));
        ProjectiveArrangement a = random_arrangement(rng, n, count, 2);
        Integer first = euler_complement_projective(a, 0);
        for (unsigned pivot = 1; pivot < count; ++pivot)
            CHECK(euler_complement_projective(a, pivot) == first);
        for (unsigned pivot = 0; pivot < count; ++pivot) {
            AffineArrangement aff = decone(a, pivot);
            IntersectionPoset poset = build_intersection_poset(aff);
            check_mobius_recursion(poset);
            CHECK(poset.flats.size() == brute_force_flats(aff).size());
            for (const auto& [lo, hi] : poset.covers) {
                CHECK(poset.flats[hi].rank == poset.flats[lo].rank + 1);
                CHECK((poset.flats[lo].containing & poset.flats[hi].containing) == poset.flats[lo].containing);
            }
        }
        if (n == 2)
            CHECK(first == euler_lines_by_incidence(a));
        if (n == 1)
            CHECK(first == 2 - static_cast<long>(count));
    }
}

TEST_CASE("generic arrangements follow the binomial formula")
{
    Rng rng(13);
    for (unsigned n = 1; n <= 3; ++n)
        for (std::size_t count = 2; count <= 8; ++count) {
            ProjectiveArrangement a = generic_arrangement(rng, n, count);
            long m = static_cast<long>(count) - 1;
            CHECK(ml_degree_signed_euler(a) == binomial(m - 1, n));
            IntersectionPoset poset = build_intersection_poset(decone(a, 0));
            for (unsigned k = 0; k <= n; ++k)
                CHECK(count_flats_of_rank(poset, k) == binomial(m, k));
        }
}

TEST_CASE("Frobenius after a coordinate change agrees with the theorem")
{
    Rng rng(21);
    int done = 0;
    while (done < 30) {
        unsigned n = static_cast<unsigned>(rng.uniform(1, 3));
        unsigned d = static_cast<unsigned>(rng.uniform(1, 3));
        std::vector<Polynomial> lines;
        for (unsigned i = 0; i <= n; ++i)
            lines.push_back(testing::random_linear_form(rng, n + 1, 4));
        RationalMatrix m;
        for (const auto& l : lines) {
            std::vector<Rational> r(n + 1, Rational(0));
            for (const auto& t : l.terms())
                for (unsigned j = 0; j <= n; ++j)
                    if (t.mono[j] == 1)
                        r[j] = t.coeff;
            m.push_back(r);
        }
        if (determinant(m) == 0)
            continue;
        std::vector<Polynomial> forms;
        for (const auto& l : lines)
            forms.push_back(l.pow(d));
        CHECK(ml_degree_of_map(MapInput{n, forms}).ml_degree == 0);
        CHECK(ml_degree_signed_euler(ProjectiveArrangement(n, lines)) == 0);
        ++done;
    }
}
