#include "mldeg/groebner.hpp"

#include "mldeg/error.hpp"
#include "mldeg/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace mldeg {

Ideal::Ideal(unsigned nvars, std::vector<Polynomial> generators) : nvars_(nvars)
{
    for (auto& g : generators) {
        if (g.nvars() != nvars)
            throw Error(ErrorCode::InvalidInput, "ideal generator has " + std::to_string(g.nvars())
                                                     + " variables, expected " + std::to_string(nvars));
        if (!g.is_zero())
            generators_.push_back(std::move(g));
    }
    if (generators_.empty())
        throw Error(ErrorCode::InvalidInput, "ideal needs at least one nonzero generator");
}

GroebnerBudget budget_from_environment(GroebnerBudget base)
{
    if (const char* env = std::getenv("MLDEG_BUDGET_BASIS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw Error(ErrorCode::InvalidInput, std::string("MLDEG_BUDGET_BASIS must be a positive integer, got '")
                                                     + env + "'");
        base.max_basis = static_cast<std::size_t>(v);
    }
    return base;
}

namespace {

// Exponents packed one byte each: byte 7 holds the total degree, byte 6-i holds
// the exponent of x_{n-1-i}. Flipping the low 56 bits turns grevlex into plain
// unsigned comparison.
using Packed = std::uint64_t;

constexpr unsigned kMaxVars = 7;
constexpr unsigned kHardDegree = 63;
constexpr Packed kLow = 0x00FFFFFFFFFFFFFFULL;
constexpr Packed kHigh = 0x8080808080808080ULL;

struct Packing {
    unsigned nvars;

    unsigned shift(unsigned var) const { return 8 * (6 - (nvars - 1 - var)); }

    Packed pack(const Monomial& m) const
    {
        Packed p = static_cast<Packed>(m.degree()) << 56;
        for (unsigned i = 0; i < nvars; ++i)
            p |= static_cast<Packed>(m[i]) << shift(i);
        return p;
    }

    Monomial unpack(Packed p) const
    {
        std::vector<std::uint32_t> e(nvars);
        for (unsigned i = 0; i < nvars; ++i)
            e[i] = static_cast<std::uint32_t>((p >> shift(i)) & 0xFF);
        return Monomial(std::move(e));
    }

    std::uint32_t exponent(Packed p, unsigned var) const { return (p >> shift(var)) & 0xFF; }
};

inline Packed key(Packed p) { return p ^ kLow; }
inline unsigned degree(Packed p) { return static_cast<unsigned>(p >> 56); }
inline bool divides(Packed a, Packed b) { return (((b | kHigh) - a) & kHigh) == kHigh; }
inline bool coprime(Packed a, Packed b)
{
    for (unsigned s = 0; s < 56; s += 8)
        if (((a >> s) & 0xFF) && ((b >> s) & 0xFF))
            return false;
    return true;
}
inline Packed lcm(Packed a, Packed b)
{
    Packed out = 0;
    unsigned deg = 0;
    for (unsigned s = 0; s < 56; s += 8) {
        Packed e = std::max((a >> s) & 0xFF, (b >> s) & 0xFF);
        deg += static_cast<unsigned>(e);
        out |= e << s;
    }
    return out | static_cast<Packed>(deg) << 56;
}

struct IntTerm {
    Packed mono;
    Integer coeff;
};

// Integer polynomial kept primitive, terms by decreasing key.
using IntPoly = std::vector<IntTerm>;

IntPoly to_int(const Packing& pk, const Polynomial& f)
{
    Integer den = 1;
    for (const auto& t : f.terms())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    IntPoly out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        Rational scaled = t.coeff * den;
        out.push_back({pk.pack(t.mono), scaled.get_num()});
    }
    return out;
}

Polynomial to_rational_monic(const Packing& pk, const IntPoly& f)
{
    std::vector<Term> out;
    out.reserve(f.size());
    const Integer& lead = f.front().coeff;
    for (const auto& t : f) {
        Rational c(t.coeff, lead);
        c.canonicalize();
        out.push_back({pk.unpack(t.mono), std::move(c)});
    }
    return Polynomial::from_terms(pk.nvars, std::move(out));
}

void make_primitive(IntPoly& f)
{
    if (f.empty())
        return;
    Integer g = 0;
    for (const auto& t : f) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1)
            break;
    }
    if (f.front().coeff < 0)
        g = -g;
    if (g == 1)
        return;
    for (auto& t : f)
        mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
}

// a*f - b*m*g where the leading terms cancel; both inputs sorted.
IntPoly combine(const Integer& a, const IntPoly& f, std::size_t f_from, const Integer& b, Packed m,
                const IntPoly& g, std::size_t g_from)
{
    IntPoly out;
    out.reserve(f.size() - f_from + g.size() - g_from);
    std::size_t i = f_from, j = g_from;
    Integer tmp;
    while (i < f.size() || j < g.size()) {
        if (j >= g.size() || (i < f.size() && key(f[i].mono) > key(g[j].mono + m))) {
            out.push_back({f[i].mono, a * f[i].coeff});
            ++i;
        } else if (i >= f.size() || key(f[i].mono) < key(g[j].mono + m)) {
            out.push_back({g[j].mono + m, -(b * g[j].coeff)});
            ++j;
        } else {
            tmp = a * f[i].coeff;
            tmp -= b * g[j].coeff;
            if (tmp != 0)
                out.push_back({f[i].mono, tmp});
            ++i;
            ++j;
        }
    }
    return out;
}

struct Basis {
    std::vector<IntPoly> polys;
    std::vector<std::size_t> active;
};

const IntPoly* find_reducer(const Basis& basis, const std::vector<std::size_t>& set, Packed mono)
{
    for (auto idx : set) {
        const IntPoly& g = basis.polys[idx];
        if (divides(g.front().mono, mono))
            return &g;
    }
    return nullptr;
}

// Full reduction of f modulo the polynomials indexed by set; result primitive.
IntPoly reduce(IntPoly f, const Basis& basis, const std::vector<std::size_t>& set)
{
    IntPoly done;
    std::size_t steps = 0;
    Integer a, b, g;
    while (!f.empty()) {
        const IntTerm& top = f.front();
        const IntPoly* red = find_reducer(basis, set, top.mono);
        if (!red) {
            done.push_back(top);
            f.erase(f.begin());
            continue;
        }
        const Integer& lr = red->front().coeff;
        mpz_gcd(g.get_mpz_t(), lr.get_mpz_t(), top.coeff.get_mpz_t());
        mpz_divexact(a.get_mpz_t(), lr.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), top.coeff.get_mpz_t(), g.get_mpz_t());
        if (a < 0) {
            a = -a;
            b = -b;
        }
        const Packed m = top.mono - red->front().mono;
        f = combine(a, f, 1, b, m, *red, 1);
        if (a != 1)
            for (auto& t : done)
                t.coeff *= a;
        if (++steps % 8 == 0 || done.empty()) {
            // Joint content of the reduced part and the remainder.
            Integer c = 0;
            for (const auto& t : done)
                if (c != 1)
                    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coeff.get_mpz_t());
            for (const auto& t : f) {
                if (c == 1)
                    break;
                mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coeff.get_mpz_t());
            }
            if (c > 1) {
                for (auto& t : done)
                    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
                for (auto& t : f)
                    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
            }
        }
    }
    make_primitive(done);
    return done;
}

IntPoly spoly(const IntPoly& f, const IntPoly& g)
{
    const Packed l = lcm(f.front().mono, g.front().mono);
    Integer c;
    mpz_gcd(c.get_mpz_t(), f.front().coeff.get_mpz_t(), g.front().coeff.get_mpz_t());
    Integer a = g.front().coeff / c;
    Integer b = f.front().coeff / c;
    IntPoly fs;
    fs.reserve(f.size());
    const Packed mf = l - f.front().mono;
    for (std::size_t i = 1; i < f.size(); ++i)
        fs.push_back({f[i].mono + mf, f[i].coeff});
    return combine(a, fs, 0, b, l - g.front().mono, g, 1);
}

struct Pair {
    std::size_t i, j;
    Packed lcm;
};

bool pair_before(const Pair& p, const Pair& q)
{
    if (p.lcm != q.lcm)
        return key(p.lcm) < key(q.lcm);
    if (p.i != q.i)
        return p.i < q.i;
    return p.j < q.j;
}

// Gebauer-Moeller installation of a new basis element.
void update(Basis& basis, std::vector<Pair>& pairs, std::size_t h)
{
    const Packed lh = basis.polys[h].front().mono;
    auto lm = [&](std::size_t idx) { return basis.polys[idx].front().mono; };

    std::vector<Pair> candidates;
    for (auto g : basis.active)
        candidates.push_back({g, h, lcm(lm(g), lh)});

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const Pair& p = candidates[c];
        bool keep = coprime(lm(p.i), lh);
        if (!keep) {
            keep = true;
            for (std::size_t o = c + 1; o < candidates.size() && keep; ++o)
                if (divides(candidates[o].lcm, p.lcm))
                    keep = false;
            for (const auto& q : kept)
                if (keep && divides(q.lcm, p.lcm))
                    keep = false;
        }
        if (keep)
            kept.push_back(p);
    }

    std::vector<Pair> next;
    for (const auto& p : pairs) {
        const bool drop = divides(lh, p.lcm) && lcm(lm(p.i), lh) != p.lcm && lcm(lm(p.j), lh) != p.lcm;
        if (!drop)
            next.push_back(p);
    }
    for (const auto& p : kept)
        if (!coprime(lm(p.i), lh))
            next.push_back(p);
    pairs = std::move(next);

    std::vector<std::size_t> active;
    for (auto g : basis.active)
        if (!divides(lh, lm(g)))
            active.push_back(g);
    active.push_back(h);
    basis.active = std::move(active);
}

[[noreturn]] void over_budget(const std::string& what, const Basis& basis, std::size_t pairs)
{
    unsigned maxdeg = 0;
    for (const auto& p : basis.polys)
        maxdeg = std::max(maxdeg, degree(p.front().mono));
    throw Error(ErrorCode::BudgetExceeded, what + " (basis elements " + std::to_string(basis.polys.size())
                                               + ", pending pairs " + std::to_string(pairs)
                                               + ", max leading degree " + std::to_string(maxdeg) + ")");
}

std::vector<Monomial> enumerate_staircase(const GroebnerBasis& gb)
{
    std::vector<Monomial> out;
    if (gb.basis.size() == 1 && gb.basis[0].is_constant())
        return out;
    const unsigned n = gb.nvars;
    std::vector<std::uint32_t> bound(n, 0);
    for (const auto& g : gb.basis) {
        const Monomial& m = g.leading_monomial();
        for (unsigned v = 0; v < n; ++v)
            if (m[v] == m.degree() && (bound[v] == 0 || m[v] < bound[v]))
                bound[v] = m[v];
    }
    std::vector<std::uint32_t> e(n, 0);
    for (;;) {
        Monomial m(e);
        bool standard = true;
        for (const auto& g : gb.basis)
            if (g.leading_monomial().divides(m)) {
                standard = false;
                break;
            }
        if (standard)
            out.push_back(std::move(m));
        unsigned v = 0;
        while (v < n && ++e[v] == bound[v])
            e[v++] = 0;
        if (v == n)
            break;
    }
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
    return out;
}

} // namespace

GroebnerBasis buchberger(const Ideal& ideal, const GroebnerBudget& budget)
{
    const unsigned n = ideal.nvars();
    if (n == 0 || n > kMaxVars)
        throw Error(ErrorCode::InvalidInput, "Groebner engine supports 1 to " + std::to_string(kMaxVars)
                                                 + " variables, got " + std::to_string(n));
    const unsigned max_degree = std::min(budget.max_degree, kHardDegree);
    const Packing pk{n};

    GroebnerBasis result;
    result.nvars = n;
    auto unit = [&] {
        result.basis = {Polynomial::constant(n, 1)};
        result.staircase = std::vector<Monomial>{};
        return result;
    };

    std::vector<IntPoly> inputs;
    for (const auto& g : ideal.generators()) {
        if (static_cast<unsigned>(g.total_degree()) > max_degree)
            throw Error(ErrorCode::BudgetExceeded, "generator degree " + std::to_string(g.total_degree())
                                                       + " exceeds the degree budget "
                                                       + std::to_string(max_degree));
        inputs.push_back(to_int(pk, g));
        make_primitive(inputs.back());
    }
    std::stable_sort(inputs.begin(), inputs.end(),
                     [](const IntPoly& a, const IntPoly& b) { return key(a.front().mono) < key(b.front().mono); });

    Basis basis;
    std::vector<Pair> pairs;
    auto install = [&](IntPoly&& r) -> bool {
        if (degree(r.front().mono) == 0)
            return true;
        if (degree(r.front().mono) > max_degree)
            over_budget("polynomial degree exceeds budget " + std::to_string(max_degree), basis, pairs.size());
        if (basis.polys.size() >= budget.max_basis)
            over_budget("basis size exceeds budget " + std::to_string(budget.max_basis), basis, pairs.size());
        basis.polys.push_back(std::move(r));
        update(basis, pairs, basis.polys.size() - 1);
        return false;
    };

    for (auto& f : inputs) {
        IntPoly r = reduce(std::move(f), basis, basis.active);
        if (!r.empty() && install(std::move(r)))
            return unit();
    }

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), pair_before);
        Pair p = *best;
        pairs.erase(best);
        IntPoly r = reduce(spoly(basis.polys[p.i], basis.polys[p.j]), basis, basis.active);
        if (!r.empty() && install(std::move(r)))
            return unit();
    }

    // Interreduce the minimal basis.
    std::vector<std::size_t> active = basis.active;
    std::sort(active.begin(), active.end(), [&](std::size_t a, std::size_t b) {
        return key(basis.polys[a].front().mono) < key(basis.polys[b].front().mono);
    });
    for (auto idx : active) {
        std::vector<std::size_t> others;
        for (auto o : active)
            if (o != idx)
                others.push_back(o);
        // The head is irreducible by the others (minimal basis); only the tail changes.
        IntPoly combined = reduce(basis.polys[idx], basis, others);
        result.basis.push_back(to_rational_monic(pk, combined));
    }
    if (is_zero_dimensional(result))
        result.staircase = enumerate_staircase(result);
    return result;
}

bool is_zero_dimensional(const GroebnerBasis& gb)
{
    if (gb.basis.size() == 1 && gb.basis[0].is_constant())
        return true;
    for (unsigned v = 0; v < gb.nvars; ++v) {
        bool found = false;
        for (const auto& g : gb.basis) {
            const Monomial& m = g.leading_monomial();
            if (m[v] > 0 && m[v] == m.degree()) {
                found = true;
                break;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

std::size_t count_standard_monomials(const GroebnerBasis& gb)
{
    if (gb.staircase)
        return gb.staircase->size();
    if (!is_zero_dimensional(gb))
        throw Error(ErrorCode::NotZeroDimensional, "ideal has infinitely many standard monomials");
    return enumerate_staircase(gb).size();
}

std::size_t count_localized(const GroebnerBasis& gb, const Polynomial& g)
{
    if (g.is_zero())
        throw Error(ErrorCode::InvalidInput, "cannot localize at the zero polynomial");
    if (g.nvars() != gb.nvars)
        throw Error(ErrorCode::DimensionMismatch, "localizing polynomial lives in a different ring");
    if (!is_zero_dimensional(gb))
        throw Error(ErrorCode::NotZeroDimensional, "ideal has infinitely many standard monomials");
    const std::vector<Monomial> stair = gb.staircase ? *gb.staircase : enumerate_staircase(gb);
    const std::size_t size = stair.size();
    if (size == 0)
        return 0;
    auto index_of = [&](const Monomial& m) {
        auto it = std::lower_bound(stair.begin(), stair.end(), m,
                                   [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
        return static_cast<std::size_t>(it - stair.begin());
    };

    // Column k holds the normal form of g * stair[k].
    const Polynomial gr = normal_form(g, gb.basis);
    RationalMatrix mult(size, std::vector<Rational>(size, Rational(0)));
    for (std::size_t k = 0; k < size; ++k) {
        const Polynomial r = normal_form(gr * Polynomial::monomial(stair[k]), gb.basis);
        for (const auto& t : r.terms())
            mult[index_of(t.mono)][k] = t.coeff;
    }

    // Images of successive powers shrink until they stabilize at the part
    // supported off V(g).
    RationalMatrix image;
    for (std::size_t k = 0; k < size; ++k) {
        std::vector<Rational> col(size);
        for (std::size_t i = 0; i < size; ++i)
            col[i] = mult[i][k];
        image.push_back(std::move(col));
    }
    image = rref(std::move(image));
    for (;;) {
        RationalMatrix next;
        for (const auto& v : image) {
            std::vector<Rational> w(size, Rational(0));
            for (std::size_t i = 0; i < size; ++i)
                for (std::size_t k = 0; k < size; ++k)
                    if (v[k] != 0 && mult[i][k] != 0)
                        w[i] += mult[i][k] * v[k];
            next.push_back(std::move(w));
        }
        next = rref(std::move(next));
        if (next.size() == image.size())
            return image.size();
        image = std::move(next);
    }
}

Ideal saturate_rabinowitsch(const Ideal& ideal, const Polynomial& g)
{
    if (g.is_zero())
        throw Error(ErrorCode::InvalidInput, "cannot saturate by the zero polynomial");
    if (g.nvars() != ideal.nvars())
        throw Error(ErrorCode::DimensionMismatch, "saturating polynomial lives in a different ring");
    const unsigned n = ideal.nvars() + 1;
    std::vector<Polynomial> gens;
    for (const auto& f : ideal.generators())
        gens.push_back(add_variables(f, 1));
    gens.push_back(Polynomial::variable(n, n - 1) * add_variables(g, 1) - Polynomial::constant(n, 1));
    return Ideal(n, std::move(gens));
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors)
{
    std::vector<Term> remainder;
    Polynomial r = f;
    while (!r.is_zero()) {
        const Term& top = r.leading_term();
        const Polynomial* red = nullptr;
        for (const auto& d : divisors)
            if (!d.is_zero() && d.leading_monomial().divides(top.mono)) {
                red = &d;
                break;
            }
        if (!red) {
            remainder.push_back(top);
            r = r - Polynomial::monomial(top.mono, top.coeff);
            continue;
        }
        r = r.sub_scaled(top.coeff / red->leading_coefficient(), top.mono / red->leading_monomial(), *red);
    }
    return Polynomial::from_terms(f.nvars(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g)
{
    if (f.is_zero() || g.is_zero())
        return Polynomial(f.nvars());
    const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = Polynomial::monomial(l / f.leading_monomial(), Rational(1 / f.leading_coefficient())) * f;
    Polynomial b = Polynomial::monomial(l / g.leading_monomial(), Rational(1 / g.leading_coefficient())) * g;
    return a - b;
}

} // namespace mldeg
