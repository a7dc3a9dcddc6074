#include "mldeg/likelihood.hpp"

#include "mldeg/error.hpp"
#include "mldeg/random.hpp"

#include <future>

namespace mldeg {

DivisorCollection::DivisorCollection(unsigned n, std::vector<Polynomial> forms) : n_(n), forms_(std::move(forms))
{
    if (n_ == 0)
        throw Error(ErrorCode::InvalidInput, "ambient dimension must be at least 1");
    if (forms_.size() < 2)
        throw Error(ErrorCode::InvalidInput, "a divisor collection needs at least two forms");
    for (std::size_t i = 0; i < forms_.size(); ++i) {
        const auto& f = forms_[i];
        if (f.nvars() != n_ + 1)
            throw Error(ErrorCode::InvalidInput, "form " + std::to_string(i) + " is not in "
                                                     + std::to_string(n_ + 1) + " variables");
        if (f.is_zero())
            throw Error(ErrorCode::InvalidInput, "form " + std::to_string(i) + " is zero");
        auto d = homogeneity_degree(f);
        if (!d)
            throw Error(ErrorCode::NotHomogeneous, "form " + std::to_string(i) + " is not homogeneous");
        if (*d == 0)
            throw Error(ErrorCode::InvalidInput, "form " + std::to_string(i) + " is a constant");
        degrees_.push_back(*d);
    }
}

WeightVector sample_weights(std::span<const unsigned> degrees, std::uint64_t seed)
{
    if (degrees.size() < 2)
        throw Error(ErrorCode::InvalidInput, "weights need at least two divisors");
    for (auto d : degrees)
        if (d == 0)
            throw Error(ErrorCode::InvalidInput, "divisor degrees must be positive");
    Rng rng(seed);
    const std::size_t last = degrees.size() - 1;
    const auto d_last = static_cast<std::int64_t>(degrees[last]);
    std::int64_t range = kWeightBound;
    for (unsigned attempt = 1;; ++attempt) {
        // Narrow the draw range now and then so the solved entry fits the bound.
        if (attempt % 4096 == 0)
            range = std::max<std::int64_t>(1, range / 2);
        WeightVector w;
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < last; ++i) {
            w.s.push_back(rng.nonzero(-range, range));
            acc += w.s.back() * static_cast<std::int64_t>(degrees[i]);
        }
        if (acc == 0 || acc % d_last != 0)
            continue;
        const std::int64_t solved = -acc / d_last;
        if (solved < -kWeightBound || solved > kWeightBound)
            continue;
        w.s.push_back(solved);
        return w;
    }
}

RationalMatrix random_coordinate_change(unsigned size, std::uint64_t seed, std::int64_t bound)
{
    Rng rng(seed);
    for (;;) {
        RationalMatrix m(size, std::vector<Rational>(size));
        for (auto& row : m)
            for (auto& x : row)
                x = Rational(rng.uniform(-bound, bound));
        if (determinant(m) != 0)
            return m;
    }
}

std::string matrix_hash(const RationalMatrix& m)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
    };
    for (const auto& row : m) {
        for (const auto& x : row) {
            feed(to_string(x));
            feed(",");
        }
        feed(";");
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4)
        out[static_cast<std::size_t>(i)] = hex[h & 0xF];
    return out;
}

namespace {

void check_weights(const DivisorCollection& coll, const WeightVector& w)
{
    if (w.s.size() != coll.forms().size())
        throw Error(ErrorCode::InvalidInput, "need one weight per form");
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < w.s.size(); ++i) {
        if (w.s[i] == 0)
            throw Error(ErrorCode::InvalidInput, "weights must be nonzero");
        acc += w.s[i] * static_cast<std::int64_t>(coll.degrees()[i]);
    }
    if (acc != 0)
        throw Error(ErrorCode::InvalidInput, "weights must satisfy sum s_i d_i = 0");
}

// Removes every factor that also divides a power of g.
Polynomial strip_factors_of(Polynomial h, const Polynomial& g)
{
    if (h.is_zero())
        return h;
    Polynomial c = poly_gcd(h, g);
    while (!c.is_constant()) {
        h = *divide_exact(h, c);
        c = poly_gcd(h, c);
    }
    return normalize(h);
}

Polynomial numerator_of_gradient(const std::vector<Polynomial>& g, const std::vector<std::int64_t>& s,
                                 unsigned var)
{
    const std::size_t m = g.size();
    const unsigned nv = g[0].nvars();
    // prefix[i] = g_0 ... g_{i-1}, suffix[i] = g_i ... g_{m-1}
    std::vector<Polynomial> prefix(m + 1, Polynomial::constant(nv, 1));
    std::vector<Polynomial> suffix(m + 1, Polynomial::constant(nv, 1));
    for (std::size_t i = 0; i < m; ++i)
        prefix[i + 1] = prefix[i] * g[i];
    for (std::size_t i = m; i-- > 0;)
        suffix[i] = suffix[i + 1] * g[i];
    Polynomial h(nv);
    for (std::size_t i = 0; i < m; ++i) {
        Polynomial d = poly_partial(g[i], var);
        if (d.is_zero())
            continue;
        h += Rational(s[i]) * d * prefix[i] * suffix[i + 1];
    }
    return h;
}

void certify(const LikelihoodSystem& sys, const WeightVector& w, std::uint64_t seed)
{
    Rng rng(seed);
    const unsigned nv = sys.saturation.nvars();
    int checked = 0;
    for (int attempt = 0; checked < 5 && attempt < 200; ++attempt) {
        std::vector<Rational> p;
        for (unsigned j = 0; j < nv; ++j)
            p.emplace_back(rng.uniform(-1000, 1000), rng.uniform(1, 97));
        for (auto& x : p)
            x.canonicalize();
        Rational gp = eval_at(sys.saturation, p);
        if (gp == 0)
            continue;
        std::vector<Rational> gi;
        for (const auto& g : sys.charts)
            gi.push_back(eval_at(g, p));
        for (unsigned j = 0; j < nv; ++j) {
            Rational sum;
            for (std::size_t i = 0; i < gi.size(); ++i)
                sum += Rational(w.s[i]) * eval_at(poly_partial(sys.charts[i], j), p) / gi[i];
            if (eval_at(sys.equations[j], p) != gp * sum)
                throw Error(ErrorCode::Internal, "likelihood equations fail the rational identity check");
        }
        ++checked;
    }
    if (checked < 5)
        throw Error(ErrorCode::Internal, "could not find points off the divisor to certify equations");
}

std::optional<std::size_t> run_trial_once(const DivisorCollection& coll, std::uint64_t trial_seed,
                                          const GroebnerBudget& budget, OracleTrial& record)
{
    const WeightVector w = sample_weights(coll.degrees(), mix_seed(trial_seed, 1));
    const RationalMatrix a = random_coordinate_change(coll.n() + 1, mix_seed(trial_seed, 2), kChartEntryBound);
    record.seed = trial_seed;
    record.weights = w.s;
    record.matrix_hash = matrix_hash(a);

    LikelihoodSystem sys = likelihood_system(coll, w, a);

    // Localizing at g equals localizing at its squarefree part, and factors of
    // g are units there; both steps leave the counted quotient unchanged.
    Polynomial g = squarefree_part(sys.saturation);
    std::vector<Polynomial> gens;
    for (const auto& h : sys.equations) {
        Polynomial s = strip_factors_of(h, g);
        if (!s.is_zero())
            gens.push_back(std::move(s));
    }
    if (gens.empty())
        return std::nullopt;
    GroebnerBasis gb = buchberger(Ideal(coll.n(), gens), budget);
    if (is_zero_dimensional(gb))
        return count_localized(gb, g);
    // Components inside the divisor can make the unsaturated locus infinite.
    gb = buchberger(saturate_rabinowitsch(Ideal(coll.n(), std::move(gens)), g), budget);
    if (!is_zero_dimensional(gb))
        return std::nullopt;
    return count_standard_monomials(gb);
}

OracleTrial run_trial(const DivisorCollection& coll, std::uint64_t seed, unsigned index,
                      const GroebnerBudget& budget)
{
    OracleTrial record;
    auto count = run_trial_once(coll, mix_seed(seed, index), budget, record);
    if (!count) {
        record.retried = true;
        count = run_trial_once(coll, mix_seed(seed, index + 1000003u), budget, record);
    }
    if (!count)
        throw Error(ErrorCode::NotZeroDimensional, "critical locus is positive-dimensional in trial "
                                                       + std::to_string(index) + " after one retry");
    record.count = *count;
    return record;
}

} // namespace

LikelihoodSystem likelihood_system(const DivisorCollection& coll, const WeightVector& w,
                                   const RationalMatrix& coord_change)
{
    check_weights(coll, w);
    const unsigned k = coll.n() + 1;
    if (coord_change.size() != k)
        throw Error(ErrorCode::DimensionMismatch, "coordinate change must be " + std::to_string(k) + "x"
                                                      + std::to_string(k));
    for (const auto& row : coord_change)
        if (row.size() != k)
            throw Error(ErrorCode::DimensionMismatch, "coordinate change must be square");
    if (determinant(coord_change) == 0)
        throw Error(ErrorCode::InvalidInput, "coordinate change is singular");

    std::vector<Polynomial> subs;
    for (unsigned i = 0; i < k; ++i) {
        Polynomial row(k);
        for (unsigned j = 0; j < k; ++j)
            row += Polynomial::monomial(Monomial::variable(k, j), coord_change[i][j]);
        subs.push_back(std::move(row));
    }

    LikelihoodSystem sys;
    for (const auto& f : coll.forms()) {
        Polynomial g = dehomogenize(compose(f, subs), 0);
        if (g.is_zero())
            throw Error(ErrorCode::DegenerateChart, "a form vanishes on the affine chart");
        sys.charts.push_back(std::move(g));
    }
    const unsigned nv = coll.n();
    sys.saturation = Polynomial::constant(nv, 1);
    for (const auto& g : sys.charts)
        sys.saturation *= g;
    for (unsigned j = 0; j < nv; ++j)
        sys.equations.push_back(numerator_of_gradient(sys.charts, w.s, j));

    std::uint64_t cert_seed = 0x5a17;
    for (auto s : w.s)
        cert_seed = mix_seed(cert_seed, static_cast<std::uint64_t>(s));
    certify(sys, w, cert_seed);
    return sys;
}

OracleReport count_critical_points(const DivisorCollection& coll, const OracleOptions& options)
{
    if (options.trials < 2)
        throw Error(ErrorCode::InvalidInput, "at least two trials are required");
    if (coll.n() > options.max_dimension)
        throw Error(ErrorCode::BudgetExceeded, "critical-point oracle is limited to dimension "
                                                   + std::to_string(options.max_dimension));

    std::vector<std::future<OracleTrial>> running;
    for (unsigned t = 0; t < options.trials; ++t)
        running.push_back(std::async(std::launch::async, run_trial, std::cref(coll), options.seed, t,
                                     std::cref(options.budget)));

    OracleReport report;
    std::exception_ptr failure;
    for (auto& f : running) {
        try {
            report.trials.push_back(f.get());
        } catch (...) {
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    report.agreed = true;
    for (const auto& t : report.trials)
        if (t.count != report.trials.front().count)
            report.agreed = false;
    if (report.agreed)
        report.count = report.trials.front().count;
    return report;
}

std::size_t count_critical_points_p1(const DivisorCollection& coll, const WeightVector& w)
{
    if (coll.n() != 1)
        throw Error(ErrorCode::InvalidInput, "direct root count needs n == 1");
    check_weights(coll, w);
    // With sum s_i d_i = 0 the Euler relation gives x0*N_0 + x1*N_1 = 0, so
    // N_1 = x0*Q and the log-likelihood form is Q (x0 dx1 - x1 dx0) / prod f_i.
    // The zeros of the binary form Q are the critical points, x0 = 0 included.
    const std::vector<Polynomial>& f = coll.forms();
    Polynomial n1 = numerator_of_gradient(f, w.s, 1);
    if (n1.is_zero())
        throw Error(ErrorCode::NonGenericWeights, "gradient numerator vanishes identically");
    auto q = divide_exact(n1, Polynomial::variable(2, 0));
    if (!q)
        throw Error(ErrorCode::Internal, "gradient numerator is not divisible by x0");
    Polynomial product = Polynomial::constant(2, 1);
    for (const auto& fi : f)
        product *= fi;
    // Roots off the divisor with multiplicity, as in the quotient dimension
    // of the saturated path.
    return static_cast<std::size_t>(strip_factors_of(*q, product).total_degree());
}

} // namespace mldeg
