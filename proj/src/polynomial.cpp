#include "mldeg/polynomial.hpp"

#include "mldeg/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mldeg {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(unsigned nvars) : exps_(nvars, 0) {}

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents))
{
    for (auto e : exps_)
        degree_ += e;
}

Monomial Monomial::variable(unsigned nvars, unsigned index, std::uint32_t power)
{
    std::vector<std::uint32_t> e(nvars, 0);
    e.at(index) = power;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const
{
    if (degree_ > other.degree_)
        return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial m = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        m.exps_[i] += other.exps_[i];
    m.degree_ += other.degree_;
    return m;
}

Monomial Monomial::operator/(const Monomial& other) const
{
    Monomial m = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        m.exps_[i] -= other.exps_[i];
    m.degree_ -= other.degree_;
    return m;
}

int grevlex_compare(const Monomial& a, const Monomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? -1 : 1;
    for (unsigned i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i])
            return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    std::vector<std::uint32_t> e(a.nvars());
    for (unsigned i = 0; i < a.nvars(); ++i)
        e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b)
{
    std::vector<std::uint32_t> e(a.nvars());
    for (unsigned i = 0; i < a.nvars(); ++i)
        e[i] = std::min(a[i], b[i]);
    return Monomial(std::move(e));
}

// -------------------------------------------------------------- Polynomial

namespace {

void check_nvars(const Polynomial& a, const Polynomial& b)
{
    if (a.nvars() != b.nvars())
        throw Error(ErrorCode::DimensionMismatch, "polynomials in " + std::to_string(a.nvars()) + " and "
                                                      + std::to_string(b.nvars()) + " variables");
}

// Merge of two canonical term lists: a + sign * b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = grevlex_compare(a[i].mono, b[j].mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(subtract ? Term{b[j].mono, -b[j].coeff} : b[j]);
            ++j;
        } else {
            Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (s != 0)
                out.push_back({a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i)
        out.push_back(a[i]);
    for (; j < b.size(); ++j)
        out.push_back(subtract ? Term{b[j].mono, -b[j].coeff} : b[j]);
    return out;
}

} // namespace

Polynomial Polynomial::from_terms(unsigned nvars, std::vector<Term> terms)
{
    for (const auto& t : terms)
        if (t.mono.nvars() != nvars)
            throw Error(ErrorCode::DimensionMismatch, "monomial has " + std::to_string(t.mono.nvars())
                                                          + " exponents, expected " + std::to_string(nvars));
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; });
    Polynomial p(nvars);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0)
                p.terms_.pop_back();
        } else if (t.coeff != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Polynomial Polynomial::constant(unsigned nvars, const Rational& c)
{
    Polynomial p(nvars);
    if (c != 0)
        p.terms_.push_back({Monomial(nvars), c});
    return p;
}

Polynomial Polynomial::variable(unsigned nvars, unsigned index)
{
    if (index >= nvars)
        throw Error(ErrorCode::InvalidInput, "variable index " + std::to_string(index) + " out of range");
    return monomial(Monomial::variable(nvars, index));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c)
{
    Polynomial p(m.nvars());
    if (c != 0)
        p.terms_.push_back({m, c});
    return p;
}

int Polynomial::total_degree() const
{
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

int Polynomial::degree_in(unsigned var) const
{
    if (terms_.empty())
        return -1;
    std::uint32_t d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.mono[var]);
    return static_cast<int>(d);
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    check_nvars(*this, other);
    terms_ = merge(terms_, other.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    check_nvars(*this, other);
    terms_ = merge(terms_, other.terms_, true);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    check_nvars(a, b);
    if (a.is_zero() || b.is_zero())
        return Polynomial(a.nvars());
    std::vector<Term> prods;
    prods.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_)
            prods.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return Polynomial::from_terms(a.nvars(), std::move(prods));
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.coeff *= c;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial p = *this;
    for (auto& t : p.terms_)
        t.coeff = -t.coeff;
    return p;
}

Polynomial Polynomial::sub_scaled(const Rational& c, const Monomial& m, const Polynomial& other) const
{
    std::vector<Term> shifted;
    shifted.reserve(other.size());
    for (const auto& t : other.terms_)
        shifted.push_back({t.mono * m, t.coeff * c});
    Polynomial p(nvars_);
    p.terms_ = merge(terms_, shifted, true);
    return p;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial result = constant(nvars_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

// ------------------------------------------------------------- operations

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op)
{
    switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
    }
    throw Error(ErrorCode::Internal, "unknown polynomial operation");
}

Polynomial poly_partial(const Polynomial& f, unsigned var_index)
{
    if (var_index >= f.nvars())
        throw Error(ErrorCode::InvalidInput, "partial derivative index " + std::to_string(var_index)
                                                 + " out of range for " + std::to_string(f.nvars())
                                                 + " variables");
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        auto e = t.mono[var_index];
        if (e == 0)
            continue;
        auto exps = t.mono.exponents();
        exps[var_index] -= 1;
        out.push_back({Monomial(std::move(exps)), t.coeff * e});
    }
    return Polynomial::from_terms(f.nvars(), std::move(out));
}

Polynomial normalize(const Polynomial& f)
{
    if (f.is_zero())
        return f;
    return f * Rational(1 / f.leading_coefficient());
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b)
{
    check_nvars(a, b);
    if (b.is_zero())
        throw Error(ErrorCode::InvalidInput, "division by the zero polynomial");
    std::vector<Term> quotient;
    Polynomial r = a;
    const Term& lead = b.leading_term();
    while (!r.is_zero()) {
        const Term& top = r.leading_term();
        if (!lead.mono.divides(top.mono))
            return std::nullopt;
        Term q{top.mono / lead.mono, top.coeff / lead.coeff};
        r = r.sub_scaled(q.coeff, q.mono, b);
        quotient.push_back(std::move(q));
    }
    return Polynomial::from_terms(a.nvars(), std::move(quotient));
}

std::optional<unsigned> homogeneity_degree(const Polynomial& f)
{
    if (f.is_zero())
        throw Error(ErrorCode::InvalidInput, "homogeneity degree of the zero polynomial");
    const unsigned d = f.leading_monomial().degree();
    for (const auto& t : f.terms())
        if (t.mono.degree() != d)
            return std::nullopt;
    return d;
}

Polynomial dehomogenize(const Polynomial& f, unsigned chart_var)
{
    if (chart_var >= f.nvars())
        throw Error(ErrorCode::InvalidInput, "chart variable " + std::to_string(chart_var) + " out of range");
    if (!f.is_zero() && !homogeneity_degree(f))
        throw Error(ErrorCode::NotHomogeneous, "cannot dehomogenize " + to_string(f));
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        auto exps = t.mono.exponents();
        exps.erase(exps.begin() + chart_var);
        out.push_back({Monomial(std::move(exps)), t.coeff});
    }
    return Polynomial::from_terms(f.nvars() - 1, std::move(out));
}

Polynomial jacobian_det(std::span<const Polynomial> fs)
{
    const std::size_t k = fs.size();
    if (k == 0 || k > 20)
        throw Error(ErrorCode::DimensionMismatch, "Jacobian needs between 1 and 20 polynomials");
    const unsigned nvars = fs[0].nvars();
    for (const auto& f : fs)
        if (f.nvars() != k || f.nvars() != nvars)
            throw Error(ErrorCode::DimensionMismatch, "Jacobian of " + std::to_string(k)
                                                          + " polynomials needs that many variables");
    std::vector<std::vector<Polynomial>> m(k);
    for (std::size_t i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j)
            m[i].push_back(poly_partial(fs[i], j));

    // minors[mask]: determinant of rows 0..|mask|-1 restricted to the columns in mask,
    // expanded along its last row.
    std::vector<Polynomial> minors(std::size_t{1} << k, Polynomial(nvars));
    minors[0] = Polynomial::constant(nvars, 1);
    for (std::size_t mask = 1; mask < minors.size(); ++mask) {
        const unsigned row = static_cast<unsigned>(__builtin_popcountll(mask)) - 1;
        Polynomial acc(nvars);
        unsigned above = 0;
        for (unsigned c = static_cast<unsigned>(k); c-- > 0;) {
            if (!(mask >> c & 1))
                continue;
            const auto& sub = minors[mask & ~(std::size_t{1} << c)];
            if (!sub.is_zero() && !m[row][c].is_zero()) {
                Polynomial term = m[row][c] * sub;
                if (above % 2)
                    acc -= term;
                else
                    acc += term;
            }
            ++above;
        }
        minors[mask] = std::move(acc);
    }
    return minors.back();
}

Rational eval_at(const Polynomial& f, std::span<const Rational> point)
{
    if (point.size() != f.nvars())
        throw Error(ErrorCode::DimensionMismatch, "evaluation point has " + std::to_string(point.size())
                                                      + " coordinates, expected " + std::to_string(f.nvars()));
    Rational acc;
    Rational power;
    for (const auto& t : f.terms()) {
        Rational v = t.coeff;
        for (unsigned i = 0; i < f.nvars(); ++i) {
            if (t.mono[i] == 0)
                continue;
            mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), t.mono[i]);
            mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), t.mono[i]);
            v *= power;
        }
        acc += v;
    }
    return acc;
}

Polynomial compose(const Polynomial& f, std::span<const Polynomial> subs)
{
    if (subs.size() != f.nvars())
        throw Error(ErrorCode::DimensionMismatch, "composition needs one substitute per variable");
    const unsigned out_vars = subs.empty() ? 0 : subs[0].nvars();
    for (const auto& s : subs)
        if (s.nvars() != out_vars)
            throw Error(ErrorCode::DimensionMismatch, "substitutes must share one variable count");
    std::vector<std::vector<Polynomial>> powers(f.nvars());
    auto power_of = [&](unsigned var, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty())
            cache.push_back(Polynomial::constant(out_vars, 1));
        while (cache.size() <= e)
            cache.push_back(cache.back() * subs[var]);
        return cache[e];
    };
    Polynomial acc(out_vars);
    for (const auto& t : f.terms()) {
        Polynomial v = Polynomial::constant(out_vars, t.coeff);
        for (unsigned i = 0; i < f.nvars(); ++i)
            if (t.mono[i])
                v *= power_of(i, t.mono[i]);
        acc += v;
    }
    return acc;
}

Polynomial add_variables(const Polynomial& f, unsigned extra)
{
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        auto exps = t.mono.exponents();
        exps.resize(exps.size() + extra, 0);
        out.push_back({Monomial(std::move(exps)), t.coeff});
    }
    return Polynomial::from_terms(f.nvars() + extra, std::move(out));
}

// ------------------------------------------------------------ text format

std::vector<std::string> default_variable_names(unsigned nvars)
{
    std::vector<std::string> names;
    for (unsigned i = 0; i < nvars; ++i)
        names.push_back("x" + std::to_string(i));
    return names;
}

std::string to_string(const Polynomial& f, std::span<const std::string> names)
{
    if (names.size() != f.nvars())
        throw Error(ErrorCode::DimensionMismatch, "need one name per variable");
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms()) {
        const bool negative = t.coeff < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        Rational mag = abs(t.coeff);
        bool wrote = false;
        if (t.mono.is_one() || mag != 1) {
            os << to_string(mag);
            wrote = true;
        }
        for (unsigned i = 0; i < f.nvars(); ++i) {
            if (t.mono[i] == 0)
                continue;
            if (wrote)
                os << "*";
            os << names[i];
            if (t.mono[i] > 1)
                os << "^" << t.mono[i];
            wrote = true;
        }
    }
    return os.str();
}

std::string to_string(const Polynomial& f)
{
    auto names = default_variable_names(f.nvars());
    return to_string(f, names);
}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip();
        if (pos_ != text_.size())
            fail("unexpected character");
        return p;
    }

private:
    unsigned nvars() const { return static_cast<unsigned>(names_.size()); }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(ErrorCode::InvalidInput,
                    msg + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr()
    {
        Polynomial acc(nvars());
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        Polynomial t = term();
        acc = negative ? -t : t;
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        for (;;) {
            if (eat('*')) {
                acc *= factor();
            } else if (eat('/')) {
                Polynomial d = factor();
                if (!d.is_constant() || d.is_zero())
                    fail("division by a non-constant or zero");
                acc *= Rational(1 / d.leading_coefficient());
            } else {
                return acc;
            }
        }
    }

    Polynomial factor()
    {
        Polynomial base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected exponent");
            auto e = std::stoul(std::string(text_.substr(start, pos_ - start)));
            if (e > 1000)
                fail("exponent too large");
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial atom()
    {
        skip();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')'))
                fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < text_.size()
                   && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                ++pos_;
            auto q = parse_rational(text_.substr(start, pos_ - start));
            if (!q)
                fail("malformed number");
            return Polynomial::constant(nvars(), *q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            auto name = text_.substr(start, pos_ - start);
            for (unsigned i = 0; i < nvars(); ++i)
                if (names_[i] == name)
                    return Polynomial::variable(nvars(), i);
            pos_ = start;
            fail("unknown variable '" + std::string(name) + "'");
        }
        fail("unexpected character");
    }

    std::string_view text_;
    std::span<const std::string> names_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names)
{
    return Parser(text, names).parse();
}

} // namespace mldeg
