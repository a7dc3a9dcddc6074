#include "mldeg/chow.hpp"

#include "mldeg/error.hpp"

#include <sstream>

namespace mldeg {

ChowClass::ChowClass(unsigned n) : n_(n), coeffs_(n + 1) {}

ChowClass::ChowClass(unsigned n, std::vector<Rational> coeffs) : n_(n), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != n_ + 1)
        throw Error(ErrorCode::InvalidInput, "Chow class of P^" + std::to_string(n_) + " needs "
                                                 + std::to_string(n_ + 1) + " coefficients");
}

ChowClass ChowClass::one(unsigned n)
{
    ChowClass c(n);
    c.coeffs_[0] = 1;
    return c;
}

ChowClass ChowClass::hyperplane(unsigned n)
{
    ChowClass c(n);
    if (n >= 1)
        c.coeffs_[1] = 1;
    return c;
}

ChowClass ChowClass::linear(unsigned n, const Rational& constant, const Rational& slope)
{
    ChowClass c(n);
    c.coeffs_[0] = constant;
    if (n >= 1)
        c.coeffs_[1] = slope;
    return c;
}

static void check_same(const ChowClass& a, const ChowClass& b)
{
    if (a.dimension() != b.dimension())
        throw Error(ErrorCode::DimensionMismatch, "Chow classes of P^" + std::to_string(a.dimension())
                                                      + " and P^" + std::to_string(b.dimension()));
}

ChowClass& ChowClass::operator+=(const ChowClass& other)
{
    check_same(*this, other);
    for (unsigned k = 0; k <= n_; ++k)
        coeffs_[k] += other.coeffs_[k];
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other)
{
    check_same(*this, other);
    for (unsigned k = 0; k <= n_; ++k)
        coeffs_[k] -= other.coeffs_[k];
    return *this;
}

ChowClass& ChowClass::operator*=(const ChowClass& other)
{
    check_same(*this, other);
    std::vector<Rational> out(n_ + 1);
    for (unsigned i = 0; i <= n_; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (unsigned j = 0; i + j <= n_; ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
}

ChowClass ChowClass::pow(unsigned e) const
{
    ChowClass result = one(n_);
    ChowClass base = *this;
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

std::string ChowClass::str() const
{
    std::ostringstream os;
    bool first = true;
    for (unsigned k = 0; k <= n_; ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (k == 0 || mag != 1)
            os << to_string(mag);
        if (k >= 1)
            os << "h";
        if (k >= 2)
            os << "^" << k;
    }
    if (first)
        os << "0";
    return os.str();
}

ChowClass chow_mul(const ChowClass& a, const ChowClass& b)
{
    return a * b;
}

ChowClass chow_invert_unit(const ChowClass& a)
{
    const auto& c = a.coeffs();
    if (c[0] == 0)
        throw Error(ErrorCode::NonUnit, "class " + a.str() + " has zero constant term");
    const unsigned n = a.dimension();
    const Rational inv0 = 1 / c[0];
    std::vector<Rational> b(n + 1);
    b[0] = inv0;
    for (unsigned k = 1; k <= n; ++k) {
        Rational acc;
        for (unsigned j = 1; j <= k; ++j)
            acc += c[j] * b[k - j];
        b[k] = -inv0 * acc;
    }
    return ChowClass(n, std::move(b));
}

namespace {

struct TotalClass {
    unsigned n;

    ChowClass operator()(const chern::Line& l) const { return ChowClass::linear(n, 1, l.degree); }
    ChowClass operator()(const chern::Cotangent&) const { return ChowClass::linear(n, 1, -1).pow(n + 1); }
    ChowClass operator()(const chern::Tangent&) const { return ChowClass::linear(n, 1, 1).pow(n + 1); }
    ChowClass operator()(const chern::LogDivisor& d) const
    {
        if (d.degrees.empty())
            throw Error(ErrorCode::InvalidInput, "log divisor needs at least one component");
        ChowClass c = (*this)(chern::Cotangent{});
        for (auto deg : d.degrees) {
            if (deg < 1)
                throw Error(ErrorCode::InvalidInput, "log divisor component degrees must be positive");
            c *= chow_invert_unit(ChowClass::linear(n, 1, -deg));
        }
        return c;
    }
};

} // namespace

ChowClass chern_total(const ChernSpec& spec)
{
    return std::visit(TotalClass{spec.n}, spec.kind);
}

ChowClass chern_twist(const ChowClass& c, unsigned rank, std::int64_t d)
{
    if (c[0] != 1)
        throw Error(ErrorCode::InvalidInput, "total Chern class must have constant term 1, got " + c.str());
    const unsigned n = c.dimension();
    std::vector<Rational> out(n + 1);
    Integer binom;
    for (unsigned k = 0; k <= n; ++k) {
        for (unsigned j = 0; j <= k && j <= rank; ++j) {
            if (k - j > rank - j)
                continue;
            mpz_bin_uiui(binom.get_mpz_t(), rank - j, k - j);
            Integer dpow;
            mpz_pow_ui(dpow.get_mpz_t(), Integer(d).get_mpz_t(), k - j);
            out[k] += Rational(binom * dpow) * c[j];
        }
    }
    return ChowClass(n, std::move(out));
}

ChowClass chern_pullback(const ChowClass& c, std::int64_t d_f)
{
    std::vector<Rational> out = c.coeffs();
    Integer scale = 1;
    for (auto& coeff : out) {
        coeff *= scale;
        scale *= d_f;
    }
    return ChowClass(c.dimension(), std::move(out));
}

ChowClass chern_extension_sequence(unsigned n, const std::vector<std::int64_t>& reduced_degrees)
{
    std::int64_t total = 0;
    for (auto d : reduced_degrees)
        total += d;
    return chern_total({chern::Cotangent{}, n}) * chern_total({chern::Line{total}, n});
}

Integer ml_degree_theorem(unsigned n, const std::vector<std::int64_t>& reduced_degrees)
{
    if (reduced_degrees.size() != n + 1)
        throw Error(ErrorCode::InvalidInput, "expected " + std::to_string(n + 1) + " reduced degrees, got "
                                                 + std::to_string(reduced_degrees.size()));
    ChowClass c = chern_total({chern::LogDivisor{reduced_degrees}, n});
    const Rational& top = c[n];
    if (!is_integer(top))
        throw Error(ErrorCode::Internal, "top Chern number is not an integer: " + to_string(top));
    return top.get_num();
}

} // namespace mldeg
