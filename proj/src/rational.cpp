#include "mldeg/rational.hpp"

#include <cctype>

namespace mldeg {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    Rational result;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            return std::nullopt;
        Integer d(std::string(den), 10);
        if (d == 0)
            return std::nullopt;
        result = Rational(Integer(std::string(num), 10), d);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))
            || (whole.empty() && frac.empty()))
            return std::nullopt;
        std::string digits = std::string(whole) + std::string(frac);
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        result = Rational(Integer(digits, 10), scale);
    } else {
        if (!all_digits(text))
            return std::nullopt;
        result = Rational(Integer(std::string(text), 10));
    }
    result.canonicalize();
    if (negative)
        result = -result;
    return result;
}

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

} // namespace mldeg
