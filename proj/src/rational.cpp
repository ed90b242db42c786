#include "wallcross/rational.hpp"

#include <stdexcept>

namespace wallcross {

std::string to_string(const Rational& x)
{
    Rational c = x;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    while (!s.empty() && s.front() == ' ')
        s.erase(s.begin());
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    if (s.front() == '+')
        s.erase(s.begin());
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

Integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer factorial(long n)
{
    if (n < 0)
        throw std::invalid_argument("factorial of a negative number");
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Rational pow(const Rational& base, long exp)
{
    if (exp < 0)
        throw std::invalid_argument("negative exponent");
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
    out.canonicalize();
    return out;
}

Rational pow_or_zero(const Rational& base, long exp)
{
    if (exp < 0)
        return 0;
    return pow(base, exp);
}

Rational inv_factorial_or_zero(long n)
{
    if (n < 0)
        return 0;
    return Rational(Integer(1), factorial(n));
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Rational ratio(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational out(num, den);
    out.canonicalize();
    return out;
}

} // namespace wallcross
