#include "hookcontent/rational.hpp"

#include <stdexcept>

namespace hookcontent {

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Rational parse_rational(const std::string& text) {
    auto is_int = [](const std::string& s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start == s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational: '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
}

Integer factorial(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binom(std::int64_t a, std::int64_t b) {
    if (b < 0 || a < b) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

Integer pow(const Integer& base, unsigned exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational pow(const Rational& base, unsigned exp) {
    return Rational(pow(base.get_num(), exp), pow(base.get_den(), exp));
}

}  // namespace hookcontent
