#include "ccs/rational.hpp"

#include <sstream>

namespace ccs {

BigInt binomial(const BigInt& n, const BigInt& k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt kk = k;
    if (n - k < kk) kk = n - k;
    BigInt result = 1;
    for (BigInt i = 1; i <= kk; ++i) {
        result *= n - kk + i;
        result /= i;  // exact: result is always an integer after this division
    }
    return result;
}

BigInt multinomial(const std::vector<BigInt>& parts) {
    BigInt total = 0;
    BigInt result = 1;
    for (const BigInt& p : parts) {
        if (p < 0) throw input_error("multinomial: negative part");
        total += p;
        result *= binomial(total, p);
    }
    return result;
}

BigInt checked_pow(const BigInt& base, std::uint64_t exp, std::uint64_t max_bits) {
    BigInt result = 1;
    BigInt b = base;
    std::uint64_t e = exp;
    auto check = [&](const BigInt& v) {
        if (max_bits != 0 && msb(abs(v) + 1) + 1 > max_bits)
            throw resource_error("checked_pow: result exceeds " + std::to_string(max_bits) +
                                 " bits (magnitude ~ 2^" + std::to_string(msb(abs(v) + 1)) + ")");
    };
    while (e) {
        if (e & 1) {
            result *= b;
            check(result);
        }
        e >>= 1;
        if (e) {
            b *= b;
            check(b);
        }
    }
    return result;
}

BigInt ceil_rat(const Rat& q) {
    BigInt num = numerator(q), den = denominator(q);
    BigInt d = num / den;
    if (d * den < num) ++d;
    return d;
}

std::string rat_to_string(const Rat& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << '/' << denominator(q);
    return os.str();
}

namespace {

// Leading zeros would make cpp_int parse the string as octal.
BigInt decimal_digits(std::string digits) {
    bool neg = false;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
        neg = digits[0] == '-';
        digits.erase(0, 1);
    }
    auto first = digits.find_first_not_of('0');
    digits = first == std::string::npos ? "0" : digits.substr(first);
    if (digits.find_first_not_of("0123456789") != std::string::npos)
        throw input_error("not a decimal integer: " + digits);
    BigInt v(digits);
    return neg ? -v : v;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num = decimal_digits(s.substr(0, slash));
            BigInt den = decimal_digits(s.substr(slash + 1));
            if (den == 0) throw input_error("rational with zero denominator: " + s);
            return Rat(num, den);
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::size_t places = s.size() - dot - 1;
            BigInt num = decimal_digits(s.substr(0, dot) + s.substr(dot + 1));
            return Rat(num, checked_pow(10, places));
        }
        return Rat(decimal_digits(s));
    } catch (const std::exception& e) {
        throw input_error("cannot parse rational '" + s + "': " + e.what());
    }
}

double rat_to_double(const Rat& q) { return q.convert_to<double>(); }

}  // namespace ccs
