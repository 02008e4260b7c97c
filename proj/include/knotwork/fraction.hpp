#ifndef KNOTWORK_FRACTION_HPP
#define KNOTWORK_FRACTION_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace knotwork {

// Reduced fraction p/q with q >= 0.  1/0 is the infinity value used by
// tangle arithmetic; 0/0 is rejected everywhere.
struct Fraction {
    long long num = 0;
    long long den = 1;

    Fraction() = default;
    Fraction(long long n, long long d) : num(n), den(d) { reduce(); }
    explicit Fraction(long long n) : num(n), den(1) {}

    static Fraction infinity() { return Fraction(1, 0); }

    bool isInfinite() const { return den == 0; }

    // f + k
    Fraction addInteger(long long k) const { return Fraction(num + k * den, den); }

    // 1 / (k + 1/f)  =  p / (k*p + q); the vertical-twist action.
    Fraction verticalAdd(long long k) const { return Fraction(num, k * num + den); }

    Fraction reciprocal() const { return Fraction(den, num); }
    Fraction negated() const { return Fraction(-num, den); }

    bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Fraction& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

private:
    void reduce() {
        if (num == 0 && den == 0)
            throw std::domain_error("fraction 0/0");
        if (den < 0) { num = -num; den = -den; }
        if (den == 0) { num = 1; return; }
        if (num == 0) { den = 1; return; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        num /= g;
        den /= g;
    }
};

}  // namespace knotwork

#endif
