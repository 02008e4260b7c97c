#ifndef KNOTWORK_LAURENT_HPP
#define KNOTWORK_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <string>

namespace knotwork {

// Exact integer-coefficient Laurent polynomial in one variable.
// Zero coefficients are never stored.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(long value) {
        if (value != 0) coeffs_[0] = value;
    }
    static LaurentPolynomial monomial(const mpz_class& c, int exp);
    static LaurentPolynomial one() { return LaurentPolynomial(1); }

    bool isZero() const { return coeffs_.empty(); }
    bool isOne() const;

    int lowestExponent() const;   // throws on zero
    int highestExponent() const;  // throws on zero
    mpz_class coefficient(int exp) const;
    const std::map<int, mpz_class>& terms() const { return coeffs_; }

    void addTerm(int exp, const mpz_class& c);

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    bool operator==(const LaurentPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPolynomial& o) const { return coeffs_ != o.coeffs_; }

    LaurentPolynomial shifted(int deltaExp) const;

    // Substitute x -> x^k (k may be negative; k = -1 inverts the variable).
    LaurentPolynomial substitutePower(int k) const;

    // Exact division; throws std::domain_error when the remainder is nonzero.
    LaurentPolynomial dividedExact(const LaurentPolynomial& divisor) const;

    mpz_class evaluate(const mpz_class& x) const;  // requires lowest exponent >= 0 or x != 0

    // Shift so the lowest exponent is 0 and the leading coefficient is positive.
    LaurentPolynomial normalizedAlexander() const;

    // Equality up to a unit +/- x^k.
    bool equalsUpToUnits(const LaurentPolynomial& o) const;

    // Sparse rendering "c*x^k" in ascending exponent order; exponents are
    // divided by expScale (used for the quarter-power Jones variable).
    std::string str(const std::string& var = "t", int expScale = 1) const;

private:
    std::map<int, mpz_class> coeffs_;
};

}  // namespace knotwork

#endif
