#include "knotwork/laurent.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace knotwork {

LaurentPolynomial LaurentPolynomial::monomial(const mpz_class& c, int exp) {
    LaurentPolynomial p;
    if (c != 0) p.coeffs_[exp] = c;
    return p;
}

bool LaurentPolynomial::isOne() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

int LaurentPolynomial::lowestExponent() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no exponents");
    return coeffs_.begin()->first;
}

int LaurentPolynomial::highestExponent() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no exponents");
    return coeffs_.rbegin()->first;
}

mpz_class LaurentPolynomial::coefficient(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? mpz_class(0) : it->second;
}

void LaurentPolynomial::addTerm(int exp, const mpz_class& c) {
    if (c == 0) return;
    auto it = coeffs_.find(exp);
    if (it == coeffs_.end()) {
        coeffs_[exp] = c;
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.coeffs_) r.addTerm(e, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.coeffs_) r.addTerm(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.addTerm(e1 + e2, c1 * c2);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPolynomial LaurentPolynomial::shifted(int deltaExp) const {
    LaurentPolynomial r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + deltaExp] = c;
    return r;
}

LaurentPolynomial LaurentPolynomial::substitutePower(int k) const {
    LaurentPolynomial r;
    for (const auto& [e, c] : coeffs_) r.addTerm(e * k, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::dividedExact(const LaurentPolynomial& divisor) const {
    if (divisor.isZero()) throw std::domain_error("division by zero polynomial");
    LaurentPolynomial rem = *this;
    LaurentPolynomial quot;
    const int dHigh = divisor.highestExponent();
    const mpz_class& dLead = divisor.coeffs_.rbegin()->second;
    while (!rem.isZero()) {
        int rHigh = rem.highestExponent();
        mpz_class lead = rem.coeffs_.rbegin()->second;
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(), dLead.get_mpz_t());
        if (r != 0) throw std::domain_error("inexact polynomial division");
        LaurentPolynomial term = monomial(q, rHigh - dHigh);
        quot = quot + term;
        rem = rem - term * divisor;
        if (!rem.isZero() && rem.highestExponent() >= rHigh)
            throw std::domain_error("inexact polynomial division");
    }
    return quot;
}

mpz_class LaurentPolynomial::evaluate(const mpz_class& x) const {
    if (coeffs_.empty()) return 0;
    int low = lowestExponent();
    if (low < 0 && x == 0) throw std::domain_error("evaluating negative exponent at 0");
    // Evaluate x^{-low} * p(x) by Horner, then divide exactly.
    mpz_class acc = 0;
    int prev = highestExponent();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        for (int k = it->first; k < prev; ++k) acc *= x;
        acc += it->second;
        prev = it->first;
    }
    if (low < 0) {
        mpz_class denom;
        mpz_pow_ui(denom.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-low));
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), denom.get_mpz_t());
        if (r != 0) throw std::domain_error("non-integral Laurent evaluation");
        return q;
    }
    return acc;
}

LaurentPolynomial LaurentPolynomial::normalizedAlexander() const {
    if (isZero()) return *this;
    LaurentPolynomial r = shifted(-lowestExponent());
    if (r.coeffs_.rbegin()->second < 0) r = -r;
    return r;
}

bool LaurentPolynomial::equalsUpToUnits(const LaurentPolynomial& o) const {
    if (isZero() || o.isZero()) return isZero() == o.isZero();
    LaurentPolynomial a = shifted(-lowestExponent());
    LaurentPolynomial b = o.shifted(-o.lowestExponent());
    return a == b || a == -b;
}

std::string LaurentPolynomial::str(const std::string& var, int expScale) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) out << (c > 0 ? " + " : " - ");
        mpz_class a = (!first && c < 0) ? mpz_class(-c) : c;
        first = false;
        if (e == 0) {
            out << a.get_str();
            continue;
        }
        if (a != 1 && a != -1)
            out << a.get_str() << "*";
        else if (a == -1)
            out << "-";
        out << var;
        if (e != expScale) {
            out << "^";
            if (e % expScale == 0) {
                out << e / expScale;
            } else {
                int g = std::gcd(e < 0 ? -e : e, expScale);
                out << "(" << e / g << "/" << expScale / g << ")";
            }
        }
    }
    return out.str();
}

}  // namespace knotwork
