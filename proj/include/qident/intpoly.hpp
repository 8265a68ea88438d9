#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qident {

/// Dense polynomial in the variable q with arbitrary-precision integer
/// coefficients. coeffs()[i] holds the coefficient of q^i. The highest
/// stored coefficient is always nonzero; the zero polynomial stores nothing.
class IntPoly {
public:
    using Int = mpz_class;

    IntPoly() = default;
    /// Takes coefficients in ascending exponent order; trailing zeros are
    /// stripped.
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly constant(Int value);
    /// coeff * q^exponent. Requires exponent >= 0; coeff 0 gives the zero
    /// polynomial.
    static IntPoly monomial(Int coeff, long exponent);

    bool is_zero() const { return coeffs_.empty(); }
    /// Highest exponent carrying a nonzero coefficient; nullopt for the zero
    /// polynomial.
    std::optional<long> degree() const;
    const std::vector<Int>& coeffs() const { return coeffs_; }
    /// Coefficient of q^i; zero outside the stored range.
    Int coeff(long i) const;

    /// Exact value at q = v.
    Int eval(const Int& v) const;
    /// Substitutes q -> q^r. Requires r >= 1.
    IntPoly dilate(int r) const;

    /// Renders like "1 + q + 2*q^2 - q^5"; the zero polynomial renders as "0".
    std::string str() const;
    /// Parses the str() format (signs, optional '*', optional '^').
    static IntPoly parse(std::string_view text);

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);

    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend IntPoly operator-(const IntPoly& value);

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void normalize();

    std::vector<Int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& value);

}  // namespace qident
