#pragma once

#include <qident/intpoly.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qident {

/// Specification of the finite product prod_{k=0}^{count-1}
/// (1 - sign * z^zpow * q^{dilation*k}), a q-shifted factorial
/// (a; q^dilation)_count with a = sign * z^zpow.
struct PochSpec {
    int sign = 1;      // +1 or -1
    int zpow = 1;      // >= 1
    int dilation = 1;  // >= 1
    int count = 0;     // >= 0
};

/// Power series in z truncated at a fixed order, with IntPoly coefficients.
/// Exactly order+1 coefficients are stored (zero coefficients explicitly);
/// arithmetic is exact modulo z^{order+1}.
class ZSeries {
public:
    explicit ZSeries(int order);
    static ZSeries one(int order);
    /// Truncated expansion of the product described by spec.
    static ZSeries pochhammer(const PochSpec& spec, int order);

    int order() const { return order_; }
    /// Coefficient of z^n for 0 <= n <= order; out of range throws.
    const IntPoly& coeff(int n) const;
    void set_coeff(int n, IntPoly value);

    /// Multiplicative inverse modulo z^{order+1}. The constant coefficient
    /// must be the polynomial 1.
    ZSeries inverse() const;

    /// One "z^n: <polynomial>" entry per coefficient, joined by separator.
    std::string str(std::string_view separator = "\n") const;

    /// Truncated product; both operands must have the same order.
    friend ZSeries operator*(const ZSeries& lhs, const ZSeries& rhs);
    friend bool operator==(const ZSeries&, const ZSeries&) = default;

private:
    int order_ = 0;
    std::vector<IntPoly> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const ZSeries& value);

}  // namespace qident
