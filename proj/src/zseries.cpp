#include <qident/zseries.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace qident {

ZSeries::ZSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("ZSeries: order must be >= 0");
    coeffs_.resize(static_cast<size_t>(order) + 1);
}

ZSeries ZSeries::one(int order) {
    ZSeries s(order);
    s.coeffs_[0] = IntPoly::constant(1);
    return s;
}

const IntPoly& ZSeries::coeff(int n) const {
    if (n < 0 || n > order_) throw std::out_of_range("ZSeries::coeff: index past the order");
    return coeffs_[static_cast<size_t>(n)];
}

void ZSeries::set_coeff(int n, IntPoly value) {
    if (n < 0 || n > order_) throw std::out_of_range("ZSeries::set_coeff: index past the order");
    coeffs_[static_cast<size_t>(n)] = std::move(value);
}

ZSeries ZSeries::pochhammer(const PochSpec& spec, int order) {
    if (spec.sign != 1 && spec.sign != -1)
        throw std::invalid_argument("pochhammer: sign must be +1 or -1");
    if (spec.zpow < 1) throw std::invalid_argument("pochhammer: zpow must be >= 1");
    if (spec.dilation < 1) throw std::invalid_argument("pochhammer: dilation must be >= 1");
    if (spec.count < 0) throw std::invalid_argument("pochhammer: count must be >= 0");
    ZSeries acc = one(order);
    for (int k = 0; k < spec.count; ++k) {
        ZSeries factor = one(order);
        if (spec.zpow <= order)
            factor.coeffs_[static_cast<size_t>(spec.zpow)] =
                IntPoly::monomial(-spec.sign, static_cast<long>(spec.dilation) * k);
        acc = acc * factor;
    }
    return acc;
}

ZSeries ZSeries::inverse() const {
    if (coeffs_[0] != IntPoly::constant(1))
        throw std::domain_error("ZSeries::inverse: constant coefficient must be 1");
    ZSeries out(order_);
    out.coeffs_[0] = IntPoly::constant(1);
    for (int n = 1; n <= order_; ++n) {
        IntPoly sum;
        for (int i = 1; i <= n; ++i)
            sum += coeffs_[static_cast<size_t>(i)] * out.coeffs_[static_cast<size_t>(n - i)];
        out.coeffs_[static_cast<size_t>(n)] = -sum;
    }
    return out;
}

ZSeries operator*(const ZSeries& lhs, const ZSeries& rhs) {
    if (lhs.order_ != rhs.order_)
        throw std::invalid_argument("ZSeries: operand orders differ");
    ZSeries out(lhs.order_);
    for (int n = 0; n <= lhs.order_; ++n) {
        IntPoly sum;
        for (int i = 0; i <= n; ++i)
            sum += lhs.coeffs_[static_cast<size_t>(i)] * rhs.coeffs_[static_cast<size_t>(n - i)];
        out.coeffs_[static_cast<size_t>(n)] = std::move(sum);
    }
    return out;
}

std::string ZSeries::str(std::string_view separator) const {
    std::string out;
    for (int n = 0; n <= order_; ++n) {
        if (n > 0) out += separator;
        out += "z^";
        out += std::to_string(n);
        out += ": ";
        out += coeffs_[static_cast<size_t>(n)].str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const ZSeries& value) { return os << value.str(); }

}  // namespace qident
