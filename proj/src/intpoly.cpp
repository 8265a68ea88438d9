#include <qident/intpoly.hpp>

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace qident {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(Int value) {
    IntPoly p;
    if (value != 0) p.coeffs_.push_back(std::move(value));
    return p;
}

IntPoly IntPoly::monomial(Int coeff, long exponent) {
    if (exponent < 0) throw std::invalid_argument("monomial: negative exponent");
    IntPoly p;
    if (coeff != 0) {
        p.coeffs_.assign(static_cast<size_t>(exponent) + 1, Int(0));
        p.coeffs_.back() = std::move(coeff);
    }
    return p;
}

std::optional<long> IntPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<long>(coeffs_.size()) - 1;
}

IntPoly::Int IntPoly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(i)];
}

IntPoly::Int IntPoly::eval(const Int& v) const {
    Int result = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) result = result * v + *it;
    return result;
}

IntPoly IntPoly::dilate(int r) const {
    if (r < 1) throw std::invalid_argument("dilate: factor must be >= 1");
    if (coeffs_.empty() || r == 1) return *this;
    std::vector<Int> out((coeffs_.size() - 1) * static_cast<size_t>(r) + 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<size_t>(r)] = coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.coeffs_.empty() || rhs.coeffs_.empty()) return IntPoly{};
    std::vector<IntPoly::Int> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, IntPoly::Int(0));
    for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& value) {
    IntPoly out;
    out.coeffs_.reserve(value.coeffs_.size());
    for (const auto& c : value.coeffs_) out.coeffs_.push_back(-c);
    return out;
}

std::string IntPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (size_t e = 0; e < coeffs_.size(); ++e) {
        const Int& c = coeffs_[e];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        Int magnitude = abs(c);
        if (e == 0) {
            out += magnitude.get_str();
        } else {
            if (magnitude != 1) {
                out += magnitude.get_str();
                out += '*';
            }
            out += 'q';
            if (e >= 2) {
                out += '^';
                out += std::to_string(e);
            }
        }
    }
    return out;
}

IntPoly IntPoly::parse(std::string_view text) {
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_digits = [&]() -> std::string {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw std::invalid_argument("polynomial literal: expected a number");
        return std::string(text.substr(start, i - start));
    };

    std::vector<Int> acc;
    auto add_term = [&](const Int& coeff, long exponent) {
        if (static_cast<long>(acc.size()) <= exponent)
            acc.resize(static_cast<size_t>(exponent) + 1, Int(0));
        acc[static_cast<size_t>(exponent)] += coeff;
    };

    skip();
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw std::invalid_argument("polynomial literal: expected '+' or '-'");
        }

        Int coeff = 1;
        bool saw_number = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = Int(read_digits());
            saw_number = true;
            size_t mark = i;
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip();
                if (i == text.size() || text[i] != 'q')
                    throw std::invalid_argument("polynomial literal: expected q after '*'");
            } else {
                i = mark;
            }
        }

        long exponent = 0;
        if (i < text.size() && text[i] == 'q') {
            ++i;
            exponent = 1;
            size_t mark = i;
            skip();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip();
                exponent = std::stol(read_digits());
            } else {
                i = mark;
            }
        } else if (!saw_number) {
            throw std::invalid_argument("polynomial literal: expected a term");
        }

        add_term(sign * coeff, exponent);
        first = false;
        skip();
    }
    if (first) throw std::invalid_argument("polynomial literal: empty");
    return IntPoly(std::move(acc));
}

std::ostream& operator<<(std::ostream& os, const IntPoly& value) { return os << value.str(); }

}  // namespace qident
