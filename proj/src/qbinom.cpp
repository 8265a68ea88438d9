#include <qident/qbinom.hpp>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace qident {

namespace {

std::mutex triangle_mutex;
// triangle[n][k] for 0 <= k <= n, grown on demand under the mutex.
std::vector<std::vector<IntPoly>> triangle;

void ensure_rows(int n) {
    if (triangle.empty()) triangle.push_back({IntPoly::constant(1)});
    for (int row = static_cast<int>(triangle.size()); row <= n; ++row) {
        std::vector<IntPoly> entries(static_cast<size_t>(row) + 1);
        entries.front() = IntPoly::constant(1);
        entries.back() = IntPoly::constant(1);
        for (int k = 1; k < row; ++k)
            entries[static_cast<size_t>(k)] =
                triangle[row - 1][static_cast<size_t>(k)] +
                IntPoly::monomial(1, row - k) * triangle[row - 1][static_cast<size_t>(k - 1)];
        triangle.push_back(std::move(entries));
    }
}

}  // namespace

IntPoly gauss_binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("gauss_binomial: upper argument must be >= 0");
    if (k < 0 || k > n) return IntPoly{};
    std::lock_guard<std::mutex> lock(triangle_mutex);
    ensure_rows(n);
    return triangle[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

IntPoly gauss_binomial_dilated(int n, int k, int r) {
    if (r < 1) throw std::invalid_argument("gauss_binomial_dilated: dilation must be >= 1");
    return gauss_binomial(n, k).dilate(r);
}

IntPoly gauss_binomial(const QBinomArgs& args) {
    return gauss_binomial_dilated(args.upper, args.lower, args.dilation);
}

long choose2(long a) {
    if (a < 0) throw std::invalid_argument("choose2: argument must be >= 0");
    return a * (a - 1) / 2;
}

}  // namespace qident
