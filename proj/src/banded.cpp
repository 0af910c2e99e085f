#include "lubridrag/banded.hpp"

#include <algorithm>
#include <cmath>

namespace lubridrag {

BandedSPDMatrix::BandedSPDMatrix(int size, int half_bandwidth)
    : n_(size), kd_(half_bandwidth), a_(static_cast<size_t>(half_bandwidth + 1) * size, 0.0) {
    if (size < 1) throw std::invalid_argument("BandedSPDMatrix: size must be >= 1");
    if (half_bandwidth < 0 || half_bandwidth >= size)
        throw std::invalid_argument("BandedSPDMatrix: bad half bandwidth");
}

double& BandedSPDMatrix::ref(int i, int j) {
    return a_[static_cast<size_t>(i - j) * n_ + j];
}

void BandedSPDMatrix::add(int i, int j, double v) {
    if (factorized_) throw std::logic_error("BandedSPDMatrix: already factorized");
    if (i < j) std::swap(i, j);
    if (i >= n_ || j < 0 || i - j > kd_)
        throw std::out_of_range("BandedSPDMatrix: entry outside the band");
    ref(i, j) += v;
}

double BandedSPDMatrix::at(int i, int j) const {
    if (i < j) std::swap(i, j);
    if (i >= n_ || j < 0) throw std::out_of_range("BandedSPDMatrix: index out of range");
    if (i - j > kd_) return 0.0;
    return a_[static_cast<size_t>(i - j) * n_ + j];
}

void BandedSPDMatrix::factorize() {
    // Banded Cholesky A = L L^T, L in place of the lower band.
    for (int j = 0; j < n_; ++j) {
        double d = ref(j, j);
        for (int k = std::max(0, j - kd_); k < j; ++k) {
            const double ljk = ref(j, k);
            d -= ljk * ljk;
        }
        if (!(d > 0.0) || !std::isfinite(d))
            throw SingularSystemError("banded Cholesky: non-positive pivot at row "
                                      + std::to_string(j));
        const double ljj = std::sqrt(d);
        ref(j, j) = ljj;
        const int iend = std::min(n_, j + kd_ + 1);
        for (int i = j + 1; i < iend; ++i) {
            double s = ref(i, j);
            for (int k = std::max(0, i - kd_); k < j; ++k)
                s -= ref(i, k) * ref(j, k);
            ref(i, j) = s / ljj;
        }
    }
    factorized_ = true;
}

std::vector<double> BandedSPDMatrix::solve(const std::vector<double>& rhs) const {
    if (!factorized_) throw std::logic_error("BandedSPDMatrix: factorize() first");
    if (static_cast<int>(rhs.size()) != n_)
        throw std::invalid_argument("BandedSPDMatrix: rhs size mismatch");
    std::vector<double> x(rhs);
    // forward substitution L y = rhs
    for (int i = 0; i < n_; ++i) {
        double s = x[i];
        for (int k = std::max(0, i - kd_); k < i; ++k)
            s -= a_[static_cast<size_t>(i - k) * n_ + k] * x[k];
        x[i] = s / a_[static_cast<size_t>(0) * n_ + i];
    }
    // back substitution L^T x = y
    for (int j = n_ - 1; j >= 0; --j) {
        double s = x[j];
        const int iend = std::min(n_, j + kd_ + 1);
        for (int i = j + 1; i < iend; ++i)
            s -= a_[static_cast<size_t>(i - j) * n_ + j] * x[i];
        x[j] = s / a_[static_cast<size_t>(0) * n_ + j];
    }
    return x;
}

} // namespace lubridrag
