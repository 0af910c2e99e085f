#ifndef LUBRIDRAG_BANDED_HPP
#define LUBRIDRAG_BANDED_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace lubridrag {

class SingularSystemError : public std::runtime_error {
public:
    explicit SingularSystemError(const std::string& what) : std::runtime_error(what) {}
};

/// Symmetric positive definite banded matrix, lower triangle stored by
/// diagonals: entry (i, j) with 0 <= i - j <= half_bandwidth.
class BandedSPDMatrix {
public:
    BandedSPDMatrix(int size, int half_bandwidth);

    int size() const { return n_; }
    int half_bandwidth() const { return kd_; }

    /// Adds v at (i, j); symmetric entries are stored once.
    void add(int i, int j, double v);

    double at(int i, int j) const;

    /// In-place Cholesky factorization; throws SingularSystemError when a
    /// pivot is not strictly positive.
    void factorize();

    /// Solves A x = rhs using the factorization (factorize() must have run).
    std::vector<double> solve(const std::vector<double>& rhs) const;

private:
    double& ref(int i, int j);

    int n_;
    int kd_;
    bool factorized_ = false;
    std::vector<double> a_; // (kd+1) diagonals, a_[d * n_ + j] = A(j + d, j)
};

} // namespace lubridrag

#endif
