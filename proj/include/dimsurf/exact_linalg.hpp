#pragma once

#include <optional>
#include <vector>

#include "dimsurf/rational.hpp"

namespace dimsurf {

/// Dense matrix of exact rationals, row-major.
class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

    static RatMat identity(int n) {
        RatMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_skew_symmetric() const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

/// Exact determinant by fraction-full Gaussian elimination.
Rational determinant_exact(RatMat a);

/// Exact inverse; nullopt when singular.
std::optional<RatMat> inverse_exact(RatMat a);

/// Copy of a with the given rows and columns removed (indices need not be sorted).
RatMat remove_rows_cols(const RatMat& a, const std::vector<int>& removed);

/// Submatrix on the given (ordered) index list, rows and columns alike.
RatMat submatrix_on(const RatMat& a, const std::vector<int>& keep);

/// Sign of the permutation i -> p[i] over 0..n-1.
int permutation_sign(const std::vector<int>& p);

}  // namespace dimsurf
