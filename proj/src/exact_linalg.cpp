#include "dimsurf/exact_linalg.hpp"

#include <algorithm>

namespace dimsurf {

bool RatMat::is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i) {
        if (at(i, i) != 0) return false;
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    }
    return true;
}

void RatMat::swap_rows(int i, int j) {
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void RatMat::swap_cols(int i, int j) {
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

Rational determinant_exact(RatMat a) {
    const int n = a.rows();
    if (n != a.cols()) return Rational(0);
    Rational det(1);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (a.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != c) {
            a.swap_rows(pivot, c);
            det = -det;
        }
        det *= a.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (a.at(r, c) == 0) continue;
            Rational f = a.at(r, c) / a.at(c, c);
            for (int k = c; k < n; ++k) a.at(r, k) -= f * a.at(c, k);
        }
    }
    return det;
}

std::optional<RatMat> inverse_exact(RatMat a) {
    const int n = a.rows();
    if (n != a.cols()) return std::nullopt;
    RatMat inv = RatMat::identity(n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (a.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (pivot != c) {
            a.swap_rows(pivot, c);
            inv.swap_rows(pivot, c);
        }
        Rational p = a.at(c, c);
        for (int k = 0; k < n; ++k) {
            a.at(c, k) /= p;
            inv.at(c, k) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a.at(r, c) == 0) continue;
            Rational f = a.at(r, c);
            for (int k = 0; k < n; ++k) {
                a.at(r, k) -= f * a.at(c, k);
                inv.at(r, k) -= f * inv.at(c, k);
            }
        }
    }
    return inv;
}

RatMat remove_rows_cols(const RatMat& a, const std::vector<int>& removed) {
    std::vector<char> drop(static_cast<std::size_t>(a.rows()), 0);
    for (int i : removed) drop[static_cast<std::size_t>(i)] = 1;
    std::vector<int> keep;
    for (int i = 0; i < a.rows(); ++i)
        if (!drop[static_cast<std::size_t>(i)]) keep.push_back(i);
    return submatrix_on(a, keep);
}

RatMat submatrix_on(const RatMat& a, const std::vector<int>& keep) {
    const int k = static_cast<int>(keep.size());
    RatMat s(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            s.at(i, j) = a.at(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
    return s;
}

int permutation_sign(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        ++cycles;
        int j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            j = p[static_cast<std::size_t>(j)];
        }
    }
    return ((n - cycles) % 2 == 0) ? 1 : -1;
}

}  // namespace dimsurf
