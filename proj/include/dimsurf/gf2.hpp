#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dimsurf::gf2 {

/// Fixed-length bit vector over GF(2). Addition is xor, the inner product
/// is the parity of the bitwise AND.
class Vec {
public:
    Vec() = default;
    explicit Vec(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static Vec from_mask(int n, std::uint64_t bits) {
        Vec v(n);
        for (int i = 0; i < n && i < 64; ++i)
            if ((bits >> i) & 1) v.set(i, true);
        return v;
    }

    int size() const { return n_; }

    bool get(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
    }

    void set(int i, bool value) {
        assert(i >= 0 && i < n_);
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            w_[static_cast<std::size_t>(i) >> 6] |= mask;
        else
            w_[static_cast<std::size_t>(i) >> 6] &= ~mask;
    }

    void flip(int i) { set(i, !get(i)); }

    Vec& operator^=(const Vec& o) {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }

    friend Vec operator^(Vec a, const Vec& b) {
        a ^= b;
        return a;
    }

    bool any() const {
        for (auto word : w_)
            if (word) return true;
        return false;
    }

    int popcount() const {
        int c = 0;
        for (auto word : w_) c += std::popcount(word);
        return c;
    }

    /// Parity of |a & b|.
    bool dot(const Vec& o) const {
        assert(n_ == o.n_);
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
        return std::popcount(acc) & 1;
    }

    int lowest_set() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
        return -1;
    }

    /// Low bits packed into an integer; requires size <= 32.
    std::uint32_t to_mask() const {
        assert(n_ <= 32);
        return static_cast<std::uint32_t>(w_.empty() ? 0 : w_[0]);
    }

    std::string to_string() const {
        std::string s(static_cast<std::size_t>(n_), '0');
        for (int i = 0; i < n_; ++i)
            if (get(i)) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

    friend bool operator==(const Vec& a, const Vec& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

    friend bool operator<(const Vec& a, const Vec& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        for (std::size_t k = a.w_.size(); k-- > 0;)
            if (a.w_[k] != b.w_[k]) return a.w_[k] < b.w_[k];
        return false;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Incremental row-echelon basis. insert() reduces the vector against the
/// rows kept so far and stores it when independent.
class Basis {
public:
    bool insert(Vec v) {
        reduce(v);
        int p = v.lowest_set();
        if (p < 0) return false;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    bool in_span(Vec v) const {
        reduce(v);
        return !v.any();
    }

    /// Reduced copy of v against the stored rows.
    Vec residue(Vec v) const {
        reduce(v);
        return v;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    void reduce(Vec& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (v.get(pivots_[r])) v ^= rows_[r];
    }

    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

/// Solves sum_j x_j cols[j] = rhs. Free variables are set to zero, so the
/// solution is deterministic. Returns nullopt when inconsistent.
inline std::optional<Vec> solve(const std::vector<Vec>& cols, const Vec& rhs) {
    const int m = static_cast<int>(cols.size());
    const int n = rhs.size();
    // One equation per coordinate: coefficient row over the m unknowns plus
    // the right-hand bit.
    struct Eq {
        Vec coeff;
        bool rhs;
    };
    std::vector<Eq> eqs;
    eqs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Eq eq{Vec(m), rhs.get(i)};
        for (int j = 0; j < m; ++j)
            if (cols[static_cast<std::size_t>(j)].get(i)) eq.coeff.set(j, true);
        eqs.push_back(std::move(eq));
    }
    Vec x(m);
    std::vector<int> pivot_row(static_cast<std::size_t>(m), -1);
    int used = 0;
    for (int j = 0; j < m; ++j) {
        int r = -1;
        for (int i = used; i < n; ++i)
            if (eqs[static_cast<std::size_t>(i)].coeff.get(j)) {
                r = i;
                break;
            }
        if (r < 0) continue;
        std::swap(eqs[static_cast<std::size_t>(r)], eqs[static_cast<std::size_t>(used)]);
        for (int i = 0; i < n; ++i) {
            if (i == used) continue;
            if (eqs[static_cast<std::size_t>(i)].coeff.get(j)) {
                eqs[static_cast<std::size_t>(i)].coeff ^= eqs[static_cast<std::size_t>(used)].coeff;
                eqs[static_cast<std::size_t>(i)].rhs ^= eqs[static_cast<std::size_t>(used)].rhs;
            }
        }
        pivot_row[static_cast<std::size_t>(j)] = used;
        ++used;
    }
    for (int i = used; i < n; ++i)
        if (eqs[static_cast<std::size_t>(i)].rhs) return std::nullopt;
    for (int j = 0; j < m; ++j)
        if (pivot_row[static_cast<std::size_t>(j)] >= 0)
            x.set(j, eqs[static_cast<std::size_t>(pivot_row[static_cast<std::size_t>(j)])].rhs);
    return x;
}

inline int rank_of(const std::vector<Vec>& vs) {
    Basis b;
    for (const auto& v : vs) b.insert(v);
    return b.rank();
}

/// Square matrix given by rows; true when nonsingular over GF(2).
inline bool invertible(const std::vector<Vec>& rows) {
    if (rows.empty()) return true;
    if (static_cast<int>(rows.size()) != rows.front().size()) return false;
    return rank_of(rows) == static_cast<int>(rows.size());
}

}  // namespace dimsurf::gf2
