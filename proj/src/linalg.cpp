#include "tropfan/linalg.hpp"

#include <stdexcept>

namespace tropfan {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

// Forward elimination over Q; returns the number of pivots.
int eliminate(QMat& a) {
    int rows = static_cast<int>(a.size());
    int cols = rows == 0 ? 0 : static_cast<int>(a.front().size());
    int piv = 0;
    for (int col = 0; col < cols && piv < rows; ++col) {
        int found = -1;
        for (int r = piv; r < rows; ++r) {
            if (!a[r][col].is_zero()) { found = r; break; }
        }
        if (found < 0) continue;
        std::swap(a[piv], a[found]);
        Rat inv = Rat(1) / a[piv][col];
        for (int c = col; c < cols; ++c) a[piv][c] = a[piv][c] * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == piv || a[r][col].is_zero()) continue;
            Rat f = a[r][col];
            for (int c = col; c < cols; ++c) a[r][c] = a[r][c] - f * a[piv][c];
        }
        ++piv;
    }
    return piv;
}

} // namespace

int q_rank(QMat a) {
    return eliminate(a);
}

QMat q_rref(QMat a) {
    int piv = eliminate(a);
    a.resize(static_cast<std::size_t>(piv));
    return a;
}

Rat q_det(QMat a) {
    int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("determinant of non-square matrix");
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int found = -1;
        for (int r = col; r < n; ++r) {
            if (!a[r][col].is_zero()) { found = r; break; }
        }
        if (found < 0) return Rat(0);
        if (found != col) {
            std::swap(a[col], a[found]);
            det = -det;
        }
        det = det * a[col][col];
        Rat inv = Rat(1) / a[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Rat f = a[r][col] * inv;
            for (int c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[col][c];
        }
    }
    return det;
}

long long fp_inverse(long long a, long long p) {
    long long t = 0, new_t = 1;
    long long r = p, new_r = a % p;
    while (new_r != 0) {
        long long q = r / new_r;
        t -= q * new_t; std::swap(t, new_t);
        r -= q * new_r; std::swap(r, new_r);
    }
    if (r != 1) throw std::invalid_argument("element not invertible mod p");
    return ((t % p) + p) % p;
}

int fp_rank(long long p, IMat a) {
    int rows = static_cast<int>(a.size());
    int cols = rows == 0 ? 0 : static_cast<int>(a.front().size());
    int piv = 0;
    for (int col = 0; col < cols && piv < rows; ++col) {
        int found = -1;
        for (int r = piv; r < rows; ++r) {
            if (a[r][col] % p != 0) { found = r; break; }
        }
        if (found < 0) continue;
        std::swap(a[piv], a[found]);
        long long inv = fp_inverse(((a[piv][col] % p) + p) % p, p);
        for (int c = col; c < cols; ++c) a[piv][c] = (((a[piv][c] % p) * inv) % p + p) % p;
        for (int r = piv + 1; r < rows; ++r) {
            long long f = ((a[r][col] % p) + p) % p;
            if (f == 0) continue;
            for (int c = col; c < cols; ++c)
                a[r][c] = (((a[r][c] - f * a[piv][c]) % p) + p) % p;
        }
        ++piv;
    }
    return piv;
}

int ExactMatrix::rank() const {
    std::vector<int> all(static_cast<std::size_t>(cols()));
    for (int i = 0; i < cols(); ++i) all[static_cast<std::size_t>(i)] = i;
    return rank_of_columns(all);
}

int ExactMatrix::rank_of_columns(const std::vector<int>& columns) const {
    for (int c : columns)
        if (c < 0 || c >= cols()) throw std::invalid_argument("column index out of range");
    if (field == Field::Q) {
        QMat sub(static_cast<std::size_t>(rows()));
        for (int r = 0; r < rows(); ++r)
            for (int c : columns) sub[static_cast<std::size_t>(r)].push_back(q[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        return q_rank(std::move(sub));
    }
    IMat sub(static_cast<std::size_t>(rows()));
    for (int r = 0; r < rows(); ++r)
        for (int c : columns) sub[static_cast<std::size_t>(r)].push_back(fp[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    return fp_rank(p, std::move(sub));
}

ExactMatrix ExactMatrix::rationals(QMat entries) {
    if (entries.empty() || entries.front().empty()) throw std::invalid_argument("empty matrix");
    std::size_t width = entries.front().size();
    for (const auto& row : entries)
        if (row.size() != width) throw std::invalid_argument("ragged matrix");
    ExactMatrix m;
    m.field = Field::Q;
    m.q = std::move(entries);
    return m;
}

ExactMatrix ExactMatrix::prime_field(long long p, IMat residues) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    if (residues.empty() || residues.front().empty()) throw std::invalid_argument("empty matrix");
    std::size_t width = residues.front().size();
    for (const auto& row : residues) {
        if (row.size() != width) throw std::invalid_argument("ragged matrix");
        for (long long v : row)
            if (v < 0 || v >= p) throw std::invalid_argument("residue out of range [0, p)");
    }
    ExactMatrix m;
    m.field = Field::Fp;
    m.p = p;
    m.fp = std::move(residues);
    return m;
}

} // namespace tropfan
