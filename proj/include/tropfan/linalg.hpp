#pragma once

#include <string>
#include <vector>

#include "tropfan/rational.hpp"

namespace tropfan {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;
using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;

bool is_prime(long long p);

/// Rank of a rational matrix (Gauss elimination over exact rationals).
int q_rank(QMat a);

/// Reduced row echelon form with zero rows dropped: pivots are 1, pivot
/// columns are cleared above and below, pivot columns strictly increase.
/// Two row sets span the same subspace iff their forms compare equal.
QMat q_rref(QMat a);

Rat q_det(QMat a);

/// Rank over the prime field GF(p); entries are residues in [0, p).
int fp_rank(long long p, IMat a);

long long fp_inverse(long long a, long long p);

/// Matrix over Q or over a prime field, the input format for matroid
/// construction from a vector configuration.
struct ExactMatrix {
    enum class Field { Q, Fp };

    Field field = Field::Q;
    long long p = 0;  // modulus when field == Fp
    QMat q;           // used when field == Q
    IMat fp;          // residues in [0, p) when field == Fp

    int rows() const { return field == Field::Q ? static_cast<int>(q.size()) : static_cast<int>(fp.size()); }
    int cols() const {
        if (field == Field::Q) return q.empty() ? 0 : static_cast<int>(q.front().size());
        return fp.empty() ? 0 : static_cast<int>(fp.front().size());
    }

    int rank() const;
    int rank_of_columns(const std::vector<int>& columns) const;

    static ExactMatrix rationals(QMat entries);
    static ExactMatrix prime_field(long long p, IMat residues);
};

} // namespace tropfan
