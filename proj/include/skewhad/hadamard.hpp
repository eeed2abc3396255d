#pragma once

#include <cstdint>

#include "bit_matrix.hpp"
#include "group.hpp"
#include "shdf.hpp"

namespace skewhad {

/// M[i][j] = s_D(g_j - g_i).
PmMatrix type1_matrix(const GroupSpec& spec, const Subset& d);

/// M[i][j] = s_D(g_i + g_j). Always symmetric.
PmMatrix type2_matrix(const GroupSpec& spec, const Subset& d);

/// M R with R the reversal permutation g -> -g; maps a type-2 matrix to
/// C[i][j] = s_D(g_i - g_j), which commutes with every type-1 matrix.
PmMatrix reversal_conjugate(const GroupSpec& spec, const PmMatrix& type2);

/// Bordered array of order 2v + 2:
///
///   [  1   1 |  e^T    e^T  ]
///   [ -1   1 |  e^T   -e^T  ]
///   [ -e  -e |  A      C    ]
///   [ -e   e | -C^T    A^T  ]
///
/// Requires every row and column sum of A and C to be +1.
PmMatrix assemble_bordered(const PmMatrix& a, const PmMatrix& c);

/// Full pipeline from certified blocks: type-1 of D0, reversed type-2 of D1, bordered.
PmMatrix build_skew_hadamard(const GroupSpec& spec, const BlockPair& blocks);

struct Gate0Report {
    std::size_t n = 0;
    bool gram_ok = false;   // H H^T = n I
    bool skew_ok = false;   // H + H^T = 2 I
    long max_offdiag_gram = 0;

    bool pass() const noexcept { return gram_ok && skew_ok; }
};

/// Exact check; Gram entries are n - 2 popcount(row_i ^ row_j).
Gate0Report gate0_verify(const PmMatrix& h);

struct NormalizedForm {
    PmMatrix normalized;  // D H D with D = diag(first row)
    PmMatrix core;        // normalized without first row and column
    BitMatrix tournament; // (J - core) / 2
};

/// Throws skewhad::Error when h fails Gate0.
NormalizedForm normalize_core_tournament(const PmMatrix& h);

} // namespace skewhad
