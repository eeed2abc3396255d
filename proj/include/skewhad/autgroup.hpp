#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bit_matrix.hpp"
#include "field.hpp"

namespace skewhad {

/// x -> u x + a with u in C_0 (field elements by canonical encoding).
struct AffineMap {
    std::uint32_t u = 1;
    std::uint32_t a = 0;
    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// Validates u != 0 and log(u) = 0 mod N.
AffineMap make_affine(const FieldTables& tables, std::uint32_t order, std::uint32_t u, std::uint32_t a);

/// m1 after m2: x -> u1 (u2 x + a2) + a1.
AffineMap compose_affine(const FieldTables& tables, const AffineMap& m1, const AffineMap& m2);

/// Permutation of the 2q + 2 row/column indices of a bordered matrix. Borders 0 and 1 are
/// fixed; index 2 + b*q + i moves to 2 + b*q + index_of(u g_i + a) for both blocks b.
using Permutation = std::vector<std::uint32_t>;

Permutation induced_permutation(const FieldTables& tables, const AffineMap& map);

/// H[sigma(i)][sigma(j)] == H[i][j] for all i, j. Throws skewhad::Error on size mismatch.
bool verify_automorphism(const PmMatrix& h, const Permutation& sigma);

struct AuditOptions {
    std::size_t samples = 100;
    std::uint64_t seed = 0x5eed;
    bool exhaustive = false;
};

struct AuditReport {
    std::vector<std::string> lines;
    std::size_t checked = 0;
    std::uint64_t claimed_order = 0;   // |C_0| * q
    bool pass = false;
};

/// Checks the multiplier generator g^N, the e basis translations, then random
/// composites (or every element when exhaustive).
AuditReport subgroup_audit(const PmMatrix& h, const FieldTables& tables, std::uint32_t order,
                           const AuditOptions& options = {});

/// Audit lines followed by "PASS order>=..." or "FAIL".
void write_audit_log(std::ostream& out, const AuditReport& report);

} // namespace skewhad
