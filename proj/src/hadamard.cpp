#include "skewhad/hadamard.hpp"

#include <algorithm>
#include <cstdlib>

#include "skewhad/error.hpp"

namespace skewhad {

PmMatrix type1_matrix(const GroupSpec& spec, const Subset& d) {
    const std::uint32_t v = spec.order();
    PmMatrix m(v);
    for (std::uint32_t i = 0; i < v; ++i)
        for (std::uint32_t j = 0; j < v; ++j)
            if (d.contains(spec.sub_index(j, i))) m.flip(i, j);
    return m;
}

PmMatrix type2_matrix(const GroupSpec& spec, const Subset& d) {
    const std::uint32_t v = spec.order();
    PmMatrix m(v);
    for (std::uint32_t i = 0; i < v; ++i)
        for (std::uint32_t j = i; j < v; ++j)
            if (d.contains(spec.add_index(i, j))) {
                m.flip(i, j);
                if (i != j) m.flip(j, i);
            }
    return m;
}

PmMatrix reversal_conjugate(const GroupSpec& spec, const PmMatrix& type2) {
    const std::uint32_t v = spec.order();
    if (type2.order() != v) throw Error("matrix order does not match the group");
    PmMatrix c(v);
    for (std::uint32_t i = 0; i < v; ++i)
        for (std::uint32_t j = 0; j < v; ++j)
            c.set(i, j, type2(i, spec.neg_index(j)));
    return c;
}

namespace {

void require_unit_sums(const PmMatrix& m, const char* name) {
    const PmMatrix t = m.transpose();
    for (std::size_t i = 0; i < m.order(); ++i)
        if (m.row_sum(i) != 1 || t.row_sum(i) != 1)
            throw Error(std::string("block ") + name + " must have all row and column sums equal to +1");
}

} // namespace

PmMatrix assemble_bordered(const PmMatrix& a, const PmMatrix& c) {
    const std::size_t v = a.order();
    if (c.order() != v) throw Error("blocks A and C differ in order");
    require_unit_sums(a, "A");
    require_unit_sums(c, "C");

    const std::size_t n = 2 * v + 2;
    PmMatrix h(n);
    const std::size_t b0 = 2, b1 = 2 + v;
    h.set(1, 0, -1);
    for (std::size_t i = 0; i < v; ++i) {
        h.set(1, b1 + i, -1);
        h.set(b0 + i, 0, -1);
        h.set(b0 + i, 1, -1);
        h.set(b1 + i, 0, -1);
    }
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < v; ++j) {
            h.set(b0 + i, b0 + j, a(i, j));
            h.set(b0 + i, b1 + j, c(i, j));
            h.set(b1 + i, b0 + j, -c(j, i));
            h.set(b1 + i, b1 + j, a(j, i));
        }
    return h;
}

PmMatrix build_skew_hadamard(const GroupSpec& spec, const BlockPair& blocks) {
    const PmMatrix a = type1_matrix(spec, blocks.d0);
    const PmMatrix c = reversal_conjugate(spec, type2_matrix(spec, blocks.d1));
    return assemble_bordered(a, c);
}

Gate0Report gate0_verify(const PmMatrix& h) {
    Gate0Report r;
    r.n = h.order();
    const auto& bits = h.bits();
    const long n = static_cast<long>(r.n);

    r.gram_ok = true;
    for (std::size_t i = 0; i < r.n; ++i) {
        const auto ri = bits.row(i);
        for (std::size_t j = i + 1; j < r.n; ++j) {
            const auto rj = bits.row(j);
            long diff = 0;
            for (std::size_t w = 0; w < ri.size(); ++w) diff += std::popcount(ri[w] ^ rj[w]);
            const long g = n - 2 * diff;
            if (g != 0) {
                r.gram_ok = false;
                r.max_offdiag_gram = std::max(r.max_offdiag_gram, std::labs(g));
            }
        }
    }

    r.skew_ok = true;
    for (std::size_t i = 0; i < r.n && r.skew_ok; ++i) {
        if (bits.test(i, i)) r.skew_ok = false;
        for (std::size_t j = i + 1; j < r.n; ++j)
            if (bits.test(i, j) == bits.test(j, i)) {
                r.skew_ok = false;
                break;
            }
    }
    return r;
}

NormalizedForm normalize_core_tournament(const PmMatrix& h) {
    if (!gate0_verify(h).pass()) throw Error("matrix fails Gate0; refusing to normalize");
    const std::size_t n = h.order();
    NormalizedForm out;
    out.normalized = PmMatrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.normalized.set(i, j, h(0, i) * h(i, j) * h(0, j));

    out.core = PmMatrix(n - 1);
    out.tournament = BitMatrix(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) {
            const int s = out.normalized(i, j);
            out.core.set(i - 1, j - 1, s);
            if (s < 0) out.tournament.set(i - 1, j - 1);
        }
    return out;
}

} // namespace skewhad
