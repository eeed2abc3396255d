#include "skewhad/shdf.hpp"

#include <algorithm>
#include <ostream>

namespace skewhad {

BlockPair blocks_from_indices(const GroupSpec& spec, const CyclotomicPartition& partition,
                              std::vector<std::uint32_t> i0, std::vector<std::uint32_t> i1) {
    if (spec.kind() != GroupKind::field_additive || spec.order() != partition.tables().q())
        throw Error("blocks need the additive group of the partitioned field");
    const std::uint32_t n = partition.order();
    for (const auto* set : {&i0, &i1}) {
        for (auto i : *set)
            if (i >= n) throw Error("class index " + std::to_string(i) + " not below " + std::to_string(n));
    }
    std::sort(i0.begin(), i0.end());
    i0.erase(std::unique(i0.begin(), i0.end()), i0.end());
    std::sort(i1.begin(), i1.end());
    i1.erase(std::unique(i1.begin(), i1.end()), i1.end());

    std::vector<bool> in0(n), in1(n);
    for (auto i : i0) in0[i] = true;
    for (auto i : i1) in1[i] = true;

    const std::uint32_t v = spec.order();
    Subset d0(v), d1(v);
    // Index k + 1 holds g^k, whose class is k mod N.
    for (std::uint32_t k = 0; k + 1 < v; ++k) {
        if (in0[k % n]) d0.insert(k + 1);
        if (in1[k % n]) d1.insert(k + 1);
    }
    return {std::move(i0), std::move(i1), std::move(d0), std::move(d1)};
}

SkewStatus check_skew(const GroupSpec& spec, const Subset& d) {
    if (d.group_order() != spec.order()) throw Error("subset does not belong to this group");
    if (d.contains(0)) return SkewStatus::contains_zero;
    if (2 * d.size() + 1 != spec.order()) return SkewStatus::not_skew;
    for (auto x : d.elements())
        if (d.contains(spec.neg_index(x))) return SkewStatus::not_skew;
    return SkewStatus::skew;
}

std::string_view to_string(ShdfStatus status) {
    switch (status) {
    case ShdfStatus::pass: return "pass";
    case ShdfStatus::zero_in_block: return "zero_in_block";
    case ShdfStatus::not_skew: return "not_skew";
    case ShdfStatus::sum_mismatch: return "sum_mismatch";
    case ShdfStatus::block_size: return "block_size";
    }
    return "unknown";
}

ShdfCertificate check_shdf(const GroupSpec& spec, const Subset& d0, const Subset& d1) {
    ShdfCertificate cert;
    cert.v = spec.order();
    const SkewStatus skew = check_skew(spec, d0);
    cert.skew_ok = skew == SkewStatus::skew;

    const auto p0 = autocorrelation_profile(spec, d0);
    const auto p1 = autocorrelation_profile(spec, d1);
    cert.sums.resize(p0.size());
    std::transform(p0.begin(), p0.end(), p1.begin(), cert.sums.begin(), std::plus<>{});
    const bool sums_ok = std::all_of(cert.sums.begin(), cert.sums.end(), [](long s) { return s == -2; });

    if (skew == SkewStatus::contains_zero)
        cert.status = ShdfStatus::zero_in_block;
    else if (skew == SkewStatus::not_skew)
        cert.status = ShdfStatus::not_skew;
    else if (!sums_ok)
        cert.status = ShdfStatus::sum_mismatch;
    else if (2 * d1.size() + 1 != cert.v)
        cert.status = ShdfStatus::block_size;
    else
        cert.status = ShdfStatus::pass;
    cert.pass = cert.status == ShdfStatus::pass;
    return cert;
}

void write_shdf_log(std::ostream& out, const ShdfCertificate& cert) {
    for (std::size_t k = 0; k < cert.sums.size(); ++k) out << (k + 1) << ' ' << cert.sums[k] << '\n';
    if (cert.pass)
        out << "PASS\n";
    else
        out << "FAIL " << to_string(cert.status) << '\n';
}

ShdfSearchResult find_valid_generator(const FieldConfig& config, std::uint32_t order,
                                      const std::vector<std::uint32_t>& i0, const std::vector<std::uint32_t>& i1,
                                      const std::function<void(const GeneratorCandidate&)>& on_candidate) {
    FieldConfig base = config;
    if (!base.modulus) base.modulus = smallest_irreducible(base.p, base.e);

    std::vector<std::uint32_t> candidates;
    if (base.generator)
        candidates.push_back(*base.generator);
    else
        candidates = primitive_elements(base.p, base.e, *base.modulus);

    std::vector<GeneratorCandidate> trace;
    for (auto g : candidates) {
        FieldConfig cfg = base;
        cfg.generator = g;
        auto tables = std::make_shared<const FieldTables>(build_field(cfg));
        auto group = GroupSpec::field_additive(tables);
        CyclotomicPartition partition(tables, order);
        auto blocks = blocks_from_indices(group, partition, i0, i1);
        auto cert = check_shdf(group, blocks);
        const GeneratorCandidate c{g, cert.status};
        trace.push_back(c);
        if (on_candidate) on_candidate(c);
        if (cert.pass)
            return {std::move(tables), std::move(group), std::move(partition), std::move(blocks), std::move(cert),
                    std::move(trace)};
    }
    throw GeneratorExhausted(trace.size());
}

} // namespace skewhad
