#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "group.hpp"

namespace skewhad {

/// Blocks D0, D1 as unions of cyclotomic classes indexed by I0, I1.
struct BlockPair {
    std::vector<std::uint32_t> i0;
    std::vector<std::uint32_t> i1;
    Subset d0;
    Subset d1;
};

/// Throws skewhad::Error if an index is not below the partition order.
BlockPair blocks_from_indices(const GroupSpec& spec, const CyclotomicPartition& partition,
                              std::vector<std::uint32_t> i0, std::vector<std::uint32_t> i1);

enum class SkewStatus { skew, contains_zero, not_skew };

/// x in D <=> -x not in D for every x != 0.
SkewStatus check_skew(const GroupSpec& spec, const Subset& d);

enum class ShdfStatus {
    pass,
    zero_in_block,    // 0 in D0
    not_skew,         // D0 fails skew-symmetry
    sum_mismatch,     // some P_D0(w) + P_D1(w) != -2
    block_size,       // sums hold but |D1| = (v+1)/2, unusable with +1 row sums
};

std::string_view to_string(ShdfStatus status);

struct ShdfCertificate {
    std::uint32_t v = 0;
    bool skew_ok = false;
    /// P_D0(w) + P_D1(w) for w = 1..v-1 in index order.
    std::vector<long> sums;
    ShdfStatus status = ShdfStatus::sum_mismatch;
    bool pass = false;
};

ShdfCertificate check_shdf(const GroupSpec& spec, const Subset& d0, const Subset& d1);
inline ShdfCertificate check_shdf(const GroupSpec& spec, const BlockPair& pair) {
    return check_shdf(spec, pair.d0, pair.d1);
}

/// One "w_index sum" line per shift, then "PASS" or "FAIL <reason>".
void write_shdf_log(std::ostream& out, const ShdfCertificate& cert);

struct GeneratorCandidate {
    std::uint32_t generator;
    ShdfStatus status;
};

struct ShdfSearchResult {
    std::shared_ptr<const FieldTables> tables;
    GroupSpec group;
    CyclotomicPartition partition;
    BlockPair blocks;
    ShdfCertificate certificate;
    std::vector<GeneratorCandidate> trace;
};

class GeneratorExhausted : public Error {
public:
    explicit GeneratorExhausted(std::size_t tried)
        : Error("no primitive element satisfies the difference family condition (" + std::to_string(tried) +
                " candidates tried)"),
          tried_(tried) {}
    std::size_t candidates_tried() const noexcept { return tried_; }

private:
    std::size_t tried_;
};

/// Tries primitive elements in ascending encoding and returns the first whose cyclotomic
/// blocks pass check_shdf. A configured generator restricts the search to that element.
ShdfSearchResult find_valid_generator(const FieldConfig& config, std::uint32_t order,
                                      const std::vector<std::uint32_t>& i0, const std::vector<std::uint32_t>& i1,
                                      const std::function<void(const GeneratorCandidate&)>& on_candidate = {});

} // namespace skewhad
