#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "bit_matrix.hpp"
#include "field.hpp"

namespace skewhad {

enum class GroupKind { cyclic, field_additive };

struct GroupElem {
    std::uint32_t index = 0;
    friend auto operator<=>(const GroupElem&, const GroupElem&) = default;
};

/// Finite abelian group with a fixed element ordering.
///
/// cyclic(n) orders its elements 0, 1, ..., n-1. The additive group of a field is
/// ordered as [0, g^0, g^1, ..., g^{q-2}], so index k + 1 holds g^k.
class GroupSpec {
public:
    static GroupSpec cyclic(std::uint32_t n);
    static GroupSpec field_additive(std::shared_ptr<const FieldTables> tables);

    GroupKind kind() const noexcept { return kind_; }
    std::uint32_t order() const noexcept { return order_; }
    const FieldTables* field() const noexcept { return field_.get(); }

    // Unchecked index arithmetic for inner loops.
    std::uint32_t add_index(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t neg_index(std::uint32_t x) const { return neg_[x]; }
    std::uint32_t sub_index(std::uint32_t x, std::uint32_t y) const { return add_index(x, neg_[y]); }

    /// Field element at an index (field_additive only).
    std::uint32_t element_at(std::uint32_t index) const;
    /// Index of a field element (field_additive only).
    std::uint32_t index_of(std::uint32_t element) const;

private:
    GroupSpec(GroupKind kind, std::uint32_t order, std::shared_ptr<const FieldTables> field);

    GroupKind kind_;
    std::uint32_t order_;
    std::shared_ptr<const FieldTables> field_;
    std::vector<std::uint32_t> neg_;
};

GroupElem group_add(const GroupSpec& spec, GroupElem x, GroupElem y);
GroupElem group_neg(const GroupSpec& spec, GroupElem x);

/// Subset D of a group, stored as a membership bit vector over element indices.
class Subset {
public:
    Subset() = default;
    explicit Subset(std::uint32_t group_order) : membership_(group_order) {}
    Subset(std::uint32_t group_order, const std::vector<std::uint32_t>& members);

    std::uint32_t group_order() const noexcept { return static_cast<std::uint32_t>(membership_.size()); }
    std::size_t size() const noexcept { return membership_.count(); }
    bool contains(std::uint32_t x) const { return membership_.test(x); }
    void insert(std::uint32_t x) { membership_.set(x); }

    /// The {+1,-1} indicator: -1 on members.
    int sign(std::uint32_t x) const { return contains(x) ? -1 : 1; }

    std::vector<std::uint32_t> elements() const { return membership_.ones(); }
    const BitVector& membership() const noexcept { return membership_; }

    friend bool operator==(const Subset&, const Subset&) = default;

private:
    BitVector membership_;
};

/// Periodic autocorrelation P_D(w) = sum_x s_D(x) s_D(x + w),
/// evaluated as v - 4(|D| - |D n (D - w)|).
long autocorrelation(const GroupSpec& spec, const Subset& d, GroupElem w);

/// P_D(w) for every nonzero w; entry k holds shift index k + 1.
std::vector<long> autocorrelation_profile(const GroupSpec& spec, const Subset& d);

} // namespace skewhad
