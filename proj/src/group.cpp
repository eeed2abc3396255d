#include "skewhad/group.hpp"

#include "skewhad/error.hpp"

namespace skewhad {

GroupSpec::GroupSpec(GroupKind kind, std::uint32_t order, std::shared_ptr<const FieldTables> field)
    : kind_(kind), order_(order), field_(std::move(field)), neg_(order) {
    for (std::uint32_t x = 0; x < order_; ++x) {
        if (kind_ == GroupKind::cyclic)
            neg_[x] = x == 0 ? 0 : order_ - x;
        else
            neg_[x] = index_of(field_->neg(element_at(x)));
    }
}

GroupSpec GroupSpec::cyclic(std::uint32_t n) {
    if (n == 0) throw Error("cyclic group order must be positive");
    return GroupSpec(GroupKind::cyclic, n, nullptr);
}

GroupSpec GroupSpec::field_additive(std::shared_ptr<const FieldTables> tables) {
    if (!tables) throw Error("field tables required");
    const auto q = tables->q();
    return GroupSpec(GroupKind::field_additive, q, std::move(tables));
}

std::uint32_t GroupSpec::add_index(std::uint32_t x, std::uint32_t y) const {
    if (kind_ == GroupKind::cyclic) {
        const std::uint32_t s = x + y;
        return s >= order_ ? s - order_ : s;
    }
    return index_of(field_->add(element_at(x), element_at(y)));
}

std::uint32_t GroupSpec::element_at(std::uint32_t index) const {
    if (!field_) throw Error("element_at requires a field group");
    return index == 0 ? 0 : field_->antilog(index - 1);
}

std::uint32_t GroupSpec::index_of(std::uint32_t element) const {
    if (!field_) throw Error("index_of requires a field group");
    return element == 0 ? 0 : field_->log(element) + 1;
}

namespace {

void check_index(const GroupSpec& spec, GroupElem x) {
    if (x.index >= spec.order())
        throw Error("group element index " + std::to_string(x.index) + " out of range for order " +
                    std::to_string(spec.order()));
}

} // namespace

GroupElem group_add(const GroupSpec& spec, GroupElem x, GroupElem y) {
    check_index(spec, x);
    check_index(spec, y);
    return {spec.add_index(x.index, y.index)};
}

GroupElem group_neg(const GroupSpec& spec, GroupElem x) {
    check_index(spec, x);
    return {spec.neg_index(x.index)};
}

Subset::Subset(std::uint32_t group_order, const std::vector<std::uint32_t>& members) : membership_(group_order) {
    for (auto m : members) {
        if (m >= group_order) throw Error("subset member out of range");
        membership_.set(m);
    }
}

namespace {

// |{x in D : x + w in D}|
std::size_t shifted_overlap(const GroupSpec& spec, const Subset& d, const std::vector<std::uint32_t>& elems,
                            std::uint32_t w) {
    std::size_t c = 0;
    for (auto x : elems) c += d.contains(spec.add_index(x, w));
    return c;
}

void check_sizes(const GroupSpec& spec, const Subset& d) {
    if (d.group_order() != spec.order()) throw Error("subset does not belong to this group");
}

} // namespace

long autocorrelation(const GroupSpec& spec, const Subset& d, GroupElem w) {
    check_index(spec, w);
    check_sizes(spec, d);
    const auto elems = d.elements();
    const long size = static_cast<long>(elems.size());
    return static_cast<long>(spec.order()) - 4 * (size - static_cast<long>(shifted_overlap(spec, d, elems, w.index)));
}

std::vector<long> autocorrelation_profile(const GroupSpec& spec, const Subset& d) {
    check_sizes(spec, d);
    const auto elems = d.elements();
    const long v = spec.order();
    const long size = static_cast<long>(elems.size());
    std::vector<long> out(spec.order() - 1);
    for (std::uint32_t w = 1; w < spec.order(); ++w)
        out[w - 1] = v - 4 * (size - static_cast<long>(shifted_overlap(spec, d, elems, w)));
    return out;
}

} // namespace skewhad
