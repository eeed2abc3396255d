#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace skewhad {

/// Coefficients c_0..c_d of a polynomial over GF(p), lowest degree first.
using Poly = std::vector<std::uint32_t>;

struct FieldConfig {
    std::uint32_t p = 0;
    std::uint32_t e = 1;
    /// Monic modulus (e + 1 coefficients); empty selects the smallest irreducible.
    std::optional<Poly> modulus;
    /// Canonical encoding of the primitive element; empty selects the smallest.
    std::optional<std::uint32_t> generator;
};

bool is_prime(std::uint64_t n);

/// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

/// Monic irreducible of degree e whose canonical encoding of c_0..c_{e-1} is smallest.
Poly smallest_irreducible(std::uint32_t p, std::uint32_t e);

/// Multiplication and discrete-log tables of GF(p^e).
///
/// Field elements are handled by canonical encoding sum(c_i * p^i), so 0 is the zero
/// element and 1 is the unit. Addition works digit-wise, multiplication via the tables.
class FieldTables {
public:
    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t e() const noexcept { return e_; }
    std::uint32_t q() const noexcept { return q_; }
    const Poly& modulus() const noexcept { return modulus_; }
    std::uint32_t generator() const noexcept { return generator_; }

    /// g^k for k in [0, q-1).
    std::uint32_t antilog(std::uint32_t k) const { return antilog_[k]; }
    /// Discrete log of a nonzero element.
    std::uint32_t log(std::uint32_t x) const;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;

    Poly decode(std::uint32_t x) const;
    std::uint32_t encode(std::span<const std::uint32_t> coeffs) const;

private:
    friend FieldTables build_field(const FieldConfig& config);

    std::uint32_t p_ = 0;
    std::uint32_t e_ = 0;
    std::uint32_t q_ = 0;
    Poly modulus_;
    std::uint32_t generator_ = 0;
    std::vector<std::uint32_t> antilog_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> neg_;
};

/// Builds GF(p^e) with the configured or automatically selected modulus and generator.
/// Throws skewhad::Error on a reducible modulus or a non-primitive generator.
FieldTables build_field(const FieldConfig& config);

/// Primitive elements of GF(p)[x]/(modulus), ascending by canonical encoding.
std::vector<std::uint32_t> primitive_elements(std::uint32_t p, std::uint32_t e, const Poly& modulus);

/// Classes C_i = g^i <g^N> of order N in the multiplicative group.
class CyclotomicPartition {
public:
    CyclotomicPartition(std::shared_ptr<const FieldTables> tables, std::uint32_t order);

    std::uint32_t order() const noexcept { return order_; }
    std::uint32_t class_size() const noexcept { return class_size_; }
    const FieldTables& tables() const noexcept { return *tables_; }
    const std::shared_ptr<const FieldTables>& tables_ptr() const noexcept { return tables_; }

    std::uint32_t class_of(std::uint32_t x) const;
    /// Elements g^{Nk+i}, in increasing k.
    std::vector<std::uint32_t> members(std::uint32_t i) const;

private:
    std::shared_ptr<const FieldTables> tables_;
    std::uint32_t order_;
    std::uint32_t class_size_;
};

inline CyclotomicPartition cyclotomic_partition(std::shared_ptr<const FieldTables> tables, std::uint32_t order) {
    return CyclotomicPartition(std::move(tables), order);
}

/// ((q-1)/2) mod N, the class index of -1. Requires odd q.
std::uint32_t negation_class_shift(const FieldTables& tables, std::uint32_t order);

} // namespace skewhad
