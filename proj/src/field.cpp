#include "skewhad/field.hpp"

#include <algorithm>
#include <cassert>

#include "skewhad/error.hpp"

namespace skewhad {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    const std::size_t dm = m.size() - 1;
    trim(a);
    while (a.size() > dm) {
        const std::uint64_t c = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t k = 0; k <= dm; ++k)
            a[shift + k] = static_cast<std::uint32_t>((a[shift + k] + (p - c) * m[k]) % p);
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& m, std::uint32_t p) {
    Poly r{1};
    while (k) {
        if (k & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        k >>= 1;
    }
    return r;
}

Poly decode_digits(std::uint64_t x, std::uint32_t p, std::uint32_t len) {
    Poly c(len);
    for (auto& d : c) {
        d = static_cast<std::uint32_t>(x % p);
        x /= p;
    }
    return c;
}

std::uint32_t encode_digits(const Poly& c, std::uint32_t p) {
    std::uint64_t x = 0;
    for (std::size_t i = c.size(); i-- > 0;) x = x * p + c[i];
    return static_cast<std::uint32_t>(x);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> f;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            f.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) f.push_back(n);
    return f;
}

bool is_primitive(const Poly& g, std::uint64_t group_order, const std::vector<std::uint64_t>& factors,
                  const Poly& m, std::uint32_t p) {
    Poly t = g;
    trim(t);
    if (t.empty()) return false;
    if (poly_powmod(t, group_order, m, p) != Poly{1}) return false;
    for (auto r : factors)
        if (poly_powmod(t, group_order / r, m, p) == Poly{1}) return false;
    return true;
}

void validate_characteristic(std::uint32_t p, std::uint32_t e) {
    if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
    if (e < 1) throw Error("field degree must be at least 1");
    if (ipow(p, e) > (std::uint64_t{1} << 20)) throw Error("field order exceeds 2^20");
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
    Poly f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) return false;
    const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
    if (deg == 1) return true;
    // Make monic so poly_mod can divide by it.
    if (f.back() != 1) {
        std::uint32_t lead = f.back(), inv = 1;
        for (std::uint32_t k = 1; k < p; ++k)
            if (std::uint64_t{lead} * k % p == 1) inv = k;
        for (auto& c : f) c = static_cast<std::uint32_t>(std::uint64_t{c} * inv % p);
    }
    for (std::uint32_t d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly divisor = decode_digits(low, p, d);
            divisor.push_back(1);
            if (poly_mod(f, divisor, p).empty()) return false;
        }
    }
    return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t e) {
    validate_characteristic(p, e);
    const std::uint64_t count = ipow(p, e);
    for (std::uint64_t low = 0; low < count; ++low) {
        Poly f = decode_digits(low, p, e);
        f.push_back(1);
        if (is_irreducible(f, p)) return f;
    }
    throw Error("no irreducible polynomial found"); // unreachable for valid p, e
}

std::vector<std::uint32_t> primitive_elements(std::uint32_t p, std::uint32_t e, const Poly& modulus) {
    const std::uint64_t q = ipow(p, e);
    const auto factors = prime_factors(q - 1);
    std::vector<std::uint32_t> out;
    for (std::uint64_t x = 1; x < q; ++x)
        if (is_primitive(decode_digits(x, p, e), q - 1, factors, modulus, p))
            out.push_back(static_cast<std::uint32_t>(x));
    return out;
}

FieldTables build_field(const FieldConfig& config) {
    validate_characteristic(config.p, config.e);
    const std::uint32_t p = config.p, e = config.e;
    const auto q = static_cast<std::uint32_t>(ipow(p, e));

    Poly modulus;
    if (config.modulus) {
        modulus = *config.modulus;
        if (modulus.size() != e + 1 || modulus.back() != 1)
            throw Error("modulus must be monic of degree " + std::to_string(e));
        if (std::any_of(modulus.begin(), modulus.end(), [p](auto c) { return c >= p; }))
            throw Error("modulus coefficient out of range");
        if (!is_irreducible(modulus, p)) throw Error("modulus is reducible over GF(" + std::to_string(p) + ")");
    } else {
        modulus = smallest_irreducible(p, e);
    }

    const auto factors = prime_factors(q - 1);
    std::uint32_t generator = 0;
    if (config.generator) {
        generator = *config.generator;
        if (generator >= q || !is_primitive(decode_digits(generator, p, e), q - 1, factors, modulus, p))
            throw Error("generator " + std::to_string(generator) + " is not primitive");
    } else {
        for (std::uint32_t x = 1; x < q; ++x)
            if (is_primitive(decode_digits(x, p, e), q - 1, factors, modulus, p)) {
                generator = x;
                break;
            }
    }

    FieldTables t;
    t.p_ = p;
    t.e_ = e;
    t.q_ = q;
    t.modulus_ = modulus;
    t.generator_ = generator;
    t.antilog_.resize(q - 1);
    t.log_.assign(q, 0);
    const Poly g = decode_digits(generator, p, e);
    Poly cur{1};
    for (std::uint32_t k = 0; k + 1 < q; ++k) {
        Poly padded = cur;
        padded.resize(e, 0);
        const std::uint32_t x = encode_digits(padded, p);
        t.antilog_[k] = x;
        t.log_[x] = k;
        cur = poly_mulmod(cur, g, modulus, p);
    }
    t.neg_.resize(q);
    for (std::uint32_t x = 0; x < q; ++x) {
        Poly c = decode_digits(x, p, e);
        for (auto& d : c) d = (p - d) % p;
        t.neg_[x] = encode_digits(c, p);
    }
    return t;
}

std::uint32_t FieldTables::log(std::uint32_t x) const {
    if (x == 0 || x >= q_) throw Error("discrete log of zero or out-of-range element");
    return log_[x];
}

std::uint32_t FieldTables::add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return r;
}

std::uint32_t FieldTables::neg(std::uint32_t a) const { return neg_[a]; }

std::uint32_t FieldTables::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    const std::uint32_t k = (log_[a] + log_[b]) % (q_ - 1);
    return antilog_[k];
}

std::uint32_t FieldTables::inv(std::uint32_t a) const {
    if (a == 0) throw Error("inverse of zero");
    return antilog_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t FieldTables::pow(std::uint32_t a, std::uint64_t k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    return antilog_[(std::uint64_t{log_[a]} * (k % (q_ - 1))) % (q_ - 1)];
}

Poly FieldTables::decode(std::uint32_t x) const { return decode_digits(x, p_, e_); }

std::uint32_t FieldTables::encode(std::span<const std::uint32_t> coeffs) const {
    Poly c(coeffs.begin(), coeffs.end());
    c.resize(e_, 0);
    return encode_digits(c, p_);
}

CyclotomicPartition::CyclotomicPartition(std::shared_ptr<const FieldTables> tables, std::uint32_t order)
    : tables_(std::move(tables)), order_(order), class_size_(0) {
    const std::uint32_t m = tables_->q() - 1;
    if (order == 0 || m % order != 0)
        throw Error("class order " + std::to_string(order) + " does not divide " + std::to_string(m));
    class_size_ = m / order;
}

std::uint32_t CyclotomicPartition::class_of(std::uint32_t x) const { return tables_->log(x) % order_; }

std::vector<std::uint32_t> CyclotomicPartition::members(std::uint32_t i) const {
    assert(i < order_);
    std::vector<std::uint32_t> out;
    out.reserve(class_size_);
    for (std::uint32_t k = 0; k < class_size_; ++k) out.push_back(tables_->antilog(order_ * k + i));
    return out;
}

std::uint32_t negation_class_shift(const FieldTables& tables, std::uint32_t order) {
    if (tables.q() % 2 == 0) throw Error("negation class shift needs odd q");
    if (order == 0 || (tables.q() - 1) % order != 0) throw Error("class order does not divide q - 1");
    return ((tables.q() - 1) / 2) % order;
}

} // namespace skewhad
