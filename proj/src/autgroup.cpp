#include "skewhad/autgroup.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "skewhad/error.hpp"

namespace skewhad {

AffineMap make_affine(const FieldTables& tables, std::uint32_t order, std::uint32_t u, std::uint32_t a) {
    if (u == 0 || u >= tables.q() || a >= tables.q()) throw Error("affine map coefficient out of range");
    if (order == 0 || (tables.q() - 1) % order != 0) throw Error("class order does not divide q - 1");
    if (tables.log(u) % order != 0) throw Error("multiplier " + std::to_string(u) + " is not in C_0");
    return {u, a};
}

AffineMap compose_affine(const FieldTables& tables, const AffineMap& m1, const AffineMap& m2) {
    return {tables.mul(m1.u, m2.u), tables.add(tables.mul(m1.u, m2.a), m1.a)};
}

Permutation induced_permutation(const FieldTables& tables, const AffineMap& map) {
    const std::uint32_t q = tables.q();
    auto index_of = [&](std::uint32_t x) { return x == 0 ? 0u : tables.log(x) + 1; };
    auto element_at = [&](std::uint32_t i) { return i == 0 ? 0u : tables.antilog(i - 1); };

    Permutation sigma(2 * std::size_t{q} + 2);
    sigma[0] = 0;
    sigma[1] = 1;
    for (std::uint32_t i = 0; i < q; ++i) {
        const std::uint32_t image = index_of(tables.add(tables.mul(map.u, element_at(i)), map.a));
        sigma[2 + i] = 2 + image;
        sigma[2 + q + i] = 2 + q + image;
    }
    return sigma;
}

namespace {

// Byte-per-entry copy of H; random column access is cheaper than on packed bits.
class SignTable {
public:
    explicit SignTable(const PmMatrix& h) : n_(h.order()), entries_(n_ * n_) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) entries_[i * n_ + j] = h.bits().test(i, j);
    }

    bool invariant_under(const Permutation& sigma) const {
        if (sigma.size() != n_) throw Error("permutation size does not match matrix order");
        for (std::size_t i = 0; i < n_; ++i) {
            const std::uint8_t* row = &entries_[i * n_];
            const std::uint8_t* image = &entries_[std::size_t{sigma[i]} * n_];
            for (std::size_t j = 0; j < n_; ++j)
                if (image[sigma[j]] != row[j]) return false;
        }
        return true;
    }

private:
    std::size_t n_;
    std::vector<std::uint8_t> entries_;
};

std::string describe(const AffineMap& m) {
    std::ostringstream s;
    s << "u=" << m.u << " a=" << m.a;
    return s.str();
}

bool has_exact_order(const FieldTables& tables, std::uint32_t u, std::uint32_t ord) {
    if (tables.pow(u, ord) != 1) return false;
    for (std::uint32_t d = 1; d < ord; ++d)
        if (ord % d == 0 && tables.pow(u, d) == 1) return false;
    return true;
}

} // namespace

bool verify_automorphism(const PmMatrix& h, const Permutation& sigma) {
    if (sigma.size() != h.order()) throw Error("permutation size does not match matrix order");
    return SignTable(h).invariant_under(sigma);
}

AuditReport subgroup_audit(const PmMatrix& h, const FieldTables& tables, std::uint32_t order,
                           const AuditOptions& options) {
    const std::uint32_t q = tables.q();
    if (h.order() != 2 * std::size_t{q} + 2) throw Error("matrix order does not match 2q + 2");
    if (order == 0 || (q - 1) % order != 0) throw Error("class order does not divide q - 1");
    const std::uint32_t class_size = (q - 1) / order;

    AuditReport report;
    report.claimed_order = std::uint64_t{class_size} * q;
    const SignTable table(h);
    bool ok = true;
    auto check = [&](const AffineMap& m) {
        ++report.checked;
        return table.invariant_under(induced_permutation(tables, m));
    };
    auto verdict = [](bool b) { return b ? "PASS" : "FAIL"; };

    std::vector<AffineMap> generators;
    const AffineMap multiplier{tables.antilog(order % (q - 1)), 0};
    {
        const bool order_ok = has_exact_order(tables, multiplier.u, class_size);
        const bool aut_ok = check(multiplier);
        ok = ok && order_ok && aut_ok;
        report.lines.push_back("generator multiplier " + describe(multiplier) + " order=" +
                               std::to_string(class_size) + " " + verdict(order_ok && aut_ok));
        generators.push_back(multiplier);
    }
    std::uint32_t basis = 1;
    for (std::uint32_t k = 0; k < tables.e(); ++k, basis *= tables.p()) {
        const AffineMap translation{1, basis};
        std::uint32_t acc = 0;
        for (std::uint32_t t = 0; t < tables.p(); ++t) acc = tables.add(acc, basis);
        const bool order_ok = acc == 0;
        const bool aut_ok = check(translation);
        ok = ok && order_ok && aut_ok;
        report.lines.push_back("generator translation " + describe(translation) + " order=" +
                               std::to_string(tables.p()) + " " + verdict(order_ok && aut_ok));
        generators.push_back(translation);
    }

    if (options.exhaustive) {
        const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
        std::atomic<bool> all_ok{true};
        std::atomic<std::uint64_t> next{0};
        const std::uint64_t total = report.claimed_order;
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&] {
                    for (std::uint64_t idx = next++; idx < total && all_ok; idx = next++) {
                        const AffineMap m{tables.antilog(static_cast<std::uint32_t>(order * (idx / q))),
                                          static_cast<std::uint32_t>(idx % q)};
                        if (!table.invariant_under(induced_permutation(tables, m))) all_ok = false;
                    }
                });
        }
        report.checked += total;
        ok = ok && all_ok;
        report.lines.push_back("exhaustive " + std::to_string(total) + " elements " + verdict(all_ok));
    } else {
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<std::size_t> pick(0, generators.size() - 1);
        std::uniform_int_distribution<int> length(1, 8);
        for (std::size_t s = 0; s < options.samples; ++s) {
            AffineMap m{1, 0};
            for (int l = length(rng); l > 0; --l) m = compose_affine(tables, generators[pick(rng)], m);
            const bool aut_ok = check(m);
            ok = ok && aut_ok;
            report.lines.push_back("sample " + std::to_string(s) + " " + describe(m) + " " + verdict(aut_ok));
        }
    }
    report.pass = ok;
    return report;
}

void write_audit_log(std::ostream& out, const AuditReport& report) {
    for (const auto& l : report.lines) out << l << '\n';
    if (report.pass)
        out << "PASS order>=" << report.claimed_order << '\n';
    else
        out << "FAIL\n";
}

} // namespace skewhad
