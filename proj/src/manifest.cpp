#include "skewhad/manifest.hpp"

#include <array>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

#include "skewhad/error.hpp"
#include "skewhad/io.hpp"

namespace skewhad {

std::string sha256_hex(std::span<const std::uint8_t> bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 computation failed");
    std::ostringstream s;
    for (unsigned i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return s.str();
}

std::string sha256_file(const std::filesystem::path& path) { return sha256_hex(read_bytes(path)); }

namespace {

std::string join(const std::vector<std::uint32_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

std::vector<std::uint32_t> split(const std::string& s, std::size_t lineno) {
    std::vector<std::uint32_t> out;
    if (s.empty()) return out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::exception&) {
            throw ParseError(lineno, 1, "bad integer list '" + s + "'");
        }
    }
    return out;
}

} // namespace

void write_manifest(std::ostream& out, const Manifest& m) {
    const auto& c = m.config;
    out << "# p=" << c.p << '\n'
        << "# e=" << c.e << '\n'
        << "# N=" << c.order << '\n'
        << "# modulus=" << join(c.modulus) << '\n'
        << "# generator=" << c.generator << '\n'
        << "# i0=" << join(c.i0) << '\n'
        << "# i1=" << join(c.i1) << '\n';
    for (const auto& e : m.entries) out << e.digest << "  " << e.path << '\n';
}

Manifest read_manifest(std::istream& in) {
    Manifest m;
    std::string line;
    std::size_t lineno = 0;
    unsigned seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line.rfind("# ", 0) == 0) {
            const auto eq = line.find('=');
            if (eq == std::string::npos) throw ParseError(lineno, 3, "expected key=value");
            const std::string key = line.substr(2, eq - 2), value = line.substr(eq + 1);
            auto scalar = [&] {
                const auto v = split(value, lineno);
                if (v.size() != 1) throw ParseError(lineno, eq + 2, "expected one integer");
                return v[0];
            };
            if (key == "p") m.config.p = scalar();
            else if (key == "e") m.config.e = scalar();
            else if (key == "N") m.config.order = scalar();
            else if (key == "modulus") m.config.modulus = split(value, lineno);
            else if (key == "generator") m.config.generator = scalar();
            else if (key == "i0") m.config.i0 = split(value, lineno);
            else if (key == "i1") m.config.i1 = split(value, lineno);
            else throw ParseError(lineno, 3, "unknown key '" + key + "'");
            ++seen;
            continue;
        }
        if (line.size() < 67 || line.compare(64, 2, "  ") != 0)
            throw ParseError(lineno, 1, "expected '<sha256>  <path>'");
        const std::string digest = line.substr(0, 64);
        const auto bad = digest.find_first_not_of("0123456789abcdef");
        if (bad != std::string::npos) throw ParseError(lineno, bad + 1, "digest is not lowercase hex");
        m.entries.push_back({digest, line.substr(66)});
    }
    if (seen < 7) throw ParseError(lineno, 1, "manifest config block incomplete");
    return m;
}

std::vector<ManifestEntry> digest_files(const std::filesystem::path& dir, const std::vector<std::string>& names) {
    std::vector<ManifestEntry> out;
    for (const auto& name : names) out.push_back({sha256_file(dir / name), name});
    return out;
}

std::vector<std::string> stale_entries(const std::filesystem::path& dir, const Manifest& m) {
    std::vector<std::string> stale;
    for (const auto& e : m.entries) {
        const auto path = dir / e.path;
        if (!std::filesystem::is_regular_file(path) || sha256_file(path) != e.digest) stale.push_back(e.path);
    }
    return stale;
}

} // namespace skewhad
