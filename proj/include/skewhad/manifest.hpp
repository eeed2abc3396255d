#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "field.hpp"

namespace skewhad {

std::string sha256_hex(std::span<const std::uint8_t> bytes);
std::string sha256_file(const std::filesystem::path& path);

/// Everything needed to rebuild a matrix bit-exactly.
struct BuildConfig {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::uint32_t order = 0;  // N
    Poly modulus;
    std::uint32_t generator = 0;
    std::vector<std::uint32_t> i0;
    std::vector<std::uint32_t> i1;

    friend bool operator==(const BuildConfig&, const BuildConfig&) = default;
};

struct ManifestEntry {
    std::string digest;
    std::string path;
};

/// Config block ("# key=value" lines) followed by sha256sum-style "digest  path" lines.
struct Manifest {
    BuildConfig config;
    std::vector<ManifestEntry> entries;
};

void write_manifest(std::ostream& out, const Manifest& m);
Manifest read_manifest(std::istream& in);

/// Digests of the named files, relative to dir.
std::vector<ManifestEntry> digest_files(const std::filesystem::path& dir, const std::vector<std::string>& names);

/// Entries whose recorded digest differs from the file on disk (or that are missing).
std::vector<std::string> stale_entries(const std::filesystem::path& dir, const Manifest& m);

} // namespace skewhad
