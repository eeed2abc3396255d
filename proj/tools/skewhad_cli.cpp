// skewhad: build and certify bordered skew-Hadamard matrices from cyclotomic blocks.
//
// Exit codes: 0 success, 1 usage or input error, 2 certificate failure.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "skewhad/autgroup.hpp"
#include "skewhad/error.hpp"
#include "skewhad/hadamard.hpp"
#include "skewhad/io.hpp"
#include "skewhad/manifest.hpp"
#include "skewhad/rank.hpp"
#include "skewhad/shdf.hpp"
#include "skewhad/sketch.hpp"

namespace fs = std::filesystem;
using namespace skewhad;

namespace {

constexpr int kUsage = 1;
constexpr int kCertFail = 2;

class CertificateFailure : public Error {
public:
    using Error::Error;
};

// "4-11", "0,2,5" or "0-3,7".
std::vector<std::uint32_t> parse_index_set(const std::string& text) {
    std::vector<std::uint32_t> out;
    if (text.empty()) return out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        const auto dash = part.find('-');
        try {
            if (dash == std::string::npos) {
                out.push_back(static_cast<std::uint32_t>(std::stoul(part)));
            } else {
                const auto lo = std::stoul(part.substr(0, dash)), hi = std::stoul(part.substr(dash + 1));
                if (lo > hi) throw std::invalid_argument(part);
                for (auto i = lo; i <= hi; ++i) out.push_back(static_cast<std::uint32_t>(i));
            }
        } catch (const std::logic_error&) {
            throw Error("bad index set '" + text + "'");
        }
    }
    return out;
}

Poly parse_poly(const std::string& text) {
    Poly out;
    for (auto v : parse_index_set(text)) out.push_back(v);
    return out;
}

Manifest load_manifest(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return read_manifest(in);
}

ShdfSearchResult rebuild(const BuildConfig& c) {
    return find_valid_generator({c.p, c.e, c.modulus, c.generator}, c.order, c.i0, c.i1);
}

struct BuildArgs {
    std::uint32_t p = 5, e = 4, order = 16;
    std::string i0 = "4-11", i1 = "0-7", poly, from_manifest;
    std::optional<std::uint32_t> gen;
    std::string out = "artifacts";
};

int cmd_build(const BuildArgs& a) {
    FieldConfig cfg{a.p, a.e, {}, a.gen};
    std::vector<std::uint32_t> i0 = parse_index_set(a.i0), i1 = parse_index_set(a.i1);
    std::uint32_t order = a.order;
    if (!a.from_manifest.empty()) {
        const auto m = load_manifest(a.from_manifest).config;
        cfg = {m.p, m.e, m.modulus, m.generator};
        order = m.order;
        i0 = m.i0;
        i1 = m.i1;
    } else if (!a.poly.empty()) {
        cfg.modulus = parse_poly(a.poly);
    }

    const fs::path dir = a.out;
    fs::create_directories(dir);
    std::ofstream trace(dir / "search_trace.txt");
    ShdfSearchResult r = [&] {
        try {
            return find_valid_generator(cfg, order, i0, i1, [&](const GeneratorCandidate& c) {
                trace << "candidate " << c.generator << ' ' << to_string(c.status) << '\n';
            });
        } catch (const GeneratorExhausted& e) {
            trace << "EXHAUSTED " << e.candidates_tried() << '\n';
            throw CertificateFailure(e.what());
        }
    }();
    trace.close();

    {
        std::ofstream log(dir / "shdf_log.txt");
        write_shdf_log(log, r.certificate);
    }
    const PmMatrix h = build_skew_hadamard(r.group, r.blocks);
    const Gate0Report g0 = gate0_verify(h);
    const std::string matrix_name = "matrix_" + std::to_string(h.order()) + ".txt";
    write_matrix_file(dir / matrix_name, h);

    Manifest m;
    m.config = {cfg.p, cfg.e, order, r.tables->modulus(), r.tables->generator(), r.blocks.i0, r.blocks.i1};
    m.entries = digest_files(dir, {matrix_name, "shdf_log.txt", "search_trace.txt"});
    {
        std::ofstream out(dir / "manifest.txt");
        write_manifest(out, m);
    }

    std::cout << "generator " << r.tables->generator() << " after " << r.trace.size() << " candidate(s)\n"
              << "SHDF PASS v=" << r.certificate.v << '\n'
              << "GATE0 " << (g0.pass() ? "PASS" : "FAIL") << " n=" << g0.n << '\n'
              << "wrote " << (dir / matrix_name).string() << '\n';
    return g0.pass() ? 0 : kCertFail;
}

int cmd_verify(const std::string& file, const std::string& which) {
    if (which == "gate0") {
        const auto r = gate0_verify(read_matrix_file(file));
        if (r.pass()) {
            std::cout << "GATE0 PASS n=" << r.n << '\n';
            return 0;
        }
        std::cout << "GATE0 FAIL n=" << r.n << " gram_ok=" << r.gram_ok << " skew_ok=" << r.skew_ok
                  << " max_offdiag_gram=" << r.max_offdiag_gram << '\n';
        return kCertFail;
    }
    // shdf: recheck the blocks recorded in a manifest.
    const auto c = load_manifest(file).config;
    auto tables = std::make_shared<const FieldTables>(build_field({c.p, c.e, c.modulus, c.generator}));
    const auto group = GroupSpec::field_additive(tables);
    const auto blocks = blocks_from_indices(group, CyclotomicPartition(tables, c.order), c.i0, c.i1);
    const auto cert = check_shdf(group, blocks);
    std::cout << "SHDF " << (cert.pass ? "PASS" : "FAIL") << " v=" << cert.v;
    if (!cert.pass) std::cout << ' ' << to_string(cert.status);
    std::cout << '\n';
    return cert.pass ? 0 : kCertFail;
}

int cmd_rank(const std::string& file, std::uint32_t field, bool tournament) {
    const PmMatrix h = read_matrix_file(file);
    RankReport r;
    if (tournament) {
        const auto nf = normalize_core_tournament(h);
        if (field == 2)
            r = rank_report_gf2(nf.tournament);
        else
            r = rank_report_gfp(nf.tournament.to_dense<int>(), field, RankObject::tournament);
    } else {
        r = rank_report_gfp(h.to_dense<int>(), field);
    }
    std::cout << r.line() << '\n';
    return 0;
}

int cmd_aut(const std::string& file, const std::string& manifest, const AuditOptions& opts, const std::string& log) {
    const PmMatrix h = read_matrix_file(file);
    const auto c = load_manifest(manifest).config;
    const auto tables = build_field({c.p, c.e, c.modulus, c.generator});
    const auto report = subgroup_audit(h, tables, c.order, opts);
    write_audit_log(std::cout, report);
    if (!log.empty()) {
        std::ofstream out(log);
        write_audit_log(out, report);
    }
    return report.pass ? 0 : kCertFail;
}

int cmd_sketch_encode(const std::string& matrix, std::size_t k, const std::string& in, const std::string& out) {
    const PmMatrix h = read_matrix_file(matrix);
    std::ifstream vin(in);
    if (!vin) throw Error("cannot open " + in);
    const auto x = read_vector(vin);
    const auto packet = encode(x, h, {h.order(), k, 8});
    write_bytes(out, packet.serialize());
    std::cout << "wrote " << packet.byte_size() << " bytes (raw " << 4 * h.order() << ")\n";
    return 0;
}

int cmd_sketch_decode(const std::string& matrix, const std::string& in, const std::string& out) {
    const PmMatrix h = read_matrix_file(matrix);
    const auto packet = SketchPacket::parse(read_bytes(in));
    std::ofstream vout(out);
    write_vector(vout, decode(packet, h));
    return 0;
}

int cmd_sketch_bytes(std::size_t n, std::size_t k, std::size_t vs) {
    const auto acc = byte_accounting({n, k, 8});
    std::cout << std::fixed << std::setprecision(2) << "raw " << acc.raw_bytes << " sketch " << acc.sketch_bytes
              << " ratio " << acc.ratio << " granularity_vs_" << vs << " +" << granularity_gain(n, vs) << "%\n";
    return 0;
}

int cmd_sketch_bench(const std::string& matrix, std::size_t k, int reps) {
    const PmMatrix h = read_matrix_file(matrix);
    Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(h.order(), -1.0, 1.0);
    std::size_t bytes = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) bytes += encode(x, h, {h.order(), k, 8}).byte_size();
    const auto dt = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << std::fixed << std::setprecision(3) << "encode n=" << h.order() << " k=" << k << " "
              << dt / reps << " ms/vector (" << bytes / reps << " bytes)\n";
    return 0;
}

int cmd_manifest(const std::string& dir, bool check) {
    if (check) {
        const auto m = load_manifest(fs::path(dir) / "manifest.txt");
        const auto stale = stale_entries(dir, m);
        for (const auto& s : stale) std::cout << "STALE " << s << '\n';
        std::cout << "MANIFEST " << (stale.empty() ? "PASS" : "FAIL") << " entries=" << m.entries.size() << '\n';
        return stale.empty() ? 0 : kCertFail;
    }
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().filename() != "manifest.txt")
            names.push_back(entry.path().filename().string());
    std::sort(names.begin(), names.end());
    for (const auto& e : digest_files(dir, names)) std::cout << e.digest << "  " << e.path << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Build and certify bordered skew-Hadamard matrices"};
    app.require_subcommand(1);

    BuildArgs b;
    auto* build = app.add_subcommand("build", "Search a generator, assemble, certify and write artifacts");
    build->add_option("--p", b.p, "Field characteristic");
    build->add_option("--e", b.e, "Field degree");
    build->add_option("--N", b.order, "Cyclotomic class order");
    build->add_option("--i0", b.i0, "Class indices of D0, e.g. 4-11");
    build->add_option("--i1", b.i1, "Class indices of D1, e.g. 0-7");
    build->add_option("--poly", b.poly, "Monic modulus coefficients c0,...,ce (default: smallest irreducible)");
    build->add_option("--gen", b.gen, "Generator encoding (default: first passing primitive element)");
    build->add_option("--from-manifest", b.from_manifest, "Rebuild from a manifest's recorded config");
    build->add_option("--out", b.out, "Output directory")->required();

    std::string vfile, which = "gate0";
    auto* verify = app.add_subcommand("verify", "Check Gate0 on a matrix file or the SHDF condition from a manifest");
    verify->add_option("file", vfile)->required()->check(CLI::ExistingFile);
    verify->add_option("--which", which)->check(CLI::IsMember({"gate0", "shdf"}));

    std::string rfile;
    std::uint32_t field = 2;
    bool tournament = false;
    auto* rank = app.add_subcommand("rank", "Rank of H, or of its tournament matrix, over GF(p)");
    rank->add_option("file", rfile)->required()->check(CLI::ExistingFile);
    rank->add_option("--field", field, "Prime p");
    rank->add_flag("--tournament", tournament, "Use the tournament matrix of the normalized core");

    std::string afile, amanifest, alog;
    AuditOptions aopts;
    auto* aut = app.add_subcommand("aut", "Audit the affine automorphism subgroup");
    aut->add_option("file", afile)->required()->check(CLI::ExistingFile);
    aut->add_option("--manifest", amanifest)->required()->check(CLI::ExistingFile);
    aut->add_flag("--exhaustive", aopts.exhaustive, "Check every subgroup element");
    aut->add_option("--samples", aopts.samples, "Random composites to check");
    aut->add_option("--seed", aopts.seed);
    aut->add_option("--log", alog, "Also write the audit log here");

    auto* sketch = app.add_subcommand("sketch", "Hadamard sketch codec");
    sketch->require_subcommand(1);
    std::string smatrix, sin, sout;
    std::size_t sk = 300, sn = 1252, svs = 1024;
    int reps = 200;
    auto* enc = sketch->add_subcommand("encode", "Vector text file to packet");
    enc->add_option("--matrix", smatrix)->required()->check(CLI::ExistingFile);
    enc->add_option("--k", sk);
    enc->add_option("--in", sin)->required()->check(CLI::ExistingFile);
    enc->add_option("--out", sout)->required();
    auto* dec = sketch->add_subcommand("decode", "Packet to vector text file");
    dec->add_option("--matrix", smatrix)->required()->check(CLI::ExistingFile);
    dec->add_option("--in", sin)->required()->check(CLI::ExistingFile);
    dec->add_option("--out", sout)->required();
    auto* bytes = sketch->add_subcommand("bytes", "Byte accounting");
    bytes->add_option("--n", sn);
    bytes->add_option("--k", sk);
    bytes->add_option("--vs", svs, "Baseline order for the granularity figure");
    auto* bench = sketch->add_subcommand("bench", "Time encode on one vector");
    bench->add_option("--matrix", smatrix)->required()->check(CLI::ExistingFile);
    bench->add_option("--k", sk);
    bench->add_option("--reps", reps);

    std::string mdir;
    bool mcheck = false;
    auto* manifest = app.add_subcommand("manifest", "Print SHA-256 lines for a directory, or check its manifest.txt");
    manifest->add_option("dir", mdir)->required()->check(CLI::ExistingDirectory);
    manifest->add_flag("--check", mcheck);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*build) return cmd_build(b);
        if (*verify) return cmd_verify(vfile, which);
        if (*rank) return cmd_rank(rfile, field, tournament);
        if (*aut) return cmd_aut(afile, amanifest, aopts, alog);
        if (*enc) return cmd_sketch_encode(smatrix, sk, sin, sout);
        if (*dec) return cmd_sketch_decode(smatrix, sin, sout);
        if (*bytes) return cmd_sketch_bytes(sn, sk, svs);
        if (*bench) return cmd_sketch_bench(smatrix, sk, reps);
        if (*manifest) return cmd_manifest(mdir, mcheck);
    } catch (const CertificateFailure& e) {
        std::cerr << "certificate failure: " << e.what() << '\n';
        return kCertFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
