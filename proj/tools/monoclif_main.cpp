#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "monoclif/bargmann.hpp"
#include "monoclif/verify.hpp"

namespace {

using namespace monoclif;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitPrecondition = 3;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const Json& j) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << text;
}

/// Table cache under MONOCLIF_TABLE_DIR; silently recomputes when the cache
/// is missing or unreadable.
ZonalTable cached_table(int m, int K, ZonalRoute route, VarRole first = VarRole::X,
                        VarRole second = VarRole::U) {
    const char* dir = std::getenv("MONOCLIF_TABLE_DIR");
    std::filesystem::path path;
    if (dir != nullptr && *dir != '\0') {
        std::string name = "zonal_m" + std::to_string(m) + "_K" + std::to_string(K) + "_" +
                           zonal_route_string(route);
        name += std::string("_") + role_char(first) + role_char(second) + ".json";
        path = std::filesystem::path(dir) / name;
        if (std::filesystem::exists(path)) {
            try {
                std::ifstream in(path);
                std::ostringstream os;
                os << in.rdbuf();
                ZonalTable t = zonal_table_from_json(parse_json_text(os.str()));
                if (t.m == m && t.K == K && t.route == route) return t;
            } catch (const std::exception&) {
                // fall through to recompute
            }
        }
    }
    ZonalTable t = build_zonal_table(m, K, route, first, second);
    if (!path.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        std::ofstream out(path);
        if (out) out << to_json(t).dump(2) << "\n";
    }
    return t;
}

int cmd_fischer(const std::string& in_path, const std::string& out_path) {
    const CliffPoly input = cliffpoly_from_json(parse_json_text(read_input(in_path)));
    const FischerParts parts = fischer_decompose(input);
    write_output(out_path, to_json(parts));
    return 0;
}

int cmd_bargmann(const std::string& in_path, const std::string& out_path) {
    const GaussianSection input = gaussian_section_from_json(parse_json_text(read_input(in_path)));
    const CliffPoly transform = segal_bargmann(input);
    write_output(out_path, to_json(transform));
    return 0;
}

BiPoly zonal_by_method(int k, int s, int m, ZonalRoute route) {
    switch (route) {
        case ZonalRoute::Fischer: return zonal_fischer(k, m)[s];
        case ZonalRoute::Recursion: {
            const BiPoly base = zonal_fischer(k - s, m)[0];
            return zonal_recursion(k, s, base, m);
        }
        case ZonalRoute::Gegenbauer:
            if (s != 0)
                throw std::invalid_argument("gegenbauer route only provides s = 0 entries");
            return zonal_gegenbauer(k, m);
    }
    throw std::invalid_argument("unknown zonal route");
}

int cmd_zonal(int k, int s, int m, int K, const std::string& method, bool check, bool table,
              const std::string& out_path) {
    if (k < 0 || s < 0 || s > k) throw std::invalid_argument("need 0 <= s <= k");
    const ZonalRoute route = zonal_route_from_string(method);
    if (table) {
        write_output(out_path, to_json(cached_table(m, K, route)));
        return 0;
    }
    if (check) {
        const BiPoly reference = zonal_by_method(k, s, m, ZonalRoute::Fischer);
        bool ok = reference == zonal_by_method(k, s, m, ZonalRoute::Recursion);
        std::string mismatch = ok ? "" : "recursion";
        if (ok && s == 0 && m >= 3) {
            ok = reference == zonal_by_method(k, s, m, ZonalRoute::Gegenbauer);
            if (!ok) mismatch = "gegenbauer";
        }
        Json out;
        out["k"] = k;
        out["s"] = s;
        out["m"] = m;
        out["equal"] = ok;
        if (!ok) out["mismatch_route"] = mismatch;
        write_output(out_path, out);
        if (!ok) {
            std::cerr << "zonal route mismatch at (k=" << k << ", s=" << s << ") against "
                      << mismatch << "\n";
            return kExitVerifyFailure;
        }
        return 0;
    }
    write_output(out_path, to_json(zonal_by_method(k, s, m, route)));
    return 0;
}

int cmd_verify(const std::string& suite, const std::vector<int>& ms, int max_degree, int kernel_K,
               std::uint64_t seed, const std::string& out_path) {
    VerifyOptions opts;
    if (!ms.empty()) opts.ms = ms;
    for (int m : opts.ms)
        if (m < 2 || m > 8) throw std::invalid_argument("--m values must lie in [2,8]");
    opts.max_degree = max_degree;
    opts.kernel_K = kernel_K;
    opts.seed = seed;
    const VerifyReport report = run_suite(suite, opts);
    write_output(out_path, to_json(report));
    if (!report.all_passed()) {
        std::cerr << report.failed() << " of " << report.cases.size() << " cases failed\n";
        return kExitVerifyFailure;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"monoclif: exact Segal-Bargmann/Fock computations for Clifford-algebra-valued "
                 "polynomials"};
    app.require_subcommand(1);

    std::string in_path, out_path;

    auto* fischer = app.add_subcommand("fischer", "Fischer-decompose a homogeneous polynomial "
                                                  "(CliffPoly JSON on stdin or --in)");
    fischer->add_option("--in", in_path, "input file (default stdin)");
    fischer->add_option("--out", out_path, "output file (default stdout)");

    auto* bargmann = app.add_subcommand(
        "bargmann", "Segal-Bargmann transform of a weight-1/4 section (GaussianSection JSON)");
    bargmann->add_option("--in", in_path, "input file (default stdin)");
    bargmann->add_option("--out", out_path, "output file (default stdout)");

    int zk = 0, zs = 0, zm = 3, zK = 6;
    std::string method = "fischer";
    bool zcheck = false, ztable = false;
    auto* zonal = app.add_subcommand("zonal", "compute zonal spherical monogenics Z_{k,s}");
    zonal->add_option("--k", zk, "degree k")->required();
    zonal->add_option("--m", zm, "dimension m (default 3)");
    zonal->add_option("--s", zs, "part index s (default 0)");
    zonal->add_option("--K", zK, "table cutoff for --table (default 6)");
    zonal->add_option("--method", method, "fischer | recursion | gegenbauer");
    zonal->add_flag("--check", zcheck, "compare all applicable methods, nonzero exit on mismatch");
    zonal->add_flag("--table", ztable, "emit the whole ZonalTable for (m, K, method)");
    zonal->add_option("--out", out_path, "output file (default stdout)");

    std::string suite = "all";
    std::vector<int> vms;
    int max_degree = 6, kernel_K = 6;
    std::uint64_t seed = 0;
    auto* verify = app.add_subcommand("verify", "run the identity verification suites");
    verify->add_option("--suite", suite, "core | hermite | bargmann | kernels | all");
    verify->add_option("--m", vms, "dimensions to test (default 2 3)");
    verify->add_option("--max-degree", max_degree, "degree cap for randomized cases (default 6)");
    verify->add_option("--K", kernel_K, "kernel truncation degree (default 6)");
    verify->add_option("--seed", seed, "seed for randomized cases (default 0)");
    verify->add_option("--out", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (fischer->parsed()) return cmd_fischer(in_path, out_path);
        if (bargmann->parsed()) return cmd_bargmann(in_path, out_path);
        if (zonal->parsed()) return cmd_zonal(zk, zs, zm, zK, method, zcheck, ztable, out_path);
        if (verify->parsed())
            return cmd_verify(suite, vms, max_degree, kernel_K, seed, out_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return 0;
}
