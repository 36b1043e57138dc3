// cateig: homology, cones and eigenvalue certificates for finite free complexes.

#include "cateig/errors.hpp"
#include "cateig/io.hpp"
#include "cateig/suites.hpp"

#include "CLI11.hpp"

#include <cctype>
#include <iostream>

using namespace cateig;

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kStructural = 2;
constexpr int kUsage = 64;

std::string hname(Convention c, int k) { return (c == Convention::Chain ? "H_" : "H^") + std::to_string(k); }

int cmd_homology(const std::string& path) {
    const ChainComplex f = read_any_complex(read_json_file(path));
    const HomologyResult h = homology(f);
    std::map<int, const DegreeHomology*> shown;
    for (auto& [n, d] : h.degrees) shown[user_degree(f.convention(), n)] = &d;
    for (auto& [k, d] : shown) {
        std::cout << hname(f.convention(), k) << ": rank " << d->betti;
        if (!d->torsion.empty()) {
            std::cout << " torsion";
            for (auto& t : d->torsion) std::cout << ' ' << t.get_str();
        }
        std::cout << '\n';
    }
    return kOk;
}

int cmd_decompose(const std::string& path) {
    const ChainComplex f = read_any_complex(read_json_file(path));
    std::cout << dump_json(write_decomposition(decompose(f), f.convention()));
    return kOk;
}

struct Pair {
    ChainComplex lambda;
    GradedMap alpha;
};

Pair read_pair(const ChainComplex& f, const std::string& lpath, const std::string& apath) {
    ChainComplex lambda = read_complex(read_json_file(lpath));
    GradedMap alpha = read_graded_map(read_json_file(apath), lambda, f);
    return {std::move(lambda), std::move(alpha)};
}

int cmd_cone(const std::string& fpath, const std::string& lpath, const std::string& apath) {
    const ChainComplex f = read_any_complex(read_json_file(fpath));
    const Pair p = read_pair(f, lpath, apath);
    std::cout << dump_json(write_cone(mapping_cone(p.alpha)));
    return kOk;
}

int cmd_certify(const std::string& fpath, const std::string& lpath, const std::string& apath) {
    const ChainComplex f = read_any_complex(read_json_file(fpath));
    EigenCertificate cert;
    if (lpath.empty()) {
        cert = certify_homology_eigenvalue(f);
    } else {
        const Pair p = read_pair(f, lpath, apath);
        cert = decide_eigenvalue(f, p.lambda, p.alpha);
    }
    std::cout << dump_json(write_certificate(cert));
    if (cert.verdict == Verdict::Eigenvalue) return kOk;
    std::cerr << "NotEigenvalue: " << to_string(cert.failure->kind) << '(' << cert.failure->degree << ")\n";
    return kRejected;
}

/// A cone file or a plain complex file.
ChainComplex read_space(const Json& j) {
    if (j.is_object() && j.contains("layout")) return read_cone(j).underlying;
    return read_any_complex(j);
}

int cmd_verify(const std::string& xpath, const std::string& psipath, const std::string& fpath, const std::string& gpath) {
    const ChainComplex x = read_space(read_json_file(xpath));
    const Homotopy psi = read_homotopy(read_json_file(psipath), x, x);
    GradedMap f = GradedMap::zero(x, x), g = GradedMap::identity(x);
    if (!fpath.empty()) f = read_graded_map(read_json_file(fpath), x, x);
    if (!gpath.empty()) g = read_graded_map(read_json_file(gpath), x, x);
    const HomotopyReport rep = verify_homotopy(x, f, g, psi);
    if (rep) {
        std::cout << "ok\n";
        return kOk;
    }
    std::cout << "fail: degree " << user_degree(x.convention(), rep.degree) << " entry (" << rep.row << ',' << rep.col
              << ") expected " << rep.expected.to_string() << " got " << rep.actual.to_string() << ": " << rep.message
              << '\n';
    return kRejected;
}

Ring parse_ring_flag(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "q") return Ring::rationals();
    if (s == "z") return Ring::integers();
    if (s.size() > 1 && s[0] == 'f') return Ring::prime_field(std::stoull(s.substr(1)));
    throw CLI::ValidationError("--ring", "expected f2, f<p>, q or z");
}

void print_suite(const SuiteResult& r) {
    std::cout << r.name << ": " << r.passed << '/' << r.trials << " passed in " << r.seconds << " s\n";
    for (auto& [k, v] : r.counters) std::cout << "  " << k << ": " << v << '\n';
    for (auto& f : r.failures) std::cout << "  FAIL " << f << '\n';
}

int cmd_proptest(const std::string& ring_flag, std::size_t max_dim, std::size_t trials, std::uint64_t seed) {
    const Ring ring = parse_ring_flag(ring_flag);
    std::vector<SuiteResult> results;
    if (ring.is_field()) {
        results.push_back(run_forward_suite({ring}, seed, trials));
        results.push_back(run_biconditional_suite(ring, seed, trials, max_dim));
        results.push_back(run_contractibility_suite(ring, seed, trials, max_dim));
        if (ring == Ring::prime_field(2)) results.push_back(run_oracle_homology_suite(seed, trials, std::min<std::size_t>(max_dim, 12)));
    }
    results.push_back(run_snf_suite(seed, trials));
    bool ok = true;
    for (auto& r : results) {
        print_suite(r);
        ok = ok && r.ok();
    }
    return ok ? kOk : kRejected;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homology, mapping cones and eigenvalue certificates over Q, F_p and Z"};
    app.require_subcommand(1);

    std::string a, b, c, lambda, alpha, fmap, gmap;
    auto* hom = app.add_subcommand("homology", "Per-degree ranks and torsion");
    hom->add_option("complex", a)->required()->check(CLI::ExistingFile);

    auto* dec = app.add_subcommand("decompose", "Splitting F_n = K_n + ker delta_n + Im d_{n-1} as JSON");
    dec->add_option("complex", a)->required()->check(CLI::ExistingFile);

    auto* cone = app.add_subcommand("cone", "Mapping cone of alpha with its block layout");
    cone->add_option("complex", a)->required()->check(CLI::ExistingFile);
    cone->add_option("lambda", b)->required()->check(CLI::ExistingFile);
    cone->add_option("alpha", c)->required()->check(CLI::ExistingFile);

    auto* cert = app.add_subcommand("certify", "Eigenvalue certificate (canonical alpha by default)");
    cert->add_option("complex", a)->required()->check(CLI::ExistingFile);
    auto* lopt = cert->add_option("--lambda", lambda, "Scalar complex")->check(CLI::ExistingFile);
    auto* aopt = cert->add_option("--alpha", alpha, "Chain map lambda -> F")->check(CLI::ExistingFile);
    lopt->needs(aopt);
    aopt->needs(lopt);

    auto* ver = app.add_subcommand("verify-homotopy", "Check f - g = d Psi + Psi d (default f = 0, g = id)");
    ver->add_option("complex", a)->required()->check(CLI::ExistingFile);
    ver->add_option("homotopy", b)->required()->check(CLI::ExistingFile);
    ver->add_option("--f", fmap)->check(CLI::ExistingFile);
    ver->add_option("--g", gmap)->check(CLI::ExistingFile);

    std::string ring = "f2";
    std::size_t max_dim = 8, trials = 200;
    std::uint64_t seed = 1;
    auto* prop = app.add_subcommand("proptest", "Randomized checks against the brute-force oracles");
    prop->add_option("--ring", ring)->capture_default_str();
    prop->add_option("--max-dim", max_dim)->capture_default_str();
    prop->add_option("--trials", trials)->capture_default_str();
    prop->add_option("--seed", seed)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*hom) return cmd_homology(a);
        if (*dec) return cmd_decompose(a);
        if (*cone) return cmd_cone(a, b, c);
        if (*cert) return cmd_certify(a, lambda, alpha);
        if (*ver) return cmd_verify(a, b, fmap, gmap);
        if (*prop) return cmd_proptest(ring, max_dim, trials, seed);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error";
        if (e.line()) std::cerr << " at " << e.line() << ':' << e.column();
        std::cerr << ": " << e.what() << '\n';
        return kStructural;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kStructural;
    }
    return kUsage;
}
