// Command-line front end: znx <subcommand> ...

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "znx/construction.hpp"
#include "znx/errors.hpp"
#include "znx/factorization.hpp"
#include "znx/pipeline.hpp"
#include "znx/presentation.hpp"
#include "znx/scx_io.hpp"
#include "znx/sg.hpp"
#include "znx/sparsity.hpp"
#include "znx/tietze.hpp"

namespace {

using namespace znx;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

void emit(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw InvalidInput("cannot write " + path);
    f << text;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open " + path);
    return f;
}

int cmd_build_w(int n, const std::string& out) {
    const auto w = build_w(n);
    emit(out, to_scx(w.complex));
    if (out != "-") {
        std::ostringstream labels;
        write_labels(labels, w.labels);
        emit(out + ".labels", labels.str());
    }
    std::cerr << "W_" << n << ": " << w.complex.vertex_count() << " vertices, " << w.complex.count(1) << " edges, "
              << w.complex.count(2) << " triangles\n";
    return kOk;
}

int cmd_build_x(int m, std::uint64_t seed, const std::string& out, const std::string& spurs) {
    const auto built = build_x_full(m, seed);
    emit(out, to_scx(built.x));
    if (!spurs.empty()) {
        std::ostringstream s;
        write_spurs(s, built.spurs);
        emit(spurs, s.str());
    }
    std::cerr << "X_" << m << ": " << built.x.vertex_count() << " vertices from W_" << m << " with "
              << built.w.complex.vertex_count() << " vertices and " << built.spurs.size() << " spurs\n";
    return kOk;
}

int cmd_verify(const std::string& file, int expect_rank) {
    const auto c = read_scx_file(file);
    const auto violations = validate(c);
    for (const auto& v : violations) std::cout << "violation: " << v.message << "\n";
    if (!violations.empty()) return kCheckFailed;
    std::cout << "vertices " << c.vertex_count() << ", edges " << c.count(1) << ", triangles " << c.count(2)
              << ", euler characteristic " << euler_characteristic(c) << "\n";
    bool ok = true;
    for (int k = 0; k <= std::max(2, c.dimension()); ++k) {
        const auto h = homology(c, k);
        std::cout << "H" << k << " = " << h.to_string() << "\n";
        if (expect_rank >= 0) {
            if (k == 0 && !(h == HomologyGroup{1, {}})) {
                std::cout << "FAIL: complex is not connected\n";
                ok = false;
            }
            if (k == 1 && !(h == HomologyGroup{expect_rank, {}})) {
                std::cout << "FAIL: expected H1 = Z^" << expect_rank << "\n";
                ok = false;
            }
        }
    }
    if (expect_rank >= 0) std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kOk : kCheckFailed;
}

int cmd_homology(const std::string& file, int dim) {
    const auto c = read_scx_file(file);
    std::cout << homology(c, dim).to_string() << "\n";
    return kOk;
}

int cmd_extract(const std::string& file, int basepoint, const std::string& out) {
    const auto c = read_scx_file(file);
    const auto p = extract_presentation(c, basepoint);
    emit(out, to_json(p));
    std::cerr << p.generator_count() << " generators, " << p.relation_count() << " relations\n";
    return kOk;
}

int cmd_orth(int size, std::uint64_t seed, const std::string& out) {
    const auto pair = orthogonal_pair(size, seed);
    std::ostringstream s;
    write_pair(s, pair);
    emit(out, s.str());
    return kOk;
}

int cmd_reduce(const std::string& file, const std::vector<std::string>& passes, const std::string& out) {
    auto p = read_presentation_file(file);
    auto phi = abelian_images(p);
    std::cout << "input: " << p.generator_count() << " generators, " << p.relation_count()
              << " relations, abelianization Z^" << phi.rank << "\n";
    for (const auto& pass : passes) {
        if (pass == "minimize") {
            auto rw = minimize(p, phi);
            for (const auto& step : rw.trace) std::cout << "  " << step << "\n";
            p = std::move(rw.presentation);
            phi = std::move(rw.phi);
            std::cout << "minimize: " << p.generator_count() << " generators, " << p.relation_count()
                      << " relations\n";
        } else if (pass == "sparse") {
            const auto sparse = maximal_sparse_subset(p, phi);
            std::cout << "maximal sparse subset: " << sparse.size() << " of " << p.relation_count() << " relations\n";
            const auto collection = critical_collection(p, phi, sparse);
            std::cout << "critical collection: " << collection.size() << " sets\n";
            for (const auto& set : collection) {
                std::cout << " ";
                for (GeneratorId g : set) std::cout << " " << p.generators()[static_cast<std::size_t>(g)];
                std::cout << "\n";
            }
        } else {
            throw InvalidInput("unknown pass '" + pass + "' (expected minimize or sparse)");
        }
    }
    if (!out.empty()) emit(out, to_json(p));
    return kOk;
}

int cmd_sg_check(const std::string& file, const std::string& delta, bool linear) {
    auto in = open_input(file);
    const auto points = read_points_json(in);
    const Rational d = parse_rational(delta);
    AffineConfig config;
    if (linear) {
        const auto proj = projectivize(points);
        std::cout << "normal " << to_string(proj.normal) << "\n";
        config = proj.image;
    } else {
        config = to_affine(points);
    }
    const auto rep = is_delta_sg(config, d);
    std::cout << "points " << config.points.size() << ", special lines " << rep.lines.size() << ", required "
              << to_string(rep.required) << "\n";
    for (std::size_t i = 0; i < rep.coverage.size(); ++i)
        std::cout << "  point " << i << ": " << rep.coverage[i] << (Rational(static_cast<long>(rep.coverage[i])) < rep.required ? "  (short)" : "")
                  << "\n";
    if (!config.points.empty()) std::cout << "affine dimension " << affine_dimension(config) << "\n";
    std::cout << (rep.holds ? "PASS" : "FAIL") << ": " << to_string(d) << "-SG configuration\n";
    return rep.holds ? kOk : kCheckFailed;
}

int cmd_pipeline(const std::string& file, const std::string& c) {
    const auto p = read_presentation_file(file);
    try {
        const auto rep = run_lower(p, parse_rational(c));
        std::cout << rep.to_text();
        return rep.ok() ? kOk : kCheckFailed;
    } catch (const StageFailure& e) {
        std::cout << "stage " << e.stage() << " failed: " << e.what() << "\n";
        return kCheckFailed;
    }
}

int cmd_upper(int m, std::uint64_t seed, const std::string& outdir) {
    const auto rep = run_upper(m, outdir, seed);
    std::cout << rep.to_text();
    return rep.ok() ? kOk : kCheckFailed;
}

int cmd_bounds(long n) {
    std::cout << report_bounds(n).to_text();
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"znx: complexes and presentations of free abelian groups"};
    app.require_subcommand(1);
    std::function<int()> action;

    int n = 0, m = 0, size = 0, dim = 0, basepoint = 0, expect_rank = -1;
    long bound_n = 0;
    std::uint64_t seed = 0;
    std::string out, file, delta, c = "24", spurs, outdir;
    std::vector<std::string> passes;
    bool linear = false;

    auto* bw = app.add_subcommand("build-w", "write the complex W_n");
    bw->add_option("--n", n, "number of loops")->required();
    bw->add_option("-o,--output", out, "output .scx file ('-' for stdout)")->required();
    bw->callback([&] { action = [&] { return cmd_build_w(n, out); }; });

    auto* bx = app.add_subcommand("build-x", "write the collapsed complex X_m");
    bx->add_option("--m", m, "rank")->required();
    bx->add_option("--seed", seed, "factorization search seed");
    bx->add_option("--spurs", spurs, "also write the spur list here");
    bx->add_option("-o,--output", out, "output .scx file ('-' for stdout)")->required();
    bx->callback([&] { action = [&] { return cmd_build_x(m, seed, out, spurs); }; });

    auto* vf = app.add_subcommand("verify", "validate a complex and print its homology");
    vf->add_option("file", file, "input .scx")->required();
    vf->add_option("--expect-rank", expect_rank, "require connectivity and H1 = Z^R");
    vf->callback([&] { action = [&] { return cmd_verify(file, expect_rank); }; });

    auto* hm = app.add_subcommand("homology", "print one homology group");
    hm->add_option("file", file, "input .scx")->required();
    hm->add_option("--dim", dim, "degree")->required()->check(CLI::NonNegativeNumber);
    hm->callback([&] { action = [&] { return cmd_homology(file, dim); }; });

    auto* ex = app.add_subcommand("extract", "write the edge-path presentation of a complex");
    ex->add_option("file", file, "input .scx")->required();
    ex->add_option("--basepoint", basepoint, "base vertex");
    ex->add_option("-o,--output", out, "output .json ('-' for stdout)")->required();
    ex->callback([&] { action = [&] { return cmd_extract(file, basepoint, out); }; });

    auto* ot = app.add_subcommand("orth", "write a pair of orthogonal 1-factorizations of K_size");
    ot->add_option("--size", size, "even number of points")->required();
    ot->add_option("--seed", seed, "search seed");
    ot->add_option("-o,--output", out, "output file ('-' for stdout)")->required();
    ot->callback([&] { action = [&] { return cmd_orth(size, seed, out); }; });

    auto* rd = app.add_subcommand("reduce", "apply rewriting passes to a presentation");
    rd->add_option("file", file, "presentation .json")->required();
    rd->add_option("--passes", passes, "minimize and/or sparse, comma separated")->delimiter(',')->required();
    rd->add_option("-o,--output", out, "write the rewritten presentation");
    rd->callback([&] { action = [&] { return cmd_reduce(file, passes, out); }; });

    auto* sg = app.add_subcommand("sg-check", "test the delta-SG property of a point set");
    sg->add_option("file", file, "points .json")->required();
    sg->add_option("--delta", delta, "fraction P/Q")->required();
    sg->add_flag("--linear", linear, "projectivize first (points taken as directions)");
    sg->callback([&] { action = [&] { return cmd_sg_check(file, delta, linear); }; });

    auto* pl = app.add_subcommand("pipeline", "run the lower-bound reduction chain");
    pl->add_option("file", file, "presentation .json")->required();
    pl->add_option("--c", c, "constant c (rational)");
    pl->callback([&] { action = [&] { return cmd_pipeline(file, c); }; });

    auto* up = app.add_subcommand("upper", "build and certify W_m and X_m");
    up->add_option("--m", m, "rank")->required();
    up->add_option("--seed", seed, "factorization search seed");
    up->add_option("--outdir", outdir, "directory for w.scx, w.labels, spurs.txt, x.scx");
    up->callback([&] { action = [&] { return cmd_upper(m, seed, outdir); }; });

    auto* bd = app.add_subcommand("bounds", "least vertex counts allowed by the counting bounds");
    bd->add_option("--n", bound_n, "rank")->required();
    bd->callback([&] { action = [&] { return cmd_bounds(bound_n); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return action();
    } catch (const NotFreeAbelianRank& e) {
        std::cout << "FAIL: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const PreconditionFailed& e) {
        std::cout << "FAIL: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
