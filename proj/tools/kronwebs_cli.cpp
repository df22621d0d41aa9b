// Command line front end: reads JSON inputs, runs one analysis, writes a sorted JSON report.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "acceptance_suite.hpp"
#include "kronwebs/io.hpp"
#include "kronwebs/webtools.hpp"

using namespace kronwebs;
using io::json;

namespace {

struct Options {
    std::string input, output, format = "json", algebra, c1;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
};

json conventions() {
    return {{"relation_kernel", "Ker_(l1:l2) = ker(l1*P1 - l2*P2) = {k : (l1*k, l2*k) in W}"},
            {"pair_kernel", "ker(l1*h1 + l2*h2)"},
            {"points", "(1:l) finite, (0:1) infinity"},
            {"eigenvalue", "Jordan block at mu when h1 - mu*h2 degenerates; infinity when h2 degenerates"},
            {"web_degree", "deg(p) - 1; dimension identity dim g = 2*sum(deg - 1) + rank"}};
}

std::size_t worker_count(std::size_t jobs) {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("KRONWEBS_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min<std::size_t>(n, static_cast<std::size_t>(cap));
    }
    return std::max<std::size_t>(1, std::min(n, jobs));
}

// Runs f(0..count-1) on up to KRONWEBS_THREADS workers; results stay in index order.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t count, F f) {
    std::vector<T> out(count);
    std::vector<std::exception_ptr> errors(count);
    const std::size_t workers = worker_count(count);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) {
                try {
                    out[i] = f(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

Vec random_point(Rng& rng, std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = rng.rational();
    return v;
}

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

std::string blocks_str(const std::vector<BlockSpec>& bs) {
    std::string s;
    for (const auto& b : bs) s += (s.empty() ? "" : " + ") + b.str();
    return s.empty() ? "(empty)" : s;
}

json filtration_json(const Filtration& f) {
    json steps = json::array();
    for (const auto& s : f.steps) steps.push_back(io::to_json(s));
    return {{"ambient_dim", f.ambient_dim}, {"steps", steps}};
}

json blocks_json(const std::vector<RelationBlock>& blocks) {
    json out = json::array();
    for (const auto& b : blocks)
        out.push_back({{"dim", b.space.dim()}, {"chain", io::to_json(b.chain)}, {"relation", io::to_json(b.relation)}});
    return out;
}

LieTable load_table(const Options& o) {
    LieTable t;
    if (!o.algebra.empty())
        t = builtin_table(o.algebra);
    else if (!o.input.empty())
        t = io::table_from_json(io::read_file(o.input));
    else
        throw InvalidArgument("give --algebra or --input");
    if (!o.c1.empty()) {
        Vec c1;
        std::stringstream ss(o.c1);
        for (std::string tok; std::getline(ss, tok, ',');) c1.push_back(parse_scalar(tok));
        if (c1.size() != t.algebra.n()) throw InvalidArgument("--c1 needs " + std::to_string(t.algebra.n()) + " coordinates");
        t.c1 = c1;
    }
    return t;
}

const LieTable& require_c1(const LieTable& t) {
    if (t.c1.empty()) throw SchemaError("the algebra has no c1; pass --c1");
    return t;
}

struct Result {
    json report;
    std::string text;
    bool ok = true;
};

Result pair_decompose(const Options& o) {
    const SkewPair p = io::pair_from_json(io::read_file(o.input));
    const Decomposition d = decompose(p);
    std::vector<SkewPair> parts;
    for (const auto& b : d.blocks) parts.push_back(canonical_pair(b));
    const bool verified = conjugate(p, d.basis) == pair_direct_sum(parts);
    const MicroKronecker mk = is_micro_kronecker(p);
    json profile = json::array();
    for (const auto& e : corank_profile(p).exceptional)
        profile.push_back({{"factor", io::to_json(e.factor)}, {"corank", e.corank}});
    Result r;
    r.report = {{"decomposition", io::to_json(d)},
                {"verified", verified},
                {"micro_kronecker", mk.flag},
                {"rank", mk.rank},
                {"exceptional", profile}};
    r.text = "blocks: " + blocks_str(d.blocks) + "\nmicro-Kronecker: " + (mk.flag ? "yes" : "no") +
             ", rank " + std::to_string(mk.rank) + "\nconjugation check: " + (verified ? "ok" : "FAILED") + "\n";
    r.ok = verified;
    return r;
}

Result pair_action(const Options& o) {
    const SkewPair p = io::pair_from_json(io::read_file(o.input));
    const MicroKronecker mk = is_micro_kronecker(p);
    const Subspace a = action_subspace(p);
    Rng rng(o.seed);
    const std::size_t checks = o.samples ? o.samples : 10;
    bool isotropic = true;
    for (std::size_t s = 0; s < checks; ++s) {
        const Mat h = p.h1.scaled(rng.rational()) + p.h2.scaled(rng.rational());
        isotropic = isotropic && (a.basis().transpose() * h * a.basis()).is_zero();
    }
    const LinearRelation ind = induced_relation(p);
    const auto blocks = split_into_blocks(ind);
    const bool dim_ok = 2 * a.dim() == p.n + mk.rank;
    Result r;
    r.report = {{"action_subspace", io::to_json(a)},
                {"rank", mk.rank},
                {"dimension_check", dim_ok},
                {"isotropic_samples", checks},
                {"isotropic", isotropic},
                {"induced_relation", io::to_json(ind)},
                {"induced_blocks", blocks_json(blocks)}};
    std::string dims;
    for (const auto& b : blocks) dims += (dims.empty() ? "" : ", ") + std::to_string(b.space.dim());
    r.text = "action subspace dim " + std::to_string(a.dim()) + " (expected " + std::to_string((p.n + mk.rank) / 2) +
             ")\nisotropic at " + std::to_string(checks) + " pencil values: " + (isotropic ? "yes" : "NO") +
             "\ninduced relation blocks: " + dims + "\n";
    r.ok = dim_ok && isotropic;
    return r;
}

Result relation_reconstruct(const Options& o) {
    const json j = io::read_file(o.input);
    Result r;
    if (j.contains("samples")) {
        const std::size_t n = io::field(j, "dim_v").get<std::size_t>();
        std::vector<KernelSample> data;
        for (const auto& s : io::field(j, "samples")) {
            std::vector<Vec> vs;
            for (const auto& v : io::field(s, "kernel")) vs.push_back(io::vec_from_json(v));
            data.push_back({io::point_from_json(io::field(s, "point")), Subspace::span(n, vs)});
        }
        const LinearRelation rel = reconstruct_from_kernels(n, data);
        r.report = {{"relation", io::to_json(rel)}, {"points", data.size()}};
        r.text = "reconstructed relation of dimension " + std::to_string(rel.w.dim()) + " from " +
                 std::to_string(data.size()) + " kernels\n";
        return r;
    }
    // a relation: sample its kernels at seeded points and rebuild it
    const LinearRelation src = io::relation_from_json(j);
    const Pencil pencil = equations_pencil(src);
    const std::size_t count = o.samples ? o.samples : src.dim_v + 1;
    Rng rng(o.seed);
    std::vector<KernelSample> data;
    json points = json::array();
    while (data.size() < count) {
        const ProjPoint pt = ProjPoint::finite(rng.rational());
        if (std::any_of(data.begin(), data.end(), [&](const KernelSample& s) { return s.point == pt; })) continue;
        data.push_back({pt, ker_point(pencil, pt)});
        points.push_back({{"point", io::to_json(pt)}, {"kernel", io::to_json(data.back().kernel)}});
    }
    const LinearRelation rel = reconstruct_from_kernels(src.dim_v, data);
    const bool equal = rel == src;
    r.report = {{"relation", io::to_json(rel)}, {"samples", points}, {"equals_source", equal}};
    r.text = "reconstructed from " + std::to_string(count) + " seeded kernels: " +
             (equal ? "equals the source" : "strictly smaller than the source") + "\n";
    return r;
}

Result relation_analyze(const Options& o) {
    const json j = io::read_file(o.input);
    const bool is_pencil = j.contains("p1");
    const Pencil p = is_pencil ? io::pencil_from_json(j) : equations_pencil(io::relation_from_json(j));
    const KroneckerCheck k = is_kronecker(p);
    Result r;
    r.report = {{"kronecker", k.kronecker},
                {"rank", k.rank},
                {"degenerate", k.degenerate},
                {"certificate", io::to_json(k.certificate)}};
    r.text = std::string("Kronecker: ") + (k.kronecker ? "yes" : "no") + ", generic kernel dim " + std::to_string(k.rank) +
             "\ncertificate: " + k.certificate.str() + "\n";
    if (o.samples) {
        Rng rng(o.seed);
        std::vector<ProjPoint> pts;
        while (pts.size() < o.samples) {
            const ProjPoint pt = ProjPoint::finite(rng.rational());
            if (std::find(pts.begin(), pts.end(), pt) == pts.end()) pts.push_back(pt);
        }
        const SpectralCurve c = spectral_curve(p, pts);
        json ks = json::array();
        for (std::size_t i = 0; i < pts.size(); ++i)
            ks.push_back({{"point", io::to_json(pts[i])}, {"kernel", io::to_json(c.kernels[i])}});
        r.report["kernels"] = ks;
        r.report["jumps"] = c.jumps;
    }
    if (k.kronecker) {
        const LinearRelation rel = is_pencil ? pencil_to_relation(p) : io::relation_from_json(j);
        const Filtration f = isotypic_filtration(rel);
        const auto blocks = split_into_blocks(rel);
        r.report["filtration"] = filtration_json(f);
        r.report["blocks"] = blocks_json(blocks);
        std::string dims;
        for (const auto& b : blocks) dims += (dims.empty() ? "" : ", ") + std::to_string(b.space.dim());
        r.text += "blocks: " + dims + "\n";
    }
    return r;
}

Result lie_validate(const Options& o) {
    const LieTable t = load_table(o);
    const AlgebraRank ar = algebra_rank(t.algebra);
    Result r;
    r.report = {{"name", t.name},
                {"n", t.algebra.n()},
                {"jacobi", true},
                {"rank", ar.rank},
                {"rank_certified", ar.certified},
                {"invariants", t.invariants.size()}};
    r.text = t.name + ": dim " + std::to_string(t.algebra.n()) + ", Jacobi ok, rank " + std::to_string(ar.rank) +
             (ar.certified ? "" : " (sampled)") + "\n";
    if (!t.c1.empty()) {
        const bool regular = is_regular(t.algebra, t.c1, ar.rank);
        const JacobiCompat jc = jacobi_compat_check(frozen_matrix(t.algebra, t.c1), t.algebra);
        r.report["c1"] = io::to_json(t.c1);
        r.report["c1_regular"] = regular;
        r.report["translation_compatible"] = jc.ok;
        r.text += "c1 " + vec_str(t.c1) + (regular ? " regular" : " irregular") + ", translation pencil " +
                  (jc.ok ? "compatible" : "NOT compatible") + "\n";
        r.ok = jc.ok;
    }
    return r;
}

Result lie_scan(const Options& o) {
    const LieTable t = require_c1(load_table(o));
    const std::size_t n = t.algebra.n(), count = o.samples ? o.samples : 10;
    const AlgebraRank ar = algebra_rank(t.algebra);
    Rng rng(o.seed);
    std::vector<Vec> pts;
    for (std::size_t s = 0; s < count; ++s) pts.push_back(random_point(rng, n));
    struct Row {
        bool compatible = false;
        ScanPoint sp;
    };
    const auto rows = parallel_map<Row>(count, [&](std::size_t i) {
        return Row{compatible(t.algebra, t.c1, pts[i], ar.rank), scan_point(t.algebra, t.c1, pts[i])};
    });
    json points = json::array();
    std::size_t good = 0, compat = 0;
    for (const auto& row : rows) {
        json blocks = json::array();
        for (const auto& b : row.sp.blocks) blocks.push_back(io::to_json(b));
        points.push_back({{"beta", io::to_json(row.sp.beta)},
                          {"compatible", row.compatible},
                          {"micro_kronecker", row.sp.micro_kronecker},
                          {"rank", row.sp.rank},
                          {"blocks", blocks}});
        if (row.compatible) {
            ++compat;
            if (row.sp.micro_kronecker && row.sp.rank == ar.rank) ++good;
        }
    }
    Result r;
    r.report = {{"algebra", t.name},
                {"c1", io::to_json(t.c1)},
                {"rank", ar.rank},
                {"rank_certified", ar.certified},
                {"seed", o.seed},
                {"points", points},
                {"compatible_points", compat},
                {"micro_kronecker_compatible", good}};
    std::ostringstream text;
    text << t.name << ": rank " << ar.rank << ", " << good << "/" << compat
         << " compatible points micro-Kronecker of that rank (" << count - compat << " on the degenerate locus)\n";
    for (const auto& row : rows)
        text << "  " << (row.compatible ? "   " : "[x]") << " rank " << row.sp.rank << "  " << blocks_str(row.sp.blocks) << "\n";
    r.text = text.str();
    return r;
}

Result lie_web(const Options& o) {
    const LieTable t = require_c1(load_table(o));
    const std::size_t count = o.samples ? o.samples : 5;
    const std::size_t rank = algebra_rank(t.algebra).rank;
    Rng rng(o.seed);
    std::vector<Vec> pts;
    std::size_t draws = 0;
    while (pts.size() < count) {
        if (++draws > 100 * count) throw InvalidArgument("no compatible points found for this c1");
        Vec b = random_point(rng, t.algebra.n());
        if (compatible(t.algebra, t.c1, b, rank)) pts.push_back(std::move(b));
    }
    const CasimirWebReport rep = casimir_web(t.algebra, t.c1, t.invariants, pts);
    json coeffs = json::array();
    for (const auto& row : rep.coefficients) {
        json cs = json::array();
        for (const auto& a : row) cs.push_back({{"poly", io::to_json(a)}, {"text", a.str(t.names)}});
        coeffs.push_back(cs);
    }
    json points = json::array();
    std::size_t good = 0;
    for (const auto& pt : rep.points) {
        points.push_back({{"beta", io::to_json(pt.beta)}, {"jacobian_rank", pt.jacobian_rank}, {"expected", pt.expected}});
        if (pt.expected) ++good;
    }
    Result r;
    r.report = {{"algebra", t.name},
                {"dim", rep.dim},
                {"rank", rep.rank},
                {"identity_web", rep.identity_web},
                {"identity_literal", rep.identity_literal},
                {"identity_holds", rep.identity_holds},
                {"coefficients", coeffs},
                {"leaf_equations_verified", rep.leaf_equations_verified},
                {"leaf_equations_affine", rep.leaf_equations_affine},
                {"points", points},
                {"seed", o.seed}};
    std::ostringstream text;
    text << t.name << ": dim " << rep.dim << " = 2*sum(deg - 1) + rank = " << rep.identity_web << "\n";
    for (std::size_t i = 0; i < rep.coefficients.size(); ++i)
        for (std::size_t k = 0; k < rep.coefficients[i].size(); ++k)
            text << "  a_" << i << k << " = " << rep.coefficients[i][k].str(t.names) << "\n";
    text << "Jacobian rank (dim + rank)/2 at " << good << "/" << rep.points.size() << " points\n";
    r.text = text.str();
    r.ok = rep.leaf_equations_verified && rep.leaf_equations_affine && good == rep.points.size();
    return r;
}

Result selftest(const Options& o) {
    const auto results = acceptance::run_all(o.seed, &std::cerr);
    std::ostringstream text;
    acceptance::print_table(text, results);
    Result r;
    r.report = acceptance::report(results, o.seed);
    r.text = text.str();
    r.ok = acceptance::all_passed(results);
    return r;
}

void emit(const Options& o, const std::string& command, Result r) {
    r.report["command"] = command;
    r.report["conventions"] = conventions();
    r.report["ok"] = r.ok;
    const std::string body = r.report.dump(2) + "\n";
    if (!o.output.empty()) {
        std::ofstream f(o.output, std::ios::binary);
        if (!f) throw InvalidArgument("cannot write " + o.output);
        f << body;
        std::cout << r.text;
    } else {
        std::cout << (o.format == "text" ? r.text : body);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kronecker decompositions of skew pairs, linear relations and Lie-Poisson pencils"};
    app.require_subcommand(1);
    Options o;

    struct Command {
        const char* name;
        const char* help;
        Result (*run)(const Options&);
        bool needs_input;
    };
    const std::vector<Command> commands{
        {"pair-decompose", "block decomposition of a skew pair", pair_decompose, true},
        {"pair-action", "action subspace and induced relation of a micro-Kronecker pair", pair_action, true},
        {"relation-reconstruct", "rebuild a relation from kernels at seeded points", relation_reconstruct, true},
        {"relation-analyze", "Kronecker certificate, isotypic filtration and block split", relation_analyze, true},
        {"lie-validate", "check a Lie algebra and its translation pencil", lie_validate, false},
        {"lie-scan", "micro-Kronecker scan of the translation pencil at seeded points", lie_scan, false},
        {"lie-web", "Casimir web chart from translated invariants", lie_web, false},
        {"selftest", "run the acceptance suite", selftest, false},
    };
    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        auto* in = sub->add_option("--input", o.input, "input JSON file");
        if (c.needs_input) in->required()->check(CLI::ExistingFile);
        sub->add_option("--output", o.output, "write the JSON report here");
        sub->add_option("--seed", o.seed, "seed for sampled points")->capture_default_str();
        sub->add_option("--samples", o.samples, "number of sampled points");
        sub->add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
        if (std::string(c.name).rfind("lie-", 0) == 0) {
            sub->add_option("--algebra", o.algebra, "built-in table: sl2, sl3, gl2, gl3, so3");
            sub->add_option("--c1", o.c1, "comma separated c1 coordinates");
        }
        subs.emplace_back(sub, &c);
    }
    CLI11_PARSE(app, argc, argv);

    for (const auto& [sub, c] : subs) {
        if (!sub->parsed()) continue;
        try {
            Result r = c->run(o);
            const bool ok = r.ok;
            emit(o, c->name, std::move(r));
            return ok ? 0 : 1;
        } catch (const ParseError& e) {
            std::cerr << "parse error: " << e.what() << "\n";
        } catch (const SchemaError& e) {
            std::cerr << "schema error: " << e.what() << "\n";
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 2;
    }
    return 2;
}
