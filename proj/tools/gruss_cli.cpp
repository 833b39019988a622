// gruss: evaluate Gruss-type bounds on a dataset and report gap/bound ratios.
//
// Exit codes: 0 success, 2 parse error, 3 validation error, 4 bound violation, 5 internal error.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gruss_io.hpp"

using namespace gruss;
using io::InputDocument;
using io::Report;

namespace {

enum Exit { kOk = 0, kParse = 2, kValidation = 3, kViolation = 4, kInternal = 5 };

struct Options {
    std::string input;
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 0;
    double tol_rel = 1e-9;
    double tol_abs = 1e-12;
    bool normalize = false;
    double holder_p = 2.0;
    double omega = 0.0;
    std::vector<std::size_t> m;
    bool all_m = false;
    bool mu = false;
    std::vector<std::string> z;
    bool roots = false;
    std::vector<std::string> bounds;
    std::size_t n = 2;
    std::size_t d = 1;
    std::string norm = "L2";
    double norm_p = 2.0;
    std::string field = "COMPLEX";
    std::size_t budget = 1000;
    std::size_t restarts = 8;
};

// Failures that mean "this bound's hypotheses do not hold here" rather than bad input.
bool is_hypothesis_failure(ErrorCode c) {
    switch (c) {
        case ErrorCode::EnclosureViolation:
        case ErrorCode::NotReal:
        case ErrorCode::TooShort:
        case ErrorCode::SingularOmega:
        case ErrorCode::ZEqualsOne:
        case ErrorCode::NoKnownWitness: return true;
        default: return false;
    }
}

void attempt(Report& r, const std::string& id, const std::string& context, const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        if (!is_hypothesis_failure(e.code())) throw;
        r.skip(id, context, e.what());
    }
}

std::string describe(const Disk& d) {
    return "disk center " + detail::describe_scalar(d.center) + " radius " + detail::format_double(d.radius);
}

std::string describe(const Segment& s) {
    return "segment a=" + detail::describe_scalar(s.a) + " A=" + detail::describe_scalar(s.A);
}

std::string describe(const Interval& iv) {
    return "interval [" + detail::format_double(iv.m) + ", " + detail::format_double(iv.M) + "]";
}

std::string describe(const Ball& b) { return "ball radius " + detail::format_double(b.radius); }

WeightVector weights_of(const InputDocument& doc, const Options& o) {
    if (doc.weights) return WeightVector::validate(*doc.weights, o.normalize);
    return WeightVector::uniform(doc.size());
}

// The sequence the transform and polynomial commands act on: vectors, else alpha as 1-D points.
VectorSeq points_of(const InputDocument& doc) {
    if (doc.vectors) return *doc.vectors;
    return VectorSeq::from_scalars(*doc.alpha);
}

void run_check(const InputDocument& doc, const Options& o, Report& r) {
    if (!doc.alpha) throw Error(ErrorCode::InvalidParameter, "check needs 'alpha' in the input");
    const ScalarSeq& alpha = *doc.alpha;
    const auto p = weights_of(doc, o);

    const Disk disk = doc.disk ? *doc.disk : enclose_scalars(alpha, EncloseMethod::MinDisk);
    const Segment seg = doc.segment ? *doc.segment : to_segment(disk);
    const std::string disk_ctx = describe(disk) + (doc.disk ? "" : " (min disk)");
    const std::string seg_ctx = describe(seg) + (doc.segment ? "" : " (from min disk)");

    if (doc.vectors) {
        const VectorSeq& x = *doc.vectors;
        attempt(r, std::string(bound_id::kScalarDisk), disk_ctx,
                [&] { r.add(bound_scalar_disk(alpha, x, p, disk), disk_ctx); });
        attempt(r, std::string(bound_id::kSegment), seg_ctx,
                [&] { r.add(bound_complex_segment(alpha, x, p, seg), seg_ctx); });
        if (doc.interval || is_real(alpha)) {
            const Interval iv = doc.interval ? *doc.interval : enclose_real(alpha);
            const std::string ctx = describe(iv) + (doc.interval ? "" : " (min/max)");
            attempt(r, std::string(bound_id::kInterval), ctx,
                    [&] { r.add(bound_real_interval(alpha, x, p, iv), ctx); });
        } else {
            r.skip(std::string(bound_id::kInterval), "", "NOT_REAL: alpha has nonzero imaginary parts");
        }
        const Ball ball = doc.ball ? *doc.ball : enclose_vectors(x);
        const std::string ball_ctx = describe(ball) + (doc.ball ? "" : " (mean center)");
        attempt(r, std::string(bound_id::kVectorBall), ball_ctx,
                [&] { r.add(bound_vector_ball_cbs(alpha, x, p, ball), ball_ctx); });

        const auto h = HolderPair::conjugate(o.holder_p);
        const std::string hctx = "holder p=" + detail::format_double(h.p());
        attempt(r, "classical", hctx, [&] { r.add(classical_bounds(alpha, x, p, h), hctx); });
        if (p.is_uniform()) {
            attempt(r, "uniform", hctx, [&] { r.add(classical_bounds_uniform(alpha, x, h), hctx); });
        } else {
            r.skip("uniform", hctx, "weights are not uniform");
        }
    } else {
        for (auto id : {bound_id::kScalarDisk, bound_id::kSegment, bound_id::kInterval, bound_id::kVectorBall}) {
            r.skip(std::string(id), "", "input has no vectors");
        }
    }

    attempt(r, std::string(bound_id::kVariance), seg_ctx, [&] { r.add(variance_bound(alpha, p, seg), seg_ctx); });
    attempt(r, std::string(bound_id::kPseudoVariance), seg_ctx,
            [&] { r.add(pseudo_variance_bound(alpha, p, seg), seg_ctx); });

    if (doc.beta) {
        const Segment seg_b = doc.beta_segment ? *doc.beta_segment : to_segment(enclose_scalars(*doc.beta));
        attempt(r, "chain", seg_ctx + "; beta " + describe(seg_b), [&] {
            const GrussChain c = gruss_chain(alpha, *doc.beta, p, seg, seg_b);
            for (std::size_t k = 0; k + 1 < c.terms.size(); ++k) {
                BoundReport b;
                b.gap = c.terms[k];
                b.add("chain", c.terms[k + 1]);
                r.add(b, "t" + std::to_string(k) + " <= t" + std::to_string(k + 1));
            }
        });
    }
}

// Dispatches a bound over whichever enclosure applies to this input.
template <typename F>
BoundReport over_enclosure(const InputDocument& doc, const VectorSeq& x, std::string& ctx, F&& f) {
    if (doc.ball) {
        ctx = describe(*doc.ball);
        return f(*doc.ball);
    }
    if (x.dimension() == 1 && doc.interval) {
        ctx = describe(*doc.interval);
        return f(*doc.interval);
    }
    if (x.dimension() == 1 && (doc.segment || doc.disk)) {
        const Segment s = doc.segment ? *doc.segment : to_segment(*doc.disk);
        ctx = describe(s);
        return f(s);
    }
    const Ball b = enclose_vectors(x);
    ctx = describe(b) + " (mean center)";
    return f(b);
}

std::vector<std::size_t> orders(const Options& o, std::size_t n) {
    if (o.all_m) {
        std::vector<std::size_t> all(n);
        for (std::size_t k = 0; k < n; ++k) all[k] = k + 1;
        return all;
    }
    if (o.m.empty()) throw Error(ErrorCode::InvalidParameter, "give --m or --all-m");
    return o.m;
}

void run_dft(const InputDocument& doc, const Options& o, Report& r) {
    const VectorSeq x = points_of(doc);
    for (std::size_t m : orders(o, x.size())) {
        const auto params = FourierParams::make(o.omega, m, x.size());
        const std::string label = "m=" + std::to_string(m) + ", omega=" + detail::format_double(o.omega);
        attempt(r, "dft", label, [&] {
            std::string ctx;
            const auto b = over_enclosure(doc, x, ctx, [&](const auto& e) { return dft_bound(x, params, e); });
            r.add(b, label + "; " + ctx);
        });
    }
}

void run_mellin(const InputDocument& doc, const Options& o, Report& r) {
    const VectorSeq x = points_of(doc);
    for (std::size_t m : orders(o, x.size())) {
        const auto params = MellinParams::make(m, x.size());
        const std::string label = "m=" + std::to_string(m);
        attempt(r, "mellin", label, [&] {
            std::string ctx;
            const auto b = over_enclosure(doc, x, ctx, [&](const auto& e) { return mellin_bound(x, params, e); });
            r.add(b, label + "; " + ctx);
        });
    }
    if (o.mu) {
        attempt(r, "mu", "", [&] {
            std::string ctx;
            const auto b = over_enclosure(doc, x, ctx, [&](const auto& e) { return mu_bound(x, e); });
            r.add(b, ctx);
        });
    }
}

Scalar parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    try {
        std::size_t used = 0;
        const double re = std::stod(s.substr(0, comma), &used);
        if (used != (comma == std::string::npos ? s.size() : comma)) throw std::invalid_argument(s);
        if (comma == std::string::npos) return Scalar(re);
        const std::string tail = s.substr(comma + 1);
        const double im = std::stod(tail, &used);
        if (used != tail.size()) throw std::invalid_argument(s);
        return Scalar(re, im);
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::ParseError, "--z expects 're' or 're,im', got '" + s + "'");
    }
}

void run_poly(const InputDocument& doc, const Options& o, Report& r) {
    const VectorPolynomial P(points_of(doc));
    if (o.z.empty() && !o.roots) throw Error(ErrorCode::InvalidParameter, "give --z and/or --roots");
    for (const auto& zs : o.z) {
        const Scalar z = parse_complex(zs);
        const std::string label = "z=" + detail::describe_scalar(z);
        attempt(r, "poly", label, [&] {
            std::string ctx;
            const auto b = over_enclosure(doc, P.coefficients(), ctx, [&](const auto& e) { return poly_bound(P, z, e); });
            r.add(b, label + "; " + ctx);
        });
    }
    if (o.roots) {
        attempt(r, "roots", "", [&] {
            std::string ctx;
            std::vector<BoundReport> reps;
            (void)over_enclosure(doc, P.coefficients(), ctx, [&](const auto& e) {
                reps = roots_bound(P, e);
                return BoundReport{};
            });
            for (std::size_t k = 0; k < reps.size(); ++k) r.add(reps[k], "k=" + std::to_string(k + 1) + "; " + ctx);
        });
    }
}

void run_sharpness(const Options& o, Report& r) {
    SharpnessConfig cfg;
    cfg.bounds.clear();
    for (const auto& b : o.bounds) {
        if (b == "all") {
            cfg.bounds.assign(kAllSharpBounds.begin(), kAllSharpBounds.end());
        } else {
            cfg.bounds.push_back(parse_sharp_bound(b));
        }
    }
    if (o.bounds.empty()) cfg.bounds.assign(kWitnessedBounds.begin(), kWitnessedBounds.end());
    cfg.n = o.n;
    cfg.d = o.d;
    cfg.norm = parse_norm_family(o.norm);
    cfg.norm_exponent = o.norm_p;
    cfg.field = io::detail::lower(o.field) == "real" ? ScalarField::Real : ScalarField::Complex;
    cfg.holder_p = o.holder_p;
    cfg.budget = o.budget;
    cfg.restarts = o.restarts;
    cfg.seed = o.seed;
    cfg.tol = r.tol;

    auto verdict_of = [&](double ratio, std::size_t violations) {
        if (violations > 0 || ratio > 1.0 + cfg.tol.rel) return Verdict::Violation;
        return ratio >= kAttainedThreshold ? Verdict::Attained : Verdict::Consistent;
    };
    const std::string ctx = "n=" + std::to_string(cfg.n) + ", d=" + std::to_string(cfg.d) + ", " +
                            std::string(to_string(cfg.norm)) + ", " + std::string(to_string(cfg.field));

    if (cfg.budget == 0) {
        // Witness evaluation only; no search.
        for (SharpBound b : cfg.bounds) {
            const auto pb = make_problem(cfg, b);
            attempt(r, std::string(to_string(b)), ctx, [&] {
                const auto w = analytic_witness(pb);
                double gap = 0, bound = 0;
                const double ratio = evaluate_ratio(pb, w.instance, &gap, &bound);
                io::Row row;
                row.id = std::string(to_string(b));
                row.context = ctx + ", witness";
                row.gap = gap;
                row.bound = bound;
                row.ratio = ratio;
                const Verdict v = verdict_of(ratio, holds(gap, bound, cfg.tol) ? 0 : 1);
                row.status = v == Verdict::Violation ? io::RowStatus::Violation : io::RowStatus::Ok;
                row.extra = {{"claimed_constant", claimed_constant(b)},
                             {"witness_ratio", ratio},
                             {"verdict", std::string(to_string(v))},
                             {"instance", io::json::parse(serialize_instance(w.instance))}};
                r.rows.push_back(std::move(row));
            });
        }
        return;
    }

    for (const auto& s : sharpness_report(cfg)) {
        const auto pb = make_problem(cfg, s.bound);
        double gap = 0, bound = 0;
        (void)evaluate_ratio(pb, s.search.best_instance, &gap, &bound);
        io::Row row;
        row.id = std::string(to_string(s.bound));
        row.context = ctx;
        row.gap = gap;
        row.bound = bound;
        row.ratio = s.searched_ratio;
        row.status = s.verdict == Verdict::Violation ? io::RowStatus::Violation : io::RowStatus::Ok;
        row.extra = {{"claimed_constant", s.claimed_constant},
                     {"witness_ratio", s.witness_ratio ? io::json(*s.witness_ratio) : io::json(nullptr)},
                     {"searched_ratio", s.searched_ratio},
                     {"iterations", s.search.iterations},
                     {"best_restart", s.search.best_restart},
                     {"search_violations", s.search.violations},
                     {"verdict", std::string(to_string(s.verdict))},
                     {"instance", io::json::parse(s.search.best_inputs)}};
        r.rows.push_back(std::move(row));
    }
}

int run_validate(const Options& o) {
    io::json j;
    try {
        j = io::json::parse(io::read_file(o.input));
    } catch (const io::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    const auto problems = io::validate_report(j);
    for (const auto& p : problems) std::cerr << "invalid report: " << p << "\n";
    if (!problems.empty()) return kValidation;
    std::cout << "valid report: " << j["rows"].size() << " rows, verdict " << j["verdict"].get<std::string>() << "\n";
    return kOk;
}

void emit(const Report& r, const Options& o) {
    const std::string text = o.format == "csv" ? io::render_csv(r) : io::render_json(r);
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidParameter, "cannot write '" + o.out + "'");
    f << text;
}

// Command line without the output path, so reports do not depend on where they are written.
std::vector<std::string> echo_args(int argc, char** argv) {
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--out") {
            ++i;
            continue;
        }
        if (a.rfind("--out=", 0) == 0) continue;
        out.push_back(a);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Discrete Gruss-type bounds: gaps, certified bounds and sharpness checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    auto add_globals = [&](CLI::App* sub, bool needs_input) {
        auto* in = sub->add_option("--input,-i", o.input, "Input dataset (JSON, or CSV with weight,alpha,x)");
        if (needs_input) in->required()->check(CLI::ExistingFile);
        sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out,-o", o.out, "Write the report here instead of stdout");
        sub->add_option("--seed", o.seed, "Random seed");
        sub->add_option("--tol-rel", o.tol_rel, "Relative slack in gap <= bound (1 + rel) + abs");
        sub->add_option("--tol-abs", o.tol_abs, "Absolute slack")->check(CLI::NonNegativeNumber);
    };

    auto* check = app.add_subcommand("check", "Gap and every applicable bound for one dataset");
    add_globals(check, true);
    check->add_flag("--normalize", o.normalize, "Rescale weights to sum to one");
    check->add_option("--holder-p", o.holder_p, "Hoelder exponent p > 1 for the forward-difference bound");

    auto* dft_cmd = app.add_subcommand("dft", "Fourier transform against its mean surrogate");
    add_globals(dft_cmd, true);
    dft_cmd->add_option("--omega", o.omega, "Frequency omega")->required();
    dft_cmd->add_option("--m", o.m, "Order m (repeatable)");
    dft_cmd->add_flag("--all-m", o.all_m, "Every m = 1..n");

    auto* mellin_cmd = app.add_subcommand("mellin", "Mellin transform against its mean surrogate");
    add_globals(mellin_cmd, true);
    mellin_cmd->add_option("--m", o.m, "Order m (repeatable)");
    mellin_cmd->add_flag("--all-m", o.all_m, "Every m = 1..n");
    mellin_cmd->add_flag("--mu", o.mu, "Also report the first-moment bound");

    auto* poly_cmd = app.add_subcommand("poly", "Vector-coefficient polynomial bounds");
    add_globals(poly_cmd, true);
    poly_cmd->add_option("--z", o.z, "Evaluation point 're' or 're,im' (repeatable)");
    poly_cmd->add_flag("--roots", o.roots, "Bound at every nontrivial root of unity");

    auto* sharp = app.add_subcommand("sharpness", "Witness ratios and search for the largest gap/bound ratio");
    add_globals(sharp, false);
    sharp->add_option("--bound", o.bounds, "Bound id, or 'all' (repeatable; default: those with witnesses)");
    sharp->add_option("--n", o.n, "Sequence length")->check(CLI::PositiveNumber);
    sharp->add_option("--d", o.d, "Dimension")->check(CLI::PositiveNumber);
    sharp->add_option("--norm", o.norm, "L1, L2, LINF or LP");
    sharp->add_option("--p", o.norm_p, "LP exponent");
    sharp->add_option("--field", o.field, "REAL or COMPLEX");
    sharp->add_option("--holder-p", o.holder_p, "Hoelder exponent for the forward-difference bounds");
    sharp->add_option("--budget", o.budget, "Iterations per restart");
    sharp->add_option("--restarts", o.restarts, "Number of restarts")->check(CLI::PositiveNumber);

    auto* val = app.add_subcommand("validate", "Re-check a report produced by this tool");
    val->add_option("--input,-i", o.input, "Report file")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (val->parsed()) return run_validate(o);

        Report r;
        r.args = echo_args(argc, argv);
        r.seed = o.seed;
        r.tol = Tolerance{o.tol_rel, o.tol_abs};
        if (sharp->parsed()) {
            r.command = "sharpness";
            run_sharpness(o, r);
        } else {
            const InputDocument doc = io::load_input(o.input);
            r.input_digest = doc.digest;
            r.metadata = doc.metadata;
            if (check->parsed()) {
                r.command = "check";
                run_check(doc, o, r);
            } else if (dft_cmd->parsed()) {
                r.command = "dft";
                run_dft(doc, o, r);
            } else if (mellin_cmd->parsed()) {
                r.command = "mellin";
                run_mellin(doc, o, r);
            } else {
                r.command = "poly";
                run_poly(doc, o, r);
            }
        }
        emit(r, o);
        if (r.violated()) {
            std::cerr << "error: BOUND_VIOLATION: " << r.count(io::RowStatus::Violation) << " row(s) exceed their bound\n";
            return kViolation;
        }
        return kOk;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.code() == ErrorCode::ParseError) return kParse;
        if (e.code() == ErrorCode::Internal) return kInternal;
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: INTERNAL: " << e.what() << "\n";
        return kInternal;
    }
}
