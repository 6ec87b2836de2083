#include "walklt/cli.hpp"

#include "walklt/distribution.hpp"
#include "walklt/mixture_analysis.hpp"
#include "walklt/oracle.hpp"
#include "walklt/output.hpp"
#include "walklt/verification.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace walklt {

namespace {

using json = nlohmann::ordered_json;

// Invalid flag values; mapped to kExitUsage.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kFigureQs = {"0.40", "0.45", "0.50", "0.55"};

Probability parse_q(const std::string& text) {
    try {
        return Probability::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

WalkKind parse_walk(const std::string& text) {
    try {
        return parse_walk_kind(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

WalkParams make_params(WalkKind kind, int T, int s, const Probability& q) {
    WalkParams p{T, s, q};
    try {
        p.validate(kind);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return p;
}

// Writes to `path`, or to `fallback` when path is empty.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
        body(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    body(file);
}

std::string q_label(const Probability& q) { return q.is_exact() ? to_string(q.rational()) : q.decimal(); }

// ---------------------------------------------------------------------------
// joint
// ---------------------------------------------------------------------------

struct JointOptions {
    std::string walk = "rsrw";
    int T = 0;
    int s = 0;
    std::string q;
    std::string exact;
    std::string format = "csv";
    std::string out;
    std::string out_dir = ".";
    bool figure1 = false;
    bool figure3 = false;
    bool verify = false;
    int digits = 15;
};

// Closed form against the DP law and normalization. Returns problems found.
std::vector<std::string> cross_check(const JointPMF& pmf) {
    std::vector<std::string> problems;
    const auto dp = dp_joint(pmf.kind(), pmf.params(), false);
    if (pmf.is_exact()) {
        if (pmf.exact_total() != 1) {
            problems.push_back("total mass is " + to_string(pmf.exact_total()));
        }
    } else if (std::abs(pmf.total() - 1.0) > 1e-12) {
        problems.push_back("total mass is " + format_double(pmf.total(), 17));
    }
    std::map<Cell, std::pair<double, double>> cells;
    for (const auto& [c, e] : pmf.entries()) {
        cells[c].first = e.probability;
    }
    for (const auto& [c, e] : dp.entries()) {
        cells[c].second = e.probability;
    }
    for (const auto& [c, p] : cells) {
        const auto* a = pmf.find(c.r, c.l);
        const auto* b = dp.find(c.r, c.l);
        const bool exact_mismatch = pmf.is_exact() && (a == nullptr || b == nullptr || *a->exact != *b->exact);
        if (exact_mismatch || std::abs(p.first - p.second) > 1e-10) {
            std::ostringstream msg;
            msg << "cell (T=" << pmf.params().T << ",s=" << pmf.params().s << ",r=" << c.r << ",l=" << c.l
                << "): closed form " << format_double(p.first, 17) << " vs dp " << format_double(p.second, 17);
            problems.push_back(msg.str());
        }
    }
    return problems;
}

void write_pmf(const JointPMF& pmf, const std::string& format, int digits, std::ostream& os) {
    const auto records = to_records(pmf, digits);
    if (format == "json") {
        write_json(records, os);
    } else {
        write_csv(records, os);
    }
}

int run_joint(const JointOptions& o, std::ostream& out, std::ostream& err) {
    if (o.format != "csv" && o.format != "json") {
        throw UsageError("--format must be csv or json");
    }
    struct Job {
        WalkKind kind;
        WalkParams params;
        std::string path;
    };
    std::vector<Job> jobs;
    const auto preset_path = [&](const std::string& figure, WalkKind kind, int T, int s, const std::string& q) {
        return (std::filesystem::path(o.out_dir) / (figure + "_" + std::string(to_string(kind)) + "_T" +
                                                    std::to_string(T) + "_s" + std::to_string(s) + "_q" + q + "." +
                                                    o.format))
            .string();
    };
    if (o.figure1 || o.figure3) {
        std::filesystem::create_directories(o.out_dir);
        if (o.figure1) {
            for (const auto& q : kFigureQs) {
                jobs.push_back({WalkKind::reflected, WalkParams{80, 3, parse_q(q)},
                                preset_path("figure1", WalkKind::reflected, 80, 3, q)});
            }
        }
        if (o.figure3) {
            for (const auto kind : {WalkKind::reflected, WalkKind::simple}) {
                jobs.push_back({kind, WalkParams{160, 5, parse_q("0.45")}, preset_path("figure3", kind, 160, 5, "0.45")});
            }
        }
    } else {
        if (o.T < 1) {
            throw UsageError("--T is required and must be at least 1");
        }
        if (o.q.empty() && o.exact.empty()) {
            throw UsageError("one of --q or --exact is required");
        }
        const Probability q = parse_q(o.exact.empty() ? o.q : o.exact);
        if (!o.exact.empty() && !q.is_exact()) {
            throw UsageError("--exact expects a fraction a/b");
        }
        const auto kind = parse_walk(o.walk);
        jobs.push_back({kind, make_params(kind, o.T, o.s, q), o.out});
    }

    bool failed = false;
    for (const auto& job : jobs) {
        const auto pmf = joint_pmf(job.kind, job.params);
        emit(job.path, out, [&](std::ostream& os) { write_pmf(pmf, o.format, o.digits, os); });
        if (!job.path.empty()) {
            out << job.path << ": " << pmf.size() << " cells, total mass " << format_double(pmf.total(), 17)
                << '\n';
        }
        if (o.verify) {
            for (const auto& problem : cross_check(pmf)) {
                err << "verify failed: " << problem << '\n';
                failed = true;
            }
        }
    }
    return failed ? kExitCheckFailed : kExitOk;
}

// ---------------------------------------------------------------------------
// condexp
// ---------------------------------------------------------------------------

struct CondexpOptions {
    std::string walk = "rsrw";
    int T = 0;
    int s = 0;
    std::vector<std::string> qs;
    std::string given = "r";
    std::string format = "csv";
    std::string out;
    std::string out_dir = ".";
    bool figure2 = false;
    int digits = 15;
};

struct Curve {
    std::string q;
    std::map<int, double> values;
};

void write_curves(const std::vector<Curve>& curves, WalkKind kind, int T, int s, bool given_r,
                  const std::string& format, int digits, std::ostream& os) {
    const char* key = given_r ? "r" : "l";
    const char* value = given_r ? "expected_l" : "expected_r";
    if (format == "json") {
        auto arr = json::array();
        for (const auto& c : curves) {
            for (const auto& [k, v] : c.values) {
                json j;
                j["walk"] = std::string(to_string(kind));
                j["T"] = T;
                j["s"] = s;
                j["q"] = c.q;
                j[key] = k;
                j[value] = format_double(v, digits);
                arr.push_back(std::move(j));
            }
        }
        os << arr.dump(1) << '\n';
        return;
    }
    os << "walk,T,s,q," << key << ',' << value << '\n';
    for (const auto& c : curves) {
        for (const auto& [k, v] : c.values) {
            os << to_string(kind) << ',' << T << ',' << s << ',' << c.q << ',' << k << ',' << format_double(v, digits)
               << '\n';
        }
    }
}

// Pointwise order of two curves on their shared support.
std::pair<std::size_t, std::size_t> ordering(const Curve& a, const Curve& b, bool a_above) {
    std::size_t shared = 0;
    std::size_t bad = 0;
    for (const auto& [k, va] : a.values) {
        const auto it = b.values.find(k);
        if (it == b.values.end()) {
            continue;
        }
        ++shared;
        const bool ok = a_above ? va >= it->second : va <= it->second;
        bad += ok ? 0 : 1;
    }
    return {shared, bad};
}

int run_condexp(const CondexpOptions& o, std::ostream& out) {
    if (o.format != "csv" && o.format != "json") {
        throw UsageError("--format must be csv or json");
    }
    if (o.given != "r" && o.given != "l") {
        throw UsageError("--given must be r or l");
    }
    const auto curves_for = [&](WalkKind kind, int T, int s, const std::vector<std::string>& qs, bool given_r) {
        std::vector<Curve> curves;
        for (const auto& qtext : qs) {
            const Probability q = parse_q(qtext);
            const auto pmf = joint_pmf(kind, make_params(kind, T, s, q));
            curves.push_back({qtext, given_r ? conditional_expectation_l_given_r(pmf)
                                             : conditional_expectation_r_given_l(pmf)});
        }
        return curves;
    };

    if (o.figure2) {
        std::filesystem::create_directories(o.out_dir);
        const auto ext = "." + o.format;
        const auto by_r = curves_for(WalkKind::reflected, 80, 3, kFigureQs, true);
        const auto by_l = curves_for(WalkKind::reflected, 80, 3, kFigureQs, false);
        const auto path_r = (std::filesystem::path(o.out_dir) / ("figure2_l_given_r" + ext)).string();
        const auto path_l = (std::filesystem::path(o.out_dir) / ("figure2_r_given_l" + ext)).string();
        emit(path_r, out, [&](std::ostream& os) {
            write_curves(by_r, WalkKind::reflected, 80, 3, true, o.format, o.digits, os);
        });
        emit(path_l, out, [&](std::ostream& os) {
            write_curves(by_l, WalkKind::reflected, 80, 3, false, o.format, o.digits, os);
        });
        const auto [shared_r, bad_r] = ordering(by_r.front(), by_r.back(), true);
        const auto [shared_l, bad_l] = ordering(by_l.front(), by_l.back(), false);
        out << path_r << ": E[L|r] q=0.40 >= q=0.55 on " << shared_r << " shared points, " << bad_r
            << " violations\n";
        out << path_l << ": E[R|l] q=0.40 <= q=0.55 on " << shared_l << " shared points, " << bad_l
            << " violations\n";
        return kExitOk;
    }
    if (o.T < 1) {
        throw UsageError("--T is required and must be at least 1");
    }
    if (o.qs.empty()) {
        throw UsageError("at least one --q is required");
    }
    const auto kind = parse_walk(o.walk);
    const bool given_r = o.given == "r";
    const auto curves = curves_for(kind, o.T, o.s, o.qs, given_r);
    emit(o.out, out,
         [&](std::ostream& os) { write_curves(curves, kind, o.T, o.s, given_r, o.format, o.digits, os); });
    return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateOptions {
    std::string walk = "rsrw";
    int T = 0;
    int s = 0;
    std::string q;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    bool compare_exact = false;
    std::string format = "csv";
    std::string out;
    int digits = 15;
};

int run_simulate(const SimulateOptions& o, std::ostream& out, std::ostream& err) {
    if (o.format != "csv" && o.format != "json") {
        throw UsageError("--format must be csv or json");
    }
    if (o.T < 1 || o.q.empty() || o.n < 1) {
        throw UsageError("--T, --q and --n (>= 1) are required");
    }
    const auto kind = parse_walk(o.walk);
    const auto params = make_params(kind, o.T, o.s, parse_q(o.q));
    const auto sim = simulate(kind, params, o.n, o.seed, configured_threads());

    std::vector<CellComparison> rows;
    if (o.compare_exact) {
        rows = compare_with_exact(sim, joint_pmf(kind, params));
    } else {
        for (const auto& [cell, count] : sim.joint_counts) {
            rows.push_back({cell, count, 0.0, 0.0, 0.0});
        }
    }
    const std::string walk(to_string(kind));
    const std::string q = q_label(params.q);
    emit(o.out, out, [&](std::ostream& os) {
        if (o.format == "json") {
            auto arr = json::array();
            for (const auto& row : rows) {
                json j;
                j["walk"] = walk;
                j["T"] = params.T;
                j["s"] = params.s;
                j["q"] = q;
                j["r"] = row.cell.r;
                j["l"] = row.cell.l;
                j["observed"] = row.observed;
                if (o.compare_exact) {
                    j["probability"] = format_double(row.probability, o.digits);
                    j["z"] = format_double(row.z, 6);
                }
                arr.push_back(std::move(j));
            }
            json doc;
            doc["n_paths"] = sim.n_paths;
            doc["seed"] = sim.seed;
            doc["cells"] = std::move(arr);
            os << doc.dump(1) << '\n';
            return;
        }
        os << "walk,T,s,q,r,l,observed" << (o.compare_exact ? ",probability,z" : "") << '\n';
        for (const auto& row : rows) {
            os << walk << ',' << params.T << ',' << params.s << ',' << q << ',' << row.cell.r << ',' << row.cell.l
               << ',' << row.observed;
            if (o.compare_exact) {
                os << ',' << format_double(row.probability, o.digits) << ',' << format_double(row.z, 6);
            }
            os << '\n';
        }
    });
    if (o.compare_exact) {
        std::size_t eligible = 0;
        const double frac = fraction_within(rows, kMonteCarloMinExpected, kMonteCarloZBound, &eligible);
        err << "cells with expected count >= " << kMonteCarloMinExpected << ": " << eligible << ", fraction with |z| <= "
            << kMonteCarloZBound << ": " << format_double(frac, 6) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOptions {
    int oracle_max_T = 14;
    int identity_max_T = 30;
    int logconcavity_max_T = 100;
    int logconcavity_max_s = 10;
    int matrix_max_T = 40;
    std::vector<std::uint64_t> montecarlo;
    std::string inject;
    std::string out;
};

CorruptedCount parse_corruption(const std::string& text) {
    CorruptedCount c;
    char sep[3] = {};
    std::istringstream in(text);
    if (!(in >> c.T >> sep[0] >> c.s >> sep[1] >> c.r >> sep[2] >> c.l) || sep[0] != ',' || sep[1] != ',' ||
        sep[2] != ',') {
        throw UsageError("--inject-corrupt expects T,s,r,l");
    }
    return c;
}

json to_json(const BivariateProbeReport& p) {
    json j;
    j["T"] = p.T;
    j["s"] = p.s;
    j["q"] = p.q;
    j["support"] = p.support;
    auto dirs = json::array();
    for (const auto& d : p.directions) {
        json dj;
        dj["direction"] = d.name;
        dj["step"] = {d.dr, d.dl};
        dj["lines"] = d.lines;
        dj["lines_skipped"] = d.lines_skipped;
        dj["triples"] = d.triples;
        dj["violations"] = d.violations;
        auto sample = json::array();
        for (const auto& c : d.sample_violations) {
            sample.push_back({c.r, c.l});
        }
        dj["sample_violations"] = std::move(sample);
        dirs.push_back(std::move(dj));
    }
    j["directions"] = std::move(dirs);
    return j;
}

int run_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
    std::optional<CorruptedCount> corrupt;
    if (!o.inject.empty()) {
        corrupt = parse_corruption(o.inject);
    }
    if (!o.montecarlo.empty() && o.montecarlo.size() != 2) {
        throw UsageError("--montecarlo expects: n seed");
    }
    const int threads = configured_threads();
    json report;
    bool passed = true;
    std::vector<std::string> failures;

    const auto oracle = run_oracle_suite(o.oracle_max_T, corrupt, threads);
    {
        json j;
        j["max_T"] = oracle.max_T;
        j["count_cells"] = oracle.cells;
        j["law_cells"] = oracle.pmf_checks;
        auto mism = json::array();
        for (const auto& m : oracle.mismatches) {
            mism.push_back({{"walk", m.walk},
                            {"T", m.T},
                            {"s", m.s},
                            {"r", m.r},
                            {"l", m.l},
                            {"reference", m.source},
                            {"closed_form", m.closed_form},
                            {"expected", m.reference}});
            failures.push_back("oracle " + m.walk + " (T,s,r,l)=(" + std::to_string(m.T) + "," + std::to_string(m.s) +
                               "," + std::to_string(m.r) + "," + std::to_string(m.l) + ") vs " + m.source +
                               ": closed form " + m.closed_form + ", expected " + m.reference);
        }
        j["mismatches"] = std::move(mism);
        j["passed"] = oracle.passed();
        report["oracle"] = std::move(j);
        passed = passed && oracle.passed();
    }

    {
        std::vector<int> horizons;
        for (int T = 1; T <= o.matrix_max_T; ++T) {
            horizons.push_back(T);
        }
        const auto matrix = run_matrix_suite(horizons, 10, {0.40, 0.45, 0.50, 0.55});
        json j;
        j["max_T"] = o.matrix_max_T;
        j["max_s"] = matrix.max_s;
        j["checks"] = matrix.checks;
        j["max_power_error"] = matrix.max_power_error;
        j["max_dp_error"] = matrix.max_dp_error;
        j["max_local_time_error"] = matrix.max_local_time_error;
        j["max_partial_sum_error"] = matrix.max_partial_sum_error;
        auto fails = json::array();
        for (const auto& f : matrix.failures) {
            fails.push_back({{"check", f.check}, {"T", f.T}, {"s", f.s}, {"q", f.q}, {"error", f.error}});
            failures.push_back("matrix " + f.check + " T=" + std::to_string(f.T) + " s=" + std::to_string(f.s));
        }
        j["failures"] = std::move(fails);
        j["passed"] = matrix.passed();
        report["matrix"] = std::move(j);
        passed = passed && matrix.passed();
    }

    {
        const auto grid = run_identity_grid(o.identity_max_T);
        json j;
        j["max_T"] = grid.max_T;
        j["cells"] = grid.cells;
        j["companion_failures"] = grid.pair_failures;
        j["split_failures"] = grid.split_failures;
        j["eq3_evaluated"] = grid.eq3_evaluated;
        j["eq3_exact_matches"] = grid.eq3_exact_matches;
        j["eq3_failures"] = grid.eq3_failures;
        auto findings = json::array();
        for (const auto& f : grid.findings) {
            findings.push_back(
                {{"identity", f.which}, {"T", f.T}, {"W", f.W}, {"x", f.x}, {"lhs", f.lhs}, {"rhs", f.rhs}});
        }
        j["findings"] = std::move(findings);
        // The four-binomial closed form is reported, not asserted.
        const bool ok = grid.pair_failures == 0 && grid.split_failures == 0;
        j["passed"] = ok;
        report["identities"] = std::move(j);
        if (!ok) {
            failures.push_back("binomial identities: " + std::to_string(grid.pair_failures) + " companion and " +
                               std::to_string(grid.split_failures) + " split failures");
        }
        passed = passed && ok;
    }

    {
        const auto lc = run_logconcavity_suite(o.logconcavity_max_T, o.logconcavity_max_s);
        json j;
        j["max_T"] = lc.max_T;
        j["max_s"] = lc.max_s;
        j["cross_products"] = lc.rows;
        auto fails = json::array();
        for (const auto& f : lc.failures) {
            fails.push_back({{"T", f.T}, {"s", f.s}, {"r", f.r}, {"value", f.value}});
            failures.push_back("log-concavity T=" + std::to_string(f.T) + " s=" + std::to_string(f.s) +
                               " r=" + std::to_string(f.r));
        }
        j["failures"] = std::move(fails);
        j["passed"] = lc.passed();
        report["logconcavity_l0"] = std::move(j);
        passed = passed && lc.passed();
    }

    {
        auto probes = json::array();
        probes.push_back(to_json(probe_bivariate_logconcavity(80, 3, Probability::approx(0.45))));
        probes.push_back(to_json(probe_bivariate_logconcavity(160, 5, Probability::approx(0.45))));
        report["bivariate_probe"] = {{"informational", true}, {"reports", std::move(probes)}};
    }

    if (!o.montecarlo.empty()) {
        const auto mc = run_montecarlo_suite(o.montecarlo[0], o.montecarlo[1], threads);
        json j;
        j["T"] = mc.T;
        j["s"] = mc.s;
        j["q"] = format_double(mc.q);
        j["n_paths"] = mc.n_paths;
        j["seed"] = mc.seed;
        j["eligible_cells"] = mc.eligible_cells;
        j["fraction_within"] = format_double(mc.fraction_within, 15);
        j["passed"] = mc.passed();
        report["montecarlo"] = std::move(j);
        if (!mc.passed()) {
            failures.push_back("montecarlo: fraction within |z|<=4 is " + format_double(mc.fraction_within, 6));
        }
        passed = passed && mc.passed();
    }

    report["passed"] = passed;
    emit(o.out, out, [&](std::ostream& os) { os << report.dump(1) << '\n'; });
    for (const auto& f : failures) {
        err << "FAIL " << f << '\n';
    }
    return passed ? kExitOk : kExitCheckFailed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact joint law of value and local time at zero for simple and reflected random walks", "walklt"};
    app.require_subcommand(1);

    JointOptions jo;
    auto* joint = app.add_subcommand("joint", "Emit the joint (value, local time) law");
    joint->add_option("--walk", jo.walk, "rsrw or srw")->capture_default_str();
    joint->add_option("--T", jo.T, "Horizon (steps)");
    joint->add_option("--s", jo.s, "Start state")->capture_default_str();
    joint->add_option("--q", jo.q, "Up-step probability: decimal, or a/b for exact output");
    joint->add_option("--exact", jo.exact, "Up-step probability as a fraction a/b");
    joint->add_option("--format", jo.format, "csv or json")->capture_default_str();
    joint->add_option("--out", jo.out, "Output file (default stdout)");
    joint->add_option("--out-dir", jo.out_dir, "Directory for preset outputs")->capture_default_str();
    joint->add_option("--precision", jo.digits, "Significant digits in float mode")->capture_default_str();
    joint->add_flag("--figure1", jo.figure1, "Reflected walk, T=80, s=3, q in {0.40,0.45,0.50,0.55}");
    joint->add_flag("--figure3", jo.figure3, "Both walks, T=160, s=5, q=0.45");
    joint->add_flag("--verify", jo.verify, "Cross-check against the dynamic program; exit 1 on mismatch");

    CondexpOptions co;
    auto* condexp = app.add_subcommand("condexp", "Conditional expectation curves");
    condexp->add_option("--walk", co.walk, "rsrw or srw")->capture_default_str();
    condexp->add_option("--T", co.T, "Horizon (steps)");
    condexp->add_option("--s", co.s, "Start state")->capture_default_str();
    condexp->add_option("--q", co.qs, "Up-step probabilities, one curve each");
    condexp->add_option("--given", co.given, "r: E[L|R=r]; l: E[R|L=l]")->capture_default_str();
    condexp->add_option("--format", co.format, "csv or json")->capture_default_str();
    condexp->add_option("--out", co.out, "Output file (default stdout)");
    condexp->add_option("--out-dir", co.out_dir, "Directory for preset outputs")->capture_default_str();
    condexp->add_option("--precision", co.digits, "Significant digits")->capture_default_str();
    condexp->add_flag("--figure2", co.figure2, "Both panels at T=80, s=3, q in {0.40,0.45,0.50,0.55}");

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Run the cross-check suites and print a JSON report");
    verify->add_option("--oracle-max-T", vo.oracle_max_T, "Enumeration horizon")->capture_default_str();
    verify->add_option("--identity-grid", vo.identity_max_T, "Largest T of the identity grid")->capture_default_str();
    verify->add_option("--logconcavity-grid", vo.logconcavity_max_T, "Largest T of the log-concavity grid")
        ->capture_default_str();
    verify->add_option("--logconcavity-max-s", vo.logconcavity_max_s, "Largest s of the log-concavity grid")
        ->capture_default_str();
    verify->add_option("--matrix-max-T", vo.matrix_max_T, "Largest T of the matrix cross-checks")
        ->capture_default_str();
    verify->add_option("--montecarlo", vo.montecarlo, "n seed")->expected(2);
    verify->add_option("--inject-corrupt", vo.inject, "Test hook: corrupt the reflected count at T,s,r,l");
    verify->add_option("--out", vo.out, "Report file (default stdout)");

    SimulateOptions so;
    auto* sim = app.add_subcommand("simulate", "Monte Carlo joint counts");
    sim->add_option("--walk", so.walk, "rsrw or srw")->capture_default_str();
    sim->add_option("--T", so.T, "Horizon (steps)");
    sim->add_option("--s", so.s, "Start state")->capture_default_str();
    sim->add_option("--q", so.q, "Up-step probability");
    sim->add_option("--n", so.n, "Number of paths");
    sim->add_option("--seed", so.seed, "RNG seed")->capture_default_str();
    sim->add_flag("--compare-exact", so.compare_exact, "Append exact probability and z-score columns");
    sim->add_option("--format", so.format, "csv or json")->capture_default_str();
    sim->add_option("--out", so.out, "Output file (default stdout)");
    sim->add_option("--precision", so.digits, "Significant digits")->capture_default_str();

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("walklt");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) {
        argv.push_back(a.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (joint->parsed()) {
            return run_joint(jo, out, err);
        }
        if (condexp->parsed()) {
            return run_condexp(co, out);
        }
        if (verify->parsed()) {
            return run_verify(vo, out, err);
        }
        return run_simulate(so, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}

} // namespace walklt
