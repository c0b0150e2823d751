#pragma once

// Command-line front end.  run() is the whole program minus main(), so tests
// can drive it with captured streams.
//
// Exit codes: 0 success, 1 a requested certification (or check) failed,
// 2 usage error.

#include "momcert/fillings.hpp"
#include "momcert/report.hpp"
#include "momcert/section4.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace momcert::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// MOMCERT_WORKERS when set to a positive integer, else 1.
inline int default_workers()
{
    const char* env = std::getenv("MOMCERT_WORKERS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 4096) throw usage_error("MOMCERT_WORKERS must be a positive integer");
    return static_cast<int>(v);
}

struct StrategyFlags {
    std::string mode = "adaptive";
    std::optional<int> depth;
    double threshold = 2.848;
    std::optional<int> workers;
    std::uint64_t budget = Strategy{}.budget;
    std::string report;
    bool canonical = false;
    bool f1_only = false;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--mode", mode, "adaptive or grid")->check(CLI::IsMember({"adaptive", "grid"}));
        cmd->add_option("--depth", depth, "depth cap per axis (grid: 2^D cells per axis)")->check(CLI::Range(1, 20));
        cmd->add_option("--threshold", threshold, "volume threshold")->check(CLI::PositiveNumber);
        cmd->add_option("--workers", workers, "worker threads (default MOMCERT_WORKERS or 1)")
            ->check(CLI::Range(1, 4096));
        cmd->add_option("--budget", budget, "maximum boxes evaluated per case");
        cmd->add_option("--report", report, "write the certificate bundle here (JSON)");
        cmd->add_flag("--canonical", canonical, "omit timings and worker count from the report");
        cmd->add_flag("--f1-only", f1_only, "never consult f2");
    }

    Strategy strategy() const
    {
        Strategy s;
        s.mode = mode == "grid" ? Mode::grid : Mode::adaptive;
        s.depth = depth.value_or(s.mode == Mode::grid ? 8 : 9);
        s.threshold = threshold;
        s.workers = workers ? *workers : default_workers();
        s.budget = budget;
        s.use_f2 = !f1_only;
        return s;
    }
};

inline std::string fmt(double v, int prec = 10)
{
    std::ostringstream os;
    os << std::setprecision(prec) << v;
    return os.str();
}

inline void summarize(std::ostream& os, const CaseReport& r)
{
    os << std::left << std::setw(20) << r.label << ' ' << std::setw(17) << to_string(r.status)
       << " boxes=" << r.boxes_processed << " min_lb=" << fmt(r.min_lower_bound) << '\n';
}

inline int finish_bundle(const CertificateBundle& bundle, const StrategyFlags& f, std::ostream& out)
{
    for (const CaseReport& r : bundle.cases) summarize(out, r);
    bool ok = bundle.all_passed();
    out << (ok ? "all passed" : "NOT all passed") << " (threshold " << fmt(bundle.threshold) << ")\n";
    if (!f.report.empty()) write_atomically(f.report, dump(bundle, {f.canonical}));
    return ok ? exit_ok : exit_failed;
}

template <Scalar T> void print_eval(std::ostream& out, const CaseSpec& cs, const SpectrumPoint<T>& pt, bool gate)
{
    auto show = [&](const char* name, const T& v) {
        if constexpr (is_jet_v<T>) out << name << " = " << std::setprecision(17) << range(v) << '\n';
        else out << name << " = " << std::setprecision(17) << v << '\n';
    };
    T v1 = f1(cs, pt);
    show("A0", a0(pt));
    show("f1", v1);
    if (!gate) {
        out << "f2 = n/a (gate e4 <= 1.5152, e2 + 1 >= e4^2 not satisfied)\n";
        return;
    }
    T v2 = v1 + f2_bonus(pt);
    show("f2", v2);
}

inline CuspLattice parse_lattice(const std::string& s)
{
    std::vector<double> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw usage_error("--lattice expects four numbers mx,my,lx,ly");
        }
    }
    if (v.size() != 4) throw usage_error("--lattice expects four numbers mx,my,lx,ly");
    try {
        return CuspLattice({v[0], v[1]}, {v[2], v[3]});
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rigorous volume-bound certifier for one-cusped hyperbolic 3-manifolds", "momcert"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "certify max(f1, f2) > threshold for the maximal cases");
    bool all = false;
    std::optional<int> case_id;
    StrategyFlags vflags;
    auto* all_opt = verify->add_flag("--all", all, "all eighteen cases");
    auto* case_opt = verify->add_option("--case", case_id, "one case id (1-18)")->check(CLI::Range(1, 18));
    all_opt->excludes(case_opt);
    vflags.attach(verify);

    // verify-slice
    auto* slice = app.add_subcommand("verify-slice", "certify f1 > threshold on the slice e4 = 1.5152");
    StrategyFlags sflags;
    sflags.attach(slice);

    // verify-section4
    auto* s4 = app.add_subcommand("verify-section4", "validate the bounds that confine the parameter box");
    Section4Options s4opt;
    std::string s4report;
    bool s4canonical = false;
    s4->add_option("--grid", s4opt.grid, "grid intervals per axis")->check(CLI::Range(2, 100000));
    s4->add_option("--curve-points", s4opt.curve_points, "points along curves")->check(CLI::Range(2, 10000000));
    s4->add_option("--threshold", s4opt.threshold, "volume threshold")->check(CLI::PositiveNumber);
    s4->add_option("--report", s4report, "write the reports here (JSON)");
    s4->add_flag("--canonical", s4canonical, "omit timings from the report");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate the bounds at one point");
    std::string e2s, e3s, e4s, kind = "plain";
    int eval_case = 0;
    eval->add_option("--e2", e2s, "e2")->required();
    eval->add_option("--e3", e3s, "e3")->required();
    eval->add_option("--e4", e4s, "e4")->required();
    eval->add_option("--case", eval_case, "case id (0 = no triples)")->check(CLI::Range(0, 18));
    eval->add_option("--kind", kind, "plain, precise or jet")->check(CLI::IsMember({"plain", "precise", "jet"}));

    // cases
    auto* cases = app.add_subcommand("cases", "list or check the maximal cases");
    auto* cases_list = cases->add_subcommand("list", "print the eighteen cases");
    bool list_json = false;
    cases_list->add_flag("--json", list_json, "as a JSON data file");
    auto* cases_check = cases->add_subcommand("check", "check maximality and exhaustiveness");
    cases->require_subcommand(1);

    // slopes
    auto* slopes = app.add_subcommand("slopes", "list filling slopes below the volume cutoff (CSV)");
    double volume = 0, slope_threshold = 2.848;
    std::string lattice = "1.4142135623730951,0,0,2.8284271247461903";
    slopes->add_option("--volume", volume, "volume of the cusped manifold")->required()->check(CLI::PositiveNumber);
    slopes->add_option("--threshold", slope_threshold, "volume threshold")->check(CLI::PositiveNumber);
    slopes->add_option("--lattice", lattice, "meridian and longitude: mx,my,lx,ly (default m129)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "momcert: " << e.what() << "\nRun with --help for usage.\n";
        return exit_usage;
    }

    try {
        if (verify->parsed()) {
            if (!all && !case_id) throw usage_error("verify needs --all or --case N");
            Strategy s = vflags.strategy();
            std::vector<CaseSpec> list = all ? the_18_cases() : std::vector<CaseSpec>{case_by_id(*case_id)};
            auto bundle = certify_cases(list, s, default_domain(), [&](const CaseReport& r) {
                err << "case " << r.case_id << ": " << to_string(r.status) << " (" << r.boxes_processed
                    << " boxes, " << fmt(r.wall_time_ms, 4) << " ms)\n";
            });
            return finish_bundle(bundle, vflags, out);
        }
        if (slice->parsed()) {
            Strategy s = sflags.strategy();
            CertificateBundle bundle;
            bundle.threshold = s.threshold;
            bundle.strategy = s;
            bundle.domain = slice_domain();
            bundle.cases.push_back(certify_slice(s));
            return finish_bundle(bundle, sflags, out);
        }
        if (s4->parsed()) {
            CertificateBundle bundle;
            bundle.threshold = s4opt.threshold;
            bundle.domain = default_domain();
            for (CaseReport& r : certify_section4(s4opt)) {
                err << r.label << ": " << to_string(r.status) << '\n';
                bundle.cases.push_back(std::move(r));
            }
            StrategyFlags f;
            f.report = s4report;
            f.canonical = s4canonical;
            return finish_bundle(bundle, f, out);
        }
        if (eval->parsed()) {
            CaseSpec cs = eval_case == 0 ? CaseSpec{0, {}} : case_by_id(eval_case);
            double x2 = 0, x3 = 0, x4 = 0;
            try {
                x2 = std::stod(e2s);
                x3 = std::stod(e3s);
                x4 = std::stod(e4s);
            } catch (const std::exception&) {
                throw usage_error("--e2/--e3/--e4 must be numbers");
            }
            if (!(x2 >= 1 && x2 <= x3 && x3 <= x4)) throw usage_error("need 1 <= e2 <= e3 <= e4");
            out << "case " << cs.id << " " << cs.str() << ", kind " << kind << '\n';
            SpectrumPoint<double> ptd{x2, x3, x4};
            bool gate = f2_gate(ptd);
            if (kind == "plain") {
                print_eval(out, cs, ptd, gate);
            } else if (kind == "precise") {
                SpectrumPoint<precise> pt{lit<precise>(e2s.c_str()), lit<precise>(e3s.c_str()),
                                          lit<precise>(e4s.c_str())};
                print_eval(out, cs, pt, f2_gate(pt));
            } else {
                SpectrumPoint<Jet> pt{lit<Jet>(e2s.c_str()), lit<Jet>(e3s.c_str()), lit<Jet>(e4s.c_str())};
                print_eval(out, cs, pt, gate);
            }
            return exit_ok;
        }
        if (cases->parsed()) {
            auto list = the_18_cases();
            if (cases_list->parsed()) {
                if (list_json) out << cases_to_json(list).dump(2) << '\n';
                else
                    for (const CaseSpec& cs : list) out << cs.id << ' ' << cs.str() << '\n';
                return exit_ok;
            }
            if (cases_check->parsed()) {
                bool ok = true;
                for (const CaseSpec& cs : list) {
                    bool m = verify_maximality(cs);
                    ok = ok && m;
                    out << "case " << cs.id << ' ' << cs.str() << (m ? " maximal" : " NOT maximal") << '\n';
                }
                ExhaustiveScan scan = exhaustive_scan(list);
                out << "scanned " << scan.collections << " collections, " << scan.non_certifiable
                    << " without a certifiable Mom, " << scan.maximal.size() << " maximal\n";
                for (const auto& c : scan.extra_maximal) out << "unlisted maximal: " << CaseSpec{0, c}.str() << '\n';
                for (const auto& c : scan.uncovered) out << "uncovered: " << CaseSpec{0, c}.str() << '\n';
                for (int id : scan.missing_cases) out << "not found maximal: case " << id << '\n';
                ok = ok && scan.ok();
                out << (ok ? "cases check passed" : "cases check FAILED") << '\n';
                return ok ? exit_ok : exit_failed;
            }
        }
        if (slopes->parsed()) {
            CuspLattice lat = parse_lattice(lattice);
            auto cutoff = slope_cutoff(volume, slope_threshold);
            if (!cutoff) {
                err << "volume " << volume << " <= threshold " << slope_threshold << ": every slope qualifies\n";
                return exit_failed;
            }
            err << "cutoff length " << fmt(*cutoff, 12) << '\n';
            write_slopes_csv(out, enumerate_slopes(lat, *cutoff));
            return exit_ok;
        }
    } catch (const usage_error& e) {
        err << "momcert: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "momcert: error: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_usage;
}

} // namespace momcert::cli
