#include "subspace_lab/config.hpp"
#include "subspace_lab/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace sl = subspace_lab;

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// One vector per line, components separated by ';', each component either a
// rational or "re, im". '#' starts a comment.
std::vector<std::vector<sl::ComplexRat>> read_vectors(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sl::config_error("cannot open vectors file '" + path + "'");
    std::vector<std::vector<sl::ComplexRat>> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        std::vector<sl::ComplexRat> v;
        for (const auto& comp : split(t, ';')) {
            auto parts = split(comp, ',');
            if (parts.size() > 2)
                throw sl::config_error(path + ":" + std::to_string(lineno) +
                                       ": component has more than two parts");
            sl::ComplexRat z;
            z.re = sl::Rat::parse(trim(parts[0]));
            if (parts.size() == 2) z.im = sl::Rat::parse(trim(parts[1]));
            v.push_back(z);
        }
        if (!out.empty() && v.size() != out[0].size())
            throw sl::config_error(path + ":" + std::to_string(lineno) +
                                   ": inconsistent vector length");
        out.push_back(std::move(v));
    }
    if (out.empty()) throw sl::config_error(path + ": no vectors");
    if (out[0].size() < 2) throw sl::config_error(path + ": vectors need at least 2 components");
    return out;
}

struct CommonOpts {
    std::string format = "json";
    std::string out;
    long precision_bits = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "report format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out, "write the report to this file instead of stdout");
        cmd->add_option("--precision-cap", precision_bits,
                        "bits of refinement before a comparison is declared undecided");
    }

    void apply() const {
        if (precision_bits > 0) sl::set_precision_cap(precision_bits);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact scans, clusterings, and bound tables for systems of linear forms"};
    app.require_subcommand(1);
    int rc = 0;

    CommonOpts common;

    // roth
    CLI::App* roth = app.add_subcommand("roth", "one-form approximation scans and bounds");
    roth->require_subcommand(1);

    std::string xi_spec;
    std::string delta_s = "1";
    std::string height_s = "100";
    int threads = 1;

    CLI::App* rscan = roth->add_subcommand(
        "scan", "enumerate all alpha with |xi - alpha| <= H(alpha)^(-2-delta)");
    rscan->add_option("--xi", xi_spec, "algebraic number: poly=[c0,c1,...];interval=[lo,hi]")
        ->required();
    rscan->add_option("--delta", delta_s, "exponent offset, a rational in (0, 1]");
    rscan->add_option("--max-height", height_s, "largest height to scan");
    rscan->add_option("--threads", threads, "worker threads");
    common.attach(rscan);
    rscan->callback([&]() {
        common.apply();
        sl::AlgebraicReal xi = sl::parse_algebraic(xi_spec);
        sl::Rat delta = sl::Rat::parse(delta_s), B = sl::Rat::parse(height_s);
        auto sols = sl::scan_roth(xi, delta, B, threads);
        std::vector<std::string> classes;
        classes.reserve(sols.size());
        for (const auto& s : sols)
            classes.push_back(sl::classify_solution(s, xi) == sl::SolutionClass::large_solution
                                  ? "large"
                                  : "small");
        auto audit = sl::audit_gap_principle(sols, delta);
        sl::write_report(sl::roth_scan_report(xi_spec, delta, B, sols, classes, audit),
                         common.format, common.out);
        if (!audit.empty()) {
            std::cerr << "gap principle violated by " << audit.size() << " pair(s)\n";
            rc = 2;
        }
    });

    CLI::App* rbounds =
        roth->add_subcommand("bounds", "solution-count bounds for one approximated number");
    rbounds->add_option("--xi", xi_spec, "algebraic number: poly=[c0,c1,...];interval=[lo,hi]")
        ->required();
    rbounds->add_option("--delta", delta_s, "exponent offset, a rational in (0, 1]");
    common.attach(rbounds);
    rbounds->callback([&]() {
        common.apply();
        sl::AlgebraicReal xi = sl::parse_algebraic(xi_spec);
        sl::Rat delta = sl::Rat::parse(delta_s);
        long d = xi.degree();
        auto rb = sl::roth_bounds(d, delta, sl::CReal::algebraic_height(xi));
        sl::write_report(sl::roth_bounds_report(xi_spec, d, delta, rb), common.format,
                         common.out);
    });

    // subspace
    CLI::App* sub = app.add_subcommand("subspace", "systems of linear forms in n variables");
    sub->require_subcommand(1);

    std::string system_path;
    std::string windowq_s = "1";
    std::string m_s = "2";
    std::string vectors_path;
    long bn = 2, bR = 1, bD = 1;
    std::string bdelta_s = "1", bH_s = "1";

    CLI::App* sscan = sub->add_subcommand("scan", "enumerate solutions up to a height bound");
    sscan->add_option("--system", system_path, "system description file")->required();
    sscan->add_option("--max-height", height_s, "largest max-norm to scan");
    sscan->add_option("--threads", threads, "worker threads");
    common.attach(sscan);
    sscan->callback([&]() {
        common.apply();
        sl::FormSystem sys = sl::load_system(system_path);
        sl::Rat B = sl::Rat::parse(height_s);
        auto res = sl::enumerate_solutions(sys, B, threads);
        sl::write_report(sl::enumeration_report(sys, B, res), common.format, common.out);
    });

    CLI::App* scluster = sub->add_subcommand(
        "cluster", "span of a height window and determinant classes of small solutions");
    scluster->add_option("--system", system_path, "system description file")->required();
    scluster->add_option("--max-height", height_s, "largest max-norm to scan");
    scluster->add_option("--window-Q", windowq_s, "lower edge of the height window");
    scluster->add_option("--threads", threads, "worker threads");
    common.attach(scluster);
    scluster->callback([&]() {
        common.apply();
        sl::FormSystem sys = sl::load_system(system_path);
        sl::Rat B = sl::Rat::parse(height_s), Q = sl::Rat::parse(windowq_s);
        auto res = sl::enumerate_solutions(sys, B, threads);
        sl::Subspace window = sl::window_subspace(sys, res.solutions, Q);
        auto classes = sl::small_solution_classes(sys, res.solutions, Q);
        sl::write_report(sl::cluster_report(Q, window, classes), common.format, common.out);
    });

    CLI::App* su0 =
        sub->add_subcommand("u0", "slope filtration and the exceptional subspace");
    su0->add_option("--system", system_path, "system description file")->required();
    common.attach(su0);
    su0->callback([&]() {
        common.apply();
        sl::FormSystem sys = sl::load_system(system_path);
        sl::FiltrationReport rep = sl::exceptional_subspace(sys);
        bool ok = sl::check_u0_height(rep.U0, sys);
        sl::write_report(sl::filtration_json(rep, ok), common.format, common.out);
        if (!ok) {
            std::cerr << "exceptional subspace exceeds its height bound\n";
            rc = 2;
        }
    });

    CLI::App* sbounds = sub->add_subcommand("bounds", "tabulate the subspace-count bounds");
    sbounds->add_option("--n", bn, "dimension")->required();
    sbounds->add_option("--delta", bdelta_s, "exponent offset, a rational in (0, 1]");
    sbounds->add_option("--R", bR, "number of places");
    sbounds->add_option("--D", bD, "field degree bound");
    sbounds->add_option("--H", bH_s, "coefficient height bound");
    common.attach(sbounds);
    sbounds->callback([&]() {
        common.apply();
        sl::write_report(
            sl::bounds_table(bn, sl::Rat::parse(bdelta_s), bR, bD, sl::Rat::parse(bH_s)),
            common.format, common.out);
    });

    CLI::App* spart =
        sub->add_subcommand("partition", "assign vectors to determinant partition classes");
    spart->add_option("--M", m_s, "partition parameter M >= 1")->required();
    spart->add_option("--vectors", vectors_path, "file with one vector per line")->required();
    common.attach(spart);
    spart->callback([&]() {
        common.apply();
        auto vecs = read_vectors(vectors_path);
        sl::write_report(sl::partition_report(vecs, sl::Rat::parse(m_s)), common.format,
                         common.out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const sl::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const sl::invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const sl::undecided_comparison& e) {
        std::cerr << "undecided comparison: " << e.what() << "\n";
        return 3;
    }
    return rc;
}
