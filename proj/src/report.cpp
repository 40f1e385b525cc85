#include "subspace_lab/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace subspace_lab {

namespace {

std::string side_str(Side s) { return s == Side::above ? "above" : "below"; }

ordered_json subspace_json(const Subspace& s) {
    ordered_json rows = ordered_json::array();
    for (long i = 0; i < s.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (long j = 0; j < s.ambient(); ++j) row.push_back(s.basis_rows()(i, j).str());
        rows.push_back(row);
    }
    ordered_json out;
    out["dim"] = s.dim();
    out["ambient"] = s.ambient();
    out["basis"] = rows;
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string scalar_str(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

}  // namespace

std::string enclosure_str(const Interval& iv) {
    return "[" + iv.lo.str() + ", " + iv.hi.str() + "]";
}

ordered_json enclosure_json(const Interval& iv, unsigned digits) {
    ordered_json out;
    out["enclosure"] = enclosure_str(iv);
    out["decimal"] = decimal_enclosure(iv, digits);
    return out;
}

ordered_json roth_scan_report(const std::string& xi_spec, const Rat& delta, const Rat& B,
                              const std::vector<RothSolution>& sols,
                              const std::vector<std::string>& classes,
                              const std::vector<std::pair<RothSolution, RothSolution>>& audit) {
    ordered_json rep;
    rep["report"] = "roth_scan";
    rep["xi"] = xi_spec;
    rep["delta"] = delta.str();
    rep["max_height"] = B.str();
    rep["solution_count"] = sols.size();
    rep["gap_violations"] = audit.size();
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < sols.size(); ++i) {
        ordered_json r;
        r["alpha"] = sols[i].alpha.str();
        r["height"] = sols[i].height.str();
        r["side"] = side_str(sols[i].side);
        r["margin"] = decimal_enclosure(sols[i].margin, 8);
        r["class"] = i < classes.size() ? classes[i] : "";
        rows.push_back(r);
    }
    rep["rows"] = rows;
    if (!audit.empty()) {
        ordered_json bad = ordered_json::array();
        for (const auto& [s1, s2] : audit) {
            ordered_json r;
            r["alpha_1"] = s1.alpha.str();
            r["alpha_2"] = s2.alpha.str();
            bad.push_back(r);
        }
        rep["violating_pairs"] = bad;
    }
    return rep;
}

ordered_json roth_bounds_report(const std::string& xi_spec, long d, const Rat& delta,
                                const RothBounds& rb) {
    ordered_json rep;
    rep["report"] = "roth_bounds";
    rep["xi"] = xi_spec;
    rep["degree"] = d;
    rep["delta"] = delta.str();
    rep["outside_valid_range"] = rb.outside_valid_range;
    rep["m"] = rb.m.get_str();
    rep["omega"] = rb.omega.str();
    ordered_json rows = ordered_json::array();
    {
        ordered_json r;
        r["bound"] = "large_solution_count";
        r["value"] = decimal_enclosure(rb.large_bound.enclosure(64), 8);
        rows.push_back(r);
    }
    {
        ordered_json r;
        r["bound"] = "small_solution_count";
        r["value"] = decimal_enclosure(rb.small_bound.enclosure(64), 8);
        rows.push_back(r);
    }
    {
        ordered_json r;
        r["bound"] = "c_log_factor";
        r["value"] = d == 1 ? std::string("0") : magnitude_display(rb.c_log, rb.c_log_ln);
        rows.push_back(r);
    }
    rep["rows"] = rows;
    return rep;
}

ordered_json enumeration_report(const FormSystem& sys, const Rat& B,
                                const EnumerationResult& res) {
    ordered_json rep;
    rep["report"] = "subspace_scan";
    rep["n"] = sys.n;
    rep["delta"] = sys.delta.str();
    rep["max_height"] = B.str();
    rep["solution_count"] = res.solutions.size();
    rep["boundary_count"] = res.boundary.size();
    ordered_json rows = ordered_json::array();
    for (const auto& s : res.solutions) {
        ordered_json r;
        std::string xs;
        for (std::size_t j = 0; j < s.x.size(); ++j)
            xs += (j ? "," : "") + s.x[j].get_str();
        r["x"] = xs;
        r["height"] = s.height.str();
        r["large"] = s.large;
        ordered_json vals = ordered_json::array();
        for (const auto& v : s.values) {
            ordered_json vr;
            vr["place"] = v.v.str();
            vr["form"] = v.form_index;
            vr["value"] = v.exact ? ordered_json(v.value.lo.str())
                                  : ordered_json(enclosure_str(v.value));
            vals.push_back(vr);
        }
        r["values"] = vals;
        rows.push_back(r);
    }
    rep["rows"] = rows;
    if (!res.boundary.empty()) {
        ordered_json b = ordered_json::array();
        for (const auto& x : res.boundary) {
            std::string xs;
            for (std::size_t j = 0; j < x.size(); ++j) xs += (j ? "," : "") + x[j].get_str();
            b.push_back(xs);
        }
        rep["boundary"] = b;
    }
    return rep;
}

ordered_json cluster_report(const Rat& Q, const Subspace& window,
                            const std::map<PartitionClass, Subspace>& classes) {
    ordered_json rep;
    rep["report"] = "subspace_cluster";
    rep["Q"] = Q.str();
    rep["window_span"] = subspace_json(window);
    rep["class_count"] = classes.size();
    ordered_json rows = ordered_json::array();
    for (const auto& [pc, sp] : classes) {
        ordered_json r;
        r["class"] = pc.str();
        r["members_span_dim"] = sp.dim();
        r["span"] = subspace_json(sp);
        rows.push_back(r);
    }
    rep["rows"] = rows;
    return rep;
}

ordered_json filtration_json(const FiltrationReport& rep, bool u0_height_ok) {
    ordered_json out;
    out["report"] = "subspace_u0";
    out["nu_full"] = rep.nu_full.str();
    out["mu_zero"] = rep.mu_zero.str();
    out["mu0"] = rep.mu0.str();
    out["semistable"] = rep.semistable;
    out["slope_convention_mismatch"] = rep.slope_convention_mismatch;
    out["closure_size"] = rep.closure_size;
    out["U0"] = subspace_json(rep.U0);
    out["u0_height_ok"] = u0_height_ok;
    ordered_json rows = ordered_json::array();
    for (const auto& [c, m] : rep.candidates) {
        ordered_json r;
        r["dim"] = c.dim();
        r["mu"] = m.str();
        r["subspace"] = subspace_json(c);
        rows.push_back(r);
    }
    out["rows"] = rows;
    return out;
}

ordered_json bounds_table(long n, const Rat& delta, long R, long D, const Rat& H) {
    ordered_json rep;
    rep["report"] = "bounds_table";
    rep["n"] = n;
    rep["delta"] = delta.str();
    rep["R"] = R;
    rep["D"] = D;
    rep["H"] = H.str();
    ordered_json rows = ordered_json::array();

    BoundReport b1 = subspace_count_bound(n, delta, R, D);
    {
        ordered_json r;
        r["bound"] = b1.name;
        r["value"] = b1.display;
        r["outside_range"] = b1.outside_range;
        r["notes"] = "";
        rows.push_back(r);
    }
    ThresholdedBound b2 = thresholded_count_bound(n, delta, R, D, H);
    {
        ordered_json r;
        r["bound"] = b2.report.name;
        r["value"] = b2.report.display;
        r["outside_range"] = b2.report.outside_range;
        r["notes"] = "height threshold " +
                     decimal_enclosure(b2.threshold.enclosure(48), 8) +
                     (b2.threshold_from_height ? " (= 2H)" : " (= n^(2n/delta))");
        rows.push_back(r);
    }
    IteratedLogBound b3 = iterated_log_count_bound(n, delta);
    {
        ordered_json r;
        r["bound"] = b3.report.name;
        r["value"] = b3.report.display;
        r["outside_range"] = b3.report.outside_range;
        r["notes"] = "log2 log2 = " + b3.log2_log2.str();
        rows.push_back(r);
    }
    LadderConstants lc = ladder_constants(n, delta, R, D);
    {
        ordered_json r;
        r["bound"] = "ladder_constants";
        r["value"] = "m = " + lc.m.get_str();
        r["outside_range"] = false;
        r["notes"] = "omega = " + decimal_enclosure(lc.omega.enclosure(48), 8);
        rows.push_back(r);
    }
    {
        Integer total = window_total(lc.m, lc.omega, n, delta);
        ordered_json r;
        r["bound"] = "window_total";
        r["value"] = total.get_str();
        r["outside_range"] = false;
        if (b1.value) {
            bool le = CReal(Rat(total)) <= *b1.value;
            r["notes"] = std::string("composition vs subspace_count: ") +
                         (le ? "within" : "exceeds");
        } else {
            r["notes"] = "";
        }
        rows.push_back(r);
    }
    rep["rows"] = rows;
    return rep;
}

ordered_json partition_report(const std::vector<std::vector<ComplexRat>>& vectors,
                              const Rat& M) {
    ordered_json rep;
    rep["report"] = "partition";
    rep["M"] = M.str();
    if (!vectors.empty())
        rep["axis_count"] = partition_axis_count(static_cast<long>(vectors[0].size()), M);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        ordered_json r;
        std::string vs;
        for (std::size_t j = 0; j < vectors[i].size(); ++j) {
            if (j) vs += "; ";
            const Rat& im = vectors[i][j].im;
            vs += vectors[i][j].re.str() + (im.sign() < 0 ? "" : "+") + im.str() + "i";
        }
        r["vector"] = vs;
        r["class"] = partition_assign(vectors[i], M).str();
        rows.push_back(r);
    }
    rep["rows"] = rows;
    return rep;
}

std::string to_csv(const ordered_json& rep) {
    std::ostringstream os;
    const ordered_json* rows = nullptr;
    for (auto it = rep.begin(); it != rep.end(); ++it) {
        if (it.key() == "rows") {
            rows = &it.value();
            continue;
        }
        os << csv_escape(it.key()) << "," << csv_escape(scalar_str(it.value())) << "\n";
    }
    if (rows && rows->is_array() && !rows->empty()) {
        os << "\n";
        std::vector<std::string> header;
        for (auto it = (*rows)[0].begin(); it != (*rows)[0].end(); ++it)
            header.push_back(it.key());
        for (std::size_t i = 0; i < header.size(); ++i)
            os << (i ? "," : "") << csv_escape(header[i]);
        os << "\n";
        for (const auto& row : *rows) {
            for (std::size_t i = 0; i < header.size(); ++i) {
                os << (i ? "," : "");
                auto it = row.find(header[i]);
                os << csv_escape(it != row.end() ? scalar_str(*it) : "");
            }
            os << "\n";
        }
    }
    return os.str();
}

void write_report(const ordered_json& rep, const std::string& format,
                  const std::string& out_path) {
    if (format != "json" && format != "csv")
        throw config_error("unknown format '" + format + "' (expected json or csv)");
    std::string body = format == "json" ? rep.dump(2) + "\n" : to_csv(rep);
    if (out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw config_error("cannot write report to '" + out_path + "'");
    out << body;
}

}  // namespace subspace_lab
