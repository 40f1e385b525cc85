#pragma once

#include "subspace_lab/bounds.hpp"
#include "subspace_lab/filtration.hpp"
#include "subspace_lab/gap.hpp"
#include "subspace_lab/roth.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace subspace_lab {

using ordered_json = nlohmann::ordered_json;

// "[lo, hi]" with exact rational endpoints.
std::string enclosure_str(const Interval& iv);

// {"enclosure": "[p/q, r/s]", "decimal": "[d.dd, d.dd]"} for a certified value.
ordered_json enclosure_json(const Interval& iv, unsigned digits = 12);

ordered_json roth_scan_report(const std::string& xi_spec, const Rat& delta, const Rat& B,
                              const std::vector<RothSolution>& sols,
                              const std::vector<std::string>& classes,
                              const std::vector<std::pair<RothSolution, RothSolution>>& audit);

ordered_json roth_bounds_report(const std::string& xi_spec, long d, const Rat& delta,
                                const RothBounds& rb);

ordered_json enumeration_report(const FormSystem& sys, const Rat& B,
                                const EnumerationResult& res);

ordered_json cluster_report(const Rat& Q, const Subspace& window,
                            const std::map<PartitionClass, Subspace>& classes);

ordered_json filtration_json(const FiltrationReport& rep, bool u0_height_ok);

ordered_json bounds_table(long n, const Rat& delta, long R, long D, const Rat& H);

ordered_json partition_report(const std::vector<std::vector<ComplexRat>>& vectors, const Rat& M);

// Reports carry flat "rows"; CSV renders metadata as key,value lines, a
// blank line, then the header and rows.
std::string to_csv(const ordered_json& rep);

// format is "json" or "csv"; empty out_path writes to stdout.
void write_report(const ordered_json& rep, const std::string& format,
                  const std::string& out_path);

}  // namespace subspace_lab
