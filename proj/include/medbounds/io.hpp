#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "medbounds/bootstrap.hpp"
#include "medbounds/bounds.hpp"
#include "medbounds/lp.hpp"
#include "medbounds/observed.hpp"
#include "medbounds/simulate.hpp"

namespace medbounds {

/// Record CSV: header `x,m1,m2,y`, one 0/1 row per subject.
RecordTable read_records_csv(std::istream& in);
RecordTable read_records_csv_file(const std::string& path);
void write_records_csv(std::ostream& out, const RecordTable& records);

/// Probability JSON: {"probs": [{"x":0,"m1":0,"m2":0,"y":0,"p":0.125}, ...]}
/// with exactly one entry per cell.
ObservedDistribution read_probability_json(std::istream& in);
ObservedDistribution read_probability_json_file(const std::string& path);
nlohmann::json probability_json(const ObservedDistribution& dist);

/// Loads either input format, deciding by file extension (.csv / .json).
ObservedDistribution read_distribution_any(const std::string& path);

nlohmann::json bound_report(EstimandId e, const BoundInterval& interval);
nlohmann::json bootstrap_report(EstimandId e, const BootstrapResult& result);
nlohmann::json lp_basis_json(const LpSolution& solution);

std::string bound_report_csv(EstimandId e, const BoundInterval& interval);

void write_vertex_sweep_csv(std::ostream& out, const VertexSweepTable& table);
void write_study_rows_csv(std::ostream& out, const std::vector<StudyRow>& rows);
void write_study_summary_csv(std::ostream& out, const std::vector<StudySummaryRow>& rows);

/// Shortest round-trip decimal rendering; used for all machine CSV output.
std::string format_double(double value);

}  // namespace medbounds
