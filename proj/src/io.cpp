#include "medbounds/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "medbounds/errors.hpp"

namespace medbounds {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

int parse_bit(const std::string& field, const std::string& context) {
    if (field == "0") return 0;
    if (field == "1") return 1;
    throw MalformedInput(context + ": expected 0 or 1, got '" + field + "'");
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open '" + path + "'");
    return in;
}

}  // namespace

RecordTable read_records_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw MalformedInput("empty record CSV");
    {
        const auto header = split_csv_line(line);
        if (header != std::vector<std::string>{"x", "m1", "m2", "y"})
            throw MalformedInput("record CSV header must be 'x,m1,m2,y'");
    }
    RecordTable records;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 4)
            throw MalformedInput("line " + std::to_string(lineno) + ": expected 4 fields");
        const std::string ctx = "line " + std::to_string(lineno);
        records.add(parse_bit(fields[0], ctx), parse_bit(fields[1], ctx),
                    parse_bit(fields[2], ctx), parse_bit(fields[3], ctx));
    }
    return records;
}

RecordTable read_records_csv_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_records_csv(in);
}

void write_records_csv(std::ostream& out, const RecordTable& records) {
    out << "x,m1,m2,y\n";
    for (const Record& r : records.rows())
        out << int(r.x) << ',' << int(r.m1) << ',' << int(r.m2) << ',' << int(r.y) << '\n';
}

ObservedDistribution read_probability_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("bad probability JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("probs") || !doc["probs"].is_array())
        throw MalformedInput("probability JSON must be an object with a 'probs' array");
    const auto& probs = doc["probs"];
    if (probs.size() != kCells)
        throw MalformedInput("'probs' must hold exactly 16 entries, got " +
                             std::to_string(probs.size()));
    std::array<bool, kCells> seen{};
    ObservedDistribution dist;
    for (const auto& entry : probs) {
        for (const char* key : {"x", "m1", "m2", "y", "p"})
            if (!entry.contains(key))
                throw MalformedInput(std::string("probability entry missing '") + key + "'");
        const int x = entry["x"].get<int>(), m1 = entry["m1"].get<int>(),
                  m2 = entry["m2"].get<int>(), y = entry["y"].get<int>();
        for (int bit : {x, m1, m2, y})
            if (bit != 0 && bit != 1) throw MalformedInput("cell coordinates must be 0/1");
        const int idx = cell_index(y, m1, m2, x);
        if (seen[static_cast<std::size_t>(idx)])
            throw MalformedInput("duplicate cell (y=" + std::to_string(y) + ",m1=" +
                                 std::to_string(m1) + ",m2=" + std::to_string(m2) +
                                 ",x=" + std::to_string(x) + ")");
        seen[static_cast<std::size_t>(idx)] = true;
        dist.set(y, m1, m2, x, entry["p"].get<double>());
    }
    return dist;
}

ObservedDistribution read_probability_json_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_probability_json(in);
}

nlohmann::json probability_json(const ObservedDistribution& dist) {
    nlohmann::json probs = nlohmann::json::array();
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int m1 = 0; m1 < 2; ++m1)
                for (int m2 = 0; m2 < 2; ++m2)
                    probs.push_back({{"x", x},
                                     {"m1", m1},
                                     {"m2", m2},
                                     {"y", y},
                                     {"p", dist.p(y, m1, m2, x)}});
    return nlohmann::json{{"probs", probs}};
}

ObservedDistribution read_distribution_any(const std::string& path) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
        return estimate_distribution(read_records_csv_file(path));
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return read_probability_json_file(path);
    throw MalformedInput("input '" + path + "' must end in .csv or .json");
}

nlohmann::json bound_report(EstimandId e, const BoundInterval& interval) {
    nlohmann::json report{{"estimand", e.name()},
                          {"method", to_string(interval.method)},
                          {"lower", interval.lower},
                          {"upper", interval.upper},
                          {"noninformative", interval.noninformative()}};
    if (interval.active_lower >= 0)
        report["active_lower"] = interval.active_lower;
    else
        report["active_lower"] = nullptr;
    if (interval.active_upper >= 0)
        report["active_upper"] = interval.active_upper;
    else
        report["active_upper"] = nullptr;
    return report;
}

nlohmann::json bootstrap_report(EstimandId e, const BootstrapResult& result) {
    nlohmann::json report = bound_report(e, result.point);
    report["ci_lower"] = {result.ci_lower.first, result.ci_lower.second};
    report["ci_upper"] = {result.ci_upper.first, result.ci_upper.second};
    report["replicates"] = result.replicates;
    report["level"] = result.level;
    report["seed"] = result.seed;
    return report;
}

nlohmann::json lp_basis_json(const LpSolution& solution) {
    const auto basis = [](const LpBasis& b) {
        nlohmann::json out = nlohmann::json::array();
        for (std::size_t i = 0; i < b.types.size(); ++i)
            out.push_back({{"type", b.types[i]}, {"mass", b.masses[i]}});
        return nlohmann::json{{"basis", out}, {"pivots", b.pivots}};
    };
    return nlohmann::json{{"lower", basis(solution.lower_basis)},
                          {"upper", basis(solution.upper_basis)}};
}

std::string bound_report_csv(EstimandId e, const BoundInterval& interval) {
    std::ostringstream out;
    out << "estimand,method,lower,upper,active_lower,active_upper,noninformative\n";
    out << e.name() << ',' << to_string(interval.method) << ',' << format_double(interval.lower)
        << ',' << format_double(interval.upper) << ',';
    if (interval.active_lower >= 0) out << interval.active_lower;
    out << ',';
    if (interval.active_upper >= 0) out << interval.active_upper;
    out << ',' << (interval.noninformative() ? "true" : "false") << '\n';
    return out.str();
}

void write_vertex_sweep_csv(std::ostream& out, const VertexSweepTable& table) {
    out << "lower,upper,count,proportion\n";
    for (const auto& [cell, count] : table)
        out << cell.first << ',' << cell.second << ',' << count << ','
            << format_double(static_cast<double>(count) / kTypeCount) << '\n';
}

void write_study_rows_csv(std::ostream& out, const std::vector<StudyRow>& rows) {
    out << "alpha,replicate,estimand,lower,upper,width,excludes_zero\n";
    for (const StudyRow& row : rows)
        out << format_double(row.alpha) << ',' << row.replicate << ',' << row.estimand.name()
            << ',' << format_double(row.lower) << ',' << format_double(row.upper) << ','
            << format_double(row.width) << ',' << (row.excludes_zero ? "true" : "false") << '\n';
}

void write_study_summary_csv(std::ostream& out, const std::vector<StudySummaryRow>& rows) {
    out << "alpha,estimand,prop_width_lt_1,prop_excludes_zero,ci_low,ci_high\n";
    for (const StudySummaryRow& row : rows)
        out << format_double(row.alpha) << ',' << row.estimand.name() << ','
            << format_double(row.prop_width_lt_1) << ',' << format_double(row.prop_excludes_zero)
            << ',' << format_double(row.ci_low) << ',' << format_double(row.ci_high) << '\n';
}

std::string format_double(double value) {
    std::array<char, 32> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

}  // namespace medbounds
