#pragma once

// Input documents (JSON, or CSV for real scalar data) and report documents for the CLI.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gruss/gruss.hpp"

namespace gruss::io {

using nlohmann::json;

[[noreturn]] inline void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

/// 64-bit FNV-1a of the raw input bytes, as 16 hex digits.
[[nodiscard]] inline std::string fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

[[nodiscard]] inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) parse_fail("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// A parsed dataset. Enclosures are optional; missing ones are derived by the caller.
struct InputDocument {
    std::optional<std::vector<double>> weights;
    std::optional<ScalarSeq> alpha;
    std::optional<ScalarSeq> beta;
    std::optional<VectorSeq> vectors;
    NormFamily norm = NormFamily::L2;
    double norm_p = 2.0;
    std::optional<ScalarField> field;
    std::optional<Disk> disk;
    std::optional<Segment> segment;
    std::optional<Interval> interval;
    std::optional<Ball> ball;
    std::optional<Segment> beta_segment;
    json metadata = json::object();
    std::string digest;

    [[nodiscard]] std::size_t size() const {
        if (alpha) return alpha->size();
        if (vectors) return vectors->size();
        return 0;
    }
};

namespace detail {

inline double number(const json& j, const std::string& where) {
    if (!j.is_number()) parse_fail(where + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, where + " is not finite");
    return v;
}

// A scalar is a number, an [re, im] pair or {"re": .., "im": ..}.
inline Scalar scalar(const json& j, const std::string& where) {
    if (j.is_number()) return Scalar(number(j, where));
    if (j.is_array() && j.size() == 2) return Scalar(number(j[0], where + ".re"), number(j[1], where + ".im"));
    if (j.is_object() && j.contains("re")) {
        return Scalar(number(j["re"], where + ".re"), j.contains("im") ? number(j["im"], where + ".im") : 0.0);
    }
    parse_fail(where + ": expected a number, [re, im] or {re, im}");
}

inline std::vector<double> reals(const json& j, const std::string& where) {
    if (!j.is_array()) parse_fail(where + ": expected an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

// {"re": [...], "im": [...]} or a plain array of scalars.
inline ScalarSeq scalar_seq(const json& j, const std::string& where) {
    if (j.is_object()) {
        if (!j.contains("re")) parse_fail(where + ": missing 're'");
        const auto re = reals(j["re"], where + ".re");
        ScalarSeq s(re.begin(), re.end());
        if (j.contains("im")) {
            const auto im = reals(j["im"], where + ".im");
            if (im.size() != re.size()) {
                throw Error(ErrorCode::LengthMismatch, where + ": re and im lengths differ");
            }
            for (std::size_t i = 0; i < s.size(); ++i) s[i] = Scalar(re[i], im[i]);
        }
        return s;
    }
    if (!j.is_array()) parse_fail(where + ": expected {re, im} or an array");
    ScalarSeq s;
    for (std::size_t i = 0; i < j.size(); ++i) s.push_back(scalar(j[i], where + "[" + std::to_string(i) + "]"));
    return s;
}

inline Vec point(const json& j, const std::string& where) {
    if (!j.is_array()) parse_fail(where + ": expected an array of coordinates");
    Vec v;
    for (std::size_t c = 0; c < j.size(); ++c) v.push_back(scalar(j[c], where + "[" + std::to_string(c) + "]"));
    return v;
}

inline std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

inline void enclosure(const json& j, InputDocument& doc, std::size_t dim, const std::string& where) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        parse_fail(where + ": enclosure needs a string 'type'");
    }
    const std::string type = lower(j["type"].get<std::string>());
    auto need = [&](const char* key) -> const json& {
        if (!j.contains(key)) parse_fail(where + ": " + type + " needs '" + key + "'");
        return j[key];
    };
    const std::string target = j.contains("of") && j["of"].is_string() ? lower(j["of"].get<std::string>()) : "alpha";
    if (type == "disk") {
        doc.disk = Disk{scalar(need("center"), where + ".center"), number(need("radius"), where + ".radius")};
        validate(*doc.disk);
    } else if (type == "segment") {
        const Segment s{scalar(need("a"), where + ".a"), scalar(need("A"), where + ".A")};
        validate(s);
        (target == "beta" ? doc.beta_segment : doc.segment) = s;
    } else if (type == "interval") {
        doc.interval = Interval{number(need("m"), where + ".m"), number(need("M"), where + ".M")};
        validate(*doc.interval);
    } else if (type == "ball") {
        Vec c = point(need("center"), where + ".center");
        if (dim != 0 && c.size() != dim) throw Error(ErrorCode::DimensionMismatch, where + ": ball center dimension");
        const double r = number(need("radius"), where + ".radius");
        const auto sp = NormedSpace::make(c.empty() ? 1 : c.size(), doc.norm, doc.norm_p);
        doc.ball = Ball{std::move(c), r, sp};
        validate(*doc.ball);
    } else {
        parse_fail(where + ": unknown enclosure type '" + type + "'");
    }
}

}  // namespace detail

[[nodiscard]] inline InputDocument parse_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    } catch (const json::out_of_range& e) {
        throw Error(ErrorCode::NonFinite, std::string("number out of range: ") + e.what());
    }
    if (!j.is_object()) parse_fail("top level must be an object");

    InputDocument doc;
    doc.digest = fnv1a64(text);
    if (j.contains("metadata")) doc.metadata = j["metadata"];
    if (j.contains("norm")) {
        const json& n = j["norm"];
        if (n.is_string()) {
            doc.norm = parse_norm_family(n.get<std::string>());
        } else if (n.is_object() && n.contains("family") && n["family"].is_string()) {
            doc.norm = parse_norm_family(n["family"].get<std::string>());
            if (n.contains("p")) {
                if (n["p"].is_string() && detail::lower(n["p"].get<std::string>()) == "inf") {
                    doc.norm_p = std::numeric_limits<double>::infinity();
                } else {
                    doc.norm_p = detail::number(n["p"], "norm.p");
                }
            }
        } else {
            parse_fail("norm: expected {family, p?}");
        }
    }
    if (j.contains("field")) {
        if (!j["field"].is_string()) parse_fail("field: expected REAL or COMPLEX");
        const std::string f = detail::lower(j["field"].get<std::string>());
        if (f == "real") {
            doc.field = ScalarField::Real;
        } else if (f == "complex") {
            doc.field = ScalarField::Complex;
        } else {
            parse_fail("field: expected REAL or COMPLEX");
        }
    }
    if (j.contains("weights")) doc.weights = detail::reals(j["weights"], "weights");
    if (j.contains("alpha")) doc.alpha = detail::scalar_seq(j["alpha"], "alpha");
    if (j.contains("beta")) doc.beta = detail::scalar_seq(j["beta"], "beta");

    std::size_t dim = 0;
    if (j.contains("vectors")) {
        const json& v = j["vectors"];
        if (!v.is_array()) parse_fail("vectors: expected an array of points");
        std::vector<Vec> pts;
        for (std::size_t i = 0; i < v.size(); ++i) pts.push_back(detail::point(v[i], "vectors[" + std::to_string(i) + "]"));
        if (pts.empty()) throw Error(ErrorCode::EmptyInput, "vectors is empty");
        dim = pts.front().size();
        if (dim == 0) throw Error(ErrorCode::EmptyInput, "vectors[0] has no coordinates");
        bool complex = doc.field == ScalarField::Complex;
        if (!doc.field) {
            for (const auto& p : pts) complex = complex || !is_real(p);
            if (doc.alpha) complex = complex || !is_real(*doc.alpha);
        }
        const auto sp = NormedSpace::make(dim, doc.norm, doc.norm_p, complex ? ScalarField::Complex : ScalarField::Real);
        doc.vectors = VectorSeq(sp, std::move(pts));
    }
    if (!doc.alpha && !doc.vectors) parse_fail("input needs at least one of 'alpha' or 'vectors'");

    if (j.contains("enclosure")) {
        const json& e = j["enclosure"];
        if (e.is_array()) {
            for (std::size_t i = 0; i < e.size(); ++i) detail::enclosure(e[i], doc, dim, "enclosure[" + std::to_string(i) + "]");
        } else {
            detail::enclosure(e, doc, dim, "enclosure");
        }
    }

    const std::size_t n = doc.size();
    if (doc.alpha && doc.vectors) gruss::detail::require_same_length(doc.alpha->size(), doc.vectors->size(), "alpha/vectors");
    if (doc.weights) gruss::detail::require_same_length(doc.weights->size(), n, "weights");
    if (doc.beta) gruss::detail::require_same_length(doc.beta->size(), n, "beta");
    if (n == 0) throw Error(ErrorCode::EmptyInput, "sequences are empty");
    return doc;
}

/// CSV with header `weight,alpha,x`: real scalar data with one-dimensional points.
[[nodiscard]] inline InputDocument parse_csv(std::string_view text) {
    InputDocument doc;
    doc.digest = fnv1a64(text);
    std::vector<double> w, a, x;
    std::size_t line_no = 0;
    bool header = false;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        if (!header) {
            if (detail::lower(std::string(line)) != "weight,alpha,x") parse_fail("CSV header must be 'weight,alpha,x'");
            header = true;
            continue;
        }
        double cells[3];
        std::size_t start = 0;
        for (int c = 0; c < 3; ++c) {
            std::size_t comma = line.find(',', start);
            if ((c < 2) != (comma != std::string_view::npos)) {
                parse_fail("CSV line " + std::to_string(line_no) + ": expected 3 columns");
            }
            if (comma == std::string_view::npos) comma = line.size();
            std::string_view cell = line.substr(start, comma - start);
            while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
            while (!cell.empty() && cell.back() == ' ') cell.remove_suffix(1);
            const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), cells[c]);
            if (ec != std::errc() || ptr != cell.data() + cell.size()) {
                parse_fail("CSV line " + std::to_string(line_no) + ": bad number '" + std::string(cell) + "'");
            }
            start = comma + 1;
        }
        w.push_back(cells[0]);
        a.push_back(cells[1]);
        x.push_back(cells[2]);
    }
    if (!header) parse_fail("CSV input is empty");
    if (w.empty()) throw Error(ErrorCode::EmptyInput, "CSV has no data rows");
    doc.weights = w;
    doc.alpha = real_scalars(a);
    std::vector<std::vector<double>> pts;
    for (double v : x) pts.push_back({v});
    doc.vectors = VectorSeq::from_real(NormedSpace::make(1, NormFamily::L2), pts);
    return doc;
}

/// JSON unless the path ends in .csv.
[[nodiscard]] inline InputDocument load_input(const std::string& path) {
    const std::string text = read_file(path);
    if (path.size() >= 4 && detail::lower(path.substr(path.size() - 4)) == ".csv") return parse_csv(text);
    return parse_json(text);
}

enum class RowStatus { Ok, Skipped, Violation };

[[nodiscard]] constexpr std::string_view to_string(RowStatus s) noexcept {
    switch (s) {
        case RowStatus::Ok: return "OK";
        case RowStatus::Skipped: return "SKIPPED";
        case RowStatus::Violation: return "VIOLATION";
    }
    return "?";
}

/// One line of a report: a bound evaluated in some context, or a skipped bound with its reason.
struct Row {
    std::string id;
    std::string context;
    std::optional<double> gap;
    std::optional<double> bound;
    std::optional<double> ratio;
    RowStatus status = RowStatus::Ok;
    std::string reason;
    json extra = json::object();
};

struct Report {
    std::string command;
    std::vector<std::string> args;
    std::string input_digest;
    std::uint64_t seed = 0;
    Tolerance tol;
    json metadata;
    std::vector<Row> rows;

    /// Adds every entry of a bound report, marking any that fail the tolerance.
    void add(const BoundReport& r, const std::string& context) {
        for (const auto& e : r.entries) {
            Row row;
            row.id = e.id;
            row.context = context;
            row.gap = r.gap;
            row.bound = e.bound;
            if (std::isfinite(e.ratio)) row.ratio = e.ratio;
            row.status = holds(r.gap, e.bound, tol) ? RowStatus::Ok : RowStatus::Violation;
            rows.push_back(std::move(row));
        }
    }

    void skip(std::string id, std::string context, std::string reason) {
        Row row;
        row.id = std::move(id);
        row.context = std::move(context);
        row.status = RowStatus::Skipped;
        row.reason = std::move(reason);
        rows.push_back(std::move(row));
    }

    [[nodiscard]] std::size_t count(RowStatus s) const {
        std::size_t k = 0;
        for (const auto& r : rows) k += r.status == s;
        return k;
    }

    [[nodiscard]] bool violated() const { return count(RowStatus::Violation) > 0; }
};

inline constexpr std::string_view kToolName = "gruss";

namespace detail {

inline json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

inline std::string csv_number(const std::optional<double>& v) {
    return v ? gruss::detail::format_double(*v) : std::string();
}

inline std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

}  // namespace detail

[[nodiscard]] inline json to_json(const Report& r) {
    json rows = json::array();
    double max_ratio = 0.0;
    for (const auto& row : r.rows) {
        json j = {{"id", row.id},
                  {"context", row.context},
                  {"gap", detail::optional_number(row.gap)},
                  {"bound", detail::optional_number(row.bound)},
                  {"ratio", detail::optional_number(row.ratio)},
                  {"status", std::string(to_string(row.status))}};
        if (!row.reason.empty()) j["reason"] = row.reason;
        for (const auto& [k, v] : row.extra.items()) j[k] = v;
        if (row.ratio) max_ratio = std::max(max_ratio, *row.ratio);
        rows.push_back(std::move(j));
    }
    json out = {{"tool", kToolName},
                {"version", kVersion},
                {"command", r.command},
                {"args", r.args},
                {"input_digest", r.input_digest},
                {"seed", r.seed},
                {"tolerance", {{"rel", r.tol.rel}, {"abs", r.tol.abs}}},
                {"rows", std::move(rows)},
                {"summary",
                 {{"rows", r.rows.size()},
                  {"ok", r.count(RowStatus::Ok)},
                  {"skipped", r.count(RowStatus::Skipped)},
                  {"violations", r.count(RowStatus::Violation)},
                  {"max_ratio", max_ratio}}},
                {"verdict", r.violated() ? "VIOLATION" : "PASS"}};
    if (!r.metadata.is_null() && !r.metadata.empty()) out["metadata"] = r.metadata;
    return out;
}

/// Two-space indented JSON with a trailing newline. Numbers use the shortest
/// representation that reads back to the same double.
[[nodiscard]] inline std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

/// One row per bound, numbers with 17 significant digits.
[[nodiscard]] inline std::string render_csv(const Report& r) {
    std::string s = "command,id,context,gap,bound,ratio,status,reason\n";
    for (const auto& row : r.rows) {
        s += detail::csv_cell(r.command) + "," + detail::csv_cell(row.id) + "," + detail::csv_cell(row.context) + "," +
             detail::csv_number(row.gap) + "," + detail::csv_number(row.bound) + "," +
             detail::csv_number(row.ratio) + "," + std::string(to_string(row.status)) + "," +
             detail::csv_cell(row.reason) + "\n";
    }
    return s;
}

/// Checks a report document for internal consistency; returns the problems found.
[[nodiscard]] inline std::vector<std::string> validate_report(const json& j) {
    std::vector<std::string> problems;
    auto require = [&](const char* key, bool ok) {
        if (!ok) problems.push_back(std::string("field '") + key + "' missing or of the wrong type");
        return ok;
    };
    if (!j.is_object()) return {"report is not a JSON object"};
    require("tool", j.contains("tool") && j["tool"] == kToolName);
    require("version", j.contains("version") && j["version"].is_string());
    require("command", j.contains("command") && j["command"].is_string());
    require("input_digest", j.contains("input_digest") && j["input_digest"].is_string());
    require("seed", j.contains("seed") && j["seed"].is_number_unsigned());
    const bool tol_ok = require("tolerance", j.contains("tolerance") && j["tolerance"].is_object() &&
                                                 j["tolerance"].contains("rel") && j["tolerance"]["rel"].is_number() &&
                                                 j["tolerance"].contains("abs") && j["tolerance"]["abs"].is_number());
    const bool rows_ok = require("rows", j.contains("rows") && j["rows"].is_array());
    require("summary", j.contains("summary") && j["summary"].is_object());
    require("verdict", j.contains("verdict") && j["verdict"].is_string());
    if (!tol_ok || !rows_ok || !problems.empty()) return problems;

    const Tolerance tol{j["tolerance"]["rel"].get<double>(), j["tolerance"]["abs"].get<double>()};
    std::size_t violations = 0, skipped = 0;
    for (std::size_t i = 0; i < j["rows"].size(); ++i) {
        const json& row = j["rows"][i];
        const std::string at = "rows[" + std::to_string(i) + "]";
        if (!row.is_object() || !row.contains("id") || !row.contains("status") || !row["status"].is_string()) {
            problems.push_back(at + ": needs id and status");
            continue;
        }
        const std::string status = row["status"].get<std::string>();
        if (status == "SKIPPED") {
            ++skipped;
            if (!row.contains("reason")) problems.push_back(at + ": skipped row without a reason");
            continue;
        }
        if (status == "VIOLATION") {
            ++violations;
            continue;
        }
        if (status != "OK") {
            problems.push_back(at + ": unknown status '" + status + "'");
            continue;
        }
        if (!row.contains("gap") || !row["gap"].is_number() || !row.contains("bound") || !row["bound"].is_number()) {
            problems.push_back(at + ": OK row needs numeric gap and bound");
            continue;
        }
        const double gap = row["gap"].get<double>(), bound = row["bound"].get<double>();
        if (!holds(gap, bound, tol)) problems.push_back(at + ": gap exceeds bound but status is OK");
        if (row.contains("ratio") && row["ratio"].is_number() && row["ratio"].get<double>() > 1.0 + tol.rel) {
            problems.push_back(at + ": ratio above 1 + tol.rel but status is OK");
        }
    }
    const json& s = j["summary"];
    if (!s.contains("violations") || s["violations"] != violations) problems.push_back("summary.violations does not match rows");
    if (!s.contains("skipped") || s["skipped"] != skipped) problems.push_back("summary.skipped does not match rows");
    if (!s.contains("rows") || s["rows"] != j["rows"].size()) problems.push_back("summary.rows does not match rows");
    const std::string expected = violations > 0 ? "VIOLATION" : "PASS";
    if (j["verdict"] != expected) problems.push_back("verdict should be " + expected);
    return problems;
}

}  // namespace gruss::io
