#include "airswarm/trace_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "airswarm/errors.hpp"

namespace airswarm {

std::string format_serialized(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_csv(const Trace& trace, std::ostream& out) {
    out << "t_s,waypoint_index,entropy_bits_m,centre_goal_dist_m";
    for (std::size_t i = 0; i < trace.airship_count; ++i) {
        const std::string p = "a" + std::to_string(i) + "_";
        out << ',' << p << "pn_m" << ',' << p << "pe_m" << ',' << p << "pd_m" << ',' << p
            << "yaw_rad" << ',' << p << "u_mps" << ',' << p << "v_mps" << ',' << p << "r_radps"
            << ',' << p << "u_ref_mps" << ',' << p << "r_ref_radps" << ',' << p << "mode" << ','
            << p << "beta_rad" << ',' << p << "goal_dist_m";
    }
    out << '\n';
    for (const TraceRecord& rec : trace.records) {
        out << format_serialized(rec.t_s) << ',' << rec.waypoint_index << ','
            << format_serialized(rec.entropy_bits_m) << ','
            << format_serialized(rec.centre_goal_dist_m);
        for (const AirshipRecord& a : rec.airships) {
            out << ',' << format_serialized(a.pn_m) << ',' << format_serialized(a.pe_m) << ','
                << format_serialized(a.pd_m) << ',' << format_serialized(a.yaw_rad) << ','
                << format_serialized(a.u_mps) << ',' << format_serialized(a.v_mps) << ','
                << format_serialized(a.r_radps) << ',' << format_serialized(a.u_ref_mps) << ','
                << format_serialized(a.r_ref_radps) << ',' << a.mode << ','
                << format_serialized(a.beta_rad) << ',' << format_serialized(a.goal_dist_m);
        }
        out << '\n';
    }
}

void write_csv(const Trace& trace, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("write_csv: cannot open " + path.string());
    write_csv(trace, out);
    if (!out) throw IoError("write_csv: failed writing " + path.string());
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

double to_double(const std::string& s, const char* what) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) throw IoError(std::string("read_trace_csv: bad number in ") + what);
    return v;
}

}  // namespace

Trace read_trace_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("read_trace_csv: cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw IoError("read_trace_csv: empty file " + path.string());
    const std::vector<std::string> header = split_csv_line(line);
    constexpr std::size_t kFixed = 4;
    constexpr std::size_t kPerShip = 12;
    if (header.size() < kFixed || (header.size() - kFixed) % kPerShip != 0) {
        throw IoError("read_trace_csv: unexpected column count in " + path.string());
    }
    Trace trace;
    trace.airship_count = (header.size() - kFixed) / kPerShip;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() != header.size()) {
            throw IoError("read_trace_csv: ragged row in " + path.string());
        }
        TraceRecord rec;
        rec.t_s = to_double(f[0], "t_s");
        rec.waypoint_index = static_cast<int>(to_double(f[1], "waypoint_index"));
        rec.entropy_bits_m = to_double(f[2], "entropy_bits_m");
        rec.centre_goal_dist_m = to_double(f[3], "centre_goal_dist_m");
        for (std::size_t i = 0; i < trace.airship_count; ++i) {
            const std::size_t base = kFixed + i * kPerShip;
            AirshipRecord a;
            a.pn_m = to_double(f[base + 0], "pn_m");
            a.pe_m = to_double(f[base + 1], "pe_m");
            a.pd_m = to_double(f[base + 2], "pd_m");
            a.yaw_rad = to_double(f[base + 3], "yaw_rad");
            a.u_mps = to_double(f[base + 4], "u_mps");
            a.v_mps = to_double(f[base + 5], "v_mps");
            a.r_radps = to_double(f[base + 6], "r_radps");
            a.u_ref_mps = to_double(f[base + 7], "u_ref_mps");
            a.r_ref_radps = to_double(f[base + 8], "r_ref_radps");
            a.mode = static_cast<int>(to_double(f[base + 9], "mode"));
            a.beta_rad = to_double(f[base + 10], "beta_rad");
            a.goal_dist_m = to_double(f[base + 11], "goal_dist_m");
            rec.airships.push_back(a);
        }
        trace.records.push_back(std::move(rec));
    }
    return trace;
}

void write_metrics(const MetricsSummary& summary, std::ostream& out) {
    nlohmann::json j;
    j["transient_s"] = summary.transient_s;
    auto stats_json = [](const MetricStats& s) {
        return nlohmann::json{{"mean_m", s.mean_m},
                              {"std_m", s.std_m},
                              {"max_m", s.max_m},
                              {"samples", s.samples}};
    };
    j["swarm_centre"] = stats_json(summary.swarm_centre);
    j["per_airship"] = nlohmann::json::array();
    for (const MetricStats& s : summary.per_airship) j["per_airship"].push_back(stats_json(s));
    out << j.dump(2) << '\n';
}

void write_metrics(const MetricsSummary& summary, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("write_metrics: cannot open " + path.string());
    write_metrics(summary, out);
}

namespace {

std::string fmt2(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

}  // namespace

void write_svg(const Trace& trace, std::ostream& out) {
    constexpr double kCanvas = 860.0;
    constexpr double kMargin = 60.0;

    double min_n = 0.0, max_n = 0.0, min_e = 0.0, max_e = 0.0;
    bool first = true;
    for (const TraceRecord& rec : trace.records) {
        for (const AirshipRecord& a : rec.airships) {
            if (first) {
                min_n = max_n = a.pn_m;
                min_e = max_e = a.pe_m;
                first = false;
            }
            min_n = std::min(min_n, a.pn_m);
            max_n = std::max(max_n, a.pn_m);
            min_e = std::min(min_e, a.pe_m);
            max_e = std::max(max_e, a.pe_m);
        }
    }
    const double span = std::max({max_n - min_n, max_e - min_e, 1.0});
    const double scale = (kCanvas - 2.0 * kMargin) / span;
    const double cn = 0.5 * (min_n + max_n);
    const double ce = 0.5 * (min_e + max_e);
    auto sx = [&](double e) { return kCanvas / 2.0 + (e - ce) * scale; };
    auto sy = [&](double n) { return kCanvas / 2.0 - (n - cn) * scale; };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas
        << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas
        << "\">\n";
    out << "<rect width=\"" << kCanvas << "\" height=\"" << kCanvas
        << "\" fill=\"white\" stroke=\"#444\"/>\n";
    out << "<text x=\"12\" y=\"20\" font-family=\"sans-serif\" font-size=\"13\">north up / east "
           "right; span "
        << fmt2(span) << " m; glyphs every 20 s</text>\n";

    for (std::size_t i = 0; i < trace.airship_count; ++i) {
        const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" points=\"";
        for (const TraceRecord& rec : trace.records) {
            out << fmt2(sx(rec.airships[i].pe_m)) << ',' << fmt2(sy(rec.airships[i].pn_m)) << ' ';
        }
        out << "\"/>\n";

        // Oriented glyph every 20 simulated seconds.
        double next_glyph = 0.0;
        for (const TraceRecord& rec : trace.records) {
            if (rec.t_s + 1e-9 < next_glyph) continue;
            next_glyph += 20.0;
            const AirshipRecord& a = rec.airships[i];
            const double x = sx(a.pe_m);
            const double y = sy(a.pn_m);
            const double deg = a.yaw_rad * 180.0 / 3.14159265358979323846;
            out << "<g transform=\"translate(" << fmt2(x) << ' ' << fmt2(y) << ") rotate("
                << fmt2(deg) << ")\"><polygon points=\"0,-7 3,5 -3,5\" fill=\"" << color
                << "\" fill-opacity=\"0.85\"/></g>\n";
        }
        out << "<text x=\"12\" y=\"" << fmt2(40.0 + 16.0 * static_cast<double>(i))
            << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color << "\">airship "
            << i << "</text>\n";
    }
    out << "</svg>\n";
}

void write_svg(const Trace& trace, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("write_svg: cannot open " + path.string());
    write_svg(trace, out);
    if (!out) throw IoError("write_svg: failed writing " + path.string());
}

}  // namespace airswarm
