#include "hvsplit/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hvsplit {

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

std::string join_doubles(const std::vector<double>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += sep;
        out += format_double(values[i]);
    }
    return out;
}

}  // namespace

Front parse_front(std::istream& in) {
    Front front;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::string::size_type start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;

        Point p;
        const char* cursor = line.c_str() + start;
        while (*cursor != '\0') {
            while (*cursor == ' ' || *cursor == '\t' || *cursor == ',' ||
                   *cursor == '\r') {
                ++cursor;
            }
            if (*cursor == '\0') break;
            char* end = nullptr;
            const double value = std::strtod(cursor, &end);
            if (end == cursor) {
                throw ParseError(line_number,
                                 std::string("invalid coordinate token starting at '") +
                                     cursor + "'");
            }
            if (*end != '\0' && *end != ' ' && *end != '\t' && *end != ',' &&
                *end != '\r') {
                throw ParseError(line_number,
                                 std::string("trailing garbage after number: '") +
                                     end + "'");
            }
            p.coords.push_back(value);
            cursor = end;
        }
        if (p.coords.empty()) continue;

        if (front.points.empty()) {
            front.dimension = p.dim();
        } else if (p.dim() != front.dimension) {
            throw ParseError(line_number,
                             "row has " + std::to_string(p.dim()) +
                                 " coordinates, expected " +
                                 std::to_string(front.dimension));
        }
        front.points.push_back(std::move(p));
    }
    return front;
}

Front read_front_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return parse_front(in);
}

void write_front(std::ostream& out, const Front& front,
                 const std::vector<std::string>& header_comments) {
    for (const std::string& comment : header_comments) {
        out << "# " << comment << '\n';
    }
    for (const Point& p : front.points) {
        out << join_doubles(p.coords, ' ') << '\n';
    }
}

void write_front_file(const std::string& path, const Front& front,
                      const std::vector<std::string>& header_comments) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_front(out, front, header_comments);
    if (!out) throw IoError("write to '" + path + "' failed");
}

namespace {

std::string child_sizes_field(const std::map<int, std::uint64_t>& sizes) {
    std::string out;
    for (const auto& [size, count] : sizes) {
        if (!out.empty()) out += ',';
        out += std::to_string(size) + ':' + std::to_string(count);
    }
    return out;
}

}  // namespace

std::string to_key_value(const ResultRecord& record) {
    std::ostringstream out;
    out << "algorithm=" << record.algorithm << '\n';
    out << "n=" << record.n << '\n';
    out << "d=" << record.d << '\n';
    out << "ref=" << join_doubles(record.ref, ',') << '\n';
    out << "volume=" << format_double(record.volume) << '\n';
    out << "calls=" << record.stats.calls << '\n';
    out << "max_depth=" << record.stats.max_depth << '\n';
    out << "peak_live_points=" << record.stats.peak_live_points << '\n';
    out << "comparisons=" << record.stats.comparisons << '\n';
    out << "child_sizes=" << child_sizes_field(record.stats.child_sizes) << '\n';
    out << "wall_time_s=" << format_double(record.wall_time_s) << '\n';
    return out.str();
}

std::string to_json_string(const ResultRecord& record) {
    nlohmann::json j;
    j["algorithm"] = record.algorithm;
    j["n"] = record.n;
    j["d"] = record.d;
    j["ref"] = record.ref;
    j["volume"] = record.volume;
    j["calls"] = record.stats.calls;
    j["max_depth"] = record.stats.max_depth;
    j["peak_live_points"] = record.stats.peak_live_points;
    j["comparisons"] = record.stats.comparisons;
    nlohmann::json sizes = nlohmann::json::object();
    for (const auto& [size, count] : record.stats.child_sizes) {
        sizes[std::to_string(size)] = count;
    }
    j["child_sizes"] = sizes;
    j["wall_time_s"] = record.wall_time_s;
    return j.dump();
}

ResultRecord parse_key_value(const std::string& text) {
    ResultRecord record;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const std::string::size_type eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        if (key == "algorithm") {
            record.algorithm = value;
        } else if (key == "n") {
            record.n = std::stoi(value);
        } else if (key == "d") {
            record.d = std::stoi(value);
        } else if (key == "ref") {
            record.ref.clear();
            std::istringstream refs(value);
            std::string token;
            while (std::getline(refs, token, ',')) {
                if (!token.empty()) record.ref.push_back(std::strtod(token.c_str(), nullptr));
            }
        } else if (key == "volume") {
            record.volume = std::strtod(value.c_str(), nullptr);
        } else if (key == "calls") {
            record.stats.calls = std::stoull(value);
        } else if (key == "max_depth") {
            record.stats.max_depth = std::stoi(value);
        } else if (key == "peak_live_points") {
            record.stats.peak_live_points = std::stoull(value);
        } else if (key == "comparisons") {
            record.stats.comparisons = std::stoull(value);
        } else if (key == "child_sizes") {
            record.stats.child_sizes.clear();
            std::istringstream sizes(value);
            std::string pair;
            while (std::getline(sizes, pair, ',')) {
                const std::string::size_type colon = pair.find(':');
                if (colon == std::string::npos) continue;
                record.stats.child_sizes[std::stoi(pair.substr(0, colon))] =
                    std::stoull(pair.substr(colon + 1));
            }
        } else if (key == "wall_time_s") {
            record.wall_time_s = std::strtod(value.c_str(), nullptr);
        }
    }
    return record;
}

}  // namespace hvsplit
