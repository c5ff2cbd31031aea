/**
 * @file io.hpp
 * @brief Front file reading/writing and the machine-readable result record.
 *
 * Front file format: UTF-8 text, '#' starts a comment line, one point per
 * line with coordinates separated by commas and/or whitespace, decimal
 * floats with optional exponent, all rows of equal arity. Doubles are
 * written with 17 significant digits so files and records round-trip
 * exactly.
 */

#ifndef HVSPLIT_IO_HPP
#define HVSPLIT_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hvsplit/core.hpp"
#include "hvsplit/splitter.hpp"

namespace hvsplit {

/// Filesystem-level failure (open/read/write).
struct IoError : Error {
    using Error::Error;
};

/// Malformed front file; carries the 1-based line number.
struct ParseError : Error {
    ParseError(int line_number, const std::string& message)
        : Error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
    int line;
};

/// Shortest-width 17-significant-digit rendering; round-trips any double.
std::string format_double(double value);

Front parse_front(std::istream& in);

/// Reads a front from a file. Throws Error on I/O failure, ParseError on
/// malformed content.
Front read_front_file(const std::string& path);

void write_front(std::ostream& out, const Front& front,
                 const std::vector<std::string>& header_comments);

void write_front_file(const std::string& path, const Front& front,
                      const std::vector<std::string>& header_comments);

/// One computation result, as printed by the CLI.
struct ResultRecord {
    std::string algorithm;
    int n = 0;
    int d = 0;
    std::vector<double> ref;
    double volume = 0.0;
    RecursionStats stats;
    double wall_time_s = 0.0;
};

/// Line-oriented key=value rendering. Fields match the JSON rendering.
std::string to_key_value(const ResultRecord& record);

/// JSON rendering with identical fields.
std::string to_json_string(const ResultRecord& record);

/// Parses the key=value rendering back; inverse of to_key_value.
ResultRecord parse_key_value(const std::string& text);

}  // namespace hvsplit

#endif  // HVSPLIT_IO_HPP
