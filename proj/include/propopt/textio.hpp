#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace propopt::textio {

// Lossless decimal rendering of a double (17 significant digits, '.' decimal).
std::string g17(double v);

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& line, char sep);
// Splits on runs of spaces/tabs, skipping empty tokens.
std::vector<std::string> split_ws(const std::string& line);

// Strict parsers; `context` goes into the ParseError message.
double parse_double(const std::string& tok, const std::string& context);
long parse_long(const std::string& tok, const std::string& context);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// "# key = value" metadata lines used by several CSV formats.
std::string format_meta(const std::map<std::string, std::string>& meta);
void parse_meta_line(const std::string& line, std::map<std::string, std::string>& meta);

// FNV-1a 64-bit, used to fingerprint input files in sidecar metadata.
std::uint64_t fnv1a(const std::string& bytes);

}  // namespace propopt::textio
