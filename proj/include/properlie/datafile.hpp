#pragma once

// Plain-text data files: '#' comments, one record per line, fields
// separated by '|'.

#include <filesystem>
#include <string>
#include <vector>

namespace properlie {

struct Record {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

struct DataFile {
  std::string path;
  std::string digest;  // sha256 of the raw bytes, hex
  std::vector<Record> records;
  std::vector<std::string> directives;  // lines starting with "@", without the marker
};

DataFile read_data_file(const std::string& path, std::size_t expected_fields);
DataFile parse_data_text(const std::string& text, std::size_t expected_fields, const std::string& origin);

std::string sha256_hex(const std::string& bytes);
std::string read_text_file(const std::string& path);

// PROPERLIE_DATA_DIR if set, else the directory baked in at build time.
std::filesystem::path data_dir();
std::filesystem::path data_path(const std::string& file);

std::string trim(std::string s);
std::vector<std::string> split(const std::string& s, char sep);
std::vector<int> parse_int_list(const std::string& s);  // "1,2,3" or "-"

}  // namespace properlie
