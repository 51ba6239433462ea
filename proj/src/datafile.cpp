#include "properlie/datafile.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "properlie/errors.hpp"

namespace properlie {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  const std::string t = trim(s);
  if (t.empty() || t == "-") return out;
  for (const auto& part : split(t, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || part.empty()) throw DataFileError("bad integer '" + part + "'");
    out.push_back(v);
  }
  return out;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr)) throw Error("sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataFileError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DataFile parse_data_text(const std::string& text, std::size_t expected_fields, const std::string& origin) {
  DataFile df;
  df.path = origin;
  df.digest = sha256_hex(text);
  std::istringstream in(text);
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t[0] == '@') {
      df.directives.push_back(trim(t.substr(1)));
      continue;
    }
    Record r{no, split(t, '|')};
    if (expected_fields && r.fields.size() != expected_fields)
      throw DataFileError(origin + ":" + std::to_string(no) + ": expected " + std::to_string(expected_fields) +
                          " fields, found " + std::to_string(r.fields.size()));
    df.records.push_back(std::move(r));
  }
  return df;
}

DataFile read_data_file(const std::string& path, std::size_t expected_fields) {
  return parse_data_text(read_text_file(path), expected_fields, path);
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("PROPERLIE_DATA_DIR"); env && *env) return env;
  return PROPERLIE_DEFAULT_DATA_DIR;
}

std::filesystem::path data_path(const std::string& file) { return data_dir() / file; }

}  // namespace properlie
