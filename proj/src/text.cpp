#include "text.hpp"

#include <fstream>
#include <sstream>

#include "mcg/error.hpp"

namespace mcg::text {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path);
  out << contents;
  if (!out) throw Error(ErrorCode::io, "write failed for " + path);
}

}  // namespace mcg::text
