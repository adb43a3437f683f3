#pragma once

#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <json.hpp>

#include "chekanov/dga.hpp"

namespace testutil {

inline std::string data_dir() {
  if (const char* p = std::getenv("CHEKANOV_DATA_DIR")) return p;
  return "data";
}

inline std::string expected_dir() {
  if (const char* p = std::getenv("CHEKANOV_EXPECTED_DIR")) return p;
  return "expected";
}

inline nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline chek::DgaPtr load_dga(const std::string& path) {
  return std::make_shared<chek::Dga>(chek::dga_from_json(load_json(path)));
}

inline chek::DgaPtr m946() { return load_dga(data_dir() + "/m9_46.dga.json"); }

}  // namespace testutil
