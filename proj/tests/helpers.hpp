#ifndef KHR_TESTS_HELPERS_HPP
#define KHR_TESTS_HELPERS_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "khr/dsl.hpp"

namespace test {

inline std::string data_path(const std::string& file) { return std::string(KHR_DATA_DIR) + "/" + file; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline khr::HyperringTable load(const std::string& file) { return khr::parse_hyperring(slurp(data_path(file))); }

// Subset from element labels, e.g. set(Z6, {"0","3"}).
inline khr::ElementSubset set(const khr::HyperringTable& r, std::initializer_list<const char*> labels) {
  khr::ElementSubset s;
  for (const char* l : labels) s.insert(*r.find(l));
  return s;
}

}  // namespace test

#endif
