#include "oor/dataset.hpp"

#include <cstdlib>
#include <fstream>

#include "oor/errors.hpp"

#ifndef OOR_INSTALL_DATA_DIR
#define OOR_INSTALL_DATA_DIR ""
#endif
#ifndef OOR_SOURCE_DATA_DIR
#define OOR_SOURCE_DATA_DIR ""
#endif

namespace oor {

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("OOR_DATA_DIR"); env && *env) return env;
  for (const char* candidate : {OOR_INSTALL_DATA_DIR, OOR_SOURCE_DATA_DIR}) {
    if (*candidate && std::filesystem::exists(candidate)) return candidate;
  }
  fail(errc::validation,
       "no data directory found; set OOR_DATA_DIR to the directory holding " +
           std::string(k_eval_topology_file));
}

std::filesystem::path bundled_topology_path() { return default_data_dir() / k_eval_topology_file; }

TopologyDocument load_topology_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  require(in.good(), errc::validation, "cannot open topology file: " + file.string());
  return load_topology_document(in);
}

TopologyDocument load_bundled_topology() { return load_topology_file(bundled_topology_path()); }

}  // namespace oor
