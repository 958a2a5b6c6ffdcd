#pragma once

#include <filesystem>

#include "oor/topology.hpp"

namespace oor {

/// Directory holding the bundled datasets. Resolution order: the
/// OOR_DATA_DIR environment variable, the install data directory, the
/// source-tree data directory. Missing everywhere raises errc::validation.
std::filesystem::path default_data_dir();

inline constexpr const char* k_eval_topology_file = "topology24.json";

/// Path to the bundled 24-node evaluation topology document.
std::filesystem::path bundled_topology_path();

/// Loads a topology document from a file; errc::validation when the file
/// does not exist, errc::parse/validation from the document itself.
TopologyDocument load_topology_file(const std::filesystem::path& file);

/// Convenience: the bundled evaluation document.
TopologyDocument load_bundled_topology();

}  // namespace oor
