#pragma once

#include <string>
#include <utility>
#include <vector>

#include "riw/sampler.hpp"
#include "riw/selection.hpp"

namespace riw {

/// Headerless numeric CSV; malformed rows reported with their line number.
Matrix read_csv_matrix(const std::string& path);

/// Floats are written with 17 significant digits so round-trips are exact.
void write_csv_matrix(const std::string& path, const Matrix& m);
void write_csv_vector(const std::string& path, const Vector& v);

/// Edge lists carry an `i,j` header and 1-based node indices.
void write_edge_list(const std::string& path,
                     const std::vector<std::pair<int, int>>& edges);
std::vector<std::pair<int, int>> read_edge_list(const std::string& path);

Adjacency edges_to_adjacency(const std::vector<std::pair<int, int>>& edges,
                             int p);
std::vector<std::pair<int, int>> adjacency_to_edges(const Adjacency& adj);

void write_dot(const std::string& path, const Adjacency& adj);

/// Binary draw file: magic "RIWC", u32 version, u32 p, u32 count, then per
/// draw Omega (row-major), d, lambda as little-endian 64-bit floats.
void write_draws(const std::string& path, const std::vector<StoredDraw>& draws,
                 int p);
std::vector<StoredDraw> read_draws(const std::string& path);

/// Chain artifact directory: meta.json, omega_mean.csv, per-node
/// beta_hat_k.csv / sigma_hat_k.csv (1-based k), optional draws.bin.
void save_chain_samples(const std::string& dir, const ChainSamples& samples);
ChainSamples load_chain_samples(const std::string& dir);

}  // namespace riw
