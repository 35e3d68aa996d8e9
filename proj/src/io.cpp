#include "riw/io.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace riw {

namespace {

using nlohmann::json;

std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return in;
}

std::string variant_name(Variant v) {
  return v == Variant::RIW ? "riw" : "iw";
}
std::string cond_d_name(ConditionalD c) {
  return c == ConditionalD::PAPER_IG ? "paper_ig" : "exact_gig";
}
std::string lambda_shape_name(LambdaShape l) {
  switch (l) {
    case LambdaShape::PAPER_PLUS_ONE: return "paper";
    case LambdaShape::DERIVED: return "derived";
    default: return "exact";
  }
}

Variant parse_variant(const std::string& s) {
  if (s == "riw") return Variant::RIW;
  if (s == "iw") return Variant::IW_BASELINE;
  throw std::runtime_error("unknown prior variant: " + s);
}
ConditionalD parse_cond_d(const std::string& s) {
  if (s == "paper_ig") return ConditionalD::PAPER_IG;
  if (s == "exact_gig") return ConditionalD::EXACT_GIG;
  throw std::runtime_error("unknown conditional_d: " + s);
}
LambdaShape parse_lambda_shape(const std::string& s) {
  if (s == "paper") return LambdaShape::PAPER_PLUS_ONE;
  if (s == "derived") return LambdaShape::DERIVED;
  if (s == "exact") return LambdaShape::EXACT_CONDITIONAL;
  throw std::runtime_error("unknown lambda_shape: " + s);
}

}  // namespace

Matrix read_csv_matrix(const std::string& path) {
  std::ifstream in = open_in(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      std::size_t used = 0;
      double v;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0)
        throw std::runtime_error(path + ": malformed value at line " +
                                 std::to_string(lineno));
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::runtime_error(path + ": ragged row at line " +
                               std::to_string(lineno));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error(path + ": empty matrix");
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.front().size(); ++j)
      m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

void write_csv_matrix(const std::string& path, const Matrix& m) {
  std::ofstream out = open_out(path);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << fmt17(m(i, j));
    }
    out << '\n';
  }
}

void write_csv_vector(const std::string& path, const Vector& v) {
  std::ofstream out = open_out(path);
  for (int i = 0; i < v.size(); ++i) out << fmt17(v(i)) << '\n';
}

void write_edge_list(const std::string& path,
                     const std::vector<std::pair<int, int>>& edges) {
  std::ofstream out = open_out(path);
  out << "i,j\n";
  for (const auto& [i, j] : edges) out << i + 1 << ',' << j + 1 << '\n';
}

std::vector<std::pair<int, int>> read_edge_list(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  bool first = true;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (first) {
      first = false;
      continue;  // header
    }
    int i, j;
    if (std::sscanf(line.c_str(), "%d,%d", &i, &j) != 2)
      throw std::runtime_error(path + ": malformed edge at line " +
                               std::to_string(lineno));
    edges.emplace_back(i - 1, j - 1);
  }
  return edges;
}

Adjacency edges_to_adjacency(const std::vector<std::pair<int, int>>& edges,
                             int p) {
  Adjacency adj = Adjacency::Zero(p, p);
  for (const auto& [i, j] : edges) {
    if (i < 0 || j < 0 || i >= p || j >= p)
      throw std::runtime_error("edge index out of range");
    adj(i, j) = adj(j, i) = 1;
  }
  adj.diagonal().setZero();
  return adj;
}

std::vector<std::pair<int, int>> adjacency_to_edges(const Adjacency& adj) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < adj.rows(); ++i)
    for (int j = i + 1; j < adj.cols(); ++j)
      if (adj(i, j)) edges.emplace_back(i, j);
  return edges;
}

void write_dot(const std::string& path, const Adjacency& adj) {
  std::ofstream out = open_out(path);
  out << "graph g {\n";
  for (int i = 0; i < adj.rows(); ++i) out << "  " << i + 1 << ";\n";
  for (int i = 0; i < adj.rows(); ++i)
    for (int j = i + 1; j < adj.cols(); ++j)
      if (adj(i, j)) out << "  " << i + 1 << " -- " << j + 1 << ";\n";
  out << "}\n";
}

void write_draws(const std::string& path, const std::vector<StoredDraw>& draws,
                 int p) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  const char magic[4] = {'R', 'I', 'W', 'C'};
  const std::uint32_t version = 1, up = static_cast<std::uint32_t>(p),
                      count = static_cast<std::uint32_t>(draws.size());
  out.write(magic, 4);
  out.write(reinterpret_cast<const char*>(&version), 4);
  out.write(reinterpret_cast<const char*>(&up), 4);
  out.write(reinterpret_cast<const char*>(&count), 4);
  for (const auto& dr : draws) {
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) {
        const double v = dr.omega(i, j);
        out.write(reinterpret_cast<const char*>(&v), 8);
      }
    out.write(reinterpret_cast<const char*>(dr.d.data()), 8 * p);
    out.write(reinterpret_cast<const char*>(dr.lambda.data()), 8 * p);
  }
}

std::vector<StoredDraw> read_draws(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  char magic[4];
  std::uint32_t version, up, count;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&version), 4);
  in.read(reinterpret_cast<char*>(&up), 4);
  in.read(reinterpret_cast<char*>(&count), 4);
  if (!in || std::string(magic, 4) != "RIWC" || version != 1)
    throw std::runtime_error(path + ": not a version-1 draw file");
  const int p = static_cast<int>(up);
  std::vector<StoredDraw> draws(count);
  for (auto& dr : draws) {
    dr.omega = Matrix(p, p);
    dr.d = Vector(p);
    dr.lambda = Vector(p);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) {
        double v;
        in.read(reinterpret_cast<char*>(&v), 8);
        dr.omega(i, j) = v;
      }
    in.read(reinterpret_cast<char*>(dr.d.data()), 8 * p);
    in.read(reinterpret_cast<char*>(dr.lambda.data()), 8 * p);
    if (!in) throw std::runtime_error(path + ": truncated draw file");
  }
  return draws;
}

void save_chain_samples(const std::string& dir, const ChainSamples& samples) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);

  json meta;
  meta["p"] = samples.p;
  meta["iters"] = samples.iters;
  meta["burnin"] = samples.burnin;
  meta["thin"] = samples.thin;
  meta["kept"] = samples.kept;
  meta["seed"] = samples.seed;
  meta["stream"] = samples.stream;
  meta["hyper"]["b"] = samples.hyper.b;
  meta["hyper"]["a_lambda"] = std::vector<double>(
      samples.hyper.a_lambda.data(),
      samples.hyper.a_lambda.data() + samples.hyper.a_lambda.size());
  meta["hyper"]["b_lambda"] = std::vector<double>(
      samples.hyper.b_lambda.data(),
      samples.hyper.b_lambda.data() + samples.hyper.b_lambda.size());
  meta["hyper"]["variant"] = variant_name(samples.hyper.variant);
  meta["hyper"]["conditional_d"] = cond_d_name(samples.hyper.conditional_d);
  meta["hyper"]["lambda_shape"] = lambda_shape_name(samples.hyper.lambda_shape);
  meta["convention"]["wishart_df"] = "standard df = b + n + p - 1";
  meta["has_draws"] = !samples.stored.empty();
  open_out(dir + "/meta.json") << meta.dump(2) << '\n';

  write_csv_matrix(dir + "/omega_mean.csv", samples.omega_mean);
  for (int k = 0; k < samples.p; ++k) {
    const std::string tag = std::to_string(k + 1);
    write_csv_vector(dir + "/beta_hat_" + tag + ".csv",
                     samples.node_moments[static_cast<std::size_t>(k)].mean);
    write_csv_matrix(dir + "/sigma_hat_" + tag + ".csv", samples.node_cov(k));
  }
  if (!samples.stored.empty())
    write_draws(dir + "/draws.bin", samples.stored, samples.p);
}

ChainSamples load_chain_samples(const std::string& dir) {
  json meta = json::parse(open_in(dir + "/meta.json"));
  ChainSamples s;
  s.p = meta["p"];
  s.iters = meta["iters"];
  s.burnin = meta["burnin"];
  s.thin = meta["thin"];
  s.kept = meta["kept"];
  s.seed = meta["seed"];
  s.stream = meta["stream"];
  s.hyper.b = meta["hyper"]["b"];
  const std::vector<double> al = meta["hyper"]["a_lambda"],
                            bl = meta["hyper"]["b_lambda"];
  s.hyper.a_lambda = Eigen::Map<const Vector>(al.data(), al.size());
  s.hyper.b_lambda = Eigen::Map<const Vector>(bl.data(), bl.size());
  s.hyper.variant = parse_variant(meta["hyper"]["variant"]);
  s.hyper.conditional_d = parse_cond_d(meta["hyper"]["conditional_d"]);
  s.hyper.lambda_shape = parse_lambda_shape(meta["hyper"]["lambda_shape"]);

  s.omega_mean = read_csv_matrix(dir + "/omega_mean.csv");
  s.node_moments.resize(s.p);
  for (int k = 0; k < s.p; ++k) {
    const std::string tag = std::to_string(k + 1);
    auto& nm = s.node_moments[static_cast<std::size_t>(k)];
    const Matrix bh = read_csv_matrix(dir + "/beta_hat_" + tag + ".csv");
    nm.mean = bh.col(0);
    nm.cov_raw =
        read_csv_matrix(dir + "/sigma_hat_" + tag + ".csv") * double(s.kept - 1);
  }
  if (meta.value("has_draws", false))
    s.stored = read_draws(dir + "/draws.bin");
  return s;
}

}  // namespace riw
