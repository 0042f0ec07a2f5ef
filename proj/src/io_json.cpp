#include "gsalign/io_json.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

namespace gsalign {

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw std::invalid_argument("matrix_from_json: expected a nested array");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j[r].size()) != cols) {
      throw std::invalid_argument("matrix_from_json: ragged rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& e = j[r][c];
      m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

Json to_json(const GsaDesign& design) {
  Json j;
  j["route"] = design.route;
  if (design.route == "beta") {
    j["beta"] = design.beta;
    j["q"] = design.q;
  }
  j["P"] = matrix_to_json(design.P);
  j["B"] = matrix_to_json(design.B);
  Json pairs = Json::array();
  for (const auto& [a, b] : design.pair_order) {
    pairs.push_back({{"pair", {a, b}},
                     {"streams", design.served.at(a, b)},
                     {"V_forward", matrix_to_json(design.V.at({a, b}))},
                     {"V_backward", matrix_to_json(design.V.at({b, a}))}});
  }
  j["pairs"] = std::move(pairs);
  return j;
}

Json to_json(const SimReport& r) {
  Json j;
  j["K"] = r.K;
  j["M"] = r.M;
  j["N"] = r.N;
  j["extension"] = r.extension;
  j["seed"] = r.seed;
  j["noise_variance"] = r.noise_variance;
  j["feasible"] = r.feasible;
  if (!r.feasible || !r.failure.empty()) j["failure"] = r.failure;
  j["route"] = r.route;
  if (r.route == "beta") {
    j["beta"] = r.beta;
    j["q"] = r.q;
  }
  j["streams_requested"] = r.streams_requested;
  j["streams_served"] = r.streams_served;
  j["streams_delivered"] = r.streams_delivered;
  j["dof_per_channel_use"] = r.dof_per_channel_use;
  j["alignment_residual_max"] = r.alignment_residual_max;
  j["b_condition"] = r.b_condition;
  j["relay_error"] = r.relay_error;
  j["user_error_max"] = r.user_error_max;
  j["bc_dual"] = r.bc_dual;
  return j;
}

Json to_json(const BatchReport& b) {
  Json j;
  j["seeds"] = b.runs.size();
  j["failures"] = b.failures;
  j["modal_delivered"] = b.modal_delivered;
  j["median_relay_error"] = b.median_relay_error;
  j["max_user_error"] = b.max_user_error;
  j["min_dof"] = b.min_dof;
  j["median_dof"] = b.median_dof;
  j["max_dof"] = b.max_dof;
  Json runs = Json::array();
  for (const auto& r : b.runs) runs.push_back(to_json(r));
  j["runs"] = std::move(runs);
  return j;
}

Pattern pattern_from_string(const std::string& s) {
  if (s == "y") return Pattern::Y;
  if (s == "pairwise") return Pattern::Pairwise;
  if (s == "x") return Pattern::X;
  if (s == "l-cluster" || s == "lcluster") return Pattern::LCluster;
  throw std::invalid_argument("unknown traffic model: " + s);
}

std::string pattern_to_string(Pattern p) {
  switch (p) {
    case Pattern::Y: return "y";
    case Pattern::Pairwise: return "pairwise";
    case Pattern::X: return "x";
    case Pattern::LCluster: return "l-cluster";
  }
  throw std::invalid_argument("pattern_to_string: bad enum value");
}

DataSwitchMatrix RunConfig::resolve_streams() const {
  if (explicit_streams) {
    explicit_streams->validate();
    return *explicit_streams;
  }
  if (!pattern) throw std::invalid_argument("run config: no traffic model or stream matrix");
  return make_pattern(*pattern, system.K, streams_per_pair, clusters);
}

RunConfig parse_run_config(const Json& j) {
  RunConfig cfg;
  cfg.system.K = j.at("K").get<int>();
  cfg.system.M = j.at("M").get<int>();
  cfg.system.N = j.at("N").get<int>();
  cfg.system.validate();
  if (j.contains("model")) cfg.pattern = pattern_from_string(j.at("model").get<std::string>());
  if (j.contains("streams")) cfg.streams_per_pair = j.at("streams").get<int>();
  if (j.contains("L")) cfg.clusters = j.at("L").get<int>();
  if (j.contains("stream_matrix")) {
    const auto& sm = j.at("stream_matrix");
    DataSwitchMatrix D{cfg.system.K,
                       std::vector<int>(static_cast<std::size_t>(cfg.system.K) * cfg.system.K, 0)};
    if (!sm.is_array() || static_cast<int>(sm.size()) != cfg.system.K) {
      throw std::invalid_argument("run config: stream_matrix must be K rows");
    }
    for (int r = 0; r < cfg.system.K; ++r) {
      if (static_cast<int>(sm[r].size()) != cfg.system.K) {
        throw std::invalid_argument("run config: stream_matrix must be K x K");
      }
      for (int c = 0; c < cfg.system.K; ++c) D.at(r + 1, c + 1) = sm[r][c].get<int>();
    }
    D.validate();
    cfg.explicit_streams = std::move(D);
  }
  if (j.contains("seed")) {
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.seed_given = true;
  }
  if (!cfg.pattern && !cfg.explicit_streams) {
    throw std::invalid_argument("run config: provide 'model' or 'stream_matrix'");
  }
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  Json j;
  in >> j;
  return parse_run_config(j);
}

std::string format_sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  os << "#";
  for (std::size_t i = 0; i < header.size(); ++i) {
    os << (i ? "," : " ") << header[i];
  }
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      os << format_sig12(row[i]);
    }
    os << "\n";
  }
}

}  // namespace gsalign
