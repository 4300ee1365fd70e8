#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rmt/empirical.hpp"
#include "rmt/ensembles.hpp"
#include "rmt/spectral.hpp"

namespace rmt {

enum class StatisticKind {
  EdgeTopK,
  EdgeBottomK,
  GapAt,
  Esd,
  DelocSup,
  StieltjesGrid,
  InterlaceBias,
  Projection,
  FourMoment,
};

struct GridSpec {
  double re_min = -3.0, re_max = 3.0;
  int re_steps = 13;
  double im_min = 0.1, im_max = 0.1;
  int im_steps = 1;

  std::vector<cxd> points() const;
};

enum class GKind { Coordinate, Product, Bump };
enum class GNormalization { None, EdgeTop, EdgeBottom };

// Test function for expectation comparisons. Coordinates are the selected
// A-scale eigenvalues, optionally edge-normalized to (x -+ 2n)/n^{1/3}.
// Kinds: first coordinate, product of coordinates, gaussian bump
// exp(-sum ((y - center)/width)^2); each has explicitly bounded
// derivatives on the scale the normalization produces.
struct GSpec {
  GKind kind = GKind::Coordinate;
  GNormalization normalize = GNormalization::None;
  double bump_center = 0.0;
  double bump_width = 1.0;

  double evaluate(std::span<const double> normalized_coords) const;
};

struct StatisticSpec {
  StatisticKind kind = StatisticKind::EdgeTopK;
  std::size_t k = 1;                   // edge statistics
  double gap_fraction = -1.0;          // gap_at: i = round(fraction * n) if >= 0
  std::int64_t gap_index = -1;         // gap_at: explicit 1-based i
  Interval interval{-1.0, 1.0};        // esd
  GridSpec grid;                       // stieltjes_grid
  std::size_t projection_d = 0;        // projection
  GSpec g;                             // four_moment
  std::vector<std::size_t> indices;    // four_moment, 1-based

  std::string name() const;
};

struct ExperimentConfig {
  std::string name = "experiment";
  std::vector<EnsembleSpec> ensembles;  // one, or two for two-sample statistics
  std::vector<std::size_t> n_values;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  StatisticSpec statistic;
  nlohmann::json thresholds = nlohmann::json::object();
  // With shared_seeds both ensembles see identical per-trial seeds.
  bool shared_seeds = false;
  int threads = 0;  // 0 = hardware concurrency

  void validate() const;
};

struct TrialRecord {
  std::size_t ensemble_index = 0;
  std::string ensemble_id;
  std::size_t n = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string stat_name;
  std::vector<double> payload;
  double wall_ms = 0.0;
  std::string error;  // empty on success

  bool ok() const { return error.empty(); }
};

// Per-trial seed: derive_stream(master, {stream, n, trial}) with stream the
// ensemble index, or 0 for every ensemble when seeds are shared.
std::uint64_t trial_seed(const ExperimentConfig& config, std::size_t ensemble_index,
                         std::size_t n, std::size_t trial);

// Runs all (ensemble, n, trial) combinations on a worker pool. The record
// set is a pure function of the config: per-trial streams are derived, and
// records come back sorted by (ensemble, n, trial). Per-trial failures are
// recorded, not thrown; only an all-failed batch raises.
std::vector<TrialRecord> run_experiment(const ExperimentConfig& config);

// Statistic payload for one trial; exposed for single-matrix CLI paths.
std::vector<double> extract_statistic(const EnsembleSpec& spec,
                                      const StatisticSpec& stat, std::size_t n,
                                      std::uint64_t seed);

// Sample values of payload[value_index] for one (ensemble, n) group.
EmpiricalDistribution distribution_of(std::span<const TrialRecord> records,
                                      std::size_t ensemble_index, std::size_t n,
                                      std::size_t value_index);

// columns: ensemble,n,trial,seed,stat_name,value_index,value,wall_ms
// wall_ms is written as 0 unless include_timing is set, keeping the file a
// pure function of the config.
void write_records_csv(std::ostream& os, std::span<const TrialRecord> records,
                       bool include_timing = false);

struct FourMomentResult {
  double diff = 0.0;
  double mc_stderr = 0.0;
  double mean_a = 0.0;
  double mean_b = 0.0;
};

// Monte Carlo comparison of E G(selected eigenvalues) between the two
// configured ensembles. With shared seeds and identical ensembles the
// difference is exactly zero.
FourMomentResult four_moment_compare(const ExperimentConfig& config);
FourMomentResult four_moment_from_records(std::span<const TrialRecord> records);

// Fraction of trials whose A-scale gap payload falls below n^{-c0}.
// Requires a gap_at statistic with a single ensemble and a single n.
double gap_tail_frequency(const ExperimentConfig& config, double c0);

// Summary JSON: per-group statistics, failures, and the threshold
// evaluation (field "pass") used for the process exit code.
nlohmann::json summarize_experiment(const ExperimentConfig& config,
                                    std::span<const TrialRecord> records);

nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& j);

}  // namespace rmt
