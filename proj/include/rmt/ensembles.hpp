#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rmt/atoms.hpp"
#include "rmt/matrix.hpp"

namespace rmt {

enum class Symmetry { ComplexHermitian, RealSymmetric };

enum class TruncationPolicy { None, Clamp, Resample };

// Entry-wise enforcement of |zeta_ij| <= K. With auto_bound the bound is
// 10*log(n), fixed at sampling time.
struct Truncation {
  TruncationPolicy policy = TruncationPolicy::None;
  double bound = 0.0;
  bool auto_bound = false;

  double bound_for(std::size_t n) const;

  static Truncation none() { return {}; }
  static Truncation clamp(double k) { return {TruncationPolicy::Clamp, k, false}; }
  static Truncation resample(double k) { return {TruncationPolicy::Resample, k, false}; }
  static Truncation resample_auto() { return {TruncationPolicy::Resample, 0.0, true}; }
};

// Wigner-type ensemble: independent upper-triangular entries, off-diagonal
// law of variance 1, real diagonal law of variance c.
struct EnsembleSpec {
  std::string id = "custom";
  Symmetry symmetry = Symmetry::ComplexHermitian;
  AtomDistribution offdiag_atom;
  AtomDistribution diag_atom;
  double diag_variance_c = 1.0;
  Truncation truncation;

  void validate() const;
};

// Builtin names: gue, goe, bernoulli_complex, bernoulli_real,
// three_point_gue_matched, three_point_goe_matched.
EnsembleSpec builtin_ensemble(const std::string& name);
const std::vector<std::string>& builtin_names();

// Draws the unnormalized matrix M_n. Entry (i, j) with i <= j comes from
// the stream derive_stream(seed, {i, j}), so the result is independent of
// traversal order and thread count; the lower triangle is the exact
// conjugate of the upper.
HermitianMatrix sample_matrix(const EnsembleSpec& spec, std::size_t n,
                              std::uint64_t seed);

nlohmann::json ensemble_to_json(const EnsembleSpec& spec);
EnsembleSpec ensemble_from_json(const nlohmann::json& j);

// Accepts a builtin name, a path to a JSON spec file, or inline JSON text.
EnsembleSpec resolve_ensemble(const std::string& name_or_json);

}  // namespace rmt
