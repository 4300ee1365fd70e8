#include "rmt/ensembles.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "rmt/errors.hpp"

namespace rmt {

using nlohmann::json;

namespace {

// Three-point law {+sqrt(3s): 1/6, -sqrt(3s): 1/6, 0: 2/3} has variance s,
// vanishing odd moments, and fourth moment 3s^2, i.e. it matches N(0, s)
// to order 4.
AtomDistribution three_point_real(double s) {
  const double v = std::sqrt(3.0 * s);
  return AtomDistribution::discrete_real(
      {{v, Rational(1, 6)}, {-v, Rational(1, 6)}, {0.0, Rational(2, 3)}});
}

AtomDistribution bernoulli_real_atom() {
  return AtomDistribution::discrete_real({{1.0, Rational(1, 2)}, {-1.0, Rational(1, 2)}});
}

AtomDistribution bernoulli_complex_atom() {
  const double h = 1.0 / std::sqrt(2.0);
  return AtomDistribution::discrete_complex({{cxd(h, h), Rational(1, 4)},
                                             {cxd(h, -h), Rational(1, 4)},
                                             {cxd(-h, h), Rational(1, 4)},
                                             {cxd(-h, -h), Rational(1, 4)}});
}

constexpr double kVarianceTol = 1e-12;

double atom_variance(const AtomDistribution& a) {
  return moment(a, 2, 0) + moment(a, 0, 2);
}

}  // namespace

double Truncation::bound_for(std::size_t n) const {
  if (policy == TruncationPolicy::None) return 0.0;
  return auto_bound ? 10.0 * std::log(static_cast<double>(std::max<std::size_t>(n, 2)))
                    : bound;
}

void EnsembleSpec::validate() const {
  offdiag_atom.validate();
  diag_atom.validate();
  if (diag_variance_c <= 0.0)
    throw Error("config-invalid", "diagonal variance c must be positive");
  if (std::abs(atom_variance(offdiag_atom) - 1.0) > kVarianceTol)
    throw Error("config-invalid", "off-diagonal atom variance must be 1");
  if (std::abs(atom_variance(diag_atom) - diag_variance_c) > kVarianceTol)
    throw Error("config-invalid", "diagonal atom variance must equal c");
  if (!diag_atom.is_real())
    throw Error("config-invalid", "diagonal atom must be real-valued");
  if (symmetry == Symmetry::RealSymmetric && !offdiag_atom.is_real())
    throw Error("config-invalid", "real symmetric ensemble needs real atoms");
  if (truncation.policy != TruncationPolicy::None && !truncation.auto_bound &&
      truncation.bound <= 0.0)
    throw Error("config-invalid", "truncation bound must be positive");
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "gue",          "goe",
      "bernoulli_complex", "bernoulli_real",
      "three_point_gue_matched", "three_point_goe_matched"};
  return names;
}

EnsembleSpec builtin_ensemble(const std::string& name) {
  EnsembleSpec s;
  s.id = name;
  s.truncation = Truncation::resample_auto();
  if (name == "gue") {
    s.symmetry = Symmetry::ComplexHermitian;
    s.offdiag_atom = AtomDistribution::complex_gaussian(0.5, 0.5, 0.0);
    s.diag_atom = AtomDistribution::real_gaussian(1.0);
    s.diag_variance_c = 1.0;
  } else if (name == "goe") {
    s.symmetry = Symmetry::RealSymmetric;
    s.offdiag_atom = AtomDistribution::real_gaussian(1.0);
    s.diag_atom = AtomDistribution::real_gaussian(2.0);
    s.diag_variance_c = 2.0;
  } else if (name == "bernoulli_complex") {
    s.symmetry = Symmetry::ComplexHermitian;
    s.offdiag_atom = bernoulli_complex_atom();
    s.diag_atom = bernoulli_real_atom();
    s.diag_variance_c = 1.0;
  } else if (name == "bernoulli_real") {
    s.symmetry = Symmetry::RealSymmetric;
    s.offdiag_atom = bernoulli_real_atom();
    s.diag_atom = bernoulli_real_atom();
    s.diag_variance_c = 1.0;
  } else if (name == "three_point_gue_matched") {
    s.symmetry = Symmetry::ComplexHermitian;
    s.offdiag_atom =
        AtomDistribution::scaled_sum(three_point_real(1.0), 1.0 / std::sqrt(2.0));
    s.diag_atom = three_point_real(1.0);
    s.diag_variance_c = 1.0;
  } else if (name == "three_point_goe_matched") {
    s.symmetry = Symmetry::RealSymmetric;
    s.offdiag_atom = three_point_real(1.0);
    s.diag_atom = three_point_real(2.0);
    s.diag_variance_c = 2.0;
  } else {
    throw Error("config-invalid", "unknown builtin ensemble '" + name + "'");
  }
  s.validate();
  return s;
}

namespace {

cxd draw_truncated(const AtomDistribution& atom, CounterRng& rng, double k,
                   TruncationPolicy policy) {
  cxd z = atom.sample(rng);
  if (policy == TruncationPolicy::None || k <= 0.0) return z;
  if (policy == TruncationPolicy::Clamp) {
    const double a = std::abs(z);
    return a > k ? z * (k / a) : z;
  }
  // Resample
  for (int tries = 0; tries < 1000; ++tries) {
    if (std::abs(z) <= k) return z;
    z = atom.sample(rng);
  }
  throw Error("config-invalid", "resample truncation bound rejects nearly all draws");
}

}  // namespace

HermitianMatrix sample_matrix(const EnsembleSpec& spec, std::size_t n,
                              std::uint64_t seed) {
  if (n < 2) throw Error("config-invalid", "matrix dimension must be at least 2");
  spec.validate();
  const double k = spec.truncation.bound_for(n);
  HermitianMatrix h(n);
  h.ensemble_id = spec.id;
  h.seed = seed;
  h.scale = Scale::M;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      CounterRng rng(derive_stream(seed, {i, j}));
      if (i == j) {
        cxd z = draw_truncated(spec.diag_atom, rng, k, spec.truncation.policy);
        h.entries(i, i) = cxd(z.real(), 0.0);
      } else {
        cxd z = draw_truncated(spec.offdiag_atom, rng, k, spec.truncation.policy);
        h.entries(i, j) = z;
        h.entries(j, i) = std::conj(z);
      }
    }
  }
  return h;
}

namespace {

json atom_to_json(const AtomDistribution& a) {
  json j;
  switch (a.kind) {
    case AtomKind::RealGaussian:
      j["kind"] = "real_gaussian";
      j["variance"] = a.variance;
      break;
    case AtomKind::ComplexGaussian:
      j["kind"] = "complex_gaussian";
      j["var_re"] = a.var_re;
      j["var_im"] = a.var_im;
      j["cov"] = a.cov;
      break;
    case AtomKind::DiscreteReal: {
      j["kind"] = "discrete_real";
      json pts = json::array();
      for (const auto& p : a.points)
        pts.push_back({{"value", p.value.real()}, {"p", p.prob.str()}});
      j["points"] = pts;
      break;
    }
    case AtomKind::DiscreteComplex: {
      j["kind"] = "discrete_complex";
      json pts = json::array();
      for (const auto& p : a.points)
        pts.push_back(
            {{"re", p.value.real()}, {"im", p.value.imag()}, {"p", p.prob.str()}});
      j["points"] = pts;
      break;
    }
    case AtomKind::ScaledSum:
      j["kind"] = "scaled_sum";
      j["base"] = atom_to_json(*a.base);
      j["scale"] = a.scale;
      break;
  }
  return j;
}

Rational prob_from_json(const json& p) {
  if (p.is_string()) return Rational::parse(p.get<std::string>());
  if (p.is_number_integer()) return Rational(p.get<std::int64_t>());
  throw Error("config-invalid",
              "probabilities must be exact, e.g. \"1/6\" (got " + p.dump() + ")");
}

AtomDistribution atom_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "real_gaussian")
    return AtomDistribution::real_gaussian(j.at("variance").get<double>());
  if (kind == "complex_gaussian")
    return AtomDistribution::complex_gaussian(j.at("var_re").get<double>(),
                                              j.at("var_im").get<double>(),
                                              j.value("cov", 0.0));
  if (kind == "discrete_real") {
    std::vector<std::pair<double, Rational>> pts;
    for (const auto& p : j.at("points"))
      pts.emplace_back(p.at("value").get<double>(), prob_from_json(p.at("p")));
    return AtomDistribution::discrete_real(std::move(pts));
  }
  if (kind == "discrete_complex") {
    std::vector<DiscretePoint> pts;
    for (const auto& p : j.at("points"))
      pts.push_back({cxd(p.at("re").get<double>(), p.at("im").get<double>()),
                     prob_from_json(p.at("p"))});
    return AtomDistribution::discrete_complex(std::move(pts));
  }
  if (kind == "scaled_sum")
    return AtomDistribution::scaled_sum(atom_from_json(j.at("base")),
                                        j.at("scale").get<double>());
  throw Error("config-invalid", "unknown atom kind '" + kind + "'");
}

}  // namespace

json ensemble_to_json(const EnsembleSpec& spec) {
  json j;
  j["id"] = spec.id;
  j["symmetry"] = spec.symmetry == Symmetry::ComplexHermitian ? "complex_hermitian"
                                                              : "real_symmetric";
  j["offdiag_atom"] = atom_to_json(spec.offdiag_atom);
  j["diag_atom"] = atom_to_json(spec.diag_atom);
  j["c"] = spec.diag_variance_c;
  json t;
  switch (spec.truncation.policy) {
    case TruncationPolicy::None: t["policy"] = "none"; break;
    case TruncationPolicy::Clamp: t["policy"] = "clamp"; break;
    case TruncationPolicy::Resample: t["policy"] = "resample"; break;
  }
  if (spec.truncation.policy != TruncationPolicy::None) {
    if (spec.truncation.auto_bound)
      t["K"] = "auto";
    else
      t["K"] = spec.truncation.bound;
  }
  j["truncation"] = t;
  return j;
}

EnsembleSpec ensemble_from_json(const json& j) {
  if (j.is_string()) return builtin_ensemble(j.get<std::string>());
  EnsembleSpec s;
  s.id = j.value("id", "custom");
  const std::string sym = j.at("symmetry").get<std::string>();
  if (sym == "complex_hermitian")
    s.symmetry = Symmetry::ComplexHermitian;
  else if (sym == "real_symmetric")
    s.symmetry = Symmetry::RealSymmetric;
  else
    throw Error("config-invalid", "unknown symmetry '" + sym + "'");
  s.offdiag_atom = atom_from_json(j.at("offdiag_atom"));
  s.diag_atom = atom_from_json(j.at("diag_atom"));
  s.diag_variance_c = j.value("c", 1.0);
  if (j.contains("truncation")) {
    const json& t = j.at("truncation");
    const std::string policy = t.value("policy", "none");
    if (policy == "none") {
      s.truncation = Truncation::none();
    } else {
      if (t.contains("K") && t.at("K").is_string()) {
        if (t.at("K").get<std::string>() != "auto")
          throw Error("config-invalid", "truncation K must be a number or \"auto\"");
        s.truncation = Truncation::resample_auto();
      } else {
        s.truncation = Truncation::resample(t.at("K").get<double>());
      }
      s.truncation.policy =
          policy == "clamp" ? TruncationPolicy::Clamp : TruncationPolicy::Resample;
      if (policy != "clamp" && policy != "resample")
        throw Error("config-invalid", "unknown truncation policy '" + policy + "'");
    }
  }
  s.validate();
  return s;
}

EnsembleSpec resolve_ensemble(const std::string& name_or_json) {
  for (const std::string& b : builtin_names())
    if (name_or_json == b) return builtin_ensemble(b);
  if (!name_or_json.empty() && name_or_json.front() == '{')
    return ensemble_from_json(json::parse(name_or_json));
  std::error_code ec;
  if (std::filesystem::exists(name_or_json, ec)) {
    std::ifstream in(name_or_json);
    json j;
    in >> j;
    return ensemble_from_json(j);
  }
  throw Error("config-invalid",
              "'" + name_or_json + "' is not a builtin ensemble, JSON text, or file");
}

}  // namespace rmt
