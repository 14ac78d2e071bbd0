#pragma once

#include "htype/group.hpp"
#include "htype/moebius.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace htype::verify {

/**
 * Coordinate sampler. Coordinates are independent normals with the given
 * scales. With `stratified` set, sample i falls in stratum i mod 4:
 *   0  plain normal draws
 *   1  central parts shrunk by 1e-3 (near the horizontal layer)
 *   2  plain draws dilated by a log-normal factor
 *   3  perturbations of an equality configuration (collinear horizontal
 *      points), left-translated by a random element
 */
struct SamplerSpec {
  double horizontal_scale = 1.0;
  double central_scale = 1.0;
  bool stratified = true;

  friend bool operator==(const SamplerSpec&, const SamplerSpec&) = default;
};

struct SuiteConfig {
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
  /// Overrides the suite's default tolerance when set.
  std::optional<double> tolerance;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
  SamplerSpec sampler;

  /// Throws htype::Error unless samples ≥ 1 and any tolerance override is > 0.
  void validate() const;
};

/// Inputs that produced a suite's worst case.
struct Witness {
  std::vector<ExtendedPoint> points;
  std::vector<double> scalars;
  std::string note;
};

struct Metric {
  std::string name;
  double value;
};

/**
 * Outcome of one suite. `passed` holds exactly when worst_violation ≤ tolerance.
 * Composite suites report, as their violation, the largest excess
 * (child violation − child tolerance) over their children, with tolerance 0.
 */
struct SuiteResult {
  std::string name;
  bool passed = false;
  double worst_violation = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;
  std::optional<std::size_t> witness_index;
  std::optional<Witness> witness;
  /// Witness scaled toward the origin while it still violates.
  std::optional<Witness> shrunk_witness;
  std::vector<Metric> metrics;
  double duration_seconds = 0.0;
  std::vector<SuiteResult> children;

  std::optional<double> metric(const std::string& name) const;
};

/// splitmix64-derived seed for chunk `index` of a stream seeded by `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Random inputs for the suites.
class Sampler {
 public:
  Sampler(const Group& group, SamplerSpec spec) : group_(&group), spec_(spec) {}

  GroupElement element(std::mt19937_64& rng) const;
  Vector horizontal(std::mt19937_64& rng) const;

  /// `count` points drawn from stratum (index mod 4) when stratified.
  std::vector<GroupElement> tuple(std::mt19937_64& rng, std::size_t count,
                                  std::size_t index) const;

 private:
  const Group* group_;
  SamplerSpec spec_;
};

/// Coordinate-wise scaling of every finite point (x ↦ s·x, t ↦ s·t).
Witness scale_witness(const Witness& w, double s);

/**
 * Bisects s ∈ (0, 1] for the smallest factor at which `violates(scale_witness(w, s))`
 * still holds, assuming it holds at s = 1. Deterministic.
 */
Witness shrink_witness(const Witness& w, const std::function<bool(const Witness&)>& violates,
                       int iterations = 48);

/// One side of an inequality lhs ≤ rhs from the gauge triangle-inequality proof.
struct ChainInequality {
  std::string_view label;
  double lhs;
  double rhs;

  double slack() const { return rhs - lhs; }
};

/**
 * The four bounds combined into the gauge triangle inequality, for
 * a = (x, t) and b = (x', t') with B = (<U^k x, x'>)_k:
 *   cauchy_schwarz_gauge  |x|²|x'|² + 16<t,t'>        ≤ g(a)² g(b)²
 *   mixed_first           |x|²<x,x'> + 4<t,B>         ≤ g(a)² |h|
 *   mixed_second          |x'|²<x,x'> + 4<t',B>       ≤ g(b)² |h|
 *   hermitian_bound       <x,x'>² + |B|²              ≤ |x|²|x'|²
 *   horizontal_bound      |x|²|x'|²                   ≤ g(a)² g(b)²
 * where g is the gauge with constant 16 and |h|² = <x,x'>² + |B|².
 */
std::array<ChainInequality, 5> inequality_chain(const HTypeAlgebra& alg, const GroupElement& a,
                                                const GroupElement& b);

/// g(ab)⁴ expanded into the six grouped terms of the triangle-inequality proof.
double expansion_fourth_power(const HTypeAlgebra& alg, const GroupElement& a,
                              const GroupElement& b);

// Individual suites. Default tolerances are given in brackets.
SuiteResult triangle_suite(const Group& g, const SuiteConfig& cfg);         // [1e-9 absolute]
SuiteResult symmetry_suite(const Group& g, const SuiteConfig& cfg);         // [1e-12 relative]
SuiteResult left_invariance_suite(const Group& g, const SuiteConfig& cfg);  // [1e-12 relative]
SuiteResult homogeneity_suite(const Group& g, const SuiteConfig& cfg);      // [1e-12 relative]
SuiteResult metric_axioms_suite(const Group& g, const SuiteConfig& cfg);    // composite
SuiteResult expansion_identity_suite(const Group& g, const SuiteConfig& cfg);  // [1e-10 relative]
SuiteResult inequality_chain_suite(const Group& g, const SuiteConfig& cfg);    // [1e-10 scaled]
SuiteResult equality_configuration_suite(const Group& g, const SuiteConfig& cfg);  // [1e-10]
SuiteResult involution_suite(const Group& g, const SuiteConfig& cfg);       // [1e-9 relative]
SuiteResult inversion_norm_suite(const Group& g, const SuiteConfig& cfg);   // [1e-9 relative]
SuiteResult iwasawa_discriminator(const Group& g, const SuiteConfig& cfg);  // [1e-9 relative]
SuiteResult normalization_calibration(const Group& g, const SuiteConfig& cfg);  // composite
SuiteResult ptolemaean_suite(const Group& g, const SuiteConfig& cfg);       // [1e-9]
SuiteResult rcircle_equality_suite(const Group& g, const SuiteConfig& cfg);  // [1e-8]
SuiteResult ptolemaean_campaign(const Group& g, const SuiteConfig& cfg);    // composite
SuiteResult reduction_identity_suite(const Group& g, const SuiteConfig& cfg);  // [1e-12 relative]
SuiteResult converse_probe_suite(const Group& g, const SuiteConfig& cfg);   // [threshold 1e-6]

/// Base suites, in the order `all` runs them. run_suite additionally accepts
/// the composites "metric-axioms", "calibration", "campaign" and "all".
const std::vector<std::string>& suite_names();

/// Runs a suite by name; "all" runs every suite and returns a composite.
SuiteResult run_suite(const std::string& name, const Group& g, const SuiteConfig& cfg);

/// Deliberate defects used to confirm the suites can fail.
enum class Mutation {
  None,
  DoubledCentralTerm,   // group law uses t + t' + <U^k x, x'>
  ScaledGenerators,     // every U^k replaced by 2 U^k
  DroppedInversionT,    // inversion numerator uses Σ U^k x instead of Σ t_k U^k x
  UnitGaugeConstant,    // gauge⁴ = |x|⁴ + |t|²
};

std::string_view mutation_name(Mutation m);
Mutation parse_mutation(std::string_view name);
const std::vector<Mutation>& all_mutations();

Group mutate(const HTypeAlgebra& alg, Mutation m);

}  // namespace htype::verify
