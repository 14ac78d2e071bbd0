#pragma once

#include "htype/group.hpp"

#include <array>
#include <cmath>
#include <string_view>
#include <vector>

namespace htype {

using Quadruple = std::array<ExtendedPoint, 4>;

/// X^{1/2}(p1, p2, p3, p4) = d(p1,p3) d(p2,p4) / (d(p1,p4) d(p2,p3)).
struct CrossRatioValue {
  double sqrt_value;
};

/**
 * Cross-ratio on the compactified group.
 *
 * With one point at ∞, every distance factor containing it is dropped: the
 * point occurs once in the numerator and once in the denominator, so the
 * divergent factors cancel. Throws DegenerateInput for repeated points or
 * more than one ∞.
 */
CrossRatioValue cross_ratio(const Group& group, const ExtendedPoint& p1, const ExtendedPoint& p2,
                            const ExtendedPoint& p3, const ExtendedPoint& p4);

/// The three ways to split a quadruple into diagonal pairs. `Diag13_24`
/// takes {p1, p3} and {p2, p4} as diagonals, and so on.
enum class Pairing { Diag12_34 = 0, Diag13_24 = 1, Diag14_23 = 2 };

inline constexpr std::array<Pairing, 3> kAllPairings = {Pairing::Diag12_34, Pairing::Diag13_24,
                                                        Pairing::Diag14_23};

std::string_view pairing_name(Pairing p);
Pairing parse_pairing(std::string_view name);

struct PairingDefect {
  Pairing pairing;
  double x1_sqrt;
  double x2_sqrt;
  double defect;  // x1_sqrt + x2_sqrt − 1
};

/**
 * Ptolemaean defect of one pairing. With diagonals {a, b} and {c, d}:
 *   X1 = X(a, c, d, b),  X2 = X(a, d, c, b),
 *   X1^{1/2} + X2^{1/2} − 1 = (d_ad d_bc + d_ac d_bd) / (d_ab d_cd) − 1.
 * The Ptolemaean inequality for this pairing holds iff the defect is ≥ 0.
 */
PairingDefect pairing_defect(const Group& group, const Quadruple& q, Pairing pairing);

/// All 24 orderings of S₄ collapse onto the 3 pairings above; the report
/// covers each once.
struct DefectReport {
  Quadruple quadruple;
  std::array<PairingDefect, 3> pairings;
  double min_defect;
  Pairing argmin;

  const PairingDefect& at(Pairing p) const { return pairings[static_cast<int>(p)]; }
};

DefectReport ptolemaean_defects(const Group& group, const Quadruple& q);

/// A parameter of a standard R-circle: a real λ or ∞ (either IEEE infinity).
using CircleParameter = double;

inline bool is_infinite_parameter(CircleParameter lambda) { return std::isinf(lambda); }

/// R_x ∪ {∞}: λ ↦ (λx, 0), ∞ ↦ ∞. Throws DegenerateInput if x = 0.
std::vector<ExtendedPoint> standard_rcircle(const Group& group, const Vector& x,
                                            const std::vector<CircleParameter>& lambdas);

/// True iff {λ1, λ3} interleaves {λ2, λ4} in the cyclic order of R ∪ {∞}.
/// Throws DegenerateInput for repeated parameters.
bool separates(CircleParameter l1, CircleParameter l3, CircleParameter l2, CircleParameter l4);

struct RCircleCheck {
  std::array<CircleParameter, 4> lambdas;
  Quadruple points;   // images under the similarity word
  bool separated;     // {λ1, λ3} separates {λ2, λ4}
  PairingDefect tested;  // the Diag13_24 pairing
  double tolerance;
  bool passed;        // |D| ≤ tol if separated, D ≥ −tol otherwise
};

/**
 * Places (λ1, λ2, λ3, λ4) on R_x, maps them by `word`, and checks the
 * Diag13_24 defect: equality when p1, p3 separate p2, p4, the inequality
 * otherwise.
 */
RCircleCheck rcircle_equality_check(const Group& group, const Vector& x,
                                    const std::array<CircleParameter, 4>& lambdas,
                                    const SimilarityWord& word, double tol);

}  // namespace htype
