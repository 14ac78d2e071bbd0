#include "htype/moebius.hpp"

#include "htype/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace htype {

namespace {

void require_distinct(const Group& group, const Quadruple& q) {
  int infinite = 0;
  for (const auto& p : q) {
    group.check(p);
    infinite += p.is_infinity() ? 1 : 0;
  }
  if (infinite > 1) throw DegenerateInput("at most one point may be infinity");
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (q[i].is_infinity() || q[j].is_infinity()) continue;
      if (group.distance_fourth_power(q[i].finite(), q[j].finite()) == 0.0) {
        throw DegenerateInput("points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " coincide");
      }
    }
  }
}

// d(a, b) with factors involving ∞ replaced by 1.
double reduced_distance(const Group& group, const ExtendedPoint& a, const ExtendedPoint& b) {
  if (a.is_infinity() || b.is_infinity()) return 1.0;
  return group.distance(a, b);
}

double cross_ratio_unchecked(const Group& group, const ExtendedPoint& p1, const ExtendedPoint& p2,
                             const ExtendedPoint& p3, const ExtendedPoint& p4) {
  return (reduced_distance(group, p1, p3) * reduced_distance(group, p2, p4)) /
         (reduced_distance(group, p1, p4) * reduced_distance(group, p2, p3));
}

// Index pairs {a, b}, {c, d} (0-based) for each pairing.
std::array<int, 4> diagonal_indices(Pairing p) {
  switch (p) {
    case Pairing::Diag12_34: return {0, 1, 2, 3};
    case Pairing::Diag13_24: return {0, 2, 1, 3};
    case Pairing::Diag14_23: return {0, 3, 1, 2};
  }
  throw Error("unknown pairing");
}

PairingDefect pairing_defect_unchecked(const Group& group, const Quadruple& q, Pairing pairing) {
  const auto [a, b, c, d] = diagonal_indices(pairing);
  const double x1 = cross_ratio_unchecked(group, q[a], q[c], q[d], q[b]);
  const double x2 = cross_ratio_unchecked(group, q[a], q[d], q[c], q[b]);
  return {pairing, x1, x2, x1 + x2 - 1.0};
}

}  // namespace

CrossRatioValue cross_ratio(const Group& group, const ExtendedPoint& p1, const ExtendedPoint& p2,
                            const ExtendedPoint& p3, const ExtendedPoint& p4) {
  require_distinct(group, {p1, p2, p3, p4});
  return {cross_ratio_unchecked(group, p1, p2, p3, p4)};
}

std::string_view pairing_name(Pairing p) {
  switch (p) {
    case Pairing::Diag12_34: return "12|34";
    case Pairing::Diag13_24: return "13|24";
    case Pairing::Diag14_23: return "14|23";
  }
  return "?";
}

Pairing parse_pairing(std::string_view name) {
  for (Pairing p : kAllPairings) {
    if (pairing_name(p) == name) return p;
  }
  throw ParseError("pairing", "unknown pairing '" + std::string(name) + "'");
}

PairingDefect pairing_defect(const Group& group, const Quadruple& q, Pairing pairing) {
  require_distinct(group, q);
  return pairing_defect_unchecked(group, q, pairing);
}

DefectReport ptolemaean_defects(const Group& group, const Quadruple& q) {
  require_distinct(group, q);
  DefectReport report{q, {}, std::numeric_limits<double>::infinity(), Pairing::Diag12_34};
  for (Pairing p : kAllPairings) {
    const auto d = pairing_defect_unchecked(group, q, p);
    report.pairings[static_cast<int>(p)] = d;
    if (d.defect < report.min_defect) {
      report.min_defect = d.defect;
      report.argmin = p;
    }
  }
  return report;
}

std::vector<ExtendedPoint> standard_rcircle(const Group& group, const Vector& x,
                                            const std::vector<CircleParameter>& lambdas) {
  group.algebra().check_horizontal(x, "standard_rcircle");
  if (x.squaredNorm() == 0.0) throw DegenerateInput("R-circle direction must be nonzero");
  std::vector<ExtendedPoint> out;
  out.reserve(lambdas.size());
  for (CircleParameter lambda : lambdas) {
    if (std::isnan(lambda)) throw DegenerateInput("R-circle parameter is NaN");
    if (is_infinite_parameter(lambda)) {
      out.push_back(ExtendedPoint::infinity());
    } else {
      out.emplace_back(GroupElement{lambda * x, Vector::Zero(group.n())});
    }
  }
  return out;
}

bool separates(CircleParameter l1, CircleParameter l3, CircleParameter l2, CircleParameter l4) {
  // R ∪ {∞} is cyclically ordered by the linear order with ∞ placed last.
  auto key = [](CircleParameter l) {
    if (std::isnan(l)) throw DegenerateInput("circle parameter is NaN");
    return is_infinite_parameter(l) ? std::numeric_limits<double>::infinity() : l;
  };
  const std::array<double, 4> k = {key(l1), key(l3), key(l2), key(l4)};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (k[i] == k[j]) throw DegenerateInput("circle parameters must be distinct");
    }
  }
  const double lo = std::min(k[0], k[1]);
  const double hi = std::max(k[0], k[1]);
  const bool inside2 = lo < k[2] && k[2] < hi;
  const bool inside4 = lo < k[3] && k[3] < hi;
  return inside2 != inside4;
}

RCircleCheck rcircle_equality_check(const Group& group, const Vector& x,
                                    const std::array<CircleParameter, 4>& lambdas,
                                    const SimilarityWord& word, double tol) {
  const bool separated = separates(lambdas[0], lambdas[2], lambdas[1], lambdas[3]);
  const auto base = standard_rcircle(group, x, {lambdas.begin(), lambdas.end()});
  Quadruple points = {group.apply(word, base[0]), group.apply(word, base[1]),
                      group.apply(word, base[2]), group.apply(word, base[3])};
  const auto tested = pairing_defect(group, points, Pairing::Diag13_24);
  const bool passed = separated ? std::abs(tested.defect) <= tol : tested.defect >= -tol;
  return {lambdas, std::move(points), separated, tested, tol, passed};
}

}  // namespace htype
