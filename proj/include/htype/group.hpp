#pragma once

#include "htype/algebra.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace htype {

/// A point exp(x, t) of the group, x ∈ R^m horizontal, t ∈ R^n central.
struct GroupElement {
  Vector x;
  Vector t;

  static GroupElement identity(int m, int n) { return {Vector::Zero(m), Vector::Zero(n)}; }
  bool is_identity() const { return x.isZero(0.0) && t.isZero(0.0); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.x.size() == b.x.size() && a.t.size() == b.t.size() && a.x == b.x && a.t == b.t;
  }
};

/// A point of the one-point compactification: a finite element or ∞.
class ExtendedPoint {
 public:
  ExtendedPoint(GroupElement p) : point_(std::move(p)) {}  // NOLINT(google-explicit-constructor)

  static ExtendedPoint infinity() { return ExtendedPoint(); }

  bool is_infinity() const noexcept { return !point_.has_value(); }
  bool is_finite() const noexcept { return point_.has_value(); }

  /// Throws DegenerateInput when called on ∞.
  const GroupElement& finite() const;

  friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) {
    return a.point_ == b.point_;
  }

 private:
  ExtendedPoint() = default;
  std::optional<GroupElement> point_;
};

/**
 * Constants of the group law, gauge and inversion.
 *
 * The default is the calibrated convention
 *   (x,t)(x',t') = (x + x', t + t' + ½ (<U^k x, x'>)_k),   gauge⁴ = |x|⁴ + 16|t|²,
 * with the inversion numerator −|x|² x + 4 Σ t_k U^k x. The other settings
 * exist to run the verification suites against deliberate mutations.
 */
struct Normalization {
  double central_factor = 0.5;
  double gauge_constant = 16.0;
  bool inversion_uses_central = true;

  friend bool operator==(const Normalization&, const Normalization&) = default;
};

GroupElement inverse(const GroupElement& p);

/// δ_λ(x, t) = (λx, λ²t). Throws DegenerateInput unless λ > 0.
GroupElement dilate(double lambda, const GroupElement& p);

/// |x|⁴ + c|t|².
double gauge_fourth_power(const GroupElement& p, double gauge_constant = 16.0);

/// (|x|⁴ + c|t|²)^{1/4}.
double gauge(const GroupElement& p, double gauge_constant = 16.0);

struct LeftTranslate {
  GroupElement by;
};

class Dilate {
 public:
  explicit Dilate(double factor);
  double factor() const noexcept { return factor_; }

 private:
  double factor_;
};

struct Invert {};

using SimilarityAtom = std::variant<LeftTranslate, Dilate, Invert>;

/// Composition of similarity atoms, applied left to right.
class SimilarityWord {
 public:
  SimilarityWord() = default;
  explicit SimilarityWord(std::vector<SimilarityAtom> atoms) : atoms_(std::move(atoms)) {}

  SimilarityWord& translate(GroupElement by);
  SimilarityWord& dilate(double factor);
  SimilarityWord& invert();

  const std::vector<SimilarityAtom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }

 private:
  std::vector<SimilarityAtom> atoms_;
};

/// An H-type group realized on R^m × R^n by an algebra and a normalization.
class Group {
 public:
  explicit Group(HTypeAlgebra algebra, Normalization normalization = {});

  const HTypeAlgebra& algebra() const noexcept { return algebra_; }
  const Normalization& normalization() const noexcept { return normalization_; }
  int m() const noexcept { return algebra_.m(); }
  int n() const noexcept { return algebra_.n(); }

  GroupElement identity() const { return GroupElement::identity(m(), n()); }
  GroupElement element(Vector x, Vector t) const;

  /// Throws DimensionMismatch unless p lives in this group.
  void check(const GroupElement& p) const;
  void check(const ExtendedPoint& p) const;

  GroupElement multiply(const GroupElement& p, const GroupElement& q) const;

  /// p⁻¹q without forming p⁻¹ separately.
  GroupElement relative(const GroupElement& p, const GroupElement& q) const;

  double gauge_fourth_power(const GroupElement& p) const;
  double gauge(const GroupElement& p) const;

  /// d(p, q)⁴ for finite points.
  double distance_fourth_power(const GroupElement& p, const GroupElement& q) const;

  /// d(p, q) = gauge(p⁻¹q); d(p, ∞) = +∞ for finite p, d(∞, ∞) = 0.
  double distance(const ExtendedPoint& p, const ExtendedPoint& q) const;

  /// σ(0) = ∞, σ(∞) = 0, otherwise
  /// σ(x, t) = ((−|x|² x + 4 Σ t_k U^k x) / N, −t / N),  N = |x|⁴ + 16|t|².
  ExtendedPoint inversion(const ExtendedPoint& p) const;

  /// Left translations and dilations fix ∞; the inversion swaps 0 and ∞.
  ExtendedPoint apply(const SimilarityWord& word, const ExtendedPoint& p) const;

 private:
  HTypeAlgebra algebra_;
  Normalization normalization_;
};

inline ExtendedPoint apply_similarity(const Group& group, const SimilarityWord& word,
                                      const ExtendedPoint& p) {
  return group.apply(word, p);
}

}  // namespace htype
