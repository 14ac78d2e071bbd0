#include "htype/group.hpp"

#include "htype/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace htype {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

const GroupElement& ExtendedPoint::finite() const {
  if (!point_) throw DegenerateInput("point at infinity has no coordinates");
  return *point_;
}

GroupElement inverse(const GroupElement& p) { return {-p.x, -p.t}; }

GroupElement dilate(double lambda, const GroupElement& p) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DegenerateInput("dilation factor must be a positive finite real, got " +
                          std::to_string(lambda));
  }
  return {lambda * p.x, (lambda * lambda) * p.t};
}

double gauge_fourth_power(const GroupElement& p, double gauge_constant) {
  const double x2 = p.x.squaredNorm();
  return x2 * x2 + gauge_constant * p.t.squaredNorm();
}

double gauge(const GroupElement& p, double gauge_constant) {
  return std::sqrt(std::sqrt(gauge_fourth_power(p, gauge_constant)));
}

Dilate::Dilate(double factor) : factor_(factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw DegenerateInput("dilation factor must be a positive finite real, got " +
                          std::to_string(factor));
  }
}

SimilarityWord& SimilarityWord::translate(GroupElement by) {
  atoms_.emplace_back(LeftTranslate{std::move(by)});
  return *this;
}

SimilarityWord& SimilarityWord::dilate(double factor) {
  atoms_.emplace_back(Dilate(factor));
  return *this;
}

SimilarityWord& SimilarityWord::invert() {
  atoms_.emplace_back(Invert{});
  return *this;
}

Group::Group(HTypeAlgebra algebra, Normalization normalization)
    : algebra_(std::move(algebra)), normalization_(normalization) {}

GroupElement Group::element(Vector x, Vector t) const {
  GroupElement p{std::move(x), std::move(t)};
  check(p);
  return p;
}

void Group::check(const GroupElement& p) const {
  algebra_.check_horizontal(p.x, "group element");
  algebra_.check_central(p.t, "group element");
}

void Group::check(const ExtendedPoint& p) const {
  if (p.is_finite()) check(p.finite());
}

GroupElement Group::multiply(const GroupElement& p, const GroupElement& q) const {
  check(p);
  check(q);
  return {p.x + q.x,
          p.t + q.t + normalization_.central_factor * algebra_.central_pairing(p.x, q.x)};
}

GroupElement Group::relative(const GroupElement& p, const GroupElement& q) const {
  check(p);
  check(q);
  // (−x_p, −t_p)(x_q, t_q)
  return {q.x - p.x,
          q.t - p.t - normalization_.central_factor * algebra_.central_pairing(p.x, q.x)};
}

double Group::gauge_fourth_power(const GroupElement& p) const {
  return htype::gauge_fourth_power(p, normalization_.gauge_constant);
}

double Group::gauge(const GroupElement& p) const {
  return htype::gauge(p, normalization_.gauge_constant);
}

double Group::distance_fourth_power(const GroupElement& p, const GroupElement& q) const {
  return gauge_fourth_power(relative(p, q));
}

double Group::distance(const ExtendedPoint& p, const ExtendedPoint& q) const {
  check(p);
  check(q);
  if (p.is_infinity() && q.is_infinity()) return 0.0;
  if (p.is_infinity() || q.is_infinity()) return std::numeric_limits<double>::infinity();
  return gauge(relative(p.finite(), q.finite()));
}

ExtendedPoint Group::inversion(const ExtendedPoint& p) const {
  check(p);
  if (p.is_infinity()) return identity();
  const GroupElement& g = p.finite();
  if (g.is_identity()) return ExtendedPoint::infinity();

  const double x2 = g.x.squaredNorm();
  const double denom = x2 * x2 + 16.0 * g.t.squaredNorm();
  const Vector twist = normalization_.inversion_uses_central
                           ? algebra_.generator_combination(g.t, g.x)
                           : algebra_.generator_combination(Vector::Ones(n()), g.x);
  return GroupElement{(-x2 * g.x + 4.0 * twist) / denom, -g.t / denom};
}

ExtendedPoint Group::apply(const SimilarityWord& word, const ExtendedPoint& p) const {
  check(p);
  ExtendedPoint current = p;
  for (const auto& atom : word.atoms()) {
    current = std::visit(
        Overloaded{
            [&](const LeftTranslate& a) -> ExtendedPoint {
              if (current.is_infinity()) return current;
              return multiply(a.by, current.finite());
            },
            [&](const Dilate& a) -> ExtendedPoint {
              if (current.is_infinity()) return current;
              return htype::dilate(a.factor(), current.finite());
            },
            [&](const Invert&) -> ExtendedPoint { return inversion(current); },
        },
        atom);
  }
  return current;
}

}  // namespace htype
