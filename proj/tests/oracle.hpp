#pragma once

// Reference formulas evaluated with plain loops over std::vector. These read
// the generator entries from the algebra but share no arithmetic with the
// library, so tests can compare the two paths.

#include "htype/group.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;

struct Point {
  Vec x;
  Vec t;
};

inline Vec to_vec(const htype::Vector& v) { return Vec(v.data(), v.data() + v.size()); }

inline htype::Vector to_eigen(const Vec& v) {
  htype::Vector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
  return out;
}

inline Point from(const htype::GroupElement& p) { return {to_vec(p.x), to_vec(p.t)}; }
inline htype::GroupElement to(const Point& p) { return {to_eigen(p.x), to_eigen(p.t)}; }

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// U^k x
inline Vec apply(const htype::HTypeAlgebra& alg, int k, const Vec& x) {
  const auto& u = alg.generator(k);
  Vec out(x.size(), 0.0);
  for (std::size_t r = 0; r < x.size(); ++r) {
    for (std::size_t c = 0; c < x.size(); ++c) {
      out[r] += u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * x[c];
    }
  }
  return out;
}

inline Point multiply(const htype::HTypeAlgebra& alg, const Point& p, const Point& q) {
  Point out{p.x, p.t};
  for (std::size_t i = 0; i < q.x.size(); ++i) out.x[i] += q.x[i];
  for (int k = 0; k < alg.n(); ++k) out.t[k] += q.t[k] + 0.5 * dot(apply(alg, k, p.x), q.x);
  return out;
}

inline Point inverse(const Point& p) {
  Point out = p;
  for (auto& v : out.x) v = -v;
  for (auto& v : out.t) v = -v;
  return out;
}

inline double gauge(const Point& p) {
  const double x2 = dot(p.x, p.x);
  return std::pow(x2 * x2 + 16.0 * dot(p.t, p.t), 0.25);
}

inline double distance(const htype::HTypeAlgebra& alg, const Point& p, const Point& q) {
  return gauge(multiply(alg, inverse(p), q));
}

inline Point inversion(const htype::HTypeAlgebra& alg, const Point& p) {
  const double x2 = dot(p.x, p.x);
  const double denom = x2 * x2 + 16.0 * dot(p.t, p.t);
  Point out{Vec(p.x.size()), Vec(p.t.size())};
  for (std::size_t i = 0; i < p.x.size(); ++i) out.x[i] = -x2 * p.x[i];
  for (int k = 0; k < alg.n(); ++k) {
    const Vec ux = apply(alg, k, p.x);
    for (std::size_t i = 0; i < p.x.size(); ++i) out.x[i] += 4.0 * p.t[k] * ux[i];
  }
  for (auto& v : out.x) v /= denom;
  for (std::size_t k = 0; k < p.t.size(); ++k) out.t[k] = -p.t[k] / denom;
  return out;
}

inline htype::GroupElement random_element(std::mt19937_64& rng, int m, int n) {
  std::normal_distribution<double> normal;
  htype::GroupElement p{htype::Vector(m), htype::Vector(n)};
  for (int i = 0; i < m; ++i) p.x[i] = normal(rng);
  for (int i = 0; i < n; ++i) p.t[i] = normal(rng);
  return p;
}

inline htype::Vector random_vector(std::mt19937_64& rng, int m) {
  std::normal_distribution<double> normal;
  htype::Vector x(m);
  for (int i = 0; i < m; ++i) x[i] = normal(rng);
  return x;
}

inline double max_abs_diff(const htype::GroupElement& a, const htype::GroupElement& b) {
  return std::max((a.x - b.x).cwiseAbs().maxCoeff(), (a.t - b.t).cwiseAbs().maxCoeff());
}

inline std::vector<htype::HTypeAlgebra> builtins() {
  return {htype::HTypeAlgebra::heisenberg(1), htype::HTypeAlgebra::heisenberg(2),
          htype::HTypeAlgebra::heisenberg(3), htype::HTypeAlgebra::quaternionic(1),
          htype::HTypeAlgebra::quaternionic(2), htype::HTypeAlgebra::octonionic()};
}

// Quaternionic U^1, U^2 only: H-type but not Iwasawa.
inline htype::HTypeAlgebra truncated_quaternionic() {
  const auto q = htype::HTypeAlgebra::quaternionic(1);
  return htype::HTypeAlgebra::custom(4, 2, {q.generator(0), q.generator(1)});
}

}  // namespace oracle
