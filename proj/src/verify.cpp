#include "htype/verify.hpp"

#include "htype/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

namespace htype::verify {

namespace {

constexpr std::size_t kChunkSize = 256;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Sampled check: draw inputs, then score them. Scoring must depend on the
// witness alone so that witnesses can be replayed and shrunk.
struct SampledSuite {
  std::string name;
  double bound;  // pass iff worst violation ≤ bound
  std::function<Witness(std::mt19937_64&, std::size_t)> generate;
  std::function<double(const Witness&)> evaluate;
  bool shrinkable = true;
  // Optional per-sample value aggregated by minimum and reported as a metric.
  std::string secondary_name{};
  std::function<double(const Witness&)> secondary{};
};

struct Best {
  double violation = -kInf;
  std::size_t index = std::numeric_limits<std::size_t>::max();
  std::optional<Witness> witness;
  double secondary_min = kInf;

  void offer(double v, std::size_t idx, const Witness& w) {
    if (std::isnan(v)) v = kInf;
    if (v > violation || (v == violation && idx < index)) {
      violation = v;
      index = idx;
      witness = w;
    }
  }

  // Associative and order-independent: ties resolve to the lowest index.
  void merge(Best&& other) {
    if (other.witness) offer(other.violation, other.index, *other.witness);
    secondary_min = std::min(secondary_min, other.secondary_min);
  }
};

double safe_evaluate(const SampledSuite& suite, const Witness& w) {
  try {
    const double v = suite.evaluate(w);
    return std::isnan(v) ? kInf : v;
  } catch (const Error&) {
    return kInf;
  }
}

SuiteResult run_sampled(const SampledSuite& suite, const SuiteConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t chunks = (cfg.samples + kChunkSize - 1) / kChunkSize;
  unsigned workers = cfg.workers == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                      : cfg.workers;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(chunks, 1)));

  std::vector<Best> partial(workers);
  auto work = [&](unsigned w) {
    Best& best = partial[w];
    for (std::size_t c = w; c < chunks; c += workers) {
      std::mt19937_64 rng(derive_seed(cfg.seed, c));
      const std::size_t end = std::min(cfg.samples, (c + 1) * kChunkSize);
      for (std::size_t idx = c * kChunkSize; idx < end; ++idx) {
        Witness wit = suite.generate(rng, idx);
        best.offer(safe_evaluate(suite, wit), idx, wit);
        if (suite.secondary) {
          double s;
          try {
            s = suite.secondary(wit);
          } catch (const Error&) {
            s = -kInf;
          }
          if (std::isnan(s)) s = -kInf;
          best.secondary_min = std::min(best.secondary_min, s);
        }
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }

  Best total;
  for (auto& b : partial) total.merge(std::move(b));

  SuiteResult result;
  result.name = suite.name;
  result.tolerance = suite.bound;
  result.samples = cfg.samples;
  result.worst_violation = total.violation;
  result.passed = total.violation <= suite.bound;
  if (total.witness) {
    result.witness_index = total.index;
    result.witness = total.witness;
  }
  if (suite.secondary) result.metrics.push_back({suite.secondary_name, total.secondary_min});
  if (!result.passed && result.witness && suite.shrinkable) {
    result.shrunk_witness = shrink_witness(*result.witness, [&](const Witness& w) {
      return safe_evaluate(suite, w) > suite.bound;
    });
  }
  result.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

SuiteResult composite(std::string name, std::vector<SuiteResult> children) {
  SuiteResult result;
  result.name = std::move(name);
  result.tolerance = 0.0;
  result.worst_violation = -kInf;
  result.passed = true;
  for (const auto& c : children) {
    result.samples += c.samples;
    result.duration_seconds += c.duration_seconds;
    result.worst_violation = std::max(result.worst_violation, c.worst_violation - c.tolerance);
    result.passed = result.passed && c.passed;
  }
  result.children = std::move(children);
  return result;
}

double normal(std::mt19937_64& rng) {
  thread_local std::normal_distribution<double> dist;
  dist.reset();
  return dist(rng);
}

double relative_error(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

double coordinate_norm(const GroupElement& p) {
  return std::sqrt(p.x.squaredNorm() + p.t.squaredNorm());
}

const GroupElement& fin(const Witness& w, std::size_t i) { return w.points.at(i).finite(); }

std::string describe(const SimilarityWord& word) {
  std::ostringstream os;
  bool first = true;
  for (const auto& atom : word.atoms()) {
    os << (first ? "" : " ");
    first = false;
    if (std::holds_alternative<LeftTranslate>(atom)) os << "translate";
    if (const auto* d = std::get_if<Dilate>(&atom)) os << "dilate(" << d->factor() << ")";
    if (std::holds_alternative<Invert>(atom)) os << "invert";
  }
  return os.str();
}

double tolerance_or(const SuiteConfig& cfg, double fallback) {
  return cfg.tolerance.value_or(fallback);
}

}  // namespace

void SuiteConfig::validate() const {
  if (samples < 1) throw Error("samples must be >= 1");
  if (tolerance && !(*tolerance > 0.0)) throw Error("tolerance must be > 0");
  if (!(sampler.horizontal_scale > 0.0) || !(sampler.central_scale >= 0.0)) {
    throw Error("sampler scales must be positive");
  }
}

std::optional<double> SuiteResult::metric(const std::string& metric_name) const {
  for (const auto& m : metrics) {
    if (m.name == metric_name) return m.value;
  }
  return std::nullopt;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(seed) ^ index);
}

Vector Sampler::horizontal(std::mt19937_64& rng) const {
  Vector x(group_->m());
  for (int i = 0; i < x.size(); ++i) x[i] = spec_.horizontal_scale * normal(rng);
  return x;
}

GroupElement Sampler::element(std::mt19937_64& rng) const {
  Vector x = horizontal(rng);
  Vector t(group_->n());
  for (int i = 0; i < t.size(); ++i) t[i] = spec_.central_scale * normal(rng);
  return {std::move(x), std::move(t)};
}

std::vector<GroupElement> Sampler::tuple(std::mt19937_64& rng, std::size_t count,
                                         std::size_t index) const {
  const std::size_t stratum = spec_.stratified ? index % 4 : 0;
  std::vector<GroupElement> out;
  out.reserve(count);
  switch (stratum) {
    case 1:
      for (std::size_t i = 0; i < count; ++i) {
        auto p = element(rng);
        p.t *= 1e-3;
        out.push_back(std::move(p));
      }
      break;
    case 2:
      for (std::size_t i = 0; i < count; ++i) {
        out.push_back(htype::dilate(std::exp(normal(rng)), element(rng)));
      }
      break;
    case 3: {
      // λ = (−a, b, 0, ...) on a common horizontal line, slightly perturbed.
      const Vector dir = horizontal(rng);
      const GroupElement shift = element(rng);
      for (std::size_t i = 0; i < count; ++i) {
        double lambda = normal(rng);
        if (i == 0) lambda = -std::abs(lambda);
        if (i == 1) lambda = std::abs(lambda);
        if (i == 2) lambda = 0.0;
        GroupElement p = element(rng);
        p.x = lambda * dir + 1e-4 * p.x;
        p.t *= 1e-4;
        out.push_back(group_->multiply(shift, p));
      }
      break;
    }
    default:
      for (std::size_t i = 0; i < count; ++i) out.push_back(element(rng));
      break;
  }
  return out;
}

Witness scale_witness(const Witness& w, double s) {
  Witness out = w;
  for (auto& p : out.points) {
    if (p.is_finite()) p = GroupElement{s * p.finite().x, s * p.finite().t};
  }
  return out;
}

Witness shrink_witness(const Witness& w, const std::function<bool(const Witness&)>& violates,
                       int iterations) {
  double lo = 0.0;  // largest factor known not to violate (or 0)
  double hi = 1.0;  // smallest factor known to violate
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= 0.0) break;
    if (violates(scale_witness(w, mid))) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  Witness out = scale_witness(w, hi);
  std::ostringstream os;
  os << (w.note.empty() ? "" : w.note + "; ") << "scaled by " << hi;
  out.note = os.str();
  return out;
}

std::array<ChainInequality, 5> inequality_chain(const HTypeAlgebra& alg, const GroupElement& a,
                                                const GroupElement& b) {
  const double x2 = a.x.squaredNorm();
  const double y2 = b.x.squaredNorm();
  const double ga2 = std::sqrt(htype::gauge_fourth_power(a));
  const double gb2 = std::sqrt(htype::gauge_fourth_power(b));
  const auto h = horizontal_form(alg, a.x, b.x);
  const double hmag = std::sqrt(h.squared_magnitude());
  return {{
      {"cauchy_schwarz_gauge", x2 * y2 + 16.0 * a.t.dot(b.t), ga2 * gb2},
      {"mixed_first", x2 * h.real + 4.0 * a.t.dot(h.imaginary), ga2 * hmag},
      {"mixed_second", y2 * h.real + 4.0 * b.t.dot(h.imaginary), gb2 * hmag},
      {"hermitian_bound", h.squared_magnitude(), x2 * y2},
      {"horizontal_bound", x2 * y2, ga2 * gb2},
  }};
}

double expansion_fourth_power(const HTypeAlgebra& alg, const GroupElement& a,
                              const GroupElement& b) {
  const double x2 = a.x.squaredNorm();
  const double y2 = b.x.squaredNorm();
  const auto h = horizontal_form(alg, a.x, b.x);
  return htype::gauge_fourth_power(a) + htype::gauge_fourth_power(b) +
         4.0 * h.squared_magnitude() + 4.0 * (x2 * h.real + 4.0 * a.t.dot(h.imaginary)) +
         4.0 * (y2 * h.real + 4.0 * b.t.dot(h.imaginary)) +
         2.0 * (x2 * y2 + 16.0 * a.t.dot(b.t));
}

SuiteResult triangle_suite(const Group& g, const SuiteConfig& cfg) {
  Sampler s(g, cfg.sampler);
  return run_sampled(
      {"triangle", tolerance_or(cfg, 1e-9),
       [&](std::mt19937_64& rng, std::size_t idx) {
         auto pts = s.tuple(rng, 3, idx);
         return Witness{{pts[0], pts[1], pts[2]}, {}, "d(p,q) - d(p,r) - d(r,q)"};
       },
       [&](const Witness& w) {
         const auto &p = w.points[0], &q = w.points[1], &r = w.points[2];
         return g.distance(p, q) - g.distance(p, r) - g.distance(r, q);
       }},
      cfg);
}

SuiteResult symmetry_suite(const Group& g, const SuiteConfig& cfg) {
  Sampler s(g, cfg.sampler);
  return run_sampled({"symmetry", tolerance_or(cfg, 1e-12),
                      [&](std::mt19937_64& rng, std::size_t) {
                        return Witness{{s.element(rng), s.element(rng)}, {}, ""};
                      },
                      [&](const Witness& w) {
                        return relative_error(g.distance(w.points[1], w.points[0]),
                                              g.distance(w.points[0], w.points[1]));
                      }},
                     cfg);
}

SuiteResult left_invariance_suite(const Group& g, const SuiteConfig& cfg) {
  Sampler s(g, cfg.sampler);
  return run_sampled({"left-invariance", tolerance_or(cfg, 1e-12),
                      [&](std::mt19937_64& rng, std::size_t) {
                        return Witness{{s.element(rng), s.element(rng), s.element(rng)}, {}, "r, p, q"};
                      },
                      [&](const Witness& w) {
                        const auto &r = fin(w, 0), &p = fin(w, 1), &q = fin(w, 2);
                        return relative_error(g.distance(g.multiply(r, p), g.multiply(r, q)),
                                              g.distance(p, q));
                      }},
                     cfg);
}

SuiteResult homogeneity_suite(const Group& g, const SuiteConfig& cfg) {
  Sampler s(g, cfg.sampler);
  return run_sampled({"homogeneity", tolerance_or(cfg, 1e-12),
                      [&](std::mt19937_64& rng, std::size_t) {
                        return Witness{{s.element(rng), s.element(rng)}, {std::exp(normal(rng))},
                                       "p, q; lambda"};
                      },
                      [&](const Witness& w) {
                        const double lambda = w.scalars[0];
                        const auto &p = fin(w, 0), &q = fin(w, 1);
                        return relative_error(
                            g.distance(htype::dilate(lambda, p), htype::dilate(lambda, q)),
                            lambda * g.distance(p, q));
                      }},
                     cfg);
}

SuiteResult metric_axioms_suite(const Group& g, const SuiteConfig& cfg) {
  return composite("metric-axioms", {triangle_suite(g, cfg), symmetry_suite(g, cfg),
                                     left_invariance_suite(g, cfg), homogeneity_suite(g, cfg)});
}

SuiteResult expansion_identity_suite(const Group& g, const SuiteConfig& cfg) {
  Sampler s(g, cfg.sampler);
  return run_sampled({"expansion", tolerance_or(cfg, 1e-10),
                      [&](std::mt19937_64& rng, std::size_t) {
                        return Witness{{s.element(rng), s.element(rng)}, {}, "a, b; g(ab)^4"};
                      },
                      [&](const Witness& w) {
                        const auto &a = fin(w, 0), &b = fin(w, 1);
                        return relative_error(expansion_fourth_power(g.algebra(), a, b),
                                              g.gauge_fourth_power(g.multiply(a, b)));
                      }},
                     cfg);
}

SuiteResult inequality_chain_suite(const Group& g, const SuiteConfig& cfg) {
  Sampler s(g, cfg.sampler);
  return run_sampled(
      {"inequality-chain", tolerance_or(cfg, 1e-10),
       [&](std::mt19937_64& rng, std::size_t idx) {
         auto pts = s.tuple(rng, 2, idx);
         return Witness{{pts[0], pts[1]}, {}, "slack / (g(a)^2 g(b)^2)"};
       },
       [&](const Witness& w) {
         const auto &a = fin(w, 0), &b = fin(w, 1);
         const double scale = std::sqrt(htype::gauge_fourth_power(a) * htype::gauge_fourth_power(b));
         double worst = -kInf;
         for (const auto& ineq : inequality_chain(g.algebra(), a, b)) {
           worst = std::max(worst, -ineq.slack() / scale);
         }
         return worst;
       }},
      cfg);
}

SuiteResult equality_configuration_suite(const Group& g, const SuiteConfig& cfg) {
  Sampler s(g, cfg.sampler);
  return run_sampled(
      {"equality-configurations", tolerance_or(cfg, 1e-10),
       [&](std::mt19937_64& rng, std::size_t) {
         const Vector x = s.horizontal(rng);
         const double lambda = std::abs(normal(rng));
         const Vector zero = Vector::Zero(g.n());
         return Witness{{GroupElement{x, zero}, GroupElement{lambda * x, zero}},
                        {lambda},
                        "a = (x, 0), b = (lambda x, 0)"};
       },
       [&](const Witness& w) {
         const auto &a = fin(w, 0), &b = fin(w, 1);
         const double scale = std::sqrt(htype::gauge_fourth_power(a) * htype::gauge_fourth_power(b));
         double worst = 0.0;
         for (const auto& ineq : inequality_chain(g.algebra(), a, b)) {
           worst = std::max(worst, std::abs(ineq.slack()) / scale);
         }
         return worst;
       }},
      cfg);
}

SuiteResult involution_suite(const Group& g, const SuiteConfig& cfg) {
  Sampler s(g, cfg.sampler);
  return run_sampled({"involution", tolerance_or(cfg, 1e-9),
                      [&](std::mt19937_64& rng, std::size_t) {
                        return Witness{{s.element(rng)}, {}, "|sigma(sigma(p)) - p| / |p|"};
                      },
                      [&](const Witness& w) {
                        const auto& p = fin(w, 0);
                        const auto back = g.inversion(g.inversion(p));
                        if (back.is_infinity()) return kInf;
                        const GroupElement diff{back.finite().x - p.x, back.finite().t - p.t};
                        return coordinate_norm(diff) / coordinate_norm(p);
                      }},
                     cfg);
}

SuiteResult inversion_norm_suite(const Group& g, const SuiteConfig& cfg) {
  Sampler s(g, cfg.sampler);
  return run_sampled({"inversion-norm", tolerance_or(cfg, 1e-9),
                      [&](std::mt19937_64& rng, std::size_t) {
                        return Witness{{s.element(rng)}, {}, "d(sigma(p), 0) d(p, 0) - 1"};
                      },
                      [&](const Witness& w) {
                        const auto zero = g.identity();
                        const auto& p = w.points[0];
                        return std::abs(g.distance(g.inversion(p), zero) * g.distance(p, zero) - 1.0);
                      }},
                     cfg);
}

SuiteResult iwasawa_discriminator(const Group& g, const SuiteConfig& cfg) {
  Sampler s(g, cfg.sampler);
  return run_sampled(
      {"iwasawa", tolerance_or(cfg, 1e-9),
       [&](std::mt19937_64& rng, std::size_t) {
         return Witness{{s.element(rng), s.element(rng)},
                        {},
                        "d(sigma p, sigma q) d(p,0) d(0,q) / d(p,q) - 1"};
       },
       [&](const Witness& w) {
         const auto zero = g.identity();
         const auto &p = w.points[0], &q = w.points[1];
         const double lhs = g.distance(g.inversion(p), g.inversion(q)) * g.distance(p, zero) *
                            g.distance(zero, q);
         return std::abs(lhs / g.distance(p, q) - 1.0);
       }},
      cfg);
}

SuiteResult normalization_calibration(const Group& g, const SuiteConfig& cfg) {
  return composite("calibration",
                   {triangle_suite(g, cfg), involution_suite(g, cfg), inversion_norm_suite(g, cfg)});
}

SuiteResult ptolemaean_suite(const Group& g, const SuiteConfig& cfg) {
  Sampler s(g, cfg.sampler);
  return run_sampled(
      {"ptolemaean", tolerance_or(cfg, 1e-9),
       [&](std::mt19937_64& rng, std::size_t idx) {
         auto pts = s.tuple(rng, 4, idx);
         Witness w{{pts[0], pts[1], pts[2], pts[3]}, {}, "-min defect"};
         if (idx % 5 == 4) w.points[3] = ExtendedPoint::infinity();
         return w;
       },
       [&](const Witness& w) {
         const Quadruple q = {w.points[0], w.points[1], w.points[2], w.points[3]};
         return -ptolemaean_defects(g, q).min_defect;
       }},
      cfg);
}

SuiteResult rcircle_equality_suite(const Group& g, const SuiteConfig& cfg) {
  Sampler s(g, cfg.sampler);
  const double tol = tolerance_or(cfg, 1e-8);
  auto generate = [&](std::mt19937_64& rng, std::size_t) {
    const Vector dir = s.horizontal(rng);
    std::array<double, 4> lambdas{};
    for (;;) {
      for (auto& l : lambdas) l = 2.0 * normal(rng);
      if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) lambdas[3] = kInf;
      std::sort(lambdas.begin(), lambdas.end());
      bool spaced = true;
      for (int i = 0; i + 1 < 4; ++i) spaced = spaced && (lambdas[i + 1] - lambdas[i] > 0.05);
      if (spaced) break;
    }
    SimilarityWord word;
    const int length = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int i = 0; i < length; ++i) {
      switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: word.translate(s.element(rng)); break;
        case 1: word.dilate(std::exp(std::uniform_real_distribution<double>(-1.0, 1.0)(rng))); break;
        default: word.invert(); break;
      }
    }
    // Cyclic order a < b < c < d: (a, b, c, d) is separated, (a, c, b, d) is not.
    const auto on_circle = standard_rcircle(g, dir, {lambdas.begin(), lambdas.end()});
    std::vector<ExtendedPoint> images;
    for (const auto& p : on_circle) images.push_back(g.apply(word, p));
    Witness w;
    w.points = {images[0], images[1], images[2], images[3], images[0], images[2], images[1], images[3]};
    w.scalars = {lambdas.begin(), lambdas.end()};
    w.note = "word: " + describe(word);
    return w;
  };
  auto separated_defect = [&](const Witness& w) {
    return pairing_defect(g, {w.points[0], w.points[1], w.points[2], w.points[3]},
                          Pairing::Diag13_24)
        .defect;
  };
  auto unseparated_defect = [&](const Witness& w) {
    return pairing_defect(g, {w.points[4], w.points[5], w.points[6], w.points[7]},
                          Pairing::Diag13_24)
        .defect;
  };
  SampledSuite suite{"rcircle", tol, generate,
                     [=](const Witness& w) {
                       return std::max(std::abs(separated_defect(w)), -unseparated_defect(w));
                     },
                     false, "min_unseparated_defect", unseparated_defect};
  auto result = run_sampled(suite, cfg);
  const auto min_unseparated = result.metric("min_unseparated_defect");
  if (!min_unseparated || !(*min_unseparated > 0.0)) result.passed = false;
  return result;
}

SuiteResult ptolemaean_campaign(const Group& g, const SuiteConfig& cfg) {
  return composite("campaign", {ptolemaean_suite(g, cfg), rcircle_equality_suite(g, cfg)});
}

SuiteResult reduction_identity_suite(const Group& g, const SuiteConfig& cfg) {
  Sampler s(g, cfg.sampler);
  return run_sampled(
      {"reduction", tolerance_or(cfg, 1e-12),
       [&](std::mt19937_64& rng, std::size_t) {
         return Witness{{ExtendedPoint::infinity(), s.element(rng), s.element(rng), g.identity()},
                        {},
                        "(inf, pj, pk, 0)"};
       },
       [&](const Witness& w) {
         const Quadruple q = {w.points[0], w.points[1], w.points[2], w.points[3]};
         const auto d = pairing_defect(g, q, Pairing::Diag14_23);
         const auto zero = g.identity();
         const double rhs =
             (g.distance(q[1], zero) + g.distance(zero, q[2])) / g.distance(q[1], q[2]);
         return relative_error(d.x1_sqrt + d.x2_sqrt, rhs);
       }},
      cfg);
}

SuiteResult converse_probe_suite(const Group& g, const SuiteConfig& cfg) {
  Sampler s(g, cfg.sampler);
  const double threshold = tolerance_or(cfg, 1e-6);
  auto lift = [](GroupElement p) {
    const double norm = p.t.norm();
    if (norm == 0.0) {
      p.t[0] = 0.1;
    } else if (norm < 0.1) {
      p.t *= 0.1 / norm;
    }
    return p;
  };
  return run_sampled(
      {"converse-probe", 0.0,
       [&](std::mt19937_64& rng, std::size_t) {
         return Witness{{ExtendedPoint::infinity(), lift(s.element(rng)), lift(s.element(rng)),
                         g.identity()},
                        {threshold},
                        "threshold - min defect, |t| >= 0.1"};
       },
       [&](const Witness& w) {
         const Quadruple q = {w.points[0], w.points[1], w.points[2], w.points[3]};
         return w.scalars[0] - ptolemaean_defects(g, q).min_defect;
       },
       false},
      cfg);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "triangle",        "symmetry",   "left-invariance", "homogeneity",
      "expansion",       "inequality-chain", "equality-configurations", "involution",
      "inversion-norm",  "iwasawa",    "ptolemaean",      "rcircle",
      "reduction",       "converse-probe"};
  return names;
}

SuiteResult run_suite(const std::string& name, const Group& g, const SuiteConfig& cfg) {
  using Fn = SuiteResult (*)(const Group&, const SuiteConfig&);
  static const std::map<std::string, Fn> table = {
      {"triangle", triangle_suite},
      {"symmetry", symmetry_suite},
      {"left-invariance", left_invariance_suite},
      {"homogeneity", homogeneity_suite},
      {"expansion", expansion_identity_suite},
      {"inequality-chain", inequality_chain_suite},
      {"equality-configurations", equality_configuration_suite},
      {"involution", involution_suite},
      {"inversion-norm", inversion_norm_suite},
      {"iwasawa", iwasawa_discriminator},
      {"ptolemaean", ptolemaean_suite},
      {"rcircle", rcircle_equality_suite},
      {"reduction", reduction_identity_suite},
      {"converse-probe", converse_probe_suite},
      {"metric-axioms", metric_axioms_suite},
      {"calibration", normalization_calibration},
      {"campaign", ptolemaean_campaign},
  };
  if (name == "all") {
    std::vector<SuiteResult> children;
    for (const auto& n : suite_names()) children.push_back(table.at(n)(g, cfg));
    return composite("all", std::move(children));
  }
  const auto it = table.find(name);
  if (it == table.end()) throw ParseError("suite", "unknown suite '" + name + "'");
  return it->second(g, cfg);
}

std::string_view mutation_name(Mutation m) {
  switch (m) {
    case Mutation::None: return "none";
    case Mutation::DoubledCentralTerm: return "doubled-central";
    case Mutation::ScaledGenerators: return "scaled-u";
    case Mutation::DroppedInversionT: return "dropped-t";
    case Mutation::UnitGaugeConstant: return "unit-gauge";
  }
  return "?";
}

Mutation parse_mutation(std::string_view name) {
  for (Mutation m : {Mutation::None, Mutation::DoubledCentralTerm, Mutation::ScaledGenerators,
                     Mutation::DroppedInversionT, Mutation::UnitGaugeConstant}) {
    if (mutation_name(m) == name) return m;
  }
  throw ParseError("mutation", "unknown mutation '" + std::string(name) + "'");
}

const std::vector<Mutation>& all_mutations() {
  static const std::vector<Mutation> list = {Mutation::DoubledCentralTerm,
                                             Mutation::ScaledGenerators,
                                             Mutation::DroppedInversionT,
                                             Mutation::UnitGaugeConstant};
  return list;
}

Group mutate(const HTypeAlgebra& alg, Mutation m) {
  Normalization norm;
  switch (m) {
    case Mutation::None: return Group(alg);
    case Mutation::DoubledCentralTerm: norm.central_factor = 1.0; return Group(alg, norm);
    case Mutation::ScaledGenerators: {
      std::vector<Matrix> scaled;
      for (const auto& u : alg.generators()) scaled.push_back(2.0 * u);
      return Group(HTypeAlgebra(alg.m(), alg.n(), std::move(scaled), alg.label() + "+scaled-u"));
    }
    case Mutation::DroppedInversionT: norm.inversion_uses_central = false; return Group(alg, norm);
    case Mutation::UnitGaugeConstant: norm.gauge_constant = 1.0; return Group(alg, norm);
  }
  throw Error("unknown mutation");
}

}  // namespace htype::verify
