#include "htype/algebra.hpp"

#include "htype/errors.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>

namespace htype {

namespace {

// Imaginary-unit product rules: for each triple (a, b, c), e_a e_b = e_c and
// cyclic permutations; reversing two factors flips the sign.
using UnitTriples = std::vector<std::array<int, 3>>;

const UnitTriples kQuaternionTriples = {{1, 2, 3}};

// Fano-plane triples (a, a+1, a+3) mod 7 on indices 1..7.
const UnitTriples kOctonionTriples = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                      {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};

struct SignedUnit {
  int sign;
  int index;
};

SignedUnit multiply_units(const UnitTriples& triples, int a, int b) {
  if (a == 0) return {1, b};
  if (b == 0) return {1, a};
  if (a == b) return {-1, 0};
  for (const auto& tr : triples) {
    for (int r = 0; r < 3; ++r) {
      const int p = tr[r], q = tr[(r + 1) % 3], s = tr[(r + 2) % 3];
      if (a == p && b == q) return {1, s};
      if (a == q && b == p) return {-1, s};
    }
  }
  throw Error("incomplete unit multiplication table");
}

// Matrix of x ↦ e_unit · x on the algebra spanned by e_0..e_{dim-1}.
Matrix left_multiplication(const UnitTriples& triples, int dim, int unit) {
  Matrix L = Matrix::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const auto [sign, row] = multiply_units(triples, unit, col);
    L(row, col) = sign;
  }
  return L;
}

Matrix block_diagonal(const Matrix& block, int copies) {
  const auto b = block.rows();
  Matrix out = Matrix::Zero(b * copies, b * copies);
  for (int c = 0; c < copies; ++c) out.block(c * b, c * b, b, b) = block;
  return out;
}

void require_positive(int k, const char* what) {
  if (k < 1) throw InvalidDimension(std::string(what) + " must be >= 1, got " + std::to_string(k));
}

double max_abs(const Matrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

}  // namespace

HTypeAlgebra::HTypeAlgebra(int m, int n, std::vector<Matrix> generators, std::string label)
    : m_(m), n_(n), generators_(std::move(generators)), label_(std::move(label)) {
  require_positive(m_, "m");
  require_positive(n_, "n");
  if (static_cast<int>(generators_.size()) != n_) {
    throw DimensionMismatch("expected " + std::to_string(n_) + " generator matrices, got " +
                            std::to_string(generators_.size()));
  }
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (generators_[k].rows() != m_ || generators_[k].cols() != m_) {
      throw DimensionMismatch("U[" + std::to_string(k) + "] must be " + std::to_string(m_) + "x" +
                              std::to_string(m_));
    }
  }
}

HTypeAlgebra HTypeAlgebra::heisenberg(int k) {
  require_positive(k, "heisenberg block count");
  Matrix block(2, 2);
  block << 0, 1, -1, 0;
  return HTypeAlgebra(2 * k, 1, {block_diagonal(block, k)}, "heisenberg:" + std::to_string(k));
}

HTypeAlgebra HTypeAlgebra::quaternionic(int k) {
  require_positive(k, "quaternionic block count");
  std::vector<Matrix> us;
  for (int unit = 1; unit <= 3; ++unit) {
    us.push_back(block_diagonal(left_multiplication(kQuaternionTriples, 4, unit), k));
  }
  return HTypeAlgebra(4 * k, 3, std::move(us), "quaternionic:" + std::to_string(k));
}

HTypeAlgebra HTypeAlgebra::octonionic() {
  std::vector<Matrix> us;
  for (int unit = 1; unit <= 7; ++unit) us.push_back(left_multiplication(kOctonionTriples, 8, unit));
  return HTypeAlgebra(8, 7, std::move(us), "octonionic");
}

HTypeAlgebra HTypeAlgebra::custom(int m, int n, std::vector<Matrix> generators) {
  return HTypeAlgebra(m, n, std::move(generators), "custom");
}

void HTypeAlgebra::check_horizontal(const Vector& x, const char* what) const {
  if (x.size() != m_) {
    throw DimensionMismatch(std::string(what) + ": horizontal vector has length " +
                            std::to_string(x.size()) + ", expected " + std::to_string(m_));
  }
}

void HTypeAlgebra::check_central(const Vector& t, const char* what) const {
  if (t.size() != n_) {
    throw DimensionMismatch(std::string(what) + ": central vector has length " +
                            std::to_string(t.size()) + ", expected " + std::to_string(n_));
  }
}

Vector HTypeAlgebra::central_pairing(const Vector& x, const Vector& y) const {
  check_horizontal(x, "central_pairing");
  check_horizontal(y, "central_pairing");
  Vector out(n_);
  for (int k = 0; k < n_; ++k) out[k] = (generators_[k] * x).dot(y);
  return out;
}

Vector HTypeAlgebra::bracket(const Vector& x, const Vector& y) const {
  return 2.0 * central_pairing(x, y);
}

Vector HTypeAlgebra::generator_combination(const Vector& t, const Vector& x) const {
  check_central(t, "generator_combination");
  check_horizontal(x, "generator_combination");
  Vector out = Vector::Zero(m_);
  for (int k = 0; k < n_; ++k) out.noalias() += t[k] * (generators_[k] * x);
  return out;
}

Vector HTypeAlgebra::j_map(const Vector& t, const Vector& x) const {
  return 2.0 * generator_combination(t, x);
}

bool operator==(const HTypeAlgebra& a, const HTypeAlgebra& b) {
  if (a.m_ != b.m_ || a.n_ != b.n_) return false;
  for (int k = 0; k < a.n_; ++k) {
    if (a.generators_[k] != b.generators_[k]) return false;
  }
  return true;
}

HorizontalForm horizontal_form(const HTypeAlgebra& alg, const Vector& x, const Vector& y) {
  return {x.dot(y), alg.central_pairing(x, y)};
}

double ValidationReport::htype_residual() const {
  return std::max({skew_residual, orthogonality_residual, anticommutation_residual});
}

double iwasawa_residual(const HTypeAlgebra& alg, int i, int j, const Vector& x) {
  alg.check_horizontal(x, "iwasawa_residual");
  Matrix span(alg.m(), alg.n());
  for (int k = 0; k < alg.n(); ++k) span.col(k) = alg.generator(k) * x;
  const Vector target = alg.generator(i) * (alg.generator(j) * x);
  const Vector coeffs = span.completeOrthogonalDecomposition().solve(target);
  return (span * coeffs - target).norm();
}

ValidationReport validate_htype(const HTypeAlgebra& alg, int sample_count, double tol,
                                std::uint64_t seed) {
  if (sample_count < 1) throw Error("sample_count must be >= 1");
  ValidationReport report;
  report.tolerance = tol;

  const int m = alg.m();
  const Matrix identity = Matrix::Identity(m, m);
  for (int k = 0; k < alg.n(); ++k) {
    const Matrix& u = alg.generator(k);
    report.skew_residual = std::max(report.skew_residual, max_abs(u + u.transpose()));
    report.orthogonality_residual =
        std::max(report.orthogonality_residual, max_abs(u.transpose() * u - identity));
    for (int l = k + 1; l < alg.n(); ++l) {
      const Matrix& v = alg.generator(l);
      report.anticommutation_residual =
          std::max(report.anticommutation_residual, max_abs(u * v + v * u));
    }
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  for (int s = 0; s < sample_count && alg.n() > 1; ++s) {
    Vector x(m);
    for (int c = 0; c < m; ++c) x[c] = normal(rng);
    if (x.norm() == 0.0) continue;
    x.normalize();
    for (int i = 0; i < alg.n(); ++i) {
      for (int j = i + 1; j < alg.n(); ++j) {
        const double r = iwasawa_residual(alg, i, j, x);
        if (!report.witness || r > report.iwasawa_residual) {
          report.iwasawa_residual = r;
          report.witness = IwasawaWitness{i, j, x};
        }
      }
    }
  }

  report.htype_ok = report.htype_residual() <= tol;
  report.iwasawa_ok = report.iwasawa_residual <= tol;
  return report;
}

}  // namespace htype
