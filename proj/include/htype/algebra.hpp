#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace htype {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/**
 * Structure data of a step-2 nilpotent Lie algebra g = b ⊕ j.
 *
 * The horizontal layer b has dimension m and the center j has dimension n.
 * The group law is encoded by n real m×m matrices U^1..U^n; an H-type algebra
 * requires each U^k to be skew-symmetric and orthogonal, and distinct U^i, U^j
 * to anticommute. Construction only checks shapes. Use validate_htype() to
 * certify the axioms and the Iwasawa (J²) condition.
 *
 * Two bilinear maps b × b → j are exposed:
 *   central_pairing(x, y)_k = <U^k x, y>      (enters the group law as ½ of it)
 *   bracket(x, y)_k         = 2 <U^k x, y>    (the Lie bracket paired with J_t)
 */
class HTypeAlgebra {
 public:
  HTypeAlgebra(int m, int n, std::vector<Matrix> generators, std::string label = "custom");

  /// Classical Heisenberg group H^k: m = 2k, n = 1, U^1 = k diagonal blocks [[0,1],[-1,0]].
  static HTypeAlgebra heisenberg(int k);

  /// Quaternionic Heisenberg algebra: m = 4k, n = 3, U^1..U^3 are left
  /// multiplication by i, j, k on k quaternion coordinates.
  static HTypeAlgebra quaternionic(int k);

  /// Octonionic algebra: m = 8, n = 7, U^k is left multiplication by e_k.
  /// The multiplication table is documented in docs/octonion_table.md.
  static HTypeAlgebra octonionic();

  /// Unvalidated user data. Shapes are checked, axioms are not.
  static HTypeAlgebra custom(int m, int n, std::vector<Matrix> generators);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  const std::vector<Matrix>& generators() const noexcept { return generators_; }
  const Matrix& generator(int k) const { return generators_.at(static_cast<std::size_t>(k)); }

  /// Human-readable source, e.g. "heisenberg:2" or "custom".
  const std::string& label() const noexcept { return label_; }

  /// (<U^1 x, y>, ..., <U^n x, y>).
  Vector central_pairing(const Vector& x, const Vector& y) const;

  /// Lie bracket [x, y]_k = 2 <U^k x, y>; antisymmetric and bilinear.
  Vector bracket(const Vector& x, const Vector& y) const;

  /// J_t x, characterized by <J_t x, y> = <t, [x, y]> for every y.
  Vector j_map(const Vector& t, const Vector& x) const;

  /// Σ_k t_k U^k x, i.e. J_t x / 2.
  Vector generator_combination(const Vector& t, const Vector& x) const;

  void check_horizontal(const Vector& x, const char* what) const;
  void check_central(const Vector& t, const char* what) const;

  friend bool operator==(const HTypeAlgebra& a, const HTypeAlgebra& b);

 private:
  int m_;
  int n_;
  std::vector<Matrix> generators_;
  std::string label_;
};

/// Cygan's hermitian form h(x, y) = <x, y> + i·central_pairing(x, y).
struct HorizontalForm {
  double real;
  Vector imaginary;

  /// |h|² = <x,y>² + |central_pairing(x,y)|².
  double squared_magnitude() const { return real * real + imaginary.squaredNorm(); }
};

HorizontalForm horizontal_form(const HTypeAlgebra& alg, const Vector& x, const Vector& y);

/// Witness for the worst Iwasawa residual: generator pair (i, j) and unit vector x.
struct IwasawaWitness {
  int i;
  int j;
  Vector x;
};

struct ValidationReport {
  bool htype_ok = false;
  bool iwasawa_ok = false;
  double tolerance = 0.0;
  double skew_residual = 0.0;           // max_k max|U^k + (U^k)^T|
  double orthogonality_residual = 0.0;  // max_k max|(U^k)^T U^k - I|
  double anticommutation_residual = 0.0;  // max_{i<j} max|U^i U^j + U^j U^i|
  double iwasawa_residual = 0.0;        // max over pairs and samples of the LS residual
  std::optional<IwasawaWitness> witness;

  double htype_residual() const;
};

/**
 * Checks the H-type axioms entrywise and the Iwasawa condition by sampling.
 *
 * For each pair i < j and each of `sample_count` random unit vectors x, the
 * residual is the distance from U^i U^j x to span{U^1 x, ..., U^n x}, computed
 * by least squares. The sample stream is a deterministic function of `seed`.
 */
ValidationReport validate_htype(const HTypeAlgebra& alg, int sample_count, double tol,
                                std::uint64_t seed = 0x5eed);

/// Least-squares distance from U^i U^j x to span{U^k x}.
double iwasawa_residual(const HTypeAlgebra& alg, int i, int j, const Vector& x);

}  // namespace htype
