#pragma once

// Dense complex linear algebra used by every other module. All matrix
// functions are evaluated through a Hermitian eigendecomposition, so
// exponentials of i*Hermitian generators are unitary to rounding.

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

namespace sqcat {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

struct SpectralDecomposition {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // columns

  Matrix reconstruct() const;
};

/// Scalar function applied to the spectrum of a Hermitian matrix.
struct ScalarFunction {
  enum class Kind { ExpIScale, Cos, Sin, ExpRealScale };
  Kind kind;
  double scale = 1.0;

  /// f(x) = exp(i*s*x)
  static ScalarFunction exp_i_scale(double s) { return {Kind::ExpIScale, s}; }
  static ScalarFunction cos() { return {Kind::Cos, 1.0}; }
  static ScalarFunction sin() { return {Kind::Sin, 1.0}; }
  /// f(x) = exp(s*x)
  static ScalarFunction exp_real_scale(double s) { return {Kind::ExpRealScale, s}; }

  Complex operator()(double x) const;
};

struct MatrixNorms {
  double frobenius = 0.0;
  double spectral = 0.0;
};

/// Relative tolerance on ||M - M^dagger||_F accepted as Hermitian.
inline constexpr double kHermitianTolerance = 1e-10;

/// Throws NotSquare, NonFinite or NotHermitian (with the measured defect).
SpectralDecomposition hermitian_eig(const Matrix& m);

/// V f(lambda) V^dagger.
Matrix func_of_hermitian(const Matrix& m, const ScalarFunction& f);
Matrix func_of_hermitian(const SpectralDecomposition& spectral, const ScalarFunction& f);

MatrixNorms matrix_norms(const Matrix& m);
double spectral_norm(const Matrix& m);

Matrix dagger(const Matrix& m);
double hermiticity_defect(const Matrix& m);
/// ||U U^dagger - I||_F
double unitarity_defect(const Matrix& u);
Matrix commutator(const Matrix& a, const Matrix& b);
bool all_finite(const Matrix& m);

/// Principal submatrix on the listed indices.
Matrix restrict(const Matrix& m, std::span<const int> indices);

/// Unitarity defect of U U^dagger restricted to the listed indices.
double restricted_unitarity_defect(const Matrix& u, std::span<const int> indices);

}  // namespace sqcat
