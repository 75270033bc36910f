#include "sqcat/dynamics.hpp"

#include "sqcat/error.hpp"

#include <sstream>

namespace sqcat {

void TimeGrid::validate() const {
  if (!(t_end >= t_start)) throw Error(ErrorKind::PreconditionViolation, "time grid needs t_end >= t_start");
  if (n_points < 1) throw Error(ErrorKind::PreconditionViolation, "time grid needs n_points >= 1");
  if (n_points == 1 && t_end != t_start) {
    throw Error(ErrorKind::PreconditionViolation, "a single-point time grid needs t_start == t_end");
  }
}

double TimeGrid::step() const { return n_points > 1 ? (t_end - t_start) / (n_points - 1) : 0.0; }

double TimeGrid::at(int k) const { return k == n_points - 1 ? t_end : t_start + k * step(); }

std::vector<double> TimeGrid::times() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_points));
  for (int k = 0; k < n_points; ++k) out.push_back(at(k));
  return out;
}

Propagator::Propagator(const Matrix& hamiltonian) : spectral_(hermitian_eig(hamiltonian)) {}

Matrix Propagator::at(double t) const {
  const auto n = spectral_.eigenvalues.size();
  if (t == 0.0) return Matrix::Identity(n, n);
  return func_of_hermitian(spectral_, ScalarFunction::exp_i_scale(-t));
}

Vector Propagator::apply(const Vector& psi, double t) const {
  if (psi.size() != spectral_.eigenvalues.size()) {
    throw Error(ErrorKind::DimensionMismatch, "state and Hamiltonian dimensions differ");
  }
  if (t == 0.0) return psi;
  Vector coeffs = spectral_.eigenvectors.adjoint() * psi;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) coeffs[i] *= std::exp(-kI * (spectral_.eigenvalues[i] * t));
  return spectral_.eigenvectors * coeffs;
}

Matrix propagator(const Matrix& hamiltonian, double t) { return Propagator(hamiltonian).at(t); }

Trajectory evolve(const Matrix& hamiltonian, const JointState& psi0, const TimeGrid& grid, double leakage_limit) {
  grid.validate();
  if (hamiltonian.rows() != psi0.amplitudes.size()) {
    std::ostringstream os;
    os << "Hamiltonian is " << hamiltonian.rows() << "-dimensional, state is " << psi0.amplitudes.size();
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
  const Propagator prop(hamiltonian);
  Trajectory traj;
  for (const double t : grid.times()) {
    JointState psi{psi0.dims, prop.apply(psi0.amplitudes, t)};
    const double leak = leakage(psi);
    if (leak > leakage_limit) {
      traj.aborted_at = t;
      traj.abort_leakage = leak;
      break;
    }
    traj.times.push_back(t);
    traj.leakages.push_back(leak);
    traj.states.push_back(std::move(psi));
  }
  return traj;
}

FieldState evolve_field(const Propagator& prop, const FieldState& psi0, double t) {
  return {psi0.dims, prop.apply(psi0.amplitudes, t)};
}

double expectation(const Matrix& h, const Vector& psi) { return psi.dot(h * psi).real(); }

}  // namespace sqcat
