// The three-step JRSP protocol: channel construction, Alice's
// amplitude-dependent measurement, Bob's phase/xi-dependent measurement
// conditioned on Alice's outcome k, Charlie's correction, and the
// outcome-averaged fidelity.
#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "jrsp/linalg.hpp"

namespace jrsp {

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------
struct TargetState {
  std::array<double, 3> eta{};  // eta_1..eta_3 in [0, pi/2]
  std::array<double, 3> phi{};  // phi_1..phi_3 in [0, 2*pi)
};

struct ControlParams {
  double theta = kPi / 4;  // channel parameter, [-pi/2, pi/2]
  double xi = kPi / 4;     // Bob's basis parameter, [-pi/2, pi/2]
};

struct BranchResult {
  int k = 0, m = 0;
  double p_k = 0;       // P^(k)
  double p_km = 0;      // P^(km) conditional on k
  double fidelity = 0;  // F^(km); 0 on zero-probability branches
};

// ---------------------------------------------------------------------------
// Target-state parameterization
// ---------------------------------------------------------------------------
inline std::array<double, 4> amplitudes(const TargetState& t) {
  const double s3 = std::sin(t.eta[2]), s2 = std::sin(t.eta[1]);
  return {std::cos(t.eta[2]), s3 * std::cos(t.eta[1]), s3 * s2 * std::cos(t.eta[0]),
          s3 * s2 * std::sin(t.eta[0])};
}

inline StateVector target_vector(const TargetState& t) {
  const auto lam = amplitudes(t);
  StateVector psi(2);
  psi.amp[0] = lam[0];
  psi.amp[1] = lam[1] * std::exp(cplx(0, t.phi[0]));
  psi.amp[2] = lam[2] * std::exp(cplx(0, t.phi[1]));
  psi.amp[3] = lam[3] * std::exp(cplx(0, t.phi[2]));
  return psi;
}

// ---------------------------------------------------------------------------
// Channel: GHZ on qubits (1,3,5) tensor (cos t|000> + sin t|111>) on (2,4,6),
// permuted to canonical qubit order 1..6 (qubit 1 = MSB).
// ---------------------------------------------------------------------------
inline StateVector build_channel(double theta) {
  std::array<cplx, 8> ghz{}, gl{};
  ghz[0] = ghz[7] = 1.0 / std::sqrt(2.0);
  gl[0] = std::cos(theta);
  gl[7] = std::sin(theta);
  StateVector out(6);
  for (int idx = 0; idx < 64; ++idx) {
    int b[6];
    for (int i = 0; i < 6; ++i) b[i] = (idx >> (5 - i)) & 1;
    // Product is built in factor order (1,3,5,2,4,6).
    const int first = (b[0] << 2) | (b[2] << 1) | b[4];
    const int second = (b[1] << 2) | (b[3] << 1) | b[5];
    out.amp[idx] = ghz[first] * gl[second];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Measurement bases and corrections
// ---------------------------------------------------------------------------
// A(lambda): real orthogonal 4x4; basis vector |omega_k> is column k.
inline ComplexMatrix alice_matrix(const std::array<double, 4>& l) {
  return ComplexMatrix(4, 4,
                       {l[0], -l[1], -l[2], -l[3],  //
                        l[1], l[0], l[3], -l[2],    //
                        l[2], -l[3], l[0], l[1],    //
                        l[3], l[2], -l[1], l[0]});
}

// B(phi, xi); at xi = pi/4 this reproduces the noiseless phase basis matrix.
inline ComplexMatrix bob_matrix_base(const std::array<double, 3>& phi, double xi) {
  const double c = std::cos(xi), s = std::sin(xi), r = 1.0 / std::sqrt(2.0);
  const cplx e1 = std::exp(cplx(0, -phi[0]));
  const cplx e2 = std::exp(cplx(0, -phi[1]));
  const cplx e3 = std::exp(cplx(0, -phi[2]));
  return ComplexMatrix(4, 4,
                       {r * c, r * c, r * s, r * s,                  //
                        e1 * r * c, -e1 * r * c, e1 * r * s, -e1 * r * s,  //
                        e2 * r * s, e2 * r * s, -e2 * r * c, -e2 * r * c,  //
                        e3 * r * s, -e3 * r * s, -e3 * r * c, e3 * r * c});
}

inline ComplexMatrix matrix_power(const ComplexMatrix& m, int e) {
  ComplexMatrix r = ComplexMatrix::identity(m.rows());
  for (int i = 0; i < e; ++i) r = r * m;
  return r;
}

// T^(k) = (-iY)^{floor(k/2)} (x) Z^{floor(k/2)} (-iY)^{k mod 2}
inline ComplexMatrix conditioning_t(int k) {
  if (k < 0 || k > 3) throw std::invalid_argument("conditioning_t: invalid k");
  const ComplexMatrix miY(2, 2, {0, -1, 1, 0});
  return tensor(matrix_power(miY, k / 2),
                matrix_power(pauli_z(), k / 2) * matrix_power(miY, k % 2));
}

// Full Bob matrix T^(k) B(phi, xi); basis vector |sigma^(k)_m> is column m.
inline ComplexMatrix bob_matrix(const std::array<double, 3>& phi, int k, double xi) {
  return conditioning_t(k) * bob_matrix_base(phi, xi);
}

// R^(km) = Z^{floor(m/2)} X^{floor(k/2)} (x) Z^{m mod 2} X^{k mod 2}
inline ComplexMatrix correction(int k, int m) {
  if (k < 0 || k > 3 || m < 0 || m > 3)
    throw std::invalid_argument("correction: invalid indices");
  return tensor(matrix_power(pauli_z(), m / 2) * matrix_power(pauli_x(), k / 2),
                matrix_power(pauli_z(), m % 2) * matrix_power(pauli_x(), k % 2));
}

inline std::array<StateVector, 4> alice_basis(const std::array<double, 4>& lam) {
  const ComplexMatrix A = alice_matrix(lam);
  std::array<StateVector, 4> out;
  for (int k = 0; k < 4; ++k) {
    out[k] = StateVector(2);
    for (int i = 0; i < 4; ++i) out[k].amp[i] = A(i, k);
  }
  return out;
}

inline std::array<StateVector, 4> bob_basis(const std::array<double, 3>& phi, int k,
                                            double xi) {
  const ComplexMatrix B = bob_matrix(phi, k, xi);
  std::array<StateVector, 4> out;
  for (int m = 0; m < 4; ++m) {
    out[m] = StateVector(2);
    for (int i = 0; i < 4; ++i) out[m].amp[i] = B(i, m);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Protocol execution
// ---------------------------------------------------------------------------
inline std::vector<BranchResult> run_protocol(const DensityMatrix& channel,
                                              const TargetState& target, double xi) {
  if (channel.n_qubits != 6)
    throw std::invalid_argument("run_protocol: channel must have 6 qubits");
  const auto lam = amplitudes(target);
  const StateVector psi = target_vector(target);
  const ComplexMatrix A = alice_matrix(lam);

  std::vector<BranchResult> branches;
  branches.reserve(16);
  for (int k = 0; k < 4; ++k) {
    std::vector<cplx> omega(4);
    for (int i = 0; i < 4; ++i) omega[i] = A(i, k);
    const MeasureResult rk = measure_project(channel, omega, {1, 2});
    const ComplexMatrix Bk = bob_matrix(target.phi, k, xi);
    for (int m = 0; m < 4; ++m) {
      BranchResult br;
      br.k = k;
      br.m = m;
      br.p_k = rk.probability;
      if (rk.zero_branch) {
        branches.push_back(br);
        continue;
      }
      std::vector<cplx> sigma(4);
      for (int i = 0; i < 4; ++i) sigma[i] = Bk(i, m);
      // Qubits 3,4 are the first two of the 4 remaining qubits (3,4,5,6).
      const MeasureResult rkm = measure_project(rk.reduced, sigma, {1, 2});
      br.p_km = rkm.probability;
      if (!rkm.zero_branch) {
        const ComplexMatrix R = correction(k, m);
        DensityMatrix corrected(2);
        corrected.m = R * rkm.reduced.m * dagger(R);
        br.fidelity = fidelity_pure(corrected, psi);
      }
      branches.push_back(br);
    }
  }
  return branches;
}

// F = sum_km P^(k) P^(km) F^(km)
inline double outcome_averaged_fidelity(const std::vector<BranchResult>& branches) {
  std::vector<double> terms;
  terms.reserve(branches.size());
  for (const auto& b : branches) terms.push_back(b.p_k * b.p_km * b.fidelity);
  return pairwise_sum(std::move(terms));
}

}  // namespace jrsp
