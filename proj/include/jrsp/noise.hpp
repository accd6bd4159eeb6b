// Kraus representations of the bit-flip, phase-flip, amplitude-damping and
// depolarizing channels; per-qubit superoperator application; construction of
// the noisy six-qubit channel scenarios including the Pauli-X pre-application
// variant.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "jrsp/linalg.hpp"
#include "jrsp/protocol.hpp"

namespace jrsp {

enum class NoiseKind { BitFlip, PhaseFlip, AmplitudeDamping, Depolarizing };

inline char noise_char(NoiseKind k) {
  switch (k) {
    case NoiseKind::BitFlip: return 'B';
    case NoiseKind::PhaseFlip: return 'P';
    case NoiseKind::AmplitudeDamping: return 'A';
    case NoiseKind::Depolarizing: return 'D';
  }
  throw std::invalid_argument("noise_char: bad kind");
}

inline NoiseKind noise_from_char(char c) {
  switch (c) {
    case 'B': return NoiseKind::BitFlip;
    case 'P': return NoiseKind::PhaseFlip;
    case 'A': return NoiseKind::AmplitudeDamping;
    case 'D': return NoiseKind::Depolarizing;
  }
  throw std::invalid_argument(std::string("unknown noise kind: ") + c);
}

struct KrausSet {
  NoiseKind kind;
  double p;
  std::vector<ComplexMatrix> operators;
};

struct NoiseScenario {
  NoiseKind alpha = NoiseKind::BitFlip;  // qubits 1, 2
  double p_a = 0;
  NoiseKind gamma = NoiseKind::BitFlip;  // qubits 5, 6
  double p_c = 0;
  bool pre_x = false;  // apply Pauli X before each bit-flip channel
};

// sqrt with a tolerance for tiny negative rounding residue.
inline double safe_sqrt(double x) {
  if (x < 0) {
    if (x < -1e-14) throw std::domain_error("safe_sqrt: negative argument");
    x = 0;
  }
  return std::sqrt(x);
}

inline KrausSet kraus_set(NoiseKind kind, double p) {
  if (p < 0 || p > 1) throw std::domain_error("kraus_set: p out of [0,1]");
  KrausSet ks{kind, p, {}};
  const double sp = safe_sqrt(p), s1p = safe_sqrt(1 - p);
  switch (kind) {
    case NoiseKind::BitFlip:
      ks.operators = {cplx(s1p) * pauli_i(), cplx(sp) * pauli_x()};
      break;
    case NoiseKind::PhaseFlip:
      ks.operators = {cplx(s1p) * pauli_i(), cplx(sp) * pauli_z()};
      break;
    case NoiseKind::AmplitudeDamping:
      ks.operators = {ComplexMatrix(2, 2, {1, 0, 0, s1p}),
                      ComplexMatrix(2, 2, {0, sp, 0, 0})};
      break;
    case NoiseKind::Depolarizing: {
      const double s0 = safe_sqrt(1 - 0.75 * p), s4 = safe_sqrt(p / 4);
      ks.operators = {cplx(s0) * pauli_i(), cplx(s4) * pauli_x(),
                      cplx(s4) * pauli_y(), cplx(s4) * pauli_z()};
      break;
    }
  }
  return ks;
}

// rho' = sum_i E_i rho E_i^dagger with E_i = embed(K_i, qubit).
inline DensityMatrix apply_channel(const DensityMatrix& rho, int qubit,
                                   const KrausSet& ks) {
  DensityMatrix out(rho.n_qubits);
  for (const auto& K : ks.operators) {
    const ComplexMatrix E = embed(K, {qubit}, rho.n_qubits);
    out.m += E * rho.m * dagger(E);
  }
  return out;
}

inline DensityMatrix apply_unitary(const DensityMatrix& rho, int qubit,
                                   const ComplexMatrix& u) {
  const ComplexMatrix E = embed(u, {qubit}, rho.n_qubits);
  DensityMatrix out(rho.n_qubits);
  out.m = E * rho.m * dagger(E);
  return out;
}

// Eq.-(29)-style noisy channel: alpha noise on qubits 1,2 (strength p_a),
// gamma noise on qubits 5,6 (strength p_c); qubits 3,4 untouched.
inline DensityMatrix noisy_channel_state(double theta, const NoiseScenario& sc) {
  DensityMatrix rho = DensityMatrix::from_pure(build_channel(theta));
  if (sc.pre_x) {
    if (sc.alpha == NoiseKind::BitFlip)
      for (int q : {1, 2}) rho = apply_unitary(rho, q, pauli_x());
    if (sc.gamma == NoiseKind::BitFlip)
      for (int q : {5, 6}) rho = apply_unitary(rho, q, pauli_x());
  }
  const KrausSet ka = kraus_set(sc.alpha, sc.p_a);
  const KrausSet kc = kraus_set(sc.gamma, sc.p_c);
  for (int q : {1, 2}) rho = apply_channel(rho, q, ka);
  for (int q : {5, 6}) rho = apply_channel(rho, q, kc);
  return rho;
}

// Fully general per-qubit noise assignment (qubits 1..6 in order).
inline DensityMatrix general_noisy_state(
    double theta, const std::array<std::pair<NoiseKind, double>, 6>& per_qubit) {
  DensityMatrix rho = DensityMatrix::from_pure(build_channel(theta));
  for (int q = 1; q <= 6; ++q)
    rho = apply_channel(rho, q, kraus_set(per_qubit[q - 1].first, per_qubit[q - 1].second));
  return rho;
}

}  // namespace jrsp
