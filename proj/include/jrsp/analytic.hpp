// Closed-form reference values: the general averaged-fidelity formulas for the
// bit-flip-on-Alice row, the optimal control parameters for all 16 noise
// pairs (with branch/sign conditions resolved), and all 16 optimal averaged
// fidelities.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "jrsp/noise.hpp"

namespace jrsp {

struct NoisePair {
  NoiseKind alpha;
  NoiseKind gamma;
};

struct OptimalParams {
  double theta_opt = 0;
  double xi_opt = 0;
  // Which sign/branch condition applied: "const+", "const-", "boundary",
  // "arctan", "arctan-reflected" (p_c > 1/2 mirror branch for (A,P)),
  // "arctan-degenerate" (both arctangent arguments vanish).
  std::string branch_note;
};

inline constexpr double classical_limit() { return 2.0 / 5.0; }
inline bool quantum_domain(double f) { return f > classical_limit(); }

namespace detail {
inline constexpr double kPi2 = kPi * kPi;
inline constexpr double kQ = kPi / 4;
}  // namespace detail

// ---------------------------------------------------------------------------
// General <F>(p_a, p_c, theta, xi) for alpha = BitFlip.
// ---------------------------------------------------------------------------
inline double general_fidelity_B_row(NoiseKind gamma, double pa, double pc,
                                     double theta, double xi) {
  using detail::kPi2;
  const double s2x = std::sin(2 * xi), s2t = std::sin(2 * theta);
  const double c2t = std::cos(2 * theta);
  switch (gamma) {
    case NoiseKind::BitFlip:
      return 2.0 / 5 + (1.0 / 5) * (pa * (2 * pc - 1) - pc) * (pa * (2 * pc - 1) - pc + 2) +
             (1.0 / 80) * ((kPi2 - 16) * pa + 16) * (pc - 1) * (pc - 1) * (s2x + s2t) +
             (1.0 / 40) * (8 - (16 - kPi2) * (pa - pa * pa)) * (pc - 1) * (pc - 1) *
                 s2x * s2t;
    case NoiseKind::PhaseFlip:
      return 2.0 / 5 + (1.0 / 5) * (pa - 2) * pa +
             (1.0 / 80) * ((kPi2 - 16) * pa + 16) * (1 - 2 * pc) * (s2x + s2t) +
             (1.0 / 40) * (8 - (16 - kPi2) * (pa - pa * pa)) * (2 * pc - 1) *
                 (2 * pc - 1) * s2x * s2t;
    case NoiseKind::AmplitudeDamping:
      return 2.0 / 5 +
             (1.0 / 20) * (2 * pa * (pc - 1) - pc) * (2 * pa * (pc - 1) - pc + 4) +
             (1.0 / 20) * (1 - 2 * pa) * pc * (2 * pa * (pc - 1) - pc + 2) * c2t +
             (1.0 / 160) * ((kPi2 - 16) * pa + 16) * std::sqrt(1 - pc) * (2 - pc) *
                 (s2x + s2t) +
             (1.0 / 160) * ((kPi2 - 16) * pa + 16) * std::sqrt(1 - pc) * pc * s2x * c2t +
             (1.0 / 40) * (8 - (16 - kPi2) * (pa - pa * pa)) * (1 - pc) * s2x * s2t;
    case NoiseKind::Depolarizing:
      return 2.0 / 5 +
             (1.0 / 20) * (2 * pa * (pc - 1) - pc) * (2 * pa * (pc - 1) - pc + 4) +
             (1.0 / 160) * ((kPi2 - 16) * pa + 16) * (pc - 2) * (pc - 1) * (s2x + s2t) +
             (1.0 / 40) * (8 - (16 - kPi2) * (pa - pa * pa)) * (1 - pc) * (1 - pc) *
                 s2x * s2t;
  }
  throw std::invalid_argument("general_fidelity_B_row: bad gamma");
}

// ---------------------------------------------------------------------------
// Optimal (theta, xi) for every noise pair.
// ---------------------------------------------------------------------------
inline OptimalParams optimal_params(const NoisePair& pr, double pa, double pc) {
  using detail::kPi2;
  using detail::kQ;
  const NoiseKind B = NoiseKind::BitFlip, P = NoiseKind::PhaseFlip,
                  A = NoiseKind::AmplitudeDamping, D = NoiseKind::Depolarizing;
  (void)A;
  auto arctan_note = [](double num, double den) {
    return (num == 0 && den == 0) ? "arctan-degenerate" : "arctan";
  };

  if (pr.alpha == B) {
    if (pr.gamma == B || pr.gamma == D) return {kQ, kQ, "const+"};
    if (pr.gamma == P) {
      if (pc == 0.5) return {kQ, kQ, "boundary"};
      return pc < 0.5 ? OptimalParams{kQ, kQ, "const+"}
                      : OptimalParams{-kQ, -kQ, "const-"};
    }
    // gamma == A
    const double num = 4 * (8 - (16 - kPi2) * (1 - pa) * pa) * (1 - pc) +
                       (16 - (16 - kPi2) * pa) * std::sqrt(1 - pc) * (2 - pc);
    const double den = ((kPi2 - 16) * pa + 16) * std::sqrt(1 - pc) * pc +
                       8 * (1 - 2 * pa) * pc * (-2 * pa * (1 - pc) - pc + 2);
    return {0.5 * std::atan2(num, den), kQ, arctan_note(num, den)};
  }
  if (pr.alpha == P) {
    const double s = pa <= 0.5 ? kQ : -kQ;
    const char* sn = pa == 0.5 ? "boundary" : (pa < 0.5 ? "const+" : "const-");
    if (pr.gamma == B || pr.gamma == D) return {s, s, sn};
    if (pr.gamma == P) {
      const double prod = (1 - 2 * pa) * (1 - 2 * pc);
      if (prod == 0) return {kQ, kQ, "boundary"};
      const double t = prod > 0 ? kQ : -kQ;
      return {t, t, prod > 0 ? "const+" : "const-"};
    }
    // gamma == A
    const double num = 2 * (1 - 2 * pa) * std::sqrt(1 - pc);
    const double den = pc;
    return {0.5 * std::atan2(num, den), s, arctan_note(num, den)};
  }
  if (pr.alpha == A) {
    if (pr.gamma == B) {
      const double num = (1 - pc) * (1 - pc) *
                         (std::sqrt(1 - pa) * ((kPi2 - 16) * pa + 32) + 32 * (1 - pa));
      const double den =
          pa * ((16 - kPi2) * std::sqrt(1 - pa) * (1 - pc) * (1 - pc) -
                8 * (2 * pc - 1) * (2 * (pa - 1) * pc - pa + 2));
      return {0.5 * std::atan2(num, den), kQ, arctan_note(num, den)};
    }
    if (pr.gamma == A) {
      const double sq = std::sqrt((pa - 1) * (pc - 1));
      const double M = (32 * (pa - 1) * (pc - 1) +
                        sq * (32 - (kPi2 - 16) * pa * (pc - 1) - 16 * pc)) /
                       160;
      const double N = (sq * ((kPi2 - 16) * pa * (pc - 1) + 16 * pc) +
                        8 * (pa * (1 - 2 * pc) + pc) * (pa * (2 * pc - 1) + 2 - pc)) /
                       160;
      return {0.5 * std::atan2(M, N), kQ, arctan_note(M, N)};
    }
    if (pr.gamma == D) {
      const double num = std::sqrt(1 - pa) * ((kPi2 - 16) * pa + 32) * (2 - pc) +
                         64 * (pa - 1) * (pc - 1);
      const double den = pa * (((16 - kPi2) * std::sqrt(1 - pa) + 16) * (2 - pc) +
                               16 * pa * (pc - 1));
      return {0.5 * std::atan2(num, den), kQ, arctan_note(num, den)};
    }
    // gamma == P. The textbook arctangent branch maximizes only for p_c < 1/2; beyond
    // that the optimum follows from the phase-flip p -> 1-p antisymmetry:
    // theta*(pa, 1-pc) = -theta*(pa, pc).
    const double xi = pc <= 0.5 ? kQ : -kQ;
    const double q = pc <= 0.5 ? pc : 1 - pc;
    const double num = (1 - 2 * q) * (32 * (pa - 1) * (2 * q - 1) +
                                      std::sqrt(1 - pa) * ((kPi2 - 16) * pa + 32));
    const double den =
        pa * ((kPi2 - 16) * std::sqrt(1 - pa) * (2 * q - 1) - 8 * pa + 16);
    const double th = 0.5 * std::atan2(num, den);
    if (pc == 0.5) return {th, kQ, "boundary"};
    return {pc < 0.5 ? th : -th, xi, pc < 0.5 ? "arctan" : "arctan-reflected"};
  }
  // alpha == D
  if (pr.gamma == B || pr.gamma == D) return {kQ, kQ, "const+"};
  if (pr.gamma == P) {
    if (pc == 0.5) return {kQ, kQ, "boundary"};
    return pc < 0.5 ? OptimalParams{kQ, kQ, "const+"}
                    : OptimalParams{-kQ, -kQ, "const-"};
  }
  // gamma == A
  const double num = ((kPi2 - 16) * pa + 32) * std::sqrt(1 - pc) * (2 - pc) +
                     64 * (pa - 1) * (pc - 1);
  const double den = pc * (((kPi2 - 16) * pa + 32) * std::sqrt(1 - pc) +
                           16 * (pa * (pc - 1) - pc + 2));
  return {0.5 * std::atan2(num, den), kQ, arctan_note(num, den)};
}

// ---------------------------------------------------------------------------
// Optimal averaged fidelities for every noise pair.
// ---------------------------------------------------------------------------
inline double optimal_fidelity(const NoisePair& pr, double pa, double pc) {
  using detail::kPi2;
  const NoiseKind B = NoiseKind::BitFlip, P = NoiseKind::PhaseFlip,
                  A = NoiseKind::AmplitudeDamping, D = NoiseKind::Depolarizing;
  (void)D;
  if (pr.alpha == B) {
    if (pr.gamma == B)
      return 2.0 / 5 +
             (1.0 / 40) * (2 * pa * (pc - 1) * ((kPi2 - 32) * pc - kPi2 + 24) +
                           8 * (4 * pc * pc - 8 * pc + 3) +
                           pa * pa * ((48 - kPi2) * pc * pc - 2 * (32 - kPi2) * pc +
                                      24 - kPi2));
    if (pr.gamma == P)
      return 2.0 / 5 +
             (1.0 / 40) * (((kPi2 - 16) * pa + 16) * std::abs(1 - 2 * pc) -
                           ((kPi2 - 16) * (pa - 1) * pa - 8) * (1 - 2 * pc) *
                               (1 - 2 * pc) +
                           8 * pa * pa - 16 * pa);
    if (pr.gamma == D)
      return 2.0 / 5 +
             (1.0 / 80) * (48 - 2 * (kPi2 - 24) * pa * pa * (pc - 1) * (pc - 1) +
                           12 * pc * (3 * pc - 8) +
                           pa * (pc - 1) * ((3 * kPi2 - 64) * pc - 4 * kPi2 + 96));
    // gamma == A
    const double t1 =
        ((16 - kPi2) * pa - 16) * std::sqrt(1 - pc) * (pc - 2) +
        8 * (2 * pa * (pc - 1) - pc) * (2 * pa * (pc - 1) - pc + 4);
    const double u = 4 * (8 - (16 - kPi2) * (1 - pa) * pa) * (1 - pc) +
                     (16 - (16 - kPi2) * pa) * std::sqrt(1 - pc) * (2 - pc);
    const double v = (16 - (16 - kPi2) * pa) * std::sqrt(1 - pc) * pc +
                     8 * (1 - 2 * pa) * pc * (2 * pa * (pc - 1) - pc + 2);
    return 2.0 / 5 + t1 / 160 + std::sqrt(u * u + v * v) / 160;
  }
  if (pr.alpha == P) {
    if (pr.gamma == B)
      return 2.0 / 5 + (1.0 / 5) * (pc - 2) * pc +
             (1.0 / 5) * (2 * pa - 1) * (2 * pa - 1) * (pc - 1) * (pc - 1) +
             (2.0 / 5) * (pc - 1) * (pc - 1) * std::abs(1 - 2 * pa);
    if (pr.gamma == P)
      return 2.0 / 5 +
             (1.0 / 5) * (2 * pa - 1) * (2 * pa - 1) * (2 * pc - 1) * (2 * pc - 1) +
             (2.0 / 5) * std::abs((2 * pa - 1) * (2 * pc - 1));
    if (pr.gamma == A) {
      const double u = 2 * (1 - 2 * pa) *
                       (2 * (1 - pc) * std::abs(1 - 2 * pa) +
                        std::sqrt(1 - pc) * (2 - pc));
      const double v =
          pc * (2 * std::sqrt(1 - pc) * std::abs(1 - 2 * pa) + 2 - pc);
      return 2.0 / 5 + (1.0 / 20) * (pc - 4) * pc +
             (1.0 / 10) * std::sqrt(1 - pc) * (2 - pc) * std::abs(1 - 2 * pa) +
             (1.0 / 20) * std::sqrt(u * u + v * v);
    }
    // gamma == D
    return 2.0 / 5 + (1.0 / 20) * (pc - 4) * pc +
           (1.0 / 5) * (2 * pa - 1) * (2 * pa - 1) * (pc - 1) * (pc - 1) +
           (1.0 / 5) * (pc - 2) * (pc - 1) * std::abs(1 - 2 * pa);
  }
  if (pr.alpha == A) {
    if (pr.gamma == B) {
      const double t1 =
          std::sqrt(1 - pa) * ((kPi2 - 16) * pa + 32) * (pc - 1) * (pc - 1) +
          8 * (2 * (pa - 1) * pc - pa) * (2 * (pa - 1) * pc - pa + 4);
      const double ub =
          32 - 32 * pa + std::sqrt(1 - pa) * (kPi2 * pa - 16 * pa + 32);
      const double u = std::pow(pc - 1, 4) * ub * ub;
      const double vb = (16 - kPi2) * std::sqrt(1 - pa) * (pc - 1) * (pc - 1) -
                        8 * (2 * pc - 1) * (2 * (pa - 1) * pc - pa + 2);
      const double v = pa * pa * vb * vb;
      return 2.0 / 5 + t1 / 160 + std::sqrt(u + v) / 160;
    }
    if (pr.gamma == P) {
      const double ub = std::sqrt(1 - pa) * ((kPi2 - 16) * pa + 32) +
                        32 * (1 - pa) * std::abs(1 - 2 * pc);
      const double u = (1 - 2 * pc) * (1 - 2 * pc) * ub * ub;
      const double vb =
          (16 - kPi2) * std::sqrt(1 - pa) * std::abs(1 - 2 * pc) + 8 * (2 - pa);
      const double v = pa * pa * vb * vb;
      return 2.0 / 5 + (1.0 / 20) * (pa - 4) * pa +
             (1.0 / 160) * std::sqrt(1 - pa) * ((kPi2 - 16) * pa + 32) *
                 std::abs(1 - 2 * pc) +
             (1.0 / 160) * std::sqrt(u + v);
    }
    if (pr.gamma == A) {
      const double sq = std::sqrt((pa - 1) * (pc - 1));
      const double M = (32 * (pa - 1) * (pc - 1) +
                        sq * (32 - (kPi2 - 16) * pa * (pc - 1) - 16 * pc)) /
                       160;
      const double N = (sq * ((kPi2 - 16) * pa * (pc - 1) + 16 * pc) +
                        8 * (pa * (1 - 2 * pc) + pc) * (pa * (2 * pc - 1) + 2 - pc)) /
                       160;
      const double t1 = sq * (32 - (kPi2 - 16) * pa * (pc - 1) - 16 * pc) +
                        8 * (pa * (2 * pc - 1) - pc) * (pa * (2 * pc - 1) - pc + 4);
      return 2.0 / 5 + t1 / 160 + std::sqrt(M * M + N * N);
    }
    // gamma == D
    const double t1 =
        16 * (pa * (pc - 1) - pc) * (pa * (pc - 1) - pc + 4) +
        std::sqrt(1 - pa) * ((kPi2 - 16) * pa + 32) * (pc - 2) * (pc - 1);
    const double ub = std::sqrt(1 - pa) * ((kPi2 - 16) * pa + 32) * (2 - pc) +
                      64 * (pa - 1) * (pc - 1);
    const double u = (1 - pc) * (1 - pc) * ub * ub;
    const double vb =
        ((16 - kPi2) * std::sqrt(1 - pa) + 16) * (2 - pc) + 16 * pa * (pc - 1);
    const double v = pa * pa * (1 - pc) * (1 - pc) * vb * vb;
    return 2.0 / 5 + t1 / 320 + std::sqrt(u + v) / 320;
  }
  // alpha == D
  if (pr.gamma == B)
    return 2.0 / 5 +
           (1.0 / 80) * (4 * (pa * pa * (4 * pc * (3 * pc - 5) + 9) -
                              4 * pa * (pc - 1) * (7 * pc - 6) +
                              4 * (4 * (pc - 2) * pc + 3)) +
                         kPi2 * (1 - pa) * pa * (pc - 1) * (pc - 1));
  if (pr.gamma == P)
    return 2.0 / 5 +
           (1.0 / 80) * ((1 - pa) * ((kPi2 - 16) * pa + 32) * std::abs(1 - 2 * pc) +
                         16 * (pa - 1) * (pa - 1) * (1 - 2 * pc) * (1 - 2 * pc) +
                         4 * pa * pa - 16 * pa);
  if (pr.gamma == A) {
    const double t1 =
        (1 - pa) * ((kPi2 - 16) * pa + 32) * std::sqrt(1 - pc) * (2 - pc) +
        16 * (pa * (pc - 1) - pc) * (pa * (pc - 1) - pc + 4);
    const double ub = 64 * (1 - pa) * (1 - pc) +
                      ((kPi2 - 16) * pa + 32) * std::sqrt(1 - pc) * (2 - pc);
    const double u = (1 - pa) * (1 - pa) * ub * ub;
    const double vb = ((kPi2 - 16) * pa + 32) * std::sqrt(1 - pc) +
                      16 * (pa * (pc - 1) - pc + 2);
    const double v = (1 - pa) * (1 - pa) * pc * pc * vb * vb;
    return 2.0 / 5 + t1 / 320 + std::sqrt(u + v) / 320;
  }
  // gamma == D
  return 2.0 / 5 +
         (1.0 / 160) * (8 * (pa * pa * (pc - 1) * (7 * pc - 9) -
                             8 * pa * (pc - 1) * (2 * pc - 3) +
                             3 * (pc - 2) * (3 * pc - 2)) +
                        kPi2 * (1 - pa) * pa * (2 - pc) * (1 - pc));
}

}  // namespace jrsp
