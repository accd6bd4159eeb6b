// Dense complex linear algebra on small (<= 64-dimensional) Hilbert spaces:
// tensor products, conjugate transpose, operator embedding, projective
// measurement of qubit subsets, trace, and pure-state fidelity.
#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace jrsp {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
// Probability below this is treated as a zero-probability measurement branch.
inline constexpr double kZeroProbThreshold = 1e-14;

// ---------------------------------------------------------------------------
// ComplexMatrix: dense, row-major.
// ---------------------------------------------------------------------------
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  ComplexMatrix(int rows, int cols, std::initializer_list<cplx> entries)
      : rows_(rows), cols_(cols), a_(entries) {
    if (a_.size() != static_cast<size_t>(rows) * cols)
      throw std::invalid_argument("entry count does not match dimensions");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const cplx& operator()(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  const std::vector<cplx>& data() const { return a_; }
  std::vector<cplx>& data() { return a_; }

  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    check_same_shape(o);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  ComplexMatrix& operator*=(cplx s) {
    for (auto& v : a_) v *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) {
    a *= s;
    return a;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matmul shape mismatch");
    ComplexMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

 private:
  void check_same_shape(const ComplexMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("shape mismatch");
  }
  int rows_, cols_;
  std::vector<cplx> a_;
};

inline ComplexMatrix dagger(const ComplexMatrix& m) {
  ComplexMatrix r(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(j, i) = std::conj(m(i, j));
  return r;
}

inline cplx trace(const ComplexMatrix& m) {
  cplx t = 0.0;
  for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

// Kronecker product.
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return r;
}

// Pauli matrices.
inline const ComplexMatrix& pauli_i() {
  static const ComplexMatrix m(2, 2, {1, 0, 0, 1});
  return m;
}
inline const ComplexMatrix& pauli_x() {
  static const ComplexMatrix m(2, 2, {0, 1, 1, 0});
  return m;
}
inline const ComplexMatrix& pauli_y() {
  static const ComplexMatrix m(2, 2, {0, cplx(0, -1), cplx(0, 1), 0});
  return m;
}
inline const ComplexMatrix& pauli_z() {
  static const ComplexMatrix m(2, 2, {1, 0, 0, -1});
  return m;
}

// ---------------------------------------------------------------------------
// StateVector / DensityMatrix
// ---------------------------------------------------------------------------
struct StateVector {
  int n_qubits = 0;
  std::vector<cplx> amp;  // 2^n amplitudes, qubit 1 = most significant bit

  StateVector() = default;
  explicit StateVector(int n) : n_qubits(n), amp(size_t(1) << n) {}

  double norm2() const {
    double s = 0;
    for (const auto& v : amp) s += std::norm(v);
    return s;
  }
};

struct DensityMatrix {
  int n_qubits = 0;
  ComplexMatrix m;

  DensityMatrix() = default;
  explicit DensityMatrix(int n) : n_qubits(n), m(1 << n, 1 << n) {}

  static DensityMatrix from_pure(const StateVector& psi) {
    DensityMatrix rho(psi.n_qubits);
    const int d = 1 << psi.n_qubits;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) rho.m(i, j) = psi.amp[i] * std::conj(psi.amp[j]);
    return rho;
  }
};

// ---------------------------------------------------------------------------
// embed: operator acting as `op` on the given (1-based) target qubits and as
// identity elsewhere, in canonical qubit order 1..n (qubit 1 = MSB).
// ---------------------------------------------------------------------------
inline ComplexMatrix embed(const ComplexMatrix& op, const std::vector<int>& targets,
                           int n_qubits) {
  const int kt = static_cast<int>(targets.size());
  if (op.rows() != (1 << kt) || op.cols() != (1 << kt))
    throw std::invalid_argument("embed: operator dimension mismatch");
  std::vector<int> rest;
  for (int q = 1; q <= n_qubits; ++q) {
    if (std::find(targets.begin(), targets.end(), q) == targets.end())
      rest.push_back(q);
    else if (std::count(targets.begin(), targets.end(), q) > 1)
      throw std::invalid_argument("embed: duplicate target");
  }
  for (int q : targets)
    if (q < 1 || q > n_qubits) throw std::invalid_argument("embed: target out of range");
  const int nr = static_cast<int>(rest.size());
  ComplexMatrix full(1 << n_qubits, 1 << n_qubits);
  for (int r = 0; r < (1 << kt); ++r)
    for (int c = 0; c < (1 << kt); ++c) {
      const cplx v = op(r, c);
      if (v == cplx{}) continue;
      for (int rb = 0; rb < (1 << nr); ++rb) {
        int row = 0, col = 0;
        for (int i = 0; i < kt; ++i) {
          row |= ((r >> (kt - 1 - i)) & 1) << (n_qubits - targets[i]);
          col |= ((c >> (kt - 1 - i)) & 1) << (n_qubits - targets[i]);
        }
        for (int i = 0; i < nr; ++i) {
          const int bit = (rb >> (nr - 1 - i)) & 1;
          row |= bit << (n_qubits - rest[i]);
          col |= bit << (n_qubits - rest[i]);
        }
        full(row, col) += v;
      }
    }
  return full;
}

// ---------------------------------------------------------------------------
// measure_project: project the qubits in S onto |bra> and return the reduced
// state on the complement together with the outcome probability.
// ---------------------------------------------------------------------------
struct MeasureResult {
  DensityMatrix reduced;   // normalized when !zero_branch
  double probability = 0;  // Tr(<bra|rho|bra>)
  bool zero_branch = false;
};

// Unnormalized contraction <bra| rho |bra> over the (1-based) qubits S.
inline ComplexMatrix project_unnormalized(const DensityMatrix& rho,
                                          const std::vector<cplx>& bra,
                                          const std::vector<int>& S) {
  const int n = rho.n_qubits;
  const int kt = static_cast<int>(S.size());
  if (bra.size() != (size_t(1) << kt))
    throw std::invalid_argument("measure_project: bra dimension mismatch");
  std::vector<int> rest;
  for (int q = 1; q <= n; ++q)
    if (std::find(S.begin(), S.end(), q) == S.end()) rest.push_back(q);
  const int nr = static_cast<int>(rest.size());

  // Index maps from (subset-local, rest-local) to global basis index.
  std::vector<int> sub_idx(1 << kt), rest_idx(1 << nr);
  for (int l = 0; l < (1 << kt); ++l) {
    int v = 0;
    for (int i = 0; i < kt; ++i) v |= ((l >> (kt - 1 - i)) & 1) << (n - S[i]);
    sub_idx[l] = v;
  }
  for (int a = 0; a < (1 << nr); ++a) {
    int v = 0;
    for (int i = 0; i < nr; ++i) v |= ((a >> (nr - 1 - i)) & 1) << (n - rest[i]);
    rest_idx[a] = v;
  }

  ComplexMatrix red(1 << nr, 1 << nr);
  for (int a = 0; a < (1 << nr); ++a)
    for (int b = 0; b < (1 << nr); ++b) {
      cplx s = 0;
      for (int l = 0; l < (1 << kt); ++l) {
        const cplx bl = std::conj(bra[l]);
        if (bl == cplx{}) continue;
        for (int lp = 0; lp < (1 << kt); ++lp) {
          if (bra[lp] == cplx{}) continue;
          s += bl * rho.m(sub_idx[l] | rest_idx[a], sub_idx[lp] | rest_idx[b]) *
               bra[lp];
        }
      }
      red(a, b) = s;
    }
  return red;
}

inline MeasureResult measure_project(const DensityMatrix& rho,
                                     const std::vector<cplx>& bra,
                                     const std::vector<int>& S) {
  ComplexMatrix red = project_unnormalized(rho, bra, S);
  MeasureResult out;
  out.probability = std::real(trace(red));
  out.reduced.n_qubits = rho.n_qubits - static_cast<int>(S.size());
  if (out.probability <= kZeroProbThreshold) {
    out.zero_branch = true;
    out.probability = std::max(out.probability, 0.0);
    out.reduced.m = ComplexMatrix(red.rows(), red.cols());
  } else {
    red *= cplx(1.0 / out.probability, 0.0);
    out.reduced.m = std::move(red);
  }
  return out;
}

// <psi| rho |psi> for a pure target.
inline double fidelity_pure(const DensityMatrix& rho, const StateVector& psi) {
  const int d = 1 << rho.n_qubits;
  if (psi.amp.size() != static_cast<size_t>(d))
    throw std::invalid_argument("fidelity_pure: dimension mismatch");
  cplx f = 0;
  for (int i = 0; i < d; ++i) {
    cplx row = 0;
    for (int j = 0; j < d; ++j) row += rho.m(i, j) * psi.amp[j];
    f += std::conj(psi.amp[i]) * row;
  }
  assert(std::abs(f.imag()) <= 1e-10);
  return f.real();
}

// ---------------------------------------------------------------------------
// Small helpers used by the validation suites.
// ---------------------------------------------------------------------------
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double w = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) w = std::max(w, std::abs(a(i, j) - b(i, j)));
  return w;
}

inline bool is_unitary(const ComplexMatrix& u, double tol = 1e-12) {
  return max_abs_diff(u * dagger(u), ComplexMatrix::identity(u.rows())) <= tol;
}

inline double hermiticity_defect(const ComplexMatrix& m) {
  double w = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      w = std::max(w, std::abs(m(i, j) - std::conj(m(j, i))));
  return w;
}

// Positive-semidefinite check for a Hermitian matrix via Cholesky of m + shift*I:
// success certifies smallest eigenvalue >= -shift.
inline bool is_psd(const ComplexMatrix& m, double shift = 1e-10) {
  const int n = m.rows();
  ComplexMatrix L(n, n);
  for (int j = 0; j < n; ++j) {
    double d = std::real(m(j, j)) + shift;
    for (int k = 0; k < j; ++k) d -= std::norm(L(j, k));
    if (d <= 0) return false;
    const double lj = std::sqrt(d);
    L(j, j) = lj;
    for (int i = j + 1; i < n; ++i) {
      cplx s = m(i, j);
      for (int k = 0; k < j; ++k) s -= L(i, k) * std::conj(L(j, k));
      L(i, j) = s / lj;
    }
  }
  return true;
}

// Fixed-order pairwise summation (run-to-run reproducible reductions).
inline double pairwise_sum(std::vector<double> v) {
  if (v.empty()) return 0.0;
  size_t n = v.size();
  while (n > 1) {
    const size_t half = n / 2;
    for (size_t i = 0; i < half; ++i) v[i] = v[2 * i] + v[2 * i + 1];
    if (n % 2) v[half] = v[n - 1];
    n = half + (n % 2);
  }
  return v[0];
}

}  // namespace jrsp
