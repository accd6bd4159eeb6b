#include <catch2/catch_amalgamated.hpp>

#include "jrsp/linalg.hpp"

using namespace jrsp;

namespace {
StateVector basis_state(int n, int idx) {
  StateVector s(n);
  s.amp[idx] = 1.0;
  return s;
}
}  // namespace

TEST_CASE("tensor products") {
  SECTION("identity case") {
    const ComplexMatrix r = tensor(pauli_i(), pauli_i());
    CHECK(max_abs_diff(r, ComplexMatrix::identity(4)) == 0.0);
  }
  SECTION("X tensor Z") {
    const ComplexMatrix r = tensor(pauli_x(), pauli_z());
    ComplexMatrix expect(4, 4);
    expect(0, 2) = 1;
    expect(1, 3) = -1;
    expect(2, 0) = 1;
    expect(3, 1) = -1;
    CHECK(max_abs_diff(r, expect) == 0.0);
  }
  SECTION("basis projectors") {
    ComplexMatrix p0(2, 2), p1(2, 2);
    p0(0, 0) = 1;
    p1(1, 1) = 1;
    const ComplexMatrix r = tensor(p0, p1);
    ComplexMatrix expect(4, 4);
    expect(1, 1) = 1;
    CHECK(max_abs_diff(r, expect) == 0.0);
  }
  SECTION("associativity and dagger distribution") {
    const ComplexMatrix a = pauli_x(), b = pauli_y(), c = pauli_z();
    CHECK(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) == 0.0);
    CHECK(max_abs_diff(dagger(tensor(a, b)), tensor(dagger(a), dagger(b))) <= 1e-15);
  }
}

TEST_CASE("embed") {
  SECTION("single-qubit placements") {
    CHECK(max_abs_diff(embed(pauli_x(), {1}, 2), tensor(pauli_x(), pauli_i())) == 0.0);
    CHECK(max_abs_diff(embed(pauli_x(), {2}, 2), tensor(pauli_i(), pauli_x())) == 0.0);
  }
  SECTION("two-qubit operator on non-adjacent qubits") {
    const ComplexMatrix zz = tensor(pauli_z(), pauli_z());
    const ComplexMatrix full = embed(zz, {1, 3}, 3);
    // |101>: Z on qubits 1 and 3 gives (-1)(-1) = +1.
    const int idx = 0b101;
    for (int j = 0; j < 8; ++j)
      CHECK(std::abs(full(idx, j) - (j == idx ? cplx(1) : cplx(0))) <= 1e-15);
    // Brute-force comparison against tensor construction Z (x) I (x) Z.
    CHECK(max_abs_diff(full, tensor(tensor(pauli_z(), pauli_i()), pauli_z())) == 0.0);
  }
  SECTION("disjoint embeds commute") {
    const ComplexMatrix e1 = embed(pauli_y(), {2}, 4);
    const ComplexMatrix e2 = embed(pauli_x(), {4}, 4);
    CHECK(max_abs_diff(e1 * e2, e2 * e1) <= 1e-12);
  }
  SECTION("errors") {
    CHECK_THROWS(embed(pauli_x(), {1, 1}, 2));
    CHECK_THROWS(embed(pauli_x(), {1, 2}, 3));  // dimension mismatch
    CHECK_THROWS(embed(pauli_x(), {5}, 3));     // out of range
  }
}

TEST_CASE("measure_project") {
  SECTION("product state") {
    const DensityMatrix rho = DensityMatrix::from_pure(basis_state(2, 0));  // |00>
    const MeasureResult r = measure_project(rho, {1, 0}, {1});
    CHECK(r.probability == Catch::Approx(1.0).margin(1e-12));
    CHECK(std::real(r.reduced.m(0, 0)) == Catch::Approx(1.0).margin(1e-12));
  }
  SECTION("Bell state marginal") {
    StateVector bell(2);
    bell.amp[0] = bell.amp[3] = 1.0 / std::sqrt(2.0);
    const DensityMatrix rho = DensityMatrix::from_pure(bell);
    const MeasureResult r = measure_project(rho, {0, 1}, {1});  // bra = |1> on qubit 1
    CHECK(r.probability == Catch::Approx(0.5).margin(1e-12));
    CHECK(std::real(r.reduced.m(1, 1)) == Catch::Approx(1.0).margin(1e-12));
  }
  SECTION("GHZ3 projected on (|00>+|11>)/sqrt2") {
    StateVector ghz(3);
    ghz.amp[0] = ghz.amp[7] = 1.0 / std::sqrt(2.0);
    const DensityMatrix rho = DensityMatrix::from_pure(ghz);
    const double r2 = 1.0 / std::sqrt(2.0);
    const MeasureResult r = measure_project(rho, {r2, 0, 0, r2}, {1, 2});
    CHECK(r.probability == Catch::Approx(0.5).margin(1e-12));
    // Remaining qubit collapses to |+>.
    CHECK(std::real(r.reduced.m(0, 1)) == Catch::Approx(0.5).margin(1e-12));
    CHECK(std::real(r.reduced.m(0, 0)) == Catch::Approx(0.5).margin(1e-12));
  }
  SECTION("complete basis probabilities sum to 1") {
    StateVector psi(3);
    for (int i = 0; i < 8; ++i) psi.amp[i] = cplx(std::cos(0.3 * i), std::sin(0.7 * i));
    const double nrm = std::sqrt(psi.norm2());
    for (auto& a : psi.amp) a /= nrm;
    const DensityMatrix rho = DensityMatrix::from_pure(psi);
    double total = 0;
    for (int b = 0; b < 4; ++b) {
      std::vector<cplx> bra(4);
      bra[b] = 1.0;
      total += measure_project(rho, bra, {1, 3}).probability;
    }
    CHECK(total == Catch::Approx(1.0).margin(1e-10));
  }
  SECTION("zero-probability branch is flagged") {
    const DensityMatrix rho = DensityMatrix::from_pure(basis_state(2, 0));
    const MeasureResult r = measure_project(rho, {0, 1}, {1});
    CHECK(r.zero_branch);
    CHECK(r.probability <= kZeroProbThreshold);
  }
}

TEST_CASE("fidelity_pure") {
  StateVector psi = basis_state(2, 0);
  SECTION("identity case") {
    CHECK(fidelity_pure(DensityMatrix::from_pure(psi), psi) ==
          Catch::Approx(1.0).margin(1e-12));
  }
  SECTION("maximally mixed") {
    DensityMatrix mixed(2);
    for (int i = 0; i < 4; ++i) mixed.m(i, i) = 0.25;
    CHECK(fidelity_pure(mixed, psi) == Catch::Approx(0.25).margin(1e-12));
  }
  SECTION("diagonal mixture") {
    DensityMatrix rho(2);
    rho.m(0, 0) = 0.7;
    rho.m(3, 3) = 0.3;
    CHECK(fidelity_pure(rho, psi) == Catch::Approx(0.7).margin(1e-12));
  }
  SECTION("equals trace against projector") {
    StateVector v(2);
    v.amp = {cplx(0.5, 0.1), cplx(0.2, -0.3), cplx(0.4, 0.0), cplx(0.1, 0.6)};
    const double nrm = std::sqrt(v.norm2());
    for (auto& a : v.amp) a /= nrm;
    DensityMatrix rho(2);
    rho.m(0, 0) = 0.4;
    rho.m(1, 1) = 0.3;
    rho.m(2, 2) = 0.2;
    rho.m(3, 3) = 0.1;
    const ComplexMatrix proj = DensityMatrix::from_pure(v).m;
    CHECK(fidelity_pure(rho, v) ==
          Catch::Approx(std::real(trace(rho.m * proj))).margin(1e-12));
  }
}

TEST_CASE("psd check and pairwise sum") {
  DensityMatrix mixed(2);
  for (int i = 0; i < 4; ++i) mixed.m(i, i) = 0.25;
  CHECK(is_psd(mixed.m));
  ComplexMatrix neg = ComplexMatrix::identity(4);
  neg(2, 2) = -0.5;
  CHECK_FALSE(is_psd(neg));
  std::vector<double> v(1000, 0.001);
  CHECK(pairwise_sum(v) == Catch::Approx(1.0).margin(1e-14));
}
