#include <catch2/catch_amalgamated.hpp>

#include "jrsp/analytic.hpp"
#include "jrsp/averaging.hpp"

using namespace jrsp;

namespace {
constexpr double Q = kPi / 4;

NoisePair pair_of(char a, char g) {
  return {noise_from_char(a), noise_from_char(g)};
}
}  // namespace

TEST_CASE("general_fidelity_B_row basics") {
  SECTION("zero noise at optimal controls is perfect") {
    for (NoiseKind g : {NoiseKind::BitFlip, NoiseKind::PhaseFlip,
                        NoiseKind::AmplitudeDamping, NoiseKind::Depolarizing})
      CHECK(general_fidelity_B_row(g, 0, 0, Q, Q) == Catch::Approx(1.0).margin(1e-12));
  }
  SECTION("the (sin2xi + sin2theta) term vanishes at p_c = 1/2 for phase flip") {
    // Negating both angles flips the sum term but preserves the product term.
    const double f1 = general_fidelity_B_row(NoiseKind::PhaseFlip, 0.3, 0.5, 0.3, 0.4);
    const double f2 =
        general_fidelity_B_row(NoiseKind::PhaseFlip, 0.3, 0.5, -0.3, -0.4);
    CHECK(f1 == Catch::Approx(f2).margin(1e-14));
  }
  SECTION("frozen transcription values") {
    struct Row {
      char g;
      double pa, pc, th, xi, value;
    };
    const Row rows[] = {
        {'B', 0.3, 0.2, 0.5, -0.4, 0.22610915327501041},
        {'B', 0.85, 0.55, -1.1, 0.9, 0.23298852162966488},
        {'P', 0.3, 0.2, 0.5, -0.4, 0.27471412756535768},
        {'P', 0.85, 0.55, -1.1, 0.9, 0.20084914720396962},
        {'A', 0.3, 0.2, 0.5, -0.4, 0.22048229936642511},
        {'A', 0.85, 0.55, -1.1, 0.9, 0.16387003718106408},
        {'D', 0.3, 0.2, 0.5, -0.4, 0.23810672955773188},
        {'D', 0.85, 0.55, -1.1, 0.9, 0.20196439889351386},
    };
    for (const auto& r : rows)
      CHECK(general_fidelity_B_row(noise_from_char(r.g), r.pa, r.pc, r.th, r.xi) ==
            Catch::Approx(r.value).margin(1e-14));
  }
}

TEST_CASE("optimal_params") {
  SECTION("(B,B) is always (pi/4, pi/4)") {
    const OptimalParams op = optimal_params(pair_of('B', 'B'), 0.63, 0.18);
    CHECK(op.theta_opt == Catch::Approx(Q));
    CHECK(op.xi_opt == Catch::Approx(Q));
  }
  SECTION("(B,P) above p_c = 1/2 flips to (-pi/4, -pi/4)") {
    const OptimalParams op = optimal_params(pair_of('B', 'P'), 0.2, 0.8);
    CHECK(op.theta_opt == Catch::Approx(-Q));
    CHECK(op.xi_opt == Catch::Approx(-Q));
  }
  SECTION("(P,A) arctangent example") {
    const OptimalParams op = optimal_params(pair_of('P', 'A'), 0.25, 0.5);
    CHECK(op.theta_opt == Catch::Approx(0.5 * std::atan(std::sqrt(2.0))).margin(1e-12));
    CHECK(op.theta_opt == Catch::Approx(0.4777).margin(1e-4));
    CHECK(std::sin(2 * op.theta_opt) > 0);
    CHECK(std::cos(2 * op.theta_opt) > 0);
  }
  SECTION("boundary p = 1/2 resolves to +pi/4 and is flagged") {
    const OptimalParams op = optimal_params(pair_of('B', 'P'), 0.3, 0.5);
    CHECK(op.theta_opt == Catch::Approx(Q));
    CHECK(op.branch_note == "boundary");
  }
  SECTION("parameters stay in range with recorded branch notes") {
    const char kinds[] = {'B', 'P', 'A', 'D'};
    for (char a : kinds)
      for (char g : kinds)
        for (double pa : {0.1, 0.5, 0.9})
          for (double pc : {0.15, 0.5, 0.95}) {
            const OptimalParams op = optimal_params(pair_of(a, g), pa, pc);
            CHECK(op.theta_opt >= -kPi / 2 - 1e-12);
            CHECK(op.theta_opt <= kPi / 2 + 1e-12);
            CHECK(op.xi_opt >= -kPi / 2 - 1e-12);
            CHECK(op.xi_opt <= kPi / 2 + 1e-12);
            CHECK_FALSE(op.branch_note.empty());
          }
  }
  SECTION("frozen values at (0.3, 0.2)") {
    struct Row {
      char a, g;
      double theta, xi;
    };
    const Row rows[] = {
        {'B', 'B', 0.78539816339744828, Q}, {'B', 'P', 0.78539816339744828, Q},
        {'B', 'A', 0.74732764912015792, Q}, {'B', 'D', 0.78539816339744828, Q},
        {'P', 'B', 0.78539816339744828, Q}, {'P', 'P', 0.78539816339744828, Q},
        {'P', 'A', 0.64912172612985763, Q}, {'P', 'D', 0.78539816339744828, Q},
        {'A', 'B', 0.73587276111650524, Q}, {'A', 'P', 0.67921700337939028, Q},
        {'A', 'A', 0.67738563892616888, Q}, {'A', 'D', 0.72261523334511701, Q},
        {'D', 'B', 0.78539816339744828, Q}, {'D', 'P', 0.78539816339744828, Q},
        {'D', 'A', 0.72416829884166078, Q}, {'D', 'D', 0.78539816339744828, Q},
    };
    for (const auto& r : rows) {
      const OptimalParams op = optimal_params(pair_of(r.a, r.g), 0.3, 0.2);
      CHECK(op.theta_opt == Catch::Approx(r.theta).margin(1e-14));
      CHECK(op.xi_opt == Catch::Approx(r.xi).margin(1e-14));
    }
  }
}

TEST_CASE("optimal_fidelity") {
  SECTION("simple endpoint values") {
    CHECK(optimal_fidelity(pair_of('P', 'P'), 0, 0) == Catch::Approx(1.0).margin(1e-14));
    CHECK(optimal_fidelity(pair_of('P', 'P'), 1, 1) == Catch::Approx(1.0).margin(1e-14));
    CHECK(optimal_fidelity(pair_of('B', 'P'), 0, 0.5) ==
          Catch::Approx(classical_limit()).margin(1e-14));
  }
  SECTION("frozen transcription values, all 16 pairs x 3 points") {
    struct Row {
      char a, g;
      double pa, pc, value;
    };
    const Row rows[] = {
        {'B', 'B', 0.3, 0.2, 0.61085597191288921},
        {'B', 'B', 0.7, 0.6, 0.33200536001996528},
        {'B', 'B', 0.15, 0.85, 0.22554808356198253},
        {'B', 'P', 0.3, 0.2, 0.57082677212296107},
        {'B', 'P', 0.7, 0.6, 0.28325623232804154},
        {'B', 'P', 0.15, 0.85, 0.69683279992681091},
        {'B', 'A', 0.3, 0.2, 0.70715872419813197},
        {'B', 'A', 0.7, 0.6, 0.43317872289117221},
        {'B', 'A', 0.15, 0.85, 0.39711139619150032},
        {'B', 'D', 0.3, 0.2, 0.64941773455354279},
        {'B', 'D', 0.7, 0.6, 0.344091529262253},
        {'B', 'D', 0.15, 0.85, 0.29762878586411806},
        {'P', 'B', 0.3, 0.2, 0.45088000000000006},
        {'P', 'B', 0.7, 0.6, 0.26272000000000001},
        {'P', 'B', 0.15, 0.85, 0.21300500000000006},
        {'P', 'P', 0.3, 0.2, 0.50751999999999997},
        {'P', 'P', 0.7, 0.6, 0.43328},
        {'P', 'P', 0.15, 0.85, 0.64402000000000004},
        {'P', 'A', 0.3, 0.2, 0.51984698634895599},
        {'P', 'A', 0.7, 0.6, 0.40821295486444731},
        {'P', 'A', 0.15, 0.85, 0.38260858324752495},
        {'P', 'D', 0.3, 0.2, 0.49768000000000001},
        {'P', 'D', 0.7, 0.6, 0.34792000000000006},
        {'P', 'D', 0.15, 0.85, 0.29248000000000007},
        {'A', 'B', 0.3, 0.2, 0.59323375454965876},
        {'A', 'B', 0.7, 0.6, 0.28449180295772808},
        {'A', 'B', 0.15, 0.85, 0.22033776597582355},
        {'A', 'P', 0.3, 0.2, 0.58749086791521732},
        {'A', 'P', 0.7, 0.6, 0.35641382838278518},
        {'A', 'P', 0.15, 0.85, 0.70589365826716655},
        {'A', 'A', 0.3, 0.2, 0.70456331904778813},
        {'A', 'A', 0.7, 0.6, 0.4545825415421253},
        {'A', 'A', 0.15, 0.85, 0.4213973634784145},
        {'A', 'D', 0.3, 0.2, 0.64000177233748556},
        {'A', 'D', 0.7, 0.6, 0.33050131076267103},
        {'A', 'D', 0.15, 0.85, 0.29835830337874558},
        {'D', 'B', 0.3, 0.2, 0.53244093539383019},
        {'D', 'B', 0.7, 0.6, 0.2636852338484576},
        {'D', 'B', 0.15, 0.85, 0.2188826678453204},
        {'D', 'P', 0.3, 0.2, 0.5381246269317157},
        {'D', 'P', 0.7, 0.6, 0.30600154231057192},
        {'D', 'P', 0.15, 0.85, 0.67309077740996537},
        {'D', 'A', 0.3, 0.2, 0.61391463517715994},
        {'D', 'A', 0.7, 0.6, 0.32190939632879306},
        {'D', 'A', 0.15, 0.85, 0.3899297884233211},
        {'D', 'D', 0.3, 0.2, 0.57441355231805891},
        {'D', 'D', 0.7, 0.6, 0.29469415923480075},
        {'D', 'D', 0.15, 0.85, 0.29529637257372793},
    };
    for (const auto& r : rows)
      CHECK(optimal_fidelity(pair_of(r.a, r.g), r.pa, r.pc) ==
            Catch::Approx(r.value).margin(1e-14));
  }
  SECTION("(B,P) symmetric about p_c = 1/2") {
    SplitMix64 rng(3);
    for (int i = 0; i < 20; ++i) {
      const double pa = rng.next_double(), d = 0.5 * rng.next_double();
      CHECK(std::abs(optimal_fidelity(pair_of('B', 'P'), pa, 0.5 - d) -
                     optimal_fidelity(pair_of('B', 'P'), pa, 0.5 + d)) <= 1e-12);
    }
  }
  SECTION("(P,P) invariant under p -> 1-p on either axis") {
    SplitMix64 rng(4);
    for (int i = 0; i < 20; ++i) {
      const double pa = rng.next_double(), pc = rng.next_double();
      const double f = optimal_fidelity(pair_of('P', 'P'), pa, pc);
      CHECK(std::abs(f - optimal_fidelity(pair_of('P', 'P'), 1 - pa, pc)) <= 1e-12);
      CHECK(std::abs(f - optimal_fidelity(pair_of('P', 'P'), pa, 1 - pc)) <= 1e-12);
    }
  }
  SECTION("(P,P) bounded below by the classical limit") {
    SplitMix64 rng(5);
    for (int i = 0; i < 50; ++i) {
      const double f =
          optimal_fidelity(pair_of('P', 'P'), rng.next_double(), rng.next_double());
      CHECK(f >= classical_limit() - 1e-12);
      CHECK(f <= 1.0 + 1e-12);
    }
  }
  SECTION("all pairs stay in [0,1]") {
    SplitMix64 rng(6);
    const char kinds[] = {'B', 'P', 'A', 'D'};
    for (char a : kinds)
      for (char g : kinds)
        for (int i = 0; i < 10; ++i) {
          const double f =
              optimal_fidelity(pair_of(a, g), rng.next_double(), rng.next_double());
          CHECK(f >= -1e-12);
          CHECK(f <= 1.0 + 1e-12);
        }
  }
  SECTION("B-row general formula at analytic optimum matches optimal value") {
    SplitMix64 rng(7);
    for (NoiseKind g : {NoiseKind::BitFlip, NoiseKind::PhaseFlip,
                        NoiseKind::AmplitudeDamping, NoiseKind::Depolarizing})
      for (int i = 0; i < 5; ++i) {
        const double pa = rng.next_double(), pc = rng.next_double();
        const NoisePair pr{NoiseKind::BitFlip, g};
        const OptimalParams op = optimal_params(pr, pa, pc);
        CHECK(general_fidelity_B_row(g, pa, pc, op.theta_opt, op.xi_opt) ==
              Catch::Approx(optimal_fidelity(pr, pa, pc)).margin(1e-9));
      }
  }
}

TEST_CASE("classical limit") {
  CHECK(classical_limit() == 0.4);
  CHECK_FALSE(quantum_domain(0.4));
  CHECK(quantum_domain(0.4 + 1e-9));
}
