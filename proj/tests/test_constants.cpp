#include "semialg/constants.hpp"
#include "support.hpp"

using namespace semialg;
using namespace semialg::test;

namespace {

Rational point(const std::optional<LowerBound>& b)
{
    REQUIRE(b);
    REQUIRE(b->value.is_point());
    return b->value.lo;
}

}  // namespace

TEST_CASE("infimum of the weight off the unit")
{
    CHECK(inf_off_unit(*algebra("bc:omega_n=4")).value == 4);
    CHECK(inf_off_unit(*algebra("bc")).value == 1);
    CHECK(inf_off_unit(*algebra("bc:subset(e,qp):N=688")).value == 1);
    CHECK(inf_off_unit(*algebra("bc:geom=3/2")).value == frac(3, 2));
    CHECK(inf_off_unit(*algebra("cu2:mu_n=5")).value == 5);
    // In the full algebra the zero is a basis element with weight 1.
    CHECK(inf_off_unit(*algebra("cu2full:mu_n=5")).value == 1);
}

TEST_CASE("C_DI upper witnesses")
{
    for (int n = 1; n <= 5; ++n) {
        const auto A = algebra("bc:omega_n=" + std::to_string(n));
        CHECK(cdi_upper_witness(el(A, "p"), el(A, "q")).upper->value == n * n);
    }
    const auto A = algebra("bc");
    CHECK(cdi_upper_witness(el(A, "p"), el(A, "q")).upper->value == 1);
    CHECK_THROWS_AS(cdi_upper_witness(el(A, "e"), el(A, "e")), PreconditionError);
    CHECK_THROWS_AS(cdi_upper_witness(el(A, "q"), el(A, "p")), PreconditionError);
}

TEST_CASE("C'_DI brackets")
{
    const BoundReport r4 = cdi_prime_bounds(el(algebra("bc:omega_n=4"), "qp"));
    CHECK(point(r4.lower) == 2);
    CHECK(r4.upper->value == 4);
    const BoundReport r1 = cdi_prime_bounds(el(algebra("bc"), "qp"));
    CHECK(point(r1.lower) == frac(1, 2));
    CHECK(r1.upper->value == 1);
    const BoundReport gap = cdi_prime_bounds(el(algebra("bc:subset(e,qp):N=688"), "qp"));
    CHECK(point(gap.lower) == frac(1, 2));
    CHECK(gap.upper->value == 1);
    CHECK(gap.consistent());

    // A non-monomial idempotent with an explicit witness.
    const auto A = algebra("bc");
    const auto h = el(A, "qp - 1/4 q + 1/4 q^2p");
    const BoundReport w = cdi_prime_bounds(h, std::pair{el(A, "q"), el(A, "p - 1/4 e + 1/4 qp")});
    CHECK(w.upper->value == norm(h));
    CHECK_THROWS_AS(cdi_prime_bounds(AlgebraElement::unit(A)), PreconditionError);
    CHECK_THROWS_AS(cdi_prime_bounds(h), PreconditionError);
}

TEST_CASE("cube-root lower bound off BC_I")
{
    CHECK(point(cdi_lower_offchain(*algebra("bc:subset(e,qp):N=86")).bound) == 1);
    CHECK(point(cdi_lower_offchain(*algebra("bc:subset(e,qp):N=688")).bound) == 2);
    for (int n = 1; n <= 6; ++n) {
        const std::string spec = "bc:subset(e,qp):N=" + std::to_string(86 * n * n * n);
        const CubeRootBound b = cdi_lower_offchain(*algebra(spec));
        CHECK(b.level == 86 * n * n * n);
        CHECK(point(b.bound) == n);
    }
    const CubeRootBound trivial = cdi_lower_offchain(*algebra("bc"));
    CHECK(trivial.level == 1);
    CHECK_FALSE(trivial.bound.value.is_point());
    CHECK(trivial.bound.value.lo * trivial.bound.value.lo * trivial.bound.value.lo <= frac(1, 86));
    CHECK(trivial.bound.value.hi * trivial.bound.value.hi * trivial.bound.value.hi >= frac(1, 86));
    // Any X inside BC_I certifies the level.
    CHECK(cdi_lower_offchain(*algebra("bc:subset(e,q^2p^2):N=688")).level == 688);
    CHECK(cdi_lower_offchain(*algebra("bc:omega_n=688")).level == 688);
    CHECK(cdi_lower_offchain(*algebra("bc:geom=3")).level == 3);
}

TEST_CASE("C_PI witnesses and brackets")
{
    for (int n = 1; n <= 4; ++n) {
        const auto C = algebra("cu2:mu_n=" + std::to_string(n));
        const BoundReport r = cpi_upper_witness(el(C, "a1"), el(C, "b1"), el(C, "a2"), el(C, "b2"));
        CHECK(r.upper->value == n * n * n * n);
        const BoundReport prime = cpi_prime_bounds(el(C, "b1a1"), el(C, "b2a2"));
        CHECK(point(prime.lower) == frac(n * n, 4));
        CHECK(prime.upper->value == n * n);
    }
    const auto C = algebra("cu2");
    CHECK(cpi_upper_witness(el(C, "a1"), el(C, "b1"), el(C, "a2"), el(C, "b2")).upper->value == 1);
    const BoundReport unit = cpi_prime_bounds(el(C, "b1a1"), el(C, "b2a2"));
    CHECK(point(unit.lower) == frac(1, 4));
    CHECK(unit.upper->value == 1);
    const auto A = algebra("bc");
    CHECK_THROWS_AS(cpi_upper_witness(el(A, "p"), el(A, "q"), el(A, "p"), el(A, "q")), PreconditionError);
    CHECK_THROWS_AS(cpi_prime_bounds(el(C, "e"), el(C, "b2a2")), PreconditionError);
}

TEST_CASE("cube-root lower bound off I(Cu2)")
{
    CHECK(point(cpi_lower_offidem(*algebra("cu2:subset(e,b1a1,b2a2):N=688")).bound) == 2);
    CHECK(point(cpi_lower_offidem(*algebra("cu2:subset(e,b1a1,b2a2):N=86")).bound) == 1);
    const CubeRootBound five = cpi_lower_offidem(*algebra("cu2:subset(e,b1a1,b2a2):N=5"));
    CHECK(five.bound.value.lo * five.bound.value.lo * five.bound.value.lo <= frac(5, 86));
    CHECK(five.bound.value.hi * five.bound.value.hi * five.bound.value.hi >= frac(5, 86));
    CHECK_THROWS_AS(cpi_lower_offidem(*algebra("cu2full")), PreconditionError);
}

TEST_CASE("C_DI <= C_PI on computed brackets")
{
    const auto C = algebra("cu2:mu_n=3");
    BoundReport di = cdi_upper_witness(el(C, "a1"), el(C, "b1"));
    di.lower = cdi_prime_bounds(el(C, "b1a1")).lower;
    BoundReport pi = cpi_upper_witness(el(C, "a1"), el(C, "b1"), el(C, "a2"), el(C, "b2"));
    CHECK(di_le_pi(di, pi));
    BoundReport tight = pi;
    tight.upper->value = 1;
    CHECK_FALSE(di_le_pi(di, tight));
}

TEST_CASE("phi_n and the rescaled witness")
{
    const auto A = algebra("bc");
    CHECK(phi_n_value(el(A, "p"), el(A, "q"), 1) == 0);
    CHECK(phi_n_value(el(A, "e"), el(A, "e"), 1) == 1);
    CHECK_THROWS_AS(phi_n_value(el(A, "2p"), el(A, "q"), 1), PreconditionError);

    const auto B = algebra("bc:omega_n=2");
    const PhiRescale r = phi_rescale_witness(el(B, "p"), el(B, "q"), 2, frac(1, 10));
    CHECK(r.bound == frac(41, 100));
    CHECK(r.value <= r.bound);
    CHECK(norm(r.a) <= 2);
    CHECK(norm(r.b) <= 2);
    CHECK(r.value == phi_n_value(r.a, r.b, 2));
    CHECK_THROWS_AS(phi_rescale_witness(el(B, "e"), el(B, "e"), 2, frac(1, 10)), PreconditionError);
}

TEST_CASE("near pairs correct to exact left inverses")
{
    const auto A = algebra("bc:omega_n=2");
    const PhiRescale r = phi_rescale_witness(el(A, "p"), el(A, "q"), 2, frac(1, 10));
    const NearWitness c = correct_near_pair(r.a, r.b, frac(1, 1000000000));
    CHECK(c.residual == 0);
    CHECK(c.a * r.b == AlgebraElement::unit(A));
}
