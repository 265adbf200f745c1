#include "semialg/series.hpp"
#include "support.hpp"

using namespace semialg;
using namespace semialg::test;

namespace {

const Rational tol = frac(1, 1000000000);

const char* const far_q = "(e + 1/10 q - 1/10 q^2p)(e + 1/10 p - 1/10 qp^2) qp (e - 1/10 p + 1/10 qp^2)(e - 1/10 q + 1/10 q^2p)";

}  // namespace

TEST_CASE("root enclosures")
{
    CHECK(root_enclosure(8, 3).is_point());
    CHECK(root_enclosure(8, 3).lo == 2);
    const RationalInterval r = root_enclosure(frac(1, 86), 3, 40);
    CHECK(r.lo * r.lo * r.lo <= frac(1, 86));
    CHECK(r.hi * r.hi * r.hi >= frac(1, 86));
    CHECK(r.hi - r.lo <= Rational(1, 1UL << 40));
}

TEST_CASE("f_M evaluation")
{
    CHECK(f_M_eval(5, 0).is_point());
    CHECK(f_M_eval(5, 0).lo == 0);
    CHECK(f_M_eval(1, frac(3, 16)).lo == frac(3, 2));
    CHECK(f_M_eval(1, frac(3, 16)).is_point());
    CHECK(f_M_eval(frac(1, 2), frac(3, 16)).lo == 1);
    const RationalInterval r = f_M_eval(2, frac(1, 10), 50);
    const double expected = (2 + 0.5) * (1 / std::sqrt(1 - 0.4) - 1);
    CHECK(to_double(r.lo) <= expected + 1e-12);
    CHECK(to_double(r.hi) >= expected - 1e-12);
    CHECK_THROWS_AS(f_M_eval(1, frac(1, 4)), PreconditionError);
    CHECK_THROWS_AS(f_M_eval(-1, frac(1, 8)), PreconditionError);
}

TEST_CASE("Neumann inverse: exact paths")
{
    const auto A = algebra("bc");
    const InverseResult unit = neumann_inverse(AlgebraElement::unit(A), tol);
    CHECK(unit.inverse == AlgebraElement::unit(A));
    CHECK(unit.certificate.kind == CertificateKind::exact);
    const InverseResult r = neumann_inverse(el(A, "e - 1/2 qp"), tol);
    CHECK(r.inverse == el(A, "e + qp"));
    CHECK(r.certificate.kind == CertificateKind::exact);
    CHECK(el(A, "e - 1/2 qp") * r.inverse == AlgebraElement::unit(A));
    CHECK(neumann_inverse(el(A, "e + 1/3 q - 1/3 q^2p"), tol).inverse * el(A, "e + 1/3 q - 1/3 q^2p") ==
          AlgebraElement::unit(A));
    CHECK_THROWS_AS(neumann_inverse(el(A, "e - q"), tol), PreconditionError);
}

TEST_CASE("Neumann inverse: truncated residuals recompute")
{
    std::mt19937_64 rng(3);
    const auto A = algebra("bc:omega_n=2");
    const auto support = enumerate_elements(Engine::bicyclic(), 2);
    int truncated = 0;
    for (int i = 0; i < 30; ++i) {
        AlgebraElement x = random_element(A, support, 2, rng);
        if (x.is_zero()) continue;
        x *= frac(1, 2) / norm(x);
        const auto u = AlgebraElement::unit(A) - x;
        const InverseResult r = neumann_inverse(u, tol);
        const auto one = AlgebraElement::unit(A);
        REQUIRE(norm(u * r.inverse - one) <= tol);
        REQUIRE(norm(r.inverse * u - one) <= tol);
        REQUIRE(r.certificate.residuals.at("||uv-1||") == norm(u * r.inverse - one));
        REQUIRE(r.certificate.all_bounds_hold());
        if (r.certificate.kind == CertificateKind::truncated) ++truncated;
    }
    CHECK(truncated > 0);
}

TEST_CASE("idempotent projection: exact paths")
{
    const auto A = algebra("bc");
    const ProjectionResult same = idempotent_projection(el(A, "e - qp"), tol);
    CHECK(same.idempotent == el(A, "e - qp"));
    CHECK(same.certificate.kind == CertificateKind::exact);
    const ProjectionResult r = idempotent_projection(el(A, "11/10 qp"), tol);
    CHECK(r.idempotent == el(A, "qp"));
    CHECK(r.certificate.kind == CertificateKind::exact);
    const ProjectionResult complement = idempotent_projection(el(A, "11/10 e - 11/10 qp"), tol);
    CHECK(complement.idempotent == el(A, "e - qp"));
    CHECK(complement.certificate.kind == CertificateKind::exact);
    CHECK_THROWS_AS(idempotent_projection(el(A, "1/2 e"), tol), PreconditionError);
}

TEST_CASE("idempotent projection: truncated path")
{
    std::mt19937_64 rng(17);
    const auto A = algebra("bc");
    const std::vector<Element> support{Bicyclic{0, 0}, Bicyclic{1, 0}, Bicyclic{0, 1}, Bicyclic{1, 1}};
    int truncated = 0;
    for (int i = 0; i < 25; ++i) {
        AlgebraElement r = random_element(A, support, 3, rng);
        Rational t = frac(1, 8);
        AlgebraElement a = el(A, "qp") + t * r;
        while (norm(a * a - a) >= frac(1, 16)) {
            t /= 2;
            a = el(A, "qp") + t * r;
        }
        const ProjectionResult res = idempotent_projection(a, tol);
        const Certificate& c = res.certificate;
        const AlgebraElement& p = res.idempotent;
        REQUIRE(norm(p * p - p) <= tol);
        REQUIRE(norm(p * p - p) == c.residuals.at("||p^2-p||"));
        REQUIRE(norm(p - a) <= c.measurements.at("f_||a||(nu).hi") + tol);
        REQUIRE(commutator(p, a).is_zero());
        REQUIRE(c.all_bounds_hold());
        if (c.kind == CertificateKind::truncated) ++truncated;
    }
    CHECK(truncated > 0);
}

TEST_CASE("similarity witnesses: exact family")
{
    const auto A = algebra("bc");
    const auto p = el(A, "qp");
    const SimilarityWitness same = zemanek_witness(p, p, tol);
    CHECK(same.a == p);
    CHECK(same.b == p);
    const auto q = el(A, "qp - 1/4 q + 1/4 q^2p");
    const SimilarityWitness w = zemanek_witness(p, q, tol);
    CHECK(w.certificate.kind == CertificateKind::exact);
    CHECK(w.a * w.b == p);
    CHECK(w.b * w.a == q);
    CHECK(w.a == q);
    CHECK(w.b == p);
    CHECK(w.certificate.all_bounds_hold());
    CHECK_THROWS_AS(zemanek_witness(p, el(A, "q^2p^2"), tol), PreconditionError);
    CHECK_THROWS_AS(zemanek_witness(p, el(A, "qp + 1/10 q"), tol), PreconditionError);
}

TEST_CASE("similarity witnesses: truncated path")
{
    const auto A = algebra("bc");
    const auto p = el(A, "qp");
    const auto q = el(A, far_q);
    REQUIRE(is_idempotent(q));
    const SimilarityWitness w = zemanek_witness(p, q, tol);
    CHECK(w.certificate.kind == CertificateKind::truncated);
    CHECK(norm(w.a * w.b - p) <= tol);
    CHECK(norm(w.b * w.a - q) <= tol);
    CHECK(norm(w.a) * norm(w.b) <= w.certificate.measurements.at("norm_product_bound"));
    CHECK(w.certificate.all_bounds_hold());
}

TEST_CASE("similarity is transitive through composed witnesses")
{
    const auto A = algebra("bc");
    const auto p = el(A, "qp");
    const auto q = el(A, "qp - 1/4 q + 1/4 q^2p");
    const auto r = el(A, "qp - 1/3 q + 1/3 q^2p");
    const SimilarityWitness pq = zemanek_witness(p, q, tol);
    const SimilarityWitness qr = zemanek_witness(q, r, tol);
    CHECK((pq.a * qr.a) * (qr.b * pq.b) == p);
    CHECK((qr.b * pq.b) * (pq.a * qr.a) == r);
}
