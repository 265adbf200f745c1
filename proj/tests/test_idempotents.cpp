#include "semialg/idempotents.hpp"
#include "support.hpp"

#include <set>

using namespace semialg;
using namespace semialg::test;

namespace {

/// All elements with coefficients in {-1, 0, 1} on `basis`.
std::vector<AlgebraElement> sign_patterns(const ContextPtr& ctx, const std::vector<Element>& basis)
{
    std::vector<AlgebraElement> out{AlgebraElement(ctx)};
    for (const auto& s : basis) {
        std::vector<AlgebraElement> next;
        for (const auto& f : out) {
            next.push_back(f);
            next.push_back(f + AlgebraElement::delta(ctx, s));
            next.push_back(f - AlgebraElement::delta(ctx, s));
        }
        out = std::move(next);
    }
    return out;
}

std::set<std::string> as_text(const std::vector<AlgebraElement>& v)
{
    std::set<std::string> out;
    for (const auto& f : v) out.insert(format_element(f));
    return out;
}

std::vector<Element> chain_basis(std::uint64_t k)
{
    std::vector<Element> b;
    for (std::uint64_t i = 0; i < k; ++i) b.emplace_back(Chain{i});
    return b;
}

std::vector<Element> projection_basis(std::size_t depth)
{
    std::vector<std::vector<std::uint8_t>> words{{}};
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i].size() == depth) continue;
        for (std::uint8_t l : {1, 2}) {
            auto w = words[i];
            w.push_back(l);
            words.push_back(w);
        }
    }
    std::vector<Element> b;
    for (const auto& w : words) b.emplace_back(Cu2::projection(w));
    return b;
}

}  // namespace

TEST_CASE("chain characterisation examples")
{
    const auto A = algebra("chain");
    CHECK(chain_idempotent_check(el(A, "s0")));
    CHECK(chain_idempotent_check(el(A, "s0 - s1 + s2")));
    CHECK(is_idempotent(el(A, "s0 - s1 + s2")));
    CHECK_FALSE(chain_idempotent_check(el(A, "s0 + s1")));
    CHECK(el(A, "s0 + s1") * el(A, "s0 + s1") == el(A, "s0 + 3 s1"));
    CHECK_FALSE(chain_idempotent_check(el(A, "1/2 s0")));
    CHECK(chain_idempotent_check(AlgebraElement(A)));
}

TEST_CASE("chain characterisation equals the convolution oracle on 3^8 patterns")
{
    const auto A = algebra("chain");
    std::size_t idempotents = 0;
    for (const auto& f : sign_patterns(A, chain_basis(8))) {
        const bool oracle = f * f == f;
        REQUIRE(chain_idempotent_check(f) == oracle);
        idempotents += oracle ? 1 : 0;
    }
    CHECK(idempotents == 256);
}

TEST_CASE("Cu2 characterisation examples")
{
    const auto C = algebra("cu2");
    CHECK(cu2_idempotent_check(el(C, "e")));
    CHECK(cu2_idempotent_check(el(C, "e - b1a1")));
    CHECK(is_idempotent(el(C, "e - b1a1")));
    CHECK_FALSE(cu2_idempotent_check(el(C, "b1a1 + b2a2 - e")));
    CHECK(power(el(C, "b1a1 + b2a2 - e"), 2) == el(C, "e - b1a1 - b2a2"));
    CHECK_THROWS_AS(cu2_idempotent_check(el(C, "b1")), PreconditionError);
    CHECK_THROWS_AS(cu2_idempotent_check(el(algebra("cu2full"), "e")), PreconditionError);
}

TEST_CASE("Cu2 characterisation equals the convolution oracle on 3^7 patterns")
{
    const auto C = algebra("cu2");
    std::size_t idempotents = 0;
    for (const auto& f : sign_patterns(C, projection_basis(2))) {
        const bool oracle = f * f == f;
        REQUIRE(cu2_idempotent_check(f) == oracle);
        idempotents += oracle ? 1 : 0;
    }
    CHECK(idempotents == 128);
}

TEST_CASE("enumeration agrees with brute force")
{
    const auto A = algebra("chain");
    CHECK(as_text(enumerate_idempotents(A, 1)) == as_text({AlgebraElement(A), el(A, "s0"), el(A, "s1"), el(A, "s0 - s1")}));
    for (std::uint64_t bound = 0; bound <= 4; ++bound) {
        std::vector<AlgebraElement> oracle;
        for (const auto& f : sign_patterns(A, chain_basis(bound + 1))) {
            if (is_idempotent(f)) oracle.push_back(f);
        }
        REQUIRE(as_text(enumerate_idempotents(A, bound)) == as_text(oracle));
    }
    CHECK(as_text(enumerate_idempotents(A, 2)).count(format_element(el(A, "s0 - s1 + s2"))) == 1);

    const auto C = algebra("cu2");
    for (std::size_t depth = 0; depth <= 2; ++depth) {
        std::vector<AlgebraElement> oracle;
        for (const auto& f : sign_patterns(C, projection_basis(depth))) {
            if (is_idempotent(f)) oracle.push_back(f);
        }
        REQUIRE(as_text(enumerate_idempotents(C, depth)) == as_text(oracle));
    }
    CHECK(enumerate_idempotents(C, 1).size() == 8);
    CHECK_THROWS_AS(enumerate_idempotents(A, chain_enumeration_cap + 1), PreconditionError);
    CHECK_THROWS_AS(enumerate_idempotents(algebra("bc"), 1), PreconditionError);
}

TEST_CASE("equivalence witnesses")
{
    const auto A = algebra("bc");
    const auto one = AlgebraElement::unit(A);
    CHECK(check_equivalence_witness(one, el(A, "qp"), el(A, "p"), el(A, "q")));
    CHECK(check_equivalence_witness(one, one, one, one));
    CHECK_FALSE(check_equivalence_witness(one, el(A, "qp"), el(A, "q"), el(A, "p")));

    const auto w = monomial_equivalence_to_unit(el(A, "q^2p^2"));
    REQUIRE(w);
    CHECK(check_equivalence_witness(el(A, "q^2p^2"), one, w->first, w->second));
    const auto C = algebra("cu2");
    const auto wc = monomial_equivalence_to_unit(el(C, "b1 b2 a2 a1"));
    REQUIRE(wc);
    CHECK(check_equivalence_witness(el(C, "b1 b2 a2 a1"), AlgebraElement::unit(C), wc->first, wc->second));
    CHECK_FALSE(monomial_equivalence_to_unit(el(A, "e - qp")));
}

TEST_CASE("orthogonality")
{
    const auto C = algebra("cu2");
    CHECK(check_orthogonal(el(C, "b1a1"), el(C, "b2a2")));
    CHECK(check_orthogonal(el(C, "b1 b1 a1 a1"), el(C, "b2a2")));
    const auto A = algebra("bc");
    CHECK_FALSE(check_orthogonal(el(A, "qp"), el(A, "qp")));
    CHECK(check_orthogonal(AlgebraElement(A), el(A, "q")));
}
