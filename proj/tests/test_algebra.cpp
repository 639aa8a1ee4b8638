#include <doctest.h>

#include "qhopf/taft.hpp"

using namespace qhopf;

namespace {

// Q[t]/(t^3), basis 1, t, t^2.
DescriptorPtr truncated_polynomials() {
    auto rule = [](int a, int b) -> LinearCombination {
        if (a + b > 2) return {};
        return {{a + b, CycNumber(1L)}};
    };
    return std::make_shared<AlgebraDescriptor>("Q[t]/t^3", std::vector<std::string>{"1", "t", "t^2"}, rule,
                                               LinearCombination{{0, CycNumber(1L)}});
}

TensorElement e(const DescriptorPtr& d, std::initializer_list<int> tuple, long c = 1) {
    return TensorElement::basis(d, tuple, CycNumber(c));
}

}  // namespace

TEST_CASE("products and units") {
    const auto d = truncated_polynomials();
    const auto one = TensorElement::unit(d, 1);
    const auto t = e(d, {1});
    CHECK(mul(one, t) == t);
    CHECK(mul(t, one) == t);
    CHECK(mul(t, t) == e(d, {2}));
    CHECK(mul(mul(t, t), t).is_zero());
    // componentwise product in the tensor square
    CHECK(mul(e(d, {1, 0}), e(d, {1, 2})) == e(d, {2, 2}));
    CHECK(mul(e(d, {2, 0}), e(d, {1, 0})).is_zero());
}

TEST_CASE("tensor and apply_on_factor") {
    const auto d = truncated_polynomials();
    const auto u = e(d, {1}, 2) + e(d, {0}, 3);
    const auto v = e(d, {2});
    const auto uv = tensor(u, v);
    CHECK(uv.rank() == 2);
    CHECK(uv == e(d, {1, 2}, 2) + e(d, {0, 2}, 3));
    // t ↦ t^2 on slot 1, everything else killed
    BasisMap square = [d](int b) { return b == 1 ? e(d, {2}) : TensorElement(d, 1); };
    CHECK(apply_on_factor(square, 1, uv) == e(d, {2, 2}, 2));
    CHECK(apply_on_factor(square, 2, uv).is_zero());
    CHECK_THROWS_AS(apply_on_factor(square, 3, uv), InvalidArgument);
}

TEST_CASE("inversion") {
    const auto d = truncated_polynomials();
    // (1 + t)^{-1} = 1 - t + t^2
    const auto u = e(d, {0}) + e(d, {1});
    CHECK(invert(u) == e(d, {0}) - e(d, {1}) + e(d, {2}));
    CHECK(mul(u, invert(u)) == TensorElement::unit(d, 1));
    CHECK_THROWS_AS(invert(e(d, {1})), SingularElement);
    const auto w = tensor(u, u);
    CHECK(mul(invert(w), w) == TensorElement::unit(d, 2));
}

TEST_CASE("no stored zeros") {
    const auto d = truncated_polynomials();
    const auto u = e(d, {1}) - e(d, {1});
    CHECK(u.is_zero());
    CHECK(u.size() == 0);
    CHECK((CycNumber() * e(d, {2})).size() == 0);
}

TEST_CASE("in_span") {
    const auto d = truncated_polynomials();
    const std::vector<int> low = {0, 1};
    CHECK(in_span(e(d, {1}, 5) + e(d, {0}), low));
    CHECK_FALSE(in_span(e(d, {2}), low));
}

TEST_CASE("associativity of H(q) on all basis triples, n = 2") {
    const TaftAlgebra T = TaftAlgebra::create(2, 1);
    for (const auto& basis : {T.monomial_basis(), T.idempotent_basis()}) {
        const int dim = basis->dimension();
        const auto one = TensorElement::unit(basis, 1);
        for (int a = 0; a < dim; ++a) {
            const auto A = TensorElement::basis(basis, {a});
            CHECK(mul(one, A) == A);
            CHECK(mul(A, one) == A);
            for (int b = 0; b < dim; ++b) {
                const auto AB = mul(A, TensorElement::basis(basis, {b}));
                for (int c = 0; c < dim; ++c) {
                    const auto C = TensorElement::basis(basis, {c});
                    CHECK(mul(AB, C) == mul(A, mul(TensorElement::basis(basis, {b}), C)));
                }
            }
        }
    }
}

TEST_CASE("first_difference names the term") {
    const auto d = truncated_polynomials();
    CHECK_FALSE(first_difference(e(d, {1}), e(d, {1})).has_value());
    const auto diff = first_difference(e(d, {1}), e(d, {2}));
    REQUIRE(diff.has_value());
    CHECK(diff->find("t") != std::string::npos);
}
