#include <doctest.h>

#include "qhopf/twist.hpp"
#include "qhopf/harness.hpp"

using namespace qhopf;

TEST_CASE("J coefficients and invertibility") {
    for (int n = 2; n <= 3; ++n) {
        const TwistData d = TwistData::create(n, 1);
        const auto& T = d.taft;
        const int N = n * n;
        CHECK(d.J.size() == static_cast<std::size_t>(N * N));
        for (int z = 0; z < N; ++z)
            for (int y = 0; y < N; ++y) {
                const CycNumber expected = T.q().pow(-static_cast<long>(z) * (y - y % n));
                CHECK(d.J.coefficient(std::vector<int>{T.idempotent_index(z, 0), T.idempotent_index(y, 0)}) == expected);
                CHECK(expected.multiplicative_order().has_value());
            }
        CHECK(mul(d.J, d.J_inv) == TensorElement::unit(T.idempotent_basis(), 2));
    }
}

TEST_CASE("associator of the twist") {
    for (int n = 2; n <= 4; ++n) {
        const TwistData d = TwistData::create(n, 1);
        REQUIRE(d.sub.contains(d.phi_J));
        const TensorElement phi = d.sub.restrict(d.phi_J);
        CHECK(phi.size() == static_cast<std::size_t>(n * n * n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const CycNumber expected = d.taft.q().pow(-static_cast<long>(i) * (j + k - (j + k) % n));
                    CHECK(phi.coefficient(std::vector<int>{d.sub.index(i, 0), d.sub.index(j, 0), d.sub.index(k, 0)}) ==
                          expected);
                }
        CHECK(phi == phi_l(d.sub, -1));
    }
}

TEST_CASE("n = 2 associator has a single -1") {
    const TwistData d = TwistData::create(2, 1);
    const TensorElement phi = d.sub.restrict(d.phi_J);
    int minus_ones = 0;
    for (const auto& t : phi.terms()) {
        if (t.coeff == CycNumber(-1L)) {
            ++minus_ones;
            CHECK(phi.tuple_of(t.key) == std::vector<int>{d.sub.index(1, 0), d.sub.index(1, 0), d.sub.index(1, 0)});
        } else {
            CHECK(t.coeff.is_one());
        }
    }
    CHECK(minus_ones == 1);
}

TEST_CASE("twisted coproduct and antipode of x") {
    for (int n = 2; n <= 4; ++n)
        for (int e : {1, n * n - 1}) {
            const TwistData d = TwistData::create(n, e);
            const QuasiHopfStructure A = build_Aq(d);
            const auto& sub = d.sub;
            const auto one = TensorElement::unit(sub.descriptor(), 1);
            AlgebraElement weights(sub.descriptor(), 1);
            for (int y = 0; y < n; ++y) weights += d.taft.q().pow(y) * sub.bold_idempotent(y);
            const auto e0 = sub.bold_idempotent(0);
            const TensorElement expected = tensor(sub.x(), weights) + tensor(one, mul(one - e0, sub.x())) +
                                           tensor(sub.monomial(-1, 0), mul(e0, sub.x()));
            CHECK(A.delta(sub.x()) == expected);
            CHECK(A.delta(sub.a()) == tensor(sub.a(), sub.a()));
            CHECK(A.delta(mul(sub.a(), sub.x())) == mul(A.delta(sub.a()), A.delta(sub.x())));

            AlgebraElement sweights(sub.descriptor(), 1);
            for (int z = 0; z < n; ++z) sweights += d.taft.q().pow(n - z) * sub.bold_idempotent(z);
            CHECK(A.S(sub.x()) == -mul(sub.x(), sweights));
            CHECK(A.S(sub.a()) == sub.monomial(-1, 0));
        }
}

TEST_CASE("alpha and beta") {
    for (int n = 2; n <= 4; ++n) {
        const TwistData d = TwistData::create(n, 1);
        const auto& T = d.taft;
        // Σ_z q^{nz} 1_z is g^n = a
        CHECK(T.to_monomial_basis(mul(d.alpha_J, d.beta_J)) == T.monomial(n, 0));
        CHECK(d.beta_J == beta_J_closed_form(T));
        CHECK(d.alpha_J == alpha_J_closed_form(T));
        const QuasiHopfStructure A = build_Aq(d);
        CHECK(A.alpha == d.sub.a());
        CHECK(A.beta == TensorElement::unit(d.sub.descriptor(), 1));
        CHECK(identify_alpha(d.sub, A.alpha) == (n == 2 ? "a = a^-1" : "a"));
    }
}

TEST_CASE("dump output") {
    const std::string phi = dump_structure(2, 1, "phi");
    CHECK(phi.find("conductor=4") != std::string::npos);
    CHECK(phi.find("terms=8") != std::string::npos);
    CHECK(phi.find("-1\t") != std::string::npos);
    const std::string J = dump_structure(2, 1, "J");
    CHECK(J.find("terms=16") != std::string::npos);
    CHECK(dump_structure(2, 1, "alpha").find("# alpha = a = a^-1") != std::string::npos);
    CHECK(dump_structure(3, 1, "alpha").find("# alpha = a\n") != std::string::npos);
    CHECK_THROWS_AS(dump_structure(2, 1, "gamma"), InvalidArgument);
    CHECK_THROWS_AS(dump_structure(3, 3, "J"), InvalidArgument);
}
