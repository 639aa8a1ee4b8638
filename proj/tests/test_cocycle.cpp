#include <doctest.h>

#include "corruptions.hpp"
#include "qhopf/cocycle.hpp"
#include "qhopf/twist.hpp"

using namespace qhopf;

namespace {

CycNumber q_of(int n, int e) { return CycNumber::root_of_unity(n * n, e); }

// The variant db(i,j,k) = b(j,k) b(i,j+k)^{-1} b(i+j,k) b(i,j)^{-1}.
ThreeCochain swapped_coboundary(int n, const std::vector<CycNumber>& b) {
    auto B = [&](int i, int j) { return b[static_cast<std::size_t>(((i % n) * n) + (j % n))]; };
    ThreeCochain c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) c.set(i, j, k, B(j, k) * B(i, j + k).inverse() * B(i + j, k) * B(i, j).inverse());
    return c;
}

}  // namespace

TEST_CASE("omega values") {
    const CycNumber q = q_of(2, 1);
    const ThreeCochain w = omega(2, q, 1);
    CHECK(w(1, 1, 1) == CycNumber(-1L));
    for (int n = 2; n <= 4; ++n) {
        const ThreeCochain v = omega(n, q_of(n, 1), 1);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                CHECK(v(0, j, k).is_one());
                if (j + k < n)
                    for (int i = 0; i < n; ++i) CHECK(v(i, j, k).is_one());
            }
    }
}

TEST_CASE("omega is a cocycle with class Q^l") {
    CHECK(check_3cocycle(ThreeCochain(3)).passed);
    CHECK(class_invariant(ThreeCochain(3)).is_one());
    for (int n = 2; n <= 5; ++n) {
        const CycNumber q = q_of(n, 1);
        const CycNumber Q = q.pow(n);
        for (int l = -1; l < n; ++l) {
            const ThreeCochain w = omega(n, q, l);
            CHECK(check_3cocycle(w).passed);
            CHECK(class_invariant(w) == Q.pow(l));
            if (l % n != 0) CHECK_FALSE(class_invariant(w).is_one());
        }
    }
}

TEST_CASE("coboundaries") {
    for (int n = 2; n <= 5; ++n) {
        const ThreeCochain w = omega(n, q_of(n, 1), 1);
        const CycNumber inv = class_invariant(w);
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const ThreeCochain db = random_coboundary(n, seed);
            CHECK(check_3cocycle(db).passed);
            CHECK(class_invariant(db).is_one());
            CHECK(class_invariant(w * db) == inv);
        }
        const std::vector<CycNumber> ones(static_cast<std::size_t>(n * n), CycNumber(1L));
        CHECK(coboundary(n, ones) == ThreeCochain(n));
    }
}

TEST_CASE("the swapped coboundary formula is not a cocycle") {
    int failures = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        if (!check_3cocycle(swapped_coboundary(3, random_two_cochain(3, seed))).passed) ++failures;
    CHECK(failures > 0);
}

TEST_CASE("corrupted omega") {
    for (int n = 2; n <= 4; ++n) {
        const auto r = check_3cocycle(testing::corrupted_omega(n, q_of(n, 1)));
        CHECK_FALSE(r.passed);
        CHECK_FALSE(r.witness.empty());
        CHECK_THROWS_AS(class_invariant(testing::corrupted_omega(n, q_of(n, 1))), InvalidArgument);
    }
}

TEST_CASE("associator cochain matches omega slot for slot") {
    for (int n = 2; n <= 3; ++n)
        for (int l = 0; l < n; ++l) {
            const TwistData d = TwistData::create(n, 1);
            const ThreeCochain c = cochain_from_associator(d.sub, phi_l(d.sub, l));
            CHECK(c == omega(n, d.taft.q(), l));
        }
    const TwistData d = TwistData::create(3, 2);
    CHECK(cochain_from_associator(d.sub, d.sub.restrict(d.phi_J)) == omega(3, d.taft.q(), -1));
    CHECK_THROWS_AS(cochain_from_associator(d.sub, TensorElement::basis(d.sub.descriptor(), {0, 0, 1})), InvalidArgument);
}
