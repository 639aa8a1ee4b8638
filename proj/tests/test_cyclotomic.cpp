#include <doctest.h>

#include <numeric>
#include <random>

#include "qhopf/cyclotomic.hpp"

using qhopf::CycNumber;
using qhopf::Rational;

namespace {

CycNumber z(int m, long e) { return CycNumber::root_of_unity(m, e); }

// Order by brute-force repeated multiplication, independent of multiplicative_order.
int brute_order(const CycNumber& a, int bound) {
    CycNumber p = a;
    for (int k = 1; k <= bound; ++k) {
        if (p.is_one()) return k;
        p = p * a;
    }
    return -1;
}

}  // namespace

TEST_CASE("roots of unity") {
    CHECK(z(4, 2) == CycNumber(-1L));
    for (int m = 1; m <= 30; ++m) CHECK(z(m, 0).is_one());
    CHECK(z(9, 3).multiplicative_order() == 3);
    CHECK(brute_order(z(9, 3), 9) == 3);
    CHECK(z(9, 3) == z(3, 1));
    CHECK(z(7, -1) == z(7, 6));
    for (int m = 1; m <= 30; ++m)
        for (int e = 0; e < m; ++e) CHECK(z(m, e).pow(m).is_one());
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(qhopf::cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(qhopf::cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
    CHECK(qhopf::cyclotomic_polynomial(9) == std::vector<long>{1, 0, 0, 1, 0, 0, 1});
    CHECK(qhopf::cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(qhopf::cyclotomic_polynomial(15) == std::vector<long>{1, -1, 0, 1, -1, 1, 0, -1, 1});
    for (int m : {1, 4, 9, 16, 25, 30}) CHECK(static_cast<int>(qhopf::cyclotomic_polynomial(m).size()) == qhopf::euler_phi(m) + 1);
}

TEST_CASE("arithmetic") {
    for (int m = 2; m <= 30; ++m) {
        CycNumber sum;
        for (int t = 0; t < m; ++t) sum += z(m, t);
        CHECK(sum.is_zero());
        CHECK((z(m, 1) * z(m, m - 1)).is_one());
    }
    CHECK(CycNumber(1L) / z(4, 1) == z(4, 3));
    CHECK(CycNumber(1L) / z(4, 1) == -z(4, 1));
    CHECK_THROWS_AS(z(5, 1) / CycNumber(), qhopf::DivisionByZero);
    CHECK_THROWS_AS(CycNumber().inverse(), qhopf::DivisionByZero);
}

TEST_CASE("zero test") {
    CHECK(CycNumber().is_zero());
    CHECK((z(4, 1) + z(4, 3)).is_zero());
    CHECK_FALSE((z(9, 1) - z(9, 2)).is_zero());
    CHECK_FALSE((z(25, 5) - z(5, 1)).is_one());
}

TEST_CASE("canonical form across construction paths") {
    CHECK(z(6, 1) == -(z(3, 2)));
    CHECK(z(6, 1).coefficients() == (-z(3, 2)).embed(6).coefficients());
    CHECK(z(12, 3) == z(4, 1));
    // 1 + ζ_5 + ... + ζ_5^4 written over conductor 25
    CycNumber s;
    for (int t = 0; t < 5; ++t) s += z(25, 5 * t);
    CHECK(s.is_zero());
}

TEST_CASE("multiplicative order") {
    CHECK(CycNumber(1L).multiplicative_order() == 1);
    CHECK(CycNumber(-1L).multiplicative_order() == 2);
    for (int n = 2; n <= 5; ++n)
        for (int e = 1; e < n * n; ++e) {
            if (std::gcd(e, n * n) != 1) continue;
            CHECK(z(n * n, e).multiplicative_order() == n * n);
            CHECK(brute_order(z(n * n, e), n * n) == n * n);
        }
    CHECK_FALSE(CycNumber(2L).multiplicative_order().has_value());
    CHECK_FALSE((CycNumber(1L) + z(8, 1)).multiplicative_order().has_value());
    CHECK(z(3, 1).multiplicative_order() == 3);
    CHECK((-z(3, 1)).multiplicative_order() == 6);
    CHECK_THROWS(CycNumber().multiplicative_order());
}

TEST_CASE("division round trip") {
    std::mt19937_64 rng(7);
    auto random_element = [&](int m) {
        std::vector<Rational> c(static_cast<std::size_t>(qhopf::euler_phi(m)));
        for (auto& v : c) v = Rational(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 5) + 1);
        return CycNumber::from_coefficients(m, c);
    };
    for (int m : {4, 9, 16, 25}) {
        for (int trial = 0; trial < 20; ++trial) {
            const CycNumber a = random_element(m);
            const CycNumber b = random_element(m);
            if (b.is_zero()) continue;
            CHECK((a * b) / b == a);
            CHECK(b * b.inverse() == CycNumber(1L));
        }
    }
}

TEST_CASE("large coefficients leave the 64-bit range and come back") {
    // (1 + i)^2 = 2i, so (1 + i)^200 = 2^100.
    const CycNumber w = CycNumber(1L) + z(4, 1);
    const CycNumber big = w.pow(200);
    mpz_class two100 = 1;
    two100 <<= 100;
    CHECK(big == CycNumber(Rational(two100)));
    CHECK((big * w.pow(-200)).is_one());
    CHECK(big / CycNumber(Rational(two100)) == CycNumber(1L));
    // (1 + ζ_9)^120 has no closed form; compare two evaluation orders.
    const CycNumber u = CycNumber(1L) + z(9, 1);
    CHECK(u.pow(120) == u.pow(60) * u.pow(60));
    CHECK(u.pow(120) / u.pow(119) == u);
    CHECK((u.pow(120) - u.pow(120)).is_zero());
}

TEST_CASE("mixed conductors") {
    const CycNumber q = z(9, 1);
    const CycNumber Q = q.pow(3);
    CHECK(Q == z(3, 1));
    CHECK((q * z(4, 1)).conductor() == 36);
    CHECK((q + z(3, 1) - z(3, 1)) == q);
}

TEST_CASE("rendering") {
    CHECK(CycNumber().to_string() == "0");
    CHECK(CycNumber(1L).to_string() == "1");
    CHECK(z(9, 1).to_string("z") == "z");
    CHECK(z(4, 2).to_string() == "-1");
}
