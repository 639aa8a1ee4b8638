#include "qhopf/cocycle.hpp"

#include <random>

namespace qhopf {

namespace {

int mod(long a, int m) {
    long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

ThreeCochain::ThreeCochain(int n) : n_(n) {
    if (n < 1) throw InvalidArgument("cochain modulus must be positive");
    values_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n), CycNumber(1L));
}

std::size_t ThreeCochain::slot(int i, int j, int k) const {
    return (static_cast<std::size_t>(mod(i, n_)) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(mod(j, n_))) *
               static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(mod(k, n_));
}

const CycNumber& ThreeCochain::operator()(int i, int j, int k) const { return values_[slot(i, j, k)]; }

void ThreeCochain::set(int i, int j, int k, CycNumber value) { values_[slot(i, j, k)] = std::move(value); }

ThreeCochain operator*(const ThreeCochain& a, const ThreeCochain& b) {
    if (a.n_ != b.n_) throw InvalidArgument("cochains over different groups");
    ThreeCochain out(a.n_);
    for (std::size_t s = 0; s < a.values_.size(); ++s) out.values_[s] = a.values_[s] * b.values_[s];
    return out;
}

bool operator==(const ThreeCochain& a, const ThreeCochain& b) { return a.n_ == b.n_ && a.values_ == b.values_; }

ThreeCochain omega(int n, const CycNumber& q, int l) {
    ThreeCochain c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) c.set(i, j, k, q.pow(static_cast<long>(l) * i * (j + k - (j + k) % n)));
    return c;
}

ThreeCochain cochain_from_associator(const SubalgebraA& sub, const TensorElement& phi) {
    if (phi.parent() != sub.descriptor() || phi.rank() != 3)
        throw InvalidArgument("associator must be a rank-3 element of A(q)");
    const int n = sub.n();
    ThreeCochain c(n);
    std::size_t seen = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const int tuple[3] = {sub.index(i, 0), sub.index(j, 0), sub.index(k, 0)};
                CycNumber v = phi.coefficient(tuple);
                if (!v.is_zero()) ++seen;
                c.set(i, j, k, std::move(v));
            }
    if (seen != phi.size()) throw InvalidArgument("associator has terms outside the idempotent triples");
    return c;
}

CheckResult check_3cocycle(const ThreeCochain& c) {
    const std::string name = "3-cocycle";
    const int n = c.n();
    const auto args = [](int i, int j, int k) {
        return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if ((i == 0 || j == 0 || k == 0) && !c(i, j, k).is_one())
                    return CheckResult::fail(name, "not normalized at " + args(i, j, k) + ": " + c(i, j, k).to_string());
                for (int l = 0; l < n; ++l) {
                    const CycNumber lhs = c(j, k, l) * c(i, j + k, l) * c(i, j, k);
                    const CycNumber rhs = c(i + j, k, l) * c(i, j, k + l);
                    if (!(lhs == rhs))
                        return CheckResult::fail(name, "cocycle condition fails at (i,j,k,l) = (" + std::to_string(i) +
                                                           "," + std::to_string(j) + "," + std::to_string(k) + "," +
                                                           std::to_string(l) + "): " + lhs.to_string() + " vs " +
                                                           rhs.to_string());
                }
            }
    return CheckResult::pass(name, std::to_string(n * n * n * n) + " quadruples");
}

CycNumber class_invariant(const ThreeCochain& c) {
    const CheckResult r = check_3cocycle(c);
    if (!r.passed) throw InvalidArgument("class_invariant: not a 3-cocycle (" + r.witness + ")");
    CycNumber out(1L);
    for (int j = 0; j < c.n(); ++j) out *= c(1, j, 1);
    return out;
}

std::vector<CycNumber> random_two_cochain(int n, std::uint64_t seed) {
    const int N = n * n;
    std::mt19937_64 rng(seed);
    std::vector<CycNumber> b(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), CycNumber(1L));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            b[static_cast<std::size_t>(i * n + j)] =
                CycNumber::root_of_unity(N, static_cast<long>(rng() % static_cast<std::uint64_t>(N)));
    return b;
}

ThreeCochain coboundary(int n, const std::vector<CycNumber>& b) {
    if (b.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw InvalidArgument("2-cochain must have n^2 values");
    const auto at = [&](int i, int j) -> const CycNumber& {
        return b[static_cast<std::size_t>(mod(i, n) * n + mod(j, n))];
    };
    ThreeCochain c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                c.set(i, j, k, at(j, k) * at(i + j, k).inverse() * at(i, j + k) * at(i, j).inverse());
    return c;
}

ThreeCochain random_coboundary(int n, std::uint64_t seed) { return coboundary(n, random_two_cochain(n, seed)); }

}  // namespace qhopf
