#include "qhopf/taft.hpp"

#include <numeric>

namespace qhopf {

namespace {

int mod(long a, int m) {
    long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

std::string power_label(const char* symbol, int k) {
    if (k == 0) return "";
    if (k == 1) return symbol;
    return std::string(symbol) + "^" + std::to_string(k);
}

std::string join_label(std::string a, const std::string& b) {
    if (a.empty()) return b.empty() ? "1" : b;
    if (b.empty()) return a;
    return a + " " + b;
}

}  // namespace

// ---------------------------------------------------------------------------
// TaftAlgebra

TaftAlgebra TaftAlgebra::create(int n, int e) {
    if (n < 2) throw InvalidArgument("n must be at least 2, got " + std::to_string(n));
    const int N = n * n;
    if (std::gcd(mod(e, N), N) != 1)
        throw InvalidArgument("q exponent " + std::to_string(e) + " is not coprime to n^2 = " + std::to_string(N));

    TaftAlgebra t;
    t.n_ = n;
    t.e_ = mod(e, N);
    auto powers = std::make_shared<std::vector<CycNumber>>();
    for (int k = 0; k < N; ++k) powers->push_back(CycNumber::root_of_unity(N, static_cast<long>(t.e_) * k));
    t.q_powers_ = powers;

    // monomial basis
    std::vector<std::string> mono_labels;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) mono_labels.push_back(join_label(power_label("g", i), power_label("x", j)));
    auto mono_rule = [N, powers](int a, int b) -> LinearCombination {
        const int i = a / N, j = a % N, k = b / N, l = b % N;
        if (j + l >= N) return {};
        return {{((i + k) % N) * N + j + l, (*powers)[static_cast<std::size_t>(mod(-static_cast<long>(j) * k, N))]}};
    };
    t.monomial_ = std::make_shared<AlgebraDescriptor>("H(q) monomial", std::move(mono_labels), mono_rule,
                                                      LinearCombination{{0, CycNumber(1L)}});

    // idempotent basis
    std::vector<std::string> idem_labels;
    IdempotentFrame frame;
    for (int z = 0; z < N; ++z) {
        frame.idempotent_index.push_back(z * N);
        for (int j = 0; j < N; ++j) {
            idem_labels.push_back(join_label("1_" + std::to_string(z), power_label("x", j)));
            frame.left_key.push_back(z);
            frame.right_key.push_back(mod(z - j, N));
        }
    }
    auto idem_rule = [N](int a, int b) -> LinearCombination {
        const int z = a / N, j = a % N, w = b / N, l = b % N;
        if (j + l >= N || z != (w + j) % N) return {};
        return {{z * N + j + l, CycNumber(1L)}};
    };
    LinearCombination idem_unit;
    for (int z = 0; z < N; ++z) idem_unit.push_back({z * N, CycNumber(1L)});
    t.idempotent_ = std::make_shared<AlgebraDescriptor>("H(q) idempotent", std::move(idem_labels), idem_rule,
                                                        std::move(idem_unit), std::move(frame));

    // Δ(g^i x^j) = (g⊗g)^i (x⊗g + 1⊗x)^j, S(g^i x^j) = S(x)^j S(g)^i
    const auto& M = t.monomial_;
    const TensorElement delta_x =
        TensorElement::basis(M, {t.monomial_index(0, 1), t.monomial_index(1, 0)}) +
        TensorElement::basis(M, {t.monomial_index(0, 0), t.monomial_index(0, 1)});
    const AlgebraElement s_x = -mul(t.monomial(0, 1), t.monomial(N - 1, 0));
    std::vector<TensorElement> delta_x_pow{TensorElement::unit(M, 2)};
    std::vector<AlgebraElement> s_x_pow{TensorElement::unit(M, 1)};
    for (int j = 1; j < N; ++j) {
        delta_x_pow.push_back(mul(delta_x_pow.back(), delta_x));
        s_x_pow.push_back(mul(s_x_pow.back(), s_x));
    }
    auto deltas = std::make_shared<std::vector<TensorElement>>();
    auto antipodes = std::make_shared<std::vector<AlgebraElement>>();
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const int gi = t.monomial_index(i, 0);
            deltas->push_back(mul(TensorElement::basis(M, {gi, gi}), delta_x_pow[static_cast<std::size_t>(j)]));
            antipodes->push_back(mul(s_x_pow[static_cast<std::size_t>(j)], t.monomial(N - i, 0)));
        }
    t.delta_mono_ = deltas;
    t.antipode_mono_ = antipodes;
    return t;
}

const CycNumber& TaftAlgebra::q_pow(long k) const { return (*q_powers_)[static_cast<std::size_t>(mod(k, order()))]; }

int TaftAlgebra::monomial_index(int i, int j) const {
    const int N = order();
    if (j < 0 || j >= N) throw InvalidArgument("x exponent out of range");
    return mod(i, N) * N + j;
}

std::pair<int, int> TaftAlgebra::monomial_exponents(int index) const { return {index / order(), index % order()}; }

int TaftAlgebra::idempotent_index(int z, int j) const {
    const int N = order();
    if (j < 0 || j >= N) throw InvalidArgument("x exponent out of range");
    return mod(z, N) * N + j;
}

std::pair<int, int> TaftAlgebra::idempotent_labels(int index) const { return {index / order(), index % order()}; }

AlgebraElement TaftAlgebra::monomial(int i, int j) const {
    return TensorElement::basis(monomial_, {monomial_index(i, j)});
}

AlgebraElement TaftAlgebra::taft_mul(int i, int j, int k, int l) const { return mul(monomial(i, j), monomial(k, l)); }

AlgebraElement TaftAlgebra::delta_monomial_basis(int index) const {
    return (*delta_mono_)[static_cast<std::size_t>(index)];
}

TensorElement TaftAlgebra::delta_idempotent_basis(int index) const {
    // Δ(1_z x^j) = Δ(1_z) Δ(x^j) with Δ(1_z) = Σ_{a+b=z} 1_a ⊗ 1_b; a monomial
    // g^p x^k ⊗ g^r x^l of Δ(x^j) contributes Σ_a q^{pa + r(z-a)} 1_a x^k ⊗ 1_{z-a} x^l.
    const int N = order();
    const auto [z, j] = idempotent_labels(index);
    const TensorElement& dx = (*delta_mono_)[static_cast<std::size_t>(monomial_index(0, j))];
    TermAccumulator acc(idempotent_, 2);
    const auto dim = static_cast<TensorElement::Key>(dimension());
    for (const auto& t : dx.terms()) {
        const auto tuple = dx.tuple_of(t.key);
        const auto [p, k] = monomial_exponents(tuple[0]);
        const auto [r, l] = monomial_exponents(tuple[1]);
        for (int a = 0; a < N; ++a) {
            const int b = mod(z - a, N);
            const auto key = static_cast<TensorElement::Key>(idempotent_index(a, k)) * dim +
                             static_cast<TensorElement::Key>(idempotent_index(b, l));
            acc.add(key, t.coeff * q_pow(static_cast<long>(p) * a + static_cast<long>(r) * b));
        }
    }
    return std::move(acc).finish();
}

BasisMap TaftAlgebra::delta_map(const DescriptorPtr& basis) const {
    if (basis == monomial_) return [self = *this](int b) { return self.delta_monomial_basis(b); };
    if (basis == idempotent_) return [self = *this](int b) { return self.delta_idempotent_basis(b); };
    throw InvalidArgument("delta: element is not in H(q)");
}

BasisMap TaftAlgebra::epsilon_map(const DescriptorPtr& basis) const {
    if (basis == monomial_)
        return [self = *this](int b) {
            return TensorElement::scalar(self.monomial_, CycNumber(self.monomial_exponents(b).second == 0 ? 1L : 0L));
        };
    if (basis == idempotent_)
        return [self = *this](int b) {
            // ε(1_z) = δ_{z,0}, ε(x) = 0
            return TensorElement::scalar(self.idempotent_, CycNumber(b == 0 ? 1L : 0L));
        };
    throw InvalidArgument("epsilon: element is not in H(q)");
}

BasisMap TaftAlgebra::antipode_map(const DescriptorPtr& basis) const {
    if (basis == monomial_) return [self = *this](int b) { return (*self.antipode_mono_)[static_cast<std::size_t>(b)]; };
    if (basis == idempotent_)
        return [self = *this](int b) {
            // S(1_z x^j) = S(x^j) 1_{-z}
            const auto [z, j] = self.idempotent_labels(b);
            const AlgebraElement sxj = self.to_idempotent_basis(
                (*self.antipode_mono_)[static_cast<std::size_t>(self.monomial_index(0, j))]);
            return mul(sxj, TensorElement::basis(self.idempotent_, {self.idempotent_index(-z, 0)}));
        };
    throw InvalidArgument("antipode: element is not in H(q)");
}

TensorElement TaftAlgebra::delta(const AlgebraElement& u) const {
    if (u.rank() != 1) throw InvalidArgument("delta expects a rank-1 element");
    return apply_on_factor(delta_map(u.parent()), 1, u);
}

CycNumber TaftAlgebra::epsilon(const AlgebraElement& u) const {
    if (u.rank() != 1) throw InvalidArgument("epsilon expects a rank-1 element");
    if (u.is_zero()) return CycNumber();
    return apply_on_factor(epsilon_map(u.parent()), 1, u).scalar_value();
}

AlgebraElement TaftAlgebra::antipode(const AlgebraElement& u) const {
    if (u.rank() != 1) throw InvalidArgument("antipode expects a rank-1 element");
    return apply_on_factor(antipode_map(u.parent()), 1, u);
}

AlgebraElement TaftAlgebra::idempotent(int z) const {
    const int N = order();
    TermAccumulator acc(monomial_, 1);
    const CycNumber scale(Rational(1, N));
    for (int t = 0; t < N; ++t)
        acc.add(static_cast<TensorElement::Key>(monomial_index(t, 0)), scale * q_pow(-static_cast<long>(z) * t));
    return std::move(acc).finish();
}

AlgebraElement TaftAlgebra::bold_idempotent(int s) const {
    AlgebraElement out(monomial_, 1);
    for (int i = 0; i < n_; ++i) out += idempotent(s + n_ * i);
    return out;
}

TensorElement TaftAlgebra::to_idempotent_basis(const TensorElement& u) const {
    if (u.parent() != monomial_) throw InvalidArgument("to_idempotent_basis expects the monomial basis");
    const int N = order();
    return map_all_slots(
        [&](int b) {
            const auto [i, j] = monomial_exponents(b);
            TermAccumulator acc(idempotent_, 1);
            for (int z = 0; z < N; ++z)
                acc.add(static_cast<TensorElement::Key>(idempotent_index(z, j)), q_pow(static_cast<long>(i) * z));
            return std::move(acc).finish();
        },
        idempotent_, u);
}

TensorElement TaftAlgebra::to_monomial_basis(const TensorElement& u) const {
    if (u.parent() != idempotent_) throw InvalidArgument("to_monomial_basis expects the idempotent basis");
    const int N = order();
    const CycNumber scale(Rational(1, N));
    return map_all_slots(
        [&](int b) {
            const auto [z, j] = idempotent_labels(b);
            TermAccumulator acc(monomial_, 1);
            for (int t = 0; t < N; ++t)
                acc.add(static_cast<TensorElement::Key>(monomial_index(t, j)), scale * q_pow(-static_cast<long>(z) * t));
            return std::move(acc).finish();
        },
        monomial_, u);
}

std::vector<int> TaftAlgebra::subalgebra_monomials() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < order(); ++j) out.push_back(monomial_index(n_ * i, j));
    return out;
}

// ---------------------------------------------------------------------------
// SubalgebraA

SubalgebraA::SubalgebraA(TaftAlgebra taft) : taft_(std::move(taft)) {
    const int n = taft_.n();
    const int N = taft_.order();
    std::vector<std::string> labels;
    IdempotentFrame frame;
    for (int s = 0; s < n; ++s) {
        frame.idempotent_index.push_back(s * N);
        for (int j = 0; j < N; ++j) {
            labels.push_back(join_label("e_" + std::to_string(s), power_label("x", j)));
            frame.left_key.push_back(s);
            frame.right_key.push_back(mod(s - j, n));
        }
    }
    auto rule = [n, N](int a, int b) -> LinearCombination {
        const int s = a / N, j = a % N, t = b / N, l = b % N;
        if (j + l >= N || s != (t + j) % n) return {};
        return {{s * N + j + l, CycNumber(1L)}};
    };
    LinearCombination unit;
    for (int s = 0; s < n; ++s) unit.push_back({s * N, CycNumber(1L)});
    descriptor_ =
        std::make_shared<AlgebraDescriptor>("A(q)", std::move(labels), rule, std::move(unit), std::move(frame));
}

int SubalgebraA::index(int s, int j) const {
    if (j < 0 || j >= taft_.order()) throw InvalidArgument("x exponent out of range");
    return mod(s, n()) * taft_.order() + j;
}

std::pair<int, int> SubalgebraA::labels(int index) const { return {index / taft_.order(), index % taft_.order()}; }

AlgebraElement SubalgebraA::basis_element(int s, int j) const { return TensorElement::basis(descriptor_, {index(s, j)}); }

AlgebraElement SubalgebraA::monomial(int i, int j) const {
    TermAccumulator acc(descriptor_, 1);
    for (int s = 0; s < n(); ++s)
        acc.add(static_cast<TensorElement::Key>(index(s, j)), taft_.Q().pow(static_cast<long>(i) * s));
    return std::move(acc).finish();
}

TensorElement SubalgebraA::embed(const TensorElement& u) const {
    if (u.parent() != descriptor_) throw InvalidArgument("embed expects an element of A(q)");
    const auto& H = taft_.idempotent_basis();
    return map_all_slots(
        [&](int b) {
            const auto [s, j] = labels(b);
            TermAccumulator acc(H, 1);
            for (int i = 0; i < n(); ++i)
                acc.add(static_cast<TensorElement::Key>(taft_.idempotent_index(s + n() * i, j)), CycNumber(1L));
            return std::move(acc).finish();
        },
        H, u);
}

namespace {

struct RestrictOutcome {
    std::optional<TensorElement> value;
    std::string witness;
};

RestrictOutcome try_restrict(const SubalgebraA& A, const TensorElement& u) {
    const TaftAlgebra& T = A.taft();
    if (u.parent() != T.idempotent_basis())
        throw InvalidArgument("restrict expects an element of H(q) in the idempotent basis");
    const int n = A.n();
    const int r = u.rank();
    const auto adim = static_cast<TensorElement::Key>(A.dimension());

    struct Fiber {
        CycNumber coeff;
        std::size_t count = 0;
        TensorElement::Key first_key = 0;
    };
    std::unordered_map<TensorElement::Key, Fiber> fibers;
    const auto describe = [&](TensorElement::Key key) {
        std::string label;
        const auto tuple = u.tuple_of(key);
        for (std::size_t s = 0; s < tuple.size(); ++s) label += (s ? " ⊗ " : "") + u.parent()->label(tuple[s]);
        return label;
    };
    for (const auto& t : u.terms()) {
        TensorElement::Key reduced = 0;
        for (int b : u.tuple_of(t.key)) {
            const auto [z, j] = T.idempotent_labels(b);
            reduced = reduced * adim + static_cast<TensorElement::Key>(A.index(z % n, j));
        }
        auto [it, inserted] = fibers.try_emplace(reduced, Fiber{t.coeff, 0, t.key});
        if (!inserted && !(it->second.coeff == t.coeff))
            return {std::nullopt, "coefficient " + t.coeff.to_string() + " at " + describe(t.key) + " differs from " +
                                      it->second.coeff.to_string() + " at " + describe(it->second.first_key)};
        ++it->second.count;
    }
    std::size_t full = 1;
    for (int s = 0; s < r; ++s) full *= static_cast<std::size_t>(n);
    TermAccumulator acc(A.descriptor(), r);
    std::vector<std::pair<TensorElement::Key, const Fiber*>> ordered;
    for (const auto& [key, fiber] : fibers) ordered.emplace_back(key, &fiber);
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [key, fiber] : ordered) {
        if (fiber->count != full)
            return {std::nullopt, "term " + describe(fiber->first_key) + " has only " + std::to_string(fiber->count) +
                                      " of " + std::to_string(full) + " lifts present"};
        acc.add(key, fiber->coeff);
    }
    return {std::move(acc).finish(), {}};
}

}  // namespace

TensorElement SubalgebraA::restrict(const TensorElement& u) const {
    auto outcome = try_restrict(*this, u);
    if (!outcome.value) throw ClosureError(outcome.witness);
    return std::move(*outcome.value);
}

bool SubalgebraA::contains(const TensorElement& u) const { return try_restrict(*this, u).value.has_value(); }

}  // namespace qhopf
