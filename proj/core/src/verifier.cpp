#include "qhopf/verifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>

#include "qhopf/linalg.hpp"

namespace qhopf {

namespace {

std::string label_of(const QuasiHopfStructure& s, int b) { return s.carrier->label(b); }

std::string describe(const AlgebraElement& u) {
    std::string text = u.to_string();
    if (text.size() > 300) text = text.substr(0, 300) + " ...";
    return text;
}

BasisMap identity_map(const DescriptorPtr& d) {
    return [d](int b) { return TensorElement::basis(d, {b}); };
}

// Φ^{-1}, skipping the work for the trivial associator.
TensorElement associator_inverse(const QuasiHopfStructure& s) { return invert(s.associator); }

std::vector<std::pair<int, int>> sample_pairs(int dim, std::size_t count, std::uint64_t seed) {
    const auto total = static_cast<std::uint64_t>(dim) * static_cast<std::uint64_t>(dim);
    std::vector<std::pair<int, int>> out;
    if (count >= total) {
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) out.emplace_back(i, j);
        return out;
    }
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t k = 0; k < count; ++k) {
        const auto v = rng() % total;
        out.emplace_back(static_cast<int>(v / static_cast<std::uint64_t>(dim)),
                         static_cast<int>(v % static_cast<std::uint64_t>(dim)));
    }
    return out;
}

bool requires_grading(const QuasiHopfStructure& s, CheckResult& out) {
    if (static_cast<int>(s.x_degree.size()) == s.carrier->dimension() && s.n >= 2 && s.q) return true;
    out = CheckResult::fail(out.name, "structure " + s.name + " carries no x-degree data");
    return false;
}

int max_degree(const AlgebraElement& u, const std::vector<int>& degree) {
    int d = -1;
    for (const auto& t : u.terms()) d = std::max(d, degree[t.key]);
    return d;
}

int min_degree(const AlgebraElement& u, const std::vector<int>& degree) {
    int d = -1;
    for (const auto& t : u.terms()) d = d < 0 ? degree[t.key] : std::min(d, degree[t.key]);
    return d;
}

// Coordinates of a rank-1 element as a dense row.
std::vector<CycNumber> coordinates(const AlgebraElement& u, const std::vector<int>& positions) {
    std::vector<CycNumber> row(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) row[i] = u.coefficient_at(static_cast<TensorElement::Key>(positions[i]));
    return row;
}

std::size_t span_dimension(const std::vector<AlgebraElement>& elements, const std::vector<int>& positions) {
    if (elements.empty() || positions.empty()) return 0;
    Matrix m(elements.size(), positions.size());
    for (std::size_t r = 0; r < elements.size(); ++r) {
        const auto row = coordinates(elements[r], positions);
        for (std::size_t c = 0; c < positions.size(); ++c) m(r, c) = row[c];
    }
    return rank(std::move(m));
}

}  // namespace

CheckResult CheckResult::pass(std::string name, std::string note) {
    CheckResult r;
    r.name = std::move(name);
    r.passed = true;
    r.note = std::move(note);
    return r;
}

CheckResult CheckResult::fail(std::string name, std::string witness, std::string note) {
    CheckResult r;
    r.name = std::move(name);
    r.passed = false;
    r.witness = witness.empty() ? "unspecified failure" : std::move(witness);
    r.note = std::move(note);
    return r;
}

std::vector<int> sample_basis(int dim, std::size_t count, std::uint64_t seed) {
    std::vector<int> all(static_cast<std::size_t>(dim));
    std::iota(all.begin(), all.end(), 0);
    if (count >= all.size()) return all;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const auto j = i + static_cast<std::size_t>(rng() % (all.size() - i));
        std::swap(all[i], all[j]);
    }
    all.resize(count);
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<int> check_indices(const QuasiHopfStructure& s, std::size_t sampled, std::uint64_t seed) {
    const int dim = s.carrier->dimension();
    if (s.n <= 3) return sample_basis(dim, static_cast<std::size_t>(dim), seed);
    return sample_basis(dim, sampled, seed);
}

AlgebraElement contract(const TensorElement& t, const std::vector<BasisMap>& maps,
                        const std::vector<AlgebraElement>& between) {
    if (maps.size() != static_cast<std::size_t>(t.rank()) || between.size() + 1 != maps.size())
        throw InvalidArgument("contract: need one map per slot and one element between consecutive slots");
    std::vector<std::unordered_map<int, AlgebraElement>> cache(maps.size());
    const auto image = [&](std::size_t slot, int b) -> const AlgebraElement& {
        auto it = cache[slot].find(b);
        if (it != cache[slot].end()) return it->second;
        return cache[slot].emplace(b, maps[slot](b)).first->second;
    };
    TermAccumulator acc(t.parent(), 1);
    for (const auto& term : t.terms()) {
        const auto tuple = t.tuple_of(term.key);
        AlgebraElement prod = image(0, tuple[0]);
        for (std::size_t slot = 1; slot < maps.size() && !prod.is_zero(); ++slot) {
            prod = mul(prod, between[slot - 1]);
            prod = mul(prod, image(slot, tuple[slot]));
        }
        acc.add(prod, term.coeff);
    }
    return std::move(acc).finish();
}

CheckResult check_quasi_coassoc(const QuasiHopfStructure& s, std::uint64_t seed) {
    const std::string name = "quasi_coassoc";
    const TensorElement& phi = s.associator;
    const TensorElement phi_inv = associator_inverse(s);
    const bool trivial = phi == TensorElement::unit(s.carrier, 3);

    std::vector<NamedElement> items = s.generators;
    for (int b : check_indices(s, 100, seed)) items.push_back({label_of(s, b), TensorElement::basis(s.carrier, {b})});

    const BasisMap delta = s.delta_map();
    for (const auto& [what, u] : items) {
        const TensorElement du = s.delta(u);
        const TensorElement lhs = apply_on_factor(delta, 2, du);
        TensorElement rhs = apply_on_factor(delta, 1, du);
        if (!trivial) rhs = mul(mul(phi, rhs), phi_inv);
        if (auto diff = first_difference(lhs, rhs)) return CheckResult::fail(name, "u = " + what + ": " + *diff);
    }
    return CheckResult::pass(name, std::to_string(items.size()) + " elements");
}

CheckResult check_pentagon(const QuasiHopfStructure& s) {
    const std::string name = "pentagon";
    const TensorElement& phi = s.associator;
    const TensorElement one = TensorElement::unit(s.carrier, 1);
    const BasisMap delta = s.delta_map();

    const TensorElement lhs =
        mul(mul(tensor(one, phi), apply_on_factor(delta, 2, phi)), tensor(phi, one));
    const TensorElement rhs = mul(apply_on_factor(delta, 3, phi), apply_on_factor(delta, 1, phi));
    if (auto diff = first_difference(lhs, rhs)) return CheckResult::fail(name, "pentagon: " + *diff);

    const TensorElement middle = apply_on_factor(s.epsilon_map(), 2, phi);
    if (auto diff = first_difference(middle, TensorElement::unit(s.carrier, 2)))
        return CheckResult::fail(name, "(id⊗ε⊗id)(Φ) ≠ 1⊗1: " + *diff);
    return CheckResult::pass(name, std::to_string(phi.size()) + " associator terms");
}

CheckResult check_counit(const QuasiHopfStructure& s, std::uint64_t seed) {
    const std::string name = "counit";
    const int dim = s.carrier->dimension();
    const BasisMap eps = s.epsilon_map();
    for (int b = 0; b < dim; ++b) {
        const AlgebraElement u = TensorElement::basis(s.carrier, {b});
        const TensorElement du = s.delta(u);
        if (auto diff = first_difference(apply_on_factor(eps, 1, du), u))
            return CheckResult::fail(name, "(ε⊗id)Δ(" + label_of(s, b) + "): " + *diff);
        if (auto diff = first_difference(apply_on_factor(eps, 2, du), u))
            return CheckResult::fail(name, "(id⊗ε)Δ(" + label_of(s, b) + "): " + *diff);
    }
    const std::size_t pairs = s.n <= 3 ? static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim) : 400;
    for (const auto& [b, c] : sample_pairs(dim, pairs, seed)) {
        const AlgebraElement prod = mul(TensorElement::basis(s.carrier, {b}), TensorElement::basis(s.carrier, {c}));
        const CycNumber lhs = s.epsilon(prod);
        const CycNumber rhs = s.counit[static_cast<std::size_t>(b)] * s.counit[static_cast<std::size_t>(c)];
        if (!(lhs == rhs))
            return CheckResult::fail(name, "ε(" + label_of(s, b) + " · " + label_of(s, c) + ") = " + lhs.to_string() +
                                               " but ε·ε = " + rhs.to_string());
    }
    return CheckResult::pass(name);
}

CheckResult check_antipode(const QuasiHopfStructure& s, std::uint64_t seed) {
    const std::string name = "antipode";
    const int dim = s.carrier->dimension();
    const BasisMap S = s.antipode_map();
    const BasisMap id = identity_map(s.carrier);
    const AlgebraElement& alpha = s.alpha;
    const AlgebraElement& beta = s.beta;

    for (int b = 0; b < dim; ++b) {
        const AlgebraElement u = TensorElement::basis(s.carrier, {b});
        const TensorElement du = s.delta(u);
        const CycNumber e = s.counit[static_cast<std::size_t>(b)];
        if (auto diff = first_difference(contract(du, {S, id}, {alpha}), e * alpha))
            return CheckResult::fail(name, "Σ S(u1) α u2 ≠ ε(u) α for u = " + label_of(s, b) + ": " + *diff);
        if (auto diff = first_difference(contract(du, {id, S}, {beta}), e * beta))
            return CheckResult::fail(name, "Σ u1 β S(u2) ≠ ε(u) β for u = " + label_of(s, b) + ": " + *diff);
    }

    const AlgebraElement one = TensorElement::unit(s.carrier, 1);
    if (auto diff = first_difference(contract(s.associator, {id, S, id}, {beta, alpha}), one))
        return CheckResult::fail(name, "Σ X β S(Y) α Z ≠ 1: " + *diff);
    const TensorElement phi_inv = associator_inverse(s);
    if (auto diff = first_difference(contract(phi_inv, {S, id, S}, {alpha, beta}), one))
        return CheckResult::fail(name, "Σ S(P) α Q β S(R) ≠ 1: " + *diff);

    const std::size_t pairs = s.n <= 3 ? static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim) : 400;
    for (const auto& [b, c] : sample_pairs(dim, pairs, seed)) {
        const AlgebraElement u = TensorElement::basis(s.carrier, {b});
        const AlgebraElement v = TensorElement::basis(s.carrier, {c});
        if (auto diff = first_difference(s.S(mul(u, v)), mul(S(c), S(b))))
            return CheckResult::fail(name, "S(uv) ≠ S(v)S(u) for u = " + label_of(s, b) + ", v = " + label_of(s, c) +
                                               ": " + *diff);
    }
    return CheckResult::pass(name);
}

CheckResult check_basic(const QuasiHopfStructure& s) {
    CheckResult out;
    out.name = "basic";
    if (!requires_grading(s, out)) return out;
    const std::string& name = out.name;
    const int dim = s.carrier->dimension();
    const int n = s.n;
    const int N = n * n;
    const auto& deg = s.x_degree;
    const auto basis = [&](int b) { return TensorElement::basis(s.carrier, {b}); };

    // Once the product is known to be graded (below), I is an ideal and I^k lies in
    // degrees >= k; no basis element has degree >= n^2, hence I^{n^2} = 0, and
    // x^{n^2-1} ≠ 0 makes n^2 the exact nilpotency degree.
    const auto top = *std::max_element(deg.begin(), deg.end());
    if (top != N - 1) return CheckResult::fail(name, "highest x-degree is " + std::to_string(top));
    const AlgebraElement& x = s.generator("x");
    AlgebraElement power = TensorElement::unit(s.carrier, 1);
    for (int k = 0; k < N - 1; ++k) power = mul(power, x);
    if (power.is_zero()) return CheckResult::fail(name, "x^(n^2-1) = 0");
    if (!mul(power, x).is_zero()) return CheckResult::fail(name, "x^(n^2) ≠ 0: " + describe(mul(power, x)));

    // degree zero: orthogonal idempotents summing to 1, spanned by the powers of a
    std::vector<int> zero;
    for (int b = 0; b < dim; ++b)
        if (deg[b] == 0) zero.push_back(b);
    if (static_cast<int>(zero.size()) != n)
        return CheckResult::fail(name, "degree-0 part has dimension " + std::to_string(zero.size()));
    AlgebraElement total(s.carrier, 1);
    for (std::size_t i = 0; i < zero.size(); ++i) {
        total += basis(zero[i]);
        for (std::size_t j = 0; j < zero.size(); ++j) {
            const AlgebraElement p = mul(basis(zero[i]), basis(zero[j]));
            const AlgebraElement expected = i == j ? basis(zero[i]) : AlgebraElement(s.carrier, 1);
            if (!(p == expected))
                return CheckResult::fail(name, "degree-0 basis is not orthogonal idempotents at " + label_of(s, zero[i]) +
                                                   " · " + label_of(s, zero[j]));
        }
    }
    if (!(total == TensorElement::unit(s.carrier, 1)))
        return CheckResult::fail(name, "degree-0 idempotents do not sum to 1");
    const AlgebraElement& a = s.generator("a");
    std::vector<AlgebraElement> a_powers{TensorElement::unit(s.carrier, 1)};
    for (int i = 1; i < n; ++i) a_powers.push_back(mul(a_powers.back(), a));
    if (span_dimension(a_powers, zero) != static_cast<std::size_t>(n))
        return CheckResult::fail(name, "powers of a do not span the degree-0 part");

    // One pass over all products: the product is graded by x-degree, and the
    // characters χ_t(e_s x^j) = δ_{st} δ_{j0} are multiplicative.
    const auto chi = [&](std::size_t t, int b) { return CycNumber(deg[b] == 0 && b == zero[t] ? 1L : 0L); };
    for (int b = 0; b < dim; ++b)
        for (int c = 0; c < dim; ++c) {
            const AlgebraElement p = mul(basis(b), basis(c));
            if (!p.is_zero() && (min_degree(p, deg) != deg[b] + deg[c] || max_degree(p, deg) != deg[b] + deg[c]))
                return CheckResult::fail(name, "product " + label_of(s, b) + " · " + label_of(s, c) +
                                                   " is not homogeneous of degree " + std::to_string(deg[b] + deg[c]));
            for (std::size_t t = 0; t < zero.size(); ++t) {
                CycNumber lhs;
                for (const auto& term : p.terms()) lhs += term.coeff * chi(t, static_cast<int>(term.key));
                if (!(lhs == chi(t, b) * chi(t, c)))
                    return CheckResult::fail(name, "character " + std::to_string(t) + " is not multiplicative on " +
                                                       label_of(s, b) + " · " + label_of(s, c));
            }
        }

    // convolution table through Δ
    const auto convolve = [&](std::size_t t1, std::size_t t2, int b) {
        CycNumber v;
        const TensorElement d = s.coproduct[static_cast<std::size_t>(b)];
        for (const auto& term : d.terms()) {
            const auto tuple = d.tuple_of(term.key);
            v += term.coeff * chi(t1, tuple[0]) * chi(t2, tuple[1]);
        }
        return v;
    };
    const std::size_t k = zero.size();
    std::vector<std::vector<std::size_t>> table(k, std::vector<std::size_t>(k));
    for (std::size_t t1 = 0; t1 < k; ++t1)
        for (std::size_t t2 = 0; t2 < k; ++t2) {
            bool found = false;
            for (std::size_t t3 = 0; t3 < k && !found; ++t3) {
                bool same = true;
                for (int b = 0; b < dim && same; ++b) same = convolve(t1, t2, b) == chi(t3, b);
                if (same) {
                    table[t1][t2] = t3;
                    found = true;
                }
            }
            if (!found)
                return CheckResult::fail(name, "convolution of characters " + std::to_string(t1) + " and " +
                                                   std::to_string(t2) + " is not a character");
        }
    // identity is ε
    std::size_t unit_char = k;
    for (std::size_t t = 0; t < k; ++t) {
        bool same = true;
        for (int b = 0; b < dim && same; ++b) same = chi(t, b) == s.counit[static_cast<std::size_t>(b)];
        if (same) unit_char = t;
    }
    if (unit_char == k) return CheckResult::fail(name, "no character equals the counit");
    // cyclic: some character has order exactly n
    std::size_t generator = k;
    for (std::size_t t = 0; t < k && generator == k; ++t) {
        std::size_t power_char = t;
        int order = 1;
        while (power_char != unit_char && order <= n) {
            power_char = table[power_char][t];
            ++order;
        }
        if (order == n) generator = t;
    }
    if (generator == k) return CheckResult::fail(name, "character group is not cyclic of order n");
    return CheckResult::pass(name, std::to_string(k) + " characters, cyclic of order " + std::to_string(n) +
                                       ", radical nilpotent of degree " + std::to_string(N));
}

CheckResult check_grading(const QuasiHopfStructure& s) {
    CheckResult out;
    out.name = "grading";
    if (!requires_grading(s, out)) return out;
    const std::string& name = out.name;
    const int dim = s.carrier->dimension();
    const int n = s.n;
    const int N = n * n;
    const auto& deg = s.x_degree;
    const auto basis = [&](int b) { return TensorElement::basis(s.carrier, {b}); };

    std::vector<std::vector<int>> layer(static_cast<std::size_t>(N));
    for (int b = 0; b < dim; ++b) {
        if (deg[b] < 0 || deg[b] >= N) return CheckResult::fail(name, "x-degree out of range at " + label_of(s, b));
        layer[static_cast<std::size_t>(deg[b])].push_back(b);
    }
    for (int k = 0; k < N; ++k)
        if (static_cast<int>(layer[static_cast<std::size_t>(k)].size()) != n)
            return CheckResult::fail(name, "layer " + std::to_string(k) + " has dimension " +
                                               std::to_string(layer[static_cast<std::size_t>(k)].size()));

    // I^k = A[k] ⊕ I^{k+1}: the products A[1]·A[k-1] span all of A[k]
    for (int k = 2; k < N; ++k) {
        std::vector<AlgebraElement> products;
        for (int b : layer[1])
            for (int c : layer[static_cast<std::size_t>(k - 1)]) products.push_back(mul(basis(b), basis(c)));
        if (span_dimension(products, layer[static_cast<std::size_t>(k)]) != static_cast<std::size_t>(n))
            return CheckResult::fail(name, "A[1]·A[" + std::to_string(k - 1) + "] does not span A[" + std::to_string(k) + "]");
    }

    // A[1] is free of rank 1 over A[0]: {a^i x} is a basis
    const AlgebraElement& a = s.generator("a");
    const AlgebraElement& x = s.generator("x");
    std::vector<AlgebraElement> orbit;
    AlgebraElement v = x;
    for (int i = 0; i < n; ++i) {
        if (max_degree(v, deg) != 1 || min_degree(v, deg) != 1)
            return CheckResult::fail(name, "a^" + std::to_string(i) + " x is not in A[1]");
        orbit.push_back(v);
        v = mul(a, v);
    }
    if (span_dimension(orbit, layer[1]) != static_cast<std::size_t>(n))
        return CheckResult::fail(name, "{a^i x} is linearly dependent");

    // Ad(a) acts on A[1] by Q = q^n
    const CycNumber Q = s.q->pow(n);
    const AlgebraElement a_inv = invert(a);
    for (int b : layer[1]) {
        const AlgebraElement u = basis(b);
        if (auto diff = first_difference(mul(mul(a, u), a_inv), Q * u))
            return CheckResult::fail(name, "a u a^-1 ≠ Q u for u = " + label_of(s, b) + ": " + *diff);
    }
    return CheckResult::pass(name, "dim A[0] = dim A[1] = " + std::to_string(n) + ", Ad(a) = Q on A[1]");
}

CheckResult check_radical_is_quasihopf_ideal(const QuasiHopfStructure& s) {
    CheckResult out;
    out.name = "radical_ideal";
    if (!requires_grading(s, out)) return out;
    const std::string& name = out.name;
    const int dim = s.carrier->dimension();
    const auto& deg = s.x_degree;
    for (int b = 0; b < dim; ++b) {
        if (deg[b] == 0) continue;
        const TensorElement& d = s.coproduct[static_cast<std::size_t>(b)];
        for (const auto& term : d.terms()) {
            const auto tuple = d.tuple_of(term.key);
            if (deg[tuple[0]] == 0 && deg[tuple[1]] == 0)
                return CheckResult::fail(name, "Δ(" + label_of(s, b) + ") has the term " + label_of(s, tuple[0]) +
                                                   " ⊗ " + label_of(s, tuple[1]) + " outside I⊗A + A⊗I");
        }
        if (!s.counit[static_cast<std::size_t>(b)].is_zero())
            return CheckResult::fail(name, "ε(" + label_of(s, b) + ") ≠ 0");
        const AlgebraElement& sb = s.antipode[static_cast<std::size_t>(b)];
        if (!sb.is_zero() && min_degree(sb, deg) == 0)
            return CheckResult::fail(name, "S(" + label_of(s, b) + ") = " + describe(sb) + " leaves I");
    }
    return CheckResult::pass(name);
}

}  // namespace qhopf
