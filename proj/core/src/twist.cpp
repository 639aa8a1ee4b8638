#include "qhopf/twist.hpp"

namespace qhopf {

namespace {

int mod(long a, int m) {
    long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

// Σ c L(b_1) R(b_2) over the terms of a rank-2 element.
AlgebraElement contract(const TensorElement& t, const BasisMap& left, const BasisMap& right) {
    TermAccumulator acc(t.parent(), 1);
    for (const auto& term : t.terms()) {
        const auto tuple = t.tuple_of(term.key);
        acc.add(mul(left(tuple[0]), right(tuple[1])), term.coeff);
    }
    return std::move(acc).finish();
}

BasisMap identity_map(const DescriptorPtr& d) {
    return [d](int b) { return TensorElement::basis(d, {b}); };
}

TensorElement conjugate(const TensorElement& J, const TensorElement& J_inv, const TensorElement& x) {
    return mul(mul(J, x), J_inv);
}

}  // namespace

CycNumber twist_coefficient(const TaftAlgebra& taft, int z, int y) {
    const int N = taft.order();
    const int yy = mod(y, N);
    return taft.q_pow(-static_cast<long>(mod(z, N)) * (yy - yy % taft.n()));
}

TensorElement build_J(const TaftAlgebra& taft) {
    const int N = taft.order();
    const auto& H = taft.idempotent_basis();
    TermAccumulator acc(H, 2);
    const auto dim = static_cast<TensorElement::Key>(taft.dimension());
    for (int z = 0; z < N; ++z)
        for (int y = 0; y < N; ++y)
            acc.add(static_cast<TensorElement::Key>(taft.idempotent_index(z, 0)) * dim +
                        static_cast<TensorElement::Key>(taft.idempotent_index(y, 0)),
                    twist_coefficient(taft, z, y));
    return std::move(acc).finish();
}

TensorElement associator_phi_J(const TaftAlgebra& taft, const TensorElement& J) {
    const auto& H = taft.idempotent_basis();
    const TensorElement one = TensorElement::unit(H, 1);
    const TensorElement J_inv = invert(J);
    const BasisMap delta = taft.delta_map(H);

    const TensorElement one_J = tensor(one, J);
    const TensorElement id_delta_J = apply_on_factor(delta, 2, J);
    const TensorElement delta_id_J_inv = apply_on_factor(delta, 1, J_inv);
    const TensorElement J_one_inv = invert(tensor(J, one));
    // Φ = 1⊗1⊗1 for the Hopf algebra H, so it drops out of the product.
    return mul(mul(mul(one_J, id_delta_J), delta_id_J_inv), J_one_inv);
}

TensorElement phi_l(const SubalgebraA& sub, int l) {
    const int n = sub.n();
    const auto& A = sub.descriptor();
    const auto dim = static_cast<TensorElement::Key>(sub.dimension());
    TermAccumulator acc(A, 3);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const long exponent = static_cast<long>(i) * l * (j + k - (j + k) % n);
                const TensorElement::Key key =
                    (static_cast<TensorElement::Key>(sub.index(i, 0)) * dim + static_cast<TensorElement::Key>(sub.index(j, 0))) *
                        dim +
                    static_cast<TensorElement::Key>(sub.index(k, 0));
                acc.add(key, sub.taft().q_pow(exponent));
            }
    return std::move(acc).finish();
}

TensorElement delta_J(const TaftAlgebra& taft, const TensorElement& J, const AlgebraElement& u) {
    return conjugate(J, invert(J), taft.delta(u));
}

AlphaBeta alpha_beta_J(const TaftAlgebra& taft, const TensorElement& J) {
    const auto& H = taft.idempotent_basis();
    const BasisMap S = taft.antipode_map(H);
    const BasisMap id = identity_map(H);
    return {contract(invert(J), S, id), contract(J, id, S)};
}

AlgebraElement s_J(const TaftAlgebra& taft, const TensorElement& J, const AlgebraElement& u) {
    const AlgebraElement beta = alpha_beta_J(taft, J).beta;
    return mul(mul(beta, taft.antipode(u)), invert(beta));
}

TensorElement delta_x_closed_form(const SubalgebraA& sub) {
    const int n = sub.n();
    const auto& A = sub.descriptor();
    const TaftAlgebra& T = sub.taft();
    const AlgebraElement one = TensorElement::unit(A, 1);
    const AlgebraElement x = sub.x();
    const AlgebraElement e0 = sub.bold_idempotent(0);

    AlgebraElement weights(A, 1);
    for (int y = 0; y < n; ++y) weights += T.q_pow(y) * sub.bold_idempotent(y);
    return tensor(x, weights) + tensor(one, mul(one - e0, x)) + tensor(sub.monomial(-1, 0), mul(e0, x));
}

AlgebraElement s_x_closed_form(const SubalgebraA& sub) {
    const int n = sub.n();
    AlgebraElement weights(sub.descriptor(), 1);
    for (int z = 0; z < n; ++z) weights += sub.taft().q_pow(n - z) * sub.bold_idempotent(z);
    return -mul(sub.x(), weights);
}

namespace {

AlgebraElement diagonal_in_H(const TaftAlgebra& taft, const std::function<long(int)>& exponent) {
    TermAccumulator acc(taft.idempotent_basis(), 1);
    for (int z = 0; z < taft.order(); ++z)
        acc.add(static_cast<TensorElement::Key>(taft.idempotent_index(z, 0)), taft.q_pow(exponent(z)));
    return std::move(acc).finish();
}

}  // namespace

AlgebraElement beta_J_closed_form(const TaftAlgebra& taft) {
    const int n = taft.n();
    return diagonal_in_H(taft, [n](int z) { return static_cast<long>(z - z % n + n) * z; });
}

AlgebraElement alpha_J_closed_form(const TaftAlgebra& taft) {
    const int n = taft.n();
    return diagonal_in_H(taft, [n](int z) { return -static_cast<long>(z - z % n) * z; });
}

AlgebraElement alpha_beta_product_closed_form(const TaftAlgebra& taft) {
    const int n = taft.n();
    return diagonal_in_H(taft, [n](int z) { return static_cast<long>(n) * z; });
}

TwistData TwistData::create(int n, int e) {
    TaftAlgebra taft = TaftAlgebra::create(n, e);
    SubalgebraA sub(taft);
    TensorElement J = build_J(taft);
    TensorElement J_inv = invert(J);
    TensorElement phi = associator_phi_J(taft, J);
    AlphaBeta ab = alpha_beta_J(taft, J);
    return TwistData{std::move(taft), std::move(sub), std::move(J), std::move(J_inv), std::move(phi),
                     std::move(ab.alpha), std::move(ab.beta)};
}

QuasiHopfStructure taft_hopf_structure(const TaftAlgebra& taft) {
    const auto& M = taft.monomial_basis();
    QuasiHopfStructure s("H(q)", M);
    const BasisMap delta = taft.delta_map(M);
    const BasisMap eps = taft.epsilon_map(M);
    const BasisMap S = taft.antipode_map(M);
    for (int b = 0; b < M->dimension(); ++b) {
        s.coproduct.push_back(delta(b));
        s.counit.push_back(eps(b).scalar_value());
        s.antipode.push_back(S(b));
    }
    s.generators = {{"g", taft.monomial(1, 0)}, {"x", taft.monomial(0, 1)}};
    s.n = taft.n();
    s.q = taft.q();
    return s;
}

QuasiHopfStructure build_Aq(const TwistData& data) {
    const TaftAlgebra& T = data.taft;
    const SubalgebraA& sub = data.sub;
    const auto& A = sub.descriptor();
    QuasiHopfStructure s("A(q)", A);

    const AlgebraElement beta_inv = invert(data.beta_J);
    for (int b = 0; b < A->dimension(); ++b) {
        const AlgebraElement lifted = sub.embed(TensorElement::basis(A, {b}));
        s.coproduct.push_back(sub.restrict(conjugate(data.J, data.J_inv, T.delta(lifted))));
        s.counit.push_back(T.epsilon(lifted));
        s.antipode.push_back(sub.restrict(mul(mul(data.beta_J, T.antipode(lifted)), beta_inv)));
        s.x_degree.push_back(sub.labels(b).second);
    }
    s.associator = sub.restrict(data.phi_J);
    s.alpha = sub.restrict(mul(data.beta_J, data.alpha_J));
    s.beta = TensorElement::unit(A, 1);
    s.generators = {{"a", sub.a()}, {"x", sub.x()}};
    s.n = T.n();
    s.q = T.q();
    return s;
}

QuasiHopfStructure build_Aq(int n, int e) { return build_Aq(TwistData::create(n, e)); }

std::string identify_alpha(const SubalgebraA& sub, const AlgebraElement& alpha) {
    const bool is_a = alpha == sub.a();
    const bool is_a_inv = alpha == sub.monomial(-1, 0);
    if (is_a && is_a_inv) return "a = a^-1";
    if (is_a) return "a";
    if (is_a_inv) return "a^-1";
    return "neither";
}

}  // namespace qhopf
