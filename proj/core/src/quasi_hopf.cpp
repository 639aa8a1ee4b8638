#include "qhopf/quasi_hopf.hpp"

namespace qhopf {

QuasiHopfStructure::QuasiHopfStructure(std::string name_, DescriptorPtr carrier_)
    : name(std::move(name_)),
      carrier(std::move(carrier_)),
      associator(TensorElement::unit(carrier, 3)),
      alpha(TensorElement::unit(carrier, 1)),
      beta(TensorElement::unit(carrier, 1)) {}

BasisMap QuasiHopfStructure::delta_map() const {
    return [this](int b) { return coproduct.at(static_cast<std::size_t>(b)); };
}

BasisMap QuasiHopfStructure::epsilon_map() const {
    return [this](int b) { return TensorElement::scalar(carrier, counit.at(static_cast<std::size_t>(b))); };
}

BasisMap QuasiHopfStructure::antipode_map() const {
    return [this](int b) { return antipode.at(static_cast<std::size_t>(b)); };
}

TensorElement QuasiHopfStructure::delta(const AlgebraElement& u) const {
    if (u.rank() != 1 || u.parent() != carrier) throw InvalidArgument("delta: not an element of " + name);
    if (u.is_zero()) return TensorElement(carrier, 2);
    return apply_on_factor(delta_map(), 1, u);
}

CycNumber QuasiHopfStructure::epsilon(const AlgebraElement& u) const {
    if (u.rank() != 1 || u.parent() != carrier) throw InvalidArgument("epsilon: not an element of " + name);
    CycNumber out;
    for (const auto& t : u.terms()) out += t.coeff * counit.at(t.key);
    return out;
}

AlgebraElement QuasiHopfStructure::S(const AlgebraElement& u) const {
    if (u.rank() != 1 || u.parent() != carrier) throw InvalidArgument("antipode: not an element of " + name);
    if (u.is_zero()) return u;
    return apply_on_factor(antipode_map(), 1, u);
}

const AlgebraElement& QuasiHopfStructure::generator(const std::string& gen) const {
    for (const auto& g : generators)
        if (g.name == gen) return g.value;
    throw InvalidArgument(name + " has no generator named " + gen);
}

}  // namespace qhopf
