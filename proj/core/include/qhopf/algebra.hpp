#pragma once

// Finite-dimensional associative algebras given by a basis and a product
// rule, and sparse elements of their tensor powers.
//
// A TensorElement of rank r is a finite sum of c * b_1 ⊗ ... ⊗ b_r over basis
// indices. Index tuples are packed into a single 64-bit key in mixed radix
// (base = dimension), so numeric key order is lexicographic tuple order.
// Terms are kept sorted by key with no zero coefficients. Rank 0 is allowed
// and holds a scalar (key 0); it is what the counit produces.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qhopf/cyclotomic.hpp"

namespace qhopf {

struct BasisTerm {
    int index;
    CycNumber coeff;
};
using LinearCombination = std::vector<BasisTerm>;

/// A complete set of orthogonal idempotents e_k of the algebra that are
/// themselves basis elements, with every basis element b satisfying
/// e_k b = [k == left_key(b)] b and b e_k = [k == right_key(b)] b.
/// The product b * b' can then be nonzero only if right_key(b) == left_key(b').
struct IdempotentFrame {
    std::vector<int> idempotent_index;  // key -> basis index of e_key
    std::vector<int> left_key;          // basis index -> key
    std::vector<int> right_key;         // basis index -> key
};

class AlgebraDescriptor {
public:
    using ProductRule = std::function<LinearCombination(int, int)>;

    AlgebraDescriptor(std::string name, std::vector<std::string> labels, ProductRule rule, LinearCombination unit,
                      std::optional<IdempotentFrame> frame = std::nullopt);

    const std::string& name() const noexcept { return name_; }
    int dimension() const noexcept { return static_cast<int>(labels_.size()); }
    const std::string& label(int index) const { return labels_.at(static_cast<std::size_t>(index)); }
    LinearCombination product(int a, int b) const { return rule_(a, b); }
    const LinearCombination& unit() const noexcept { return unit_; }

    const std::optional<IdempotentFrame>& frame() const noexcept { return frame_; }
    /// Frame key of the idempotent stored at basis index b, or -1.
    int idempotent_key(int b) const { return frame_ ? idempotent_key_[static_cast<std::size_t>(b)] : -1; }

private:
    std::string name_;
    std::vector<std::string> labels_;
    ProductRule rule_;
    LinearCombination unit_;
    std::optional<IdempotentFrame> frame_;
    std::vector<int> idempotent_key_;
};

using DescriptorPtr = std::shared_ptr<const AlgebraDescriptor>;

class TensorElement {
public:
    using Key = std::uint64_t;
    struct Term {
        Key key;
        CycNumber coeff;
    };

    /// The zero element of the given rank.
    TensorElement(DescriptorPtr parent, int rank);

    static TensorElement scalar(DescriptorPtr parent, CycNumber value);
    static TensorElement unit(DescriptorPtr parent, int rank);
    static TensorElement basis(DescriptorPtr parent, std::span<const int> tuple, CycNumber coeff = CycNumber(1L));
    static TensorElement basis(DescriptorPtr parent, std::initializer_list<int> tuple, CycNumber coeff = CycNumber(1L));
    static TensorElement from_combination(DescriptorPtr parent, const LinearCombination& combination);

    const DescriptorPtr& parent() const noexcept { return parent_; }
    int rank() const noexcept { return rank_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::span<const Term> terms() const noexcept { return terms_; }

    Key key_of(std::span<const int> tuple) const;
    std::vector<int> tuple_of(Key key) const;
    CycNumber coefficient(std::span<const int> tuple) const;
    CycNumber coefficient_at(Key key) const;
    /// For rank 0: the scalar value.
    CycNumber scalar_value() const;

    /// True iff every slot of every term is an idempotent of the parent's frame.
    bool is_frame_diagonal() const;

    TensorElement operator-() const;
    TensorElement& operator+=(const TensorElement& other);
    TensorElement& operator-=(const TensorElement& other);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const CycNumber& s, const TensorElement& u);
    friend bool operator==(const TensorElement& a, const TensorElement& b);

    /// Human-readable sum, terms in lexicographic tuple order.
    std::string to_string(std::string_view symbol = "z") const;

private:
    friend class TermAccumulator;
    DescriptorPtr parent_;
    int rank_;
    std::vector<Term> terms_;
};

/// Rank-1 elements are algebra elements.
using AlgebraElement = TensorElement;

/// A linear map given on basis indices. Every image has the same rank.
using BasisMap = std::function<TensorElement(int)>;

/// Collects terms into a hash map and produces a normalized TensorElement.
class TermAccumulator {
public:
    TermAccumulator(DescriptorPtr parent, int rank);
    void add(TensorElement::Key key, const CycNumber& coeff);
    void add(const TensorElement& u, const CycNumber& scale = CycNumber(1L));
    TensorElement finish() &&;

private:
    DescriptorPtr parent_;
    int rank_;
    std::unordered_map<TensorElement::Key, CycNumber> sums_;
};

/// Product in the rank-r tensor power algebra.
TensorElement mul(const TensorElement& u, const TensorElement& v);
/// Outer tensor product; rank(u) + rank(v).
TensorElement tensor(const TensorElement& u, const TensorElement& v);
/// Applies f to slot `position` (1-based) and splices the image in place.
TensorElement apply_on_factor(const BasisMap& f, int position, const TensorElement& u);
/// Applies f (rank-1 images over `target`) to every slot.
TensorElement map_all_slots(const BasisMap& f, const DescriptorPtr& target, const TensorElement& u);
/// Two-sided inverse. Frame-diagonal elements are inverted coefficient-wise;
/// anything else goes through a linear solve over the full tensor basis.
/// Throws SingularElement with a witness when no inverse exists.
TensorElement invert(const TensorElement& u);
/// True iff every slot of every term lies in `sub_basis`.
bool in_span(const TensorElement& u, std::span<const int> sub_basis);

/// Description of the first term where a and b differ, or nullopt when equal.
std::optional<std::string> first_difference(const TensorElement& a, const TensorElement& b);

/// Upper bound on dim^rank for the dense fallback inside invert().
inline constexpr std::uint64_t kDenseInverseLimit = 4096;

}  // namespace qhopf
