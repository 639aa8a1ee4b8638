#include "qhopf/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "qhopf/linalg.hpp"

namespace qhopf {

namespace {

using Key = TensorElement::Key;

std::uint64_t checked_power(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && out > UINT64_MAX / base) throw InvalidArgument("tensor power too large to index");
        out *= base;
    }
    return out;
}

void require_same_parent(const TensorElement& u, const TensorElement& v, const char* op) {
    if (u.parent() != v.parent())
        throw InvalidArgument(std::string(op) + ": elements live in different algebras");
}

// Per-slot keys (left or right frame key) of a tuple, packed like a tuple key.
Key frame_key(const AlgebraDescriptor& d, std::span<const int> tuple, bool right) {
    const auto& frame = *d.frame();
    const auto base = static_cast<Key>(frame.idempotent_index.size());
    Key k = 0;
    for (int b : tuple) {
        const auto& keys = right ? frame.right_key : frame.left_key;
        k = k * base + static_cast<Key>(keys[static_cast<std::size_t>(b)]);
    }
    return k;
}

// Product of two basis tuples slot by slot, accumulated with a scale factor.
void accumulate_tuple_product(const AlgebraDescriptor& d, std::span<const int> a, std::span<const int> b,
                              const CycNumber& scale, TermAccumulator& acc, std::uint64_t dim) {
    // Expand the tensor product of per-slot combinations.
    std::vector<std::pair<Key, CycNumber>> partial{{0, scale}};
    for (std::size_t s = 0; s < a.size(); ++s) {
        const LinearCombination lc = d.product(a[s], b[s]);
        if (lc.empty()) return;
        std::vector<std::pair<Key, CycNumber>> next;
        next.reserve(partial.size() * lc.size());
        for (const auto& [k, c] : partial)
            for (const auto& t : lc) next.emplace_back(k * dim + static_cast<Key>(t.index), c * t.coeff);
        partial = std::move(next);
    }
    for (const auto& [k, c] : partial) acc.add(k, c);
}

}  // namespace

AlgebraDescriptor::AlgebraDescriptor(std::string name, std::vector<std::string> labels, ProductRule rule,
                                     LinearCombination unit, std::optional<IdempotentFrame> frame)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      rule_(std::move(rule)),
      unit_(std::move(unit)),
      frame_(std::move(frame)) {
    if (labels_.empty()) throw InvalidArgument("algebra must have positive dimension");
    if (frame_) {
        const std::size_t dim = labels_.size();
        if (frame_->left_key.size() != dim || frame_->right_key.size() != dim)
            throw InvalidArgument("idempotent frame does not cover the basis");
        idempotent_key_.assign(dim, -1);
        for (std::size_t k = 0; k < frame_->idempotent_index.size(); ++k)
            idempotent_key_.at(static_cast<std::size_t>(frame_->idempotent_index[k])) = static_cast<int>(k);
    }
}

// ---------------------------------------------------------------------------
// TensorElement

TensorElement::TensorElement(DescriptorPtr parent, int rank) : parent_(std::move(parent)), rank_(rank) {
    if (!parent_) throw InvalidArgument("tensor element without parent algebra");
    if (rank_ < 0) throw InvalidArgument("negative tensor rank");
    checked_power(static_cast<std::uint64_t>(parent_->dimension()), rank_);
}

TensorElement TensorElement::scalar(DescriptorPtr parent, CycNumber value) {
    TensorElement out(std::move(parent), 0);
    if (!value.is_zero()) out.terms_.push_back({0, std::move(value)});
    return out;
}

TensorElement TensorElement::unit(DescriptorPtr parent, int rank) {
    TermAccumulator acc(parent, rank);
    const auto dim = static_cast<Key>(parent->dimension());
    std::vector<std::pair<Key, CycNumber>> partial{{0, CycNumber(1L)}};
    for (int s = 0; s < rank; ++s) {
        std::vector<std::pair<Key, CycNumber>> next;
        for (const auto& [k, c] : partial)
            for (const auto& t : parent->unit()) next.emplace_back(k * dim + static_cast<Key>(t.index), c * t.coeff);
        partial = std::move(next);
    }
    for (const auto& [k, c] : partial) acc.add(k, c);
    return std::move(acc).finish();
}

TensorElement TensorElement::basis(DescriptorPtr parent, std::span<const int> tuple, CycNumber coeff) {
    TensorElement out(std::move(parent), static_cast<int>(tuple.size()));
    for (int b : tuple)
        if (b < 0 || b >= out.parent_->dimension()) throw InvalidArgument("basis index out of range");
    if (!coeff.is_zero()) out.terms_.push_back({out.key_of(tuple), std::move(coeff)});
    return out;
}

TensorElement TensorElement::basis(DescriptorPtr parent, std::initializer_list<int> tuple, CycNumber coeff) {
    return basis(std::move(parent), std::span<const int>(tuple.begin(), tuple.size()), std::move(coeff));
}

TensorElement TensorElement::from_combination(DescriptorPtr parent, const LinearCombination& combination) {
    TermAccumulator acc(parent, 1);
    for (const auto& t : combination) acc.add(static_cast<Key>(t.index), t.coeff);
    return std::move(acc).finish();
}

TensorElement::Key TensorElement::key_of(std::span<const int> tuple) const {
    if (static_cast<int>(tuple.size()) != rank_) throw InvalidArgument("tuple length does not match rank");
    const auto dim = static_cast<Key>(parent_->dimension());
    Key k = 0;
    for (int b : tuple) k = k * dim + static_cast<Key>(b);
    return k;
}

std::vector<int> TensorElement::tuple_of(Key key) const {
    const auto dim = static_cast<Key>(parent_->dimension());
    std::vector<int> tuple(static_cast<std::size_t>(rank_));
    for (int s = rank_ - 1; s >= 0; --s) {
        tuple[static_cast<std::size_t>(s)] = static_cast<int>(key % dim);
        key /= dim;
    }
    return tuple;
}

CycNumber TensorElement::coefficient_at(Key key) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key, [](const Term& t, Key k) { return t.key < k; });
    if (it == terms_.end() || it->key != key) return CycNumber();
    return it->coeff;
}

CycNumber TensorElement::coefficient(std::span<const int> tuple) const { return coefficient_at(key_of(tuple)); }

CycNumber TensorElement::scalar_value() const {
    if (rank_ != 0) throw InvalidArgument("scalar_value on an element of positive rank");
    return terms_.empty() ? CycNumber() : terms_.front().coeff;
}

bool TensorElement::is_frame_diagonal() const {
    if (!parent_->frame()) return false;
    for (const auto& t : terms_)
        for (int b : tuple_of(t.key))
            if (parent_->idempotent_key(b) < 0) return false;
    return true;
}

TensorElement TensorElement::operator-() const {
    TensorElement out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
    require_same_parent(*this, other, "add");
    if (rank_ != other.rank_) throw InvalidArgument("add: rank mismatch");
    TermAccumulator acc(parent_, rank_);
    acc.add(*this);
    acc.add(other);
    *this = std::move(acc).finish();
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) { return *this += -other; }

TensorElement operator*(const CycNumber& s, const TensorElement& u) {
    TensorElement out(u.parent_, u.rank_);
    if (s.is_zero()) return out;
    out.terms_.reserve(u.terms_.size());
    for (const auto& t : u.terms_) out.terms_.push_back({t.key, s * t.coeff});
    return out;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
    if (a.parent_ != b.parent_ || a.rank_ != b.rank_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].key != b.terms_[i].key || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return true;
}

std::string TensorElement::to_string(std::string_view symbol) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) out << " + ";
        first = false;
        out << '(' << t.coeff.to_string(symbol) << ')';
        const auto tuple = tuple_of(t.key);
        for (std::size_t s = 0; s < tuple.size(); ++s) out << (s == 0 ? " " : " ⊗ ") << parent_->label(tuple[s]);
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// TermAccumulator

TermAccumulator::TermAccumulator(DescriptorPtr parent, int rank) : parent_(std::move(parent)), rank_(rank) {}

void TermAccumulator::add(Key key, const CycNumber& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = sums_.try_emplace(key, coeff);
    if (!inserted) it->second += coeff;
}

void TermAccumulator::add(const TensorElement& u, const CycNumber& scale) {
    if (u.parent() != parent_ || u.rank() != rank_) throw InvalidArgument("accumulator: element of wrong shape");
    const bool unit_scale = scale.is_one();
    for (const auto& t : u.terms()) add(t.key, unit_scale ? t.coeff : scale * t.coeff);
}

TensorElement TermAccumulator::finish() && {
    TensorElement out(parent_, rank_);
    out.terms_.reserve(sums_.size());
    for (auto& [k, c] : sums_)
        if (!c.is_zero()) out.terms_.push_back({k, std::move(c)});
    std::sort(out.terms_.begin(), out.terms_.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    sums_.clear();
    return out;
}

// ---------------------------------------------------------------------------
// Operations

TensorElement mul(const TensorElement& u, const TensorElement& v) {
    require_same_parent(u, v, "mul");
    if (u.rank() != v.rank()) throw InvalidArgument("mul: rank mismatch");
    const AlgebraDescriptor& d = *u.parent();
    const auto dim = static_cast<std::uint64_t>(d.dimension());
    TermAccumulator acc(u.parent(), u.rank());

    if (u.rank() == 0) {
        return TensorElement::scalar(u.parent(), u.scalar_value() * v.scalar_value());
    }

    if (d.frame()) {
        // diagonal fast paths: scaling by the matching idempotent coefficient
        if (v.is_frame_diagonal()) {
            std::unordered_map<Key, const CycNumber*> diag;
            for (const auto& t : v.terms()) diag.emplace(frame_key(d, v.tuple_of(t.key), false), &t.coeff);
            for (const auto& t : u.terms()) {
                auto it = diag.find(frame_key(d, u.tuple_of(t.key), true));
                if (it != diag.end()) acc.add(t.key, t.coeff * *it->second);
            }
            return std::move(acc).finish();
        }
        if (u.is_frame_diagonal()) {
            std::unordered_map<Key, const CycNumber*> diag;
            for (const auto& t : u.terms()) diag.emplace(frame_key(d, u.tuple_of(t.key), false), &t.coeff);
            for (const auto& t : v.terms()) {
                auto it = diag.find(frame_key(d, v.tuple_of(t.key), false));
                if (it != diag.end()) acc.add(t.key, *it->second * t.coeff);
            }
            return std::move(acc).finish();
        }
        std::unordered_map<Key, std::vector<std::size_t>> buckets;
        const auto vterms = v.terms();
        std::vector<std::vector<int>> vtuples(vterms.size());
        for (std::size_t i = 0; i < vterms.size(); ++i) {
            vtuples[i] = v.tuple_of(vterms[i].key);
            buckets[frame_key(d, vtuples[i], false)].push_back(i);
        }
        for (const auto& t : u.terms()) {
            const auto ut = u.tuple_of(t.key);
            auto it = buckets.find(frame_key(d, ut, true));
            if (it == buckets.end()) continue;
            for (std::size_t i : it->second)
                accumulate_tuple_product(d, ut, vtuples[i], t.coeff * vterms[i].coeff, acc, dim);
        }
        return std::move(acc).finish();
    }

    const auto vterms = v.terms();
    std::vector<std::vector<int>> vtuples(vterms.size());
    for (std::size_t i = 0; i < vterms.size(); ++i) vtuples[i] = v.tuple_of(vterms[i].key);
    for (const auto& t : u.terms()) {
        const auto ut = u.tuple_of(t.key);
        for (std::size_t i = 0; i < vterms.size(); ++i)
            accumulate_tuple_product(d, ut, vtuples[i], t.coeff * vterms[i].coeff, acc, dim);
    }
    return std::move(acc).finish();
}

TensorElement tensor(const TensorElement& u, const TensorElement& v) {
    require_same_parent(u, v, "tensor");
    const int rank = u.rank() + v.rank();
    const Key shift = checked_power(static_cast<std::uint64_t>(u.parent()->dimension()), v.rank());
    TermAccumulator acc(u.parent(), rank);
    for (const auto& a : u.terms())
        for (const auto& b : v.terms()) acc.add(a.key * shift + b.key, a.coeff * b.coeff);
    return std::move(acc).finish();
}

TensorElement apply_on_factor(const BasisMap& f, int position, const TensorElement& u) {
    if (position < 1 || position > u.rank())
        throw InvalidArgument("apply_on_factor: position " + std::to_string(position) + " outside rank " +
                              std::to_string(u.rank()));
    const auto dim = static_cast<Key>(u.parent()->dimension());
    const auto slot = static_cast<std::size_t>(position - 1);

    std::unordered_map<int, TensorElement> images;
    int image_rank = -1;
    const auto image_of = [&](int b) -> const TensorElement& {
        auto it = images.find(b);
        if (it != images.end()) return it->second;
        TensorElement img = f(b);
        if (img.parent() != u.parent()) throw InvalidArgument("apply_on_factor: map leaves the algebra");
        if (image_rank < 0) image_rank = img.rank();
        if (img.rank() != image_rank) throw InvalidArgument("apply_on_factor: map images have mixed rank");
        return images.emplace(b, std::move(img)).first->second;
    };

    if (u.is_zero()) {
        // rank of the result is still determined by f
        const int r = f(0).rank();
        return TensorElement(u.parent(), u.rank() - 1 + r);
    }
    TermAccumulator* acc_ptr = nullptr;
    std::optional<TermAccumulator> acc;
    for (const auto& t : u.terms()) {
        const auto tuple = u.tuple_of(t.key);
        const TensorElement& img = image_of(tuple[slot]);
        if (!acc) {
            acc.emplace(u.parent(), u.rank() - 1 + img.rank());
            acc_ptr = &*acc;
        }
        Key prefix = 0;
        for (std::size_t s = 0; s < slot; ++s) prefix = prefix * dim + static_cast<Key>(tuple[s]);
        Key suffix = 0;
        const std::size_t suffix_len = tuple.size() - slot - 1;
        for (std::size_t s = slot + 1; s < tuple.size(); ++s) suffix = suffix * dim + static_cast<Key>(tuple[s]);
        const Key img_shift = checked_power(dim, img.rank());
        const Key suffix_shift = checked_power(dim, static_cast<int>(suffix_len));
        for (const auto& it : img.terms())
            acc_ptr->add((prefix * img_shift + it.key) * suffix_shift + suffix, t.coeff * it.coeff);
    }
    return std::move(*acc).finish();
}

TensorElement map_all_slots(const BasisMap& f, const DescriptorPtr& target, const TensorElement& u) {
    std::unordered_map<int, TensorElement> images;
    const auto image_of = [&](int b) -> const TensorElement& {
        auto it = images.find(b);
        if (it != images.end()) return it->second;
        TensorElement img = f(b);
        if (img.parent() != target || img.rank() != 1) throw InvalidArgument("map_all_slots: bad image");
        return images.emplace(b, std::move(img)).first->second;
    };
    const auto tdim = static_cast<Key>(target->dimension());
    TermAccumulator acc(target, u.rank());
    for (const auto& t : u.terms()) {
        std::vector<std::pair<Key, CycNumber>> partial{{0, t.coeff}};
        for (int b : u.tuple_of(t.key)) {
            const TensorElement& img = image_of(b);
            std::vector<std::pair<Key, CycNumber>> next;
            next.reserve(partial.size() * img.size());
            for (const auto& [k, c] : partial)
                for (const auto& it : img.terms()) next.emplace_back(k * tdim + it.key, c * it.coeff);
            partial = std::move(next);
        }
        for (const auto& [k, c] : partial) acc.add(k, c);
    }
    return std::move(acc).finish();
}

TensorElement invert(const TensorElement& u) {
    const AlgebraDescriptor& d = *u.parent();
    if (u.rank() == 0) return TensorElement::scalar(u.parent(), u.scalar_value().inverse());
    if (u == TensorElement::unit(u.parent(), u.rank())) return u;

    if (u.is_frame_diagonal()) {
        // Componentwise: every idempotent tuple must carry a nonzero coefficient.
        const auto& frame = *d.frame();
        const auto nkeys = static_cast<std::uint64_t>(frame.idempotent_index.size());
        const std::uint64_t count = checked_power(nkeys, u.rank());
        if (u.size() != count) {
            // find a missing idempotent tuple for the witness
            std::vector<int> tuple(static_cast<std::size_t>(u.rank()));
            for (std::uint64_t c = 0; c < count; ++c) {
                std::uint64_t rest = c;
                for (int s = u.rank() - 1; s >= 0; --s) {
                    tuple[static_cast<std::size_t>(s)] = frame.idempotent_index[rest % nkeys];
                    rest /= nkeys;
                }
                if (u.coefficient(tuple).is_zero()) {
                    std::string label;
                    for (std::size_t s = 0; s < tuple.size(); ++s) label += (s ? " ⊗ " : "") + d.label(tuple[s]);
                    throw SingularElement("coefficient of " + label + " is zero");
                }
            }
        }
        TermAccumulator acc(u.parent(), u.rank());
        for (const auto& t : u.terms()) acc.add(t.key, t.coeff.inverse());
        return std::move(acc).finish();
    }

    const std::uint64_t n = checked_power(static_cast<std::uint64_t>(d.dimension()), u.rank());
    if (n > kDenseInverseLimit)
        throw InvalidArgument("invert: dense fallback on " + std::to_string(n) + " unknowns exceeds the limit");
    // Column j of L holds u * e_j; solve L v = 1.
    Matrix left(n, n);
    TensorElement probe(u.parent(), u.rank());
    for (std::uint64_t j = 0; j < n; ++j) {
        TensorElement e = TensorElement::basis(u.parent(), probe.tuple_of(j));
        const TensorElement col = mul(u, e);
        for (const auto& t : col.terms()) left(t.key, j) = t.coeff;
    }
    const TensorElement one = TensorElement::unit(u.parent(), u.rank());
    std::vector<CycNumber> rhs(n);
    for (const auto& t : one.terms()) rhs[t.key] = t.coeff;
    const std::size_t r = rank(left);
    if (r < n)
        throw SingularElement("left multiplication has rank " + std::to_string(r) + " < " + std::to_string(n) +
                              " (zero determinant)");
    auto sol = solve(left, rhs);
    TermAccumulator acc(u.parent(), u.rank());
    for (std::uint64_t j = 0; j < n; ++j) acc.add(j, (*sol)[j]);
    TensorElement v = std::move(acc).finish();
    if (!(mul(v, u) == one)) throw SingularElement("right inverse is not a left inverse");
    return v;
}

bool in_span(const TensorElement& u, std::span<const int> sub_basis) {
    const std::unordered_set<int> allowed(sub_basis.begin(), sub_basis.end());
    for (const auto& t : u.terms())
        for (int b : u.tuple_of(t.key))
            if (!allowed.contains(b)) return false;
    return true;
}

std::optional<std::string> first_difference(const TensorElement& a, const TensorElement& b) {
    if (a.parent() != b.parent()) return "elements live in different algebras";
    if (a.rank() != b.rank())
        return "rank " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank());
    const TensorElement diff = a - b;
    if (diff.is_zero()) return std::nullopt;
    const auto& t = diff.terms().front();
    std::string label;
    const auto tuple = diff.tuple_of(t.key);
    for (std::size_t s = 0; s < tuple.size(); ++s) label += (s ? " ⊗ " : "") + a.parent()->label(tuple[s]);
    if (tuple.empty()) label = "scalar";
    return "at " + label + ": lhs " + a.coefficient_at(t.key).to_string() + ", rhs " +
           b.coefficient_at(t.key).to_string();
}

}  // namespace qhopf
