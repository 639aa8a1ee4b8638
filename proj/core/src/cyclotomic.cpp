#include "qhopf/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qhopf {

namespace {

struct FieldData {
    int m = 1;
    int phi = 1;
    std::vector<long> poly;
    // reduced_power[k] is z^k reduced modulo the cyclotomic polynomial, k < m,
    // stored sparsely as (index, integer coefficient).
    std::vector<std::vector<std::pair<int, long>>> reduced_power;
    // canonical integer vector of +-z^k -> k (for +) or m + k (for -)
    std::map<std::vector<long>, int> root_index;
};

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
    // den is monic
    const std::size_t dn = den.size() - 1;
    if (num.size() <= dn) return {0};
    std::vector<long> quot(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        const long c = num[k];
        if (c == 0) continue;
        quot[k - dn] = c;
        for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
    }
    return quot;
}

std::vector<long> compute_cyclotomic(int m);

std::mutex& registry_mutex() {
    static std::mutex mu;
    return mu;
}

std::map<int, std::unique_ptr<FieldData>>& registry() {
    static std::map<int, std::unique_ptr<FieldData>> fields;
    return fields;
}

std::map<int, std::vector<long>>& poly_cache() {
    static std::map<int, std::vector<long>> cache;
    return cache;
}

// Caller holds registry_mutex.
const std::vector<long>& cyclotomic_locked(int m) {
    auto& cache = poly_cache();
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto poly = compute_cyclotomic(m);
    return cache.emplace(m, std::move(poly)).first->second;
}

std::vector<long> compute_cyclotomic(int m) {
    std::vector<long> num(static_cast<std::size_t>(m) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = poly_divide_exact(num, cyclotomic_locked(d));
    }
    return num;
}

const FieldData& field_slow(int m) {
    if (m < 1) throw InvalidArgument("conductor must be positive, got " + std::to_string(m));
    std::lock_guard lock(registry_mutex());
    auto& fields = registry();
    auto it = fields.find(m);
    if (it != fields.end()) return *it->second;

    auto data = std::make_unique<FieldData>();
    data->m = m;
    data->poly = cyclotomic_locked(m);
    data->phi = static_cast<int>(data->poly.size()) - 1;
    const int phi = data->phi;

    std::vector<long> current(static_cast<std::size_t>(phi), 0);
    current[0] = 1;
    if (phi == 0) current.assign(1, 1);
    data->reduced_power.resize(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        auto& row = data->reduced_power[static_cast<std::size_t>(k)];
        for (int i = 0; i < phi; ++i)
            if (current[static_cast<std::size_t>(i)] != 0) row.emplace_back(i, current[static_cast<std::size_t>(i)]);
        // multiply by z and reduce
        const long top = current[static_cast<std::size_t>(phi - 1)];
        for (int i = phi - 1; i > 0; --i) current[static_cast<std::size_t>(i)] = current[static_cast<std::size_t>(i - 1)];
        current[0] = 0;
        if (top != 0)
            for (int i = 0; i < phi; ++i) current[static_cast<std::size_t>(i)] -= top * data->poly[static_cast<std::size_t>(i)];
    }
    for (int k = 0; k < m; ++k) {
        std::vector<long> plus(static_cast<std::size_t>(phi), 0);
        for (const auto& [i, c] : data->reduced_power[static_cast<std::size_t>(k)]) plus[static_cast<std::size_t>(i)] = c;
        std::vector<long> minus = plus;
        for (auto& c : minus) c = -c;
        data->root_index.emplace(std::move(plus), k);
        data->root_index.emplace(std::move(minus), m + k);
    }
    return *fields.emplace(m, std::move(data)).first->second;
}

const FieldData& field(int m) {
    thread_local int last_m = 0;
    thread_local const FieldData* last = nullptr;
    if (m != last_m) {
        last = &field_slow(m);
        last_m = m;
    }
    return *last;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

using i64 = std::int64_t;

struct Overflow {};

// Small numerators stay below 2^62 in magnitude so negation and gcd are safe.
constexpr i64 kSmallLimit = i64{1} << 62;

i64 fit(i64 v) {
    if (v >= kSmallLimit || v <= -kSmallLimit) throw Overflow{};
    return v;
}
i64 add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return fit(r);
}
i64 sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return fit(r);
}
i64 mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return fit(r);
}
i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }
bool is_zero(i64 a) { return a == 0; }
bool is_neg(i64 a) { return a < 0; }

mpz_class add(const mpz_class& a, const mpz_class& b) { return a + b; }
mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}
bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
bool is_neg(const mpz_class& a) { return sgn(a) < 0; }

template <class Int>
struct Poly {
    std::vector<Int> num;
    Int den{1};
};

template <class Int>
void normalize(Poly<Int>& p) {
    if (is_neg(p.den)) {
        p.den = sub(Int(0), p.den);
        for (auto& c : p.num) c = sub(Int(0), c);
    }
    Int g = p.den;
    bool zero = true;
    for (const auto& c : p.num) {
        if (is_zero(c)) continue;
        zero = false;
        if (g == Int(1)) break;
        g = gcd(g, c);
    }
    if (zero) {
        p.den = Int(1);
        return;
    }
    if (g == Int(1)) return;
    for (auto& c : p.num) c /= g;
    p.den /= g;
}

// Folds a dense polynomial in z (any length) into the power basis.
template <class Int>
std::vector<Int> reduce_dense(const FieldData& f, std::vector<Int>& dense) {
    const auto m = static_cast<std::size_t>(f.m);
    for (std::size_t k = dense.size(); k-- > m;) {
        if (is_zero(dense[k])) continue;
        dense[k % m] = add(dense[k % m], dense[k]);
        dense[k] = Int(0);
    }
    const auto phi = static_cast<std::size_t>(f.phi);
    std::vector<Int> out(phi, Int(0));
    const std::size_t top = std::min(dense.size(), m);
    for (std::size_t k = 0; k < top; ++k) {
        if (is_zero(dense[k])) continue;
        if (k < phi) {
            out[k] = add(out[k], dense[k]);
        } else {
            for (const auto& [i, c] : f.reduced_power[k])
                out[static_cast<std::size_t>(i)] = add(out[static_cast<std::size_t>(i)], mul(dense[k], Int(c)));
        }
    }
    return out;
}

template <class Int>
Poly<Int> add_poly(const Poly<Int>& a, const Poly<Int>& b, bool subtract) {
    Poly<Int> out;
    out.num.resize(a.num.size());
    if (a.den == b.den) {
        out.den = a.den;
        for (std::size_t k = 0; k < a.num.size(); ++k)
            out.num[k] = subtract ? sub(a.num[k], b.num[k]) : add(a.num[k], b.num[k]);
    } else {
        out.den = mul(a.den, b.den);
        for (std::size_t k = 0; k < a.num.size(); ++k) {
            const Int x = mul(a.num[k], b.den);
            const Int y = mul(b.num[k], a.den);
            out.num[k] = subtract ? sub(x, y) : add(x, y);
        }
    }
    normalize(out);
    return out;
}

template <class Int>
Poly<Int> mul_poly(const FieldData& f, const Poly<Int>& a, const Poly<Int>& b) {
    const std::size_t phi = a.num.size();
    std::vector<Int> dense(2 * phi, Int(0));
    for (std::size_t i = 0; i < phi; ++i) {
        if (is_zero(a.num[i])) continue;
        for (std::size_t j = 0; j < phi; ++j) {
            if (is_zero(b.num[j])) continue;
            dense[i + j] = add(dense[i + j], mul(a.num[i], b.num[j]));
        }
    }
    Poly<Int> out{reduce_dense(f, dense), mul(a.den, b.den)};
    normalize(out);
    return out;
}

template <class Int>
Poly<Int> shift_poly(const FieldData& f, const Poly<Int>& a, std::size_t k, bool negate) {
    std::vector<Int> dense(a.num.size() + k, Int(0));
    for (std::size_t i = 0; i < a.num.size(); ++i) dense[i + k] = negate ? sub(Int(0), a.num[i]) : a.num[i];
    Poly<Int> out{reduce_dense(f, dense), a.den};
    normalize(out);
    return out;
}

}  // namespace

struct CycNumber::Big {
    std::vector<mpz_class> num;
    mpz_class den;
};

struct CycAccess {
    static Poly<i64> small(const CycNumber& x) { return {x.num_, x.den_}; }

    static Poly<mpz_class> big(const CycNumber& x) {
        if (x.big_) return {x.big_->num, x.big_->den};
        Poly<mpz_class> out;
        out.num.reserve(x.num_.size());
        for (i64 c : x.num_) out.num.emplace_back(static_cast<long>(c));
        out.den = static_cast<long>(x.den_);
        return out;
    }

    static CycNumber make(int m, Poly<i64> p) {
        CycNumber out;
        out.conductor_ = m;
        out.num_ = std::move(p.num);
        out.den_ = p.den;
        return out;
    }

    // Demotes to the small form whenever everything fits.
    static CycNumber make(int m, Poly<mpz_class> p) {
        const auto fits = [](const mpz_class& v) { return mpz_sizeinbase(v.get_mpz_t(), 2) < 62; };
        bool small = fits(p.den);
        for (const auto& c : p.num) small = small && fits(c);
        CycNumber out;
        out.conductor_ = m;
        if (small) {
            out.num_.clear();
            for (const auto& c : p.num) out.num_.push_back(c.get_si());
            out.den_ = p.den.get_si();
        } else {
            out.num_.clear();
            out.big_ = std::make_shared<const CycNumber::Big>(CycNumber::Big{std::move(p.num), std::move(p.den)});
        }
        return out;
    }

    // Runs op on the small forms, redoing it with GMP integers on overflow.
    template <class Op>
    static CycNumber run(int m, const CycNumber& a, const CycNumber& b, Op op) {
        if (!a.big_ && !b.big_) {
            try {
                return make(m, op(small(a), small(b)));
            } catch (const Overflow&) {
            }
        }
        return make(m, op(big(a), big(b)));
    }

    static bool same(const CycNumber& a, const CycNumber& b) {
        if (a.big_ || b.big_) {
            if (!a.big_ || !b.big_) return false;
            return a.big_->den == b.big_->den && a.big_->num == b.big_->num;
        }
        return a.den_ == b.den_ && a.num_ == b.num_;
    }
};

int euler_phi(int m) { return field(m).phi; }

const std::vector<long>& cyclotomic_polynomial(int m) { return field(m).poly; }

CycNumber::CycNumber() = default;

CycNumber::CycNumber(long value) : num_{value}, root_(value == 1 ? 0 : value == -1 ? 1 : -1) {
    if (value >= kSmallLimit || value <= -kSmallLimit) *this = CycNumber(Rational(value));
}

CycNumber::CycNumber(const Rational& value) {
    *this = CycAccess::make(1, Poly<mpz_class>{{value.get_num()}, value.get_den()});
    if (value == 1) root_ = 0;
    if (value == -1) root_ = 1;
}

std::vector<Rational> CycNumber::coefficients() const {
    const auto p = CycAccess::big(*this);
    std::vector<Rational> out;
    out.reserve(p.num.size());
    for (const auto& c : p.num) {
        Rational r(c, p.den);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

CycNumber CycNumber::root_of_unity(int m, long e) {
    const FieldData& f = field(m);
    long r = e % m;
    if (r < 0) r += m;
    std::vector<i64> coeffs(static_cast<std::size_t>(f.phi), 0);
    for (const auto& [i, c] : f.reduced_power[static_cast<std::size_t>(r)]) coeffs[static_cast<std::size_t>(i)] = c;
    CycNumber out = CycAccess::make(m, Poly<i64>{std::move(coeffs), 1});
    out.root_ = static_cast<int>(r);
    return out;
}

CycNumber CycNumber::from_coefficients(int m, std::span<const Rational> coeffs) {
    const FieldData& f = field(m);
    mpz_class den = 1;
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> dense;
    dense.reserve(coeffs.size());
    for (const auto& c : coeffs) dense.push_back(c.get_num() * (den / c.get_den()));
    Poly<mpz_class> p{reduce_dense(f, dense), den};
    if (p.num.empty()) p.num.assign(static_cast<std::size_t>(f.phi), mpz_class(0));
    normalize(p);
    return CycAccess::make(m, std::move(p));
}

CycNumber CycNumber::times_root(int root) const {
    const int m = conductor_;
    const bool negative = root >= m;
    const int k = negative ? root - m : root;
    if (root_ >= 0) {
        const bool neg_self = root_ >= m;
        CycNumber out = root_of_unity(m, static_cast<long>(k) + (neg_self ? root_ - m : root_));
        return negative != neg_self ? -out : out;
    }
    const FieldData& f = field(m);
    const auto shift = static_cast<std::size_t>(k);
    return CycAccess::run(m, *this, *this, [&](const auto& a, const auto&) { return shift_poly(f, a, shift, negative); });
}

bool CycNumber::is_zero() const noexcept {
    if (big_) return false;
    return std::all_of(num_.begin(), num_.end(), [](i64 c) { return c == 0; });
}

bool CycNumber::is_one() const noexcept {
    if (big_ || den_ != 1 || num_.empty() || num_[0] != 1) return false;
    return std::all_of(num_.begin() + 1, num_.end(), [](i64 c) { return c == 0; });
}

CycNumber CycNumber::embed(int m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0)
        throw InvalidArgument("cannot embed conductor " + std::to_string(conductor_) + " into " + std::to_string(m));
    if (root_ >= 0) {
        const bool negative = root_ >= conductor_;
        const CycNumber r = root_of_unity(m, static_cast<long>(negative ? root_ - conductor_ : root_) * (m / conductor_));
        return negative ? -r : r;
    }
    const FieldData& f = field(m);
    const auto step = static_cast<std::size_t>(m / conductor_);
    return CycAccess::run(m, *this, *this, [&](const auto& a, const auto&) {
        using Int = std::decay_t<decltype(a.den)>;
        std::vector<Int> dense(a.num.size() * step, Int(0));
        for (std::size_t k = 0; k < a.num.size(); ++k) dense[k * step] = a.num[k];
        Poly<Int> out{reduce_dense(f, dense), a.den};
        normalize(out);
        return out;
    });
}

std::pair<CycNumber, CycNumber> common_conductor(const CycNumber& a, const CycNumber& b) {
    if (a.conductor() == b.conductor()) return {a, b};
    const int m = static_cast<int>(lcm_long(a.conductor(), b.conductor()));
    return {a.embed(m), b.embed(m)};
}

CycNumber CycNumber::operator-() const {
    CycNumber out = CycAccess::run(conductor_, *this, *this, [](const auto& a, const auto&) {
        auto out = a;
        for (auto& c : out.num) c = -c;
        return out;
    });
    if (root_ >= 0) out.root_ = root_ >= conductor_ ? root_ - conductor_ : root_ + conductor_;
    return out;
}

CycNumber& CycNumber::operator+=(const CycNumber& other) {
    if (conductor_ != other.conductor_) {
        if (other.conductor_ == 1 || conductor_ == 1) {
            // a rational constant sits in coordinate 0 of every conductor
            const int m = std::max(conductor_, other.conductor_);
            const CycNumber& wide = conductor_ == 1 ? other : *this;
            const CycNumber& constant = conductor_ == 1 ? *this : other;
            *this = CycAccess::run(m, wide, constant, [](const auto& a, const auto& c) {
                auto padded = c;
                padded.num.resize(a.num.size(), decltype(c.den)(0));
                return add_poly(a, padded, false);
            });
            return *this;
        }
        auto [a, b] = common_conductor(*this, other);
        *this = std::move(a);
        return *this += b;
    }
    *this = CycAccess::run(conductor_, *this, other, [](const auto& a, const auto& b) { return add_poly(a, b, false); });
    return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& other) { return *this += -other; }

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    if (a.conductor_ != b.conductor_) {
        if (a.conductor_ == 1 || b.conductor_ == 1) {
            const CycNumber& wide = a.conductor_ == 1 ? b : a;
            const CycNumber& scalar = a.conductor_ == 1 ? a : b;
            if (scalar.root_ == 0) return wide;
            if (scalar.root_ == 1) return -wide;
            return CycAccess::run(wide.conductor_, wide, scalar, [](const auto& x, const auto& s) {
                auto out = x;
                for (auto& c : out.num) c = mul(c, s.num[0]);
                out.den = mul(out.den, s.den);
                normalize(out);
                return out;
            });
        }
        auto [x, y] = common_conductor(a, b);
        return x * y;
    }
    if (b.root_ >= 0) return a.times_root(b.root_);
    if (a.root_ >= 0) return b.times_root(a.root_);
    const FieldData& f = field(a.conductor_);
    return CycAccess::run(a.conductor_, a, b, [&](const auto& x, const auto& y) { return mul_poly(f, x, y); });
}

CycNumber& CycNumber::operator*=(const CycNumber& other) {
    *this = *this * other;
    return *this;
}

CycNumber& CycNumber::operator/=(const CycNumber& other) {
    *this = *this * other.inverse();
    return *this;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
    if (a.conductor_ == b.conductor_) return CycAccess::same(a, b);
    auto [x, y] = common_conductor(a, b);
    return CycAccess::same(x, y);
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (root_ >= 0) {
        const bool negative = root_ >= conductor_;
        const CycNumber r = root_of_unity(conductor_, -static_cast<long>(negative ? root_ - conductor_ : root_));
        return negative ? -r : r;
    }
    {
        // +-z^k written out without the tag
        const FieldData& f = field(conductor_);
        if (!big_ && den_ == 1) {
            std::vector<long> ints(num_.begin(), num_.end());
            auto it = f.root_index.find(ints);
            if (it != f.root_index.end()) {
                const int k = it->second % f.m;
                CycNumber inv = root_of_unity(f.m, -static_cast<long>(k));
                return it->second >= f.m ? -inv : inv;
            }
        }
    }
    const auto phi = static_cast<std::size_t>(field(conductor_).phi);
    // Column k of the multiplication matrix holds the coordinates of this * z^k.
    std::vector<std::vector<Rational>> rows(phi, std::vector<Rational>(phi + 1, Rational(0)));
    for (std::size_t k = 0; k < phi; ++k) {
        const auto col = times_root(static_cast<int>(k)).coefficients();
        for (std::size_t i = 0; i < phi; ++i) rows[i][k] = col[i];
    }
    rows[0][phi] = 1;
    for (std::size_t c = 0; c < phi; ++c) {
        std::size_t p = c;
        while (p < phi && sgn(rows[p][c]) == 0) ++p;
        if (p == phi) throw DivisionByZero();  // unreachable in a field
        std::swap(rows[p], rows[c]);
        const Rational pivot = rows[c][c];
        for (std::size_t j = c; j <= phi; ++j) rows[c][j] /= pivot;
        for (std::size_t r = 0; r < phi; ++r) {
            if (r == c || sgn(rows[r][c]) == 0) continue;
            const Rational f = rows[r][c];
            for (std::size_t j = c; j <= phi; ++j) rows[r][j] -= f * rows[c][j];
        }
    }
    std::vector<Rational> sol(phi);
    for (std::size_t i = 0; i < phi; ++i) sol[i] = rows[i][phi];
    return from_coefficients(conductor_, sol);
}

CycNumber CycNumber::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    CycNumber result(1L);
    CycNumber base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

std::optional<int> CycNumber::multiplicative_order() const {
    if (is_zero()) throw DivisionByZero();
    CycNumber power = *this;
    const int bound = 2 * conductor_;
    for (int k = 1; k <= bound; ++k) {
        if (power.is_one()) return k;
        power *= *this;
    }
    return std::nullopt;
}

std::strong_ordering compare(const CycNumber& a, const CycNumber& b) {
    auto [x, y] = common_conductor(a, b);
    const auto xs = x.coefficients();
    const auto ys = y.coefficients();
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const int c = cmp(xs[k], ys[k]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string CycNumber::to_string(std::string_view symbol) const {
    const auto coeffs = coefficients();
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const Rational& c = coeffs[k];
        if (sgn(c) == 0) continue;
        const bool negative = sgn(c) < 0;
        const Rational mag = abs(c);
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) out << mag.get_str() << '*';
        out << symbol;
        if (k > 1) out << '^' << k;
    }
    if (first) return "0";
    return out.str();
}

}  // namespace qhopf
