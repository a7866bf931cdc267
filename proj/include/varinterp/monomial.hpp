#pragma once

/**
 * @file monomial.hpp
 * @brief Exponent vectors and the monomial orders used by the Groebner machinery.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace varinterp {

/// x^alpha for an exponent vector alpha; its length is the ring dimension.
class Monomial {
public:
    using exponent_type = std::uint32_t;

    Monomial() = default;
    explicit Monomial(std::size_t dimension) : exps_(dimension, 0) {}
    explicit Monomial(std::vector<exponent_type> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t dimension, std::size_t index, exponent_type power = 1) {
        Monomial m(dimension);
        m.exps_.at(index) = power;
        return m;
    }

    std::size_t dimension() const noexcept { return exps_.size(); }
    exponent_type operator[](std::size_t i) const { return exps_[i]; }
    exponent_type& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<exponent_type>& exponents() const noexcept { return exps_; }

    /// |alpha|
    unsigned degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

    /// alpha! = prod alpha_j!
    Integer factorial() const {
        Integer out = 1;
        for (auto e : exps_) out *= varinterp::factorial(e);
        return out;
    }

    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
    }

    /// Index of the only variable present, when this is a pure power x_j^k with k > 0.
    std::optional<std::size_t> pure_power_variable() const {
        std::optional<std::size_t> found;
        for (std::size_t j = 0; j < exps_.size(); ++j) {
            if (exps_[j] == 0) continue;
            if (found) return std::nullopt;
            found = j;
        }
        return found;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t j = 0; j < exps_.size(); ++j)
            if (exps_[j] > other.exps_[j]) return false;
        return true;
    }

    /// this / other; requires other.divides(*this).
    Monomial quotient(const Monomial& other) const {
        Monomial out(*this);
        for (std::size_t j = 0; j < exps_.size(); ++j) out.exps_[j] -= other.exps_[j];
        return out;
    }

    Monomial lcm(const Monomial& other) const {
        Monomial out(*this);
        for (std::size_t j = 0; j < exps_.size(); ++j) out.exps_[j] = std::max(exps_[j], other.exps_[j]);
        return out;
    }

    bool coprime_with(const Monomial& other) const {
        for (std::size_t j = 0; j < exps_.size(); ++j)
            if (exps_[j] != 0 && other.exps_[j] != 0) return false;
        return true;
    }

    Monomial& operator*=(const Monomial& other) {
        for (std::size_t j = 0; j < exps_.size(); ++j) exps_[j] += other.exps_[j];
        return *this;
    }
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<exponent_type> exps_;
};

/// Graded reverse lexicographic comparison with x_1 > x_2 > ... > x_d.
inline std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t j = a.dimension(); j-- > 0;) {
        if (a[j] != b[j]) return b[j] <=> a[j];
    }
    return std::strong_ordering::equal;
}

inline std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
    for (std::size_t j = 0; j < a.dimension(); ++j) {
        if (a[j] != b[j]) return a[j] <=> b[j];
    }
    return std::strong_ordering::equal;
}

/// Storage order for polynomial terms: descending grevlex.
struct GrevlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

/**
 * Total multiplicative order on monomials.
 *
 * A block order splits the variables into an eliminated block and the rest.
 * Monomials are compared by grevlex on the eliminated block first, then by
 * grevlex on the remaining variables, so any monomial containing an
 * eliminated variable exceeds every monomial free of them.
 */
class MonomialOrder {
public:
    enum class Kind { grevlex, lex, block };

    MonomialOrder() = default;

    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, {}); }
    static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}); }

    /// Eliminates the first k of d variables.
    static MonomialOrder block(std::size_t k, std::size_t dimension) {
        if (k > dimension) throw PreconditionError("block split exceeds ring dimension");
        std::vector<bool> mask(dimension, false);
        std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
        return MonomialOrder(Kind::block, std::move(mask));
    }

    /// Eliminates exactly the variables flagged in the mask.
    static MonomialOrder eliminating(std::vector<bool> mask) { return MonomialOrder(Kind::block, std::move(mask)); }

    Kind kind() const noexcept { return kind_; }
    const std::vector<bool>& eliminated() const noexcept { return mask_; }
    bool is_graded() const noexcept { return kind_ == Kind::grevlex; }

    bool eliminates(std::size_t var) const { return kind_ == Kind::block && var < mask_.size() && mask_[var]; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::grevlex: return grevlex_compare(a, b);
            case Kind::lex: return lex_compare(a, b);
            case Kind::block: break;
        }
        if (mask_.size() != a.dimension()) throw PreconditionError("block order dimension mismatch");
        if (auto c = masked_grevlex(a, b, true); c != 0) return c;
        return masked_grevlex(a, b, false);
    }

    std::string name() const {
        switch (kind_) {
            case Kind::grevlex: return "grevlex";
            case Kind::lex: return "lex";
            case Kind::block: break;
        }
        std::string out = "block(";
        for (bool b : mask_) out += b ? '1' : '0';
        return out + ")";
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
    friend auto operator<=>(const MonomialOrder& a, const MonomialOrder& b) {
        if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0) return c;
        return a.mask_ <=> b.mask_;
    }

private:
    MonomialOrder(Kind kind, std::vector<bool> mask) : kind_(kind), mask_(std::move(mask)) {}

    std::strong_ordering masked_grevlex(const Monomial& a, const Monomial& b, bool in_block) const {
        unsigned da = 0, db = 0;
        for (std::size_t j = 0; j < a.dimension(); ++j) {
            if (mask_[j] != in_block) continue;
            da += a[j];
            db += b[j];
        }
        if (auto c = da <=> db; c != 0) return c;
        for (std::size_t j = a.dimension(); j-- > 0;) {
            if (mask_[j] != in_block) continue;
            if (a[j] != b[j]) return b[j] <=> a[j];
        }
        return std::strong_ordering::equal;
    }

    Kind kind_ = Kind::grevlex;
    std::vector<bool> mask_;
};

/// Strict "a > b" under a monomial order; the comparator of order-sorted term maps.
struct OrderDescending {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order.compare(a, b) > 0; }
};

}  // namespace varinterp
