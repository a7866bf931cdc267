#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse exact multivariate polynomials over Q or Q(i).
 *
 * A Polynomial is a map from Monomial to nonzero Scalar, kept sorted in
 * descending grevlex order, together with a shared handle to its Ring
 * (variable names and coefficient field). Arithmetic between polynomials of
 * different rings throws RingMismatch.
 *
 * The differential-operator side lives here too: L(D) replaces x_j by the
 * partial derivative D_j, and the Fischer product <f, L> = conj(L)(D) f pairs
 * homogeneous polynomials of equal degree with <x^a, x^b> = a! [a == b].
 */

#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "monomial.hpp"
#include "scalar.hpp"

namespace varinterp {

enum class Field { rational, gaussian_rational };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
public:
    Ring(std::vector<std::string> variables, Field field) : vars_(std::move(variables)), field_(field) {}

    static RingPtr make(std::vector<std::string> variables, Field field = Field::rational) {
        return std::make_shared<const Ring>(std::move(variables), field);
    }

    std::size_t dimension() const noexcept { return vars_.size(); }
    Field field() const noexcept { return field_; }
    const std::vector<std::string>& variables() const noexcept { return vars_; }
    const std::string& variable(std::size_t j) const { return vars_.at(j); }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t j = 0; j < vars_.size(); ++j)
            if (vars_[j] == name) return j;
        return std::nullopt;
    }

    /// The same ring with one more variable appended last.
    RingPtr extended(const std::string& name) const {
        auto vars = vars_;
        vars.push_back(name);
        return make(std::move(vars), field_);
    }

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    std::vector<std::string> vars_;
    Field field_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar, GrevlexDescending>;
    using Term = TermMap::value_type;

    /// A ringless zero; only useful as a placeholder before assignment.
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, Scalar value) {
        Polynomial p(std::move(ring));
        p.add_term(Monomial(p.dimension()), std::move(value));
        return p;
    }
    static Polynomial variable(RingPtr ring, std::size_t index) {
        Polynomial p(std::move(ring));
        p.add_term(Monomial::variable(p.dimension(), index), Scalar(1));
        return p;
    }
    static Polynomial term(RingPtr ring, Monomial m, Scalar c) {
        Polynomial p(std::move(ring));
        if (m.dimension() != p.dimension()) throw RingMismatch("monomial dimension");
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t dimension() const { return ring_ ? ring_->dimension() : 0; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

    Scalar coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }
    Scalar constant_term() const { return coefficient(Monomial(dimension())); }

    /// Total degree; the zero polynomial has none.
    unsigned total_degree() const {
        require_nonzero("total degree");
        return terms_.begin()->first.degree();
    }
    /// Lowest total degree among the terms.
    unsigned lowest_degree() const {
        require_nonzero("lowest degree");
        return terms_.rbegin()->first.degree();
    }
    bool is_homogeneous() const { return is_zero() || total_degree() == lowest_degree(); }

    bool uses_variable(std::size_t j) const {
        for (const auto& [m, c] : terms_)
            if (m[j] != 0) return true;
        return false;
    }

    /// Leading term under an arbitrary monomial order.
    const Term& leading_term(const MonomialOrder& order) const {
        require_nonzero("leading term");
        if (order.kind() == MonomialOrder::Kind::grevlex) return *terms_.begin();
        auto best = terms_.begin();
        for (auto it = std::next(best); it != terms_.end(); ++it)
            if (order.compare(it->first, best->first) > 0) best = it;
        return *best;
    }
    const Monomial& leading_monomial(const MonomialOrder& order) const { return leading_term(order).first; }
    const Scalar& leading_coefficient(const MonomialOrder& order) const { return leading_term(order).second; }

    /// Sum of the terms of top total degree.
    Polynomial leading_form() const {
        if (is_zero()) throw PreconditionError("undefined leading form");
        return homogeneous_component(total_degree());
    }

    Polynomial homogeneous_component(unsigned k) const {
        Polynomial out(ring_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == k) out.terms_.emplace_hint(out.terms_.end(), m, c);
        return out;
    }

    /// Coefficient-wise complex conjugate.
    Polynomial conj() const {
        Polynomial out(ring_);
        for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, c.conj());
        return out;
    }

    Polynomial derivative(std::size_t var) const {
        Polynomial out(ring_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Monomial dm(m);
            dm[var] -= 1;
            out.add_term(std::move(dm), c * Scalar(static_cast<long>(m[var])));
        }
        return out;
    }

    Scalar evaluate(std::span<const Scalar> point) const {
        if (point.size() != dimension()) throw PreconditionError("evaluation point has wrong dimension");
        Scalar total;
        for (const auto& [m, c] : terms_) {
            Scalar value = c;
            for (std::size_t j = 0; j < m.dimension(); ++j)
                for (unsigned e = 0; e < m[j]; ++e) value *= point[j];
            total += value;
        }
        return total;
    }

    /// this += c * x^m
    void add_term(Monomial m, Scalar c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// this += c * x^m * p
    void add_scaled(const Polynomial& p, const Scalar& c, const Monomial& m) {
        check_ring(p);
        if (c.is_zero()) return;
        for (const auto& [pm, pc] : p.terms_) add_term(pm * m, pc * c);
    }

    Polynomial operator-() const {
        Polynomial out(ring_);
        for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
        return out;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
    friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ring(b);
        Polynomial out(a.ring_);
        for (const auto& [mb, cb] : b.terms_) out.add_scaled(a, cb, mb);
        return out;
    }

    Polynomial pow(unsigned e) const {
        Polynomial out = constant(ring_, Scalar(1));
        for (unsigned k = 0; k < e; ++k) out *= *this;
        return out;
    }

    /// Equality of value; rings must agree.
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
    }

    /// Re-expresses this polynomial in a ring whose variables extend ours.
    Polynomial embed(const RingPtr& target) const {
        if (!target || target->dimension() < dimension() || target->field() != ring_->field())
            throw RingMismatch("cannot embed");
        for (std::size_t j = 0; j < dimension(); ++j)
            if (target->variable(j) != ring_->variable(j)) throw RingMismatch("cannot embed");
        Polynomial out(target);
        for (const auto& [m, c] : terms_) {
            auto exps = m.exponents();
            exps.resize(target->dimension(), 0);
            out.add_term(Monomial(std::move(exps)), c);
        }
        return out;
    }

    /// Inverse of embed: drops trailing variables, which must not occur.
    Polynomial restrict_to(const RingPtr& target) const {
        if (!target || target->dimension() > dimension()) throw RingMismatch("cannot restrict");
        Polynomial out(target);
        for (const auto& [m, c] : terms_) {
            for (std::size_t j = target->dimension(); j < dimension(); ++j)
                if (m[j] != 0) throw PreconditionError("polynomial uses an eliminated variable");
            auto exps = m.exponents();
            exps.resize(target->dimension());
            out.add_term(Monomial(std::move(exps)), c);
        }
        return out;
    }

    void check_ring(const Polynomial& o) const {
        if (!same_ring(ring_, o.ring_)) throw RingMismatch();
    }

    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
    void require_nonzero(const char* what) const {
        if (is_zero()) throw PreconditionError(std::string(what) + " of the zero polynomial is undefined");
    }

    RingPtr ring_;
    TermMap terms_;
};

inline Polynomial leading_form(const Polynomial& p) { return p.leading_form(); }
inline Polynomial homogeneous_component(const Polynomial& p, unsigned k) { return p.homogeneous_component(k); }
inline Scalar evaluate(const Polynomial& p, std::span<const Scalar> point) { return p.evaluate(point); }

/// Applies the constant-coefficient operator L(D) to f.
inline Polynomial apply_diff_op(const Polynomial& op, const Polynomial& f) {
    op.check_ring(f);
    Polynomial out(f.ring());
    for (const auto& [lm, lc] : op.terms()) {
        for (const auto& [fm, fc] : f.terms()) {
            if (!lm.divides(fm)) continue;
            // D^a x^b = b!/(b-a)! x^(b-a)
            Monomial rest = fm.quotient(lm);
            Integer falling = fm.factorial() / rest.factorial();
            out.add_term(std::move(rest), lc * fc * Scalar(Rational(falling)));
        }
    }
    return out;
}

/// Hermitian Fischer product <f, L> = conj(L)(D) f = sum a! f_a conj(L_a).
inline Scalar fischer_product(const Polynomial& f, const Polynomial& op) {
    f.check_ring(op);
    if (!f.is_homogeneous() || !op.is_homogeneous())
        throw PreconditionError("Fischer product needs homogeneous arguments");
    if (!f.is_zero() && !op.is_zero() && f.total_degree() != op.total_degree())
        throw PreconditionError("Fischer product needs arguments of equal degree");
    Scalar total;
    for (const auto& [m, c] : f.terms()) {
        auto it = op.terms().find(m);
        if (it == op.terms().end()) continue;
        total += c * it->second.conj() * Scalar(Rational(m.factorial()));
    }
    return total;
}

namespace detail {

inline std::string monomial_text(const Ring& ring, const Monomial& m) {
    std::string out;
    for (std::size_t j = 0; j < m.dimension(); ++j) {
        if (m[j] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.variable(j);
        if (m[j] > 1) out += '^' + std::to_string(m[j]);
    }
    return out;
}

/// One signed term; a leading '-' marks a negative real or imaginary coefficient.
inline std::string term_text(const Ring& ring, const Monomial& m, const Scalar& c) {
    std::string mono = monomial_text(ring, m);
    bool complex = !c.is_real() && sgn(c.re()) != 0;
    if (complex) {
        std::string coeff = "(" + c.to_string() + ")";
        return mono.empty() ? coeff : coeff + "*" + mono;
    }
    if (mono.empty()) return c.to_string();
    if (c.is_one()) return mono;
    if (c == Scalar(-1)) return "-" + mono;
    return c.to_string() + "*" + mono;
}

}  // namespace detail

/// Canonical form: descending grevlex, reduced coefficients, `*` between factors.
inline std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string t = detail::term_text(*ring_, m, c);
        if (first) {
            out = t;
            first = false;
        } else if (t.front() == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

}  // namespace varinterp
