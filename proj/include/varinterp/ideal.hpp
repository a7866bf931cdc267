#pragma once

/**
 * @file ideal.hpp
 * @brief Ideals with cached Groebner bases, and the ideal-level operations:
 *        sums, intersections, radical membership, zero-dimensional radicals.
 *
 * Varieties are represented by the ideals a caller supplies. Inputs meant as
 * "the ideal of a variety" are assumed radical; only zero-dimensional
 * radicality is decided here.
 */

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "groebner.hpp"
#include "polynomial.hpp"

namespace varinterp {

/// Name of the auxiliary variable appended for eliminations.
inline constexpr const char* kAuxiliaryVariable = "_t";

class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> generators)
        : ring_(std::move(ring)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
        for (const auto& g : generators_)
            if (!same_ring(g.ring(), ring_)) throw RingMismatch("ideal generator");
    }

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(RingPtr ring) {
        auto one = Polynomial::constant(ring, Scalar(1));
        return Ideal(std::move(ring), {std::move(one)});
    }

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }

    bool is_zero() const {
        return std::all_of(generators_.begin(), generators_.end(), [](const auto& g) { return g.is_zero(); });
    }

    /// Reduced basis with cofactor tracking, computed once per order.
    const GroebnerBasis& groebner(const MonomialOrder& order = MonomialOrder::grevlex()) const {
        {
            std::lock_guard lock(cache_->mutex);
            if (auto it = cache_->bases.find(order); it != cache_->bases.end()) return *it->second;
        }
        auto computed = std::make_shared<const GroebnerBasis>(compute(order));
        std::lock_guard lock(cache_->mutex);
        auto [it, inserted] = cache_->bases.try_emplace(order, std::move(computed));
        return *it->second;
    }

    bool is_unit() const { return !is_zero() && groebner().is_unit(); }

    std::optional<Certificate> member(const Polynomial& p) const {
        if (!same_ring(p.ring(), ring_)) throw RingMismatch();
        if (is_zero()) {
            if (!p.is_zero()) return std::nullopt;
            return Certificate{p, generators_, std::vector<Polynomial>(generators_.size(), Polynomial(ring_))};
        }
        return membership_certificate(p, groebner());
    }

    bool contains(const Polynomial& p) const {
        if (is_zero()) return p.is_zero();
        return normal_form(p, groebner()).is_zero();
    }

    void check_ring(const Ideal& other) const {
        if (!same_ring(ring_, other.ring_)) throw RingMismatch();
    }

private:
    struct Cache {
        std::mutex mutex;
        std::map<MonomialOrder, std::shared_ptr<const GroebnerBasis>> bases;
    };

    GroebnerBasis compute(const MonomialOrder& order) const {
        if (is_zero()) {
            GroebnerBasis gb;
            gb.ring = ring_;
            gb.order = order;
            gb.generators = generators_;
            return gb;
        }
        return buchberger_reduced(generators_, order);
    }

    RingPtr ring_;
    std::vector<Polynomial> generators_;
    std::shared_ptr<Cache> cache_;
};

/// Equality of ideals: identical reduced grevlex bases.
inline bool ideal_equal(const Ideal& a, const Ideal& b) {
    a.check_ring(b);
    return a.groebner().elements == b.groebner().elements;
}

inline bool operator==(const Ideal& a, const Ideal& b) { return ideal_equal(a, b); }

/// J1 + J2: concatenated generators.
inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    a.check_ring(b);
    std::vector<Polynomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring(), std::move(gens));
}

/// Ideal spanned by the reduced grevlex basis of J, a canonical generator list.
inline Ideal canonical(const Ideal& j) {
    if (j.is_zero()) return Ideal::zero(j.ring());
    return Ideal(j.ring(), j.groebner().elements);
}

/**
 * J1 ∩ J2 as the elimination of t from t*J1 + (1 - t)*J2. Every generator of
 * the result is checked for membership in both inputs.
 */
inline Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    a.check_ring(b);
    const RingPtr& ring = a.ring();
    if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);

    RingPtr ext = ring->extended(kAuxiliaryVariable);
    const std::size_t t_index = ring->dimension();
    Polynomial t = Polynomial::variable(ext, t_index);
    Polynomial one_minus_t = Polynomial::constant(ext, Scalar(1)) - t;

    std::vector<Polynomial> gens;
    for (const auto& g : a.generators())
        if (!g.is_zero()) gens.push_back(t * g.embed(ext));
    for (const auto& h : b.generators())
        if (!h.is_zero()) gens.push_back(one_minus_t * h.embed(ext));

    std::vector<bool> mask(ext->dimension(), false);
    mask[t_index] = true;
    GroebnerBasis gb = buchberger_reduced(gens, MonomialOrder::eliminating(std::move(mask)), {.track_cofactors = false});

    std::vector<Polynomial> result;
    for (const auto& e : gb.elements)
        if (!e.uses_variable(t_index)) result.push_back(e.restrict_to(ring));

    for (const auto& r : result) {
        if (!a.contains(r) || !b.contains(r))
            throw std::logic_error("intersection generator failed two-sided membership: " + r.to_string());
    }
    if (result.empty()) return Ideal::zero(ring);
    return Ideal(ring, std::move(result));
}

/// Intersection of a nonempty list of ideals, folded left to right.
inline Ideal ideal_intersection(const std::vector<Ideal>& ideals) {
    if (ideals.empty()) throw PreconditionError("intersection of an empty list");
    Ideal acc = ideals.front();
    for (std::size_t k = 1; k < ideals.size(); ++k) acc = ideal_intersection(acc, ideals[k]);
    return acc;
}

/// p in sqrt(J), decided by 1 in J + <1 - t*p> over the ring extended by t.
inline bool radical_member(const Polynomial& p, const Ideal& j) {
    if (!same_ring(p.ring(), j.ring())) throw RingMismatch();
    if (p.is_zero()) return true;
    RingPtr ext = j.ring()->extended(kAuxiliaryVariable);
    Polynomial t = Polynomial::variable(ext, j.ring()->dimension());
    std::vector<Polynomial> gens;
    for (const auto& g : j.generators())
        if (!g.is_zero()) gens.push_back(g.embed(ext));
    gens.push_back(Polynomial::constant(ext, Scalar(1)) - t * p.embed(ext));
    return buchberger_reduced(gens, MonomialOrder::grevlex(), {.track_cofactors = false}).is_unit();
}

/// Finitely many points: every variable has a pure power among the leading monomials.
inline bool is_zero_dimensional(const Ideal& j) {
    if (j.is_zero()) return j.ring()->dimension() == 0;
    const GroebnerBasis& gb = j.groebner();
    if (gb.is_unit()) return true;
    std::vector<bool> seen(j.ring()->dimension(), false);
    for (const auto& e : gb.elements) {
        if (auto v = e.leading_monomial(gb.order).pure_power_variable()) seen[*v] = true;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

/// Monic generator of J ∩ k[x_var]; J must be zero-dimensional.
inline Polynomial minimal_polynomial(const Ideal& j, std::size_t var) {
    const std::size_t d = j.ring()->dimension();
    std::vector<bool> mask(d, true);
    mask.at(var) = false;
    GroebnerBasis gb = buchberger_reduced(j.generators(), MonomialOrder::eliminating(std::move(mask)),
                                          {.track_cofactors = false});
    for (const auto& e : gb.elements) {
        bool univariate = true;
        for (std::size_t k = 0; k < d && univariate; ++k)
            if (k != var && e.uses_variable(k)) univariate = false;
        if (univariate) return e;
    }
    throw PreconditionError("ideal has no univariate element in " + j.ring()->variable(var));
}

/// Monic gcd of two polynomials in a single variable.
inline Polynomial univariate_gcd(Polynomial a, Polynomial b) {
    a.check_ring(b);
    while (!b.is_zero()) {
        Polynomial r = multivariate_divide(a, std::span<const Polynomial>(&b, 1)).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Scalar(1) / a.leading_coefficient(MonomialOrder::grevlex()));
}

/// m / gcd(m, m'), monic.
inline Polynomial squarefree_part(const Polynomial& m, std::size_t var) {
    if (m.is_constant()) return m;
    Polynomial g = univariate_gcd(m, m.derivative(var));
    DivisionResult q = multivariate_divide(m, std::span<const Polynomial>(&g, 1));
    if (!q.remainder.is_zero()) throw std::logic_error("gcd does not divide its argument");
    Polynomial s = q.quotients.front();
    return s * (Scalar(1) / s.leading_coefficient(MonomialOrder::grevlex()));
}

/**
 * Radical of a zero-dimensional ideal: J plus the squarefree parts of the
 * minimal polynomials of every variable, repeated until nothing changes.
 * Generators of the result are its reduced grevlex basis.
 */
inline Ideal zero_dim_radical(const Ideal& j) {
    if (!is_zero_dimensional(j))
        throw PreconditionError("radicality undecided for a positive-dimensional ideal; use data-level membership");
    Ideal current = canonical(j);
    for (;;) {
        if (current.is_unit()) return current;
        std::vector<Polynomial> gens = current.generators();
        for (std::size_t v = 0; v < j.ring()->dimension(); ++v)
            gens.push_back(squarefree_part(minimal_polynomial(current, v), v));
        Ideal next = canonical(Ideal(j.ring(), std::move(gens)));
        if (ideal_equal(next, current)) return current;
        current = std::move(next);
    }
}

inline bool is_radical(const Ideal& j) { return ideal_equal(j, zero_dim_radical(j)); }

enum class Radicality { radical, not_radical, undecided };

inline const char* to_string(Radicality r) {
    switch (r) {
        case Radicality::radical: return "radical";
        case Radicality::not_radical: return "not radical";
        case Radicality::undecided: return "undecided";
    }
    return "undecided";
}

/// Radicality verdict; undecided exactly when the ideal is not zero-dimensional.
inline Radicality radicality(const Ideal& j) {
    if (!is_zero_dimensional(j)) return Radicality::undecided;
    return is_radical(j) ? Radicality::radical : Radicality::not_radical;
}

}  // namespace varinterp
