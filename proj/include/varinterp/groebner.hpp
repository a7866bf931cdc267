#pragma once

/**
 * @file groebner.hpp
 * @brief Multivariate division, Buchberger's algorithm with cofactor tracking,
 *        and certified ideal membership.
 *
 * Every basis element carries its expression in terms of the original
 * generators, so a zero remainder turns into a membership Certificate
 * without any extra linear algebra. Certificates are checked by plain
 * polynomial expansion and never trust the Groebner code that produced them.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"

namespace varinterp {

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

/// target = sum cofactors[i] * generators[i], checkable by expansion alone.
struct Certificate {
    Polynomial target;
    std::vector<Polynomial> generators;
    std::vector<Polynomial> cofactors;

    Polynomial expand() const {
        Polynomial sum(target.ring());
        for (std::size_t i = 0; i < generators.size(); ++i) sum += cofactors.at(i) * generators[i];
        return sum;
    }
    bool verify() const { return cofactors.size() == generators.size() && expand() == target; }
};

/**
 * Reduced Groebner basis of the ideal spanned by `generators`.
 *
 * elements are monic and sorted by increasing leading monomial. When cofactors
 * are tracked, elements[k] == sum_j expressions[k][j] * generators[j].
 */
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> generators;
    std::vector<Polynomial> elements;
    std::vector<std::vector<Polynomial>> expressions;

    bool tracks_cofactors() const { return expressions.size() == elements.size(); }
    bool is_unit() const { return elements.size() == 1 && elements.front().is_constant(); }
    bool is_zero_ideal() const { return elements.empty(); }
};

struct GroebnerOptions {
    bool track_cofactors = true;
};

namespace detail {

using OrderedTerms = std::map<Monomial, Scalar, OrderDescending>;

inline OrderedTerms ordered_terms(const Polynomial& p, const MonomialOrder& order) {
    OrderedTerms out(OrderDescending{order});
    for (const auto& [m, c] : p.terms()) out.emplace(m, c);
    return out;
}

/**
 * Full reduction of p by the divisors. The first divisor whose leading
 * monomial divides the current leading term is used. on_step(i, c, m) is
 * called for every subtraction of c * x^m * divisors[i].
 */
template <class OnStep>
Polynomial reduce(const Polynomial& p, std::span<const Polynomial> divisors, const MonomialOrder& order,
                  OnStep&& on_step) {
    std::vector<const Polynomial::Term*> leads;
    leads.reserve(divisors.size());
    for (const auto& d : divisors) leads.push_back(&d.leading_term(order));

    OrderedTerms work = ordered_terms(p, order);
    Polynomial remainder(p.ring());
    while (!work.empty()) {
        auto top = work.begin();
        std::size_t hit = divisors.size();
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (leads[i]->first.divides(top->first)) {
                hit = i;
                break;
            }
        }
        if (hit == divisors.size()) {
            remainder.add_term(top->first, top->second);
            work.erase(top);
            continue;
        }
        Scalar c = top->second / leads[hit]->second;
        Monomial shift = top->first.quotient(leads[hit]->first);
        work.erase(top);
        // the leading term cancels exactly; subtract the tail only
        for (const auto& [m, dc] : divisors[hit].terms()) {
            if (m == leads[hit]->first) continue;
            Monomial key = m * shift;
            Scalar delta = dc * c;
            auto [it, inserted] = work.try_emplace(std::move(key), -delta);
            if (!inserted) {
                it->second -= delta;
                if (it->second.is_zero()) work.erase(it);
            }
        }
        on_step(hit, c, shift);
    }
    return remainder;
}

inline void require_divisors(std::span<const Polynomial> divisors, const RingPtr& ring) {
    for (const auto& d : divisors) {
        if (d.is_zero()) throw PreconditionError("zero divisor in list");
        if (!same_ring(d.ring(), ring)) throw RingMismatch();
    }
}

}  // namespace detail

inline DivisionResult multivariate_divide(const Polynomial& p, std::span<const Polynomial> divisors,
                                          const MonomialOrder& order = MonomialOrder::grevlex()) {
    detail::require_divisors(divisors, p.ring());
    DivisionResult out;
    out.quotients.assign(divisors.size(), Polynomial(p.ring()));
    out.remainder = detail::reduce(p, divisors, order, [&](std::size_t i, const Scalar& c, const Monomial& m) {
        out.quotients[i].add_term(m, c);
    });
    return out;
}

namespace detail {

struct TrackedPolynomial {
    Polynomial poly;
    std::vector<Polynomial> expr;
};

struct CriticalPair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

class Buchberger {
public:
    Buchberger(std::span<const Polynomial> generators, MonomialOrder order, bool track)
        : order_(std::move(order)), track_(track), generators_(generators.begin(), generators.end()) {}

    GroebnerBasis run() {
        if (generators_.empty()) throw PreconditionError("empty generator list");
        ring_ = generators_.front().ring();
        for (const auto& g : generators_)
            if (!same_ring(g.ring(), ring_)) throw RingMismatch();
        if (std::all_of(generators_.begin(), generators_.end(), [](const auto& g) { return g.is_zero(); }))
            throw PreconditionError("all generators are zero");

        for (std::size_t j = 0; j < generators_.size(); ++j) {
            if (generators_[j].is_zero()) continue;
            TrackedPolynomial t{generators_[j], {}};
            if (track_) {
                t.expr.assign(generators_.size(), Polynomial(ring_));
                t.expr[j] = Polynomial::constant(ring_, Scalar(1));
            }
            insert(std::move(t));
        }

        while (!pairs_.empty()) {
            auto next = select_pair();
            CriticalPair pair = pairs_[next];
            pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(next));
            pending_.erase({pair.i, pair.j});
            if (chain_criterion(pair)) continue;
            TrackedPolynomial s = s_polynomial(pair);
            TrackedPolynomial r = reduce_full(s, polys_, basis_);
            if (!r.poly.is_zero()) insert(std::move(r));
        }
        return finish();
    }

private:
    void make_monic(TrackedPolynomial& t) const {
        Scalar inv = Scalar(1) / t.poly.leading_coefficient(order_);
        if (inv.is_one()) return;
        t.poly *= inv;
        for (auto& e : t.expr) e *= inv;
    }

    void insert(TrackedPolynomial t) {
        make_monic(t);
        const std::size_t k = basis_.size();
        leads_.push_back(t.poly.leading_monomial(order_));
        basis_.push_back(std::move(t));
        polys_.push_back(basis_.back().poly);
        for (std::size_t i = 0; i < k; ++i) {
            // product criterion: coprime leading monomials reduce to zero
            if (leads_[i].coprime_with(leads_[k])) continue;
            pairs_.push_back({i, k, leads_[i].lcm(leads_[k])});
            pending_.insert({i, k});
        }
    }

    /// Normal strategy: smallest lcm first, ties by index.
    std::size_t select_pair() const {
        std::size_t best = 0;
        for (std::size_t p = 1; p < pairs_.size(); ++p) {
            const auto& a = pairs_[p];
            const auto& b = pairs_[best];
            auto da = a.lcm.degree(), db = b.lcm.degree();
            if (da != db) {
                if (da < db) best = p;
                continue;
            }
            auto c = order_.compare(a.lcm, b.lcm);
            if (c < 0 || (c == 0 && std::pair(a.j, a.i) < std::pair(b.j, b.i))) best = p;
        }
        return best;
    }

    bool is_pending(std::size_t a, std::size_t b) const {
        return pending_.count({std::min(a, b), std::max(a, b)}) != 0;
    }

    /// Buchberger's second criterion.
    bool chain_criterion(const CriticalPair& pair) const {
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (k == pair.i || k == pair.j) continue;
            if (!leads_[k].divides(pair.lcm)) continue;
            if (!is_pending(pair.i, k) && !is_pending(pair.j, k)) return true;
        }
        return false;
    }

    TrackedPolynomial s_polynomial(const CriticalPair& pair) const {
        const auto& a = basis_[pair.i];
        const auto& b = basis_[pair.j];
        Monomial sa = pair.lcm.quotient(leads_[pair.i]);
        Monomial sb = pair.lcm.quotient(leads_[pair.j]);
        TrackedPolynomial s{Polynomial(ring_), {}};
        s.poly.add_scaled(a.poly, Scalar(1), sa);
        s.poly.add_scaled(b.poly, Scalar(-1), sb);
        if (track_) {
            s.expr.assign(generators_.size(), Polynomial(ring_));
            for (std::size_t j = 0; j < generators_.size(); ++j) {
                s.expr[j].add_scaled(a.expr[j], Scalar(1), sa);
                s.expr[j].add_scaled(b.expr[j], Scalar(-1), sb);
            }
        }
        return s;
    }

    TrackedPolynomial reduce_full(const TrackedPolynomial& t, std::span<const Polynomial> divisors,
                                  const std::vector<TrackedPolynomial>& by) const {
        TrackedPolynomial out{Polynomial(ring_), t.expr};
        out.poly = reduce(t.poly, divisors, order_, [&](std::size_t i, const Scalar& c, const Monomial& m) {
            if (!track_) return;
            for (std::size_t j = 0; j < generators_.size(); ++j) out.expr[j].add_scaled(by[i].expr[j], -c, m);
        });
        return out;
    }

    GroebnerBasis finish() {
        // minimal basis: drop elements whose leading monomial another element divides
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
                if (i == j || !leads_[j].divides(leads_[i])) continue;
                redundant = leads_[j] != leads_[i] || j < i;
            }
            if (!redundant) keep.push_back(i);
        }
        std::vector<TrackedPolynomial> minimal;
        for (auto i : keep) minimal.push_back(basis_[i]);

        // interreduce; leading monomials are fixed, so one pass suffices
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            std::vector<TrackedPolynomial> others;
            std::vector<Polynomial> divisors;
            for (std::size_t j = 0; j < minimal.size(); ++j) {
                if (j == k) continue;
                others.push_back(minimal[j]);
                divisors.push_back(minimal[j].poly);
            }
            minimal[k] = reduce_full(minimal[k], divisors, others);
            make_monic(minimal[k]);
        }
        std::sort(minimal.begin(), minimal.end(), [&](const auto& a, const auto& b) {
            return order_.compare(a.poly.leading_monomial(order_), b.poly.leading_monomial(order_)) < 0;
        });

        GroebnerBasis gb;
        gb.ring = ring_;
        gb.order = order_;
        gb.generators = generators_;
        for (auto& t : minimal) {
            gb.elements.push_back(std::move(t.poly));
            if (track_) gb.expressions.push_back(std::move(t.expr));
        }
        return gb;
    }

    MonomialOrder order_;
    bool track_;
    std::vector<Polynomial> generators_;
    RingPtr ring_;
    std::vector<TrackedPolynomial> basis_;
    std::vector<Polynomial> polys_;
    std::vector<Monomial> leads_;
    std::vector<CriticalPair> pairs_;
    std::set<std::pair<std::size_t, std::size_t>> pending_;
};

}  // namespace detail

/// Reduced Groebner basis with generator-expressing cofactors.
inline GroebnerBasis buchberger_reduced(std::span<const Polynomial> generators,
                                        const MonomialOrder& order = MonomialOrder::grevlex(),
                                        GroebnerOptions options = {}) {
    return detail::Buchberger(generators, order, options.track_cofactors).run();
}

inline GroebnerBasis buchberger_reduced(const std::vector<Polynomial>& generators,
                                        const MonomialOrder& order = MonomialOrder::grevlex(),
                                        GroebnerOptions options = {}) {
    return buchberger_reduced(std::span<const Polynomial>(generators), order, options);
}

inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (gb.elements.empty()) return p;
    p.check_ring(gb.elements.front());
    return detail::reduce(p, gb.elements, gb.order, [](std::size_t, const Scalar&, const Monomial&) {});
}

inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb, const MonomialOrder& order) {
    if (order != gb.order) throw PreconditionError("monomial order differs from the basis order");
    return normal_form(p, gb);
}

/// Membership certificate from a tracked basis; empty when p is not in the ideal.
inline std::optional<Certificate> membership_certificate(const Polynomial& p, const GroebnerBasis& gb) {
    if (!gb.tracks_cofactors()) throw PreconditionError("basis was computed without cofactor tracking");
    Certificate cert{p, gb.generators, std::vector<Polynomial>(gb.generators.size(), Polynomial(p.ring()))};
    if (p.is_zero()) return cert;
    if (gb.elements.empty()) return std::nullopt;
    p.check_ring(gb.elements.front());
    std::vector<Polynomial> quotients(gb.elements.size(), Polynomial(p.ring()));
    Polynomial r = detail::reduce(p, gb.elements, gb.order, [&](std::size_t k, const Scalar& c, const Monomial& m) {
        quotients[k].add_term(m, c);
    });
    if (!r.is_zero()) return std::nullopt;
    for (std::size_t k = 0; k < gb.elements.size(); ++k) {
        if (quotients[k].is_zero()) continue;
        for (std::size_t j = 0; j < gb.generators.size(); ++j)
            if (!gb.expressions[k][j].is_zero()) cert.cofactors[j] += quotients[k] * gb.expressions[k][j];
    }
    return cert;
}

/// Certified membership of p in <generators>. An empty or all-zero list is the zero ideal.
inline std::optional<Certificate> ideal_member(const Polynomial& p, std::span<const Polynomial> generators) {
    for (const auto& g : generators) p.check_ring(g);
    bool all_zero = std::all_of(generators.begin(), generators.end(), [](const auto& g) { return g.is_zero(); });
    if (all_zero) {
        if (!p.is_zero()) return std::nullopt;
        return Certificate{p, {generators.begin(), generators.end()},
                           std::vector<Polynomial>(generators.size(), Polynomial(p.ring()))};
    }
    return membership_certificate(p, buchberger_reduced(generators));
}

inline std::optional<Certificate> ideal_member(const Polynomial& p, const std::vector<Polynomial>& generators) {
    return ideal_member(p, std::span<const Polynomial>(generators));
}

/// Certificate of 1 = sum c_i g_i, present iff the generators span the unit ideal.
inline std::optional<Certificate> express_one(std::span<const Polynomial> generators) {
    if (generators.empty()) throw PreconditionError("empty generator list");
    return ideal_member(Polynomial::constant(generators.front().ring(), Scalar(1)), generators);
}

inline std::optional<Certificate> express_one(const std::vector<Polynomial>& generators) {
    return express_one(std::span<const Polynomial>(generators));
}

}  // namespace varinterp
