#pragma once

/**
 * @file pde.hpp
 * @brief Polynomial solutions of L(D)f = 0 with prescribed values on a hypersurface.
 *
 * For q of degree l the space of polynomials splits as
 * (ker conj(L)(D)) ⊕ <q> whenever the two meet only in zero; with L = q^
 * (the leading form of q) this always holds. Every p then has a unique
 * interpolant f = p - q*h in the kernel, and it has minimal degree among all
 * polynomials agreeing with p on V(q).
 */

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"

namespace varinterp {

/// Polynomials of total degree <= bound, coordinatized by monomials in ascending grevlex order.
class DegreeBoundedSpace {
public:
    DegreeBoundedSpace(RingPtr ring, unsigned bound) : ring_(std::move(ring)), bound_(bound) {
        std::size_t d = ring_->dimension();
        Monomial m(d);
        auto rec = [&](auto&& self, std::size_t j, unsigned left) -> void {
            if (j == d) {
                basis_.push_back(m);
                return;
            }
            for (unsigned e = 0; e <= left; ++e) {
                m[j] = e;
                self(self, j + 1, left - e);
            }
            m[j] = 0;
        };
        rec(rec, 0, bound);
        std::sort(basis_.begin(), basis_.end(), [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
        for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
    }

    const RingPtr& ring() const noexcept { return ring_; }
    unsigned bound() const noexcept { return bound_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    const std::vector<Monomial>& basis() const noexcept { return basis_; }

    bool contains(const Polynomial& p) const { return p.is_zero() || p.total_degree() <= bound_; }

    std::vector<Scalar> coordinates(const Polynomial& p) const {
        if (!same_ring(p.ring(), ring_)) throw RingMismatch();
        if (!contains(p)) throw PreconditionError("polynomial of degree " + std::to_string(p.total_degree()) +
                                                  " outside the degree-" + std::to_string(bound_) + " space");
        std::vector<Scalar> out(basis_.size());
        for (const auto& [m, c] : p.terms()) out[index_.at(m)] = c;
        return out;
    }

    Polynomial polynomial(std::span<const Scalar> coords) const {
        if (coords.size() != basis_.size()) throw PreconditionError("coordinate vector has wrong length");
        Polynomial p(ring_);
        for (std::size_t k = 0; k < coords.size(); ++k)
            if (!coords[k].is_zero()) p.add_term(basis_[k], coords[k]);
        return p;
    }

    /// Matrix whose column k holds the coordinates, in `target`, of op(basis[k]).
    template <class Op>
    Matrix matrix_of(const DegreeBoundedSpace& target, Op&& op) const {
        Matrix a(target.dimension(), basis_.size());
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            Polynomial image = op(Polynomial::term(ring_, basis_[k], Scalar(1)));
            auto coords = target.coordinates(image);
            for (std::size_t r = 0; r < coords.size(); ++r) a(r, k) = std::move(coords[r]);
        }
        return a;
    }

private:
    RingPtr ring_;
    unsigned bound_;
    std::vector<Monomial> basis_;
    std::map<Monomial, std::size_t, GrevlexDescending> index_;
};

/// dim C_{<=n}[x] in d variables: C(n + d, d).
inline Integer bounded_dimension(std::size_t d, long n) {
    if (n < 0) return 0;
    return binomial(static_cast<unsigned>(n + static_cast<long>(d)), static_cast<unsigned>(d));
}

/// Basis of ker L(D) within C_{<=n}[x], one element per free monomial, from the reduced echelon nullspace.
inline std::vector<Polynomial> kernel_basis(const Polynomial& op, unsigned n) {
    if (op.is_zero()) throw PreconditionError("zero differential operator");
    DegreeBoundedSpace space(op.ring(), n);
    Matrix a = space.matrix_of(space, [&](const Polynomial& m) { return apply_diff_op(op, m); });
    std::vector<Polynomial> out;
    for (const auto& v : nullspace(a)) out.push_back(space.polynomial(v));
    return out;
}

struct FischerSplit {
    Polynomial input;
    Polynomial kernel_part;  ///< f
    Polynomial cofactor;     ///< h, with input = f + modulus * h
    Polynomial modulus;      ///< q

    bool verify() const { return input == kernel_part + modulus * cofactor; }
};

struct HomogeneousSplit {
    Polynomial kernel_part;
    Polynomial cofactor;
};

/**
 * g = F + L*h with conj(L)(D)F = 0 for homogeneous g (degree k) and L
 * (degree l). h solves M h = conj(L)(D) g on H_{k-l}, where
 * M(h) = conj(L)(D)(L h) is the Gram matrix of the Fischer product on
 * L*H_{k-l}, hence invertible.
 */
inline HomogeneousSplit fischer_split_homogeneous(const Polynomial& g, const Polynomial& op) {
    g.check_ring(op);
    if (op.is_zero() || !op.is_homogeneous()) throw PreconditionError("operator must be a nonzero homogeneous polynomial");
    if (!g.is_homogeneous()) throw PreconditionError("split input must be homogeneous");
    const RingPtr& ring = g.ring();
    if (g.is_zero() || g.total_degree() < op.total_degree()) return {g, Polynomial(ring)};

    unsigned k = g.total_degree();
    unsigned l = op.total_degree();
    Polynomial adjoint = op.conj();
    // Coordinates over all monomials of degree <= k - l; only the top slice is used.
    DegreeBoundedSpace space(ring, k - l);
    std::vector<std::size_t> slice;
    for (std::size_t c = 0; c < space.dimension(); ++c)
        if (space.basis()[c].degree() == k - l) slice.push_back(c);

    Matrix m(slice.size(), slice.size());
    for (std::size_t j = 0; j < slice.size(); ++j) {
        Polynomial image =
            apply_diff_op(adjoint, op * Polynomial::term(ring, space.basis()[slice[j]], Scalar(1)));
        auto coords = space.coordinates(image);
        for (std::size_t i = 0; i < slice.size(); ++i) m(i, j) = coords[slice[i]];
    }
    auto rhs_full = space.coordinates(apply_diff_op(adjoint, g));
    std::vector<Scalar> rhs;
    for (auto c : slice) rhs.push_back(rhs_full[c]);
    auto sol = solve(m, rhs);
    if (!sol) throw std::logic_error("Fischer Gram system is singular");

    Polynomial h(ring);
    for (std::size_t j = 0; j < slice.size(); ++j)
        if (!(*sol)[j].is_zero()) h.add_term(space.basis()[slice[j]], (*sol)[j]);
    return {g - op * h, h};
}

/**
 * ker L(D) ∩ (q * C_{<=n-deg q}) = {0}: the map h -> L(D)(q h) is injective
 * on C_{<=n-deg q}. A degree-bounded form of the transversality condition,
 * sufficient for interpolating any p with deg p <= n.
 */
inline bool transversality_check(const Polynomial& op, const Polynomial& q, unsigned n) {
    op.check_ring(q);
    if (op.is_zero() || q.is_zero()) throw PreconditionError("operator and modulus must be nonzero");
    unsigned l = q.total_degree();
    if (n < l) return true;
    DegreeBoundedSpace source(q.ring(), n - l);
    DegreeBoundedSpace target(q.ring(), n);
    Matrix a = source.matrix_of(target, [&](const Polynomial& h) { return apply_diff_op(op, q * h); });
    return rank(a) == source.dimension();
}

namespace detail {

// Top-down homogeneous splitting against q^; each step only perturbs lower degrees.
inline FischerSplit split_against_leading_form(const Polynomial& p, const Polynomial& q) {
    const RingPtr& ring = p.ring();
    Polynomial lead = q.leading_form();
    unsigned l = q.total_degree();
    Polynomial rest = p;
    Polynomial h(ring);
    if (!p.is_zero()) {
        for (unsigned k = p.total_degree() + 1; k-- > l;) {
            auto part = fischer_split_homogeneous(rest.homogeneous_component(k), lead);
            if (part.cofactor.is_zero()) continue;
            rest -= q * part.cofactor;
            h += part.cofactor;
        }
    }
    return {p, rest, h, q};
}

// Joint solve of f + q*h = p with f in ker conj(L)(D) ∩ C_{<=n}, n = deg p.
inline FischerSplit split_general(const Polynomial& p, const Polynomial& q, const Polynomial& op) {
    const RingPtr& ring = p.ring();
    unsigned l = q.total_degree();
    if (p.is_zero() || p.total_degree() < l) return {p, p, Polynomial(ring), q};
    unsigned n = p.total_degree();
    Polynomial adjoint = op.conj();
    auto kernel = kernel_basis(adjoint, n);
    DegreeBoundedSpace target(ring, n);
    DegreeBoundedSpace multipliers(ring, n - l);

    Matrix a(target.dimension(), kernel.size() + multipliers.dimension());
    for (std::size_t c = 0; c < kernel.size(); ++c) {
        auto coords = target.coordinates(kernel[c]);
        for (std::size_t r = 0; r < coords.size(); ++r) a(r, c) = coords[r];
    }
    for (std::size_t c = 0; c < multipliers.dimension(); ++c) {
        auto coords = target.coordinates(q * Polynomial::term(ring, multipliers.basis()[c], Scalar(1)));
        for (std::size_t r = 0; r < coords.size(); ++r) a(r, kernel.size() + c) = coords[r];
    }
    auto sol = solve(a, target.coordinates(p));
    if (!sol) throw std::logic_error("kernel and ideal fail to span at degree " + std::to_string(n));

    Polynomial f(ring);
    for (std::size_t c = 0; c < kernel.size(); ++c)
        if (!(*sol)[c].is_zero()) f += kernel[c] * (*sol)[c];
    std::vector<Scalar> hc(sol->begin() + static_cast<std::ptrdiff_t>(kernel.size()), sol->end());
    return {p, f, multipliers.polynomial(hc), q};
}

}  // namespace detail

/**
 * The unique f with conj(L)(D) f = 0 and f - p in <q>. Without an operator,
 * L = q^ and the split always exists. A supplied L must have lowest degree
 * deg q, and conj(L) must pass the transversality check at n = deg p.
 */
inline FischerSplit pde_interpolate(const Polynomial& p, const Polynomial& q,
                                    const std::optional<Polynomial>& op = std::nullopt) {
    p.check_ring(q);
    if (q.is_zero() || q.total_degree() == 0) throw PreconditionError("modulus must have positive degree");
    if (!op) return detail::split_against_leading_form(p, q);

    op->check_ring(p);
    if (op->is_zero()) throw PreconditionError("zero differential operator");
    unsigned l = q.total_degree();
    if (op->lowest_degree() != l)
        throw PreconditionError("operator lowest degree " + std::to_string(op->lowest_degree()) +
                                " differs from modulus degree " + std::to_string(l));
    unsigned n = p.is_zero() ? 0 : p.total_degree();
    if (!transversality_check(op->conj(), q, n))
        throw PreconditionError("transversality fails at degree " + std::to_string(n) +
                                ": the kernel meets the ideal");
    return detail::split_general(p, q, *op);
}

/// x_1^2 + ... + x_d^2 in the given ring.
inline Polynomial sum_of_squares(const RingPtr& ring) {
    Polynomial s(ring);
    for (std::size_t j = 0; j < ring->dimension(); ++j) {
        auto x = Polynomial::variable(ring, j);
        s += x * x;
    }
    return s;
}

/// Unique harmonic interpolant of p on a quadric with leading form x_1^2 + ... + x_d^2.
inline FischerSplit harmonic_interpolate(const Polynomial& p, const Polynomial& quadric) {
    p.check_ring(quadric);
    if (quadric.is_zero() || quadric.leading_form() != sum_of_squares(quadric.ring()))
        throw PreconditionError("quadric leading form must be the sum of squares of all variables");
    return pde_interpolate(p, quadric);
}

}  // namespace varinterp
