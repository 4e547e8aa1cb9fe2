#ifndef ODO_DIFFOP_HPP
#define ODO_DIFFOP_HPP

// Linear ordinary differential operators over a coefficient domain D with a
// derivation: composition by the Leibniz rule, Euclidean right division,
// gcrd, commutators. D must provide ring operators, D(int), is_zero(d) and
// derive(d); right division additionally needs coeff_div (exact or field).

#include <cassert>
#include <utility>
#include <vector>

#include "odo/error.hpp"
#include "odo/field.hpp"

namespace odo {

template <class A>
A coeff_div(const A& a, const A& b) { return a / b; }

template <class C>
MultiPoly<C> coeff_div(const MultiPoly<C>& a, const MultiPoly<C>& b) {
    try {
        return a.exact_div(b);
    } catch (const Error& e) {
        if (e.code() == Err::InexactDivision)
            fail(Err::NoninvertibleLeadingCoeff, "leading coefficient does not divide exactly");
        throw;
    }
}

template <class D>
class DiffOp {
public:
    DiffOp() = default;

    static DiffOp zero() { return DiffOp(); }
    static DiffOp from_coeffs(std::vector<D> cs) {
        DiffOp p;
        p.c_ = std::move(cs);
        p.trim();
        return p;
    }
    static DiffOp d_power(int k, D c = D(1)) {
        DiffOp p;
        if (!is_zero(c)) {
            p.c_.assign(static_cast<std::size_t>(k) + 1, D(0));
            p.c_.back() = std::move(c);
        }
        return p;
    }
    static DiffOp constant(D c) { return d_power(0, std::move(c)); }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_op() const { return c_.empty(); }
    const std::vector<D>& coeffs() const { return c_; }
    D coeff_at(int i) const {
        if (i < 0 || i > order()) return D(0);
        return c_[static_cast<std::size_t>(i)];
    }
    const D& lead() const { return c_.back(); }

    DiffOp operator-() const {
        DiffOp r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    DiffOp operator+(const DiffOp& o) const {
        DiffOp r;
        r.c_.resize(std::max(c_.size(), o.c_.size()), D(0));
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            if (i < c_.size()) r.c_[i] = r.c_[i] + c_[i];
            if (i < o.c_.size()) r.c_[i] = r.c_[i] + o.c_[i];
        }
        r.trim();
        return r;
    }
    DiffOp operator-(const DiffOp& o) const { return *this + (-o); }
    DiffOp& operator+=(const DiffOp& o) { return *this = *this + o; }
    DiffOp& operator-=(const DiffOp& o) { return *this = *this - o; }

    DiffOp scaled(const D& d) const {
        DiffOp r;
        if (is_zero(d)) return r;
        r.c_ = c_;
        for (auto& c : r.c_) c = c * d;
        r.trim();
        return r;
    }

    // composition: (a d^i)(b d^j) = sum_t C(i,t) a b^(t) d^(i+j-t)
    DiffOp operator*(const DiffOp& o) const {
        DiffOp r;
        if (is_zero_op() || o.is_zero_op()) return r;
        int n = order(), m = o.order();
        r.c_.assign(static_cast<std::size_t>(n + m) + 1, D(0));
        // derivatives of o's coefficients up to order n
        std::vector<std::vector<D>> db(static_cast<std::size_t>(n) + 1);
        db[0] = o.c_;
        for (int t = 1; t <= n; ++t) {
            db[static_cast<std::size_t>(t)].reserve(o.c_.size());
            for (auto& c : db[static_cast<std::size_t>(t - 1)])
                db[static_cast<std::size_t>(t)].push_back(derive(c));
        }
        std::vector<std::vector<long long>> binom(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
            binom[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
            for (int t = 1; t < i; ++t)
                binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] =
                    binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(t - 1)] +
                    binom[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(t)];
        }
        for (int i = 0; i <= n; ++i) {
            const D& a = c_[static_cast<std::size_t>(i)];
            if (is_zero(a)) continue;
            for (int t = 0; t <= i; ++t) {
                long long bc = binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
                for (int j = 0; j <= m; ++j) {
                    const D& bt = db[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
                    if (is_zero(bt)) continue;
                    D term = a * bt;
                    if (bc != 1) term = term * D(static_cast<int>(bc));
                    std::size_t k = static_cast<std::size_t>(i + j - t);
                    r.c_[k] = r.c_[k] + term;
                }
            }
        }
        r.trim();
        return r;
    }
    DiffOp& operator*=(const DiffOp& o) { return *this = *this * o; }

    DiffOp pow(unsigned e) const {
        DiffOp r = constant(D(1));
        DiffOp b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            if (e >>= 1u) b = b * b;
        }
        return r;
    }

    bool operator==(const DiffOp& o) const { return (*this - o).is_zero_op(); }
    bool operator!=(const DiffOp& o) const { return !(*this == o); }

private:
    std::vector<D> c_;

    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
};

template <class D>
DiffOp<D> op_mul(const DiffOp<D>& p, const DiffOp<D>& q) { return p * q; }

template <class D>
DiffOp<D> commutator(const DiffOp<D>& p, const DiffOp<D>& q) { return p * q - q * p; }

// M = q*L + r with ord(r) < ord(L)
template <class D>
std::pair<DiffOp<D>, DiffOp<D>> right_divide(const DiffOp<D>& m, const DiffOp<D>& l) {
    if (l.is_zero_op()) fail(Err::DivisionByZeroOperator, "right division by the zero operator");
    DiffOp<D> q, r = m;
    while (!r.is_zero_op() && r.order() >= l.order()) {
        int k = r.order() - l.order();
        D t = coeff_div(r.lead(), l.lead());
        DiffOp<D> step = DiffOp<D>::d_power(k, std::move(t));
        q += step;
        r -= step * l;
        if (!r.is_zero_op() && r.order() >= l.order() + k) fail(Err::Internal, "right division failed to reduce order");
    }
#ifndef NDEBUG
    assert((q * l + r - m).is_zero_op());
#endif
    return {q, r};
}

template <class D>
DiffOp<D> monic(const DiffOp<D>& p) {
    if (p.is_zero_op()) return p;
    return p.scaled(coeff_div(D(1), p.lead()));
}

template <class D>
bool is_normal_form(const DiffOp<D>& p) {
    if (p.is_zero_op() || !is_zero(p.lead() - D(1))) return false;
    return p.order() < 1 || is_zero(p.coeff_at(p.order() - 1));
}

// Euclidean chain; monic normalization applied at the end only.
template <class D>
DiffOp<D> gcrd(const DiffOp<D>& p, const DiffOp<D>& q) {
    if (p.is_zero_op() && q.is_zero_op())
        fail(Err::DivisionByZeroOperator, "gcrd of two zero operators");
    DiffOp<D> a = p, b = q;
    if (a.order() < b.order()) std::swap(a, b);
    while (!b.is_zero_op()) {
        auto [quot, rem] = right_divide(a, b);
        (void)quot;
        a = std::move(b);
        b = std::move(rem);
    }
    return monic(a);
}

template <class D>
int order(const DiffOp<D>& p) { return p.order(); }

} // namespace odo

#endif
