#include "antipode/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "antipode/expansion.hpp"
#include "antipode/involution.hpp"
#include "checked_arith.hpp"

namespace antipode {

namespace {

void require_same_width(const Polynomial& a, const Polynomial& b) {
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("polynomials have different numbers of variables");
}

}  // namespace

Polynomial::Polynomial(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 1) throw std::invalid_argument("num_vars must be positive");
}

Polynomial Polynomial::constant(int num_vars, std::int64_t c) {
    Polynomial p(num_vars);
    p.add_term(std::vector<int>(num_vars, 0), c);
    return p;
}

Polynomial Polynomial::from_monomial(const Monomial& m, std::int64_t coeff) {
    Polynomial p(m.num_vars());
    p.add_term(m.exponents, coeff);
    return p;
}

std::int64_t Polynomial::coefficient(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t Polynomial::coefficient_sum() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : terms_) s = detail::checked_add(s, c);
    return s;
}

void Polynomial::add_term(const std::vector<int>& exponents, std::int64_t coeff) {
    if (static_cast<int>(exponents.size()) != num_vars_)
        throw std::invalid_argument("exponent vector has the wrong length");
    for (int e : exponents)
        if (e < 0) throw std::invalid_argument("exponents must be nonnegative");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponents, coeff);
    if (!inserted) {
        it->second = detail::checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_width(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_width(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, detail::checked_mul(c, -1));
    return *this;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(std::int64_t c) const {
    Polynomial out(num_vars_);
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, detail::checked_mul(k, c));
    return out;
}

Polynomial Polynomial::swap_variables(int a, int b) const {
    if (a < 1 || a > num_vars_ || b < 1 || b > num_vars_)
        throw std::invalid_argument("variable index out of range");
    Polynomial out(num_vars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> exps = e;
        std::swap(exps[a - 1], exps[b - 1]);
        out.add_term(exps, c);
    }
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_width(a, b);
    Polynomial out(a.num_vars());
    std::vector<int> exps(a.num_vars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (int i = 0; i < a.num_vars(); ++i) exps[i] = ea[i] + eb[i];
            out.add_term(exps, detail::checked_mul(ca, cb));
        }
    }
    return out;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    // Descending exponent order reads naturally (x1 before x2).
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [exps, coeff] = *it;
        std::string mono;
        for (int i = 0; i < p.num_vars(); ++i) {
            if (exps[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += "x" + std::to_string(i + 1);
            if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
        }
        std::int64_t c = coeff;
        if (s.empty()) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        if (mono.empty())
            s += std::to_string(c);
        else
            s += (c == 1 ? mono : std::to_string(c) + "*" + mono);
    }
    return s;
}

Polynomial skew_schur_poly(const SkewShape& shape, int num_vars) {
    Polynomial out(num_vars);
    std::vector<int> exps(num_vars);
    for_each_ssyt_values(shape, num_vars, [&](const std::vector<int>& vals) {
        std::fill(exps.begin(), exps.end(), 0);
        for (int v : vals) ++exps[v - 1];
        out.add_term(exps, 1);
    });
    return out;
}

Polynomial rspp_poly(const SkewShape& shape, int num_vars) {
    Polynomial out(num_vars);
    std::vector<int> exps(num_vars);
    for_each_rspp_values(shape, num_vars, [&](const std::vector<int>& vals) {
        std::fill(exps.begin(), exps.end(), 0);
        for (int v : vals) ++exps[v - 1];
        out.add_term(exps, 1);
    });
    return out;
}

Polynomial takeuchi_antipode_poly(const SkewShape& shape, int num_vars,
                                  SignConvention sign) {
    Polynomial total(num_vars);
    // Chains revisit the same skew steps over and over; cache their Schur
    // polynomials by (inner, outer) parts.
    std::map<std::pair<std::vector<int>, std::vector<int>>, Polynomial> cache;
    for_each_chain(shape.inner(), shape.outer(), [&](const Chain& ch) {
        Polynomial prod = Polynomial::constant(num_vars, 1);
        for (int i = 1; i <= ch.length() && !prod.is_zero(); ++i) {
            auto key = std::make_pair(ch.step(i - 1).parts(), ch.step(i).parts());
            auto it = cache.find(key);
            if (it == cache.end())
                it = cache
                         .emplace(key, skew_schur_poly(
                                           SkewShape(ch.step(i), ch.step(i - 1)),
                                           num_vars))
                         .first;
            prod = prod * it->second;
        }
        const bool negate =
            sign == SignConvention::alternating && ch.length() % 2 == 1;
        if (negate)
            total -= prod;
        else
            total += prod;
    });
    return total;
}

Polynomial closed_form_antipode_poly(const SkewShape& shape, int num_vars) {
    const std::int64_t sign = shape.cell_count() % 2 == 0 ? 1 : -1;
    return skew_schur_poly(conjugate(shape), num_vars).scaled(sign);
}

TupleSweepStats tuple_sweep_stats(const SkewShape& shape, int num_vars) {
    TupleSweepStats st{Polynomial(num_vars), Polynomial(num_vars), 0, 0};
    for_each_tuple(shape.inner(), shape.outer(), num_vars,
                   [&](const TableauTuple& t) {
                       ++st.tuple_count;
                       const Monomial w = t.weight(num_vars);
                       st.signed_sum.add_term(w.exponents,
                                              t.length() % 2 == 0 ? 1 : -1);
                       if (is_fixed(t)) {
                           ++st.fixed_count;
                           st.fixed_sum.add_term(w.exponents, 1);
                       }
                   });
    return st;
}

Polynomial signed_tuple_sum_poly(const SkewShape& shape, int num_vars) {
    return tuple_sweep_stats(shape, num_vars).signed_sum;
}

Polynomial fixed_point_sum_poly(const SkewShape& shape, int num_vars) {
    const std::int64_t sign = shape.cell_count() % 2 == 0 ? 1 : -1;
    return tuple_sweep_stats(shape, num_vars).fixed_sum.scaled(sign);
}

}  // namespace antipode
