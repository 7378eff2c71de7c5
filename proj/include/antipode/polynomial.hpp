#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "antipode/tableau.hpp"

namespace antipode {

// Sparse polynomial with int64 coefficients in a fixed number of variables.
// Canonical: no zero coefficients; every exponent vector has length num_vars.
// Coefficient arithmetic is overflow-checked and throws std::overflow_error.
class Polynomial {
public:
    using Terms = std::map<std::vector<int>, std::int64_t>;

    explicit Polynomial(int num_vars);

    static Polynomial constant(int num_vars, std::int64_t c);
    static Polynomial from_monomial(const Monomial& m, std::int64_t coeff = 1);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    std::int64_t coefficient(const std::vector<int>& exponents) const;

    // Evaluation at x_1 = ... = x_N = 1.
    std::int64_t coefficient_sum() const;

    void add_term(const std::vector<int>& exponents, std::int64_t coeff);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator-() const;
    Polynomial scaled(std::int64_t c) const;

    // Exchange the exponents of variables a and b (1-based).
    Polynomial swap_variables(int a, int b) const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    bool operator==(const Polynomial&) const = default;

private:
    int num_vars_;
    Terms terms_;
};

std::string to_string(const Polynomial& p);

// Sign attached to a chain of length k in the expanded antipode sum.
enum class SignConvention {
    alternating,  // (-1)^k
    all_plus,     // (+1)^k; breaks the identity, kept for mutation self-tests
};

// Generating polynomial of SSYT of the shape with entries <= num_vars,
// weighted by content. The empty shape gives the constant 1.
Polynomial skew_schur_poly(const SkewShape& shape, int num_vars);

// Generating polynomial of row-strict plane partitions of the shape.
Polynomial rspp_poly(const SkewShape& shape, int num_vars);

// Sum over strict chains from mu to lambda of sign^k times the product of
// the per-step skew Schur polynomials. The k = 0 term contributes 1 exactly
// when mu = lambda.
Polynomial takeuchi_antipode_poly(const SkewShape& shape, int num_vars,
                                  SignConvention sign = SignConvention::alternating);

// (-1)^(number of cells) times the skew Schur polynomial of the conjugate
// shape.
Polynomial closed_form_antipode_poly(const SkewShape& shape, int num_vars);

// One pass over every tuple of the shape with entries <= num_vars.
struct TupleSweepStats {
    Polynomial signed_sum;   // sum of (-1)^length * weight
    Polynomial fixed_sum;    // sum of weight over fixed tuples, unsigned
    std::uint64_t tuple_count = 0;
    std::uint64_t fixed_count = 0;
};
TupleSweepStats tuple_sweep_stats(const SkewShape& shape, int num_vars);

// Sum over all tuples of (-1)^length times the weight monomial.
Polynomial signed_tuple_sum_poly(const SkewShape& shape, int num_vars);

// (-1)^(number of cells) times the weight sum over fixed tuples.
Polynomial fixed_point_sum_poly(const SkewShape& shape, int num_vars);

}  // namespace antipode
