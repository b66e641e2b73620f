#ifndef KEMAE_POLYNOMIAL_HPP
#define KEMAE_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kemae/rational.hpp"

namespace kemae {

/// Exponent vector of a monomial; one entry per variable.
/// Ordered by (total degree, then lexicographic).
struct ExponentVector {
    std::vector<int> exps;

    ExponentVector() = default;
    explicit ExponentVector(std::vector<int> e) : exps(std::move(e)) {}
    static ExponentVector zeros(int n) { return ExponentVector(std::vector<int>(n, 0)); }

    int size() const { return static_cast<int>(exps.size()); }
    int operator[](int i) const { return exps[i]; }
    int total_degree() const;
    bool is_zero() const;

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
        return a.exps == b.exps;
    }
    friend bool operator!=(const ExponentVector& a, const ExponentVector& b) {
        return !(a == b);
    }
};

/// grlex: total degree first, ties broken lexicographically.
bool grlex_less(const ExponentVector& a, const ExponentVector& b);

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
/// Componentwise difference, or nullopt if any entry would go negative.
std::optional<ExponentVector> try_subtract(const ExponentVector& a, const ExponentVector& b);

struct GrlexDescending {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        return grlex_less(b, a);
    }
};

/// Sparse multivariate polynomial over Rational. Canonical form: no stored
/// zero coefficients, so equality is structural. Terms iterate in
/// descending (degree, lex) order; begin() is the leading term.
class Polynomial {
  public:
    using TermMap = std::map<ExponentVector, Rational, GrlexDescending>;

    explicit Polynomial(int var_count);
    static Polynomial constant(int var_count, const Rational& c);
    static Polynomial variable(int var_count, int index);
    static Polynomial monomial(int var_count, ExponentVector e, const Rational& c);

    int var_count() const { return var_count_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    int term_count() const { return static_cast<int>(terms_.size()); }

    /// Max total degree; -1 for the zero polynomial.
    int total_degree() const;
    /// Max exponent of one variable; -1 for the zero polynomial.
    int degree_in(int var_index) const;

    Rational coefficient(const ExponentVector& e) const;
    Rational constant_term() const;
    const TermMap& terms() const { return terms_; }

    void add_term(const ExponentVector& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.var_count_ == b.var_count_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  private:
    void check_same_vars(const Polynomial& o) const;

    int var_count_;
    TermMap terms_;
};

/// a^e by binary exponentiation; pow(a, 0) = 1.
Polynomial pow(const Polynomial& a, int e);

/// Exact formal partial derivative with respect to one variable.
Polynomial partial(const Polynomial& a, int var_index);

/// Substitutes x_i -> factors[i] * x_i; all factors must be nonzero.
Polynomial scale_vars(const Polynomial& a, const std::vector<Rational>& factors);

/// Sets every variable except axis_index to zero; the result is univariate.
Polynomial restrict_axis(const Polynomial& a, int axis_index);

/// Embeds a univariate polynomial into var_count variables, its variable
/// landing at axis_index.
Polynomial promote_univariate(const Polynomial& uni, int var_count, int axis_index);

/// Coefficient of x_{var_index}^power, as a polynomial in the remaining
/// variables (the indicated variable is dropped).
Polynomial coefficient_in_var(const Polynomial& a, int var_index, int power);

/// Square grid of polynomials sharing one variable count.
struct PolyMatrix {
    int dim = 0;
    std::vector<Polynomial> entries;

    PolyMatrix(int n, int var_count)
        : dim(n), entries(static_cast<size_t>(n) * n, Polynomial(var_count)) {}

    Polynomial& at(int r, int c) { return entries[static_cast<size_t>(r) * dim + c]; }
    const Polynomial& at(int r, int c) const {
        return entries[static_cast<size_t>(r) * dim + c];
    }
    int var_count() const { return entries.empty() ? 0 : entries.front().var_count(); }
};

/// Exact determinant by cofactor expansion along the first row.
// TODO: switch to Bareiss fraction-free elimination if matrices beyond 3x3 show up.
Polynomial determinant(const PolyMatrix& m);

/// Thrown when exact division leaves a remainder; carries it.
class NotDivisibleError : public std::runtime_error {
  public:
    NotDivisibleError(std::string what, Polynomial remainder)
        : std::runtime_error(std::move(what)), remainder_(std::move(remainder)) {}
    const Polynomial& remainder() const { return remainder_; }

  private:
    Polynomial remainder_;
};

/// Quotient c with a = b*c, by iterated leading-term elimination under
/// (degree, lex). Throws NotDivisibleError if b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);
std::optional<Polynomial> try_exact_divide(const Polynomial& a, const Polynomial& b);

/// "x1", ..., "xn"; a single variable is named "t".
std::vector<std::string> default_var_names(int n);

/// Canonical text form: terms in descending (degree, lex) order,
/// coefficients as "a" or "a/b", e.g. "1/4*x1^2 + x1 + 1".
std::string to_string(const Polynomial& p, const std::vector<std::string>& names = {});

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace kemae

#endif
