#include "kemae/polynomial.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace kemae {

int ExponentVector::total_degree() const {
    return std::accumulate(exps.begin(), exps.end(), 0);
}

bool ExponentVector::is_zero() const {
    for (int e : exps)
        if (e != 0) return false;
    return true;
}

bool grlex_less(const ExponentVector& a, const ExponentVector& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.exps < b.exps;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r = a;
    for (size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
    return r;
}

std::optional<ExponentVector> try_subtract(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r = a;
    for (size_t i = 0; i < r.exps.size(); ++i) {
        r.exps[i] -= b.exps[i];
        if (r.exps[i] < 0) return std::nullopt;
    }
    return r;
}

Polynomial::Polynomial(int var_count) : var_count_(var_count) {
    if (var_count < 1) throw std::invalid_argument("Polynomial: var_count must be positive");
}

Polynomial Polynomial::constant(int var_count, const Rational& c) {
    Polynomial p(var_count);
    p.add_term(ExponentVector::zeros(var_count), c);
    return p;
}

Polynomial Polynomial::variable(int var_count, int index) {
    if (index < 0 || index >= var_count)
        throw std::out_of_range("Polynomial::variable: index out of range");
    std::vector<int> e(var_count, 0);
    e[index] = 1;
    Polynomial p(var_count);
    p.add_term(ExponentVector(std::move(e)), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(int var_count, ExponentVector e, const Rational& c) {
    if (e.size() != var_count)
        throw std::invalid_argument("Polynomial::monomial: exponent length mismatch");
    for (int x : e.exps)
        if (x < 0) throw std::invalid_argument("Polynomial::monomial: negative exponent");
    Polynomial p(var_count);
    p.add_term(e, c);
    return p;
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_zero() &&
           terms_.begin()->second.is_one();
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.total_degree();
}

int Polynomial::degree_in(int var_index) const {
    if (var_index < 0 || var_index >= var_count_)
        throw std::out_of_range("Polynomial::degree_in: index out of range");
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var_index]);
    return d;
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
    return coefficient(ExponentVector::zeros(var_count_));
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_same_vars(const Polynomial& o) const {
    if (var_count_ != o.var_count_)
        throw std::invalid_argument("Polynomial: variable-count mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(var_count_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

namespace {

// Integer-normalized view d*p: clearing denominators up front lets products
// accumulate with plain mpz_addmul; one rational canonicalization per output
// term instead of one gcd per term pair.
struct ZForm {
    mpz_class den;  // common denominator
    std::vector<std::pair<const ExponentVector*, mpz_class>> terms;
};

ZForm z_form(const Polynomial& p) {
    ZForm z;
    z.den = 1;
    for (const auto& [e, c] : p.terms()) z.den = lcm(z.den, c.den());
    z.terms.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms())
        z.terms.emplace_back(&e, c.num() * (z.den / c.den()));
    return z;
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_vars(b);
    Polynomial r(a.var_count_);
    if (a.is_zero() || b.is_zero()) return r;
    ZForm za = z_form(a), zb = z_form(b);
    mpz_class den = za.den * zb.den;

    // Dense accumulation over the product's exponent box when it is small
    // (covers everything this system produces); sparse map fallback otherwise.
    const long kDenseCap = 1L << 21;
    int v = a.var_count_;
    std::vector<long> stride(v);
    std::vector<int> bound(v);
    long size = 1;
    bool dense = true;
    for (int i = 0; i < v; ++i) {
        bound[i] = a.degree_in(i) + b.degree_in(i) + 1;
        stride[i] = size;
        if (size > kDenseCap / bound[i]) {
            dense = false;
            break;
        }
        size *= bound[i];
    }

    if (dense) {
        std::vector<mpz_class> acc(static_cast<size_t>(size));
        std::vector<long> offs;
        offs.reserve(zb.terms.size());
        for (const auto& [eb, cb] : zb.terms) {
            long o = 0;
            for (int i = 0; i < v; ++i) o += (*eb)[i] * stride[i];
            offs.push_back(o);
        }
        for (const auto& [ea, ca] : za.terms) {
            long base = 0;
            for (int i = 0; i < v; ++i) base += (*ea)[i] * stride[i];
            for (size_t j = 0; j < offs.size(); ++j)
                mpz_addmul(acc[static_cast<size_t>(base + offs[j])].get_mpz_t(),
                           ca.get_mpz_t(), zb.terms[j].second.get_mpz_t());
        }
        for (long idx = 0; idx < size; ++idx) {
            if (sgn(acc[static_cast<size_t>(idx)]) == 0) continue;
            std::vector<int> e(static_cast<size_t>(v));
            for (int i = 0; i < v; ++i) e[static_cast<size_t>(i)] =
                static_cast<int>((idx / stride[i]) % bound[i]);
            r.add_term(ExponentVector(std::move(e)), Rational(acc[static_cast<size_t>(idx)], den));
        }
        return r;
    }

    std::map<ExponentVector, mpz_class, GrlexDescending> acc;
    ExponentVector key;
    for (const auto& [ea, ca] : za.terms)
        for (const auto& [eb, cb] : zb.terms) {
            key = *ea;
            for (size_t i = 0; i < key.exps.size(); ++i) key.exps[i] += eb->exps[i];
            mpz_class& slot = acc[key];
            mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
    for (auto& [e, z] : acc)
        if (sgn(z) != 0) r.add_term(e, Rational(z, den));
    return r;
}

Polynomial pow(const Polynomial& a, int e) {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    Polynomial acc = Polynomial::constant(a.var_count(), Rational(1));
    // Repeated multiplication keeps one operand small, which beats binary
    // squaring of ever-denser intermediates for the powers taken here.
    for (int i = 0; i < e; ++i) acc = acc * a;
    return acc;
}

Polynomial partial(const Polynomial& a, int var_index) {
    if (var_index < 0 || var_index >= a.var_count())
        throw std::out_of_range("partial: index out of range");
    Polynomial r(a.var_count());
    for (const auto& [e, c] : a.terms()) {
        int k = e[var_index];
        if (k == 0) continue;
        ExponentVector d = e;
        d.exps[var_index] = k - 1;
        r.add_term(d, c * Rational(k));
    }
    return r;
}

Polynomial scale_vars(const Polynomial& a, const std::vector<Rational>& factors) {
    if (static_cast<int>(factors.size()) != a.var_count())
        throw std::invalid_argument("scale_vars: one factor per variable required");
    for (const Rational& f : factors)
        if (f.is_zero()) throw std::invalid_argument("scale_vars: zero factor");
    Polynomial r(a.var_count());
    for (const auto& [e, c] : a.terms()) {
        Rational scaled = c;
        for (int i = 0; i < e.size(); ++i)
            if (e[i] != 0) scaled *= pow(factors[i], e[i]);
        r.add_term(e, scaled);
    }
    return r;
}

Polynomial restrict_axis(const Polynomial& a, int axis_index) {
    if (axis_index < 0 || axis_index >= a.var_count())
        throw std::out_of_range("restrict_axis: index out of range");
    Polynomial r(1);
    for (const auto& [e, c] : a.terms()) {
        bool pure = true;
        for (int i = 0; i < e.size(); ++i)
            if (i != axis_index && e[i] != 0) {
                pure = false;
                break;
            }
        if (pure) r.add_term(ExponentVector({e[axis_index]}), c);
    }
    return r;
}

Polynomial promote_univariate(const Polynomial& uni, int var_count, int axis_index) {
    if (uni.var_count() != 1)
        throw std::invalid_argument("promote_univariate: input must be univariate");
    if (axis_index < 0 || axis_index >= var_count)
        throw std::out_of_range("promote_univariate: index out of range");
    Polynomial r(var_count);
    for (const auto& [e, c] : uni.terms()) {
        std::vector<int> x(var_count, 0);
        x[axis_index] = e[0];
        r.add_term(ExponentVector(std::move(x)), c);
    }
    return r;
}

Polynomial coefficient_in_var(const Polynomial& a, int var_index, int power) {
    if (var_index < 0 || var_index >= a.var_count())
        throw std::out_of_range("coefficient_in_var: index out of range");
    if (a.var_count() < 2)
        throw std::invalid_argument("coefficient_in_var: need at least two variables");
    Polynomial r(a.var_count() - 1);
    for (const auto& [e, c] : a.terms()) {
        if (e[var_index] != power) continue;
        std::vector<int> x;
        x.reserve(e.size() - 1);
        for (int i = 0; i < e.size(); ++i)
            if (i != var_index) x.push_back(e[i]);
        r.add_term(ExponentVector(std::move(x)), c);
    }
    return r;
}

Polynomial determinant(const PolyMatrix& m) {
    if (m.dim < 1) throw std::invalid_argument("determinant: empty matrix");
    int vc = m.var_count();
    if (m.dim == 1) return m.at(0, 0);
    if (m.dim == 2)
        return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    Polynomial det(vc);
    for (int c = 0; c < m.dim; ++c) {
        if (m.at(0, c).is_zero()) continue;
        PolyMatrix minor(m.dim - 1, vc);
        for (int r = 1; r < m.dim; ++r) {
            int cc = 0;
            for (int k = 0; k < m.dim; ++k) {
                if (k == c) continue;
                minor.at(r - 1, cc++) = m.at(r, k);
            }
        }
        Polynomial term = m.at(0, c) * determinant(minor);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("exact_divide: division by zero polynomial");
    if (a.var_count() != b.var_count())
        throw std::invalid_argument("exact_divide: variable-count mismatch");
    Polynomial q(a.var_count());
    Polynomial r = a;
    const auto& lead_b = *b.terms().begin();
    while (!r.is_zero()) {
        const auto& lead_r = *r.terms().begin();
        auto e = try_subtract(lead_r.first, lead_b.first);
        if (!e) throw NotDivisibleError("exact_divide: not divisible", r);
        Polynomial t = Polynomial::monomial(a.var_count(), *e, lead_r.second / lead_b.second);
        q += t;
        r -= t * b;
    }
    return q;
}

std::optional<Polynomial> try_exact_divide(const Polynomial& a, const Polynomial& b) {
    try {
        return exact_divide(a, b);
    } catch (const NotDivisibleError&) {
        return std::nullopt;
    }
}

std::vector<std::string> default_var_names(int n) {
    if (n == 1) return {"t"};
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::vector<std::string> vars = names.empty() ? default_var_names(p.var_count()) : names;
    if (static_cast<int>(vars.size()) != p.var_count())
        throw std::invalid_argument("to_string: name list length mismatch");
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool printed_coef = false;
        if (e.is_zero() || !mag.is_one()) {
            os << mag.to_string();
            printed_coef = true;
        }
        for (int i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed_coef) os << "*";
            printed_coef = true;
            os << vars[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << to_string(p);
}

}  // namespace kemae
