#include "qkernel/int_polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace qkernel {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(long constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

IntPolynomial IntPolynomial::monomial(long coeff, int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
    c.back() = coeff;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coeff(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : mpz_class(0);
}

int IntPolynomial::valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return 0;
}

IntPolynomial IntPolynomial::strip_low_powers() const {
    const int v = valuation();
    return IntPolynomial(std::vector<mpz_class>(coeffs_.begin() + v, coeffs_.end()));
}

bool IntPolynomial::is_palindromic() const {
    const std::vector<mpz_class>& c = strip_low_powers().coeffs_;
    return std::equal(c.begin(), c.end(), c.rbegin());
}

IntPolynomial IntPolynomial::derivative() const {
    std::vector<mpz_class> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
    IntPolynomial result(1L), base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return *this;
    mpz_class g = content();
    if (leading() < 0) g = -g;
    std::vector<mpz_class> c = coeffs_;
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(c));
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + mpq_class(*it);
    return r;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<mpz_class> c = a.coeffs_;
    for (auto& x : c) x = -x;
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(char var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        const mpz_class mag = neg ? mpz_class(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (mag != 1 || k == 0) s += mag.get_str();
        if (k > 0) {
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<mpz_class> r = a.coeffs();
    std::vector<mpz_class> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const mpz_class& lb = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        mpz_class& top = r[static_cast<std::size_t>(k + b.degree())];
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw std::domain_error("inexact polynomial division");
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (int j = 0; j <= b.degree(); ++j) r[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[j];
        q[static_cast<std::size_t>(k)] = c;
    }
    for (const auto& x : r)
        if (x != 0) throw std::domain_error("inexact polynomial division");
    return IntPolynomial(std::move(q));
}

namespace {

// Remainder of m * a by b, where m = |lc(b)|^(deg a - deg b + 1) > 0.
IntPolynomial positive_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b, bool signed_multiplier) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    if (a.degree() < b.degree()) return a;
    std::vector<mpz_class> r = a.coeffs();
    const mpz_class lb = signed_multiplier ? b.leading() : mpz_class(abs(b.leading()));
    const mpz_class sign_fix = b.leading() < 0 && !signed_multiplier ? -1 : 1;
    const int db = b.degree();
    for (int k = static_cast<int>(r.size()) - 1; k >= db; --k) {
        const mpz_class top = r[static_cast<std::size_t>(k)] * sign_fix;
        for (auto& x : r) x *= lb;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= top * b.coeffs()[j];
        r.pop_back();
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial divide_by_positive_content(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    const mpz_class g = p.content();
    std::vector<mpz_class> c = p.coeffs();
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(c));
}

int sign_changes(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    return positive_pseudo_remainder(a, b, true);
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial x = a.primitive_part(), y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPolynomial r = pseudo_remainder(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x.primitive_part();
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
    std::vector<std::pair<IntPolynomial, int>> out;
    if (p.degree() < 1) return out;
    const IntPolynomial pp = p.primitive_part();
    const IntPolynomial dp = pp.derivative();
    const IntPolynomial g = gcd(pp, dp);
    IntPolynomial c = divide_exact(pp, g);
    IntPolynomial d = divide_exact(dp, g) - c.derivative();
    for (int i = 1; c.degree() > 0; ++i) {
        if (i > pp.degree()) throw std::logic_error("square-free decomposition did not terminate");
        const IntPolynomial a = d.is_zero() ? c.primitive_part() : gcd(c, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        c = divide_exact(c, a);
        d = divide_exact(d, a) - c.derivative();
    }
    return out;
}

int count_real_roots_above(const IntPolynomial& p, const mpq_class& a) {
    if (p.degree() < 1) return 0;
    if (p.evaluate(a) == 0) throw std::domain_error("count_real_roots_above: endpoint is a root");
    std::vector<IntPolynomial> seq{divide_by_positive_content(p), divide_by_positive_content(p.derivative())};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        const IntPolynomial r = positive_pseudo_remainder(seq[seq.size() - 2], seq.back(), false);
        if (r.is_zero()) break;
        seq.push_back(divide_by_positive_content(-r));
    }
    std::vector<int> at_a, at_inf;
    for (const auto& s : seq) {
        at_a.push_back(sgn(s.evaluate(a)));
        at_inf.push_back(s.is_zero() ? 0 : sgn(s.leading()));
    }
    return sign_changes(at_a) - sign_changes(at_inf);
}

std::pair<IntPolynomial, IntPolynomial> imaginary_axis_parts(const IntPolynomial& p) {
    std::vector<mpz_class> re(p.coeffs().size()), im(p.coeffs().size());
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const mpz_class& c = p.coeffs()[k];
        switch (k % 4) {
            case 0: re[k] = c; break;
            case 1: im[k] = c; break;
            case 2: re[k] = -c; break;
            case 3: im[k] = -c; break;
        }
    }
    return {IntPolynomial(std::move(re)), IntPolynomial(std::move(im))};
}

}  // namespace qkernel
