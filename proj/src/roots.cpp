#include "qkernel/roots.hpp"

#include "qkernel/qplane.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace qkernel {

namespace {

using cd = std::complex<double>;

struct DoublePoly {
    std::vector<double> c, rev;
};

// p'(z)/p(z), switching to the reversed polynomial outside the unit disc.
cd log_derivative(const DoublePoly& p, cd z) {
    const int d = static_cast<int>(p.c.size()) - 1;
    const bool outside = std::abs(z) > 1.0;
    const std::vector<double>& c = outside ? p.rev : p.c;
    const cd x = outside ? 1.0 / z : z;
    cd v = c.back(), dv = 0.0;
    for (int k = d - 1; k >= 0; --k) {
        dv = dv * x + v;
        v = v * x + c[static_cast<std::size_t>(k)];
    }
    if (!outside) return dv / v;
    return static_cast<double>(d) * x - x * x * dv / v;
}

std::vector<cd> aberth_double(const IntPolynomial& f) {
    const int d = f.degree();
    DoublePoly p;
    for (const auto& a : f.coeffs()) p.c.push_back(a.get_d());
    p.rev.assign(p.c.rbegin(), p.c.rend());
    const double radius = std::pow(std::abs(p.c.front() / p.c.back()), 1.0 / d);
    std::vector<cd> z(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k)
        z[static_cast<std::size_t>(k)] = std::polar(radius, 2 * std::numbers::pi * k / d + 0.4);
    for (int iter = 0; iter < 2000; ++iter) {
        bool converged = true;
        for (int k = 0; k < d; ++k) {
            cd& zk = z[static_cast<std::size_t>(k)];
            const cd ld = log_derivative(p, zk);
            if (!std::isfinite(ld.real()) || !std::isfinite(ld.imag())) continue;
            const cd newton = 1.0 / ld;
            cd s = 0.0;
            for (int j = 0; j < d; ++j)
                if (j != k) s += 1.0 / (zk - z[static_cast<std::size_t>(j)]);
            const cd w = newton / (1.0 - newton * s);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
            zk -= w;
            if (std::abs(w) > 1e-14 * std::max(1.0, std::abs(zk))) converged = false;
        }
        if (converged) break;
    }
    return z;
}

void eval_with_derivative(const IntPolynomial& f, const BigComplex& z, BigComplex& v, BigComplex& dv) {
    const auto& c = f.coeffs();
    v = BigComplex(c.back());
    dv = BigComplex(0L);
    for (int k = f.degree() - 1; k >= 0; --k) {
        dv = dv * z + v;
        v = v * z + BigComplex(c[static_cast<std::size_t>(k)]);
    }
}

bool aberth_polish(const IntPolynomial& f, std::vector<BigComplex>& z, int prec) {
    const std::size_t d = z.size();
    const BigFloat tol = BigFloat::pow2(-prec + 16, prec);
    BigComplex v, dv;
    for (int iter = 0; iter < 100; ++iter) {
        bool converged = true;
        for (std::size_t k = 0; k < d; ++k) {
            eval_with_derivative(f, z[k], v, dv);
            if (v.is_zero()) continue;
            const BigComplex newton = v / dv;
            BigComplex s(0L);
            for (std::size_t j = 0; j < d; ++j)
                if (j != k) s += BigComplex(1L) / (z[k] - z[j]);
            const BigComplex w = newton / (BigComplex(1L) - newton * s);
            z[k] -= w;
            if (abs(w) > tol * max(BigFloat(1L), abs(z[k]))) converged = false;
        }
        if (converged) return true;
    }
    return false;
}

// Makes the root list exactly closed under conjugation.
void symmetrise(std::vector<BigComplex>& z) {
    std::vector<bool> done(z.size(), false);
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (done[k]) continue;
        std::size_t best = k;
        double best_d = INFINITY;
        for (std::size_t j = 0; j < z.size(); ++j) {
            if (done[j]) continue;
            const double dist = abs(z[j] - conj(z[k])).to_double();
            if (dist < best_d) best_d = dist, best = j;
        }
        if (best == k) {
            z[k].imag() = BigFloat(0L, z[k].precision());
        } else {
            BigComplex avg = (z[k] + conj(z[best])) / BigComplex(2L);
            if (avg.imag().sign() < 0) avg = conj(avg);
            z[k] = avg;
            z[best] = conj(avg);
            done[best] = true;
        }
        done[k] = true;
    }
}

void solve_squarefree(const IntPolynomial& factor, int multiplicity, int prec, std::vector<Root>& out) {
    IntPolynomial f = factor;
    auto push = [&](BigComplex z) { out.push_back({std::move(z), multiplicity, BigFloat(0L, prec)}); };
    const IntPolynomial q = IntPolynomial::monomial(1, 1);
    if (f.coeff(0) == 0) {
        push(BigComplex(BigFloat(0L, prec)));
        f = divide_exact(f, q);
    }
    for (long s : {1L, -1L}) {
        if (f.degree() >= 1 && f.evaluate(mpq_class(s)) == 0) {
            push(BigComplex(BigFloat(s, prec)));
            f = divide_exact(f, q - IntPolynomial(s));
        }
    }
    if (f.degree() < 1) return;
    if (f.degree() == 1) {
        push(BigComplex(BigFloat(mpq_class(-f.coeff(0), f.coeff(1)), prec)));
        return;
    }
    std::vector<BigComplex> z;
    for (const cd& w : aberth_double(f)) z.emplace_back(BigFloat(w.real()).with_precision(prec), BigFloat(w.imag()).with_precision(prec));
    if (!aberth_polish(f, z, prec)) throw std::runtime_error("Aberth iteration did not converge");
    symmetrise(z);
    for (auto& w : z) push(std::move(w));
}

RootSet find_roots_at(const IntPolynomial& p, int prec) {
    PrecisionGuard guard(prec);
    RootSet rs;
    rs.precision_bits = prec;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) solve_squarefree(factor, mult, prec, rs.roots);
    const BigFloat bound = BigFloat::pow2(-prec / 2, prec);
    for (Root& r : rs.roots) {
        r.residual = abs(p.evaluate(r.z));
        if (!(r.residual < bound)) throw std::runtime_error("root residual above certification bound");
    }
    std::sort(rs.roots.begin(), rs.roots.end(), [](const Root& a, const Root& b) {
        const double ar = a.z.real().to_double(), br = b.z.real().to_double();
        if (ar != br) return ar < br;
        return a.z.imag().to_double() < b.z.imag().to_double();
    });
    return rs;
}

}  // namespace

const char* plane_name(Plane p) { return p == Plane::q ? "q" : "t"; }

std::vector<BigComplex> RootSet::expanded() const {
    std::vector<BigComplex> out;
    for (const Root& r : roots)
        for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.z);
    return out;
}

int RootSet::total_multiplicity() const {
    int m = 0;
    for (const Root& r : roots) m += r.multiplicity;
    return m;
}

RootSet find_roots(const IntPolynomial& p, int precision_bits) {
    if (p.degree() < 1) throw std::invalid_argument("find_roots needs a polynomial of degree at least 1");
    int prec = precision_bits;
    for (int attempt = 0; attempt < 3; ++attempt, prec *= 2) {
        try {
            return find_roots_at(p, prec);
        } catch (const std::runtime_error&) {
        }
    }
    throw std::runtime_error("root finding failed up to " + std::to_string(prec / 2) +
                             " bits; retry with a larger precision");
}

BigComplex refine_root(const IntPolynomial& p, const BigComplex& z0, int precision_bits) {
    PrecisionGuard guard(precision_bits);
    BigComplex z(z0.real().with_precision(precision_bits), z0.imag().with_precision(precision_bits));
    BigComplex v, dv;
    const BigFloat tol = BigFloat::pow2(-precision_bits + 8, precision_bits);
    for (int iter = 0; iter < 64; ++iter) {
        eval_with_derivative(p, z, v, dv);
        if (v.is_zero() || dv.is_zero()) break;
        const BigComplex step = v / dv;
        z -= step;
        if (abs(step) <= tol * max(BigFloat(1L), abs(z))) break;
    }
    return z;
}

RootSet to_t_plane(const RootSet& q_roots) {
    RootSet out = q_roots;
    out.plane = Plane::t;
    out.roots.clear();
    for (const Root& r : q_roots.roots) {
        const BigComplex d = BigComplex(BigFloat(1L, r.z.precision())) + r.z * r.z;
        if (d.is_zero()) continue;
        out.roots.push_back({t_plane_map(r.z), r.multiplicity, r.residual});
    }
    return out;
}

}  // namespace qkernel
