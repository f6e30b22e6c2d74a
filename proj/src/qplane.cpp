#include "qkernel/qplane.hpp"

#include <stdexcept>

namespace qkernel {

namespace {

BigComplex root_q(const KernelPolys& k, const BigComplex& x, const BigComplex& q, Branch branch) {
    check_q_parameter(q);
    if (k.down != Quadratic{0, 0, 1}) throw std::logic_error("kernel root formula assumes down(x) = x^2");
    const BigComplex up = eval_quadratic(k.up, x);
    const BigComplex s = BigComplex(1) + q * q - q * eval_quadratic(k.q0(), x);
    const BigComplex r = sqrt(s * s - BigComplex(4) * q * q * up);
    const BigComplex num = branch == Branch::plus ? s - r : s + r;
    return x * num / (BigComplex(2) * q * up);
}

bool equals_exactly(const BigComplex& z, long re, long im) {
    return z.real() == BigFloat(re) && z.imag() == BigFloat(im);
}

}  // namespace

const char* branch_name(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

const char* family_name(AsymFamily f) {
    switch (f) {
        case AsymFamily::chi: return "chi";
        case AsymFamily::y_of_chi: return "Ychi";
        case AsymFamily::upsilon: return "upsilon";
        case AsymFamily::x_of_upsilon: return "Xupsilon";
    }
    return "?";
}

BigComplex y_root_q(ModelId model, const BigComplex& x, const BigComplex& q, Branch branch) {
    return root_q(y_kernel_polys(model), x, q, branch);
}

BigComplex x_root_q(ModelId model, const BigComplex& y, const BigComplex& q, Branch branch) {
    return root_q(x_kernel_polys(model), y, q, branch);
}

void require_regular_q(const BigComplex& q) {
    if (equals_exactly(q, 0, 0) || equals_exactly(q, 1, 0) || equals_exactly(q, -1, 0) || equals_exactly(q, 0, 1) ||
        equals_exactly(q, 0, -1))
        throw std::domain_error("singular parameter q");
}

int recurrence_epsilon(ModelId model) { return level_shift(model, false); }

BigComplex closed_form_ybar(ModelId model, long n, const BigComplex& q, Branch branch) {
    if (!is_symmetric(model)) throw std::invalid_argument("closed_form_ybar needs a symmetric model");
    require_regular_q(q);
    const int prec = q.precision();
    const BigComplex one(BigFloat(1L, prec));
    const BigComplex ybar1 = one / y_root_q(model, one, q, branch);
    const BigComplex qn = pow(q, n), q2n = qn * qn, q2 = q * q;
    if (recurrence_epsilon(model) == 0) return ((q2 - q2n) + q * (q2n - one) * ybar1) / (qn * (q2 - one));
    const BigComplex qm1 = q - one;
    return (q * qm1 * (q2n - one) * ybar1 + (q - qn) * (BigComplex(2) * qn * q - qn + q2 - BigComplex(2) * q)) /
           (qn * (q + one) * qm1 * qm1);
}

BigComplex closed_form_asymmetric(ModelId model, AsymFamily family, long n, const BigComplex& q, Branch branch) {
    if (level_shift(model, true) != 1 || level_shift(model, false) != 0)
        throw std::invalid_argument("closed_form_asymmetric applies to models D and E");
    require_regular_q(q);
    const int prec = q.precision();
    const BigComplex one(BigFloat(1L, prec));
    const bool uses_y = family == AsymFamily::chi || family == AsymFamily::y_of_chi;
    const BigComplex base = one / (uses_y ? y_root_q(model, one, q, branch) : x_root_q(model, one, q, branch));
    const BigComplex q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
    const BigComplex p2n = pow(q, 2 * n), p4n = p2n * p2n;
    const BigComplex den = p2n * (q2 - one) * (q2 - one);
    const BigComplex two(2);
    switch (family) {
        case AsymFamily::chi:
            return ((p4n * q3 - p4n * q - q3 + q) * base - two * p4n * q2 + p4n + two * p2n * q2 + q4 - two * q2) / den;
        case AsymFamily::y_of_chi:
            return ((p4n * q4 - p4n * q2 - q2 + one) * base - two * p4n * q3 + p4n * q + p2n * q3 + p2n * q + q3 -
                    two * q) /
                   den;
        case AsymFamily::upsilon:
            return ((p4n * q3 - p4n * q - q3 + q) * base - p4n * q2 - p4n * q + p4n + p2n * q3 + p2n * q + q4 - q3 -
                    q2) /
                   den;
        case AsymFamily::x_of_upsilon:
            return ((p4n * q4 - p4n * q2 - q2 + one) * base - p4n * q3 - p4n * q2 + p4n * q + two * p2n * q2 + q3 -
                    q2 - q) /
                   den;
    }
    throw std::invalid_argument("unknown family");
}

BigComplex t_plane_map(const BigComplex& q) {
    const BigComplex d = BigComplex(1) + q * q;
    if (d.is_zero()) throw std::domain_error("t = q/(1+q^2) is undefined at q = +-i");
    return q / d;
}

}  // namespace qkernel
