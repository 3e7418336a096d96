#include "borbits/cyclo.hpp"

#include <stdexcept>

namespace borbits {

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) {
        return Cyclo(Rational(1) / c_[0]);
    }
    // Columns of M are z^k * x on the power basis; solve M y = e_0.
    Rational m[4][4];
    for (int k = 0; k < 4; ++k) {
        Cyclo col = Cyclo::zeta();
        Cyclo zk(1);
        for (int t = 0; t < k; ++t) zk *= col;
        zk *= *this;
        for (int r = 0; r < 4; ++r) m[r][k] = zk.coeff(r);
    }
    Rational rhs[4] = {1, 0, 0, 0};
    // Gauss-Jordan with partial pivoting by nonzero entry.
    int rowperm[4] = {0, 1, 2, 3};
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r) {
            if (m[rowperm[r]][col] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) throw std::domain_error("division by zero");
        std::swap(rowperm[col], rowperm[piv]);
        const int p = rowperm[col];
        const Rational inv = Rational(1) / m[p][col];
        for (int c = col; c < 4; ++c) m[p][c] *= inv;
        rhs[p] *= inv;
        for (int r = 0; r < 4; ++r) {
            const int rr = rowperm[r];
            if (rr == p || m[rr][col] == 0) continue;
            const Rational f = m[rr][col];
            for (int c = col; c < 4; ++c) m[rr][c] -= f * m[p][c];
            rhs[rr] -= f * rhs[p];
        }
    }
    return Cyclo(rhs[rowperm[0]], rhs[rowperm[1]], rhs[rowperm[2]], rhs[rowperm[3]]);
}

std::string Cyclo::str() const {
    std::string out = to_string(c_[0]);
    static const char* pows[] = {"", "*z", "*z^2", "*z^3"};
    for (int k = 1; k < 4; ++k) {
        out += " + ";
        out += to_string(c_[static_cast<size_t>(k)]);
        out += pows[k];
    }
    return out;
}

std::optional<Cyclo> sqrt_in_field(const Rational& r) {
    if (r == 0) return Cyclo(0);
    auto rational_sqrt = [](const Rational& v) -> std::optional<Rational> {
        BigInt np, dp;
        if (!is_perfect_square(numerator(v), np)) return std::nullopt;
        if (!is_perfect_square(denominator(v), dp)) return std::nullopt;
        return Rational(np, dp);
    };
    if (r > 0) {
        if (auto s = rational_sqrt(r)) return Cyclo(*s);
        if (auto s = rational_sqrt(r / 2)) return Cyclo(*s) * Cyclo::sqrt2();
    } else {
        if (auto s = rational_sqrt(-r)) return Cyclo(*s) * Cyclo::imaginary_unit();
        if (auto s = rational_sqrt(-r / 2))
            return Cyclo(*s) * Cyclo::imaginary_unit() * Cyclo::sqrt2();
    }
    return std::nullopt;
}

}  // namespace borbits
