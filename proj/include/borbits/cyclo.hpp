#pragma once

#include <array>
#include <optional>
#include <string>

#include "borbits/rational.hpp"

namespace borbits {

// Element of Q(zeta_8), stored on the power basis 1, z, z^2, z^3 with
// z^4 = -1.  The field contains sqrt(2) = z - z^3 and the imaginary unit
// I = z^2, which is every scalar the library ever needs.  Coefficients are
// rationals in lowest terms, so equality of elements is equality of tuples.
class Cyclo {
  public:
    Cyclo() = default;
    Cyclo(int v) { c_[0] = v; }  // NOLINT: implicit by design
    Cyclo(Rational v) { c_[0] = std::move(v); }
    Cyclo(Rational a, Rational b, Rational c, Rational d)
        : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    static Cyclo zeta() { return Cyclo(0, 1, 0, 0); }
    static Cyclo imaginary_unit() { return Cyclo(0, 0, 1, 0); }
    static Cyclo sqrt2() { return Cyclo(0, 1, 0, -1); }

    const Rational& coeff(int k) const { return c_[static_cast<size_t>(k)]; }

    bool is_zero() const {
        return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
    }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    const Rational& rational_value() const { return c_[0]; }

    friend bool operator==(const Cyclo& x, const Cyclo& y) { return x.c_ == y.c_; }
    friend bool operator!=(const Cyclo& x, const Cyclo& y) { return x.c_ != y.c_; }

    Cyclo operator-() const {
        return Cyclo(-c_[0], -c_[1], -c_[2], -c_[3]);
    }

    Cyclo& operator+=(const Cyclo& o) {
        for (int k = 0; k < 4; ++k) c_[static_cast<size_t>(k)] += o.c_[static_cast<size_t>(k)];
        return *this;
    }
    Cyclo& operator-=(const Cyclo& o) {
        for (int k = 0; k < 4; ++k) c_[static_cast<size_t>(k)] -= o.c_[static_cast<size_t>(k)];
        return *this;
    }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
    Cyclo& operator/=(const Cyclo& o) { return *this = *this * o.inverse(); }

    friend Cyclo operator+(Cyclo x, const Cyclo& y) { return x += y; }
    friend Cyclo operator-(Cyclo x, const Cyclo& y) { return x -= y; }

    friend Cyclo operator*(const Cyclo& x, const Cyclo& y) {
        // z^(a+b) with z^4 = -1.
        std::array<Rational, 4> out{};
        for (int a = 0; a < 4; ++a) {
            if (x.c_[static_cast<size_t>(a)] == 0) continue;
            for (int b = 0; b < 4; ++b) {
                if (y.c_[static_cast<size_t>(b)] == 0) continue;
                Rational term = x.c_[static_cast<size_t>(a)] * y.c_[static_cast<size_t>(b)];
                int e = a + b;
                if (e >= 4) {
                    e -= 4;
                    term = -term;
                }
                out[static_cast<size_t>(e)] += term;
            }
        }
        return Cyclo(out[0], out[1], out[2], out[3]);
    }
    friend Cyclo operator/(Cyclo x, const Cyclo& y) { return x /= y; }

    // Multiplicative inverse, by solving the 4x4 rational system x*y = 1.
    Cyclo inverse() const;

    std::string str() const;

  private:
    std::array<Rational, 4> c_{};
};

inline bool is_zero(const Cyclo& x) { return x.is_zero(); }
inline bool is_invertible(const Cyclo& x) { return !x.is_zero(); }
inline Cyclo invert(const Cyclo& x) { return x.inverse(); }

// Square root of a rational inside Q(zeta_8), when one exists.  Handles
// r = s^2, -s^2, 2 s^2 and -2 s^2 for rational s, which covers every
// rescaling weight the orbit samplers use.
std::optional<Cyclo> sqrt_in_field(const Rational& r);

}  // namespace borbits
