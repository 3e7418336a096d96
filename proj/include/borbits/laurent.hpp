#pragma once

#include <map>
#include <string>

#include "borbits/cyclo.hpp"

namespace borbits {

// Laurent polynomial in one parameter t over Q(zeta_8).  Zero coefficients
// are never stored, so the zero polynomial is the empty term map and the
// valuation of a nonzero polynomial is its smallest stored exponent.
class Laurent {
  public:
    Laurent() = default;
    Laurent(int v) { set(0, Cyclo(v)); }  // NOLINT: implicit by design
    Laurent(Cyclo v) { set(0, std::move(v)); }
    Laurent(Rational v) { set(0, Cyclo(std::move(v))); }

    static Laurent t(int exponent = 1) { return monomial(exponent, Cyclo(1)); }
    static Laurent monomial(int exponent, Cyclo coeff) {
        Laurent p;
        p.set(exponent, std::move(coeff));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    bool is_monomial() const { return terms_.size() == 1; }

    const std::map<int, Cyclo>& terms() const { return terms_; }

    Cyclo coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Cyclo(0) : it->second;
    }

    // Smallest exponent; only defined for nonzero polynomials.
    int valuation() const;

    // Coefficient of t^0, defined when there is no pole at t = 0.
    Cyclo limit_at_zero() const;

    Cyclo eval(const Cyclo& point) const;

    friend bool operator==(const Laurent& p, const Laurent& q) {
        return p.terms_ == q.terms_;
    }
    friend bool operator!=(const Laurent& p, const Laurent& q) {
        return p.terms_ != q.terms_;
    }

    Laurent operator-() const {
        Laurent out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend Laurent operator+(Laurent p, const Laurent& q) { return p += q; }
    friend Laurent operator-(Laurent p, const Laurent& q) { return p -= q; }
    friend Laurent operator*(const Laurent& p, const Laurent& q) {
        Laurent out;
        for (const auto& [e1, c1] : p.terms_)
            for (const auto& [e2, c2] : q.terms_) out.add(e1 + e2, c1 * c2);
        return out;
    }

    // Units of the Laurent ring are the nonzero monomials.
    bool is_unit() const { return terms_.size() == 1 && !terms_.begin()->second.is_zero(); }
    Laurent inverse() const;
    friend Laurent operator/(const Laurent& p, const Laurent& q) { return p * q.inverse(); }

    std::string str() const;

  private:
    void set(int e, Cyclo c) {
        if (!c.is_zero()) terms_[e] = std::move(c);
    }
    void add(int e, const Cyclo& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<int, Cyclo> terms_;
};

inline bool is_zero(const Laurent& p) { return p.is_zero(); }
inline bool is_invertible(const Laurent& p) { return p.is_unit(); }
inline Laurent invert(const Laurent& p) { return p.inverse(); }

}  // namespace borbits
