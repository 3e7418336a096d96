#include "borbits/laurent.hpp"

#include <stdexcept>

namespace borbits {

int Laurent::valuation() const {
    if (terms_.empty()) throw std::domain_error("valuation of zero polynomial");
    return terms_.begin()->first;
}

Cyclo Laurent::limit_at_zero() const {
    if (!terms_.empty() && terms_.begin()->first < 0)
        throw std::domain_error("pole at t = 0");
    return coeff(0);
}

Cyclo Laurent::eval(const Cyclo& point) const {
    Cyclo out(0);
    Cyclo inv;
    bool have_inv = false;
    for (const auto& [e, c] : terms_) {
        Cyclo p(1);
        if (e >= 0) {
            for (int k = 0; k < e; ++k) p *= point;
        } else {
            if (!have_inv) {
                inv = point.inverse();
                have_inv = true;
            }
            for (int k = 0; k < -e; ++k) p *= inv;
        }
        out += c * p;
    }
    return out;
}

Laurent Laurent::inverse() const {
    if (!is_unit()) throw std::domain_error("not a unit in the Laurent ring");
    const auto& [e, c] = *terms_.begin();
    return monomial(-e, c.inverse());
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*t^" + std::to_string(e);
    }
    return out;
}

}  // namespace borbits
