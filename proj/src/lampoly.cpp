#include "capform/lampoly.hpp"
#include "capform/check.hpp"

#include <sstream>

namespace capform {

LamPoly LamPoly::lam(long degree, const Rat& coeff) {
    CF_DOMAIN_CHECK(degree >= 0, "negative degree");
    LamPoly p;
    if (coeff != 0) {
        p.c_.assign(degree + 1, Rat(0));
        p.c_[degree] = coeff;
    }
    return p;
}

void LamPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat LamPoly::eval(const Rat& lam_value) const {
    Rat v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * lam_value + *it;
    return v;
}

LamPoly LamPoly::operator-() const {
    LamPoly p = *this;
    for (Rat& v : p.c_) v = -v;
    return p;
}

LamPoly& LamPoly::operator+=(const LamPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

LamPoly& LamPoly::operator-=(const LamPoly& o) {
    *this += -o;
    return *this;
}

LamPoly& LamPoly::operator*=(const LamPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> p(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) p[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(p);
    trim();
    return *this;
}

std::string LamPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long d = degree(); d >= 0; --d) {
        const Rat v = coeff(d);
        if (v == 0) continue;
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        Rat av = abs(v);
        if (av != 1 || d == 0) os << rat_str(av);
        if (d > 0) {
            if (av != 1) os << "*";
            os << "lam";
            if (d > 1) os << "^" << d;
        }
        first = false;
    }
    return os.str();
}

} // namespace capform
