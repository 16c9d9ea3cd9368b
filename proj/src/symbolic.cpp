#include "tilekit/symbolic.hpp"

#include <set>

#include "tilekit/errors.hpp"

namespace tilekit {

SymbolicScalar::SymbolicScalar(Rational rat, std::map<int, Rational> irr)
    : rat_(std::move(rat)), irr_(std::move(irr)) {
    for (auto it = irr_.begin(); it != irr_.end();) {
        it = it->second.is_zero() ? irr_.erase(it) : std::next(it);
    }
}

SymbolicScalar SymbolicScalar::symbol(int id, Rational coeff) {
    return SymbolicScalar(Rational(0), {{id, std::move(coeff)}});
}

SymbolicScalar SymbolicScalar::operator-() const {
    SymbolicScalar out;
    out.rat_ = -rat_;
    for (const auto& [id, c] : irr_) out.irr_.emplace(id, -c);
    return out;
}

SymbolicScalar operator+(const SymbolicScalar& a, const SymbolicScalar& b) {
    std::map<int, Rational> irr = a.irr_;
    for (const auto& [id, c] : b.irr_) {
        auto [it, inserted] = irr.emplace(id, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) irr.erase(it);
        }
    }
    return SymbolicScalar(a.rat_ + b.rat_, std::move(irr));
}

SymbolicScalar operator-(const SymbolicScalar& a, const SymbolicScalar& b) { return a + (-b); }

SymbolicScalar operator*(const Rational& k, const SymbolicScalar& s) {
    if (k.is_zero()) return SymbolicScalar();
    SymbolicScalar out;
    out.rat_ = k * s.rat_;
    for (const auto& [id, c] : s.irr_) out.irr_.emplace(id, k * c);
    return out;
}

bool operator<(const SymbolicScalar& a, const SymbolicScalar& b) {
    if (a.rat_ != b.rat_) return a.rat_ < b.rat_;
    return a.irr_ < b.irr_;
}

Rational SymbolicScalar::substitute(const std::map<int, Rational>& values) const {
    Rational out = rat_;
    for (const auto& [id, c] : irr_) {
        const auto it = values.find(id);
        if (it == values.end()) {
            throw InvalidArgument("no value for symbol #" + std::to_string(id));
        }
        out += c * it->second;
    }
    return out;
}

std::string SymbolicScalar::str() const {
    std::string out = rat_.str();
    for (const auto& [id, c] : irr_) {
        out += " + " + c.str() + "*a" + std::to_string(id);
    }
    return out;
}

SymbolicVector SymbolicVector::rational(const std::vector<Rational>& comps) {
    std::vector<SymbolicScalar> s(comps.begin(), comps.end());
    return SymbolicVector(std::move(s));
}

bool SymbolicVector::is_rational() const {
    for (const auto& c : comps_) {
        if (!c.is_rational()) return false;
    }
    return true;
}

bool SymbolicVector::is_zero() const {
    for (const auto& c : comps_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

SymbolicVector SymbolicVector::symbolic_part() const {
    std::vector<SymbolicScalar> s;
    s.reserve(comps_.size());
    for (const auto& c : comps_) s.push_back(c.symbolic_part());
    return SymbolicVector(std::move(s));
}

std::vector<Rational> SymbolicVector::rational_part() const {
    std::vector<Rational> out;
    out.reserve(comps_.size());
    for (const auto& c : comps_) out.push_back(c.rational_part());
    return out;
}

SymbolicVector SymbolicVector::operator-() const {
    std::vector<SymbolicScalar> s;
    s.reserve(comps_.size());
    for (const auto& c : comps_) s.push_back(-c);
    return SymbolicVector(std::move(s));
}

SymbolicVector operator+(const SymbolicVector& a, const SymbolicVector& b) {
    if (a.dim() != b.dim()) throw SpecMismatch("vector dimensions differ");
    std::vector<SymbolicScalar> s;
    s.reserve(a.comps_.size());
    for (int i = 0; i < a.dim(); ++i) s.push_back(a[i] + b[i]);
    return SymbolicVector(std::move(s));
}

SymbolicVector operator-(const SymbolicVector& a, const SymbolicVector& b) { return a + (-b); }

std::vector<Rational> SymbolicVector::substitute(const std::map<int, Rational>& values) const {
    std::vector<Rational> out;
    out.reserve(comps_.size());
    for (const auto& c : comps_) out.push_back(c.substitute(values));
    return out;
}

std::vector<int> SymbolicVector::symbols() const {
    std::set<int> ids;
    for (const auto& c : comps_) {
        for (const auto& [id, coeff] : c.symbol_coeffs()) ids.insert(id);
    }
    return std::vector<int>(ids.begin(), ids.end());
}

std::string SymbolicVector::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) out += ", ";
        out += comps_[i].str();
    }
    return out + ")";
}

} // namespace tilekit
