#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tilekit/rational.hpp"

namespace tilekit {

/// Element of Q + Q*alpha_1 + Q*alpha_2 + ... where the alpha_i are formal
/// symbols standing for reals that are rationally independent together with 1.
/// Equality is coefficient-wise; zero coefficients are not stored.
class SymbolicScalar {
public:
    SymbolicScalar() = default;
    SymbolicScalar(Rational rat) : rat_(std::move(rat)) {} // NOLINT: implicit by design
    SymbolicScalar(Rational rat, std::map<int, Rational> irr);

    static SymbolicScalar symbol(int id, Rational coeff = Rational(1));

    const Rational& rational_part() const { return rat_; }
    const std::map<int, Rational>& symbol_coeffs() const { return irr_; }

    bool is_rational() const { return irr_.empty(); }
    bool is_zero() const { return rat_.is_zero() && irr_.empty(); }

    SymbolicScalar symbolic_part() const { return SymbolicScalar(Rational(0), irr_); }

    SymbolicScalar operator-() const;
    friend SymbolicScalar operator+(const SymbolicScalar& a, const SymbolicScalar& b);
    friend SymbolicScalar operator-(const SymbolicScalar& a, const SymbolicScalar& b);
    friend SymbolicScalar operator*(const Rational& k, const SymbolicScalar& s);

    bool operator==(const SymbolicScalar& o) const { return rat_ == o.rat_ && irr_ == o.irr_; }
    friend bool operator<(const SymbolicScalar& a, const SymbolicScalar& b);

    /// Evaluates with the given symbol values; every symbol present must be
    /// assigned.
    Rational substitute(const std::map<int, Rational>& values) const;

    std::string str() const;

private:
    Rational rat_;
    std::map<int, Rational> irr_;
};

class SymbolicVector {
public:
    SymbolicVector() = default;
    explicit SymbolicVector(std::vector<SymbolicScalar> comps) : comps_(std::move(comps)) {}
    static SymbolicVector rational(const std::vector<Rational>& comps);

    int dim() const { return int(comps_.size()); }
    const SymbolicScalar& operator[](int i) const { return comps_[std::size_t(i)]; }
    const std::vector<SymbolicScalar>& comps() const { return comps_; }

    bool is_rational() const;
    bool is_zero() const;
    SymbolicVector symbolic_part() const;
    std::vector<Rational> rational_part() const;

    SymbolicVector operator-() const;
    friend SymbolicVector operator+(const SymbolicVector& a, const SymbolicVector& b);
    friend SymbolicVector operator-(const SymbolicVector& a, const SymbolicVector& b);

    bool operator==(const SymbolicVector& o) const { return comps_ == o.comps_; }
    friend bool operator<(const SymbolicVector& a, const SymbolicVector& b) {
        return a.comps_ < b.comps_;
    }

    std::vector<Rational> substitute(const std::map<int, Rational>& values) const;

    /// Ids of all symbols appearing in any component.
    std::vector<int> symbols() const;

    std::string str() const;

private:
    std::vector<SymbolicScalar> comps_;
};

} // namespace tilekit
