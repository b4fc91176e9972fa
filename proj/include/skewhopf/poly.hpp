#pragma once

#include <map>
#include <string>
#include <vector>

#include "monomial.hpp"
#include "scalar.hpp"

namespace skewhopf {

// Element of an iterated Ore extension in canonical PBW form: a finite map
// from ordered monomials to nonzero rational coefficients. Equality of the
// term maps is equality of ring elements.
class NcPoly {
public:
    using TermMap = std::map<Monomial, Scalar>;

    explicit NcPoly(std::size_t arity = 0) : arity_(arity) {}

    static NcPoly zero(std::size_t arity) { return NcPoly(arity); }
    static NcPoly one(std::size_t arity) { return constant(arity, 1); }
    static NcPoly constant(std::size_t arity, const Scalar& c);
    static NcPoly generator(std::size_t arity, std::size_t i);
    static NcPoly monomial(const Monomial& m, const Scalar& c = Scalar(1));

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::uint32_t degree() const;
    const TermMap& terms() const { return terms_; }

    Scalar coeff(const Monomial& m) const;
    Scalar constant_term() const { return coeff(Monomial::unit(arity_)); }
    bool supported_below(std::size_t bound) const;

    void add_term(const Monomial& m, const Scalar& c);

    NcPoly operator-() const;
    NcPoly scaled(const Scalar& c) const;

    friend NcPoly operator+(const NcPoly& a, const NcPoly& b);
    friend NcPoly operator-(const NcPoly& a, const NcPoly& b);
    friend bool operator==(const NcPoly& a, const NcPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

private:
    std::size_t arity_;
    TermMap terms_;
};

inline NcPoly add(const NcPoly& a, const NcPoly& b) { return a + b; }
inline NcPoly scale(const Scalar& c, const NcPoly& p) { return p.scaled(c); }

std::string to_string(const NcPoly& p, const std::vector<std::string>& names);

}  // namespace skewhopf
