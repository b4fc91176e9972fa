#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace skewhopf {

// Sparse commutative polynomial in a fixed set of scalar unknowns (candidate
// character values). Workhorse of the triangular substitution solvers.
class UPoly {
public:
    using Key = std::vector<std::uint32_t>;
    using TermMap = std::map<Key, Scalar>;

    explicit UPoly(std::size_t vars = 0) : vars_(vars) {}

    static UPoly constant(std::size_t vars, const Scalar& c);
    static UPoly variable(std::size_t vars, std::size_t i);

    std::size_t vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    std::uint32_t degree() const;
    const TermMap& terms() const { return terms_; }

    void add_term(const Key& k, const Scalar& c);

    UPoly operator-() const;
    UPoly scaled(const Scalar& c) const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    // Plug in known values (index -> value); remaining unknowns stay symbolic.
    UPoly substituted(const std::map<std::size_t, Scalar>& known) const;

    // Degree <= 1 in exactly one unknown v and constant in all others:
    // returns (v, a, b) for the form a*v + b with a != 0.
    struct AffineIn1 {
        std::size_t var;
        Scalar slope;
        Scalar offset;
    };
    std::optional<AffineIn1> affine_in_single_unknown() const;

    // True when total degree <= 1.
    bool is_affine() const;

    std::string to_string(const std::vector<std::string>& var_names) const;

private:
    std::size_t vars_;
    TermMap terms_;
};

}  // namespace skewhopf
