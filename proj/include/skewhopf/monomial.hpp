#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace skewhopf {

// PBW monomial x1^{e1} * ... * xn^{en}; slot order is tower order.
struct Monomial {
    std::vector<std::uint32_t> exp;

    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> e) : exp(std::move(e)) {}

    static Monomial unit(std::size_t arity) { return Monomial(std::vector<std::uint32_t>(arity, 0)); }
    static Monomial gen(std::size_t arity, std::size_t i);

    std::size_t arity() const { return exp.size(); }
    std::uint32_t degree() const;
    bool is_unit() const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    // Largest generator index with a nonzero exponent, npos for the unit monomial.
    std::size_t top() const;
    // True when every nonzero exponent sits at an index < bound.
    bool supported_below(std::size_t bound) const;
    bool contains_any(const std::vector<std::size_t>& gens) const;

    Monomial times_gen_power(std::size_t i, std::uint32_t k) const;
    Monomial without_top() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

// Degree-lexicographic order: total degree first, then the exponent vector
// compared from the leftmost generator. Used for canonical term ordering.
bool operator<(const Monomial& a, const Monomial& b);

std::string to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace skewhopf
