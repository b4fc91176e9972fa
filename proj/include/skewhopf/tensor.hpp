#pragma once

#include <array>
#include <functional>
#include <map>
#include <utility>

#include "tower.hpp"

namespace skewhopf {

// Elements of T (x) T and T (x) T (x) T with components held in PBW form, so
// equality of tensors is equality of term maps and every identity check is a
// syntactic zero test. No graded signs anywhere.
class Tensor2 {
public:
    using Key = std::pair<Monomial, Monomial>;
    using TermMap = std::map<Key, Scalar>;

    explicit Tensor2(std::size_t arity = 0) : arity_(arity) {}

    static Tensor2 zero(std::size_t arity) { return Tensor2(arity); }
    static Tensor2 unit(std::size_t arity);  // 1 (x) 1

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Scalar coeff(const Monomial& a, const Monomial& b) const;
    bool supported_below(std::size_t bound) const;

    void add_term(const Monomial& a, const Monomial& b, const Scalar& c);

    Tensor2 operator-() const;
    Tensor2 scaled(const Scalar& c) const;

    friend Tensor2 operator+(const Tensor2& a, const Tensor2& b);
    friend Tensor2 operator-(const Tensor2& a, const Tensor2& b);
    friend bool operator==(const Tensor2& a, const Tensor2& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Tensor2& a, const Tensor2& b) { return !(a == b); }

private:
    std::size_t arity_;
    TermMap terms_;
};

class Tensor3 {
public:
    using Key = std::array<Monomial, 3>;
    using TermMap = std::map<Key, Scalar>;

    explicit Tensor3(std::size_t arity = 0) : arity_(arity) {}

    static Tensor3 zero(std::size_t arity) { return Tensor3(arity); }

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Monomial& a, const Monomial& b, const Monomial& c, const Scalar& s);

    Tensor3 scaled(const Scalar& c) const;

    friend Tensor3 operator+(const Tensor3& a, const Tensor3& b);
    friend Tensor3 operator-(const Tensor3& a, const Tensor3& b);
    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

private:
    std::size_t arity_;
    TermMap terms_;
};

Tensor2 tensor_product(const NcPoly& a, const NcPoly& b);
Tensor3 tensor_product(const NcPoly& a, const NcPoly& b, const NcPoly& c);

// (a (x) b)(c (x) d) = ac (x) bd, extended bilinearly, components normalized.
Tensor2 t2_mul(const Tensor2& u, const Tensor2& v, const Tower& t);
Tensor2 t2_mul(const Tensor2& u, const Tensor2& v, const Tower& t, RewriteBudget& budget);
Tensor3 t3_mul(const Tensor3& u, const Tensor3& v, const Tower& t);
Tensor3 t3_mul(const Tensor3& u, const Tensor3& v, const Tower& t, RewriteBudget& budget);

// Multiplication map: sum of the component products.
NcPoly mu(const Tensor2& u, const Tower& t);
NcPoly mu(const Tensor2& u, const Tower& t, RewriteBudget& budget);

using PolyMap = std::function<NcPoly(const NcPoly&)>;
using PolyToTensor = std::function<Tensor2(const NcPoly&)>;

// Slot-wise application of an algebra map with bilinear recombination.
Tensor2 lift_left(const PolyMap& f, const Tensor2& u);
Tensor2 lift_right(const PolyMap& f, const Tensor2& u);

// Apply a map into T (x) T to slot 1 resp. slot 2, producing a Tensor3.
Tensor3 embed_12(const PolyToTensor& f, const Tensor2& u);
Tensor3 embed_23(const PolyToTensor& f, const Tensor2& u);

// (eps (x) id) and (id (x) eps) contractions.
NcPoly contract_left_counit(const Tensor2& u);
NcPoly contract_right_counit(const Tensor2& u);

std::string to_string(const Tensor2& u, const std::vector<std::string>& names);
std::string to_string(const Tensor3& u, const std::vector<std::string>& names);

}  // namespace skewhopf
