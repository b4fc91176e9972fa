#include <doctest.h>

#include "oracle.hpp"
#include "skewhopf/builtins.hpp"
#include "skewhopf/hopf.hpp"
#include "skewhopf/parse.hpp"
#include "skewhopf/tensor.hpp"

using namespace skewhopf;

namespace {

Tensor2 rand_tensor(oracle::Rng& rng, std::size_t arity, std::uint32_t deg, int terms) {
    return tensor_product(oracle::random_poly(rng, arity, deg, terms),
                          oracle::random_poly(rng, arity, deg, terms));
}

}  // namespace

TEST_CASE("tensor unit and componentwise products") {
    HopfTower h = builtin("heisenberg");
    const Tower& t = h.tower();
    oracle::Rng rng(31);
    Tensor2 u = rand_tensor(rng, 3, 2, 3);
    CHECK(t2_mul(Tensor2::unit(3), u, t) == u);
    CHECK(t2_mul(u, Tensor2::unit(3), t) == u);

    Tensor2 yz = parse_tensor("y ox z", t);
    CHECK(t2_mul(yz, yz, t) == parse_tensor("y^2 ox z^2", t));
}

TEST_CASE("component multiplication uses the tower relations") {
    Tower t = builtin("usl2").tower();
    Tensor2 f1 = parse_tensor("f ox 1", t);
    Tensor2 e1 = parse_tensor("e ox 1", t);
    CHECK(t2_mul(f1, e1, t) == parse_tensor("e*f ox 1 - h ox 1", t));
}

TEST_CASE("counit contractions and slot lifts") {
    HopfTower h = builtin("heisenberg");
    const Tower& t = h.tower();
    Tensor2 yz = parse_tensor("y ox z", t);
    CHECK(contract_left_counit(yz).is_zero());

    auto delta = [&](const NcPoly& p) { return coproduct(p, h); };
    Tensor3 lifted = embed_12(delta, yz);
    Tensor3 expected(3);
    expected.add_term(Monomial({1, 0, 0}), Monomial::unit(3), Monomial({0, 1, 0}), 1);
    expected.add_term(Monomial::unit(3), Monomial({1, 0, 0}), Monomial({0, 1, 0}), 1);
    CHECK(lifted == expected);

    auto s = [&](const NcPoly& p) { return antipode(p, h); };
    CHECK(lift_left(s, yz) == -yz);
}

TEST_CASE("mu multiplies the slots together") {
    Tower theis = builtin("heisenberg").tower();
    CHECK(mu(Tensor2::unit(3), theis) == NcPoly::one(3));
    CHECK(mu(parse_tensor("y ox z", theis), theis) ==
          normal_form(parse_expr("y*z", theis), theis));

    Tower t = builtin("usl2").tower();
    Tensor2 u = parse_tensor("e ox f + f ox e", t);
    CHECK(mu(u, t) == normal_form(parse_expr("2*e*f - h", t), t));
}

TEST_CASE("t2_mul is associative with unit 1 ox 1") {
    oracle::Rng rng(77);
    Tower t = builtin("B(1)").tower();
    for (int i = 0; i < 20; ++i) {
        Tensor2 a = rand_tensor(rng, 3, 2, 2);
        Tensor2 b = rand_tensor(rng, 3, 2, 2);
        Tensor2 c = rand_tensor(rng, 3, 2, 2);
        CHECK(t2_mul(t2_mul(a, b, t), c, t) == t2_mul(a, t2_mul(b, c, t), t));
    }
}

TEST_CASE("mu is multiplicative across split slots") {
    oracle::Rng rng(78);
    Tower t = builtin("usl2").tower();
    for (int i = 0; i < 20; ++i) {
        NcPoly a = oracle::random_poly(rng, 3, 2, 3);
        NcPoly b = oracle::random_poly(rng, 3, 2, 3);
        Tensor2 left = tensor_product(a, NcPoly::one(3));
        Tensor2 right = tensor_product(NcPoly::one(3), b);
        CHECK(mu(t2_mul(left, right, t), t) == mul(a, b, t));
    }
}

TEST_CASE("slot lifts compose") {
    oracle::Rng rng(79);
    HopfTower h = builtin("usl2");
    auto f = [&](const NcPoly& p) { return antipode(p, h); };
    auto fg = [&](const NcPoly& p) { return antipode(antipode(p, h), h); };
    for (int i = 0; i < 15; ++i) {
        Tensor2 u = rand_tensor(rng, 3, 2, 2);
        CHECK(lift_left(f, lift_left(f, u)) == lift_left(fg, u));
        CHECK(lift_right(f, lift_right(f, u)) == lift_right(fg, u));
    }
}

TEST_CASE("t3_mul matches slotwise products") {
    Tower t = builtin("usl2").tower();
    Tensor3 a = tensor_product(NcPoly::generator(3, 2), NcPoly::one(3), NcPoly::generator(3, 0));
    Tensor3 b = tensor_product(NcPoly::generator(3, 1), NcPoly::generator(3, 0), NcPoly::one(3));
    Tensor3 expected = tensor_product(mul(NcPoly::generator(3, 2), NcPoly::generator(3, 1), t),
                                      NcPoly::generator(3, 0), NcPoly::generator(3, 0));
    CHECK(t3_mul(a, b, t) == expected);
}
