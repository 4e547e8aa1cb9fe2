#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "odo/builtin.hpp"
#include "odo/dres.hpp"
#include "odo/parse.hpp"
#include "odo/print.hpp"
#include "test_util.hpp"

using namespace odo;
using namespace odo::testutil;

namespace {

const FieldSpecPtr QX = FieldSpec::ratfunc_x();
const RingPtr LM = make_ring({"lambda", "mu"});

using Op = DiffOp<FieldElement>;
using SP = MultiPoly<FieldElement>;

Op op(const std::string& text) { return parse_operator(text, QX); }
SP spoly(const std::string& text) { return parse_spoly(text, QX, LM); }

std::mt19937_64 rng(4242u);

} // namespace

TEST_CASE("sylvester matrix of a first-order pair") {
    auto spec = FieldSpec::make(Tower::RatFuncX, {"a", "b"});
    FieldElement a = FieldElement::named(spec, "a"), b = FieldElement::named(spec, "b");
    Op p = Op::d_power(1) - Op::constant(a);
    Op q = Op::d_power(1) - Op::constant(b);
    auto s = sylvester(p, q, 0, LM);
    REQUIRE(s.rows() == 2);
    REQUIRE(s.cols() == 2);
    CHECK(s.entries[0][0] == SP::constant(LM, FieldElement(1)));
    CHECK(s.entries[1][0] == SP::constant(LM, FieldElement(1)));
    CHECK(s.entries[0][1] == SP::constant(LM, -a) - SP::variable(LM, 0, 1, FieldElement(1)));
    CHECK(s.entries[1][1] == SP::constant(LM, -b) - SP::variable(LM, 1, 1, FieldElement(1)));
}

TEST_CASE("sylvester matrix shapes") {
    Op l4 = resolve_operator("EulerL4", QX);
    Op b6 = resolve_operator("EulerB6", QX);
    REQUIRE(l4.order() == 4);
    REQUIRE(b6.order() == 6);
    auto s0 = sylvester(l4, b6, 0, LM);
    CHECK(s0.rows() == 10);
    CHECK(s0.cols() == 10);
    auto s2 = sylvester(l4, b6, 2, LM);
    CHECK(s2.rows() == 6);
    CHECK(s2.cols() == 8);
    CHECK_THROWS_AS(sylvester(l4, b6, 4, LM), Error);

    for (int trial = 0; trial < 6; ++trial) {
        std::uniform_int_distribution<int> ord(1, 4);
        int n = ord(rng), m = ord(rng);
        Op p = Op::d_power(n), q = Op::d_power(m);
        for (int k = 0; k < std::min(n, m); ++k) {
            auto s = sylvester(p, q, k, LM);
            CHECK(static_cast<int>(s.rows()) == n + m - 2 * k);
            CHECK(static_cast<int>(s.cols()) == n + m - k);
        }
    }
}

TEST_CASE("bareiss determinant basics") {
    // [[1, -lambda],[1, -mu]] -> lambda - mu
    std::vector<std::vector<SP>> m2{
        {SP::constant(LM, FieldElement(1)), -SP::variable(LM, 0, 1, FieldElement(1))},
        {SP::constant(LM, FieldElement(1)), -SP::variable(LM, 1, 1, FieldElement(1))}};
    CHECK(bareiss_det(m2) == spoly("lambda - mu"));

    std::vector<std::vector<SP>> eye(5, std::vector<SP>(5, SP(LM)));
    for (int i = 0; i < 5; ++i) eye[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = SP::constant(LM, FieldElement(1));
    CHECK(bareiss_det(eye) == SP::constant(LM, FieldElement(1)));

    CHECK_THROWS_AS(bareiss_det(std::vector<std::vector<SP>>{{SP(LM), SP(LM)}}), Error);
}

TEST_CASE("bareiss equals cofactor expansion") {
    std::uniform_int_distribution<int> val(-9, 9), xdeg(0, 1);
    for (int size = 2; size <= 5; ++size) {
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<std::vector<QPoly>> mi;
            std::vector<std::vector<SP>> mx;
            RingPtr none = make_ring({});
            for (int r = 0; r < size; ++r) {
                std::vector<QPoly> rowi;
                std::vector<SP> rowx;
                for (int c = 0; c < size; ++c) {
                    rowi.push_back(QPoly::constant(none, Rational(val(rng))));
                    FieldElement fx = FieldElement::named(QX, "x").pow(xdeg(rng)) * FieldElement(val(rng));
                    rowx.push_back(SP::constant(LM, fx) +
                                   SP::variable(LM, 0, static_cast<unsigned>(xdeg(rng)), FieldElement(val(rng))));
                }
                mi.push_back(std::move(rowi));
                mx.push_back(std::move(rowx));
            }
            CHECK(bareiss_det(mi) == cofactor_det(mi));
            CHECK(bareiss_det(mx) == cofactor_det(mx));
        }
    }
}

TEST_CASE("constant-coefficient resultant") {
    SP h = diff_resultant(op("D^2"), op("D^3"), LM);
    auto u = unit_ratio(h, spoly("lambda^3 - mu^2"));
    REQUIRE(u.has_value());
    CHECK(!is_zero(*u));
}

TEST_CASE("euler pair resultant is the squared curve") {
    Op l4 = resolve_operator("EulerL4", QX);
    Op b6 = resolve_operator("EulerB6", QX);
    REQUIRE(commutator(l4, b6).is_zero_op());
    SP h = diff_resultant(l4, b6, LM);
    SP expected = spoly("(mu^2 - lambda^3)^2");
    auto u = unit_ratio(h, expected);
    REQUIRE(u.has_value());
    MESSAGE("euler resultant unit: ", rat_str(*u));
}

TEST_CASE("euler subresultants match the worked example") {
    Op l4 = resolve_operator("EulerL4", QX);
    Op b6 = resolve_operator("EulerB6", QX);

    auto s1 = subresultant(l4, b6, 1, LM);
    SP phi0_expected = spoly("(lambda*x^4 - 560)*(lambda^3 - mu^2)/x^4");
    auto u1 = unit_ratio(s1.minors[0], phi0_expected);
    REQUIRE(u1.has_value());

    auto s2 = subresultant(l4, b6, 2, LM);
    REQUIRE(s2.op.order() == 2);
    DiffOp<SP> expected = DiffOp<SP>::from_coeffs({
        spoly("(lambda*x^4 - 560)*(-(mu*x^2) + 20*lambda)/x^6"),
        spoly("(lambda*x^4 - 560)*(-5)*(3*lambda*x^4 - 1232)/x^9"),
        spoly("(lambda*x^4 - 560)*(lambda*x^4 - 560)/x^8"),
    });
    auto u2 = unit_ratio(s2.op, expected);
    REQUIRE(u2.has_value());
    MESSAGE("euler subresultant-2 unit: ", rat_str(*u2));

    // k = 0 reproduces the resultant as the order-0 coefficient
    auto s0 = subresultant(l4, b6, 0, LM);
    CHECK(s0.op.order() <= 0);
    CHECK(s0.minors[0] == diff_resultant(l4, b6, LM));
}
