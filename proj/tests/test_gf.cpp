#include <doctest.h>

#include <set>

#include "agfilt/errors.hpp"
#include "agfilt/gf.hpp"

using namespace agfilt;

TEST_SUITE("gf") {

TEST_CASE("prime field construction and arithmetic") {
    auto f5 = field_new(5);
    CHECK(f5->q() == 5);
    CHECK(f5->degree() == 1);

    CHECK(f5->from_int(3) + f5->from_int(4) == f5->from_int(2));
    CHECK(f5->from_int(2) * f5->from_int(3) == f5->from_int(1));
    CHECK(f5->from_int(2).inv() == f5->from_int(3));
    CHECK(f5->from_int(1).inv() == f5->from_int(1));
    CHECK((-f5->from_int(2)) == f5->from_int(3));
    CHECK(f5->from_int(-1) == f5->from_int(4));
}

TEST_CASE("gf(4) with the default modulus x^2 + x + 1") {
    auto f4 = field_new(2, 2);
    CHECK(f4->q() == 4);
    CHECK(f4->modulus() == std::vector<std::uint32_t>{1, 1, 1});

    const auto alpha = f4->gen();
    CHECK(alpha * alpha == alpha + f4->one());

    const auto elements = f4->enumerate();
    REQUIRE(elements.size() == 4);
    CHECK(elements[0] == f4->zero());
    CHECK(elements[1] == f4->one());
    CHECK(elements[2] == alpha);
    CHECK(elements[3] == alpha + f4->one());
}

TEST_CASE("gf(9): x^2 + 1 is irreducible and inv(alpha) = 2 alpha") {
    auto f9 = field_new(3, 2, std::vector<std::uint32_t>{1, 0, 1});
    CHECK(f9->q() == 9);
    CHECK(f9->enumerate().size() == 9);

    const auto alpha = f9->gen();
    const auto two_alpha = f9->from_int(2) * alpha;
    CHECK(alpha.inv() == two_alpha);
    CHECK(alpha * two_alpha == f9->one());

    // the default modulus search lands on the same polynomial
    CHECK(field_new(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(field_new(6), CompositeModulus);
    CHECK_THROWS_AS(field_new(1), CompositeModulus);
    // x^2 + 2 = (x+1)(x+2) mod 3
    CHECK_THROWS_AS(field_new(3, 2, std::vector<std::uint32_t>{2, 0, 1}), ReducibleModulus);
    // not monic
    CHECK_THROWS_AS(field_new(3, 2, std::vector<std::uint32_t>{1, 0, 2}), ReducibleModulus);
    CHECK_THROWS_AS(field_new(5)->zero() + field_new(7)->zero(), SpecMismatch);
    CHECK_THROWS_AS(field_new(5)->zero().inv(), DivisionByZero);
}

TEST_CASE("two structurally equal specs interoperate") {
    auto a = field_new(5);
    auto b = field_new(5);
    CHECK(a->from_int(2) + b->from_int(4) == a->from_int(1));
}

static void check_field_axioms(const FieldSpecPtr& field) {
    const auto elements = field->enumerate();
    const auto q = elements.size();
    std::set<std::vector<std::uint32_t>> reps;
    for (const auto& e : elements) reps.insert(e.rep());
    CHECK(reps.size() == q);

    bool ok = true;
    for (const auto& a : elements) {
        ok = ok && a + (-a) == field->zero();
        ok = ok && a + field->zero() == a;
        ok = ok && a * field->one() == a;
        if (!a.is_zero()) ok = ok && a * a.inv() == field->one();
        for (const auto& b : elements) {
            ok = ok && a + b == b + a;
            ok = ok && a * b == b * a;
            // Frobenius
            ok = ok && (a + b).pow(field->p()) == a.pow(field->p()) + b.pow(field->p());
            for (const auto& c : elements) {
                ok = ok && (a + b) + c == a + (b + c);
                ok = ok && (a * b) * c == a * (b * c);
                ok = ok && a * (b + c) == a * b + a * c;
            }
        }
    }
    CHECK(ok);
}

TEST_CASE("field axioms hold over full enumeration for q <= 81") {
    check_field_axioms(field_new(5));
    check_field_axioms(field_new(2, 2));
    check_field_axioms(field_new(3, 2));
    check_field_axioms(field_new(7));
    check_field_axioms(field_new(5, 2));  // GF(25), default modulus x^2 + 2
    check_field_axioms(field_new(3, 4));  // GF(81)
}

TEST_CASE("enumeration yields p^k distinct elements in index order") {
    auto f49 = field_new(7, 2);
    const auto elements = f49->enumerate();
    CHECK(elements.size() == 49);
    for (std::size_t i = 0; i < elements.size(); ++i) CHECK(elements[i].index() == i);
}

TEST_CASE("canonical comparison follows the enumeration order") {
    auto f4 = field_new(2, 2);
    CHECK(f4->zero() < f4->one());
    CHECK(f4->one() < f4->gen());
    CHECK(f4->gen() < f4->gen() + f4->one());
}

}  // TEST_SUITE
