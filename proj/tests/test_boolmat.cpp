#include <random>
#include <sstream>

#include "doctest.h"
#include "modresc/boolmat.hpp"
#include "modresc/errors.hpp"
#include "test_util.hpp"

using namespace modresc;

namespace {

BitVec vec(std::initializer_list<int> bits) {
    BitVec v(bits.size());
    std::size_t i = 0;
    for (int b : bits) v.set(i++, b != 0);
    return v;
}

} // namespace

TEST_CASE("otimes is strict domination somewhere, not mere difference") {
    BitVec u = vec({0, 1, 1, 0});
    BitVec v = vec({1, 1, 1, 0});
    CHECK_FALSE(vec_otimes(u, v)); // u never exceeds v
    CHECK(vec_otimes(v, u));       // v has a 1 where u has a 0

    CHECK_FALSE(vec_otimes(vec({0, 0}), vec({1, 0})));
    CHECK_FALSE(vec_otimes(vec({1, 1}), vec({1, 1})));
    CHECK(vec_otimes(vec({1, 0}), vec({0, 1})));
}

TEST_CASE("otimes equals 'not a subset'") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        std::size_t len = 1 + rng() % 70; // straddles the word boundary
        BitVec u(len), v(len);
        for (std::size_t i = 0; i < len; ++i) {
            u.set(i, rng() & 1);
            v.set(i, rng() & 1);
        }
        CHECK(vec_otimes(u, v) == !u.is_subset_of(v));
    }
}

TEST_CASE("set_compare orders sets like their sorted index sequences") {
    auto cmp = [](std::initializer_list<int> a, std::initializer_list<int> b) {
        BitVec va(70), vb(70);
        for (int i : a) va.set(static_cast<std::size_t>(i));
        for (int i : b) vb.set(static_cast<std::size_t>(i));
        return BitVec::set_compare(va, vb);
    };
    CHECK(cmp({0}, {0, 1}) < 0); // a proper prefix sorts first
    CHECK(cmp({0, 1}, {0}) > 0);
    CHECK(cmp({0, 1}, {1}) < 0);
    CHECK(cmp({0, 2}, {0, 1, 2}) > 0);
    CHECK(cmp({0, 5}, {0, 5, 69}) < 0); // prefix detection across words
    CHECK(cmp({}, {0}) < 0);
    CHECK(cmp({3}, {3}) == 0);

    std::mt19937_64 rng(41);
    for (int t = 0; t < 300; ++t) {
        std::size_t len = 1 + rng() % 70;
        BitVec a(len), b(len);
        for (std::size_t i = 0; i < len; ++i) {
            a.set(i, (rng() & 3) == 0);
            b.set(i, (rng() & 3) == 0);
        }
        std::vector<std::size_t> ia = a.indices(), ib = b.indices();
        int want = ia < ib ? -1 : (ib < ia ? 1 : 0);
        CHECK(BitVec::set_compare(a, b) == want);
    }
}

TEST_CASE("mat_otimes on a hand-checked pair") {
    BoolMatrix M = testutil::matrix("10\n01\n11");
    BoolMatrix R = testutil::matrix("01\n10");
    BoolMatrix C = mat_otimes(M, R);
    // row (1,0) vs columns (0,1) and (1,0); row (1,1) dominates both somewhere
    CHECK(C == testutil::matrix("10\n01\n11"));
}

TEST_CASE("mat_otimes rejects mismatched inner dimension") {
    BoolMatrix M(2, 3), R(2, 2);
    CHECK_THROWS_AS(mat_otimes(M, R), contract_error);
}

TEST_CASE("trivial factorization always reproduces C") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 1 + rng() % 8, m = 1 + rng() % 8;
        BoolMatrix C(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (rng() & 1) C.set(i, j, true);
        ModRescPair mr = trivial_solution(C);
        CHECK(mr.M.cols() == n);
        CHECK(verify_solution(C, mr));
    }
    // degenerate shapes
    BoolMatrix zero(3, 2);
    CHECK(verify_solution(zero, trivial_solution(zero)));
    BoolMatrix one = testutil::matrix("1");
    CHECK(verify_solution(one, trivial_solution(one)));
}

TEST_CASE("verify_solution rejects wrong shapes and wrong products") {
    BoolMatrix C = BoolMatrix::identity(2);
    ModRescPair good = trivial_solution(C);
    CHECK(verify_solution(C, good));

    ModRescPair wrong_shape{BoolMatrix(3, 2), BoolMatrix(2, 2)};
    CHECK_FALSE(verify_solution(C, wrong_shape));

    // all-ones M with all-zeros R multiplies to all-ones, not the identity
    BoolMatrix M(2, 1), R(2, 1);
    M.set(0, 0, true);
    M.set(1, 0, true);
    CHECK_FALSE(verify_solution(C, {M, R}));
}

TEST_CASE("matrix parser accepts separators, comments, and blank lines") {
    std::istringstream in(
        "# compatibility matrix\n"
        "1 0, 1\n"
        "\n"
        "011  # trailing comment\n"
        "0,0,0\n");
    BoolMatrix m = parse_matrix(in, "demo");
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 3);
    CHECK(m.get(0, 0));
    CHECK_FALSE(m.get(0, 1));
    CHECK(m.get(1, 1));
    CHECK_FALSE(m.get(2, 2));
}

TEST_CASE("matrix parser strips carriage returns") {
    BoolMatrix m = parse_matrix_text("10\r\n01\r\n");
    CHECK(m.rows() == 2);
    CHECK(m.get(1, 1));
}

TEST_CASE("matrix parser reports position of a stray character") {
    try {
        parse_matrix_text("101\n1x1\n", "bad.txt");
        FAIL("expected input_error");
    } catch (const input_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("bad.txt:2:2") != std::string::npos);
    }
}

TEST_CASE("matrix parser rejects ragged rows with the line number") {
    try {
        parse_matrix_text("101\n10\n", "ragged");
        FAIL("expected input_error");
    } catch (const input_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("ragged:2") != std::string::npos);
        CHECK(msg.find("expected 3") != std::string::npos);
    }
}

TEST_CASE("matrix parser rejects input with no rows") {
    CHECK_THROWS_AS(parse_matrix_text("# only a comment\n\n"), input_error);
    CHECK_THROWS_AS(parse_matrix_text(""), input_error);
}

TEST_CASE("to_text emits one packed row per line") {
    BoolMatrix m = testutil::matrix("10\n01");
    CHECK(to_text(m) == "10\n01\n");
    CHECK(parse_matrix_text(to_text(m)) == m);
}

TEST_CASE("transpose and complement behave on a non-square matrix") {
    BoolMatrix m = testutil::matrix("110\n001");
    BoolMatrix t = m.transposed();
    CHECK(t.rows() == 3);
    CHECK(t.cols() == 2);
    CHECK(t.get(0, 0));
    CHECK(t.get(2, 1));
    CHECK_FALSE(t.get(2, 0));
    BoolMatrix c = m.complemented();
    CHECK(c == testutil::matrix("001\n110"));
}
