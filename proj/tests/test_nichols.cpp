#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hopfbench/nichols.hpp"

using namespace hb;

namespace {

Vec e2(int m, int a, int b) {
    Vec v(m * m, 0);
    v[a * m + b] = 1;
    return v;
}

Matrix column_braid(const Field& F, int m, const std::vector<Vec>& cols) {
    Matrix c(m * m, m * m);
    for (int j = 0; j < m * m; ++j) c.set_column(j, cols[j]);
    (void)F;
    return c;
}

}  // namespace

TEST_SUITE("nichols") {
    TEST_CASE("braidings from formulas") {
        Field F2 = Field::make(2, 1);
        Matrix q(1, 1);
        q(0, 0) = 1;
        BraidedSpace d = diagonal(F2, q);
        CHECK(d.c == Matrix::identity(1));

        BraidedSpace J = jordan(F2, 1, 2);
        CHECK(matvec(F2, J.c, e2(2, 1, 0)) == e2(2, 0, 1));
        CHECK(matvec(F2, J.c, e2(2, 1, 1)) == vadd(F2, e2(2, 1, 1), e2(2, 0, 1)));
        CHECK(check_braid_equation(J));
        CHECK(check_braid_equation(parse_braided("jordan:2,2", Field::make(3, 1))));
    }

    TEST_CASE("braid equation on diagonal and Yetter-Drinfeld spaces") {
        Field F4 = Field::make(2, 2), F3 = Field::make(3, 1);
        Matrix q(2, 2);
        q(0, 0) = F4.t();
        q(0, 1) = 1;
        q(1, 0) = F4.add(F4.t(), 1);
        q(1, 1) = 1;
        CHECK(check_braid_equation(diagonal(F4, q)));
        CHECK(check_braid_equation(from_yd(yd_cyclic(F3, {{1, 2}, {0, 1}}, 3))));
        CHECK(check_braid_equation(from_yd(yd_bashev(F4, 1, 0, F4.t()))));
        CHECK(check_braid_equation(parse_braided("yd-cyclic:1,2,2;0,1,2", Field::make(2, 1))));
    }

    TEST_CASE("braid equation agrees with a direct Kronecker check") {
        Field F2 = Field::make(2, 1);
        std::mt19937_64 rng(17);
        Matrix I = Matrix::identity(2);
        int braids = 0, others = 0;
        for (int trial = 0; trial < 300; ++trial) {
            Matrix c(4, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) c(i, j) = rng() & 1;
            if (rank(F2, c) < 4) continue;
            Matrix c1 = kron(F2, c, I), c2 = kron(F2, I, c);
            bool direct = matmul(F2, c1, matmul(F2, c2, c1)) == matmul(F2, c2, matmul(F2, c1, c2));
            CHECK(check_braid_equation({F2, 2, c}) == direct);
            (direct ? braids : others)++;
        }
        CHECK(braids > 0);
        CHECK(others > 0);

        // flip followed by a transvection mixing the two tensor factors
        std::vector<Vec> cols;
        for (int j = 0; j < 4; ++j) cols.push_back(e2(2, j % 2, j / 2));
        cols[1] = vadd(F2, cols[1], e2(2, 0, 0));
        BraidedSpace V{F2, 2, column_braid(F2, 2, cols)};
        CHECK(rank(F2, V.c) == 4);
        CHECK_FALSE(check_braid_equation(V));
    }

    TEST_CASE("Yetter-Drinfeld module validation") {
        Field F2 = Field::make(2, 1);
        AbelianYD M = yd_cyclic(F2, {{1, 2}}, 2);
        CHECK_NOTHROW(M.validate());
        M.action[0] = Matrix::identity(2);
        M.action[0](0, 1) = 1;
        M.action[0](1, 0) = 1;
        CHECK_THROWS(M.validate());
    }

    TEST_CASE("reduced words and their lifts") {
        Field F2 = Field::make(2, 1), F3 = Field::make(3, 1);
        std::vector<int> perm(4);
        std::iota(perm.begin(), perm.end(), 0);
        int inversions_checked = 0;
        do {
            int inv = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) inv += perm[i] > perm[j];
            auto w = reduced_word(perm), v = reduced_word_alt(perm);
            CHECK(static_cast<int>(w.size()) == inv);
            CHECK(static_cast<int>(v.size()) == inv);
            for (const BraidedSpace& V : {jordan(F2, 1, 2), parse_braided("jordan:1,2", F3)})
                CHECK(braid_lift(V, 4, w) == braid_lift(V, 4, v));
            ++inversions_checked;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(inversions_checked == 24);
    }

    TEST_CASE("braid relations of the generators") {
        Field F3 = Field::make(3, 1);
        BraidedSpace V = from_yd(yd_cyclic(F3, {{1, 2}}, 3));
        for (int i = 1; i < 3; ++i) {
            Matrix a = braid_generator(V, 4, i), b = braid_generator(V, 4, i + 1);
            CHECK(matmul(F3, a, matmul(F3, b, a)) == matmul(F3, b, matmul(F3, a, b)));
        }
        Matrix c1 = braid_generator(V, 4, 1), c3 = braid_generator(V, 4, 3);
        CHECK(matmul(F3, c1, c3) == matmul(F3, c3, c1));
        Vec v(16, 0);
        for (int i = 0; i < 16; ++i) v[i] = F3.from_int(i * 7 + 1);
        CHECK(apply_ci(V, 4, 2, v) == matvec(F3, braid_generator(V, 4, 2), v));
    }

    TEST_CASE("quantum symmetrizers") {
        Field F2 = Field::make(2, 1), F3 = Field::make(3, 1);
        BraidedSpace T = trivial_braiding(F2, 1);
        CHECK(quantum_symmetrizer(T, 1) == Matrix::identity(1));
        CHECK(rank(F2, quantum_symmetrizer(T, 2)) == 0);
        BraidedSpace J = jordan(F2, 1, 2);
        CHECK(quantum_symmetrizer(J, 2) == add(F2, Matrix::identity(4), J.c));
        for (const BraidedSpace& V : {J, parse_braided("jordan:1,2", F3), from_yd(yd_cyclic(F2, {{1, 2}, {0, 1}}, 2))})
            for (int n = 1; n <= 4; ++n) CHECK(quantum_symmetrizer(V, n) == quantum_symmetrizer_explicit(V, n));
        CHECK_THROWS(quantum_symmetrizer(trivial_braiding(F2, 3), 9));
    }

    TEST_CASE("Nichols algebra dimensions") {
        Field F2 = Field::make(2, 1), F3 = Field::make(3, 1);
        auto one = nichols_dims(trivial_braiding(F2, 1));
        CHECK(one.closed);
        CHECK(one.total == 2);
        CHECK(one.graded[0] == 1);
        CHECK(one.graded[1] == 1);
        CHECK(nichols_dims(trivial_braiding(F2, 2)).total == 4);
        CHECK(nichols_dims(trivial_braiding(F2, 3)).total == 8);
        CHECK(nichols_dims(trivial_braiding(F3, 1)).total == 3);
        auto J = nichols_dims(jordan(F2, 1, 2));
        CHECK(J.closed);
        CHECK(J.total == 16);
        CHECK(nichols_dims(parse_braided("jordan:1,2", F3)).total == 9);
        Matrix q(1, 1);
        q(0, 0) = F3.neg(1);
        CHECK(nichols_dims(diagonal(F3, q)).total == 2);
    }
}
