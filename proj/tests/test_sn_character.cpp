#include <doctest.h>

#include "injscheme/injection.hpp"
#include "injscheme/sn_character.hpp"

using namespace injscheme;

TEST_CASE("trivial and sign characters") {
    for (int n = 1; n <= 8; ++n) {
        SnCharacters sn(n);
        for (const auto& cls : sn.classes()) {
            CHECK(sn.chi(Partition::single_row(n), cls) == 1);
            int sign = ((n - cls.length()) % 2 == 0) ? 1 : -1;
            std::vector<int> column(static_cast<std::size_t>(n), 1);
            CHECK(sn.chi(Partition{column}, cls) == sign);
        }
    }
}

TEST_CASE("standard representation character is fix minus one") {
    // The permutation action on [n] splits off the trivial summand, so the
    // (n-1,1) character must equal the fixed-point count minus one.
    for (int n = 2; n <= 8; ++n) {
        SnCharacters sn(n);
        Partition std_rep{{n - 1, 1}};
        for (const auto& cls : sn.classes())
            CHECK(sn.chi(std_rep, cls) == Int(cls.count_part(1) - 1));
    }
    // includes the (2,1) on (3) value: 0 fixed points minus one
    CHECK(sn_character(Partition{{2, 1}}, Partition{{3}}) == -1);
}

TEST_CASE("degree equals the tableau count") {
    for (int n = 1; n <= 8; ++n) {
        SnCharacters sn(n);
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        Partition id_class{ones};
        for (const auto& lambda : enumerate_partitions(n))
            CHECK(sn.chi(lambda, id_class) == syt_count(lambda));
    }
}

TEST_CASE("row orthogonality with class sizes") {
    for (int n = 1; n <= 7; ++n) {
        SnCharacters sn(n);
        auto irreps = enumerate_partitions(n);
        Int order = factorial(n);
        Int size_sum = 0;
        for (const auto& cls : sn.classes()) size_sum += sn.class_size(cls);
        CHECK(size_sum == order);
        for (std::size_t a = 0; a < irreps.size(); ++a)
            for (std::size_t b = a; b < irreps.size(); ++b) {
                Int dot = 0;
                for (const auto& cls : sn.classes())
                    dot += sn.class_size(cls) * sn.chi(irreps[a], cls) * sn.chi(irreps[b], cls);
                CHECK(dot == (a == b ? order : Int(0)));
            }
    }
}

TEST_CASE("cycle type extraction") {
    CHECK(cycle_type({2, 3, 1, 5, 4}).parts() == std::vector<int>{3, 2});
    CHECK(cycle_type({1, 2, 3}).parts() == std::vector<int>{1, 1, 1});
    CHECK(cycle_type({}).parts().empty());

    // class sizes agree with brute-force type counting in S_5
    SnCharacters sn(5);
    std::vector<long> counts(sn.classes().size(), 0);
    std::vector<int> word{1, 2, 3, 4, 5};
    do {
        ++counts[static_cast<std::size_t>(sn.class_index(cycle_type(word)))];
    } while (std::next_permutation(word.begin(), word.end()));
    for (std::size_t i = 0; i < sn.classes().size(); ++i)
        CHECK(sn.class_size(sn.classes()[i]) == Int(counts[i]));
}
