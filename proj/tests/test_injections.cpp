#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "injscheme/cycle_path.hpp"
#include "injscheme/injection.hpp"

using namespace injscheme;

namespace {

std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

CyclePathType make_type(std::vector<int> cycles, std::vector<int> paths, int zero_paths) {
    return {Partition{std::move(cycles)}, Partition{std::move(paths)}, zero_paths};
}

}  // namespace

TEST_CASE("injection basics") {
    CHECK(Injection::identity(3, 5).word() == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(Injection({1, 1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(Injection({0, 2}, 4), std::invalid_argument);
    CHECK_THROWS_AS(Injection({5}, 4), std::invalid_argument);

    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            auto all = enumerate_injections(k, n);
            CHECK(Int(static_cast<long>(all.size())) == injection_count(k, n));
            std::set<std::vector<int>> distinct;
            for (const auto& s : all) distinct.insert(s.word());
            CHECK(distinct.size() == all.size());
        }
}

TEST_CASE("hamming distance") {
    Injection a({1, 2, 3, 4}, 4), b({3, 2, 4, 1}, 4);
    CHECK(hamming_distance(a, b) == 3);
    CHECK(hamming_distance(a, a) == 0);
    CHECK(hamming_distance(Injection({1, 2}, 4), Injection({3, 4}, 4)) == 2);
    CHECK_THROWS_AS(hamming_distance(Injection({1}, 3), Injection({1}, 4)), std::invalid_argument);

    // metric properties on all of S_{2,4}
    auto pts = enumerate_injections(2, 4);
    for (const auto& x : pts)
        for (const auto& y : pts) {
            CHECK(hamming_distance(x, y) == hamming_distance(y, x));
            CHECK((hamming_distance(x, y) == 0) == (x == y));
            for (const auto& z : pts)
                CHECK(hamming_distance(x, z) <= hamming_distance(x, y) + hamming_distance(y, z));
        }
}

TEST_CASE("classification of pairs matches the worked examples") {
    Injection id48 = Injection::identity(4, 8);
    CHECK(classify_pair(Injection({1, 2, 3, 4}, 8), id48) == make_type({1, 1, 1, 1}, {}, 4));
    CHECK(classify_pair(Injection({2, 1, 3, 5}, 8), id48) == make_type({2, 1}, {1}, 3));
    CHECK(classify_pair(Injection({5, 6, 7, 8}, 8), id48) == make_type({}, {1, 1, 1, 1}, 0));
}

TEST_CASE("classification is symmetric and action invariant") {
    std::mt19937 rng(20240811);
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k <= std::min(n, 5); ++k) {
            auto all = enumerate_injections(k, n);
            std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
            for (int rep = 0; rep < 500; ++rep) {
                const Injection& a = all[pick(rng)];
                const Injection& b = all[pick(rng)];
                auto t = classify_pair(a, b);
                CHECK(t == classify_pair(b, a));
                CHECK(t.valid_for(k, n));
                auto tau = random_permutation(k, rng);
                auto pi = random_permutation(n, rng);
                CHECK(t == classify_pair(a.acted_by(tau, pi), b.acted_by(tau, pi)));
            }
        }
}

TEST_CASE("class enumeration") {
    CHECK(enumerate_classes(2, 3).size() == 4);
    CHECK(enumerate_classes(2, 3).size() == strip_pairs(2, 3).size());

    auto c24 = enumerate_classes(2, 4);
    REQUIRE(c24.size() == 5);
    CHECK(c24[0] == make_type({1, 1}, {}, 2));  // identity class first
    CHECK(c24[1] == make_type({1}, {1}, 1));
    CHECK(c24[2] == make_type({2}, {}, 2));
    CHECK(c24[3] == make_type({}, {2}, 1));
    CHECK(c24[4] == make_type({}, {1, 1}, 0));
    for (std::size_t j = 1; j < c24.size(); ++j)
        CHECK(class_distance(c24[j - 1], 2) <= class_distance(c24[j], 2));

    // k = n: classes are the conjugacy classes of S_n
    for (int n = 1; n <= 6; ++n) {
        auto classes = enumerate_classes(n, n);
        CHECK(classes.size() == enumerate_partitions(n).size());
        for (const auto& cls : classes) {
            CHECK(cls.paths.empty());
            CHECK(cls.zero_paths == 0);
            CHECK(cls.cycles.weight() == n);
        }
    }

    for (int n = 0; n <= 9; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(enumerate_classes(k, n).size() == strip_pairs(k, n).size());

    // brute force: the set of realized types at (2,4) is exactly the class list
    auto pts = enumerate_injections(2, 4);
    std::set<std::string> seen;
    for (const auto& s : pts) seen.insert(classify_pair(s, Injection::identity(2, 4)).to_string());
    std::set<std::string> expected;
    for (const auto& cls : c24) expected.insert(cls.to_string());
    CHECK(seen == expected);
}

TEST_CASE("sphere sizes") {
    CHECK(sphere_size(make_type({1, 1, 1, 1}, {}, 4), 4, 8) == 1);
    CHECK(sphere_size(make_type({2, 1}, {1}, 3), 4, 8) == 48);

    // brute force per class over all of S_{4,8} restricted by identity
    {
        Injection id = Injection::identity(4, 8);
        std::map<std::string, long> counts;
        for (const auto& s : enumerate_injections(4, 8))
            ++counts[classify_pair(s, id).to_string()];
        CHECK(counts.at("(2,1|0^3,1)") == 48);
        long total = 0;
        for (const auto& [key, c] : counts) total += c;
        CHECK(Int(total) == injection_count(4, 8));
    }

    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            Injection id = Injection::identity(k, n);
            std::map<std::string, long> counts;
            for (const auto& s : enumerate_injections(k, n))
                ++counts[classify_pair(s, id).to_string()];
            Int total = 0;
            for (const auto& cls : enumerate_classes(k, n)) {
                Int size = sphere_size(cls, k, n);
                auto it = counts.find(cls.to_string());
                CHECK(it != counts.end());
                CHECK(size == Int(it->second));
                total += size;
            }
            CHECK(total == injection_count(k, n));
        }
}

TEST_CASE("class distance") {
    CHECK(class_distance(make_type({1, 1, 1, 1}, {}, 4), 4) == 0);
    CHECK(class_distance(make_type({2, 1}, {1}, 3), 4) == 3);
    CHECK(class_distance(make_type({}, {1, 1, 1, 1}, 0), 4) == 4);

    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= std::min(n, 5); ++k) {
            Injection id = Injection::identity(k, n);
            for (const auto& s : enumerate_injections(k, n))
                CHECK(class_distance(classify_pair(s, id), k) == hamming_distance(s, id));
        }
}

TEST_CASE("class representative lies in its sphere") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= std::min(n, 6); ++k) {
            Injection id = Injection::identity(k, n);
            for (const auto& cls : enumerate_classes(k, n))
                CHECK(classify_pair(class_representative(cls, k, n), id) == cls);
        }
}
