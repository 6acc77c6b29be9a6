#include <doctest.h>

#include <map>
#include <set>

#include "injscheme/rsk.hpp"

using namespace injscheme;

namespace {

std::vector<int> shape_parts(const StandardYoungTableau& t) { return t.shape().parts(); }

}  // namespace

TEST_CASE("rsk on the twelve injections of S_{2,4}") {
    // (word, P shape, Q shape) in lexicographic word order
    const std::vector<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>> golden = {
        {{1, 2}, {4}, {2}},       {{1, 3}, {3, 1}, {2}},    {{1, 4}, {3, 1}, {2}},
        {{2, 1}, {3, 1}, {1, 1}}, {{2, 3}, {3, 1}, {2}},    {{2, 4}, {2, 2}, {2}},
        {{3, 1}, {3, 1}, {1, 1}}, {{3, 2}, {2, 1, 1}, {1, 1}}, {{3, 4}, {2, 2}, {2}},
        {{4, 1}, {3, 1}, {1, 1}}, {{4, 2}, {2, 1, 1}, {1, 1}}, {{4, 3}, {2, 1, 1}, {1, 1}},
    };
    auto all = enumerate_injections(2, 4);
    REQUIRE(all.size() == golden.size());
    for (std::size_t i = 0; i < golden.size(); ++i) {
        const auto& [word, p_shape, q_shape] = golden[i];
        CHECK(all[i].word() == word);
        auto pair = rsk(all[i]);
        CHECK(shape_parts(pair.p) == p_shape);
        CHECK(shape_parts(pair.q) == q_shape);
        CHECK(is_horizontal_strip(pair.p.shape(), pair.q.shape()));
    }

    // spot-check full fillings against the worked example list
    auto p13 = rsk(Injection({1, 3}, 4));
    CHECK(p13.p.rows() == std::vector<std::vector<int>>{{1, 2, 4}, {3}});
    auto p23 = rsk(Injection({2, 3}, 4));
    CHECK(p23.p.rows() == std::vector<std::vector<int>>{{1, 3, 4}, {2}});
    CHECK(p23.q.rows() == std::vector<std::vector<int>>{{1, 2}});
    auto p32 = rsk(Injection({3, 2}, 4));
    CHECK(p32.p.rows() == std::vector<std::vector<int>>{{1, 4}, {2}, {3}});
    CHECK(p32.q.rows() == std::vector<std::vector<int>>{{1}, {2}});
    auto p24 = rsk(Injection({2, 4}, 4));
    CHECK(p24.p.rows() == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
}

TEST_CASE("rsk round trips and counts") {
    for (int n = 0; n <= 7; ++n)
        for (int k = 0; k <= n; ++k) {
            auto all = enumerate_injections(k, n);
            std::set<std::pair<std::string, std::string>> images;
            std::map<std::pair<std::vector<int>, std::vector<int>>, long> per_shape;
            for (const auto& sigma : all) {
                auto pair = rsk(sigma);
                CHECK(is_horizontal_strip(pair.p.shape(), pair.q.shape()));
                CHECK(pair.p.size() == n);
                CHECK(pair.q.size() == k);
                images.insert({pair.p.to_string(), pair.q.to_string()});
                ++per_shape[{pair.p.shape().parts(), pair.q.shape().parts()}];
                CHECK(rsk_inverse(pair.p, pair.q) == sigma);
            }
            CHECK(images.size() == all.size());  // injectivity
            // class sizes per shape pair: f^mu * f^lambda, over all strip pairs
            auto pairs = strip_pairs(k, n);
            CHECK(per_shape.size() == pairs.size());
            for (const auto& [mu, lambda] : pairs) {
                Int expected = syt_count(mu) * syt_count(lambda);
                CHECK(Int(per_shape.at({lambda.parts(), mu.parts()})) == expected);
            }
        }
}

TEST_CASE("rsk at k = n reduces to Robinson-Schensted") {
    auto all = enumerate_injections(3, 3);
    std::set<std::pair<std::string, std::string>> images;
    for (const auto& sigma : all) {
        auto pair = rsk(sigma);
        CHECK(pair.p.shape() == pair.q.shape());
        images.insert({pair.p.to_string(), pair.q.to_string()});
        CHECK(rsk_inverse(pair.p, pair.q) == sigma);
    }
    CHECK(images.size() == 6);
    auto id = rsk(Injection::identity(3, 3));
    CHECK(id.p.rows() == std::vector<std::vector<int>>{{1, 2, 3}});
}

TEST_CASE("rsk inverse rejects malformed pairs") {
    StandardYoungTableau p(Partition{{2, 2}}, {{1, 2}, {3, 4}});
    StandardYoungTableau q(Partition{{1}}, {{1}});
    CHECK_THROWS_AS(rsk_inverse(p, q), std::invalid_argument);  // (2,2)/(1) not a strip
}
