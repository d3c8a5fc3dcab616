// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "uhs/heap.hpp"

using uhs::Heap;
using uhs::HeapOrder;
using uhs::OpCounters;
using Item = oracle::Item;

namespace {

std::vector<Item> items(std::initializer_list<std::int64_t> keys) { return oracle::tag(std::vector(keys)); }

Heap<Item> built(std::vector<Item> v, HeapOrder order = HeapOrder::MaxAtRoot)
{
    OpCounters c;
    return Heap<Item>::build(std::move(v), order, c);
}

std::vector<std::int64_t> live_keys(const Heap<Item>& h)
{
    std::vector<std::int64_t> out;
    for (const auto& e : h.live())
        out.push_back(e.key);
    return out;
}

} // namespace

TEST_CASE("heap.index.examples")
{
    CHECK(uhs::left_child(0) == 1);
    CHECK(uhs::right_child(0) == 2);
    CHECK(uhs::parent_index(1) == 0);
    CHECK(uhs::parent_index(2) == 0);
    CHECK(uhs::left_child(5) == 11);
    CHECK(uhs::parent_index(11) == 5);
    CHECK_THROWS_AS(uhs::parent_index(0), uhs::DomainError);
}

TEST_CASE("heap.index.parent_inverts_children")
{
    for (std::size_t i = 0; i <= 1000; ++i) {
        REQUIRE(uhs::parent_index(uhs::left_child(i)) == i);
        REQUIRE(uhs::parent_index(uhs::right_child(i)) == i);
    }
}

TEST_CASE("heap.node_height")
{
    CHECK(uhs::node_height(0, 1).value == 0);
    CHECK(uhs::node_height(0, 7).value == 2);
    CHECK_THROWS_AS(uhs::node_height(7, 7), uhs::DomainError);

    for (std::size_t n = 1; n <= 4096; ++n) {
        std::size_t sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto h = uhs::node_height(i, n).value;
            if (n <= 300)
                REQUIRE(static_cast<long long>(h) == oracle::height(i, n));
            sum += h;
        }
        REQUIRE(sum <= n - 1);
    }
}

TEST_CASE("heap.is_heap.examples")
{
    const auto good = items({9, 5, 7});
    const auto bad = items({1, 9, 7});
    CHECK(uhs::is_heap(std::span(good), 3, HeapOrder::MaxAtRoot));
    CHECK_FALSE(uhs::is_heap(std::span(bad), 3, HeapOrder::MaxAtRoot));
    CHECK(uhs::is_heap(std::span(bad), 1, HeapOrder::MaxAtRoot));
    CHECK_THROWS_AS(uhs::is_heap(std::span(good), 4, HeapOrder::MaxAtRoot), uhs::DomainError);
}

TEST_CASE("heap.is_heap.all_permutations_of_six")
{
    std::vector<std::int64_t> keys{1, 2, 3, 4, 5, 6};
    do {
        for (std::int64_t dup : {0, 1}) {
            auto k = keys;
            if (dup)
                k[5] = k[0];
            const auto v = oracle::tag(k);
            for (std::size_t size = 0; size <= v.size(); ++size)
                for (auto order : {HeapOrder::MaxAtRoot, HeapOrder::MinAtRoot})
                    REQUIRE(uhs::is_heap(std::span(v), size, order) ==
                            oracle::heap_by_ancestors(v, size, order == HeapOrder::MaxAtRoot));
        }
    } while (std::next_permutation(keys.begin(), keys.end()));
}

TEST_CASE("heap.sift_down.examples")
{
    OpCounters c;
    auto a = items({9, 5, 7});
    uhs::sift_down(std::span(a), 3, 0, HeapOrder::MaxAtRoot, c);
    CHECK(oracle::keys_of(a) == std::vector<std::int64_t>{9, 5, 7});
    CHECK(c.swaps == 0);

    auto b = items({1, 9, 7});
    uhs::sift_down(std::span(b), 3, 0, HeapOrder::MaxAtRoot, c);
    CHECK(oracle::keys_of(b) == std::vector<std::int64_t>{9, 1, 7});

    auto d = items({2, 9, 7, 5, 4});
    uhs::sift_down(std::span(d), 5, 0, HeapOrder::MaxAtRoot, c);
    CHECK(oracle::keys_of(d) == std::vector<std::int64_t>{9, 5, 7, 2, 4});
    CHECK(oracle::heap_by_ancestors(d, 5, true));

    CHECK_THROWS_AS(uhs::sift_down(std::span(d), 5, 5, HeapOrder::MaxAtRoot, c), uhs::IndexOutOfHeap);
    CHECK_THROWS_AS(uhs::sift_down(std::span(d), 6, 0, HeapOrder::MaxAtRoot, c), uhs::DomainError);
}

TEST_CASE("heap.sift_down.ties")
{
    OpCounters c;
    auto equal = items({4, 4, 4});
    uhs::sift_down(std::span(equal), 3, 0, HeapOrder::MaxAtRoot, c);
    CHECK(equal == items({4, 4, 4}));

    auto twins = items({1, 6, 6});
    uhs::sift_down(std::span(twins), 3, 0, HeapOrder::MaxAtRoot, c);
    CHECK(twins[0].payload == 1);
}

TEST_CASE("heap.sift_down.comparison_bound")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + rng() % 300;
        auto v = oracle::tag(oracle::random_keys(n, 1000, rng));
        OpCounters build;
        uhs::build_heap(std::span(v), HeapOrder::MaxAtRoot, build);
        const std::size_t i = rng() % n;
        v[i].key = -1 - static_cast<std::int64_t>(rng() % 100);
        OpCounters c;
        uhs::sift_down(std::span(v), n, i, HeapOrder::MaxAtRoot, c);
        REQUIRE(c.comparisons <= 2 * uhs::node_height(i, n).value);
        REQUIRE(oracle::heap_by_ancestors(v, n, true));
    }
}

TEST_CASE("heap.build.examples")
{
    OpCounters c;
    auto empty = Heap<Item>::build({}, HeapOrder::MaxAtRoot, c);
    CHECK(empty.size() == 0);
    CHECK(c.comparisons == 0);

    auto one = Heap<Item>::build(items({42}), HeapOrder::MaxAtRoot, c);
    CHECK(live_keys(one) == std::vector<std::int64_t>{42});
    CHECK(c.comparisons == 0);

    auto five = Heap<Item>::build(items({1, 2, 3, 4, 5}), HeapOrder::MaxAtRoot, c);
    CHECK(live_keys(five) == std::vector<std::int64_t>{5, 4, 3, 1, 2});
    CHECK(c.comparisons == 6);
    CHECK(five.valid());
}

TEST_CASE("heap.build.linear_bound")
{
    std::mt19937_64 rng(5);
    std::vector<std::size_t> sizes;
    for (std::size_t n = 1; n <= 2048; ++n)
        sizes.push_back(n);
    for (std::size_t n = 4096; n <= (std::size_t{1} << 20); n *= 2) {
        sizes.push_back(n - 1);
        sizes.push_back(n);
        sizes.push_back(n + 1);
    }
    for (std::size_t n : sizes) {
        for (bool shape : {false, true}) {
            std::vector<std::int64_t> keys(n);
            if (shape)
                std::iota(keys.begin(), keys.end(), 0);
            else
                keys = oracle::random_keys(n, static_cast<std::int64_t>(n), rng);
            auto v = oracle::tag(keys);
            OpCounters c;
            uhs::build_heap(std::span(v), HeapOrder::MaxAtRoot, c);
            REQUIRE(c.comparisons <= 2 * (n - 1));
            if (n <= 4096)
                REQUIRE(oracle::heap_by_ancestors(v, n, true));
            else
                REQUIRE(uhs::is_heap(std::span(v), n, HeapOrder::MaxAtRoot));
        }
    }
}

TEST_CASE("heap.build.min_is_mirror_of_max")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const auto keys = oracle::random_keys(rng() % 200, 50, rng);
        auto min_side = oracle::tag(keys);
        auto max_side = oracle::tag(keys);
        for (auto& e : max_side)
            e.key = -e.key;
        OpCounters a, b;
        uhs::build_heap(std::span(min_side), HeapOrder::MinAtRoot, a);
        uhs::build_heap(std::span(max_side), HeapOrder::MaxAtRoot, b);
        for (auto& e : max_side)
            e.key = -e.key;
        REQUIRE(min_side == max_side);
        REQUIRE(a == b);
    }
}

TEST_CASE("heap.push.examples")
{
    OpCounters c;
    Heap<Item> h;
    h.push({5, 0}, c);
    CHECK(live_keys(h) == std::vector<std::int64_t>{5});

    auto g = built(items({9, 5, 7}));
    g.push({10, 3}, c);
    CHECK(g.peek().key == 10);
    CHECK(g.valid());

    std::mt19937_64 rng(1);
    Heap<Item> r;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        r.push({static_cast<std::int64_t>(rng() % 500), i}, c);
        std::vector<Item> snapshot(r.live().begin(), r.live().end());
        REQUIRE(oracle::heap_by_ancestors(snapshot, snapshot.size(), true));
    }
    CHECK(c.aux_peak_slots == 0);
}

TEST_CASE("heap.pop_root.examples")
{
    OpCounters c;
    auto h = built(items({3, 1, 2}));
    CHECK(h.pop_root(c).key == 3);
    auto rest = live_keys(h);
    std::sort(rest.begin(), rest.end());
    CHECK(rest == std::vector<std::int64_t>{1, 2});
    CHECK(h.valid());

    auto single = built(items({7}));
    CHECK(single.pop_root(c).key == 7);
    CHECK(single.size() == 0);
    CHECK_THROWS_AS(single.pop_root(c), uhs::EmptyHeap);
    CHECK_THROWS_AS(single.peek(), uhs::EmptyHeap);
}

TEST_CASE("heap.pop_root.drains_into_sorted_array")
{
    std::mt19937_64 rng(9);
    const auto keys = oracle::random_keys(300, 40, rng);
    auto h = built(oracle::tag(keys));
    OpCounters c;
    while (!h.empty())
        h.pop_root(c);
    auto expected = keys;
    std::sort(expected.begin(), expected.end());
    CHECK(oracle::keys_of(std::vector<Item>(h.elements().begin(), h.elements().end())) == expected);
}

TEST_CASE("heap.peek")
{
    auto h = built(items({9, 5, 7}));
    CHECK(h.peek().key == 9);
    const auto before = std::vector<Item>(h.elements().begin(), h.elements().end());
    CHECK(h.peek() == h.peek());
    CHECK(std::vector<Item>(h.elements().begin(), h.elements().end()) == before);

    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; ++t) {
        const auto keys = oracle::random_keys(1 + rng() % 100, 1000, rng);
        CHECK(built(oracle::tag(keys)).peek().key == *std::max_element(keys.begin(), keys.end()));
        CHECK(built(oracle::tag(keys), HeapOrder::MinAtRoot).peek().key ==
              *std::min_element(keys.begin(), keys.end()));
    }
}

TEST_CASE("heap.remove_at.examples")
{
    OpCounters c;
    auto a = built(items({8, 3, 6, 1, 2, 5}));
    auto b = a;
    CHECK(a.remove_at(0, c) == b.pop_root(c));
    CHECK(std::vector<Item>(a.elements().begin(), a.elements().end()) ==
          std::vector<Item>(b.elements().begin(), b.elements().end()));

    auto leaf = built(items({8, 3, 6, 1, 2, 5}));
    OpCounters quiet;
    CHECK(leaf.remove_at(5, quiet).key == 5);
    CHECK(quiet.comparisons == 0);
    CHECK(quiet.swaps == 0);
    CHECK(leaf.valid());

    CHECK_THROWS_AS(leaf.remove_at(5, c), uhs::IndexOutOfHeap);
}

TEST_CASE("heap.remove_at.sifts_up")
{
    // Removing 1 brings 6 up from the other subtree; it must rise past 2.
    OpCounters c;
    Heap<Item> h = built(items({10, 2, 9, 1, 0, 8, 6}));
    REQUIRE(h.valid());
    CHECK(h.remove_at(3, c).key == 1);
    CHECK(h.valid());
    CHECK(live_keys(h)[1] == 6);
}

TEST_CASE("heap.operations.match_multiset_oracle")
{
    std::mt19937_64 rng(21);
    for (auto order : {HeapOrder::MaxAtRoot, HeapOrder::MinAtRoot}) {
        for (int run = 0; run < 8; ++run) {
            const std::size_t n0 = run == 0 ? 0 : rng() % 4097;
            const auto keys = oracle::random_keys(n0, 200, rng);
            OpCounters c;
            auto h = Heap<Item>::build(oracle::tag(keys), order, c);
            std::multiset<std::int64_t> model(keys.begin(), keys.end());
            REQUIRE(h.valid());
            for (std::uint64_t step = 0; step < 250; ++step) {
                const auto roll = rng() % 3;
                if (roll == 0 || model.empty()) {
                    const auto k = static_cast<std::int64_t>(rng() % 200);
                    h.push({k, step}, c);
                    model.insert(k);
                } else if (roll == 1) {
                    const auto top = h.pop_root(c).key;
                    const auto want = order == HeapOrder::MaxAtRoot ? *model.rbegin() : *model.begin();
                    REQUIRE(top == want);
                    model.erase(model.find(top));
                } else {
                    const auto gone = h.remove_at(rng() % h.size(), c).key;
                    REQUIRE(model.count(gone) > 0);
                    model.erase(model.find(gone));
                }
                std::vector<Item> snapshot(h.live().begin(), h.live().end());
                REQUIRE(oracle::heap_by_ancestors(snapshot, snapshot.size(), order == HeapOrder::MaxAtRoot));
                auto live = oracle::keys_of(snapshot);
                std::sort(live.begin(), live.end());
                REQUIRE(live == std::vector<std::int64_t>(model.begin(), model.end()));
            }
            REQUIRE(c.aux_peak_slots == 0);
        }
    }
}
