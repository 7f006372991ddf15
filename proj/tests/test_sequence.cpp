#include <doctest.h>

#include <random>

#include "lispace/sequence.hpp"
#include "test_support.hpp"

using namespace lispace;
using namespace lispace::testing;

TEST_CASE("open_array basics") {
    CHECK(open_array({})->size() == 0);
    CHECK(open_array(sigma1())->size() == 9);
    CHECK(open_array({5, 5, 5})->size() == 3);
    CHECK(open_array({})->stats() == AccessStats{});
}

TEST_CASE("full forward scan visits everything in order") {
    auto src = open_array(sigma1());
    std::vector<Element> seen;
    src->scan_all(Direction::forward, [&](const Element& e) { seen.push_back(e); });
    REQUIRE(seen.size() == 9);
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(seen[i].position == i);
        CHECK(seen[i].value == sigma1()[i]);
    }
    CHECK(src->stats().reads == 9);
    CHECK(src->stats().forward_passes == 1);
    CHECK(src->stats().backward_passes == 0);
    CHECK(src->stats().reversals == 0);
    CHECK(src->stats().seek_cost == 8);
}

TEST_CASE("window filter keeps original positions") {
    auto src = open_array(sigma1());
    std::vector<Element> seen;
    src->scan(Direction::forward, ValueWindow::below(4), IndexRange::full(9),
              [&](const Element& e) { seen.push_back(e); });
    REQUIRE(seen.size() == 3);
    CHECK(seen[0] == Element{2, 0});
    CHECK(seen[1] == Element{1, 5});
    CHECK(seen[2] == Element{3, 8});
    // the pass still reads the whole range
    CHECK(src->stats().reads == 9);
}

TEST_CASE("backward scan over a subrange") {
    auto src = open_array(sigma1());
    std::vector<Element> seen;
    src->scan(Direction::backward, ValueWindow::above(4), IndexRange{3, 9},
              [&](const Element& e) { seen.push_back(e); });
    REQUIRE(seen.size() == 4);
    CHECK(seen[0] == Element{6, 7});
    CHECK(seen[1] == Element{7, 6});
    CHECK(seen[2] == Element{5, 4});
    CHECK(seen[3] == Element{9, 3});
    CHECK(src->stats().reads == 6);
    CHECK(src->stats().backward_passes == 1);
}

TEST_CASE("reversal counting") {
    auto src = open_array(sigma1());
    src->scan_all(Direction::forward, [](const Element&) {});
    src->scan_all(Direction::backward, [](const Element&) {});
    CHECK(src->stats().reversals == 1);
    // two forward passes in a row cost two direction changes
    src->reset_stats();
    src->scan_all(Direction::forward, [](const Element&) {});
    src->scan_all(Direction::forward, [](const Element&) {});
    CHECK(src->stats().reversals == 2);
}

TEST_CASE("empty range charges nothing") {
    auto src = open_array(sigma1());
    const auto delta = src->scan(Direction::forward, ValueWindow::all(),
                                 IndexRange{4, 4}, [](const Element&) {});
    CHECK(delta == AccessStats{});
}

TEST_CASE("early stop charges travel but no pass") {
    auto src = open_array(sigma1());
    std::size_t visits = 0;
    src->scan_all(Direction::forward, [&](const Element&) {
        ++visits;
        return visits < 3;
    });
    CHECK(visits == 3);
    CHECK(src->stats().reads == 3);
    CHECK(src->stats().forward_passes == 0);
}

TEST_CASE("scan rejects a range beyond the source") {
    auto src = open_array({1, 2, 3});
    CHECK_THROWS_AS(
        src->scan(Direction::forward, ValueWindow::all(), IndexRange{0, 4},
                  [](const Element&) {}),
        std::out_of_range);
}

TEST_CASE("conservation: reads equal range size regardless of filter") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        const auto values = random_values(rng, 1 + rng() % 80, -20, 20);
        auto src = open_array(values);
        const std::size_t a = rng() % (values.size() + 1);
        const std::size_t b = rng() % (values.size() + 1);
        const IndexRange range{std::min(a, b), std::max(a, b)};
        const ValueWindow window = ValueWindow::between(-5, 6);
        const auto delta =
            src->scan(Direction::forward, window, range, [](const Element&) {});
        CHECK(delta.reads == range.size());
    }
}

TEST_CASE("direction symmetry: backward visits reverse the forward order") {
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 50; ++rep) {
        const auto values = random_values(rng, 1 + rng() % 60, -9, 9);
        auto src = open_array(values);
        const ValueWindow window = ValueWindow::between(-4, 5);
        std::vector<Element> fwd, bwd;
        src->scan(Direction::forward, window, IndexRange::full(values.size()),
                  [&](const Element& e) { fwd.push_back(e); });
        src->scan(Direction::backward, window, IndexRange::full(values.size()),
                  [&](const Element& e) { bwd.push_back(e); });
        std::reverse(bwd.begin(), bwd.end());
        CHECK(fwd == bwd);
    }
}

TEST_CASE("filter composition equals intersected window") {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 50; ++rep) {
        const auto values = random_values(rng, 1 + rng() % 60, -30, 30);
        auto src = open_array(values);
        const ValueWindow w1 = ValueWindow::between(-25, 20);
        const ValueWindow w2 = ValueWindow::between(-10, 26);
        std::vector<Element> nested, intersected;
        src->scan(Direction::forward, w1, IndexRange::full(values.size()),
                  [&](const Element& e) {
                      if (w2.contains(e.value)) nested.push_back(e);
                  });
        src->scan(Direction::forward, w1.intersect(w2), IndexRange::full(values.size()),
                  [&](const Element& e) { intersected.push_back(e); });
        CHECK(nested == intersected);
    }
}

TEST_CASE("seek-cost bounds hold for multi-pass access") {
    std::mt19937_64 rng(10);
    auto src = open_array(random_values(rng, 200, -50, 50));
    for (int pass = 0; pass < 5; ++pass) {
        src->scan_all(pass % 2 == 0 ? Direction::forward : Direction::backward,
                      [](const Element&) {});
    }
    const AccessStats& st = src->stats();
    CHECK(st.seek_cost >= st.reads - st.reversals - 1);
    CHECK(st.seek_cost <= st.reads + st.reversals * src->size());
}
