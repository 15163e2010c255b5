#include "imsep/binary_shift.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <stdexcept>

namespace imsep {

namespace {

// Index of the power-of-two interval [2^i, 2^{i+1}-1] containing y >= 1.
int interval_of(int y) {
    assert(y >= 1);
    return std::bit_width(static_cast<unsigned>(y)) - 1;
}

// Every edge of the shift graph is {2y+c mod 2^b, y} for some witness y and
// c in {0,1}. The part an edge lands in is decided by its smallest witness:
// the two hub witnesses 0 and 2^{b-1} go to part 0 (their endpoints sit in
// every bag of every certificate anyway), lower-half witnesses split by the
// parity of their interval, and upper-half witnesses mirror through
// y -> 2^b - y before splitting.
int part_of_witness(int y, int b) {
    int n = 1 << b;
    int half = n >> 1;
    if (y == 0 || y == half) return 0;
    if (y < half) return interval_of(y) % 2 == 0 ? 0 : 1;
    return interval_of(n - y) % 2 == 0 ? 2 : 3;
}

// Bag for witness y inside the chunk pairing intervals i and i+1. Holds the
// witness, its spine successor, both shifted images, the next shifted image
// when it stays inside the chunk, and the boundary vertex 2^{i+1}.
std::vector<int> chunk_bag(int y, int i) {
    std::vector<int> bag = {y, y + 1, 2 * y, 2 * y + 1, 1 << (i + 1)};
    if (2 * y + 2 < (1 << (i + 2))) bag.push_back(2 * y + 2);
    return bag;
}

struct Chunk {
    int start = 0, end = 0;  // spine span the bags take care of
    std::vector<std::vector<int>> bags;
};

// Certificate for one part: chunk bags where the part has edges, single-edge
// walk bags along the rest of the spine, then v_0 and v_{2^{b-1}} joined to
// every bag and every vertex's spine successor lifted in. The lift is what
// covers the 2y+1-type edges and the spine edges next to the hubs.
std::vector<std::vector<int>> build_certificate(int part, int b) {
    int n = 1 << b;
    int half = n >> 1;
    std::vector<Chunk> chunks;
    if (part < 2) {
        for (int i = part; i <= b - 2; i += 2) {
            Chunk ch;
            ch.start = 1 << i;
            ch.end = (1 << (i + 2)) - 1;
            for (int y = 1 << i; y < 1 << (i + 1); ++y) ch.bags.push_back(chunk_bag(y, i));
            chunks.push_back(ch);
        }
    } else {
        // Mirror image of part-2's construction: larger intervals now sit at
        // the low end of the spine, and each chunk's bag order reverses.
        for (int i = b - 2; i >= 0; --i) {
            if (i % 2 != part - 2) continue;
            Chunk ch;
            ch.start = n - (1 << (i + 2)) + 1;
            ch.end = n - (1 << i);
            for (int y = (1 << (i + 1)) - 1; y >= 1 << i; --y) {
                std::vector<int> bag = chunk_bag(y, i);
                for (int& z : bag) z = n - z;
                ch.bags.push_back(bag);
            }
            chunks.push_back(ch);
        }
    }

    std::vector<std::vector<int>> bags;
    int cursor = 0;
    for (const Chunk& ch : chunks) {
        for (int j = cursor; j < ch.start; ++j) bags.push_back({j, j + 1});
        for (const auto& bag : ch.bags) bags.push_back(bag);
        cursor = ch.end;
    }
    for (int j = cursor; j < n - 1; ++j) bags.push_back({j, j + 1});

    for (auto& bag : bags) {
        bag.push_back(0);
        bag.push_back(half);
        std::vector<int> lifted = bag;
        for (int z : bag)
            if (z + 1 < n) lifted.push_back(z + 1);
        std::sort(lifted.begin(), lifted.end());
        lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
        bag = std::move(lifted);
    }
    return bags;
}

}  // namespace

Graph bs_generate(int b) {
    if (b < 1 || b > 20) throw std::invalid_argument("bs_generate: b must be in [1, 20]");
    int n = 1 << b;
    Graph g(n);
    for (int y = 0; y < n; ++y)
        for (int c = 0; c < 2; ++c) {
            int x = (2 * y + c) & (n - 1);
            if (x != y) g.add_edge(x, y);
        }
    return g;
}

ShiftPartition bs_partition(int b) {
    if (b < 2 || b > 20) throw std::invalid_argument("bs_partition: b must be in [2, 20]");
    int n = 1 << b;
    ShiftPartition sp;
    sp.b = b;

    std::map<std::pair<int, int>, int> owner;
    for (int y = 0; y < n; ++y)
        for (int c = 0; c < 2; ++c) {
            int x = (2 * y + c) & (n - 1);
            if (x == y) continue;
            std::pair<int, int> e{std::min(x, y), std::max(x, y)};
            if (owner.emplace(e, part_of_witness(y, b)).second)
                sp.parts[owner[e]].push_back(e);
        }
    for (auto& part : sp.parts) std::sort(part.begin(), part.end());

    for (int p = 0; p < 4; ++p) sp.certificates[p] = build_certificate(p, b);
    return sp;
}

Graph bs_part_with_spine(int b, const std::vector<std::pair<int, int>>& part) {
    int n = 1 << b;
    Graph g(n);
    for (int j = 0; j + 1 < n; ++j) g.add_edge(j, j + 1);
    for (auto [u, v] : part) g.add_edge(u, v);
    return g;
}

VertexFlow bs_canonical_flow(int b) {
    if (b < 1 || b > 12) throw std::invalid_argument("bs_canonical_flow: b must be in [1, 12]");
    int n = 1 << b;
    Graph g = bs_generate(b);
    VertexFlow f;
    f.paths.reserve(static_cast<std::size_t>(n) * n);
    std::vector<int> windows;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) {
                f.paths.push_back({x, y, 1.0, {x}});
                continue;
            }
            long long s = (static_cast<long long>(x) << b) | y;
            windows.clear();
            for (int i = 0; i <= b; ++i)
                windows.push_back(static_cast<int>((s >> (b - i)) & (n - 1)));
            std::sort(windows.begin(), windows.end());
            windows.erase(std::unique(windows.begin(), windows.end()), windows.end());

            // Consecutive windows differ by one shift, so the induced
            // subgraph is connected and holds both endpoints.
            Graph sub = g.induced(windows);
            auto at = [&](int v) {
                return static_cast<int>(std::lower_bound(windows.begin(), windows.end(), v) -
                                        windows.begin());
            };
            std::vector<int> local = bfs_path(sub, at(x), at(y));
            assert(!local.empty());
            std::vector<int> path;
            path.reserve(local.size());
            for (int v : local) path.push_back(windows[v]);
            f.paths.push_back({x, y, 1.0, std::move(path)});
        }
    return f;
}

}  // namespace imsep
