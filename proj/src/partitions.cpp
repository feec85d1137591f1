#include "wassbound/partitions.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace wassbound {

IndexedTable::IndexedTable(int r, int c) : rows(r), cols(c) {
    if (r < 1 || c < 1) throw std::invalid_argument("IndexedTable: rows and cols must be positive");
    if (r * c > kMaxPartitionSetSize)
        throw std::invalid_argument("IndexedTable: more than 12 cells");
}

std::vector<Partition> enumerate_partitions(int set_size) {
    if (set_size < 1 || set_size > kMaxPartitionSetSize)
        throw std::invalid_argument("enumerate_partitions: set_size must be in 1..12, got " +
                                    std::to_string(set_size));
    const int n = set_size;
    std::vector<int> a(n, 0);    // restricted growth string
    std::vector<int> mx(n, 0);   // mx[i] = max(a[0..i-1]), mx[0] = -1 conceptually
    std::vector<Partition> out;

    while (true) {
        int nblocks = 0;
        for (int i = 0; i < n; ++i) nblocks = std::max(nblocks, a[i] + 1);
        Partition p;
        p.blocks.assign(nblocks, {});
        for (int i = 0; i < n; ++i) p.blocks[a[i]].push_back(i);
        out.push_back(std::move(p));

        // next string: rightmost position that can still grow
        int i = n - 1;
        while (i > 0 && a[i] > mx[i]) --i;
        if (i == 0) break;
        ++a[i];
        for (int j = i + 1; j < n; ++j) {
            a[j] = 0;
            mx[j] = std::max(mx[j - 1], a[j - 1]);
        }
    }
    return out;
}

namespace {

void check_cover(const Partition& p, const IndexedTable& table) {
    std::vector<char> seen(table.size(), 0);
    int count = 0;
    for (const auto& b : p.blocks) {
        if (b.empty()) throw std::invalid_argument("partition has an empty block");
        for (int c : b) {
            if (c < 0 || c >= table.size() || seen[c])
                throw std::invalid_argument("partition does not cover the table");
            seen[c] = 1;
            ++count;
        }
    }
    if (count != table.size()) throw std::invalid_argument("partition does not cover the table");
}

int find(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

bool passes(const Partition& p, const PartitionFilter& f) {
    for (const auto& b : p.blocks) {
        const int s = static_cast<int>(b.size());
        if (s < f.min_block_size) return false;
        if (f.even_blocks_only && s % 2 != 0) return false;
        if (f.pairs_only && s != 2) return false;
    }
    return true;
}

}  // namespace

bool is_indecomposable(const Partition& p, const IndexedTable& table) {
    check_cover(p, table);
    std::vector<int> parent(table.rows);
    std::iota(parent.begin(), parent.end(), 0);
    int components = table.rows;
    for (const auto& b : p.blocks) {
        const int r0 = find(parent, table.row_of(b.front()));
        for (std::size_t i = 1; i < b.size(); ++i) {
            int ri = find(parent, table.row_of(b[i]));
            int r = find(parent, r0);
            if (ri != r) {
                parent[ri] = r;
                --components;
            }
        }
    }
    return components == 1;
}

std::vector<Partition> filter_partitions(const std::vector<Partition>& ps,
                                         const IndexedTable& table,
                                         const PartitionFilter& f) {
    if (f.pairs_only && f.min_block_size > 2)
        throw std::invalid_argument("pairs_only requires min_block_size <= 2");
    std::vector<Partition> out;
    for (const auto& p : ps)
        if (is_indecomposable(p, table) && passes(p, f)) out.push_back(p);
    return out;
}

const std::vector<Partition>& cached_partitions(const IndexedTable& table,
                                                const PartitionFilter& f) {
    using Key = std::tuple<int, int, int, bool, bool>;
    static std::mutex mu;
    static std::map<Key, std::unique_ptr<const std::vector<Partition>>> cache;

    const Key key{table.rows, table.cols, f.min_block_size, f.even_blocks_only, f.pairs_only};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    auto list = std::make_unique<const std::vector<Partition>>(
        filter_partitions(enumerate_partitions(table.size()), table, f));
    auto& ref = *list;
    cache.emplace(key, std::move(list));
    return ref;
}

const std::vector<Partition>& even_partitions_of(int q) {
    PartitionFilter f;
    f.min_block_size = 2;
    f.even_blocks_only = true;
    return cached_partitions(IndexedTable(1, q), f);
}

}  // namespace wassbound
