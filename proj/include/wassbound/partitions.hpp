#pragma once

#include <vector>

namespace wassbound {

// Cells are numbered row-major: cell (r, c) has index r * cols + c, both 0-based.
struct IndexedTable {
    int rows = 1;
    int cols = 1;

    IndexedTable(int r, int c);
    int size() const { return rows * cols; }
    int row_of(int cell) const { return cell / cols; }
    int cell(int r, int c) const { return r * cols + c; }
};

struct Partition {
    std::vector<std::vector<int>> blocks;

    bool operator==(const Partition&) const = default;
};

struct PartitionFilter {
    int min_block_size = 1;
    bool even_blocks_only = false;
    bool pairs_only = false;
};

constexpr int kMaxPartitionSetSize = 12;

// Restricted-growth-string order; blocks ordered by smallest element.
std::vector<Partition> enumerate_partitions(int set_size);

bool is_indecomposable(const Partition& p, const IndexedTable& table);

std::vector<Partition> filter_partitions(const std::vector<Partition>& ps,
                                         const IndexedTable& table,
                                         const PartitionFilter& f);

// Enumerate + filter once per (rows, cols, filter); the returned reference stays valid
// for the lifetime of the program and may be read from any thread.
const std::vector<Partition>& cached_partitions(const IndexedTable& table,
                                                const PartitionFilter& f);

// All partitions of {0..q-1} with block sizes >= 2 and even (single-row table).
const std::vector<Partition>& even_partitions_of(int q);

}  // namespace wassbound
