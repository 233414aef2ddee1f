#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hecke/coxeter.hpp"

namespace hecke {

struct Row {
    int a = 0;
    int b = 0;
    friend bool operator==(const Row&, const Row&) = default;
    friend auto operator<=>(const Row&, const Row&) = default;
};

// Row list satisfying the consecutive-row condition: for every i,
// either b_{i+1} <= b_i, or b_{i+1} = b_i + 1 and a_{i+1} <= a_i + 1.
// Construct through validate().
class Diagram {
public:
    static Diagram validate(std::vector<Row> rows);

    const std::vector<Row>& rows() const { return rows_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    int degree() const;

    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend auto operator<=>(const Diagram&, const Diagram&) = default;

private:
    std::vector<Row> rows_;
};

// Reading-order filling data: content[k-1] is the content of the box
// numbered k, row_of[k-1] its (1-based) row. Defined for any row list.
struct Filling {
    std::vector<int> content;
    std::vector<int> row_of;
    std::vector<int> row_first;   // first fill number of each row
    std::vector<int> row_size;

    int n() const { return static_cast<int>(content.size()); }
};

Filling fill_rows(std::span<const Row> rows);
inline Filling fill_rows(const Diagram& d) { return fill_rows(std::span(d.rows())); }

// Formal multiset of integer segments [i, j], i <= j, with positive
// multiplicities.
struct Multisegment {
    std::map<std::pair<int, int>, int> mult;

    int degree() const;
    friend bool operator==(const Multisegment&, const Multisegment&) = default;
};

// Mutually inverse bijections between multisegments and diagrams: segments
// are sorted by endpoint descending, then start descending, and row k is
// the k-th segment shifted by +k.
Diagram from_multisegment(const Multisegment& m);
Multisegment to_multisegment(const Diagram& d);

bool rows_parallel(const Row& x, int i, const Row& y, int j);

struct ParallelData {
    std::vector<std::pair<int, int>> row_pairs;  // (i, j), i < j, 1-based
    std::map<int, int> p_m;                      // length -> pair count
    int p_lambda = 0;
    int d_lambda = 0;                            // number of singular pairs
};

ParallelData parallel_data(std::span<const Row> rows);
inline ParallelData parallel_data(const Diagram& d) { return parallel_data(std::span(d.rows())); }

struct OrderEntry {
    Pair pair;
    int row_i = 0;       // row of fill number i
    int row_j = 0;       // row of fill number j
    int gen_index = 0;   // j - i
    int e_sign = 0;      // -1 or +1
    bool singular = false;
    bool in_R = false;
    int partner_pos = -1;  // position of the fused partner, -1 if none
};

// The special order on all pairs, with the fusion annotations attached.
struct SpecialOrder {
    std::vector<OrderEntry> entries;
    std::vector<std::pair<int, int>> block_of;  // per entry: (row_i, row_j)

    std::vector<Pair> pairs() const;
};

SpecialOrder special_order(const Diagram& d);

struct WLambda {
    std::vector<int> word;
    Perm perm;
};

// The reduced word read off the special order: s_{j-i} for pairs in
// non-parallel row pairs, nothing for distinct parallel rows, s_{j-i+h}
// within a row with h entries in earlier parallel rows.
WLambda w_lambda(const Diagram& d);

// Reflected row list [r-b+1, r-a+1] in reversed row order; not necessarily
// a valid diagram. Its contents satisfy c'_k = -c_{n-k+1}.
std::vector<Row> bar_diagram(std::span<const Row> rows);
inline std::vector<Row> bar_diagram(const Diagram& d) { return bar_diagram(std::span(d.rows())); }

// All valid diagrams of the exact degree whose coordinates lie in
// [1, window], in a deterministic order.
std::vector<Diagram> enumerate_diagrams(int degree, int window);

// Text grammar: rows "[a,b]" joined by ';'. Multisegments: "m*[i,j]"
// terms joined by '+', the multiplicity optional.
std::vector<Row> parse_rows(const std::string& text);
Diagram parse_diagram(const std::string& text);
Multisegment parse_multisegment(const std::string& text);
std::string format_rows(std::span<const Row> rows);
inline std::string format_diagram(const Diagram& d) { return format_rows(std::span(d.rows())); }
std::string format_multisegment(const Multisegment& m);

// Box picture with reading-order fill numbers.
std::string ascii_diagram(std::span<const Row> rows);

} // namespace hecke
