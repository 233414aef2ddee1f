#include "hecke/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

Diagram Diagram::validate(std::vector<Row> rows) {
    if (rows.empty()) throw diagram_error("empty row list", 1);
    for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i].a > rows[i].b)
            throw diagram_error("row with a > b", static_cast<int>(i) + 1);
    for (size_t i = 0; i + 1 < rows.size(); ++i) {
        const Row& x = rows[i];
        const Row& y = rows[i + 1];
        bool ok = y.b <= x.b || (y.b == x.b + 1 && y.a <= x.a + 1);
        if (!ok)
            throw diagram_error("consecutive-row condition fails between rows " +
                                    std::to_string(i + 1) + " and " + std::to_string(i + 2),
                                static_cast<int>(i) + 2);
    }
    Diagram d;
    d.rows_ = std::move(rows);
    return d;
}

int Diagram::degree() const {
    int n = 0;
    for (const Row& r : rows_) n += r.b - r.a + 1;
    return n;
}

Filling fill_rows(std::span<const Row> rows) {
    Filling f;
    int k = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        f.row_first.push_back(k + 1);
        f.row_size.push_back(rows[i].b - rows[i].a + 1);
        for (int j = rows[i].a; j <= rows[i].b; ++j) {
            f.content.push_back(j - static_cast<int>(i) - 1);
            f.row_of.push_back(static_cast<int>(i) + 1);
            ++k;
        }
    }
    return f;
}

int Multisegment::degree() const {
    int n = 0;
    for (const auto& [seg, m] : mult) n += m * (seg.second - seg.first + 1);
    return n;
}

Diagram from_multisegment(const Multisegment& m) {
    std::vector<std::pair<int, int>> segs;
    for (const auto& [seg, cnt] : m.mult) {
        if (cnt <= 0) throw field_error("multisegment with non-positive multiplicity");
        if (seg.first > seg.second) throw field_error("segment with i > j");
        for (int t = 0; t < cnt; ++t) segs.push_back(seg);
    }
    if (segs.empty()) throw field_error("empty multisegment");
    // reverse lexicographic: endpoint descending, then start descending
    std::stable_sort(segs.begin(), segs.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second > y.second;
        return x.first > y.first;
    });
    std::vector<Row> rows;
    rows.reserve(segs.size());
    for (size_t k = 0; k < segs.size(); ++k)
        rows.push_back({segs[k].first + static_cast<int>(k) + 1,
                        segs[k].second + static_cast<int>(k) + 1});
    return Diagram::validate(std::move(rows));
}

Multisegment to_multisegment(const Diagram& d) {
    Multisegment m;
    const auto& rows = d.rows();
    for (size_t k = 0; k < rows.size(); ++k) {
        int shift = static_cast<int>(k) + 1;
        ++m.mult[{rows[k].a - shift, rows[k].b - shift}];
    }
    return m;
}

bool rows_parallel(const Row& x, int i, const Row& y, int j) {
    return x.a - i == y.a - j && x.b - i == y.b - j;
}

ParallelData parallel_data(std::span<const Row> rows) {
    ParallelData pd;
    int r = static_cast<int>(rows.size());
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            if (rows_parallel(rows[i - 1], i, rows[j - 1], j)) {
                pd.row_pairs.emplace_back(i, j);
                ++pd.p_m[rows[i - 1].b - rows[i - 1].a + 1];
                ++pd.p_lambda;
            }
    Filling f = fill_rows(rows);
    int n = f.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (f.content[i - 1] == f.content[j - 1]) ++pd.d_lambda;
    return pd;
}

std::vector<Pair> SpecialOrder::pairs() const {
    std::vector<Pair> v;
    v.reserve(entries.size());
    for (const auto& e : entries) v.push_back(e.pair);
    return v;
}

SpecialOrder special_order(const Diagram& d) {
    const auto& rows = d.rows();
    Filling f = fill_rows(d);
    int r = d.row_count();

    SpecialOrder so;
    // blocks in the order P_11 < P_12 < P_22 < ... < P_1r < ... < P_rr
    for (int l = 1; l <= r; ++l) {
        for (int k = 1; k <= l; ++k) {
            bool same_diag = rows[k - 1].b - k == rows[l - 1].b - l;
            std::vector<Pair> block;
            for (int i = f.row_first[k - 1]; i < f.row_first[k - 1] + f.row_size[k - 1]; ++i)
                for (int j = f.row_first[l - 1]; j < f.row_first[l - 1] + f.row_size[l - 1]; ++j)
                    if (i < j) block.push_back({i, j});
            if (same_diag) {
                std::sort(block.begin(), block.end(), [](const Pair& x, const Pair& y) {
                    return x.i != y.i ? x.i < y.i : x.j < y.j;
                });
            } else {
                std::sort(block.begin(), block.end(), [](const Pair& x, const Pair& y) {
                    return x.j != y.j ? x.j < y.j : x.i < y.i;
                });
            }
            for (const Pair& p : block) {
                OrderEntry e;
                e.pair = p;
                e.row_i = k;
                e.row_j = l;
                e.gen_index = p.j - p.i;
                e.e_sign = same_diag ? -1 : +1;
                e.singular = f.content[p.i - 1] == f.content[p.j - 1];
                so.entries.push_back(e);
                so.block_of.emplace_back(k, l);
            }
        }
    }

    // singular pairs enter R unless both members are leftmost boxes of two
    // parallel rows
    for (auto& e : so.entries) {
        if (!e.singular) continue;
        bool leftmost_pair = e.row_i != e.row_j &&
                             e.pair.i == f.row_first[e.row_i - 1] &&
                             e.pair.j == f.row_first[e.row_j - 1] &&
                             rows_parallel(rows[e.row_i - 1], e.row_i, rows[e.row_j - 1], e.row_j);
        e.in_R = !leftmost_pair;
    }

    // fused partners: (i, j-1) immediately before when e = -, (i+1, j)
    // immediately after when e = +
    std::vector<int> consumed(so.entries.size(), 0);
    for (size_t p = 0; p < so.entries.size(); ++p) {
        OrderEntry& e = so.entries[p];
        if (!e.in_R) continue;
        Pair want = e.e_sign < 0 ? Pair{e.pair.i, e.pair.j - 1} : Pair{e.pair.i + 1, e.pair.j};
        size_t at = e.e_sign < 0 ? p - 1 : p + 1;
        if (e.e_sign < 0 && p == 0)
            throw field_error("fused partner missing before first position");
        if (at >= so.entries.size() || !(so.entries[at].pair == want) ||
            so.entries[at].singular || consumed[at] || consumed[p])
            throw field_error("fused partner not adjacent or not available at pair (" +
                              std::to_string(e.pair.i) + "," + std::to_string(e.pair.j) + ")");
        e.partner_pos = static_cast<int>(at);
        consumed[at] = 1;
        consumed[p] = 1;
    }
    return so;
}

WLambda w_lambda(const Diagram& d) {
    const auto& rows = d.rows();
    Filling f = fill_rows(d);
    SpecialOrder so = special_order(d);

    // h per row: entries in earlier rows parallel to it
    std::vector<int> h(rows.size(), 0);
    for (size_t k = 0; k < rows.size(); ++k)
        for (size_t p = 0; p < k; ++p)
            if (rows_parallel(rows[p], static_cast<int>(p) + 1, rows[k], static_cast<int>(k) + 1))
                h[k] += f.row_size[p];

    WLambda wl;
    for (const auto& e : so.entries) {
        if (e.row_i == e.row_j) {
            wl.word.push_back(e.gen_index + h[e.row_i - 1]);
        } else if (rows_parallel(rows[e.row_i - 1], e.row_i, rows[e.row_j - 1], e.row_j)) {
            // contributes nothing
        } else {
            wl.word.push_back(e.gen_index);
        }
    }
    wl.perm = word_to_perm(wl.word, d.degree());
    if (wl.perm.length() != static_cast<int>(wl.word.size()))
        throw field_error("w_lambda word is not reduced");
    return wl;
}

std::vector<Row> bar_diagram(std::span<const Row> rows) {
    int r = static_cast<int>(rows.size());
    std::vector<Row> out(rows.size());
    for (int i = 1; i <= r; ++i)
        out[i - 1] = {r - rows[r - i].b + 1, r - rows[r - i].a + 1};
    return out;
}

namespace {

void enumerate_rec(int remaining, int window, const std::optional<Row>& prev,
                   std::vector<Row>& acc, std::vector<Diagram>& out) {
    if (remaining == 0) {
        out.push_back(Diagram::validate(acc));
        return;
    }
    for (int a = 1; a <= window; ++a) {
        for (int b = a; b <= window && b - a + 1 <= remaining; ++b) {
            if (prev) {
                bool ok = b <= prev->b || (b == prev->b + 1 && a <= prev->a + 1);
                if (!ok) continue;
            }
            acc.push_back({a, b});
            enumerate_rec(remaining - (b - a + 1), window, Row{a, b}, acc, out);
            acc.pop_back();
        }
    }
}

} // namespace

std::vector<Diagram> enumerate_diagrams(int degree, int window) {
    if (degree < 1 || window < 1) return {};
    std::vector<Diagram> out;
    std::vector<Row> acc;
    enumerate_rec(degree, window, std::nullopt, acc, out);
    return out;
}

namespace {

void skip_ws(const std::string& s, size_t& p) {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
}

int parse_int(const std::string& s, size_t& p) {
    skip_ws(s, p);
    size_t start = p;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == start || (p == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw field_error("expected integer at position " + std::to_string(start) + " in '" + s + "'");
    return std::stoi(s.substr(start, p - start));
}

void expect(const std::string& s, size_t& p, char c) {
    skip_ws(s, p);
    if (p >= s.size() || s[p] != c)
        throw field_error(std::string("expected '") + c + "' in '" + s + "'");
    ++p;
}

std::pair<int, int> parse_segment(const std::string& s, size_t& p) {
    expect(s, p, '[');
    int a = parse_int(s, p);
    expect(s, p, ',');
    int b = parse_int(s, p);
    expect(s, p, ']');
    return {a, b};
}

} // namespace

std::vector<Row> parse_rows(const std::string& text) {
    std::vector<Row> rows;
    size_t p = 0;
    while (true) {
        auto [a, b] = parse_segment(text, p);
        rows.push_back({a, b});
        skip_ws(text, p);
        if (p >= text.size()) break;
        expect(text, p, ';');
    }
    return rows;
}

Diagram parse_diagram(const std::string& text) { return Diagram::validate(parse_rows(text)); }

Multisegment parse_multisegment(const std::string& text) {
    Multisegment m;
    size_t p = 0;
    while (true) {
        skip_ws(text, p);
        int mult = 1;
        if (p < text.size() && text[p] != '[') {
            mult = parse_int(text, p);
            expect(text, p, '*');
        }
        auto [a, b] = parse_segment(text, p);
        if (a > b) throw field_error("segment with i > j in '" + text + "'");
        if (mult <= 0) throw field_error("non-positive multiplicity in '" + text + "'");
        m.mult[{a, b}] += mult;
        skip_ws(text, p);
        if (p >= text.size()) break;
        expect(text, p, '+');
    }
    return m;
}

std::string format_rows(std::span<const Row> rows) {
    std::string s;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) s += ";";
        s += "[" + std::to_string(rows[i].a) + "," + std::to_string(rows[i].b) + "]";
    }
    return s;
}

std::string format_multisegment(const Multisegment& m) {
    // print in the order used by the bijection: endpoint then start descending
    std::vector<std::pair<std::pair<int, int>, int>> items(m.mult.begin(), m.mult.end());
    std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
        if (x.first.second != y.first.second) return x.first.second > y.first.second;
        return x.first.first > y.first.first;
    });
    std::string s;
    for (const auto& [seg, cnt] : items) {
        if (!s.empty()) s += "+";
        if (cnt != 1) s += std::to_string(cnt) + "*";
        s += "[" + std::to_string(seg.first) + "," + std::to_string(seg.second) + "]";
    }
    return s;
}

std::string ascii_diagram(std::span<const Row> rows) {
    Filling f = fill_rows(rows);
    int amin = rows[0].a;
    for (const Row& r : rows) amin = std::min(amin, r.a);
    int width = 2;
    if (f.n() >= 100) width = 3;
    std::ostringstream os;
    int k = 1;
    for (size_t i = 0; i < rows.size(); ++i) {
        for (int pad = 0; pad < rows[i].a - amin; ++pad)
            os << std::string(static_cast<size_t>(width) + 2, ' ');
        for (int j = rows[i].a; j <= rows[i].b; ++j, ++k) {
            std::string num = std::to_string(k);
            while (static_cast<int>(num.size()) < width) num.insert(num.begin(), ' ');
            os << "[" << num << "]";
        }
        os << "\n";
    }
    return os.str();
}

} // namespace hecke
