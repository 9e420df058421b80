#pragma once

#include <cstdint>
#include <vector>
#include <stdexcept>
#include <bit>

namespace tsc {

// Dense GF(2) vector backed by 64-bit words.
struct BitVec {
    int n = 0;
    std::vector<uint64_t> w;

    BitVec() = default;
    explicit BitVec(int bits) : n(bits), w((bits + 63) / 64, 0) {}

    bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
    void clear(int i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void assign(int i, bool v) { v ? set(i) : clear(i); }
    void flip(int i) { w[i >> 6] ^= uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }

    bool zero() const {
        for (uint64_t x : w) if (x) return false;
        return true;
    }
    int popcount() const {
        int c = 0;
        for (uint64_t x : w) c += std::popcount(x);
        return c;
    }
    int lowest_set() const {
        for (size_t k = 0; k < w.size(); ++k)
            if (w[k]) return int(k) * 64 + std::countr_zero(w[k]);
        return -1;
    }
    // parity of <a,b>
    static bool dot(const BitVec& a, const BitVec& b) {
        uint64_t acc = 0;
        for (size_t k = 0; k < a.w.size(); ++k) acc ^= a.w[k] & b.w[k];
        return std::popcount(acc) & 1;
    }
    bool operator==(const BitVec& o) const { return n == o.n && w == o.w; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }
};

// Incrementally maintained reduced row-echelon basis of a GF(2) subspace.
// Rows are kept fully reduced against each other, so membership tests and
// the basis itself are canonical for a given set of inserted vectors.
struct GF2Space {
    int cols = 0;
    std::vector<BitVec> rows;    // sorted by pivot index
    std::vector<int> pivots;

    GF2Space() = default;
    explicit GF2Space(int c) : cols(c) {}

    int rank() const { return int(rows.size()); }

    // Reduce v against the basis in place; returns v's residue.
    BitVec reduce(BitVec v) const {
        for (size_t i = 0; i < rows.size(); ++i)
            if (v.get(pivots[i])) v ^= rows[i];
        return v;
    }
    bool contains(const BitVec& v) const { return reduce(v).zero(); }

    // Returns true if v was independent (basis grew).
    bool insert(const BitVec& v) {
        BitVec r = reduce(v);
        int p = r.lowest_set();
        if (p < 0) return false;
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i].get(p)) rows[i] ^= r;
        size_t at = 0;
        while (at < rows.size() && pivots[at] < p) ++at;
        rows.insert(rows.begin() + at, r);
        pivots.insert(pivots.begin() + at, p);
        return true;
    }
};

// Row reduction that tracks which input rows combine into each echelon row.
// Used to pull kernel elements (combinations summing to zero) out of a
// generating set.
struct TrackedRREF {
    int cols = 0;
    std::vector<BitVec> rows;    // echelon rows (may include zero residues)
    std::vector<BitVec> combos;  // combos[i] over the input rows gives rows[i]
};

inline TrackedRREF tracked_rref(const std::vector<BitVec>& input, int cols) {
    int m = int(input.size());
    std::vector<BitVec> prows, pcombos;  // pivot rows only
    std::vector<int> pivot_cols;
    std::vector<BitVec> zrows, zcombos;  // dependent (kernel) combinations
    for (int i = 0; i < m; ++i) {
        BitVec v = input[i];
        BitVec c(m);
        c.set(i);
        for (size_t k = 0; k < pivot_cols.size(); ++k) {
            if (v.get(pivot_cols[k])) {
                v ^= prows[k];
                c ^= pcombos[k];
            }
        }
        int p = v.lowest_set();
        if (p >= 0) {
            for (size_t k = 0; k < pivot_cols.size(); ++k) {
                if (prows[k].get(p)) {
                    prows[k] ^= v;
                    pcombos[k] ^= c;
                }
            }
            prows.push_back(v);
            pcombos.push_back(c);
            pivot_cols.push_back(p);
        } else {
            zrows.push_back(BitVec(cols));
            zcombos.push_back(c);
        }
    }
    TrackedRREF out;
    out.cols = cols;
    out.rows = std::move(prows);
    out.combos = std::move(pcombos);
    for (size_t i = 0; i < zrows.size(); ++i) {
        out.rows.push_back(std::move(zrows[i]));
        out.combos.push_back(std::move(zcombos[i]));
    }
    return out;
}

// Basis for {x : sum_i x_i * rows[i] = 0} (the left kernel of the row list).
inline std::vector<BitVec> left_kernel(const std::vector<BitVec>& rows, int cols) {
    TrackedRREF t = tracked_rref(rows, cols);
    std::vector<BitVec> ker;
    for (size_t i = 0; i < t.rows.size(); ++i)
        if (t.rows[i].zero() && !t.combos[i].zero()) ker.push_back(t.combos[i]);
    return ker;
}

// Solve sum_i x_i * rows[i] = target. Returns empty optional-style flag via bool.
struct GF2Solution {
    bool ok = false;
    BitVec combo;                 // over rows
    std::vector<BitVec> kernel;   // full solution set = combo + span(kernel)
};

inline GF2Solution gf2_solve(const std::vector<BitVec>& rows, const BitVec& target, int cols) {
    GF2Solution sol;
    std::vector<BitVec> aug = rows;
    aug.push_back(target);
    TrackedRREF t = tracked_rref(aug, cols);
    int m = int(rows.size());
    for (size_t i = 0; i < t.rows.size(); ++i) {
        if (!t.combos[i].get(m)) continue;
        if (t.rows[i].zero()) {
            sol.ok = true;
            sol.combo = BitVec(m);
            for (int j = 0; j < m; ++j) if (t.combos[i].get(j)) sol.combo.set(j);
        }
        // a combo using the target with nonzero residue says nothing useful
    }
    if (sol.ok) {
        for (size_t i = 0; i < t.rows.size(); ++i) {
            if (t.rows[i].zero() && !t.combos[i].get(m) && !t.combos[i].zero()) {
                BitVec k(m);
                for (int j = 0; j < m; ++j) if (t.combos[i].get(j)) k.set(j);
                sol.kernel.push_back(k);
            }
        }
    }
    return sol;
}

// Zassenhaus: basis of the intersection of two row spaces.
inline std::vector<BitVec> gf2_intersect(const std::vector<BitVec>& a,
                                         const std::vector<BitVec>& b, int cols) {
    GF2Space left(2 * cols);
    std::vector<BitVec> inter;
    auto widen = [&](const BitVec& v, bool dup) {
        BitVec w(2 * cols);
        for (int i = 0; i < cols; ++i)
            if (v.get(i)) { w.set(i); if (dup) w.set(cols + i); }
        return w;
    };
    std::vector<BitVec> stacked;
    for (const auto& v : a) stacked.push_back(widen(v, true));
    for (const auto& v : b) stacked.push_back(widen(v, false));
    TrackedRREF t = tracked_rref(stacked, 2 * cols);
    for (const auto& row : t.rows) {
        if (row.zero()) continue;
        bool left_zero = true;
        for (int i = 0; i < cols && left_zero; ++i) left_zero = !row.get(i);
        if (left_zero) {
            BitVec v(cols);
            for (int i = 0; i < cols; ++i) if (row.get(cols + i)) v.set(i);
            if (!v.zero()) inter.push_back(v);
        }
    }
    return inter;
}

}  // namespace tsc
