#ifndef SYZ_LINALG_HPP
#define SYZ_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <tuple>
#include <utility>
#include <vector>

#include "syz/field.hpp"

namespace syz {

template <class F>
using SparseVec = std::vector<std::pair<std::uint32_t, typename F::Elem>>;

// Coordinate-form matrix stored by columns; each column sorted by row, no zeros.
template <class F>
struct SparseMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<SparseVec<F>> columns;

    SparseMatrix() = default;
    SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

    std::size_t nnz() const {
        std::size_t n = 0;
        for (auto& c : columns) n += c.size();
        return n;
    }
    std::vector<std::tuple<std::uint32_t, std::uint32_t, typename F::Elem>> entries() const {
        std::vector<std::tuple<std::uint32_t, std::uint32_t, typename F::Elem>> out;
        for (std::uint32_t c = 0; c < cols; ++c)
            for (auto& [r, v] : columns[c]) out.emplace_back(r, c, v);
        return out;
    }
};

// sorts by index, merges duplicates, drops zeros
template <class F>
void canonicalize(const F& f, SparseVec<F>& v) {
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < v.size();) {
        std::uint32_t idx = v[i].first;
        typename F::Elem acc = v[i].second;
        std::size_t j = i + 1;
        for (; j < v.size() && v[j].first == idx; ++j) acc = f.add(acc, v[j].second);
        if (!f.isZero(acc)) v[w++] = {idx, acc};
        i = j;
    }
    v.resize(w);
}

// A*B for matrices with matching inner extent
template <class F>
SparseMatrix<F> multiply(const F& f, const SparseMatrix<F>& A, const SparseMatrix<F>& B) {
    SparseMatrix<F> C(A.rows, B.cols);
    for (std::size_t j = 0; j < B.cols; ++j) {
        SparseVec<F> acc;
        for (auto& [k, bv] : B.columns[j])
            for (auto& [i, av] : A.columns[k]) acc.emplace_back(i, f.mul(av, bv));
        canonicalize(f, acc);
        C.columns[j] = std::move(acc);
    }
    return C;
}

// Semi-echelon basis of a growing subspace of F^width.
// Leads are the smallest index; vectors are reduced against stored pivots on insertion.
template <class F>
class Echelon {
public:
    using Elem = typename F::Elem;

    Echelon(const F& f, std::size_t width) : f_(f), width_(width), pivotOf_(width, -1), scratch_(width, f.zero()), touched_(width, 0) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t storedNnz() const { return nnz_; }
    std::size_t width() const { return width_; }
    const std::vector<SparseVec<F>>& rows() const { return rows_; }
    const std::vector<std::int64_t>& pivotOf() const { return pivotOf_; }

    // true if v was independent of the stored span (and then is stored)
    bool insert(const SparseVec<F>& v) { return reduce(v, true, nullptr); }
    bool inSpan(const SparseVec<F>& v) { return !reduce(v, false, nullptr); }
    // reduced remainder (empty iff in span), nothing stored
    SparseVec<F> remainder(const SparseVec<F>& v) {
        SparseVec<F> rem;
        reduce(v, false, &rem);
        return rem;
    }

    // turns the semi-echelon form into reduced row echelon form (pivot entries 1, zero above and below)
    void backSubstitute() {
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows_[a][0].first > rows_[b][0].first; });
        for (std::size_t r : order) {
            // rows with larger leads are already fully reduced
            SparseVec<F> v = rows_[r];
            Elem lead = v[0].second;
            std::uint32_t c0 = v[0].first;
            load(v);
            std::vector<std::uint32_t> keep;
            SparseVec<F> out;
            while (!heap_.empty()) {
                std::uint32_t c = heap_.top();
                heap_.pop();
                if (touched_[c] != 1) continue;
                touched_[c] = 2;
                Elem a = scratch_[c];
                if (f_.isZero(a)) continue;
                std::int64_t pr = pivotOf_[c];
                if (pr >= 0 && c != c0) {
                    for (auto& [j, val] : rows_[pr]) {
                        scratch_[j] = f_.subMul(scratch_[j], a, val);
                        push(j);
                    }
                    continue;
                }
                keep.push_back(c);
            }
            Elem il = f_.inv(lead);
            std::sort(keep.begin(), keep.end());
            for (auto c : keep) {
                if (!f_.isZero(scratch_[c])) out.emplace_back(c, f_.mul(scratch_[c], il));
            }
            clearScratch();
            nnz_ += out.size();
            nnz_ -= rows_[r].size();
            rows_[r] = std::move(out);
        }
    }

private:
    void push(std::uint32_t c) {
        if (!touched_[c]) {
            touched_[c] = 1;
            heap_.push(c);
            dirty_.push_back(c);
        } else if (touched_[c] == 2) {
            touched_[c] = 1;
            heap_.push(c);
        }
    }
    void load(const SparseVec<F>& v) {
        for (auto& [c, val] : v) {
            scratch_[c] = val;
            push(c);
        }
    }
    void clearScratch() {
        for (auto c : dirty_) {
            scratch_[c] = f_.zero();
            touched_[c] = 0;
        }
        dirty_.clear();
        while (!heap_.empty()) heap_.pop();
    }

    bool reduce(const SparseVec<F>& v, bool store, SparseVec<F>* remOut) {
        load(v);
        bool independent = false;
        SparseVec<F> rem;
        while (!heap_.empty()) {
            std::uint32_t c = heap_.top();
            heap_.pop();
            if (touched_[c] != 1) continue;
            touched_[c] = 2;
            Elem a = scratch_[c];
            if (f_.isZero(a)) continue;
            std::int64_t pr = pivotOf_[c];
            if (pr >= 0) {
                // pivot rows have leading coefficient 1
                for (auto& [j, val] : rows_[pr]) {
                    scratch_[j] = f_.subMul(scratch_[j], a, val);
                    push(j);
                }
                touched_[c] = 2;
                continue;
            }
            independent = true;
            if (!store && !remOut) break;
            // collect the tail of the vector
            rem.emplace_back(c, a);
            while (!heap_.empty()) {
                std::uint32_t c2 = heap_.top();
                heap_.pop();
                if (touched_[c2] != 1) continue;
                touched_[c2] = 2;
                if (!f_.isZero(scratch_[c2])) rem.emplace_back(c2, scratch_[c2]);
            }
            break;
        }
        clearScratch();
        if (independent && store) {
            Elem il = f_.inv(rem[0].second);
            for (auto& e : rem) e.second = f_.mul(e.second, il);
            pivotOf_[rem[0].first] = (std::int64_t)rows_.size();
            nnz_ += rem.size();
            rows_.push_back(std::move(rem));
        } else if (remOut) {
            *remOut = std::move(rem);
        }
        return independent;
    }

    F f_;
    std::size_t width_;
    std::vector<std::int64_t> pivotOf_;
    std::vector<SparseVec<F>> rows_;
    std::vector<Elem> scratch_;
    std::vector<std::uint8_t> touched_;
    std::vector<std::uint32_t> dirty_;
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<std::uint32_t>> heap_;
    std::size_t nnz_ = 0;
};

// Dense Gaussian elimination; returns rank. m is row-major rows x cols and is destroyed.
template <class F>
std::size_t denseRank(const F& f, std::vector<typename F::Elem>& m, std::size_t rows, std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!f.isZero(m[i * cols + c])) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
        auto il = f.inv(m[r * cols + c]);
        for (std::size_t j = c; j < cols; ++j) m[r * cols + j] = f.mul(m[r * cols + j], il);
        for (std::size_t i = r + 1; i < rows; ++i) {
            auto a = m[i * cols + c];
            if (f.isZero(a)) continue;
            for (std::size_t j = c; j < cols; ++j) m[i * cols + j] = f.subMul(m[i * cols + j], a, m[r * cols + j]);
        }
        ++r;
    }
    return r;
}

struct RankStats {
    bool usedDense = false;
    std::size_t fill = 0;
};

// Rank of a column-stored matrix. Rows are relabelled so sparse rows lead;
// switches to dense elimination when fill passes 5x the input nonzeros.
template <class F>
std::size_t matrixRank(const F& f, const SparseMatrix<F>& A, RankStats* stats = nullptr) {
    if (A.rows == 0 || A.cols == 0) return 0;
    std::size_t nnz = A.nnz();
    if (nnz == 0) return 0;
    const std::size_t denseCap = std::size_t(1) << 24;
    if (A.rows <= 64 || A.cols <= 64 || A.rows * A.cols <= 4096) {
        if (A.rows * A.cols <= denseCap) {
            std::vector<typename F::Elem> m(A.rows * A.cols, f.zero());
            for (std::size_t c = 0; c < A.cols; ++c)
                for (auto& [r, v] : A.columns[c]) m[c * A.rows + r] = v;
            if (stats) stats->usedDense = true;
            return denseRank(f, m, A.cols, A.rows);
        }
    }
    // relabel rows by ascending count
    std::vector<std::uint32_t> count(A.rows, 0);
    for (auto& col : A.columns)
        for (auto& e : col) ++count[e.first];
    std::vector<std::uint32_t> order(A.rows);
    for (std::uint32_t i = 0; i < A.rows; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return count[a] < count[b]; });
    std::vector<std::uint32_t> relabel(A.rows);
    for (std::uint32_t i = 0; i < A.rows; ++i) relabel[order[i]] = i;
    // insert sparse columns first
    std::vector<std::uint32_t> corder(A.cols);
    for (std::uint32_t i = 0; i < A.cols; ++i) corder[i] = i;
    std::stable_sort(corder.begin(), corder.end(), [&](std::uint32_t a, std::uint32_t b) { return A.columns[a].size() < A.columns[b].size(); });

    Echelon<F> ech(f, A.rows);
    std::size_t done = 0;
    for (; done < A.cols; ++done) {
        const auto& col = A.columns[corder[done]];
        SparseVec<F> v;
        v.reserve(col.size());
        for (auto& [r, val] : col) v.emplace_back(relabel[r], val);
        std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
        ech.insert(v);
        if (ech.rank() == A.rows) break;
        if (ech.storedNnz() > 5 * nnz && ech.storedNnz() > 200000) {
            std::size_t remaining = A.cols - done - 1;
            std::size_t dr = ech.rank() + remaining;
            if (dr * A.rows <= denseCap) {
                std::vector<typename F::Elem> m(dr * A.rows, f.zero());
                std::size_t i = 0;
                for (auto& row : ech.rows()) {
                    for (auto& [c, val] : row) m[i * A.rows + c] = val;
                    ++i;
                }
                for (std::size_t t = done + 1; t < A.cols; ++t, ++i)
                    for (auto& [r, val] : A.columns[corder[t]]) m[i * A.rows + relabel[r]] = val;
                if (stats) {
                    stats->usedDense = true;
                    stats->fill = ech.storedNnz();
                }
                return denseRank(f, m, dr, A.rows);
            }
        }
    }
    if (stats) stats->fill = ech.storedNnz();
    return ech.rank();
}

}  // namespace syz

#endif
