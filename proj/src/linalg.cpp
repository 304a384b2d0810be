#include "whitealg/linalg.hpp"

#include <algorithm>

namespace whitealg {

int rank_destructive(QMatrix& m) {
    const int nr = m.rows(), nc = m.cols();
    int rank = 0;
    for (int col = 0; col < nc && rank < nr; ++col) {
        int piv = -1;
        for (int r = rank; r < nr; ++r) {
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = col; c < nc; ++c) std::swap(m.at(piv, c), m.at(rank, c));
        const Rational pv = m.at(rank, col);
        for (int r = rank + 1; r < nr; ++r) {
            if (m.at(r, col) == 0) continue;
            Rational f = m.at(r, col) / pv;
            m.at(r, col) = 0;
            for (int c = col + 1; c < nc; ++c)
                if (m.at(rank, c) != 0) m.at(r, c) -= f * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

Rational determinant(QMatrix m) {
    const int n = m.rows();
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r) {
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            for (int c = col; c < n; ++c) std::swap(m.at(piv, c), m.at(col, c));
            det = -det;
        }
        const Rational pv = m.at(col, col);
        det *= pv;
        for (int r = col + 1; r < n; ++r) {
            if (m.at(r, col) == 0) continue;
            Rational f = m.at(r, col) / pv;
            for (int c = col; c < n; ++c)
                if (m.at(col, c) != 0) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return det;
}

int sparse_rank(std::vector<std::map<int, Rational>> rows) {
    // column -> live rows containing it
    std::map<int, std::vector<int>> col_rows;
    std::vector<bool> done(rows.size(), false);
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) col_rows[c].push_back(static_cast<int>(r));

    int rank = 0;
    while (true) {
        // pick the live row with fewest entries
        int best = -1;
        size_t best_nnz = 0;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (done[r] || rows[r].empty()) continue;
            if (best < 0 || rows[r].size() < best_nnz) {
                best = static_cast<int>(r);
                best_nnz = rows[r].size();
            }
        }
        if (best < 0) break;
        done[best] = true;
        ++rank;

        // pivot on the column of this row with fewest live rows
        int pcol = -1;
        size_t pcol_count = 0;
        for (const auto& [c, v] : rows[best]) {
            auto& lst = col_rows[c];
            size_t live = 0;
            for (int r : lst)
                if (!done[r] && rows[r].count(c)) ++live;
            if (pcol < 0 || live < pcol_count) {
                pcol = c;
                pcol_count = live;
            }
        }
        const Rational pv = rows[best].at(pcol);

        std::vector<int> targets;
        for (int r : col_rows[pcol])
            if (!done[r] && rows[r].count(pcol)) targets.push_back(r);
        for (int r : targets) {
            auto pivot_entry = rows[r].find(pcol);
            if (pivot_entry == rows[r].end()) continue;  // duplicate target entry, already cleared
            Rational f = pivot_entry->second / pv;
            for (const auto& [c, v] : rows[best]) {
                auto it = rows[r].find(c);
                if (it == rows[r].end()) {
                    Rational nv = -f * v;
                    if (nv != 0) {
                        rows[r].emplace(c, std::move(nv));
                        col_rows[c].push_back(r);
                    }
                } else {
                    it->second -= f * v;
                    if (it->second == 0) rows[r].erase(it);
                }
            }
        }
        rows[best].clear();
    }
    return rank;
}

}  // namespace whitealg
