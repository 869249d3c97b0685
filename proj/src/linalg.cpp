#include "poltan/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace poltan {

void SparseMatrix::set_row(int r, std::vector<std::pair<int, Rational>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, Rational>> merged;
    for (auto& [c, v] : entries) {
        if (c < 0 || c >= col_count) throw std::invalid_argument("column index out of range");
        if (!merged.empty() && merged.back().first == c)
            merged.back().second += v;
        else
            merged.emplace_back(c, std::move(v));
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    rows.at(r) = std::move(merged);
}

namespace {

using IntRow = std::vector<std::pair<int, BigInt>>;

// Scale a rational row to a primitive integer row with positive leading entry.
IntRow to_primitive(std::vector<std::pair<int, Rational>> row) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    BigInt scale = 1;
    for (const auto& [c, v] : row)
        if (v != 0) scale = lcm(scale, denominator(v));
    IntRow out;
    out.reserve(row.size());
    BigInt content = 0;
    for (const auto& [c, v] : row) {
        if (v == 0) continue;
        BigInt x = numerator(v) * (scale / denominator(v));
        content = gcd(content, x);
        out.emplace_back(c, std::move(x));
    }
    if (out.empty()) return out;
    if (out.front().second < 0) content = -content;
    for (auto& [c, x] : out) x /= content;
    return out;
}

void make_primitive(IntRow& row) {
    BigInt content = 0;
    for (const auto& [c, x] : row) content = gcd(content, x);
    if (content == 0) return;
    if (row.front().second < 0) content = -content;
    if (content != 1)
        for (auto& [c, x] : row) x /= content;
}

// r := a*r - b*p, merged by column, zeros dropped.
IntRow combine(const IntRow& r, const BigInt& a, const IntRow& p, const BigInt& b) {
    IntRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, a * r[i].second);
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -b * p[j].second);
            ++j;
        } else {
            BigInt v = a * r[i].second - b * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i, ++j;
        }
    }
    return out;
}

}  // namespace

bool Echelon::add_row(const std::vector<std::pair<int, Rational>>& entries) {
    IntRow row = to_primitive(entries);
    while (!row.empty()) {
        const int lead = row.front().first;
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead,
                                   [](const auto& p, int c) { return p.first < c; });
        if (it == pivots_.end() || it->first != lead) {
            pivots_.insert(it, {lead, std::move(row)});
            return true;
        }
        row = combine(row, it->second.front().second, it->second, row.front().second);
        make_primitive(row);
    }
    return false;
}

std::vector<std::pair<int, std::vector<std::pair<int, Rational>>>> Echelon::reduced_rows() const {
    // Back-substitute over the rationals; pivots are few by the time this runs.
    std::vector<std::pair<int, std::vector<std::pair<int, Rational>>>> rows;
    rows.reserve(pivots_.size());
    for (const auto& [col, irow] : pivots_) {
        std::vector<std::pair<int, Rational>> r;
        r.reserve(irow.size());
        const BigInt& lead = irow.front().second;
        for (const auto& [c, x] : irow) r.emplace_back(c, Rational(x, lead));
        rows.emplace_back(col, std::move(r));
    }
    // Eliminate every pivot column from the rows above it, bottom-up.
    for (std::size_t k = rows.size(); k-- > 0;) {
        const int col = rows[k].first;
        for (std::size_t up = 0; up < k; ++up) {
            auto& r = rows[up].second;
            auto it = std::lower_bound(r.begin(), r.end(), col,
                                       [](const auto& e, int c) { return e.first < c; });
            if (it == r.end() || it->first != col) continue;
            const Rational factor = it->second;
            // r -= factor * rows[k]
            std::vector<std::pair<int, Rational>> merged;
            merged.reserve(r.size() + rows[k].second.size());
            std::size_t i = 0, j = 0;
            const auto& p = rows[k].second;
            while (i < r.size() || j < p.size()) {
                if (j == p.size() || (i < r.size() && r[i].first < p[j].first))
                    merged.push_back(r[i++]);
                else if (i == r.size() || p[j].first < r[i].first) {
                    merged.emplace_back(p[j].first, -factor * p[j].second);
                    ++j;
                } else {
                    Rational v = r[i].second - factor * p[j].second;
                    if (v != 0) merged.emplace_back(r[i].first, std::move(v));
                    ++i, ++j;
                }
            }
            r = std::move(merged);
        }
    }
    return rows;
}

std::pair<int, int> rank_nullity(const SparseMatrix& m) {
    Echelon e(m.col_count);
    for (const auto& row : m.rows) e.add_row(row);
    return {e.rank(), m.col_count - e.rank()};
}

int rank(const SparseMatrix& m) { return rank_nullity(m).first; }

std::vector<std::vector<Rational>> nullspace_basis(const SparseMatrix& m) {
    Echelon e(m.col_count);
    for (const auto& row : m.rows) e.add_row(row);
    const auto reduced = e.reduced_rows();

    std::vector<bool> is_pivot(m.col_count, false);
    for (const auto& [col, row] : reduced) is_pivot[col] = true;

    std::vector<std::vector<Rational>> basis;
    basis.reserve(m.col_count - reduced.size());
    for (int free = 0; free < m.col_count; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.col_count, Rational(0));
        v[free] = 1;
        for (const auto& [col, row] : reduced) {
            auto it = std::lower_bound(row.begin(), row.end(), free,
                                       [](const auto& e2, int c) { return e2.first < c; });
            if (it != row.end() && it->first == free) v[col] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace poltan
