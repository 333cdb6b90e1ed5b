#include "pierirank/tableau.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace pierirank {

uint8_t Tableau::at(int row, int col) const {
    int64_t off = 0;
    for (int i = 1; i < row; ++i) off += shape.part(i);
    return entries[static_cast<size_t>(off + col - 1)];
}

bool Tableau::is_semistandard() const {
    for (int i = 1; i <= shape.length(); ++i) {
        for (int64_t j = 1; j <= shape.part(i); ++j) {
            uint8_t v = at(i, static_cast<int>(j));
            if (v == 0) return false;
            if (j > 1 && at(i, static_cast<int>(j - 1)) > v) return false;
            if (i > 1 && shape.part(i - 1) >= j && at(i - 1, static_cast<int>(j)) >= v) return false;
        }
    }
    return true;
}

Weight Tableau::content(int n) const {
    Weight c(static_cast<size_t>(n), 0);
    for (uint8_t v : entries) {
        if (v < 1 || v > n) throw std::out_of_range("tableau entry out of range");
        c[static_cast<size_t>(v - 1)]++;
    }
    return c;
}

std::vector<uint8_t> Tableau::row_word() const { return entries; }

std::string Tableau::to_string() const {
    std::ostringstream os;
    size_t off = 0;
    for (int i = 1; i <= shape.length(); ++i) {
        if (i > 1) os << '/';
        for (int64_t j = 0; j < shape.part(i); ++j) os << static_cast<int>(entries[off++]);
    }
    return os.str();
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int n) {
    std::vector<Tableau> out;
    if (shape.length() > n) return out;
    if (shape.empty()) {
        out.push_back({shape, {}});
        return out;
    }
    const int rows = shape.length();
    std::vector<std::vector<uint8_t>> fill(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i)
        fill[static_cast<size_t>(i)].assign(static_cast<size_t>(shape.part(i + 1)), 0);

    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == rows) {
            Tableau t;
            t.shape = shape;
            for (const auto& row : fill) t.entries.insert(t.entries.end(), row.begin(), row.end());
            out.push_back(std::move(t));
            return;
        }
        int width = static_cast<int>(shape.part(r + 1));
        int nr = r, nc = c + 1;
        if (nc == width) { nr = r + 1; nc = 0; }
        int lo = 1;
        if (c > 0) lo = std::max(lo, static_cast<int>(fill[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]));
        if (r > 0) lo = std::max(lo, fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
        for (int v = lo; v <= n; ++v) {
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = static_cast<uint8_t>(v);
            rec(nr, nc);
        }
    };
    rec(0, 0);
    return out;
}

ColumnTableau to_columns(const Tableau& t) {
    Partition conj = t.shape.conjugate();
    ColumnTableau ct(static_cast<size_t>(conj.length()));
    for (int j = 1; j <= conj.length(); ++j) {
        Column col;
        for (int i = 1; i <= conj.part(j); ++i) col.push_back(t.at(i, j));
        ct[static_cast<size_t>(j - 1)] = std::move(col);
    }
    return ct;
}

Tableau from_columns(const Partition& shape, const ColumnTableau& ct) {
    Tableau t;
    t.shape = shape;
    for (int i = 1; i <= shape.length(); ++i)
        for (int64_t j = 1; j <= shape.part(i); ++j)
            t.entries.push_back(ct[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)]);
    return t;
}

std::string encode_columns(const ColumnTableau& ct) {
    std::string s;
    for (const auto& col : ct) {
        for (uint8_t v : col) s.push_back(static_cast<char>(v));
        s.push_back('\0');
    }
    return s;
}

}  // namespace pierirank
