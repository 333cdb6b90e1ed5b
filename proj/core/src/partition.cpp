#include "pierirank/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pierirank {

namespace {

void validate_and_strip(std::vector<int64_t>& parts) {
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
        if (parts[i] < parts[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    if (!parts.empty() && parts.back() < 0)
        throw std::invalid_argument("partition parts must be non-negative");
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

}  // namespace

Partition::Partition(std::initializer_list<int64_t> parts) : parts_(parts) {
    validate_and_strip(parts_);
}

Partition::Partition(std::vector<int64_t> parts) : parts_(std::move(parts)) {
    validate_and_strip(parts_);
}

int64_t Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), int64_t{0});
}

int64_t Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("partition rows are 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int64_t> cols;
    if (!parts_.empty()) {
        cols.resize(static_cast<size_t>(parts_[0]));
        for (size_t j = 0; j < cols.size(); ++j) {
            int64_t count = 0;
            for (int64_t p : parts_)
                if (p > static_cast<int64_t>(j)) ++count;
            cols[j] = count;
        }
    }
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

Weight Partition::padded(int n) const {
    if (length() > n)
        throw std::invalid_argument("partition has more than n rows");
    Weight w(static_cast<size_t>(n), 0);
    for (int i = 0; i < length(); ++i) w[static_cast<size_t>(i)] = parts_[static_cast<size_t>(i)];
    return w;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

Partition parse_partition(const std::string& text) {
    Weight w = parse_weight(text);
    return Partition(std::move(w));
}

Weight parse_weight(const std::string& text) {
    Weight out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        long long v = std::stoll(item, &pos);
        if (pos != item.size())
            throw std::invalid_argument("bad integer in sequence: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::string weight_to_string(const Weight& w) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    os << ')';
    return os.str();
}

bool is_partition_shape(const std::vector<int64_t>& seq) {
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (seq[i] < seq[i + 1]) return false;
    return seq.empty() || seq.back() >= 0;
}

std::vector<std::vector<int64_t>> hook_lengths(const Partition& lambda) {
    std::vector<std::vector<int64_t>> out;
    Partition conj = lambda.conjugate();
    for (int i = 1; i <= lambda.length(); ++i) {
        std::vector<int64_t> row;
        for (int64_t j = 1; j <= lambda.part(i); ++j) {
            int64_t arm = lambda.part(i) - j;
            int64_t leg = conj.part(static_cast<int>(j)) - i;
            row.push_back(arm + leg + 1);
        }
        out.push_back(std::move(row));
    }
    return out;
}

Int schur_dim(const Partition& lambda, int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (lambda.length() > n) return 0;
    Int num = 1, den = 1;
    auto hooks = hook_lengths(lambda);
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int64_t j = 1; j <= lambda.part(i); ++j) {
            num *= Int(n - i + j);
            den *= Int(hooks[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]);
        }
    }
    return divexact(num, den);
}

Int ssyt_count(const Partition& lambda, int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (lambda.length() > n) return 0;
    if (lambda.empty()) return 1;
    const int rows = lambda.length();
    std::vector<std::vector<int>> fill(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i)
        fill[static_cast<size_t>(i)].assign(static_cast<size_t>(lambda.part(i + 1)), 0);

    Int count = 0;
    // Fill boxes row-major; rows weakly increase, columns strictly increase.
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == rows) {
            ++count;
            return;
        }
        int width = static_cast<int>(lambda.part(r + 1));
        int nr = r, nc = c + 1;
        if (nc == width) { nr = r + 1; nc = 0; }
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
        if (r > 0) lo = std::max(lo, fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
        for (int v = lo; v <= n; ++v) {
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            rec(nr, nc);
        }
    };
    rec(0, 0);
    return count;
}

std::vector<Partition> pieri_summands(const Partition& lambda, int d,
                                      PieriKind kind, int n) {
    if (d <= 0) throw std::invalid_argument("d must be positive");
    std::vector<Partition> out;
    std::vector<int64_t> mu;
    const int max_rows = n;

    // Choose mu row by row.  Horizontal strip: lambda_i <= mu_i <= lambda_{i-1};
    // vertical strip: mu_i in {lambda_i, lambda_i + 1}, mu weakly decreasing.
    std::function<void(int, int)> rec = [&](int row, int remaining) {
        if (remaining == 0) {
            // remaining rows keep lambda's parts
            std::vector<int64_t> full = mu;
            for (int i = row; i < lambda.length(); ++i) full.push_back(lambda.part(i + 1));
            if (static_cast<int>(full.size()) <= max_rows || full[static_cast<size_t>(max_rows)] == 0) {
                Partition p(full);
                if (p.length() <= max_rows) out.push_back(std::move(p));
            }
            return;
        }
        if (row >= max_rows) return;
        int64_t base = lambda.part(row + 1);
        if (row >= lambda.length() && base == 0 && row > 0 && mu[static_cast<size_t>(row - 1)] == 0)
            return;  // no room below the last nonzero row
        int64_t hi;
        if (kind == PieriKind::symmetric) {
            hi = (row == 0) ? base + remaining
                            : std::min<int64_t>(lambda.part(row), base + remaining);
        } else {
            hi = std::min<int64_t>(base + 1, base + remaining);
            if (row > 0) hi = std::min(hi, mu[static_cast<size_t>(row - 1)]);
        }
        int64_t lo = base;
        if (row > 0) hi = std::min(hi, mu[static_cast<size_t>(row - 1)]);
        for (int64_t v = lo; v <= hi; ++v) {
            mu.push_back(v);
            rec(row + 1, remaining - static_cast<int>(v - base));
            mu.pop_back();
        }
    };
    rec(0, d);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string StripType::to_string() const {
    switch (kind) {
        case same_row: return "same_row(" + std::to_string(index) + ")";
        case same_column: return "same_column(" + std::to_string(index) + ")";
        case other_horizontal_strip: return "horizontal_strip";
        case other_vertical_strip: return "vertical_strip";
        case not_a_strip: return "not_a_strip";
        case not_contained: return "not_contained";
    }
    return "?";
}

StripType strip_type(const Partition& lambda, const Partition& mu) {
    if (!mu.contains(lambda)) return {StripType::not_contained, 0, 0};
    std::vector<std::pair<int, int64_t>> boxes;  // (row, column), 1-based
    for (int i = 1; i <= mu.length(); ++i)
        for (int64_t j = lambda.part(i) + 1; j <= mu.part(i); ++j)
            boxes.emplace_back(i, j);
    int nboxes = static_cast<int>(boxes.size());
    if (nboxes == 0) return {StripType::same_row, 0, 0};

    bool one_row = true, one_col = true;
    for (auto& [r, c] : boxes) {
        one_row = one_row && r == boxes[0].first;
        one_col = one_col && c == boxes[0].second;
    }
    if (one_row) return {StripType::same_row, boxes[0].first, nboxes};
    if (one_col) return {StripType::same_column, static_cast<int>(boxes[0].second), nboxes};

    std::set<int64_t> cols, rows;
    bool horiz = true, vert = true;
    for (auto& [r, c] : boxes) {
        if (!cols.insert(c).second) horiz = false;
        if (!rows.insert(static_cast<int64_t>(r)).second) vert = false;
    }
    if (horiz) return {StripType::other_horizontal_strip, 0, nboxes};
    if (vert) return {StripType::other_vertical_strip, 0, nboxes};
    return {StripType::not_a_strip, 0, nboxes};
}

Weight dual_weight(const Weight& w) {
    Weight out(w.rbegin(), w.rend());
    for (auto& x : out) x = -x;
    return out;
}

Weight twist(const Weight& w, int64_t k) {
    Weight out = w;
    for (auto& x : out) x += k;
    return out;
}

Partition twist(const Partition& p, int64_t k, int n) {
    Weight w = p.padded(n);
    return Partition(twist(w, k));
}

Partition lift(const Partition& lambda, int64_t k) {
    if (!lambda.empty() && k < lambda.part(1))
        throw std::invalid_argument("lift requires k >= lambda_1");
    if (k < 0) throw std::invalid_argument("lift requires k >= 0");
    std::vector<int64_t> parts;
    parts.reserve(lambda.parts().size() + 1);
    parts.push_back(k);
    parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
    return Partition(std::move(parts));
}

}  // namespace pierirank
