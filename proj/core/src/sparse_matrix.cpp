#include "pierirank/sparse_matrix.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pierirank {

void SparseIntMatrix::add(int i, int j, Int v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("sparse entry out of range");
    if (v == 0) return;
    entries_.push_back({i, j, std::move(v)});
    finalized_ = false;
}

void SparseIntMatrix::set_shape(int rows, int cols) {
    rows_ = rows;
    cols_ = cols;
}

void SparseIntMatrix::finalize() {
    if (finalized_) return;
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    std::vector<Entry> merged;
    merged.reserve(entries_.size());
    for (auto& e : entries_) {
        if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
            merged.back().value += e.value;
        } else {
            merged.push_back(std::move(e));
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Entry& e) { return e.value == 0; }),
                 merged.end());
    entries_ = std::move(merged);
    finalized_ = true;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
    SparseIntMatrix t(cols_, rows_);
    for (const auto& e : entries_) t.add(e.col, e.row, e.value);
    t.finalize();
    return t;
}

Int SparseIntMatrix::max_abs() const {
    Int m = 0;
    for (const auto& e : entries_) {
        Int a = abs(e.value);
        if (a > m) m = a;
    }
    return m;
}

SparseIntMatrix SparseIntMatrix::block_diag(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    SparseIntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (const auto& e : a.entries_) out.add(e.row, e.col, e.value);
    for (const auto& e : b.entries_) out.add(e.row + a.rows(), e.col + a.cols(), e.value);
    out.finalize();
    return out;
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in multiply");
    // rows of b indexed for streaming access
    std::vector<std::vector<const Entry*>> brows(static_cast<size_t>(b.rows()));
    for (const auto& e : b.entries_) brows[static_cast<size_t>(e.row)].push_back(&e);
    std::map<std::pair<int, int>, Int> acc;
    for (const auto& ea : a.entries_) {
        for (const Entry* eb : brows[static_cast<size_t>(ea.col)])
            acc[{ea.row, eb->col}] += ea.value * eb->value;
    }
    SparseIntMatrix out(a.rows(), b.cols());
    for (auto& [key, v] : acc)
        if (v != 0) out.add(key.first, key.second, std::move(v));
    out.finalize();
    return out;
}

SparseIntMatrix SparseIntMatrix::subtract(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("shape mismatch in subtract");
    SparseIntMatrix out(a.rows(), a.cols());
    for (const auto& e : a.entries_) out.add(e.row, e.col, e.value);
    for (const auto& e : b.entries_) out.add(e.row, e.col, -e.value);
    out.finalize();
    return out;
}

SparseIntMatrix SparseIntMatrix::identity(int n) {
    SparseIntMatrix out(n, n);
    for (int i = 0; i < n; ++i) out.add(i, i, 1);
    out.finalize();
    return out;
}

void SparseIntMatrix::write_matrix_market(std::ostream& os) const {
    os << "%%MatrixMarket matrix coordinate integer general\n";
    os << rows_ << ' ' << cols_ << ' ' << entries_.size() << '\n';
    for (const auto& e : entries_)
        os << (e.row + 1) << ' ' << (e.col + 1) << ' ' << e.value.get_str() << '\n';
}

SparseIntMatrix SparseIntMatrix::read_matrix_market(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("%%MatrixMarket", 0) != 0)
        throw std::runtime_error("not a MatrixMarket file");
    if (line.find("coordinate") == std::string::npos ||
        line.find("integer") == std::string::npos)
        throw std::runtime_error("unsupported MatrixMarket header: " + line);
    do {
        if (!std::getline(is, line)) throw std::runtime_error("truncated MatrixMarket file");
    } while (!line.empty() && line[0] == '%');
    std::istringstream head(line);
    long rows = 0, cols = 0, nnz = 0;
    head >> rows >> cols >> nnz;
    if (rows < 0 || cols < 0 || nnz < 0) throw std::runtime_error("bad MatrixMarket sizes");
    SparseIntMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    for (long k = 0; k < nnz; ++k) {
        long i = 0, j = 0;
        std::string val;
        if (!(is >> i >> j >> val)) throw std::runtime_error("truncated MatrixMarket entries");
        m.add(static_cast<int>(i - 1), static_cast<int>(j - 1), Int(val));
    }
    m.finalize();
    return m;
}

void SparseIntMatrix::save(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_matrix_market(os);
    if (!os) throw std::runtime_error("write failed: " + path);
}

SparseIntMatrix SparseIntMatrix::load(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    return read_matrix_market(is);
}

uint64_t SparseIntMatrix::content_hash() const {
    uint64_t h = 1469598103934665603ull;
    auto feed = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    feed(std::to_string(rows_));
    feed("x");
    feed(std::to_string(cols_));
    for (const auto& e : entries_) {
        feed(";");
        feed(std::to_string(e.row));
        feed(",");
        feed(std::to_string(e.col));
        feed(",");
        feed(e.value.get_str());
    }
    return h;
}

}  // namespace pierirank
