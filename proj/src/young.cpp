#include "hf/young.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hf {

namespace {

std::string join(const std::vector<int>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string rows_str(const std::vector<std::vector<int>>& rows) {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ",";
        out += "[" + join(rows[i], ",") + "]";
    }
    return out + "]";
}

}  // namespace

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must weakly decrease");
        size_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) throw std::invalid_argument("malformed partition '" + text + "'");
        item = item.substr(first, last - first + 1);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw std::invalid_argument("malformed partition '" + text + "'");
        }
        parts.push_back(std::stoi(item));
    }
    if (!text.empty() && text.back() == ',') throw std::invalid_argument("malformed partition '" + text + "'");
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("malformed partition '" + text + "': " + e.what());
    }
}

int Partition::col_length(int j) const {
    int n = 0;
    while (n < rows() && parts_[n] >= j) ++n;
    return j >= 1 ? n : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= row_length(1); ++j) c.push_back(col_length(j));
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.rows() > rows()) return false;
    for (int i = 1; i <= mu.rows(); ++i) {
        if (mu.row_length(i) > row_length(i)) return false;
    }
    return true;
}

std::vector<Box> Partition::boxes() const {
    std::vector<Box> out;
    for (int i = 1; i <= rows(); ++i) {
        for (int j = 1; j <= parts_[i - 1]; ++j) out.push_back({i, j});
    }
    return out;
}

std::vector<Box> Partition::addable_boxes() const {
    // bottom row first: contents increase going up
    std::vector<Box> out;
    for (int i = rows() + 1; i >= 1; --i) {
        const int len = row_length(i);
        if (i == 1 || row_length(i - 1) > len) out.push_back({i, len + 1});
    }
    return out;
}

std::vector<Box> Partition::removable_boxes() const {
    std::vector<Box> out;
    for (int i = rows(); i >= 1; --i) {
        if (row_length(i) > row_length(i + 1)) out.push_back({i, row_length(i)});
    }
    return out;
}

Partition Partition::with_box(const Box& b) const {
    std::vector<int> p = parts_;
    if (b.row == rows() + 1) p.push_back(0);
    if (b.row < 1 || b.row > static_cast<int>(p.size()) || p[b.row - 1] + 1 != b.col) {
        throw std::invalid_argument("box is not addable");
    }
    ++p[b.row - 1];
    return Partition(std::move(p));
}

Partition Partition::without_box(const Box& b) const {
    if (!contains(b) || row_length(b.row) != b.col || row_length(b.row + 1) >= b.col) {
        throw std::invalid_argument("box is not removable");
    }
    std::vector<int> p = parts_;
    --p[b.row - 1];
    return Partition(std::move(p));
}

std::string Partition::str() const { return join(parts_, ","); }

int hook_length(const Partition& lambda, const Box& b) {
    if (!lambda.contains(b)) throw std::out_of_range("box outside the diagram");
    return lambda.row_length(b.row) + lambda.col_length(b.col) - b.row - b.col + 1;
}

std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

std::uint64_t hook_length_count(const Partition& lambda) {
    mpz_class num = 1;
    for (int k = 2; k <= lambda.size(); ++k) num *= k;
    for (const Box& b : lambda.boxes()) num /= hook_length(lambda, b);
    return num.get_ui();
}

RatFuncQ schur_element(const Partition& lambda) {
    LaurentPolyQ c(1);
    for (const Box& b : lambda.boxes()) c *= LaurentPolyQ::monomial(content(b)) * qint(hook_length(lambda, b));
    return RatFuncQ(c);
}

// ---------------------------------------------------------------------------
// SkewShape

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_)) throw std::invalid_argument("inner partition not contained in outer");
}

std::vector<Box> SkewShape::boxes() const {
    std::vector<Box> out;
    for (const Box& b : outer_.boxes()) {
        if (!inner_.contains(b)) out.push_back(b);
    }
    return out;
}

bool SkewShape::is_horizontal_strip() const {
    for (int i = 1; i < outer_.rows(); ++i) {
        if (outer_.row_length(i + 1) > inner_.row_length(i)) return false;
    }
    return true;
}

bool SkewShape::is_vertical_strip() const {
    for (int i = 1; i <= outer_.rows(); ++i) {
        if (outer_.row_length(i) - inner_.row_length(i) > 1) return false;
    }
    return true;
}

std::string SkewShape::str() const {
    if (inner_.size() == 0) return outer_.str();
    return outer_.str() + "/" + inner_.str();
}

// ---------------------------------------------------------------------------
// StandardTableau

namespace {

bool standard_placement(const SkewShape& shape, const std::vector<Box>& pos) {
    if (static_cast<int>(pos.size()) != shape.size()) return false;
    std::map<Box, int> entry;
    for (std::size_t k = 0; k < pos.size(); ++k) {
        if (!shape.contains(pos[k]) || !entry.emplace(pos[k], static_cast<int>(k) + 1).second) return false;
    }
    for (const auto& [b, v] : entry) {
        const auto right = entry.find({b.row, b.col + 1});
        if (right != entry.end() && right->second <= v) return false;
        const auto below = entry.find({b.row + 1, b.col});
        if (below != entry.end() && below->second <= v) return false;
    }
    return true;
}

}  // namespace

StandardTableau::StandardTableau(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    int m = 0;
    for (const auto& r : rows) {
        parts.push_back(static_cast<int>(r.size()));
        m += static_cast<int>(r.size());
    }
    shape_ = SkewShape(Partition(parts));
    pos_.assign(static_cast<std::size_t>(m), Box{0, 0});
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const int v = rows[i][j];
            if (v < 1 || v > m || pos_[v - 1].row != 0) throw std::invalid_argument("not a bijective filling");
            pos_[v - 1] = {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
        }
    }
    if (!standard_placement(shape_, pos_)) throw std::invalid_argument("tableau is not standard");
}

StandardTableau::StandardTableau(SkewShape shape, std::vector<Box> box_of_entry)
    : shape_(std::move(shape)), pos_(std::move(box_of_entry)) {
    if (!standard_placement(shape_, pos_)) throw std::invalid_argument("tableau is not standard");
}

std::vector<int> StandardTableau::content_sequence() const {
    std::vector<int> c;
    for (const Box& b : pos_) c.push_back(hf::content(b));
    return c;
}

std::optional<StandardTableau> StandardTableau::swapped(int k) const {
    if (k < 1 || k >= size()) throw std::out_of_range("swapped: index out of range");
    std::vector<Box> p = pos_;
    std::swap(p[k - 1], p[k]);
    if (!standard_placement(shape_, p)) return std::nullopt;
    StandardTableau t;
    t.shape_ = shape_;
    t.pos_ = std::move(p);
    return t;
}

StandardTableau StandardTableau::restricted() const {
    if (is_skew() || pos_.empty()) throw std::logic_error("restricted: needs a nonempty straight shape");
    StandardTableau t;
    t.shape_ = SkewShape(shape().without_box(pos_.back()));
    t.pos_.assign(pos_.begin(), pos_.end() - 1);
    return t;
}

std::vector<std::vector<int>> StandardTableau::rows() const {
    std::vector<std::vector<int>> r(static_cast<std::size_t>(shape().rows()));
    std::vector<std::pair<Box, int>> cells;
    for (std::size_t k = 0; k < pos_.size(); ++k) cells.emplace_back(pos_[k], static_cast<int>(k) + 1);
    std::sort(cells.begin(), cells.end());
    for (const auto& [b, v] : cells) r[b.row - 1].push_back(v);
    return r;
}

std::vector<int> StandardTableau::reading_word() const {
    std::vector<int> w;
    for (const auto& r : rows()) w.insert(w.end(), r.begin(), r.end());
    return w;
}

std::string StandardTableau::str() const { return rows_str(rows()); }

std::vector<StandardTableau> standard_tableaux(const Partition& lambda) { return standard_tableaux(SkewShape(lambda)); }

std::vector<StandardTableau> standard_tableaux(const SkewShape& theta) {
    std::vector<StandardTableau> out;
    const std::vector<Box> cells = theta.boxes();
    std::vector<Box> pos;
    std::set<Box> filled;
    // a box may take the next entry once its left and upper neighbours are filled
    auto ready = [&](const Box& b) {
        auto done = [&](const Box& n) { return !theta.contains(n) || filled.count(n); };
        return !filled.count(b) && (b.col == 1 || done({b.row, b.col - 1})) && (b.row == 1 || done({b.row - 1, b.col}));
    };
    std::function<void()> rec = [&]() {
        if (pos.size() == cells.size()) {
            out.emplace_back(theta, pos);
            return;
        }
        for (const Box& b : cells) {
            if (!ready(b)) continue;
            filled.insert(b);
            pos.push_back(b);
            rec();
            pos.pop_back();
            filled.erase(b);
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Tableau

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> parts;
    for (const auto& r : rows_) {
        for (int v : r) {
            if (v < 1) throw std::invalid_argument("tableau entries must be positive");
        }
        parts.push_back(static_cast<int>(r.size()));
    }
    shape_ = Partition(parts);
    if (shape_.rows() != static_cast<int>(rows_.size())) throw std::invalid_argument("empty tableau row");
}

int Tableau::max_entry() const {
    int mx = 0;
    for (const auto& r : rows_) {
        for (int v : r) mx = std::max(mx, v);
    }
    return mx;
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> w;
    for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
    return w;
}

bool Tableau::rows_weakly_increase() const {
    for (const auto& r : rows_) {
        if (!std::is_sorted(r.begin(), r.end())) return false;
    }
    return true;
}

bool Tableau::cols_weakly_increase() const {
    for (std::size_t i = 1; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (rows_[i][j] < rows_[i - 1][j]) return false;
        }
    }
    return true;
}

bool Tableau::cols_strictly_increase() const {
    for (std::size_t i = 1; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (rows_[i][j] <= rows_[i - 1][j]) return false;
        }
    }
    return true;
}

std::vector<int> Tableau::weight(int n) const {
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    for (const auto& r : rows_) {
        for (int v : r) {
            if (v > n) throw std::out_of_range("tableau entry exceeds n");
            ++w[v - 1];
        }
    }
    return w;
}

std::string Tableau::str() const { return rows_str(rows_); }

SemistandardTableau::SemistandardTableau(std::vector<std::vector<int>> rows) : Tableau(std::move(rows)) {
    if (!is_semistandard()) throw std::invalid_argument("tableau is not semistandard");
}

namespace {

// row-major backtracking; `strict` selects strict or weak growth down columns
std::vector<std::vector<std::vector<int>>> fillings(const Partition& lambda, int n, bool strict) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.rows()));
    const std::vector<Box> cells = lambda.boxes();
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            out.push_back(rows);
            return;
        }
        const Box b = cells[idx];
        int lo = 1;
        if (b.col > 1) lo = std::max(lo, rows[b.row - 1][b.col - 2]);
        if (b.row > 1) lo = std::max(lo, rows[b.row - 2][b.col - 1] + (strict ? 1 : 0));
        for (int v = lo; v <= n; ++v) {
            rows[b.row - 1].push_back(v);
            rec(idx + 1);
            rows[b.row - 1].pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace

std::vector<SemistandardTableau> semistandard_tableaux(const Partition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("semistandard_tableaux: n must be positive");
    std::vector<SemistandardTableau> out;
    if (lambda.rows() > n) return out;
    for (auto& r : fillings(lambda, n, true)) out.emplace_back(std::move(r));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tableau> weakly_increasing_tableaux(const Partition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("weakly_increasing_tableaux: n must be positive");
    std::vector<Tableau> out;
    for (auto& r : fillings(lambda, n, false)) out.emplace_back(std::move(r));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hf
