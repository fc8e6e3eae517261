#pragma once

/**
 * @file young.hpp
 * @brief Partitions, skew diagrams and tableaux.
 *
 * Boxes are 1-based (row, col). Enumerations return tableaux sorted
 * lexicographically by reading word, where the reading word lists the
 * entries row by row, top to bottom, left to right.
 */

#include "hf/exact_arith.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hf {

struct Box {
    int row = 1;
    int col = 1;
    friend auto operator<=>(const Box&, const Box&) = default;
};

inline int content(const Box& b) { return b.col - b.row; }

class Partition {
public:
    Partition() = default;
    /// Trailing zeros are dropped; anything else that is not weakly
    /// decreasing and positive throws std::invalid_argument.
    explicit Partition(std::vector<int> parts);
    /// "3,2,1"; the empty string is the empty partition
    static Partition parse(const std::string& text);

    int size() const { return size_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    // length of 1-based row i, 0 beyond the last row
    int row_length(int i) const { return i >= 1 && i <= rows() ? parts_[i - 1] : 0; }
    int col_length(int j) const;

    Partition conjugate() const;
    bool contains(const Box& b) const { return b.col >= 1 && b.col <= row_length(b.row); }
    bool contains(const Partition& mu) const;
    /// row-major order
    std::vector<Box> boxes() const;
    /// boxes that can be added, in increasing content order
    std::vector<Box> addable_boxes() const;
    std::vector<Box> removable_boxes() const;
    Partition with_box(const Box& b) const;
    Partition without_box(const Box& b) const;

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// h(b) = λ_i + λ'_j - i - j + 1; throws std::out_of_range for a box outside λ
int hook_length(const Partition& lambda, const Box& b);

/// partitions of m in reverse lexicographic order: (m), (m-1,1), ...
std::vector<Partition> partitions_of(int m);

/// m! / prod h(b), the number of standard tableaux
std::uint64_t hook_length_count(const Partition& lambda);

/// Steinberg product  prod_b q^{c(b)} [h(b)]_q
RatFuncQ schur_element(const Partition& lambda);

class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);
    explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.size() - inner_.size(); }
    bool contains(const Box& b) const { return outer_.contains(b) && !inner_.contains(b); }
    std::vector<Box> boxes() const;
    // no two boxes in one column
    bool is_horizontal_strip() const;
    // no two boxes in one row
    bool is_vertical_strip() const;

    std::string str() const;
    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_;
    Partition inner_;
};

/// Bijective filling of a (possibly skew) diagram by 1..m, increasing along
/// rows and down columns.
class StandardTableau {
public:
    StandardTableau() = default;
    /// rows of a straight shape; throws std::invalid_argument if not standard
    explicit StandardTableau(const std::vector<std::vector<int>>& rows);
    /// box_of_entry[k-1] is the box holding k
    StandardTableau(SkewShape shape, std::vector<Box> box_of_entry);

    const SkewShape& skew_shape() const { return shape_; }
    const Partition& shape() const { return shape_.outer(); }
    bool is_skew() const { return shape_.inner().size() > 0; }
    int size() const { return static_cast<int>(pos_.size()); }

    const Box& box(int k) const { return pos_.at(static_cast<std::size_t>(k - 1)); }
    int content(int k) const { return hf::content(box(k)); }
    std::vector<int> content_sequence() const;
    /// d_k = c_{k+1} - c_k, 1 <= k < m
    int axial_distance(int k) const { return content(k + 1) - content(k); }

    /// entries k and k+1 exchanged, when the result is still standard
    std::optional<StandardTableau> swapped(int k) const;
    /// drops the largest entry (straight shapes)
    StandardTableau restricted() const;

    /// entries per row of the outer shape; inner boxes are left out
    std::vector<std::vector<int>> rows() const;
    std::vector<int> reading_word() const;
    std::string str() const;

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
        return a.shape_ == b.shape_ && a.pos_ == b.pos_;
    }
    friend bool operator<(const StandardTableau& a, const StandardTableau& b) {
        return a.reading_word() < b.reading_word();
    }

private:
    SkewShape shape_;
    std::vector<Box> pos_;
};

std::vector<StandardTableau> standard_tableaux(const Partition& lambda);
std::vector<StandardTableau> standard_tableaux(const SkewShape& theta);

/// Arbitrary filling of a straight shape by positive integers.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(const Box& b) const { return rows_.at(b.row - 1).at(b.col - 1); }
    int max_entry() const;
    std::vector<int> reading_word() const;

    bool rows_weakly_increase() const;
    bool cols_weakly_increase() const;
    bool cols_strictly_increase() const;
    bool is_semistandard() const { return rows_weakly_increase() && cols_strictly_increase(); }
    /// multiplicities alpha_1..alpha_n of the values 1..n
    std::vector<int> weight(int n) const;

    std::string str() const;
    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend bool operator<(const Tableau& a, const Tableau& b) { return a.reading_word() < b.reading_word(); }

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// Rows weakly increase, columns strictly increase.
class SemistandardTableau : public Tableau {
public:
    SemistandardTableau() = default;
    explicit SemistandardTableau(std::vector<std::vector<int>> rows);
};

std::vector<SemistandardTableau> semistandard_tableaux(const Partition& lambda, int n);
/// fillings by 1..n with weakly increasing rows and columns
std::vector<Tableau> weakly_increasing_tableaux(const Partition& lambda, int n);

}  // namespace hf
