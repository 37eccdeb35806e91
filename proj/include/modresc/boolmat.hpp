#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "modresc/bitvec.hpp"

namespace modresc {

// Dense boolean matrix with bit-packed rows.
class BoolMatrix {
public:
    BoolMatrix() = default;
    BoolMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const { return data_[i].test(j); }
    void set(std::size_t i, std::size_t j, bool v) { data_[i].set(j, v); }

    const BitVec& row(std::size_t i) const { return data_[i]; }
    BitVec& row(std::size_t i) { return data_[i]; }

    bool operator==(const BoolMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const BoolMatrix& o) const { return !(*this == o); }

    BoolMatrix transposed() const;
    BoolMatrix complemented() const;

    static BoolMatrix identity(std::size_t n);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVec> data_;
};

// Factorization C = M otimes R. M is n x k, R is m x k.
struct ModRescPair {
    BoolMatrix M;
    BoolMatrix R;
};

// u otimes v = 1 iff some position is 1 in u and 0 in v. Both vectors must
// have equal length.
bool vec_otimes(const BitVec& u, const BitVec& v);

// (M otimes R)[i][j] = row_i(M) otimes row_j(R). Requires M.cols == R.cols.
BoolMatrix mat_otimes(const BoolMatrix& M, const BoolMatrix& R);

// Width-n factorization that always exists: M = I_n, R = complement(C)^T.
ModRescPair trivial_solution(const BoolMatrix& C);

// True iff M otimes R == C, including shape checks.
bool verify_solution(const BoolMatrix& C, const ModRescPair& mr);

// Parses a matrix of '0'/'1' entries. Rows are lines; entries may be packed
// or separated by spaces/commas; '#' starts a comment line; blank lines are
// ignored. Ragged rows or stray characters raise input_error with 1-based
// line/column coordinates.
BoolMatrix parse_matrix(std::istream& in, const std::string& source_name = "<input>");
BoolMatrix parse_matrix_text(const std::string& text, const std::string& source_name = "<input>");

// One row per line, entries packed as '0'/'1'.
std::string to_text(const BoolMatrix& m);

} // namespace modresc
