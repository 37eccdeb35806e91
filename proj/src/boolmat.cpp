#include "modresc/boolmat.hpp"

#include <istream>
#include <sstream>

#include "modresc/errors.hpp"

namespace modresc {

BoolMatrix BoolMatrix::transposed() const {
    BoolMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        data_[i].for_each([&](std::size_t j) { t.set(j, i, true); });
    return t;
}

BoolMatrix BoolMatrix::complemented() const {
    BoolMatrix c(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        c.data_[i].set_all();
        c.data_[i].andnot_assign(data_[i]);
    }
    return c;
}

BoolMatrix BoolMatrix::identity(std::size_t n) {
    BoolMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

bool vec_otimes(const BitVec& u, const BitVec& v) {
    if (u.size() != v.size())
        throw contract_error("vec_otimes: length mismatch");
    return u.any_and_not(v);
}

BoolMatrix mat_otimes(const BoolMatrix& M, const BoolMatrix& R) {
    if (M.cols() != R.cols())
        throw contract_error("mat_otimes: inner dimension mismatch");
    BoolMatrix C(M.rows(), R.rows());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < R.rows(); ++j)
            if (M.row(i).any_and_not(R.row(j))) C.set(i, j, true);
    return C;
}

ModRescPair trivial_solution(const BoolMatrix& C) {
    return {BoolMatrix::identity(C.rows()), C.complemented().transposed()};
}

bool verify_solution(const BoolMatrix& C, const ModRescPair& mr) {
    if (mr.M.rows() != C.rows() || mr.R.rows() != C.cols()) return false;
    if (mr.M.cols() != mr.R.cols()) return false;
    return mat_otimes(mr.M, mr.R) == C;
}

BoolMatrix parse_matrix(std::istream& in, const std::string& source_name) {
    std::vector<std::vector<bool>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<bool> row;
        bool comment = false;
        for (std::size_t col = 0; col < line.size() && !comment; ++col) {
            char c = line[col];
            switch (c) {
            case '0': row.push_back(false); break;
            case '1': row.push_back(true); break;
            case ' ': case '\t': case ',': break;
            case '#': comment = true; break;
            default:
                throw input_error(source_name + ":" + std::to_string(lineno) + ":" +
                                  std::to_string(col + 1) + ": unexpected character '" +
                                  std::string(1, c) + "' (expected 0, 1, separator, or #)");
            }
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw input_error(source_name + ":" + std::to_string(lineno) +
                              ": row has " + std::to_string(row.size()) +
                              " entries, expected " + std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw input_error(source_name + ": no matrix rows found");
    BoolMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j]) m.set(i, j, true);
    return m;
}

BoolMatrix parse_matrix_text(const std::string& text, const std::string& source_name) {
    std::istringstream in(text);
    return parse_matrix(in, source_name);
}

std::string to_text(const BoolMatrix& m) {
    std::string out;
    out.reserve(m.rows() * (m.cols() + 1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.push_back(m.get(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

} // namespace modresc
