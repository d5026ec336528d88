#ifndef HORNCODE_LINALG_HPP
#define HORNCODE_LINALG_HPP

#include <vector>

#include "field.hpp"

namespace horncode {

/// Dense matrix of packed field-element values.
class FqMatrix {
   public:
    FqMatrix(const FieldSpec& f, size_t rows, size_t cols)
        : spec_(&f), rows_(rows), cols_(cols), e_(rows, std::vector<int>(cols, 0)) {}
    FqMatrix(const FieldSpec& f, std::vector<std::vector<int>> entries) : spec_(&f), e_(std::move(entries)) {
        rows_ = e_.size();
        cols_ = rows_ ? e_[0].size() : 0;
        for (const auto& row : e_) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix");
            for (int v : row)
                if (v < 0 || v >= f.order()) throw std::invalid_argument("entry out of field range");
        }
    }

    static FqMatrix identity(const FieldSpec& f, size_t n) {
        FqMatrix m(f, n, n);
        for (size_t i = 0; i < n; ++i) m.e_[i][i] = 1;
        return m;
    }

    const FieldSpec& field() const { return *spec_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    int at(size_t i, size_t j) const { return e_[i][j]; }
    int& at(size_t i, size_t j) { return e_[i][j]; }
    const std::vector<std::vector<int>>& entries() const { return e_; }
    const std::vector<int>& row(size_t i) const { return e_[i]; }

    FqMatrix operator*(const FqMatrix& o) const {
        if (spec_ != o.spec_) throw FieldMismatch();
        if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
        FqMatrix out(*spec_, rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                if (e_[i][k] == 0) continue;
                for (size_t j = 0; j < o.cols_; ++j)
                    out.e_[i][j] = spec_->add(out.e_[i][j], spec_->mul(e_[i][k], o.e_[k][j]));
            }
        return out;
    }

    bool operator==(const FqMatrix& o) const { return spec_ == o.spec_ && e_ == o.e_; }

    /// Reduced row echelon form; zero rows dropped. The result is the
    /// canonical representative of the row space.
    FqMatrix rref() const {
        const FieldSpec& f = *spec_;
        std::vector<std::vector<int>> m = e_;
        size_t pivotRow = 0;
        for (size_t col = 0; col < cols_ && pivotRow < m.size(); ++col) {
            size_t sel = pivotRow;
            while (sel < m.size() && m[sel][col] == 0) ++sel;
            if (sel == m.size()) continue;
            std::swap(m[pivotRow], m[sel]);
            int inv = f.inv(m[pivotRow][col]);
            for (size_t j = col; j < cols_; ++j) m[pivotRow][j] = f.mul(m[pivotRow][j], inv);
            for (size_t i = 0; i < m.size(); ++i) {
                if (i == pivotRow || m[i][col] == 0) continue;
                int factor = m[i][col];
                for (size_t j = col; j < cols_; ++j)
                    m[i][j] = f.sub(m[i][j], f.mul(factor, m[pivotRow][j]));
            }
            ++pivotRow;
        }
        m.resize(pivotRow);
        if (m.empty()) return FqMatrix(f, 0, cols_);
        return FqMatrix(f, std::move(m));
    }

    size_t rank() const { return rref().rows(); }

   private:
    const FieldSpec* spec_;
    size_t rows_, cols_;
    std::vector<std::vector<int>> e_;
};

}  // namespace horncode

#endif
