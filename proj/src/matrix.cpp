#include "tamesys/matrix.hpp"

#include <algorithm>

namespace tamesys {

Mat Mat::identity(FieldPtr f, std::size_t n) {
    Mat m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(FieldPtr f, const std::vector<std::vector<long long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("ragged row list");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = f->from_signed(rows[i][j]);
    }
    return m;
}

RrefResult Mat::rref() const {
    RrefResult out;
    out.entries = a_;
    const Field& F = *f_;
    std::size_t lead = 0;
    auto at = [&](std::size_t r, std::size_t c) -> Elem& { return out.entries[r * cols_ + c]; };

    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
        // first nonzero pivot at or below the current row
        std::size_t piv = lead;
        while (piv < rows_ && at(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(lead, j));
        Elem s = F.inv(at(lead, col));
        if (s != 1)
            for (std::size_t j = col; j < cols_; ++j) at(lead, j) = F.mul(at(lead, j), s);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == lead) continue;
            Elem factor = at(r, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < cols_; ++j)
                at(r, j) = F.sub(at(r, j), F.mul(factor, at(lead, j)));
        }
        out.pivots.push_back(col);
        ++lead;
    }
    out.rank = out.pivots.size();
    return out;
}

Mat Mat::kernel_basis() const {
    RrefResult r = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Mat basis(f_, free_cols.size(), cols_);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t fc = free_cols[i];
        basis(i, fc) = 1;
        for (std::size_t pr = 0; pr < r.rank; ++pr)
            basis(i, r.pivots[pr]) = f_->neg(r.entries[pr * cols_ + fc]);
    }
    return basis;
}

bool Mat::row_space_contains(std::span<const Elem> v) const {
    if (v.size() != cols_) throw DimensionMismatch("vector length does not match column count");
    RrefResult r = rref();
    // eliminate v against the echelon rows; v is in the row space iff it vanishes
    std::vector<Elem> w(v.begin(), v.end());
    for (std::size_t pr = 0; pr < r.rank; ++pr) {
        std::size_t pc = r.pivots[pr];
        Elem factor = w[pc];
        if (factor == 0) continue;
        for (std::size_t j = pc; j < cols_; ++j)
            w[j] = f_->sub(w[j], f_->mul(factor, r.entries[pr * cols_ + j]));
    }
    return std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; });
}

Mat Mat::transpose() const {
    Mat t(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat Mat::mul(const Mat& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Mat out(f_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Elem x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out(i, j) = f_->add(out(i, j), f_->mul(x, other(k, j)));
        }
    return out;
}

Mat Mat::select_columns(std::span<const std::size_t> cols) const {
    Mat out(f_, rows_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= cols_) throw IndexOutOfRange("column index out of range");
        for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, cols[j]);
    }
    return out;
}

Mat Mat::vstack(const Mat& below) const {
    if (cols_ != below.cols_) throw DimensionMismatch("vstack column mismatch");
    Mat out(f_, rows_ + below.rows_, cols_);
    std::copy(a_.begin(), a_.end(), out.a_.begin());
    std::copy(below.a_.begin(), below.a_.end(), out.a_.begin() + a_.size());
    return out;
}

bool Mat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](Elem x) { return x == 0; });
}

}  // namespace tamesys
