#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace eccspec {

/// Dense square matrix stored row-major.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

    std::size_t size() const { return n_; }

    T& operator()(std::size_t r, std::size_t c)
    {
        assert(r < n_ && c < n_);
        return data_[r * n_ + c];
    }
    const T& operator()(std::size_t r, std::size_t c) const
    {
        assert(r < n_ && c < n_);
        return data_[r * n_ + c];
    }

    std::span<const T> row(std::size_t r) const { return {data_.data() + r * n_, n_}; }

    bool is_symmetric() const
    {
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = r + 1; c < n_; ++c)
                if ((*this)(r, c) != (*this)(c, r)) return false;
        return true;
    }

    T trace() const
    {
        T t{};
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    template <typename U>
    Matrix<U> cast() const
    {
        Matrix<U> out(n_);
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) out(r, c) = static_cast<U>((*this)(r, c));
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<int>;
using RealMatrix = Matrix<double>;

}  // namespace eccspec
