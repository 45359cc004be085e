#pragma once

#include "conecert/poly.hpp"
#include "conecert/rational.hpp"

#include <vector>

namespace conecert {

using Vec = std::vector<Rational>;

/// Dense rational matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    void set_col(std::size_t j, const Vec& v);
    bool is_zero() const;

    Matrix transpose() const;
    Matrix& operator*=(const Rational& c);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, const Vec& v);

Rational determinant(Matrix a);
/// Throws std::domain_error when singular.
Matrix inverse(const Matrix& a);
std::size_t rank(Matrix a);

/// Characteristic polynomial det(X I - A), monic.
UniPoly char_poly(const Matrix& a);

/// Square matrix of rational functions in n with a common monic denominator:
/// A(n) = num(n) / den(n).
struct RatFunMatrix {
    std::vector<std::vector<UniPoly>> num;
    UniPoly den = UniPoly::constant(1);

    std::size_t size() const { return num.size(); }
    /// Throws std::domain_error when den(n) = 0.
    Matrix eval(const Rational& n) const;
    /// Numerator matrix at n (without dividing by the denominator).
    Matrix eval_num(const Rational& n) const;
    bool is_constant() const;
};

}  // namespace conecert
