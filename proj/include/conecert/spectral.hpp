#pragma once

#include "conecert/linalg.hpp"
#include "conecert/roots.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace conecert {

enum class Dominance { UniqueSimplePositive, UniqueSimpleNegative, NotUniqueOrNotSimple };

std::string to_string(Dominance d);

/// Eigenvalues of a rational matrix. When the dominant eigenvalue is unique
/// and simple it is roots[0]; the remaining roots follow with the real ones
/// first and every upper half-plane root directly followed by its conjugate.
struct SpectralData {
    UniPoly char_poly;
    RootSet roots;
    Dominance dominance = Dominance::NotUniqueOrNotSimple;

    const AlgebraicNumber& dominant() const { return roots.front().value; }
    /// Index of the conjugate of roots[i], or -1 for real roots.
    int conjugate_of(std::size_t i) const;
};

SpectralData analyze(const Matrix& a);

/// Norm used for a non-dominant eigenvalue in the gap lambda_1 - ||lambda_i||:
/// 0 stands for the modulus, s >= 1 for the polygon norm of order s.
/// Returns a rational g with 0 < g <= min over i != 1 of the gap, or 0 when
/// some gap is not positive. With a single eigenvalue, g = lambda_1 bound.
Rational gap_lower_bound(const SpectralData& s, const std::vector<unsigned>& norm_orders);

class BasisFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Column of an exact basis: entries are polynomials in the eigenvalue,
/// reduced modulo its defining polynomial.
struct ExactColumn {
    std::size_t root = 0;   // index into SpectralData::roots
    unsigned chain = 1;     // position j in the Jordan chain, 1-based
    std::vector<UniPoly> entries;
    int conj = -1;          // index of the conjugate column, -1 if real
};

/// Basis with A V_{i,1} = l_i V_{i,1}, A V_{i,j} = l_i V_{i,j} + eps V_{i,j-1}.
/// Columns are ordered: dominant eigenvector, real chains, then complex chains
/// with each column directly followed by its conjugate.
struct JordanBasis {
    std::vector<ExactColumn> columns;
    Rational eps;
    bool companion = false;
};

/// True when a is a companion matrix in the sense of companion(): ones on
/// the superdiagonal, arbitrary last row, zeros elsewhere.
bool is_companion(const Matrix& a);

/// Exact basis for a matrix with a unique simple dominant eigenvalue. Uses
/// the closed form for companion matrices and a rational similarity to the
/// companion matrix of the characteristic polynomial otherwise. The dominant
/// column is oriented so that its first nonzero coordinate is positive.
/// Throws BasisFailure for derogatory matrices.
JordanBasis build_basis(const Matrix& a, const SpectralData& s, const Rational& eps);

/// Exact check of the chain relations in Q[x]/(defpoly).
bool residuals_vanish(const Matrix& a, const SpectralData& s, const JordanBasis& b);

/// Exact signs of the coordinates of the dominant eigenvector (column 0).
std::vector<int> dominant_signs(const SpectralData& s, const JordanBasis& b);

/// Rational (Gaussian) approximation of a basis: d x d complex matrix with a
/// conjugation pairing of columns.
struct RationalBasis {
    std::vector<std::vector<QComplex>> cols;  // cols[j][i] = entry (i, j)
    std::vector<int> conj;                     // partner column or -1
    std::vector<int> root;                     // eigenvalue index or -1 when unknown
    unsigned digits = 0;

    std::size_t dim() const { return cols.size(); }
};

/// Entrywise within 10^-digits of the exact basis; conjugate columns are
/// exact mirror images. Throws BasisFailure when the result is singular.
RationalBasis rationalize(const SpectralData& s, const JordanBasis& b, unsigned digits);

/// Real d x d matrix with columns: column 0, then per non-dominant slot either
/// the real column or (Re V, Im V) of the upper member of a conjugate pair.
/// Throws std::invalid_argument when the pairing is inconsistent.
Matrix real_form(const RationalBasis& b);

}  // namespace conecert
