#ifndef EUTACTIC_FRAMES_H
#define EUTACTIC_FRAMES_H

#include <cstddef>
#include <vector>

#include "eutactic/linalg.h"

namespace eutactic {

/// m pairwise orthonormal vectors of dimension m.
template <FieldScalar T>
class OrthonormalBasis {
   public:
    /// Throws NotOrthonormal naming the first offending pair; exact backend ignores `tol`.
    explicit OrthonormalBasis(std::vector<Vector<T>> vectors, double tol = kDefaultTolerance);

    std::size_t dim() const {
        return vectors_.size();
    }
    const std::vector<Vector<T>> &vectors() const {
        return vectors_;
    }
    const Vector<T> &operator[](std::size_t i) const {
        return vectors_[i];
    }
    /// Columns are the basis vectors.
    Matrix<T> matrix() const {
        return Matrix<T>::from_columns(vectors_, dim());
    }

   private:
    std::vector<Vector<T>> vectors_;
};

/// Diagonal 0/1 projector keeping a sorted set of coordinates (0-based).
class CoordinateProjector {
   public:
    /// Throws DomainError on duplicate or out-of-range coordinates.
    CoordinateProjector(std::size_t dim, std::vector<std::size_t> kept);
    static CoordinateProjector full(std::size_t dim);

    std::size_t dim() const {
        return dim_;
    }
    std::size_t rank() const {
        return kept_.size();
    }
    const std::vector<std::size_t> &kept() const {
        return kept_;
    }
    bool keeps(std::size_t coordinate) const;
    /// Projector onto the complementary coordinates.
    CoordinateProjector complement() const;

    template <FieldScalar T>
    Matrix<T> matrix() const {
        Matrix<T> p(dim_, dim_);
        for (std::size_t k : kept_) {
            p(k, k) = T(1);
        }
        return p;
    }
    /// P v, still of dimension dim().
    template <FieldScalar T>
    Vector<T> apply(const Vector<T> &v) const {
        require_dim(v.dim());
        Vector<T> out(dim_);
        for (std::size_t k : kept_) {
            out[k] = v[k];
        }
        return out;
    }
    /// The kept coordinates of v, as a vector of dimension rank().
    template <FieldScalar T>
    Vector<T> restrict(const Vector<T> &v) const {
        require_dim(v.dim());
        Vector<T> out(kept_.size());
        for (std::size_t i = 0; i < kept_.size(); ++i) {
            out[i] = v[kept_[i]];
        }
        return out;
    }

    friend bool operator==(const CoordinateProjector &, const CoordinateProjector &) = default;

   private:
    void require_dim(std::size_t d) const;

    std::size_t dim_;
    std::vector<std::size_t> kept_;
};

/// m vectors in an n-dimensional space. Carries no Parseval claim; see is_parseval.
template <FieldScalar T>
class EutacticStar {
   public:
    /// Throws DimensionMismatch if some vector is not of dimension `ambient_dim`.
    EutacticStar(std::size_t ambient_dim, std::vector<Vector<T>> vectors);

    std::size_t ambient_dim() const {
        return ambient_dim_;
    }
    std::size_t source_dim() const {
        return vectors_.size();
    }
    const std::vector<Vector<T>> &vectors() const {
        return vectors_;
    }

    friend bool operator==(const EutacticStar &, const EutacticStar &) = default;

   private:
    std::size_t ambient_dim_;
    std::vector<Vector<T>> vectors_;
};

template <FieldScalar T>
struct ParsevalReport {
    bool parseval;
    /// Frobenius norm of (sum of dyads - identity).
    double defect;
    Matrix<T> resolution;
};

template <FieldScalar T>
struct Dilation {
    OrthonormalBasis<T> basis;
    CoordinateProjector projector;
};

/// Sum of the dyads of `vectors`, each of dimension `dim`.
template <FieldScalar T>
Matrix<T> resolution_of_identity(std::span<const Vector<T>> vectors, std::size_t dim);

/// Strict Parseval test: the defect must be exactly zero on the exact backend, below `tol` on floats.
template <FieldScalar T>
ParsevalReport<T> is_parseval(const EutacticStar<T> &star, double tol = kDefaultTolerance);

template <FieldScalar T>
double eutacticity_defect(const EutacticStar<T> &star);

/// {P e_1, ..., P e_m} restricted to the kept coordinates. Always Parseval.
template <FieldScalar T>
EutacticStar<T> project_basis(const OrthonormalBasis<T> &basis, const CoordinateProjector &projector);

/// Lifts a Parseval star to an orthonormal basis of R^m and the projector keeping the first n
/// coordinates, such that project_basis(basis, projector) == star.
///
/// The n x m matrix whose columns are the star vectors has orthonormal rows; it is completed to an
/// m x m orthogonal matrix by Gram-Schmidt over the standard basis vectors in index order,
/// skipping candidates whose residual norm falls below 1e-8. The first n rows are copied verbatim,
/// so the round trip reproduces the star bit for bit. On the exact backend every residual norm
/// must have a square root in Q(sqrt 2), otherwise NotRepresentable is thrown.
///
/// Throws NotParseval if the star's defect exceeds `tol` (or is nonzero, exact backend).
template <FieldScalar T>
Dilation<T> naimark_dilate(const EutacticStar<T> &star, double tol = kDefaultTolerance);

}  // namespace eutactic

#endif
