#include "eutactic/frames.h"

#include <algorithm>
#include <string>

namespace eutactic {

template <FieldScalar T>
OrthonormalBasis<T>::OrthonormalBasis(std::vector<Vector<T>> vectors, double tol) : vectors_(std::move(vectors)) {
    const std::size_t m = vectors_.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (vectors_[i].dim() != m) {
            throw DimensionMismatch("basis vector " + std::to_string(i + 1) + " has dimension " +
                                    std::to_string(vectors_[i].dim()) + ", expected " + std::to_string(m));
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            T ip = inner(vectors_[i], vectors_[j]);
            T expected(i == j ? 1 : 0);
            if (!ScalarTraits<T>::is_zero(ip - expected, tol)) {
                throw NotOrthonormal("basis vectors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                     " have inner product " + format_scalar(ip));
            }
        }
    }
}

CoordinateProjector::CoordinateProjector(std::size_t dim, std::vector<std::size_t> kept)
    : dim_(dim), kept_(std::move(kept)) {
    std::sort(kept_.begin(), kept_.end());
    if (std::adjacent_find(kept_.begin(), kept_.end()) != kept_.end()) {
        throw DomainError("projector keeps a coordinate twice");
    }
    if (!kept_.empty() && kept_.back() >= dim_) {
        throw DomainError("projector coordinate " + std::to_string(kept_.back() + 1) + " exceeds dimension " +
                          std::to_string(dim_));
    }
}

CoordinateProjector CoordinateProjector::full(std::size_t dim) {
    std::vector<std::size_t> all(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        all[i] = i;
    }
    return CoordinateProjector(dim, std::move(all));
}

bool CoordinateProjector::keeps(std::size_t coordinate) const {
    return std::binary_search(kept_.begin(), kept_.end(), coordinate);
}

CoordinateProjector CoordinateProjector::complement() const {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (!keeps(i)) {
            rest.push_back(i);
        }
    }
    return CoordinateProjector(dim_, std::move(rest));
}

void CoordinateProjector::require_dim(std::size_t d) const {
    if (d != dim_) {
        throw DimensionMismatch("projector of dimension " + std::to_string(dim_) + " applied to dimension " +
                                std::to_string(d));
    }
}

template <FieldScalar T>
EutacticStar<T>::EutacticStar(std::size_t ambient_dim, std::vector<Vector<T>> vectors)
    : ambient_dim_(ambient_dim), vectors_(std::move(vectors)) {
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        if (vectors_[i].dim() != ambient_dim_) {
            throw DimensionMismatch("star vector " + std::to_string(i + 1) + " has dimension " +
                                    std::to_string(vectors_[i].dim()) + ", expected " + std::to_string(ambient_dim_));
        }
    }
}

template <FieldScalar T>
Matrix<T> resolution_of_identity(std::span<const Vector<T>> vectors, std::size_t dim) {
    Matrix<T> sum(dim, dim);
    for (const auto &v : vectors) {
        if (v.dim() != dim) {
            throw DimensionMismatch("vector of dimension " + std::to_string(v.dim()) + " in a resolution of R^" +
                                    std::to_string(dim));
        }
        sum += dyad(v);
    }
    return sum;
}

template <FieldScalar T>
ParsevalReport<T> is_parseval(const EutacticStar<T> &star, double tol) {
    Matrix<T> resolution = resolution_of_identity<T>(star.vectors(), star.ambient_dim());
    Matrix<T> deviation = resolution - Matrix<T>::identity(star.ambient_dim());
    double defect = frobenius_norm(deviation);
    bool parseval;
    if constexpr (backend_of<T> == Backend::exact) {
        parseval = deviation.is_zero();
    } else {
        parseval = defect < tol;
    }
    return {parseval, defect, std::move(resolution)};
}

template <FieldScalar T>
double eutacticity_defect(const EutacticStar<T> &star) {
    return is_parseval(star).defect;
}

template <FieldScalar T>
EutacticStar<T> project_basis(const OrthonormalBasis<T> &basis, const CoordinateProjector &projector) {
    if (projector.dim() != basis.dim()) {
        throw DimensionMismatch("projector of dimension " + std::to_string(projector.dim()) + " for a basis of R^" +
                                std::to_string(basis.dim()));
    }
    std::vector<Vector<T>> projected;
    projected.reserve(basis.dim());
    for (const auto &e : basis.vectors()) {
        projected.push_back(projector.restrict(e));
    }
    return EutacticStar<T>(projector.rank(), std::move(projected));
}

template <FieldScalar T>
Dilation<T> naimark_dilate(const EutacticStar<T> &star, double tol) {
    auto report = is_parseval(star, tol);
    if (!report.parseval) {
        throw NotParseval("star is not Parseval (defect " + format_double(report.defect) + ")");
    }
    const std::size_t n = star.ambient_dim();
    const std::size_t m = star.source_dim();

    // Rows of the n x m synthesis matrix are orthonormal; complete them to m rows.
    std::vector<Vector<T>> rows;
    rows.reserve(m);
    for (std::size_t r = 0; r < n; ++r) {
        Vector<T> row(m);
        for (std::size_t c = 0; c < m; ++c) {
            row[c] = star.vectors()[c][r];
        }
        rows.push_back(std::move(row));
    }
    constexpr double kSkipNorm = 1e-8;
    for (std::size_t k = 0; k < m && rows.size() < m; ++k) {
        Vector<T> candidate = Vector<T>::unit(m, k);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &row : rows) {
                candidate -= inner(row, candidate) * row;
            }
        }
        T norm2 = squared_norm(candidate);
        if (ScalarTraits<T>::to_double(norm2) < kSkipNorm * kSkipNorm) {
            continue;
        }
        auto norm = ScalarTraits<T>::sqrt(norm2);
        if (!norm) {
            throw NotRepresentable("completion vector norm sqrt(" + format_scalar(norm2) +
                                   ") is outside Q(sqrt 2)");
        }
        if constexpr (backend_of<T> == Backend::exact) {
            candidate *= norm->inverse();
        } else {
            candidate *= 1.0 / *norm;
        }
        rows.push_back(std::move(candidate));
    }
    if (rows.size() != m) {
        throw Error("Gram-Schmidt completion found only " + std::to_string(rows.size()) + " of " + std::to_string(m) +
                    " rows");
    }

    std::vector<Vector<T>> lifted;
    lifted.reserve(m);
    for (std::size_t c = 0; c < m; ++c) {
        Vector<T> column(m);
        for (std::size_t r = 0; r < m; ++r) {
            column[r] = rows[r][c];
        }
        lifted.push_back(std::move(column));
    }
    std::vector<std::size_t> first(n);
    for (std::size_t i = 0; i < n; ++i) {
        first[i] = i;
    }
    return {OrthonormalBasis<T>(std::move(lifted), std::max(tol, 1e-9)), CoordinateProjector(m, std::move(first))};
}

#define EUTACTIC_INSTANTIATE_FRAMES(T)                                                                 \
    template class OrthonormalBasis<T>;                                                                \
    template class EutacticStar<T>;                                                                    \
    template Matrix<T> resolution_of_identity<T>(std::span<const Vector<T>>, std::size_t);             \
    template ParsevalReport<T> is_parseval<T>(const EutacticStar<T> &, double);                        \
    template double eutacticity_defect<T>(const EutacticStar<T> &);                                    \
    template EutacticStar<T> project_basis<T>(const OrthonormalBasis<T> &, const CoordinateProjector &); \
    template Dilation<T> naimark_dilate<T>(const EutacticStar<T> &, double);

EUTACTIC_INSTANTIATE_FRAMES(double)
EUTACTIC_INSTANTIATE_FRAMES(QuadScalar)

}  // namespace eutactic
