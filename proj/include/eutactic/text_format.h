#ifndef EUTACTIC_TEXT_FORMAT_H
#define EUTACTIC_TEXT_FORMAT_H

#include <string>
#include <string_view>
#include <variant>

#include "eutactic/frames.h"
#include "eutactic/interferometer.h"
#include "eutactic/leakage.h"
#include "eutactic/sharing.h"

// Line-oriented text documents. Every document starts with `kind <name>`; each following
// line is `<key> <fields>`. Vector rows are comma-separated scalars in the scalar grammar
// (exact: `p/q + r/s*s2`, float: shortest scientific notation). Indices are 1-based.
// Blank lines and lines starting with '#' are ignored on input. Writers emit the canonical
// form, so parse -> write is the identity on canonical files.

namespace eutactic {

template <template <class> class X>
using AnyBackend = std::variant<X<QuadScalar>, X<double>>;

using AnyStar = AnyBackend<EutacticStar>;
using AnyBasis = AnyBackend<OrthonormalBasis>;
using AnyCodebook = AnyBackend<Codebook>;
using AnyShare = AnyBackend<Share>;
using AnyMatrix = AnyBackend<Matrix>;

/// Value of the `kind` line, for dispatch.
std::string document_kind(std::string_view text);

AnyStar read_star(std::string_view text);
template <FieldScalar T>
std::string write_star(const EutacticStar<T> &star);

AnyBasis read_basis(std::string_view text);
template <FieldScalar T>
std::string write_basis(const OrthonormalBasis<T> &basis);

CoordinateProjector read_projector(std::string_view text);
std::string write_projector(const CoordinateProjector &projector);

AnyCodebook read_codebook(std::string_view text);
template <FieldScalar T>
std::string write_codebook(const Codebook<T> &book);

ShareSplit read_split(std::string_view text);
std::string write_split(const ShareSplit &split);

AnyShare read_share(std::string_view text);
template <FieldScalar T>
std::string write_share(const Share<T> &share);

/// The backend tag is `exact` iff every angle is an exact multiple of pi/4.
RotationCircuit read_circuit(std::string_view text);
std::string write_circuit(const RotationCircuit &circuit);

AnyMatrix read_matrix(std::string_view text);
template <FieldScalar T>
std::string write_matrix(const Matrix<T> &m);

std::string write_leakage_report(const LeakageReport &report);

}  // namespace eutactic

#endif
