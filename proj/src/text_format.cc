#include "eutactic/text_format.h"

#include <charconv>
#include <sstream>
#include <vector>

namespace eutactic {

namespace {

struct Field {
    std::string_view text;
    std::size_t column;  // 1-based column of text[0]
};

struct Line {
    std::size_t number;
    std::string_view key;
    Field rest;
};

std::string_view trim(std::string_view s, std::size_t &offset) {
    std::size_t start = 0;
    while (start < s.size() && (s[start] == ' ' || s[start] == '\t' || s[start] == '\r')) {
        ++start;
    }
    std::size_t end = s.size();
    while (end > start && (s[end - 1] == ' ' || s[end - 1] == '\t' || s[end - 1] == '\r')) {
        --end;
    }
    offset += start;
    return s.substr(start, end - start);
}

class Reader {
   public:
    explicit Reader(std::string_view text) {
        std::size_t number = 0;
        while (!text.empty()) {
            ++number;
            std::size_t nl = text.find('\n');
            std::string_view raw = text.substr(0, nl);
            text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
            std::size_t offset = 0;
            std::string_view line = trim(raw, offset);
            if (line.empty() || line.front() == '#') {
                continue;
            }
            std::size_t space = line.find_first_of(" \t");
            std::string_view key = line.substr(0, space);
            std::size_t rest_offset = offset + (space == std::string_view::npos ? line.size() : space);
            std::string_view rest = space == std::string_view::npos ? std::string_view() : line.substr(space);
            rest = trim(rest, rest_offset);
            lines_.push_back({number, key, {rest, rest_offset + 1}});
            last_line_ = number;
        }
    }

    const Line &expect(std::string_view key) {
        if (pos_ >= lines_.size()) {
            throw ParseError("expected '" + std::string(key) + "', found end of document", last_line_ + 1, 1);
        }
        const Line &line = lines_[pos_];
        if (line.key != key) {
            throw ParseError("expected '" + std::string(key) + "', found '" + std::string(line.key) + "'", line.number,
                             1);
        }
        ++pos_;
        return line;
    }
    bool next_is(std::string_view key) const {
        return pos_ < lines_.size() && lines_[pos_].key == key;
    }
    void expect_kind(std::string_view kind) {
        const Line &line = expect("kind");
        if (line.rest.text != kind) {
            throw ParseError("expected a '" + std::string(kind) + "' document, found '" + std::string(line.rest.text) +
                                 "'",
                             line.number, line.rest.column);
        }
    }
    void expect_end() const {
        if (pos_ < lines_.size()) {
            throw ParseError("unexpected '" + std::string(lines_[pos_].key) + "'", lines_[pos_].number, 1);
        }
    }

    std::size_t count(std::string_view key) {
        const Line &line = expect(key);
        return parse_count(line.rest, line.number);
    }
    Backend backend() {
        const Line &line = expect("backend");
        try {
            return parse_backend(line.rest.text);
        } catch (const DomainError &e) {
            throw ParseError(e.what(), line.number, line.rest.column);
        }
    }

    static std::size_t parse_count(const Field &f, std::size_t line) {
        std::size_t value = 0;
        auto result = std::from_chars(f.text.data(), f.text.data() + f.text.size(), value);
        if (result.ec != std::errc() || result.ptr != f.text.data() + f.text.size() || f.text.empty()) {
            throw ParseError("expected a non-negative integer, found '" + std::string(f.text) + "'", line, f.column);
        }
        return value;
    }

   private:
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
    std::size_t last_line_ = 0;
};

std::vector<Field> split_fields(const Field &f, char separator) {
    std::vector<Field> out;
    std::string_view rest = f.text;
    std::size_t column = f.column;
    while (true) {
        std::size_t cut = separator == ' ' ? rest.find_first_of(" \t") : rest.find(separator);
        std::string_view piece = rest.substr(0, cut);
        std::size_t offset = 0;
        std::string_view trimmed = trim(piece, offset);
        if (!trimmed.empty() || separator != ' ') {
            out.push_back({trimmed, column + offset});
        }
        if (cut == std::string_view::npos) {
            break;
        }
        column += cut + 1;
        rest.remove_prefix(cut + 1);
    }
    return out;
}

template <FieldScalar T>
T parse_field(const Field &f, std::size_t line) {
    try {
        return parse_scalar_as<T>(f.text);
    } catch (const ParseError &e) {
        throw ParseError(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2), line,
                         f.column + e.column - 1);
    }
}

template <FieldScalar T>
Vector<T> parse_vector(const Line &line, std::size_t dim) {
    if (dim == 0) {
        if (!line.rest.text.empty()) {
            throw ParseError("expected no entries", line.number, line.rest.column);
        }
        return Vector<T>();
    }
    auto fields = split_fields(line.rest, ',');
    if (fields.size() != dim) {
        throw ParseError("expected " + std::to_string(dim) + " entries, found " + std::to_string(fields.size()),
                         line.number, line.rest.column);
    }
    Vector<T> v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        v[i] = parse_field<T>(fields[i], line.number);
    }
    return v;
}

std::vector<std::size_t> parse_indices(const Line &line, std::size_t dim) {
    std::vector<std::size_t> out;
    for (const Field &f : split_fields(line.rest, ' ')) {
        std::size_t k = Reader::parse_count(f, line.number);
        if (k < 1 || k > dim) {
            throw ParseError("index " + std::to_string(k) + " outside 1.." + std::to_string(dim), line.number, f.column);
        }
        out.push_back(k - 1);
    }
    return out;
}

CoordinateProjector parse_projector_line(const Line &line, std::size_t dim) {
    try {
        return CoordinateProjector(dim, parse_indices(line, dim));
    } catch (const DomainError &e) {
        throw ParseError(e.what(), line.number, line.rest.column);
    }
}

template <class Fn>
auto dispatch(Backend backend, Fn &&fn) {
    if (backend == Backend::exact) {
        return fn.template operator()<QuadScalar>();
    }
    return fn.template operator()<double>();
}

template <FieldScalar T>
std::string join(const Vector<T> &v) {
    std::string out;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) {
            out += ", ";
        }
        out += format_scalar(v[i]);
    }
    return out;
}

std::string join_indices(const std::vector<std::size_t> &indices) {
    std::string out;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i) {
            out += ' ';
        }
        out += std::to_string(indices[i] + 1);
    }
    return out;
}

void line(std::string &out, std::string_view key, std::string_view value) {
    out += key;
    if (!value.empty()) {
        out += ' ';
        out += value;
    }
    out += '\n';
}

template <FieldScalar T>
void header(std::string &out, std::string_view kind) {
    line(out, "kind", kind);
    line(out, "backend", backend_name(backend_of<T>));
}

/// Wraps library errors raised while assembling a parsed object.
template <class Fn>
auto build(std::size_t line_number, Fn &&fn) {
    try {
        return fn();
    } catch (const ParseError &) {
        throw;
    } catch (const Error &e) {
        throw ParseError(e.what(), line_number, 1);
    }
}

}  // namespace

std::string document_kind(std::string_view text) {
    Reader reader(text);
    const Line &line = reader.expect("kind");
    return std::string(line.rest.text);
}

AnyStar read_star(std::string_view text) {
    Reader r(text);
    r.expect_kind("star");
    Backend backend = r.backend();
    std::size_t n = r.count("dim");
    std::size_t m = r.count("source_dim");
    return dispatch(backend, [&]<class T>() -> AnyStar {
        std::vector<Vector<T>> vectors;
        for (std::size_t i = 0; i < m; ++i) {
            vectors.push_back(parse_vector<T>(r.expect("vector"), n));
        }
        r.expect_end();
        return EutacticStar<T>(n, std::move(vectors));
    });
}

template <FieldScalar T>
std::string write_star(const EutacticStar<T> &star) {
    std::string out;
    header<T>(out, "star");
    line(out, "dim", std::to_string(star.ambient_dim()));
    line(out, "source_dim", std::to_string(star.source_dim()));
    for (const auto &v : star.vectors()) {
        line(out, "vector", join(v));
    }
    return out;
}

AnyBasis read_basis(std::string_view text) {
    Reader r(text);
    r.expect_kind("basis");
    Backend backend = r.backend();
    std::size_t m = r.count("dim");
    return dispatch(backend, [&]<class T>() -> AnyBasis {
        std::vector<Vector<T>> vectors;
        std::size_t first_line = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const Line &l = r.expect("vector");
            first_line = i == 0 ? l.number : first_line;
            vectors.push_back(parse_vector<T>(l, m));
        }
        r.expect_end();
        return build(first_line, [&] { return OrthonormalBasis<T>(std::move(vectors)); });
    });
}

template <FieldScalar T>
std::string write_basis(const OrthonormalBasis<T> &basis) {
    std::string out;
    header<T>(out, "basis");
    line(out, "dim", std::to_string(basis.dim()));
    for (const auto &v : basis.vectors()) {
        line(out, "vector", join(v));
    }
    return out;
}

CoordinateProjector read_projector(std::string_view text) {
    Reader r(text);
    r.expect_kind("projector");
    std::size_t m = r.count("dim");
    CoordinateProjector p = parse_projector_line(r.expect("keep"), m);
    r.expect_end();
    return p;
}

std::string write_projector(const CoordinateProjector &projector) {
    std::string out;
    line(out, "kind", "projector");
    line(out, "dim", std::to_string(projector.dim()));
    line(out, "keep", join_indices(projector.kept()));
    return out;
}

AnyCodebook read_codebook(std::string_view text) {
    Reader r(text);
    r.expect_kind("codebook");
    Backend backend = r.backend();
    std::size_t m = r.count("dim");
    std::size_t k = r.count("messages");
    return dispatch(backend, [&]<class T>() -> AnyCodebook {
        std::vector<Vector<T>> vectors;
        std::size_t first_line = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const Line &l = r.expect("vector");
            first_line = i == 0 ? l.number : first_line;
            vectors.push_back(parse_vector<T>(l, m));
        }
        r.expect_end();
        return build(first_line, [&] { return make_codebook<T>(std::move(vectors)); });
    });
}

template <FieldScalar T>
std::string write_codebook(const Codebook<T> &book) {
    std::string out;
    header<T>(out, "codebook");
    line(out, "dim", std::to_string(book.dim()));
    line(out, "messages", std::to_string(book.size()));
    for (const auto &v : book.messages()) {
        line(out, "vector", join(v));
    }
    return out;
}

ShareSplit read_split(std::string_view text) {
    Reader r(text);
    r.expect_kind("split");
    std::size_t m = r.count("dim");
    std::size_t parts = r.count("parts");
    std::vector<CoordinateProjector> projectors;
    std::size_t first_line = 0;
    for (std::size_t i = 0; i < parts; ++i) {
        const Line &l = r.expect("part");
        first_line = i == 0 ? l.number : first_line;
        projectors.push_back(parse_projector_line(l, m));
    }
    r.expect_end();
    return build(first_line, [&] { return ShareSplit(m, std::move(projectors)); });
}

std::string write_split(const ShareSplit &split) {
    std::string out;
    line(out, "kind", "split");
    line(out, "dim", std::to_string(split.dim()));
    line(out, "parts", std::to_string(split.parts().size()));
    for (const auto &p : split.parts()) {
        line(out, "part", join_indices(p.kept()));
    }
    return out;
}

AnyShare read_share(std::string_view text) {
    Reader r(text);
    r.expect_kind("share");
    Backend backend = r.backend();
    std::size_t m = r.count("dim");
    const Line &party_line = r.expect("party");
    std::size_t party = Reader::parse_count(party_line.rest, party_line.number);
    if (party < 1) {
        throw ParseError("party numbers start at 1", party_line.number, party_line.rest.column);
    }
    CoordinateProjector projector = parse_projector_line(r.expect("keep"), m);
    std::size_t k = r.count("messages");
    return dispatch(backend, [&]<class T>() -> AnyShare {
        std::vector<Vector<T>> fragments;
        for (std::size_t i = 0; i < k; ++i) {
            const Line &l = r.expect("fragment");
            Vector<T> f = parse_vector<T>(l, m);
            if (!(projector.apply(f) == f)) {
                throw ParseError("fragment has weight outside the share's coordinates", l.number, l.rest.column);
            }
            fragments.push_back(std::move(f));
        }
        r.expect_end();
        return Share<T>{party - 1, projector, std::move(fragments)};
    });
}

template <FieldScalar T>
std::string write_share(const Share<T> &share) {
    std::string out;
    header<T>(out, "share");
    line(out, "dim", std::to_string(share.projector.dim()));
    line(out, "party", std::to_string(share.party + 1));
    line(out, "keep", join_indices(share.projector.kept()));
    line(out, "messages", std::to_string(share.fragments.size()));
    for (const auto &f : share.fragments) {
        line(out, "fragment", join(f));
    }
    return out;
}

RotationCircuit read_circuit(std::string_view text) {
    Reader r(text);
    r.expect_kind("circuit");
    Backend backend = r.backend();
    std::size_t m = r.count("dim");
    std::size_t g = r.count("gates");
    std::vector<RotationGate> gates;
    for (std::size_t i = 0; i < g; ++i) {
        const Line &l = r.expect("gate");
        auto fields = split_fields(l.rest, ' ');
        if (fields.size() != 3) {
            throw ParseError("expected 'gate i j angle'", l.number, l.rest.column);
        }
        std::size_t a = Reader::parse_count(fields[0], l.number);
        std::size_t b = Reader::parse_count(fields[1], l.number);
        if (a < 1 || b <= a || b > m) {
            throw ParseError("gate plane must satisfy 1 <= i < j <= " + std::to_string(m), l.number, fields[0].column);
        }
        Angle angle = Angle::radians(0);
        try {
            angle = Angle::parse(fields[2].text);
        } catch (const ParseError &e) {
            throw ParseError("malformed angle '" + std::string(fields[2].text) + "'", l.number, fields[2].column);
        }
        if (backend == Backend::exact && !angle.is_exact()) {
            throw ParseError("exact circuits need angles of the form k/8*pi with k even", l.number, fields[2].column);
        }
        gates.push_back({{a - 1, b - 1}, angle});
    }
    std::vector<int> signs;
    if (r.next_is("signs")) {
        const Line &l = r.expect("signs");
        for (const Field &f : split_fields(l.rest, ' ')) {
            if (f.text == "1" || f.text == "+1") {
                signs.push_back(1);
            } else if (f.text == "-1") {
                signs.push_back(-1);
            } else {
                throw ParseError("sign must be 1 or -1", l.number, f.column);
            }
        }
    }
    r.expect_end();
    return build(1, [&] { return RotationCircuit(m, std::move(gates), std::move(signs)); });
}

std::string write_circuit(const RotationCircuit &circuit) {
    bool exact = true;
    for (const auto &g : circuit.gates()) {
        exact = exact && g.angle.is_exact();
    }
    std::string out;
    line(out, "kind", "circuit");
    line(out, "backend", backend_name(exact ? Backend::exact : Backend::floating));
    line(out, "dim", std::to_string(circuit.dim()));
    line(out, "gates", std::to_string(circuit.gates().size()));
    for (const auto &g : circuit.gates()) {
        line(out, "gate",
             std::to_string(g.plane.first + 1) + " " + std::to_string(g.plane.second + 1) + " " + g.angle.str());
    }
    if (!circuit.signs().empty()) {
        std::string signs;
        for (std::size_t i = 0; i < circuit.signs().size(); ++i) {
            signs += (i ? " " : "") + std::to_string(circuit.signs()[i]);
        }
        line(out, "signs", signs);
    }
    return out;
}

AnyMatrix read_matrix(std::string_view text) {
    Reader r(text);
    r.expect_kind("matrix");
    Backend backend = r.backend();
    std::size_t rows = r.count("rows");
    std::size_t cols = r.count("cols");
    return dispatch(backend, [&]<class T>() -> AnyMatrix {
        Matrix<T> m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            Vector<T> row = parse_vector<T>(r.expect("row"), cols);
            for (std::size_t j = 0; j < cols; ++j) {
                m(i, j) = row[j];
            }
        }
        r.expect_end();
        return m;
    });
}

template <FieldScalar T>
std::string write_matrix(const Matrix<T> &m) {
    std::string out;
    header<T>(out, "matrix");
    line(out, "rows", std::to_string(m.rows()));
    line(out, "cols", std::to_string(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        line(out, "row", join(m.row(i)));
    }
    return out;
}

std::string write_leakage_report(const LeakageReport &report) {
    std::string out;
    line(out, "kind", "leakage");
    line(out, "messages", std::to_string(report.priors.size()));
    line(out, "priors", join(Vector<double>(report.priors)));
    line(out, "parties", std::to_string(report.parties.size()));
    for (const auto &party : report.parties) {
        line(out, "party", std::to_string(party.party + 1));
        line(out, "keep", join_indices(party.projector.kept()));
        line(out, "flag", flag_name(party.flag));
        for (std::size_t i = 0; i < party.gram.rows(); ++i) {
            line(out, "gram", join(party.gram.row(i)));
        }
        for (const auto &pair : party.pairs) {
            line(out, "pair",
                 std::to_string(pair.first + 1) + " " + std::to_string(pair.second + 1) + " " +
                     format_double(pair.probability));
        }
    }
    return out;
}

#define EUTACTIC_INSTANTIATE_WRITERS(T)                                \
    template std::string write_star<T>(const EutacticStar<T> &);       \
    template std::string write_basis<T>(const OrthonormalBasis<T> &);  \
    template std::string write_codebook<T>(const Codebook<T> &);       \
    template std::string write_share<T>(const Share<T> &);             \
    template std::string write_matrix<T>(const Matrix<T> &);

EUTACTIC_INSTANTIATE_WRITERS(double)
EUTACTIC_INSTANTIATE_WRITERS(QuadScalar)

}  // namespace eutactic
