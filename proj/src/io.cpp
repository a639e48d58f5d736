#include "fupdate/io.hpp"

#include "fupdate/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace fupdate {

using nlohmann::json;

namespace {

std::string rows_json(const Matrix& m, const std::string& indent) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",\n" + indent + " " : "") << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

FieldPtr field_from_json(const json& f) {
    const auto p = f.at("p").get<std::uint32_t>();
    const auto k = f.value("k", 1u);
    if (!is_prime(p)) throw ParseError("field.p = " + std::to_string(p) + " is not prime");
    if (k == 0) throw ParseError("field.k must be at least 1");
    const FieldPtr base = Field::prime(p);
    if (k == 1) return base;
    if (!f.contains("modulus")) return find_primitive_modulus(base, k);
    auto mod = f.at("modulus").get<std::vector<Elem>>();
    if (mod.size() != k + 1) throw ParseError("field.modulus must have k + 1 coefficients");
    try {
        return Field::extension(base, std::move(mod));
    } catch (const Error& e) {
        throw ParseError(std::string("field.modulus: ") + e.what());
    }
}

Matrix matrix_from_json(const json& rows, const FieldPtr& field, std::size_t cols_if_empty,
                        const char* what) {
    const auto data = rows.get<std::vector<std::vector<std::uint64_t>>>();
    const std::size_t cols = data.empty() ? cols_if_empty : data.front().size();
    Matrix m(field, data.size(), cols);
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (data[i].size() != cols) throw ParseError(std::string(what) + ": ragged rows");
        for (std::size_t j = 0; j < cols; ++j) {
            if (!field->contains(data[i][j])) {
                throw ParseError(std::string(what) + ": entry " + std::to_string(data[i][j]) +
                                 " outside GF(" + std::to_string(field->order()) + ")");
            }
            m(i, j) = static_cast<Elem>(data[i][j]);
        }
    }
    return m;
}

} // namespace

std::string serialize_field(const FieldPtr& field) {
    const bool prime = field->is_prime_field();
    if (!prime && !field->base()->is_prime_field()) {
        throw InvalidParams("only GF(p) and GF(p^k) are serializable");
    }
    std::ostringstream os;
    os << "{\"p\": " << field->characteristic() << ", \"k\": " << field->degree()
       << ", \"modulus\": [";
    const auto& mod = field->modulus();
    for (std::size_t i = 0; i < mod.size(); ++i) os << (i ? ", " : "") << mod[i];
    os << "]}";
    return os.str();
}

FunctionUpdateProblem parse_problem(const std::string& text) {
    try {
        const json doc = json::parse(text);
        const FieldPtr field = field_from_json(doc.at("field"));
        const auto eps = doc.at("epsilon").get<std::size_t>();
        if (doc.contains("striped")) {
            const json& st = doc.at("striped");
            Matrix c = matrix_from_json(st.at("C"), field, 0, "striped.C");
            const auto a = st.at("a").get<std::size_t>();
            if (doc.contains("A")) {
                Matrix am = matrix_from_json(doc.at("A"), field, 0, "A");
                return FunctionUpdateProblem(std::move(am), eps, StripedForm{std::move(c), a});
            }
            return FunctionUpdateProblem::striped(std::move(c), a, eps);
        }
        return FunctionUpdateProblem(matrix_from_json(doc.at("A"), field, 0, "A"), eps);
    } catch (const json::exception& e) {
        throw ParseError(std::string("problem file: ") + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("invalid problem: ") + e.what());
    }
}

std::string serialize_problem(const FunctionUpdateProblem& p) {
    std::ostringstream os;
    os << "{\n  \"field\": " << serialize_field(p.field()) << ",\n";
    os << "  \"epsilon\": " << p.epsilon() << ",\n";
    os << "  \"A\": " << rows_json(p.A(), "  ");
    if (const auto& st = p.striped_form()) {
        os << ",\n  \"striped\": {\"a\": " << st->copies
           << ", \"C\": " << rows_json(st->block, "                          ") << "}";
    }
    os << "\n}\n";
    return os.str();
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

namespace {
void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path.string());
    out << text;
}

struct MatrixHeader {
    std::size_t rows, cols;
    std::uint64_t q;
};

MatrixHeader read_header(std::istringstream& in) {
    MatrixHeader h{};
    if (!(in >> h.rows >> h.cols >> h.q)) throw ParseError("matrix file: bad header");
    return h;
}

Matrix read_body(std::istringstream& in, const MatrixHeader& h, const FieldPtr& field) {
    Matrix m(field, h.rows, h.cols);
    for (std::size_t i = 0; i < h.rows; ++i)
        for (std::size_t j = 0; j < h.cols; ++j) {
            std::uint64_t v;
            if (!(in >> v)) throw ParseError("matrix file: too few entries");
            if (v >= h.q) throw ParseError("matrix file: entry " + std::to_string(v) + " >= q");
            m(i, j) = static_cast<Elem>(v);
        }
    std::string extra;
    if (in >> extra) throw ParseError("matrix file: trailing data '" + extra + "'");
    return m;
}
} // namespace

Matrix parse_matrix(const std::string& text, const FieldPtr& field) {
    std::istringstream in(text);
    const auto h = read_header(in);
    if (h.q != field->order()) {
        throw ParseError("matrix file over GF(" + std::to_string(h.q) + "), expected GF(" +
                         std::to_string(field->order()) + ")");
    }
    return read_body(in, h, field);
}

Matrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    const auto h = read_header(in);
    FieldPtr field;
    try {
        field = Field::standard(h.q);
    } catch (const Error& e) {
        throw ParseError(std::string("matrix file: ") + e.what());
    }
    return read_body(in, h, field);
}

std::string serialize_matrix(const Matrix& m) {
    std::ostringstream os;
    os << m.rows() << " " << m.cols() << " " << m.field()->order() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
        os << "\n";
    }
    return os.str();
}

FunctionUpdateProblem load_problem(const std::filesystem::path& path) {
    return parse_problem(read_text(path));
}

void save_problem(const std::filesystem::path& path, const FunctionUpdateProblem& p) {
    write_text(path, serialize_problem(p));
}

Matrix load_matrix(const std::filesystem::path& path, const FieldPtr& field) {
    return parse_matrix(read_text(path), field);
}

Matrix load_matrix(const std::filesystem::path& path) { return parse_matrix(read_text(path)); }

void save_matrix(const std::filesystem::path& path, const Matrix& m) {
    write_text(path, serialize_matrix(m));
}

Vector parse_vector(const std::string& text, const FieldPtr& field) {
    const Matrix m = parse_matrix(text, field);
    if (m.rows() != 1) throw ParseError("vector file must hold exactly one row");
    return Vector(m.row(0).begin(), m.row(0).end());
}

std::string serialize_vector(const FieldPtr& field, std::span<const Elem> v) {
    return serialize_matrix(Matrix::row_vector(field, v));
}

Vector load_vector(const std::filesystem::path& path, const FieldPtr& field) {
    return parse_vector(read_text(path), field);
}

std::string export_fic(const FICProblem& f) {
    std::ostringstream os;
    os << "{\n  \"index_base\": 1,\n  \"field\": " << serialize_field(f.field()) << ",\n";
    os << "  \"n\": " << f.n() << ",\n  \"users\": " << f.users().size() << ",\n";
    bool shared = !f.users().empty();
    for (const auto& u : f.users()) shared = shared && u.demand == f.users().front().demand;
    if (shared) os << "  \"A\": " << rows_json(*f.users().front().demand, "  ") << ",\n";
    os << "  \"side_information\": [";
    for (std::size_t i = 0; i < f.users().size(); ++i) {
        os << (i ? ",\n    " : "\n    ") << "[";
        const auto& x = f.users()[i].side_info;
        for (std::size_t j = 0; j < x.size(); ++j) os << (j ? ", " : "") << x[j] + 1;
        os << "]";
    }
    os << (f.users().empty() ? "]" : "\n  ]");
    if (!shared) {
        os << ",\n  \"demands\": [";
        for (std::size_t i = 0; i < f.users().size(); ++i) {
            os << (i ? ",\n    " : "\n    ") << rows_json(*f.users()[i].demand, "    ");
        }
        os << (f.users().empty() ? "]" : "\n  ]");
    }
    os << "\n}\n";
    return os.str();
}

} // namespace fupdate
