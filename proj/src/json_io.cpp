#include "tomoctx/json_io.hpp"

#include <nlohmann/json.hpp>

namespace tomoctx::json_io {

using nlohmann::json;

namespace {
json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("expected complex entry as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}
}  // namespace

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            row.push_back(complex_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return json{{"dim", m.rows()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j) {
    const int n = j.at("dim").get<int>();
    if (n < 1) throw std::invalid_argument("matrix_from_json: dim must be >= 1");
    const json& entries = j.at("entries");
    if (int(entries.size()) != n)
        throw std::invalid_argument("matrix_from_json: row count mismatch");
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        if (int(entries[i].size()) != n)
            throw std::invalid_argument("matrix_from_json: column count mismatch");
        for (int k = 0; k < n; ++k) m(i, k) = complex_from_json(entries[i][k]);
    }
    if (!m.allFinite())
        throw std::invalid_argument("matrix_from_json: non-finite entries");
    return m;
}

json vector_to_json(const Vector& v) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        entries.push_back(complex_to_json(v(i)));
    return json{{"dim", v.size()}, {"entries", std::move(entries)}};
}

Vector vector_from_json(const json& j) {
    const int n = j.at("dim").get<int>();
    const json& entries = j.at("entries");
    if (int(entries.size()) != n)
        throw std::invalid_argument("vector_from_json: size mismatch");
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = complex_from_json(entries[i]);
    if (!v.allFinite())
        throw std::invalid_argument("vector_from_json: non-finite entries");
    return v;
}

}  // namespace tomoctx::json_io
