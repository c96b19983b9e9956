#include "trineq/matrix_io.hpp"

#include <fstream>

namespace trineq {

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return json{{"dim", m.rows()}, {"entries", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw ParseError("matrix object must have fields 'dim' and 'entries'");
    if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
        throw ParseError("field 'dim' must be a positive integer");
    const auto n = j["dim"].get<Eigen::Index>();
    const json& rows = j["entries"];
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n)
        throw ParseError("field 'entries' must be an array of exactly dim rows");
    ComplexMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
            throw ParseError("entries row " + std::to_string(i) +
                             " must have exactly dim elements (matrix must be square)");
        for (Eigen::Index k = 0; k < n; ++k) {
            const json& e = row[static_cast<std::size_t>(k)];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(k) +
                                 ") must be a [re, im] pair of numbers");
            const double re = e[0].get<double>();
            const double im = e[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im))
                throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(k) +
                                 ") is not finite");
            m(i, k) = Complex(re, im);
        }
    }
    return m;
}

ComplexMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return matrix_from_json(j);
}

} // namespace trineq
