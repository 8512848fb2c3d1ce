#include "picard/json_io.hpp"

#include <stdexcept>

namespace picard {

namespace {

json int_to_json(const mpz_class& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

mpz_class int_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

}  // namespace

json to_json(const GaussianInt& z) { return json::array({int_to_json(z.re()), int_to_json(z.im())}); }

json to_json(const GVec3& v) { return json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])}); }

json to_json(const GMat3& m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int j = 0; j < 3; ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

GaussianInt gaussian_from_json(const json& j) {
    if (j.is_number_integer()) return GaussianInt(j.get<long>());
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("expected [re, im], got " + j.dump());
    return {int_from_json(j[0]), int_from_json(j[1])};
}

GVec3 vector_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("expected a 3-vector, got " + j.dump());
    return {gaussian_from_json(j[0]), gaussian_from_json(j[1]), gaussian_from_json(j[2])};
}

GMat3 matrix_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("expected a 3x3 matrix, got " + j.dump());
    GMat3 m;
    for (int i = 0; i < 3; ++i) {
        GVec3 row = vector_from_json(j[i]);
        for (int k = 0; k < 3; ++k) m(i, k) = row[k];
    }
    return m;
}

}  // namespace picard
