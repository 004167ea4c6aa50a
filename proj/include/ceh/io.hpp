#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ceh/charts.hpp"
#include "ceh/curvature.hpp"

namespace ceh::io {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// "1.5", "-2i", "i", "1+0i", "3e-2-4.5i"; no spaces.
cplx parse_complex(const std::string& text);

// Comma-separated complex literals.
CVector parse_complex_vector(const std::string& text);

// "i:z:zeta_1:...:zeta_{n-1}" with a 1-based chart index.
ChartPoint parse_chart_point(const std::string& text, int n);

// 17 significant digits, "." decimal separator.
std::string format_double(double x);

// RFC 4180 field quoting: fields containing ',', '"', CR or LF are quoted
// and embedded quotes doubled.
std::string csv_field(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);
std::string csv_row(const std::vector<double>& values);

// Real and imaginary parts of a tensor as nested arrays.
struct ComplexJson {
    nlohmann::json re;
    nlohmann::json im;
};

ComplexJson to_json(const CVector& v);
ComplexJson to_json(const CMatrix& m);
ComplexJson to_json(const ChristoffelTensor& gamma);
ComplexJson to_json(const RiemannTensor& r);
nlohmann::json to_json(const Eigen::MatrixXd& m);

// Stores parts under key and key + "_im".
void put(nlohmann::json& doc, const std::string& key, const ComplexJson& value);

}  // namespace ceh::io
