#include "ceh/io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace ceh::io {

namespace {

double parse_real(const std::string& text, const std::string& whole) {
    if (text.empty()) throw ParseError("empty number in \"" + whole + "\"");
    // from_chars rejects a leading '+'.
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (*first == '+') ++first;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError("malformed number \"" + text + "\" in \"" + whole + "\"");
    }
    return value;
}

// Coefficient of i: "" or "+" -> 1, "-" -> -1.
double parse_imag_coefficient(const std::string& text, const std::string& whole) {
    if (text.empty() || text == "+") return 1.0;
    if (text == "-") return -1.0;
    return parse_real(text, whole);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

}  // namespace

cplx parse_complex(const std::string& text) {
    if (text.empty()) throw ParseError("empty complex literal");
    if (text.find_first_of(" \t") != std::string::npos) {
        throw ParseError("complex literal must not contain spaces: \"" + text + "\"");
    }
    if (text.back() != 'i') return {parse_real(text, text), 0.0};
    const std::string body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not a leading sign or an exponent sign.
    std::size_t split_at = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split_at = k;
            break;
        }
    }
    if (split_at == std::string::npos) return {0.0, parse_imag_coefficient(body, text)};
    return {parse_real(body.substr(0, split_at), text),
            parse_imag_coefficient(body.substr(split_at), text)};
}

CVector parse_complex_vector(const std::string& text) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.empty()) throw ParseError("empty point");
    CVector v(static_cast<Eigen::Index>(parts.size()));
    for (std::size_t k = 0; k < parts.size(); ++k) v[static_cast<Eigen::Index>(k)] = parse_complex(parts[k]);
    return v;
}

ChartPoint parse_chart_point(const std::string& text, int n) {
    const std::vector<std::string> parts = split(text, ':');
    if (static_cast<int>(parts.size()) != n + 1) {
        throw ParseError("chart spec \"" + text + "\" needs " + std::to_string(n + 1) +
                         " ':'-separated fields (chart, z, " + std::to_string(n - 1) + " zeta values)");
    }
    int chart = 0;
    const auto [ptr, ec] = std::from_chars(parts[0].data(), parts[0].data() + parts[0].size(), chart);
    if (ec != std::errc() || ptr != parts[0].data() + parts[0].size() || chart < 1 || chart > n) {
        throw ParseError("chart index must be an integer in 1.." + std::to_string(n));
    }
    ChartPoint p;
    p.chart = chart - 1;
    p.z = parse_complex(parts[1]);
    p.zeta.resize(n - 1);
    for (int k = 0; k < n - 1; ++k) p.zeta[k] = parse_complex(parts[k + 2]);
    return p;
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t k = 0; k < fields.size(); ++k) {
        if (k) out += ',';
        out += csv_field(fields[k]);
    }
    return out;
}

std::string csv_row(const std::vector<double>& values) {
    std::vector<std::string> fields;
    fields.reserve(values.size());
    for (double v : values) fields.push_back(format_double(v));
    return csv_row(fields);
}

ComplexJson to_json(const CVector& v) {
    ComplexJson out{nlohmann::json::array(), nlohmann::json::array()};
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        out.re.push_back(v[k].real());
        out.im.push_back(v[k].imag());
    }
    return out;
}

ComplexJson to_json(const CMatrix& m) {
    ComplexJson out{nlohmann::json::array(), nlohmann::json::array()};
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        const ComplexJson row = to_json(CVector(m.row(r).transpose()));
        out.re.push_back(row.re);
        out.im.push_back(row.im);
    }
    return out;
}

ComplexJson to_json(const ChristoffelTensor& gamma) {
    const int n = gamma.dim();
    ComplexJson out{nlohmann::json::array(), nlohmann::json::array()};
    for (int l = 0; l < n; ++l) {
        CMatrix slice(n, n);
        for (int mu = 0; mu < n; ++mu)
            for (int al = 0; al < n; ++al) slice(mu, al) = gamma(l, mu, al);
        const ComplexJson s = to_json(slice);
        out.re.push_back(s.re);
        out.im.push_back(s.im);
    }
    return out;
}

ComplexJson to_json(const RiemannTensor& r) {
    const int n = r.dim();
    ComplexJson out{nlohmann::json::array(), nlohmann::json::array()};
    for (int mu = 0; mu < n; ++mu) {
        ComplexJson outer{nlohmann::json::array(), nlohmann::json::array()};
        for (int nu = 0; nu < n; ++nu) {
            CMatrix slice(n, n);
            for (int al = 0; al < n; ++al)
                for (int be = 0; be < n; ++be) slice(al, be) = r(mu, nu, al, be);
            const ComplexJson s = to_json(slice);
            outer.re.push_back(s.re);
            outer.im.push_back(s.im);
        }
        out.re.push_back(outer.re);
        out.im.push_back(outer.im);
    }
    return out;
}

nlohmann::json to_json(const Eigen::MatrixXd& m) {
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        out.push_back(row);
    }
    return out;
}

void put(nlohmann::json& doc, const std::string& key, const ComplexJson& value) {
    doc[key] = value.re;
    doc[key + "_im"] = value.im;
}

}  // namespace ceh::io
