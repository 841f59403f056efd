#include "charnum/json_io.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace charnum {

namespace {

Rational rational_from_number_or_string(const Json& j, const char* context) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
    throw std::invalid_argument(std::string(context) + ": expected a rational string");
}

}  // namespace

Json to_json(const Rational& r) {
    return Json(r.str());
}

Rational rational_from_json(const Json& j) {
    return rational_from_number_or_string(j, "rational");
}

Json to_json(const Integer& i) {
    if (i >= std::numeric_limits<long long>::min() &&
        i <= std::numeric_limits<long long>::max()) {
        return Json(i.convert_to<long long>());
    }
    return Json(i.str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("integer: expected a number or decimal string");
}

Json to_json(const Partition& p) {
    Json j = Json::array();
    for (int part : p.parts()) j.push_back(part);
    return j;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("partition: expected an array of integers");
    }
    std::vector<int> parts;
    parts.reserve(j.size());
    for (const Json& entry : j) {
        if (!entry.is_number_integer()) {
            throw std::invalid_argument("partition: expected an array of integers");
        }
        parts.push_back(entry.get<int>());
    }
    return Partition(parts);
}

Json to_json(const TruncatedSeries& s) {
    Json j = Json::array();
    for (const Rational& c : s.coefficients()) j.push_back(to_json(c));
    return j;
}

TruncatedSeries series_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("series: expected a non-empty array of rationals");
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const Json& entry : j) coeffs.push_back(rational_from_json(entry));
    const int order = static_cast<int>(coeffs.size()) - 1;
    return TruncatedSeries(order, std::move(coeffs));
}

Json to_json(const ChernData& data) {
    Json numbers = Json::object();
    for (const auto& [I, value] : data.numbers()) {
        numbers[I.str()] = to_json(value);
    }
    return Json{{"n", data.dimension()}, {"numbers", std::move(numbers)}};
}

ChernData chern_data_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("numbers")) {
        throw std::invalid_argument("chern data: expected {\"n\", \"numbers\"}");
    }
    int n = j.at("n").get<int>();
    ChernData::NumberMap numbers;
    for (const auto& [key, value] : j.at("numbers").items()) {
        numbers.emplace(Partition::parse(key), rational_from_json(value));
    }
    return ChernData(n, std::move(numbers));
}

Json to_json(const ChernPolynomial& poly) {
    Json j = Json::array();
    for (const auto& [mono, coeff] : poly.terms()) {
        j.push_back(Json{{"partition", to_json(mono)}, {"coefficient", to_json(coeff)}});
    }
    return j;
}

ChernPolynomial chern_polynomial_from_json(const Json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("chern polynomial: expected an array of records");
    }
    ChernPolynomial poly(0);
    bool first = true;
    for (const Json& record : j) {
        Partition mono = partition_from_json(record.at("partition"));
        Rational coeff = rational_from_json(record.at("coefficient"));
        ChernPolynomial term = ChernPolynomial::monomial(mono, coeff);
        if (first) {
            poly = std::move(term);
            first = false;
        } else {
            poly += term;
        }
    }
    return poly;
}

Json to_json(const LPolynomial& l) {
    Json j = Json::array();
    for (const auto& [I, coeff] : l.terms) {
        j.push_back(Json{{"pontrjagin_partition", to_json(I)}, {"coefficient", to_json(coeff)}});
    }
    return j;
}

LPolynomial l_polynomial_from_json(const Json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("l polynomial: expected an array of records");
    }
    LPolynomial l;
    for (const Json& record : j) {
        Partition I = partition_from_json(record.at("pontrjagin_partition"));
        if (l.terms.empty()) l.k = I.weight();
        if (I.weight() != l.k) {
            throw std::invalid_argument("l polynomial: mixed weights");
        }
        l.terms.emplace(std::move(I), rational_from_json(record.at("coefficient")));
    }
    return l;
}

Json to_json(const RationalPolynomial& p) {
    Json j = Json::array();
    for (const Rational& c : p.coefficients()) j.push_back(to_json(c));
    return j;
}

RationalPolynomial rational_polynomial_from_json(const Json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("polynomial: expected an array of rationals");
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const Json& entry : j) coeffs.push_back(rational_from_json(entry));
    return RationalPolynomial(std::move(coeffs));
}

Json to_json(const CoverInput& input) {
    Json j{{"n", input.n},
           {"d", input.d},
           {"m", input.m},
           {"chi_M", to_json(input.chi_M)},
           {"chi_N", to_json(input.chi_N)}};
    Json nc = Json::array();
    for (const Rational& c : input.normal_chern) nc.push_back(to_json(c));
    j["normal_chern"] = std::move(nc);
    j["sigma_M"] = input.sigma_M.has_value() ? to_json(*input.sigma_M) : Json(nullptr);
    return j;
}

CoverInput cover_input_from_json(const Json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("cover input: expected an object");
    }
    CoverInput input;
    input.n = j.at("n").get<int>();
    input.d = j.at("d").get<long long>();
    input.m = j.contains("m") ? j.at("m").get<long long>() : 1;
    input.chi_M = integer_from_json(j.at("chi_M"));
    input.chi_N = integer_from_json(j.at("chi_N"));
    if (j.contains("normal_chern") && !j.at("normal_chern").is_null()) {
        for (const Json& entry : j.at("normal_chern")) {
            input.normal_chern.push_back(rational_from_json(entry));
        }
    }
    if (j.contains("sigma_M") && !j.at("sigma_M").is_null()) {
        input.sigma_M = rational_from_json(j.at("sigma_M"));
    }
    input.validate();
    return input;
}

Json to_json(const ObstructionScan& scan) {
    return Json{{"polynomial", to_json(scan.polynomial)},
                {"identically_zero", scan.identically_zero},
                {"scan_bound", scan.scan_bound},
                {"nonvanishing_roots", scan.roots}};
}

ObstructionScan obstruction_scan_from_json(const Json& j) {
    ObstructionScan scan;
    scan.polynomial = rational_polynomial_from_json(j.at("polynomial"));
    scan.identically_zero = j.at("identically_zero").get<bool>();
    scan.scan_bound = j.at("scan_bound").get<long long>();
    for (const Json& root : j.at("nonvanishing_roots")) {
        scan.roots.push_back(root.get<long long>());
    }
    return scan;
}

Json to_json(const CoverReport& report) {
    Json j{{"input", to_json(report.input)},
           {"sigma_X", to_json(report.sigma_X)},
           {"chi_X", to_json(report.chi_X)}};
    j["defect_n2"] =
        report.defect_n2.has_value() ? to_json(*report.defect_n2) : Json(nullptr);
    j["defect_m_slope"] =
        report.defect_m_slope.has_value() ? to_json(*report.defect_m_slope) : Json(nullptr);
    j["obstruction"] = to_json(report.obstruction);
    return j;
}

CoverReport cover_report_from_json(const Json& j) {
    CoverReport report;
    report.input = cover_input_from_json(j.at("input"));
    report.sigma_X = rational_from_json(j.at("sigma_X"));
    report.chi_X = rational_from_json(j.at("chi_X"));
    if (j.contains("defect_n2") && !j.at("defect_n2").is_null()) {
        report.defect_n2 = rational_from_json(j.at("defect_n2"));
    }
    if (j.contains("defect_m_slope") && !j.at("defect_m_slope").is_null()) {
        report.defect_m_slope = rational_from_json(j.at("defect_m_slope"));
    }
    report.obstruction = obstruction_scan_from_json(j.at("obstruction"));
    return report;
}

}  // namespace charnum
