// JSON serialization for every public type. Rationals are lowest-terms
// strings ("p/q", "p" when integral); partitions are arrays of integers;
// series and polynomials are arrays of rational strings indexed by degree.
#pragma once

#include "json.hpp"

#include "charnum/chern.hpp"
#include "charnum/cover.hpp"
#include "charnum/genera.hpp"
#include "charnum/partition.hpp"
#include "charnum/polynomial.hpp"
#include "charnum/rational.hpp"
#include "charnum/series.hpp"

namespace charnum {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Integer& i);  // JSON number when it fits in 64 bits, else string
Integer integer_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

// {"n": 4, "numbers": {"[4]": "5", "[3,1]": "50", ...}}
Json to_json(const ChernData& data);
ChernData chern_data_from_json(const Json& j);

// [{"partition": [2,2], "coefficient": "1"}, ...]
Json to_json(const ChernPolynomial& poly);
ChernPolynomial chern_polynomial_from_json(const Json& j);

// [{"pontrjagin_partition": [2], "coefficient": "7/45"}, ...]
Json to_json(const LPolynomial& l);
LPolynomial l_polynomial_from_json(const Json& j);

// Coefficients ascending by degree: ["-2/3", "4/3", "-2/3"]
Json to_json(const RationalPolynomial& p);
RationalPolynomial rational_polynomial_from_json(const Json& j);

Json to_json(const CoverInput& input);
CoverInput cover_input_from_json(const Json& j);

Json to_json(const ObstructionScan& scan);
ObstructionScan obstruction_scan_from_json(const Json& j);

Json to_json(const CoverReport& report);
CoverReport cover_report_from_json(const Json& j);

}  // namespace charnum
