#pragma once

#include <json.hpp>

#include "liealc/affine_weyl.hpp"
#include "liealc/center_action.hpp"
#include "liealc/prequant.hpp"

namespace liealc {

// Wire format: rationals are "a/b" strings ("1" when the denominator is 1);
// vectors are arrays of such strings. Key order is fixed so output is
// byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const RationalVector& v);
Json to_json(const std::vector<Rational>& v);
Json to_json(const Matrix& m);

Rational rational_from_json(const Json& j);
RationalVector vector_from_json(const Json& j);

Json root_system_json(const RootSystem& rs);
Json alcove_json(const Alcove& alc);
Json fold_json(const FoldResult& r);
Json center_element_json(const CenterAction& center, CenterElement z);
Json fixed_locus_json(const Alcove& alc, const FixedLocus& locus);
Json report_json(const PrequantReport& r);

}  // namespace liealc
