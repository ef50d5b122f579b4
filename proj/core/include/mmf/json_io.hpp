#pragma once

#include "mmf/compose.hpp"
#include "mmf/monodromy.hpp"
#include "mmf/verify.hpp"

#include <json.hpp>

namespace mmf {

using OJson = nlohmann::ordered_json;

OJson rat_json(const Rat& r);          // {num, den}
OJson algnum_json(const AlgNum& a);    // coefficient vector of the representative
OJson label_json(const ContactTree& t, const std::vector<RootGroup>& roots); // {modulus-coeffs, poly-coeffs}
OJson tree_json(const ContactTree& t);
OJson trees_json(const std::vector<ContactTree>& ts);
std::string tree_dot(const ContactTree& t);
OJson motclass_json(const MotClass& C);
OJson zeta_report_json(const ZetaCompareReport& r);
std::string zeta_report_csv(const ZetaCompareReport& r);
OJson fiber_report_json(const FiberCompareReport& r);
OJson zeta_factors_json(const ZetaFactors& z);

} // namespace mmf
