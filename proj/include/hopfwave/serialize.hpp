#pragma once

#include "hopfwave/hydrogen.hpp"
#include "hopfwave/identity_tables.hpp"
#include "hopfwave/inner_product.hpp"

#include <json.hpp>

#include <string>

namespace hopfwave {

/// Ordered JSON keeps key order deterministic, so identical invocations
/// produce byte-identical reports.
using Json = nlohmann::ordered_json;

/// Fixed-width significant-digit rendering used for every float we emit.
std::string format_sig(double x, int digits = 12);

Json term_list_json(const Polynomial& p);   // [{"exp":[a,b,c,d],"re":..,"im":..}]
Json operator_json(const WeylOperator& a);  // [{"deriv":[p,q,r,s],"coeff":[...]}]
Json table_report_json(const TableReport& rep);
Json ket_json(const Ket& k, bool normalized);
Json multiplet_json(const Multiplet& m, bool normalized);
Json sweep_report_json(const SweepReport& rep);
Json residual_report_json(const ResidualReport& rep);

std::string multiplet_csv(const Multiplet& m);
std::string multiplet_latex(const Multiplet& m, bool normalized);

std::string latex_scalar(const GaussianRational& c);
std::string latex_radical(const RadicalScalar& a);
std::string latex_polynomial(const Polynomial& p);

/// The covering-chart substitution done symbolically: each monomial becomes
/// r^{deg/2} e^{i(m phi + w psi)} cos^{a+c}(theta/2) sin^{b+d}(theta/2).
std::string latex_euler_form(const Polynomial& p);

} // namespace hopfwave
