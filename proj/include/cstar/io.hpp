#pragma once

#include <json.hpp>

#include "cstar/factor.hpp"
#include "cstar/numeric.hpp"

namespace cstar {

using Json = nlohmann::json;

// CuntzElement <-> {"n": .., "terms": [{"mu": [..], "nu": [..],
//   "coeff": {"a_re": "p/q", "a_im": .., "b_re": .., "b_im": ..}}]}
Json element_to_json(const CuntzElement &x);
CuntzElement element_from_json(const Json &j);

// StarMatrix over elements <-> {"dim": m, "entries": [element, ...]} row-major.
Json matrix_to_json(const StarMatrix<CuntzElement> &m);
StarMatrix<CuntzElement> matrix_from_json(const Json &j);

// ComplexMatrix <-> {"dim": m, "entries": [[re, im], ...]} row-major.
Json complex_matrix_to_json(const ComplexMatrix &m);
ComplexMatrix complex_matrix_from_json(const Json &j, double tol = 1e-12);

Json k0_to_json(const K0Class &c);
Json flags_to_json(const ClassifyFlags &f);
Json matrix_unit_report_to_json(const MatrixUnitReport &r);

Json factorization_to_json(const Factorization &f);
// Reads {"u": element, "factors": [{"element": .., "dye_form": bool, ...}]}.
Factorization factorization_from_json(const Json &j);
Json factor_report_to_json(const FactorizationReport &r);

// Human-readable grid of entry strings for --pretty output.
std::string pretty_matrix(const StarMatrix<CuntzElement> &m);
std::string pretty_complex_matrix(const ComplexMatrix &m);

} // namespace cstar
