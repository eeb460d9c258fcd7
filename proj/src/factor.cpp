#include "cstar/factor.hpp"

#include <stdexcept>

#include "cstar/iso.hpp"

namespace cstar {

InvolutionFactor dye_involution(int i, int j, const CuntzElement &omega) {
  if (i == j || i < 1 || j < 1)
    throw IndexOutOfRange("dye_involution requires distinct positive indices");
  if (!omega.classify().unitary)
    throw NotUnitary("dye_involution requires a unitary omega");

  const int n = omega.n();
  int level = 1;
  long dim = n;
  while (dim < i || dim < j) {
    ++level;
    dim *= n;
  }

  InvolutionFactor f;
  f.i = i;
  f.j = j;
  f.level = level;
  f.omega = omega;
  const StarMatrix<CuntzElement> p = dye(i, j, omega, static_cast<int>(dim));
  f.element = CuntzElement::unit(n) -
              ExactScalar(2) * eta_level(p, level);
  if (!f.element.classify().involution)
    throw std::logic_error("dye involution failed the involution check");
  return f;
}

bool diag_identity_check(const CuntzElement &alpha, DiagVariant variant) {
  if (!alpha.classify().unitary)
    throw NotUnitary("diag_identity_check requires a unitary alpha");
  const int n = alpha.n();
  const CuntzElement one = CuntzElement::unit(n);
  const StarMatrix<CuntzElement> id =
      StarMatrix<CuntzElement>::identity(3, one);

  const int j = (variant == DiagVariant::OneTwo) ? 2 : 3;
  const StarMatrix<CuntzElement> lhs =
      (id - ExactScalar(2) * dye(1, j, -alpha, 3)) *
      (id - ExactScalar(2) * dye(1, j, -one, 3));

  StarMatrix<CuntzElement> rhs(3, CuntzElement::zero(n));
  rhs.at(0, 0) = alpha;
  if (variant == DiagVariant::OneTwo) {
    rhs.at(1, 1) = alpha.adjoint();
    rhs.at(2, 2) = one;
  } else {
    rhs.at(1, 1) = one;
    rhs.at(2, 2) = alpha.adjoint();
  }
  return ring_equal(lhs, rhs);
}

Factorization assemble_unitary_factorization(const CuntzElement &alpha,
                                             const CuntzElement &gamma,
                                             const CuntzElement &z1,
                                             const CuntzElement &z2,
                                             const CuntzElement &z3) {
  if (!alpha.classify().unitary)
    throw NotUnitary("alpha is not unitary");
  if (!gamma.classify().unitary)
    throw NotUnitary("gamma is not unitary");
  for (const auto *z : {&z1, &z2, &z3})
    if (!z->classify().involution)
      throw NotAnInvolution("z factors must be self-adjoint unitaries");

  const int n = alpha.n();
  const CuntzElement minus_one = -CuntzElement::unit(n);

  auto bracket = [&](int i, int j, const CuntzElement &omega) {
    InvolutionFactor f = dye_involution(i, j, omega);
    FactorEntry e;
    e.element = f.element;
    e.dye_form = true;
    e.i = i;
    e.j = j;
    e.omega = omega;
    return e;
  };

  Factorization out;
  out.factors.push_back({z1, false, 0, 0, std::nullopt});
  out.factors.push_back(bracket(1, 2, -alpha));
  out.factors.push_back(bracket(1, 2, minus_one));
  out.factors.push_back(bracket(1, 3, -alpha));
  out.factors.push_back(bracket(1, 3, minus_one));
  out.factors.push_back(bracket(1, 2, -gamma));
  out.factors.push_back(bracket(1, 2, minus_one));
  out.factors.push_back(bracket(1, 3, -gamma));
  out.factors.push_back(bracket(1, 3, minus_one));
  out.factors.push_back({z2, false, 0, 0, std::nullopt});
  out.factors.push_back({z3, false, 0, 0, std::nullopt});

  CuntzElement product = CuntzElement::unit(n);
  for (const FactorEntry &f : out.factors)
    product = product * f.element;
  out.u = product;
  if (!out.u.classify().unitary)
    throw std::logic_error("assembled product is not unitary");
  return out;
}

FactorizationReport verify_factorization(
    const CuntzElement &u, const std::vector<FactorEntry> &factors) {
  FactorizationReport report;

  for (std::size_t k = 0; k < factors.size(); ++k) {
    FactorClaim claim;
    claim.name = "factor_" + std::to_string(k + 1) + "_involution";
    claim.pass = factors[k].element.classify().involution;
    if (!claim.pass)
      claim.witness = factors[k].element.str();
    report.claims.push_back(std::move(claim));
  }

  {
    FactorClaim claim;
    claim.name = "product_equals_u";
    CuntzElement product = CuntzElement::unit(u.n());
    bool mismatch = false;
    for (const FactorEntry &f : factors) {
      if (f.element.n() != u.n()) {
        mismatch = true;
        break;
      }
      product = product * f.element;
    }
    claim.pass = !mismatch && equals(product, u);
    if (mismatch)
      claim.witness = "alphabet mismatch between u and a factor";
    report.claims.push_back(std::move(claim));
  }

  const K0Class unit_class = k0_class(CuntzElement::unit(u.n()));
  bool all_dye_unit_class = true;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (!factors[k].dye_form)
      continue;
    FactorClaim claim;
    claim.name = "factor_" + std::to_string(k + 1) + "_type_one";
    try {
      claim.pass = involution_type(factors[k].element) == unit_class;
    } catch (const Error &err) {
      claim.pass = false;
      claim.witness = err.code();
    }
    all_dye_unit_class = all_dye_unit_class && claim.pass;
    report.claims.push_back(std::move(claim));
  }

  {
    // Same type = conjugate; the unit class is the type of -1.
    FactorClaim claim;
    claim.name = "dye_factors_conjugate_to_minus_one";
    claim.pass = all_dye_unit_class;
    report.claims.push_back(std::move(claim));
  }

  return report;
}

} // namespace cstar
