#include "cstar/io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace cstar {

namespace {

Json scalar_to_json(const ExactScalar &c) {
  auto comps = c.components();
  return Json{{"a_re", comps[0].str()},
              {"a_im", comps[1].str()},
              {"b_re", comps[2].str()},
              {"b_im", comps[3].str()}};
}

ExactScalar scalar_from_json(const Json &j) {
  auto field = [&](const char *name) {
    return Rational::parse(j.at(name).get<std::string>());
  };
  return ExactScalar({field("a_re"), field("a_im")},
                     {field("b_re"), field("b_im")});
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

Json element_to_json(const CuntzElement &x) {
  Json terms = Json::array();
  for (const auto &[m, c] : x.terms())
    terms.push_back(Json{{"mu", m.mu}, {"nu", m.nu}, {"coeff", scalar_to_json(c)}});
  return Json{{"n", x.n()}, {"terms", std::move(terms)}};
}

CuntzElement element_from_json(const Json &j) {
  const int n = j.at("n").get<int>();
  CuntzElement x = CuntzElement::zero(n);
  for (const Json &t : j.at("terms")) {
    Word mu = t.at("mu").get<Word>();
    Word nu = t.at("nu").get<Word>();
    x = x + CuntzElement::monomial(n, std::move(mu), std::move(nu),
                                   scalar_from_json(t.at("coeff")));
  }
  return x;
}

Json matrix_to_json(const StarMatrix<CuntzElement> &m) {
  Json entries = Json::array();
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      entries.push_back(element_to_json(m.at(i, j)));
  return Json{{"dim", m.dim()}, {"entries", std::move(entries)}};
}

StarMatrix<CuntzElement> matrix_from_json(const Json &j) {
  const int dim = j.at("dim").get<int>();
  const Json &entries = j.at("entries");
  if (static_cast<int>(entries.size()) != dim * dim)
    throw ConfigError("matrix entry count does not match dim*dim");
  CuntzElement first = element_from_json(entries.at(0));
  StarMatrix<CuntzElement> m(dim, CuntzElement::zero(first.n()));
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k)
      m.at(i, k) = element_from_json(entries.at(static_cast<std::size_t>(i) * dim + k));
  return m;
}

Json complex_matrix_to_json(const ComplexMatrix &m) {
  Json entries = Json::array();
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      entries.push_back(Json::array({m.at(i, j).real(), m.at(i, j).imag()}));
  return Json{{"dim", m.dim()}, {"entries", std::move(entries)}};
}

ComplexMatrix complex_matrix_from_json(const Json &j, double tol) {
  const int dim = j.at("dim").get<int>();
  const Json &entries = j.at("entries");
  if (static_cast<int>(entries.size()) != dim * dim)
    throw ConfigError("matrix entry count does not match dim*dim");
  ComplexMatrix m(dim, tol);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) {
      const Json &pair = entries.at(static_cast<std::size_t>(i) * dim + k);
      m.at(i, k) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
  return m;
}

Json k0_to_json(const K0Class &c) {
  return Json{{"n", c.n}, {"modulus", c.modulus()}, {"residue", c.residue}};
}

Json flags_to_json(const ClassifyFlags &f) {
  return Json{{"flags", f.names()}};
}

Json matrix_unit_report_to_json(const MatrixUnitReport &r) {
  Json axioms = Json::array();
  for (const auto &a : r.axioms) {
    Json entry{{"axiom", a.axiom}, {"pass", a.pass}};
    if (!a.witness.empty())
      entry["witness"] = a.witness;
    axioms.push_back(std::move(entry));
  }
  return Json{{"axioms", std::move(axioms)}, {"pass", r.all_pass()}};
}

Json factorization_to_json(const Factorization &f) {
  Json factors = Json::array();
  for (const auto &entry : f.factors) {
    Json e{{"element", element_to_json(entry.element)},
           {"dye_form", entry.dye_form}};
    if (entry.dye_form) {
      e["i"] = entry.i;
      e["j"] = entry.j;
      if (entry.omega)
        e["omega"] = element_to_json(*entry.omega);
    }
    factors.push_back(std::move(e));
  }
  return Json{{"u", element_to_json(f.u)}, {"factors", std::move(factors)}};
}

Factorization factorization_from_json(const Json &j) {
  Factorization f;
  f.u = element_from_json(j.at("u"));
  for (const Json &e : j.at("factors")) {
    FactorEntry entry;
    entry.element = element_from_json(e.at("element"));
    entry.dye_form = e.value("dye_form", false);
    entry.i = e.value("i", 0);
    entry.j = e.value("j", 0);
    if (e.contains("omega"))
      entry.omega = element_from_json(e.at("omega"));
    f.factors.push_back(std::move(entry));
  }
  return f;
}

Json factor_report_to_json(const FactorizationReport &r) {
  Json claims = Json::array();
  for (const auto &c : r.claims) {
    Json entry{{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty())
      entry["witness"] = c.witness;
    claims.push_back(std::move(entry));
  }
  return Json{{"claims", std::move(claims)}, {"pass", r.all_pass()}};
}

std::string pretty_matrix(const StarMatrix<CuntzElement> &m) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      cells.push_back(m.at(i, j).str());
      width = std::max(width, cells.back().size());
    }
  std::ostringstream out;
  for (int i = 0; i < m.dim(); ++i) {
    out << "[ ";
    for (int j = 0; j < m.dim(); ++j) {
      const std::string &cell =
          cells[static_cast<std::size_t>(i) * m.dim() + j];
      out << cell << std::string(width - cell.size(), ' ');
      out << (j + 1 < m.dim() ? "  " : " ");
    }
    out << "]\n";
  }
  return out.str();
}

std::string pretty_complex_matrix(const ComplexMatrix &m) {
  std::ostringstream out;
  for (int i = 0; i < m.dim(); ++i) {
    out << "[ ";
    for (int j = 0; j < m.dim(); ++j) {
      out << format_double(m.at(i, j).real()) << "+"
          << format_double(m.at(i, j).imag()) << "i";
      out << (j + 1 < m.dim() ? "  " : " ");
    }
    out << "]\n";
  }
  return out.str();
}

} // namespace cstar
