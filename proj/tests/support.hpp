#pragma once

#include <string>
#include <vector>

#include "mockq/qlaurent.hpp"

namespace testsupport {

/// Rational-coefficient series from a dense list starting at q^lo, exact to
/// lo + coeffs.size() - 1 unless `trunc` says otherwise.
inline mockq::QSeries dense(const std::vector<long>& coeffs, long lo = 0, long trunc = -1000000) {
  std::map<mockq::Exponent, mockq::Rational> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) terms.emplace(lo + static_cast<long>(i), mockq::Rational(coeffs[i]));
  }
  const long t = trunc == -1000000 ? lo + static_cast<long>(coeffs.size()) - 1 : trunc;
  return mockq::QSeries::from_rational_terms(terms, t);
}

/// Rational coefficients q^lo..q^hi as strings, "0" for missing ones.
inline std::vector<std::string> coeff_strings(const mockq::QSeries& s, long lo, long hi) {
  std::vector<std::string> out;
  for (long e = lo; e <= hi; ++e) out.push_back(s.coeff(e).to_string());
  return out;
}

}  // namespace testsupport
