#pragma once

#include <string>

#include "genera/qseries.hpp"
#include "genera/quasipoly.hpp"
#include "genera/sympoly.hpp"

namespace genera {

enum class OutputFormat { Text, Json, Latex };

/// Text forms, matching the table style of the genus listings: terms in
/// reverse-lexicographic partition order with the common denominator pulled
/// out, e.g. "(7p2 - p1^2)/45"; a single term prints as "-1/24 p1".
std::string to_text(const SymPoly& f);
std::string to_text(const QuasiPoly& f);
std::string to_text(const QSeries& f);  // "1 - 24q - 72q^2"

/// LaTeX forms, e.g. "\frac{1}{967680}(-16p_3+44p_1p_2-31p_1^3)".
std::string to_latex(const SymPoly& f);
std::string to_latex(const QuasiPoly& f);
std::string to_latex(const QSeries& f);

/// JSON wire forms:
///   QSeries:  { "truncation": N, "coeffs": [[n, "num/den"], ...] }
///   SymPoly:  { "weight": k, "basis": "p"|"s", "terms": [[[m_1..m_k], "num/den"], ...] }
///   QuasiPoly:{ "weight": 2k, "basis": "G"|"E", "terms": [...] } (same term shape)
std::string to_json(const QSeries& f);
std::string to_json(const SymPoly& f);
std::string to_json(const QuasiPoly& f);

}  // namespace genera
