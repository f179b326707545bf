#pragma once

#include <json.hpp>

#include "psdrank/cutpoly/cutpoly.hpp"
#include "psdrank/embed/embedding.hpp"
#include "psdrank/pattern/rectangle_cover.hpp"
#include "psdrank/psd/barvinok.hpp"
#include "psdrank/psd/order3.hpp"
#include "psdrank/psd/realize.hpp"

// JSON documents carry "schema": 1. Rationals are strings "p" or "p/q";
// readers also accept JSON integers, and the float readers accept numbers.
namespace psdrank::json_io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const json& j);

json embedding_to_json(const SubspaceEmbedding& e);
SubspaceEmbedding embedding_from_json(const json& j);

// {"schema":1, "order":q, "A":[[q*q entries row-major], ...], "B":[...]}
json factorization_to_json(const PsdFactorization& f);
PsdFactorization factorization_from_json(const json& j);
FloatFactorization float_factorization_from_json(const json& j);
json float_factorization_to_json(const FloatFactorization& f);

json sign_assignment_to_json(const SignAssignment& s);
json sqrt_rank_to_json(const SqrtRankResult& r);
// {claim, bound, rows, cols, assignments_checked, min_rank, witness, ...};
// row and column indices are 1-based.
json certificate_to_json(const Order3Certificate& c);
json cover_to_json(const CoverResult& r);
json biclique_cover_to_json(const BicliqueCover& c);
json realize_to_json(const RealizeResult& r);
json factor_rank_report_to_json(const FactorRankReport& r);
json appendix_check_to_json(const AppendixCheck& r);

}  // namespace psdrank::json_io
