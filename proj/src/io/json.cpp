#include "psdrank/io/json.hpp"

#include <stdexcept>

namespace psdrank::json_io {

namespace {

Rational rational_from(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw std::invalid_argument("expected a rational string or integer, got " + v.dump());
}

double double_from(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return to_double(parse_rational(v.get<std::string>()));
  throw std::invalid_argument("expected a number, got " + v.dump());
}

void check_schema(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  if (j.contains("schema") && j.at("schema") != kSchemaVersion)
    throw std::invalid_argument("unsupported schema version " + j.at("schema").dump());
}

json indices_1based(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (auto i : v) a.push_back(i + 1);
  return a;
}

json flat(const ExactMatrix& m) {
  json a = json::array();
  for (const auto& x : m.data()) a.push_back(to_string(x));
  return a;
}

ExactMatrix square_from_flat(const json& a, std::size_t q) {
  if (!a.is_array() || a.size() != q * q)
    throw std::invalid_argument("factor must be a flat array of " + std::to_string(q * q) + " entries");
  ExactMatrix m(q, q);
  for (std::size_t i = 0; i < q * q; ++i) m(i / q, i % q) = rational_from(a[i]);
  return m;
}

Eigen::MatrixXd float_square_from_flat(const json& a, std::size_t q) {
  if (!a.is_array() || a.size() != q * q)
    throw std::invalid_argument("factor must be a flat array of " + std::to_string(q * q) + " entries");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(q));
  for (std::size_t i = 0; i < q * q; ++i)
    m(static_cast<Eigen::Index>(i / q), static_cast<Eigen::Index>(i % q)) = double_from(a[i]);
  return m;
}

json subspace_to_json(const Subspace& s) {
  json rows = json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    json r = json::array();
    for (const auto& x : s.basis().row(i)) r.push_back(to_string(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

Subspace subspace_from_json(const json& rows, std::size_t q) {
  if (!rows.is_array()) throw std::invalid_argument("subspace must be an array of basis rows");
  std::vector<std::vector<Rational>> vecs;
  for (const auto& r : rows) {
    if (!r.is_array() || r.size() != q)
      throw std::invalid_argument("basis row must have ambient_dim = " + std::to_string(q) + " entries");
    std::vector<Rational> v;
    for (const auto& x : r) v.push_back(rational_from(x));
    vecs.push_back(std::move(v));
  }
  return Subspace::span(q, vecs);
}

}  // namespace

json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (const auto& x : m.row(i)) r.push_back(to_string(x));
    rows.push_back(std::move(r));
  }
  return {{"schema", kSchemaVersion}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

ExactMatrix matrix_from_json(const json& j) {
  check_schema(j);
  const auto m = j.at("rows").get<std::size_t>();
  const auto n = j.at("cols").get<std::size_t>();
  const auto& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != m) throw std::invalid_argument("matrix: wrong number of rows");
  ExactMatrix a(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw std::invalid_argument("matrix: wrong row length");
    for (std::size_t k = 0; k < n; ++k) a(i, k) = rational_from(rows[i][k]);
  }
  return a;
}

json embedding_to_json(const SubspaceEmbedding& e) {
  json u = json::array();
  json v = json::array();
  for (const auto& s : e.U) u.push_back(subspace_to_json(s));
  for (const auto& s : e.V) v.push_back(subspace_to_json(s));
  return {{"schema", kSchemaVersion}, {"ambient_dim", e.ambient_dim}, {"U", u}, {"V", v}};
}

SubspaceEmbedding embedding_from_json(const json& j) {
  check_schema(j);
  SubspaceEmbedding e;
  e.ambient_dim = j.at("ambient_dim").get<std::size_t>();
  for (const auto& s : j.at("U")) e.U.push_back(subspace_from_json(s, e.ambient_dim));
  for (const auto& s : j.at("V")) e.V.push_back(subspace_from_json(s, e.ambient_dim));
  return e;
}

json factorization_to_json(const PsdFactorization& f) {
  json a = json::array();
  json b = json::array();
  for (const auto& x : f.A) a.push_back(flat(x));
  for (const auto& x : f.B) b.push_back(flat(x));
  return {{"schema", kSchemaVersion}, {"order", f.order}, {"A", a}, {"B", b}};
}

PsdFactorization factorization_from_json(const json& j) {
  check_schema(j);
  PsdFactorization f;
  f.order = j.at("order").get<std::size_t>();
  for (const auto& x : j.at("A")) f.A.push_back(square_from_flat(x, f.order));
  for (const auto& x : j.at("B")) f.B.push_back(square_from_flat(x, f.order));
  return f;
}

FloatFactorization float_factorization_from_json(const json& j) {
  check_schema(j);
  FloatFactorization f;
  f.order = j.at("order").get<std::size_t>();
  for (const auto& x : j.at("A")) f.A.push_back(float_square_from_flat(x, f.order));
  for (const auto& x : j.at("B")) f.B.push_back(float_square_from_flat(x, f.order));
  return f;
}

json float_factorization_to_json(const FloatFactorization& f) {
  auto dump = [](const Eigen::MatrixXd& m) {
    json a = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index k = 0; k < m.cols(); ++k) a.push_back(m(i, k));
    return a;
  };
  json a = json::array();
  json b = json::array();
  for (const auto& x : f.A) a.push_back(dump(x));
  for (const auto& x : f.B) b.push_back(dump(x));
  return {{"schema", kSchemaVersion}, {"order", f.order}, {"A", a}, {"B", b}};
}

json sign_assignment_to_json(const SignAssignment& s) {
  json entries = json::array();
  for (std::size_t i = 0; i < s.positions.size(); ++i)
    entries.push_back({{"row", s.positions[i].first + 1},
                       {"col", s.positions[i].second + 1},
                       {"sign", i < s.negative.size() && s.negative[i] ? "-" : "+"}});
  return entries;
}

json sqrt_rank_to_json(const SqrtRankResult& r) {
  json hist = json::object();
  for (const auto& [rk, count] : r.rank_histogram) hist[std::to_string(rk)] = count;
  json y = json::array();
  for (std::size_t i = 0; i < r.witness_matrix.rows(); ++i) {
    json row = json::array();
    for (const auto& x : r.witness_matrix.row(i)) row.push_back(x.str());
    y.push_back(std::move(row));
  }
  return {{"schema", kSchemaVersion},     {"min_rank", r.min_rank},
          {"assignments_checked", r.assignments_checked},
          {"rank_histogram", hist},       {"field_generators", r.generators},
          {"witness", sign_assignment_to_json(r.witness)},
          {"witness_matrix", y}};
}

json certificate_to_json(const Order3Certificate& c) {
  auto checks = [](const std::vector<LineCheck>& v) {
    json a = json::array();
    for (const auto& lc : v) {
      json e = {{"index", lc.index + 1}, {"has_nonzero", lc.has_nonzero}, {"forced_rank_one", lc.forced_rank_one}};
      if (lc.distinct_zero_pair)
        e["distinct_zero_pair"] = {lc.distinct_zero_pair->first + 1, lc.distinct_zero_pair->second + 1};
      else
        e["distinct_zero_pair"] = nullptr;
      a.push_back(std::move(e));
    }
    return a;
  };
  json j = {{"schema", kSchemaVersion},
            {"claim", c.claim},
            {"conclusive", c.conclusive},
            {"bound", c.conclusive ? json(c.bound) : json(nullptr)},
            {"reason", c.reason},
            {"scope_rows", indices_1based(c.scope_rows)},
            {"scope_cols", indices_1based(c.scope_cols)},
            {"rows", indices_1based(c.rows)},
            {"cols", indices_1based(c.cols)},
            {"row_checks", checks(c.row_checks)},
            {"col_checks", checks(c.col_checks)},
            {"column_distinctness", "support-level: distinct zero patterns"}};
  if (c.enumeration) {
    j["assignments_checked"] = c.enumeration->assignments_checked;
    j["min_rank"] = c.enumeration->min_rank;
    j["witness"] = sign_assignment_to_json(c.enumeration->witness);
    j["enumeration"] = sqrt_rank_to_json(*c.enumeration);
  } else {
    j["assignments_checked"] = 0;
    j["min_rank"] = nullptr;
    j["witness"] = nullptr;
  }
  return j;
}

json biclique_cover_to_json(const BicliqueCover& c) {
  json a = json::array();
  for (const auto& b : c.bicliques) {
    json l = json::array();
    json r = json::array();
    for (auto i = b.left.find_first(); i != Bitset::npos; i = b.left.find_next(i)) l.push_back(i + 1);
    for (auto i = b.right.find_first(); i != Bitset::npos; i = b.right.find_next(i)) r.push_back(i + 1);
    a.push_back({{"left", l}, {"right", r}});
  }
  return a;
}

json cover_to_json(const CoverResult& r) {
  return {{"schema", kSchemaVersion},
          {"exact", r.exact},
          {"value", r.exact ? json(r.upper) : json(nullptr)},
          {"lower", r.lower},
          {"upper", r.upper},
          {"nodes", r.nodes},
          {"candidate_rectangles", r.candidate_rectangles},
          {"cover", biclique_cover_to_json(r.cover)}};
}

json realize_to_json(const RealizeResult& r) {
  return {{"schema", kSchemaVersion}, {"success", r.success},   {"tries", r.tries},
          {"sample_bound", r.sample_bound}, {"xi", r.xi}, {"eta", r.eta},
          {"T", r.success ? matrix_to_json(r.T) : json(nullptr)}};
}

json factor_rank_report_to_json(const FactorRankReport& r) {
  return {{"schema", kSchemaVersion},
          {"a_ranks", r.a_ranks},
          {"b_ranks", r.b_ranks},
          {"a_bound", r.a_bound},
          {"b_bound", r.b_bound},
          {"within_bounds", r.within_bounds},
          {"max_residual", r.max_residual},
          {"min_eigenvalue", r.min_eigenvalue},
          {"factorization", float_factorization_to_json(r.factorization)}};
}

json appendix_check_to_json(const AppendixCheck& r) {
  return {{"schema", kSchemaVersion}, {"n", r.n}, {"N", r.N}, {"l", r.l}, {"clique_size", r.clique_size},
          {"pairs_checked", r.pairs_checked}, {"failures", r.failures}, {"passed", r.passed}};
}

}  // namespace psdrank::json_io
